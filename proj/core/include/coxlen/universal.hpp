#pragma once

#include <utility>

#include "coxlen/deletion_set.hpp"
#include "coxlen/word.hpp"

namespace coxlen {

// Reflection length in the universal system (all labels infinite), where a
// word represents the identity iff it nil-cancels to nothing.  Computed by
// an interval dynamic program in O(p^3): a kept first letter must cancel
// against a later equal letter with both enclosed segments cancelling
// independently (nil cancellation is non-crossing).  Works on any word; the
// value is invariant under free cancellation.
int universal_reflection_length(const Word& w);

// Same value plus the colex-least minimal deletion set.  The input must be
// freely reduced (positions index it directly) and at most 128 letters.
std::pair<int, DeletionSet> universal_reflection_length_witness(const Word& w);

}  // namespace coxlen
