#pragma once

#include <cstddef>
#include <vector>

namespace coxlen {

// Ascending 0-based positions whose deletion from an S-reduced word yields
// the identity.  Sets of equal size are ordered colexicographically, which
// coincides with numeric order of their bitmasks.
using DeletionSet = std::vector<std::size_t>;

}  // namespace coxlen
