#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "coxlen/coxeter_system.hpp"
#include "coxlen/search_limits.hpp"
#include "coxlen/word.hpp"

namespace coxlen::detail {

// Shared candidate budget for one reflection-length query (all sizes q).
struct BudgetCounter {
  std::uint64_t used = 0;
  std::uint64_t cap = UINT64_MAX;
  void spend(std::uint64_t n);
};

// Colex-least deletion set of size q for an S-reduced word of <= 64 letters,
// as a position bitmask; nullopt when no size-q set exists.  Candidates are
// tested against the geometric representation (exact scalars when the labels
// allow, floating point with a rewriting fallback otherwise).  Two engines:
// a colex-ordered recursive scan sharing partial matrix products, and a
// meet-in-the-middle split used for large C(p, q) on exact-scalar systems.
std::optional<std::uint64_t> find_deletion_mask(const Word& reduced,
                                                const CoxeterSystem& sys,
                                                int q,
                                                const SearchLimits& limits,
                                                BudgetCounter& budget,
                                                SearchStats* stats);

// Every size-q deletion set, in colex order.
std::vector<std::uint64_t> all_deletion_masks(const Word& reduced,
                                              const CoxeterSystem& sys, int q,
                                              const SearchLimits& limits,
                                              BudgetCounter& budget,
                                              SearchStats* stats);

// Kept product equals the identity after deleting the masked positions?
// Definitive on exact-scalar systems; floating systems fall back to the
// rewriting engine when the matrix comparison is inconclusive.
bool mask_deletes_to_identity(const Word& reduced, const CoxeterSystem& sys,
                              std::uint64_t mask, const SearchLimits& limits,
                              SearchStats* stats);

}  // namespace coxlen::detail
