#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "coxlen/deletion_set.hpp"
#include "coxlen/search_limits.hpp"
#include "coxlen/word.hpp"

namespace coxlen {

/**
 * Reflection length of the element represented by w: the minimal number of
 * positions whose deletion from an S-reduced word for it yields the
 * identity.  Returns the length together with the colex-least minimal
 * deletion set, whose positions index reduce(w).word.  Universal systems use
 * an interval dynamic program; everything else runs the deletion-subset
 * search against the geometric representation, sizes ascending from the
 * parity floor (reflection length and word length agree mod 2).
 */
std::pair<int, DeletionSet> reflection_length(const Word& w,
                                              const CoxeterSystem& sys,
                                              const SearchLimits& limits = {},
                                              SearchStats* stats = nullptr);

// Same contract as reflection_length, but every candidate subset is tested
// by nil/braid rewriting alone, never through the geometric representation.
// Much slower; exists as an independent cross-check engine.
std::pair<int, DeletionSet> reflection_length_rewriting(
    const Word& w, const CoxeterSystem& sys, const SearchLimits& limits = {},
    SearchStats* stats = nullptr);

// All deletion sets of size q for the S-reduced word, in colex order.
// Meaningful when q is the reflection length of the word's element (then
// these are exactly the minimal witnesses).
std::vector<DeletionSet> all_deletion_sets(const Word& reduced,
                                           const CoxeterSystem& sys, int q,
                                           const SearchLimits& limits = {},
                                           SearchStats* stats = nullptr);

struct ReflectionFactorization {
  DeletionSet positions;  // ascending
  // reflections[j] = u_0 ... u_{i_j - 1} u_{i_j} u_{i_j - 1} ... u_0 for the
  // j-th deletion position i_j (ascending order).  The element of the source
  // word equals the product taken in DESCENDING position order.
  std::vector<Word> reflections;
};

// Expands a deletion set into the corresponding odd-palindrome reflection
// factorization.  Throws NotADeletionSetError if deleting d from the word
// does not give the identity.
ReflectionFactorization reflection_factorization(
    const Word& reduced, const DeletionSet& d, const CoxeterSystem& sys,
    const SearchLimits& limits = {}, SearchStats* stats = nullptr);

struct AfterDyerReport {
  std::size_t checked = 0;
  bool exhaustive = false;
  // Proper subsets N of d for which deleting N did not leave reflection
  // length |d| - |N|.
  std::vector<DeletionSet> failures;
  bool ok() const { return failures.empty(); }
};

// Checks that every proper subset N of the deletion set d satisfies
// l_R(word with N deleted) = |d| - |N|.  Exhaustive for |d| up to
// limits.after_dyer_max, deterministic sampling (64 subsets) beyond that.
AfterDyerReport verify_after_dyer(const Word& reduced, const DeletionSet& d,
                                  const CoxeterSystem& sys,
                                  const SearchLimits& limits = {},
                                  SearchStats* stats = nullptr);

// Deletion-set comparison lower bound: l_Rn(s) - 2 * b(s, d), where s is the
// reduced word of w, l_Rn its reflection length in the universal system and
// b the minimal number of braid moves transforming s-with-d-deleted to the
// empty word.  Throws NotADeletionSetError if d is not a deletion set of s.
long long lower_bound_from_deletion_set(const Word& w, const CoxeterSystem& sys,
                               const DeletionSet& d,
                               const SearchLimits& limits = {},
                               SearchStats* stats = nullptr);

struct EqualityReport {
  long long reflection_len = 0;   // in the given system
  long long universal_len = 0;    // of the word read in the universal system
  bool equal = false;
};

// Compares the two reflection lengths for the word as written.
EqualityReport equality_criterion(const Word& w, const CoxeterSystem& sys,
                                  const SearchLimits& limits = {},
                                  SearchStats* stats = nullptr);

struct ConjectureScan {
  long long reflection_len = 0;
  long long universal_len = 0;
  // Positions whose removal drops both lengths by exactly 1.
  std::vector<std::size_t> witnesses;
  bool verdict = false;  // witnesses nonempty
};

// Scans each letter of an S-reduced word for the single-letter descent
// predicted by the equality conjecture.
ConjectureScan conjecture_scan(const Word& reduced, const CoxeterSystem& sys,
                               const SearchLimits& limits = {},
                               SearchStats* stats = nullptr);

}  // namespace coxlen
