#include "coxlen/reflength.hpp"

#include <algorithm>

#include "coxlen/deletion_search.hpp"
#include "coxlen/errors.hpp"
#include "coxlen/rewrite.hpp"
#include "coxlen/universal.hpp"

namespace coxlen {
namespace {

DeletionSet mask_to_set(std::uint64_t mask, std::size_t p) {
  DeletionSet d;
  for (std::size_t i = 0; i < p; ++i)
    if ((mask >> i) & 1) d.push_back(i);
  return d;
}

std::uint64_t set_to_mask(const DeletionSet& d, std::size_t p) {
  std::uint64_t mask = 0;
  std::size_t prev = SIZE_MAX;
  for (std::size_t pos : d) {
    if (pos >= p)
      throw ParseError("deletion position " + std::to_string(pos) +
                       " out of range for a word of length " +
                       std::to_string(p));
    if (pos >= 64)
      throw SubsetBudgetExceeded(
          "deletion positions beyond 63 are not supported");
    if (prev != SIZE_MAX && pos <= prev)
      throw ParseError("deletion positions must be strictly ascending");
    prev = pos;
    mask |= std::uint64_t(1) << pos;
  }
  return mask;
}

Word delete_positions(const Word& w, std::uint64_t mask) {
  RawWord kept;
  kept.reserve(w.size());
  for (std::size_t i = 0; i < w.size(); ++i)
    if (i >= 64 || !((mask >> i) & 1)) kept.push_back(char(w.at(i)));
  return Word(std::move(kept));
}

Word delete_one(const Word& w, std::size_t pos) {
  RawWord kept = w.raw();
  kept.erase(pos, 1);
  return Word(std::move(kept));
}

}  // namespace

std::pair<int, DeletionSet> reflection_length(const Word& w,
                                              const CoxeterSystem& sys,
                                              const SearchLimits& limits,
                                              SearchStats* stats) {
  validate_word(w, sys);
  if (sys.is_universal()) {
    Word red(nil_reduce(w.raw()));
    return universal_reflection_length_witness(red);
  }
  Word red = reduce(w, sys, limits, stats).word;
  std::size_t p = red.size();
  if (p == 0) return {0, {}};
  detail::BudgetCounter budget;
  auto account = [&] {
    if (stats) stats->subsets_tested += budget.used;
  };
  try {
    for (int q = (p % 2 == 0) ? 2 : 1; std::size_t(q) <= p; q += 2) {
      auto mask = detail::find_deletion_mask(red, sys, q, limits, budget, stats);
      if (mask) {
        account();
        return {q, mask_to_set(*mask, p)};
      }
    }
  } catch (...) {
    account();
    throw;
  }
  throw std::logic_error("deleting every letter must yield the identity");
}

std::pair<int, DeletionSet> reflection_length_rewriting(
    const Word& w, const CoxeterSystem& sys, const SearchLimits& limits,
    SearchStats* stats) {
  validate_word(w, sys);
  Word red = sys.is_universal() ? Word(nil_reduce(w.raw()))
                                : reduce(w, sys, limits, stats).word;
  std::size_t p = red.size();
  if (p == 0) return {0, {}};
  if (p > 64)
    throw SubsetBudgetExceeded(
        "rewriting-based subset search supports up to 64 letters");
  std::uint64_t tested = 0;
  auto spend = [&] {
    if (++tested > limits.max_subsets) {
      if (stats) stats->subsets_tested += tested;
      throw SubsetBudgetExceeded("deletion-subset budget of " +
                                 std::to_string(limits.max_subsets) +
                                 " candidates exhausted");
    }
  };
  for (int q = (p % 2 == 0) ? 2 : 1; std::size_t(q) <= p; q += 2) {
    std::uint64_t mask = (std::uint64_t(1) << q) - 1;
    std::uint64_t last = mask << (p - std::size_t(q));
    while (true) {
      spend();
      bool hit;
      if (sys.is_universal()) {
        hit = nil_reduce(delete_positions(red, mask).raw()).empty();
      } else {
        hit = is_identity(delete_positions(red, mask), sys, limits, stats);
      }
      if (hit) {
        if (stats) stats->subsets_tested += tested;
        return {q, mask_to_set(mask, p)};
      }
      if (mask == last) break;
      std::uint64_t c = mask & -mask, r = mask + c;
      mask = (((r ^ mask) >> 2) / c) | r;
    }
  }
  throw std::logic_error("deleting every letter must yield the identity");
}

std::vector<DeletionSet> all_deletion_sets(const Word& reduced,
                                           const CoxeterSystem& sys, int q,
                                           const SearchLimits& limits,
                                           SearchStats* stats) {
  validate_word(reduced, sys);
  if (q < 0) throw ParseError("deletion-set size must be >= 0");
  if (!sys.is_universal() && !is_reduced(reduced, sys, limits, stats))
    throw ParseError("all_deletion_sets needs an S-reduced word");
  std::size_t p = reduced.size();
  detail::BudgetCounter budget;
  std::vector<std::uint64_t> masks;
  if (sys.is_universal()) {
    // Enumerate subsets in colex order and keep those that nil-cancel.
    if (p > 64)
      throw SubsetBudgetExceeded(
          "universal deletion-set enumeration supports up to 64 letters");
    budget.cap = limits.max_subsets;
    // colex successor loop over fixed-popcount masks
    if (std::size_t(q) <= p) {
      std::uint64_t mask = q == 0 ? 0 : (std::uint64_t(1) << q) - 1;
      std::uint64_t last =
          q == 0 ? 0 : ((std::uint64_t(1) << q) - 1) << (p - std::size_t(q));
      while (true) {
        budget.spend(1);
        if (nil_reduce(delete_positions(reduced, mask).raw()).empty())
          masks.push_back(mask);
        if (mask == last) break;
        std::uint64_t c = mask & -mask, r = mask + c;
        mask = (((r ^ mask) >> 2) / c) | r;
      }
    }
  } else {
    masks = detail::all_deletion_masks(reduced, sys, q, limits, budget, stats);
  }
  if (stats) stats->subsets_tested += budget.used;
  std::vector<DeletionSet> out;
  out.reserve(masks.size());
  for (std::uint64_t m : masks) out.push_back(mask_to_set(m, p));
  return out;
}

ReflectionFactorization reflection_factorization(const Word& reduced,
                                                 const DeletionSet& d,
                                                 const CoxeterSystem& sys,
                                                 const SearchLimits& limits,
                                                 SearchStats* stats) {
  validate_word(reduced, sys);
  std::size_t p = reduced.size();
  std::uint64_t mask = set_to_mask(d, p);
  bool ok = sys.is_universal()
                ? nil_reduce(delete_positions(reduced, mask).raw()).empty()
                : detail::mask_deletes_to_identity(reduced, sys, mask, limits,
                                                   stats);
  if (!ok)
    throw NotADeletionSetError(
        "deleting the given positions does not produce the identity");
  ReflectionFactorization fact;
  fact.positions = d;
  for (std::size_t pos : d) {
    RawWord r;
    r.reserve(2 * pos + 1);
    r.append(reduced.raw(), 0, pos);
    r.push_back(char(reduced.at(pos)));
    for (std::size_t i = pos; i-- > 0;) r.push_back(char(reduced.at(i)));
    fact.reflections.push_back(Word(std::move(r)));
  }
  return fact;
}

AfterDyerReport verify_after_dyer(const Word& reduced, const DeletionSet& d,
                                  const CoxeterSystem& sys,
                                  const SearchLimits& limits,
                                  SearchStats* stats) {
  validate_word(reduced, sys);
  std::size_t p = reduced.size();
  std::uint64_t full = set_to_mask(d, p);
  std::size_t q = d.size();
  AfterDyerReport report;
  if (q == 0) {
    report.exhaustive = true;
    return report;
  }

  auto check_subset = [&](std::uint64_t bits) {
    // bits selects positions of d to delete
    std::uint64_t mask = 0;
    DeletionSet subset;
    for (std::size_t j = 0; j < q; ++j)
      if ((bits >> j) & 1) {
        mask |= std::uint64_t(1) << d[j];
        subset.push_back(d[j]);
      }
    Word rest = delete_positions(reduced, mask);
    int expect = int(q - subset.size());
    int got = reflection_length(rest, sys, limits, stats).first;
    ++report.checked;
    if (got != expect) report.failures.push_back(subset);
  };

  std::uint64_t all = (q >= 64) ? UINT64_MAX : (std::uint64_t(1) << q) - 1;
  if (int(q) <= limits.after_dyer_max) {
    report.exhaustive = true;
    for (std::uint64_t bits = 0; bits < all; ++bits) check_subset(bits);
  } else {
    // Deterministic sample of proper subsets.
    std::uint64_t state = 0x9e3779b97f4a7c15ull ^ (std::uint64_t(p) << 32) ^
                          full;
    auto next = [&state] {
      state = state * 6364136223846793005ull + 1442695040888963407ull;
      return state >> 11;
    };
    for (int t = 0; t < 64; ++t) {
      std::uint64_t bits = next() & all;
      if (bits == all) bits = 0;
      check_subset(bits);
    }
  }
  return report;
}

long long lower_bound_from_deletion_set(const Word& w, const CoxeterSystem& sys,
                               const DeletionSet& d,
                               const SearchLimits& limits,
                               SearchStats* stats) {
  validate_word(w, sys);
  Word red = sys.is_universal() ? Word(nil_reduce(w.raw()))
                                : reduce(w, sys, limits, stats).word;
  std::uint64_t mask = set_to_mask(d, red.size());
  bool ok = sys.is_universal()
                ? nil_reduce(delete_positions(red, mask).raw()).empty()
                : detail::mask_deletes_to_identity(red, sys, mask, limits,
                                                   stats);
  if (!ok)
    throw NotADeletionSetError(
        "the given positions are not a deletion set for the reduced word");
  Word rest = delete_positions(red, mask);
  long long braids =
      (long long)minimal_braid_moves_to_identity(rest, sys, limits, stats);
  long long universal_len = universal_reflection_length(red);
  return universal_len - 2 * braids;
}

EqualityReport equality_criterion(const Word& w, const CoxeterSystem& sys,
                                  const SearchLimits& limits,
                                  SearchStats* stats) {
  EqualityReport rep;
  rep.reflection_len = reflection_length(w, sys, limits, stats).first;
  rep.universal_len = universal_reflection_length(w);
  rep.equal = rep.reflection_len == rep.universal_len;
  return rep;
}

ConjectureScan conjecture_scan(const Word& reduced, const CoxeterSystem& sys,
                               const SearchLimits& limits,
                               SearchStats* stats) {
  validate_word(reduced, sys);
  if (!sys.is_universal() && !is_reduced(reduced, sys, limits, stats))
    throw ParseError("conjecture_scan needs an S-reduced word");
  if (sys.is_universal() && has_nil_pair(reduced.raw()))
    throw ParseError("conjecture_scan needs an S-reduced word");
  ConjectureScan scan;
  scan.reflection_len = reflection_length(reduced, sys, limits, stats).first;
  scan.universal_len = universal_reflection_length(reduced);
  for (std::size_t i = 0; i < reduced.size(); ++i) {
    Word rest = delete_one(reduced, i);
    long long r = reflection_length(rest, sys, limits, stats).first;
    if (r != scan.reflection_len - 1) continue;
    long long u = universal_reflection_length(rest);
    if (u != scan.universal_len - 1) continue;
    scan.witnesses.push_back(i);
  }
  scan.verdict = !scan.witnesses.empty();
  return scan;
}

}  // namespace coxlen
