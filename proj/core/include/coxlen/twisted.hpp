#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "coxlen/word.hpp"

namespace coxlen {

// One matched pair of blocks around the center: the word looks like
// left_1 ... left_n  center  right_n ... right_1.  Condition 1 pairs a
// freely reduced block with its reversal; condition 2 pairs an alternating
// two-letter block of length >= 2 with its letter-swap (odd length) or with
// itself (even length).
struct TwistedLayer {
  Word left, right;
  int condition = 1;  // 1 or 2
};

struct TwistedPalindrome {
  std::vector<TwistedLayer> layers;  // outermost first
  std::size_t center_pos = 0;        // index of the center letter
};

// Decides whether w (odd length) decomposes as a twisted palindrome.
// Backtracking search over block lengths, longest condition-1 candidates
// first, so the preferred decomposition matches a greedy outermost scan but
// no valid decomposition is missed.
std::optional<TwistedPalindrome> is_twisted_palindrome(const Word& w);

struct MiddleDeletionReport {
  bool twisted = false;
  std::size_t center_pos = 0;
  long long full_len = 0;     // reflection length of w in the universal system
  long long deleted_len = 0;  // same after removing the center letter
  bool drop_is_one = false;
};

// Measures the center-removal property: deleting the center letter of a
// twisted palindrome changes universal reflection length by exactly one in
// some direction (any single-letter deletion does).  The length is
// guaranteed to DROP when some decomposition uses at most one condition-2
// layer: condition-1 layers conjugate elementwise, and a lone condition-2
// layer contributes exactly 2 that its own two-sided shrink recovers.  With
// two or more condition-2 layers the drop can fail: for
// "3 4 1 2 1 4 2 1 2 3 4" (layers "3 4" / "1 2 1", center the lone 4)
// removal raises the length from 3 to 4, because the outer layer's
// cancellation path runs through the collapsed center and disappears with
// it.  drop_is_one reports which way the measurement went.
MiddleDeletionReport verify_middle_deletion(const Word& w);
// Same, for a caller-supplied center position (useful when the caller knows
// the decomposition, e.g. for generated samples).
MiddleDeletionReport verify_middle_deletion_at(const Word& w,
                                               std::size_t center_pos);

struct GeneratedPalindrome {
  Word word;
  std::size_t center_pos = 0;
  int layers = 0;
  int cond2_layers = 0;  // how many layers were drawn under condition 2
};

// Deterministic sampler of twisted palindromes: `count` samples over
// `rank` generators with 1..max_depth layers, both pair conditions drawn
// with equal weight.  Every sample is freely reduced as written (adjacent
// letters differ), so its word is the unique reduced spelling of its
// element.  Driven by a linear congruential generator
// (x -> 6364136223846793005*x + 1442695040888963407, high bits used), so a
// fixed seed reproduces the same samples on any platform.
std::vector<GeneratedPalindrome> generate_twisted_palindromes(
    int rank, int max_depth, int count, std::uint64_t seed);

}  // namespace coxlen
