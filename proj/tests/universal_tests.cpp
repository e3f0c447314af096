#include <doctest.h>

#include "coxlen/errors.hpp"
#include "coxlen/universal.hpp"
#include "oracles.hpp"

using namespace coxlen;

namespace {

template <class F>
void for_each_word(int rank, int len, F&& f) {
  RawWord w(std::size_t(len), char(0));
  while (true) {
    f(w);
    int i = len - 1;
    while (i >= 0 && w[std::size_t(i)] == char(rank - 1)) {
      w[std::size_t(i)] = 0;
      --i;
    }
    if (i < 0) return;
    ++w[std::size_t(i)];
  }
}

// Colex-least minimal deletion set by ascending-bitmask scan.
std::pair<int, DeletionSet> witness_oracle(const RawWord& w) {
  const std::size_t p = w.size();
  int best = int(p) + 1;
  std::uint64_t best_mask = 0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << p); ++mask) {
    int bits = __builtin_popcountll(mask);
    if (bits >= best) continue;
    RawWord kept;
    for (std::size_t i = 0; i < p; ++i)
      if (!(mask >> i & 1)) kept.push_back(w[i]);
    if (oracle::free_reduce(kept).empty()) {
      best = bits;
      best_mask = mask;
    }
  }
  DeletionSet ds;
  for (std::size_t i = 0; i < p; ++i)
    if (best_mask >> i & 1) ds.push_back(i);
  return {best, ds};
}

}  // namespace

TEST_SUITE("universal") {
  TEST_CASE("interval DP matches subset enumeration, exhaustively") {
    for (int len = 0; len <= 10; ++len)
      for_each_word(2, len, [&](const RawWord& w) {
        CHECK(universal_reflection_length(Word(w)) == oracle::universal_lrn(w));
      });
    for (int len = 0; len <= 8; ++len)
      for_each_word(3, len, [&](const RawWord& w) {
        CHECK(universal_reflection_length(Word(w)) == oracle::universal_lrn(w));
      });
  }

  TEST_CASE("interval DP on random longer words") {
    oracle::Lcg rng(5);
    for (int t = 0; t < 150; ++t) {
      RawWord w = rng.word(4, rng.next(17));
      CHECK(universal_reflection_length(Word(w)) == oracle::universal_lrn(w));
    }
  }

  TEST_CASE("value is invariant under free cancellation") {
    oracle::Lcg rng(29);
    for (int t = 0; t < 100; ++t) {
      RawWord w = rng.word(3, rng.next(14));
      CHECK(universal_reflection_length(Word(w)) ==
            universal_reflection_length(Word(oracle::free_reduce(w))));
    }
  }

  TEST_CASE("witness is valid and colex-least") {
    oracle::Lcg rng(43);
    int tried = 0;
    for (int t = 0; t < 400 && tried < 80; ++t) {
      RawWord w = oracle::free_reduce(rng.word(3, rng.next(13)));
      if (w.size() > 12) continue;
      ++tried;
      auto [len, ds] = universal_reflection_length_witness(Word(w));
      auto [olen, ods] = witness_oracle(w);
      CHECK(len == olen);
      CHECK(ds == ods);
      // Deleting the witness positions nil-cancels to nothing.
      RawWord kept;
      std::size_t k = 0;
      for (std::size_t i = 0; i < w.size(); ++i) {
        if (k < ds.size() && ds[k] == i) {
          ++k;
          continue;
        }
        kept.push_back(w[i]);
      }
      CHECK(oracle::free_reduce(kept).empty());
    }
    CHECK(tried >= 80);
  }

  TEST_CASE("witness pins the worked example") {
    // 1 2 3 1 2 3 in the universal system: length 4, colex-least set
    // {0, 1, 3, 4} (keeping positions 2 and 5, the nil pair 3 3).
    auto [len, ds] = universal_reflection_length_witness(W({1, 2, 3, 1, 2, 3}));
    CHECK(len == 4);
    CHECK(ds == DeletionSet{0, 1, 3, 4});
  }

  TEST_CASE("power-word grid matches the closed form") {
    // The reflection length of (1...n)^lambda * 1...r in the universal
    // system is lambda*(n-2)+r for 1 <= r <= n (with the r = n wrap).
    for (int n = 2; n <= 6; ++n)
      for (int lam = 0; lam <= 4; ++lam)
        for (int r = 1; r <= n; ++r) {
          RawWord w;
          for (int rep = 0; rep < lam; ++rep)
            for (int g = 0; g < n; ++g) w.push_back(char(g));
          for (int g = 0; g < r; ++g) w.push_back(char(g));
          int expect = r == n ? lam * (n - 2) + n : lam * (n - 2) + r;
          CHECK(universal_reflection_length(Word(w)) == expect);
        }
  }

  TEST_CASE("witness length cap is enforced") {
    RawWord big;
    for (int i = 0; i < 130; ++i) big.push_back(char(i % 2));
    CHECK_THROWS_AS(universal_reflection_length_witness(Word(big)),
                    ParseError);
  }
}
