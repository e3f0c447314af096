#include <doctest.h>

#include "coxlen/errors.hpp"
#include "coxlen/moves.hpp"
#include "coxlen/rewrite.hpp"
#include "oracles.hpp"

using namespace coxlen;

TEST_SUITE("moves") {
  TEST_CASE("applicable_moves ordering and contents") {
    auto sys = CoxeterSystem::single_braided(3, 3);
    // 1 1 2 1 2 — nil at 0, then the two overlapping braid blocks.
    Word w = W({1, 1, 2, 1, 2});
    auto ms = applicable_moves(w, sys);
    REQUIRE(ms.size() == 3);
    CHECK(ms[0] == Move{Move::Nil, 0, 0, 0});
    CHECK(ms[1] == Move{Move::Braid, 1, 0, 1});
    CHECK(ms[2] == Move{Move::Braid, 2, 1, 0});

    Word v = W({1, 1, 2});
    auto mv = applicable_moves(v, sys);
    REQUIRE(mv.size() == 1);
    CHECK(mv[0].kind == Move::Nil);
  }

  TEST_CASE("commuting labels give length-2 braid moves") {
    auto sys = CoxeterSystem::triangle(2, 3, 3);  // m(1,2) = 2
    Word w = W({1, 2});
    auto ms = applicable_moves(w, sys);
    REQUIRE(ms.size() == 1);
    CHECK(ms[0].kind == Move::Braid);
    CHECK(apply_move(w, ms[0], sys) == W({2, 1}));
  }

  TEST_CASE("infinite labels admit no braid move") {
    auto sys = CoxeterSystem::universal(3);
    CHECK(applicable_moves(W({1, 2, 1, 2, 1, 2}), sys).empty());
    auto ms = applicable_moves(W({1, 1, 2}), sys);
    REQUIRE(ms.size() == 1);
    CHECK(ms[0].kind == Move::Nil);
  }

  TEST_CASE("apply_move performs the rewrite it names") {
    auto sys = CoxeterSystem::single_braided(3, 4);
    Word w = W({3, 1, 2, 1, 2, 3});
    Move braid{Move::Braid, 1, 0, 1};
    CHECK(apply_move(w, braid, sys) == W({3, 2, 1, 2, 1, 3}));
    Word u = W({1, 3, 3, 2});
    Move nil{Move::Nil, 1, 2, 2};
    CHECK(apply_move(u, nil, sys) == W({1, 2}));
  }

  TEST_CASE("moves preserve the group element") {
    auto sys = CoxeterSystem::triangle(3, 3, 4);
    oracle::Lcg rng(91);
    int checked = 0;
    for (int t = 0; t < 200; ++t) {
      Word w(rng.word(3, 2 + rng.next(8)));
      for (const Move& mv : applicable_moves(w, sys)) {
        Word after = apply_move(w, mv, sys);
        if (mv.kind == Move::Nil)
          CHECK(after.size() + 2 == w.size());
        else
          CHECK(after.size() == w.size());
        // w * after^{-1} must be the identity.
        RawWord prod = w.raw();
        prod.append(after.raw().rbegin(), after.raw().rend());
        CHECK(oracle::is_identity_bfs(prod, sys));
        ++checked;
      }
    }
    CHECK(checked > 100);
  }

  TEST_CASE("applicable_moves matches the oracle's neighbor set") {
    auto sys = CoxeterSystem::triangle(3, 3, 4);
    oracle::Lcg rng(17);
    for (int t = 0; t < 150; ++t) {
      Word w(rng.word(3, rng.next(9)));
      auto ms = applicable_moves(w, sys);
      std::vector<RawWord> got;
      got.reserve(ms.size());
      for (const Move& mv : ms) got.push_back(apply_move(w, mv, sys).raw());
      std::sort(got.begin(), got.end());
      auto want = oracle::neighbors(w.raw(), sys);
      std::sort(want.begin(), want.end());
      // The oracle may list one word twice if two moves produce it; the
      // move list is per-move, so compare as sets.
      got.erase(std::unique(got.begin(), got.end()), got.end());
      want.erase(std::unique(want.begin(), want.end()), want.end());
      CHECK(got == want);
    }
  }

  TEST_CASE("replay applies a recorded trace") {
    auto sys = CoxeterSystem::single_braided(3, 3);
    Word w = W({1, 2, 1, 2, 2, 3, 2, 3});
    ReduceResult r = reduce(w, sys);
    CHECK(replay(w, r.trace, sys) == r.word);
    // An empty trace replays to the source itself.
    CHECK(replay(w, MoveTrace{}, sys) == w);
  }
}
