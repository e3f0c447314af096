#include <doctest.h>

#include "coxlen/coxeter_system.hpp"
#include "coxlen/errors.hpp"

using namespace coxlen;

TEST_SUITE("system") {
  TEST_CASE("factory shapes") {
    auto u = CoxeterSystem::universal(4);
    CHECK(u.rank() == 4);
    CHECK(u.is_universal());
    CHECK(u.label(Gen(0), Gen(3)) == CoxeterSystem::kInfinity);
    CHECK(u.uniform_label() == CoxeterSystem::kInfinity);

    auto s = CoxeterSystem::single_braided(3, 5);
    CHECK(s.rank() == 3);
    CHECK_FALSE(s.is_universal());
    CHECK(s.label(Gen(0), Gen(2)) == 5);
    CHECK(s.uniform_label() == 5);

    auto t = CoxeterSystem::triangle(3, 3, 4);
    CHECK(t.rank() == 3);
    CHECK(t.label(Gen(0), Gen(1)) == 3);  // p
    CHECK(t.label(Gen(0), Gen(2)) == 3);  // q
    CHECK(t.label(Gen(1), Gen(2)) == 4);  // r
    CHECK(t.uniform_label() == -1);
    CHECK(CoxeterSystem::triangle(3, 3, 3).uniform_label() == 3);
  }

  TEST_CASE("constructor validation") {
    CHECK_THROWS_AS(CoxeterSystem(2, {1, 2, 2, 2}), ParseError);  // diag
    CHECK_THROWS_AS(CoxeterSystem(2, {1, 2, 3, 1}), ParseError);  // symmetry
    CHECK_THROWS_AS(CoxeterSystem(2, {1, 1, 1, 1}), ParseError);  // label 1
    CHECK_THROWS_AS(CoxeterSystem(0, {}), ParseError);
    CHECK_NOTHROW(CoxeterSystem(2, {1, 0, 0, 1}));
  }

  TEST_CASE("exact scalars exactly for labels in {2,3,4,6,inf}") {
    CHECK(CoxeterSystem::universal(3).has_exact_scalars());
    CHECK(CoxeterSystem::triangle(2, 4, 6).has_exact_scalars());
    CHECK(CoxeterSystem::single_braided(3, 3).has_exact_scalars());
    CHECK_FALSE(CoxeterSystem::single_braided(3, 5).has_exact_scalars());
    CHECK_FALSE(CoxeterSystem::triangle(3, 3, 7).has_exact_scalars());
  }

  TEST_CASE("parse_group grammar") {
    CHECK(parse_group("universal:3") == CoxeterSystem::universal(3));
    CHECK(parse_group("single:4:3") == CoxeterSystem::single_braided(4, 3));
    CHECK(parse_group("triangle:3:3:4") == CoxeterSystem::triangle(3, 3, 4));
    CHECK(parse_group(" universal:2 ") == CoxeterSystem::universal(2));
    CHECK_THROWS_AS(parse_group(""), ParseError);
    CHECK_THROWS_AS(parse_group("universal"), ParseError);
    CHECK_THROWS_AS(parse_group("pentagon:5"), ParseError);
  }

  TEST_CASE("parse_group accepts a JSON label matrix") {
    auto g = parse_group(
        R"({"rank":3,"matrix":[[1,3,0],[3,1,0],[0,0,1]]})");
    CHECK(g.rank() == 3);
    CHECK(g.label(Gen(0), Gen(1)) == 3);
    CHECK(g.label(Gen(0), Gen(2)) == CoxeterSystem::kInfinity);
    CHECK_FALSE(g.is_universal());
    CHECK_THROWS_AS(parse_group("{\"rank\":2}"), ParseError);
    CHECK_THROWS_AS(parse_group("{nonsense"), ParseError);
  }

  TEST_CASE("digest distinguishes systems and is stable") {
    auto a = CoxeterSystem::triangle(3, 3, 4);
    auto b = CoxeterSystem::triangle(3, 4, 3);
    CHECK(a.digest() == CoxeterSystem::triangle(3, 3, 4).digest());
    CHECK(a.digest() != b.digest());
    CHECK(a.digest() != CoxeterSystem::universal(3).digest());
  }

  TEST_CASE("single-braided notation order is single:<n>:<k>") {
    // Rank first, then the common label.
    auto g = parse_group("single:3:5");
    CHECK(g.rank() == 3);
    CHECK(g.uniform_label() == 5);
  }
}
