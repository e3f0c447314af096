#include <doctest.h>

#include "coxlen/coxeter_system.hpp"
#include "coxlen/errors.hpp"
#include "coxlen/word.hpp"
#include "oracles.hpp"

using namespace coxlen;

TEST_SUITE("word") {
  TEST_CASE("one-based vector constructor and render round-trip") {
    Word w = W({1, 2, 1, 3});
    CHECK(w.size() == 4);
    CHECK(w.at(0) == Gen(0));
    CHECK(w.at(3) == Gen(2));
    CHECK(w.render() == "1 2 1 3");
    CHECK(w.indices() == std::vector<int>{1, 2, 1, 3});
    CHECK(Word().render() == "");
  }

  TEST_CASE("concat and pow") {
    Word a = W({1, 2}), b = W({3});
    CHECK(a.concat(b) == W({1, 2, 3}));
    CHECK(a.pow(3) == W({1, 2, 1, 2, 1, 2}));
    CHECK(a.pow(0) == Word());
    CHECK_THROWS_AS(a.pow(-1), ParseError);
  }

  TEST_CASE("parse_word handles whitespace and rejects junk") {
    auto sys = CoxeterSystem::universal(3);
    CHECK(parse_word("1 2 3", sys) == W({1, 2, 3}));
    CHECK(parse_word("  2   1 ", sys) == W({2, 1}));
    CHECK(parse_word("", sys) == Word());
    CHECK_THROWS_AS(parse_word("1 4", sys), ParseError);   // beyond rank
    CHECK_THROWS_AS(parse_word("0 1", sys), ParseError);   // not 1-based
    CHECK_THROWS_AS(parse_word("1 x", sys), ParseError);
  }

  TEST_CASE("parse_word_powers expands power factors") {
    auto sys = CoxeterSystem::single_braided(3, 4);
    CHECK(parse_word_powers("(123)^2", sys) == W({1, 2, 3, 1, 2, 3}));
    CHECK(parse_word_powers("(123)^1 1 2", sys) == W({1, 2, 3, 1, 2}));
    CHECK(parse_word_powers("(12)^0 3", sys) == W({3}));
    CHECK(parse_word_powers("2 (31)^2", sys) == W({2, 3, 1, 3, 1}));
    CHECK_THROWS_AS(parse_word_powers("(123^2", sys), ParseError);
    CHECK_THROWS_AS(parse_word_powers("(124)^2", sys), ParseError);
    CHECK_THROWS_AS(parse_word_powers("(123)^-1", sys), ParseError);
  }

  TEST_CASE("coxeter_power_word builds (s_1...s_n)^lambda plus prefix") {
    auto sys = CoxeterSystem::universal(3);
    CHECK(coxeter_power_word(sys, 0, 0) == Word());
    CHECK(coxeter_power_word(sys, 1, 0) == W({1, 2, 3}));
    CHECK(coxeter_power_word(sys, 2, 2) == W({1, 2, 3, 1, 2, 3, 1, 2}));
    CHECK(coxeter_power_word(sys, 0, 3) == W({1, 2, 3}));
    CHECK_THROWS_AS(coxeter_power_word(sys, -1, 0), ParseError);
    CHECK_THROWS_AS(coxeter_power_word(sys, 1, 4), ParseError);
  }

  TEST_CASE("validate_word enforces the rank") {
    auto sys = CoxeterSystem::universal(2);
    CHECK_NOTHROW(validate_word(W({1, 2, 1}), sys));
    CHECK_THROWS_AS(validate_word(W({1, 3}), sys), ParseError);
  }
}
