#include <doctest.h>

#include <cmath>
#include <set>
#include <string>

#include "coxlen/quad_field.hpp"

using namespace coxlen;

TEST_SUITE("quad") {
  TEST_CASE("two_cos_pi_over hits the textbook values") {
    CHECK(to_double(two_cos_pi_over(2)) == doctest::Approx(0.0));
    CHECK(to_double(two_cos_pi_over(3)) == doctest::Approx(1.0));
    CHECK(to_double(two_cos_pi_over(4)) == doctest::Approx(std::sqrt(2.0)));
    CHECK(to_double(two_cos_pi_over(6)) == doctest::Approx(std::sqrt(3.0)));
    CHECK(to_double(two_cos_pi_over(CoxeterSystem::kInfinity)) ==
          doctest::Approx(2.0));
  }

  TEST_CASE("ring arithmetic matches double arithmetic") {
    Quad64 r2 = two_cos_pi_over(4);
    Quad64 r3 = two_cos_pi_over(6);
    Quad64 s = r2 + r3;
    Quad64 p = r2 * r3;  // sqrt(2)*sqrt(3) = sqrt(6)
    CHECK(to_double(s) == doctest::Approx(std::sqrt(2.0) + std::sqrt(3.0)));
    CHECK(to_double(p) == doctest::Approx(std::sqrt(6.0)));
    CHECK(p * p == Quad64{6, 0, 0, 0});
    CHECK(r2 * r2 == Quad64{2, 0, 0, 0});
    CHECK(-(r2 - r2) == Quad64{});
  }

  TEST_CASE("multiplication is commutative and distributes") {
    Quad64 a{1, -2, 3, 0}, b{0, 1, -1, 2}, c{2, 0, 0, -1};
    CHECK(a * b == b * a);
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a * b) * c == a * (b * c));
  }

  TEST_CASE("big-int mirror agrees and survives overflow") {
    Quad64 a{123456789, -987654321, 555, -1};
    QuadBig ba = to_big(a);
    CHECK(to_double(ba) == doctest::Approx(to_double(a)));
    CHECK(to_big(a * a) == ba * ba);

    // Repeated squaring overflows the checked 64-bit coefficients but keeps
    // working through the big path.
    Quad64 x{3, 1, 1, 1};
    QuadBig bx = to_big(x);
    bool overflowed = false;
    try {
      for (int i = 0; i < 8; ++i) {
        x = x * x;
        bx = bx * bx;
        CHECK(to_big(x) == bx);
      }
    } catch (const RingOverflow&) {
      overflowed = true;
    }
    CHECK(overflowed);
  }

  TEST_CASE("append_key separates distinct values") {
    std::set<std::string> keys;
    Quad64 vals[] = {{0, 0, 0, 0}, {1, 0, 0, 0},  {0, 1, 0, 0},
                     {0, 0, 1, 0}, {0, 0, 0, 1},  {-1, 0, 0, 0},
                     {1, 1, 0, 0}, {2, -3, 4, -5}};
    for (const Quad64& v : vals) {
      std::string k;
      append_key(k, v);
      keys.insert(k);
    }
    CHECK(keys.size() == 8);
  }

  TEST_CASE("unsupported labels are rejected") {
    CHECK_THROWS(two_cos_pi_over(5));
    CHECK_THROWS(two_cos_pi_over(7));
  }
}
