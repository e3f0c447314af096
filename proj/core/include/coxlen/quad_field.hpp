#pragma once

#include <gmpxx.h>

#include <climits>
#include <cstdint>
#include <stdexcept>
#include <string>

#include "coxlen/coxeter_system.hpp"

namespace coxlen {

// Signals that the fixed-width scalar path overflowed; callers rebuild the
// computation over arbitrary-precision coefficients.
struct RingOverflow : std::runtime_error {
  RingOverflow() : std::runtime_error("int64 scalar coefficient overflow") {}
};

// int64 with checked arithmetic.
class I64 {
 public:
  constexpr I64() = default;
  constexpr I64(long long v) : v_(v) {}
  long long value() const { return v_; }

  friend I64 operator+(I64 x, I64 y) {
    long long r;
    if (__builtin_add_overflow(x.v_, y.v_, &r)) throw RingOverflow();
    return I64(r);
  }
  friend I64 operator-(I64 x, I64 y) {
    long long r;
    if (__builtin_sub_overflow(x.v_, y.v_, &r)) throw RingOverflow();
    return I64(r);
  }
  friend I64 operator*(I64 x, I64 y) {
    long long r;
    if (__builtin_mul_overflow(x.v_, y.v_, &r)) throw RingOverflow();
    return I64(r);
  }
  I64 operator-() const {
    if (v_ == LLONG_MIN) throw RingOverflow();
    return I64(-v_);
  }
  bool operator==(const I64&) const = default;

 private:
  long long v_ = 0;
};

/**
 * Element a + b*sqrt(2) + c*sqrt(3) + d*sqrt(6) of Z[sqrt(2), sqrt(3)].
 * Closed under multiplication; 1, sqrt(2), sqrt(3), sqrt(6) are linearly
 * independent over Q, so equality of values is equality of coefficient
 * quadruples.  Covers 2*cos(pi/m) exactly for labels m in {2, 3, 4, 6}
 * and the infinite-label value 2.
 */
template <class I>
struct Quad {
  I a{}, b{}, c{}, d{};

  friend Quad operator+(const Quad& x, const Quad& y) {
    return {x.a + y.a, x.b + y.b, x.c + y.c, x.d + y.d};
  }
  friend Quad operator-(const Quad& x, const Quad& y) {
    return {x.a - y.a, x.b - y.b, x.c - y.c, x.d - y.d};
  }
  friend Quad operator*(const Quad& x, const Quad& y) {
    // (sqrt2)^2 = 2, (sqrt3)^2 = 3, (sqrt6)^2 = 6,
    // sqrt2*sqrt3 = sqrt6, sqrt2*sqrt6 = 2*sqrt3, sqrt3*sqrt6 = 3*sqrt2.
    I two(2), three(3), six(6);
    return {
        x.a * y.a + two * (x.b * y.b) + three * (x.c * y.c) +
            six * (x.d * y.d),
        x.a * y.b + x.b * y.a + three * (x.c * y.d + x.d * y.c),
        x.a * y.c + x.c * y.a + two * (x.b * y.d + x.d * y.b),
        x.a * y.d + x.d * y.a + x.b * y.c + x.c * y.b,
    };
  }
  Quad operator-() const { return {-a, -b, -c, -d}; }
  bool operator==(const Quad&) const = default;

  bool is_zero() const { return *this == Quad{}; }
};

using Quad64 = Quad<I64>;
using QuadBig = Quad<mpz_class>;

// 2*cos(pi/m) as an exact ring element; m = 0 is the infinite label (value
// 2).  Throws std::invalid_argument for labels outside {2, 3, 4, 6, inf}.
Quad64 two_cos_pi_over(int m);

QuadBig to_big(const Quad64& q);
double to_double(const Quad64& q);
double to_double(const QuadBig& q);

// Compact byte serialization used as a hash key.
void append_key(std::string& out, const Quad64& q);
void append_key(std::string& out, const QuadBig& q);

}  // namespace coxlen
