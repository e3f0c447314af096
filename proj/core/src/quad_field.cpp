#include "coxlen/quad_field.hpp"

#include <cmath>
#include <cstring>

namespace coxlen {

Quad64 two_cos_pi_over(int m) {
  switch (m) {
    case 2:
      return {0, 0, 0, 0};
    case 3:
      return {1, 0, 0, 0};
    case 4:
      return {0, 1, 0, 0};  // sqrt(2)
    case 6:
      return {0, 0, 1, 0};  // sqrt(3)
    case CoxeterSystem::kInfinity:
      return {2, 0, 0, 0};
    default:
      throw std::invalid_argument("label " + std::to_string(m) +
                                  " has no scalar in Z[sqrt2, sqrt3]");
  }
}

QuadBig to_big(const Quad64& q) {
  // gmpxx has no long long constructor; long is 64-bit here.
  return {mpz_class(static_cast<long>(q.a.value())),
          mpz_class(static_cast<long>(q.b.value())),
          mpz_class(static_cast<long>(q.c.value())),
          mpz_class(static_cast<long>(q.d.value()))};
}

double to_double(const Quad64& q) {
  return double(q.a.value()) + double(q.b.value()) * std::sqrt(2.0) +
         double(q.c.value()) * std::sqrt(3.0) +
         double(q.d.value()) * std::sqrt(6.0);
}

double to_double(const QuadBig& q) {
  return q.a.get_d() + q.b.get_d() * std::sqrt(2.0) +
         q.c.get_d() * std::sqrt(3.0) + q.d.get_d() * std::sqrt(6.0);
}

void append_key(std::string& out, const Quad64& q) {
  long long v[4] = {q.a.value(), q.b.value(), q.c.value(), q.d.value()};
  out.append(reinterpret_cast<const char*>(v), sizeof v);
}

void append_key(std::string& out, const QuadBig& q) {
  out += q.a.get_str();
  out += '|';
  out += q.b.get_str();
  out += '|';
  out += q.c.get_str();
  out += '|';
  out += q.d.get_str();
  out += ';';
}

}  // namespace coxlen
