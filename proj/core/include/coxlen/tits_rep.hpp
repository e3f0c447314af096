#pragma once

#include <cmath>
#include <vector>

#include "coxlen/quad_field.hpp"
#include "coxlen/word.hpp"

namespace coxlen {

template <class S>
struct SquareMat {
  int n = 0;
  std::vector<S> a;  // row-major

  static SquareMat identity(int n) {
    SquareMat m;
    m.n = n;
    m.a.assign(std::size_t(n) * n, S{});
    for (int i = 0; i < n; ++i) m.at(i, i) = S{1};
    return m;
  }

  S& at(int r, int c) { return a[std::size_t(r) * n + c]; }
  const S& at(int r, int c) const { return a[std::size_t(r) * n + c]; }

  SquareMat mul(const SquareMat& o) const {
    SquareMat r;
    r.n = n;
    r.a.assign(a.size(), S{});
    for (int i = 0; i < n; ++i)
      for (int k = 0; k < n; ++k) {
        const S& x = at(i, k);
        if (x == S{}) continue;
        for (int j = 0; j < n; ++j) r.at(i, j) = r.at(i, j) + x * o.at(k, j);
      }
    return r;
  }

  bool operator==(const SquareMat&) const = default;
};

/**
 * The symmetric bilinear form of the geometric representation.
 * B(e_i, e_j) = -cos(pi / m(i,j)) for finite labels, -1 for infinite ones,
 * 1 on the diagonal.  Entries are half-integers in Z[sqrt2, sqrt3]; to keep
 * coefficients integral the matrix stores 2*B.
 */
struct BilinearForm {
  int n = 0;
  std::vector<Quad64> twice;  // 2*B, row-major

  // Requires sys.has_exact_scalars().
  static BilinearForm exact(const CoxeterSystem& sys);

  const Quad64& twice_entry(int i, int j) const {
    return twice[std::size_t(i) * n + j];
  }
  double entry(int i, int j) const { return to_double(twice_entry(i, j)) / 2; }
};

// Generator matrix of the geometric representation: s_i sends e_j to
// e_j - 2 B(e_i, e_j) e_i, i.e. entries delta_{aj} - 2 B_{ij} delta_{ai}.
// The representation is faithful, so exact matrix equality decides equality
// of group elements.
template <class S>
std::vector<SquareMat<S>> build_generator_matrices(const CoxeterSystem& sys);

template <>
std::vector<SquareMat<Quad64>> build_generator_matrices<Quad64>(
    const CoxeterSystem& sys);
template <>
std::vector<SquareMat<QuadBig>> build_generator_matrices<QuadBig>(
    const CoxeterSystem& sys);
template <>
std::vector<SquareMat<double>> build_generator_matrices<double>(
    const CoxeterSystem& sys);

template <class S>
SquareMat<S> word_matrix(const Word& w, const std::vector<SquareMat<S>>& gens,
                         int n) {
  SquareMat<S> acc = SquareMat<S>::identity(n);
  for (std::size_t i = 0; i < w.size(); ++i) acc = acc.mul(gens[w.at(i)]);
  return acc;
}

// Relative accept/reject thresholds for the floating-point path.
inline constexpr double kFloatAccept = 1e-9;
inline constexpr double kFloatReject = 1e-6;

// Largest absolute entry of M - I.
double identity_distance(const SquareMat<double>& m);

// Decides whether w maps to the identity matrix.  Exact-scalar systems give
// a definitive answer (retrying with big coefficients on overflow); other
// systems accept below kFloatAccept * (1 + |w|), reject above
// kFloatReject * (1 + |w|) * (largest intermediate entry magnitude), and
// throw PrecisionInconclusive in between.
bool matrix_is_identity(const Word& w, const CoxeterSystem& sys);

}  // namespace coxlen
