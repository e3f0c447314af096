#include "coxlen/tits_rep.hpp"

#include <algorithm>

#include "coxlen/errors.hpp"

namespace coxlen {

BilinearForm BilinearForm::exact(const CoxeterSystem& sys) {
  if (!sys.has_exact_scalars())
    throw std::invalid_argument(
        "exact bilinear form needs labels in {2, 3, 4, 6, inf}");
  BilinearForm f;
  f.n = sys.rank();
  f.twice.assign(std::size_t(f.n) * f.n, Quad64{});
  for (int i = 0; i < f.n; ++i)
    for (int j = 0; j < f.n; ++j) {
      if (i == j)
        f.twice[std::size_t(i) * f.n + j] = Quad64{2, 0, 0, 0};
      else
        f.twice[std::size_t(i) * f.n + j] =
            -two_cos_pi_over(sys.label(Gen(i), Gen(j)));
    }
  return f;
}

namespace {

template <class S, class TwoCos>
std::vector<SquareMat<S>> build_gens(const CoxeterSystem& sys,
                                     TwoCos&& two_cos) {
  int n = sys.rank();
  std::vector<SquareMat<S>> gens;
  gens.reserve(std::size_t(n));
  for (int i = 0; i < n; ++i) {
    SquareMat<S> m = SquareMat<S>::identity(n);
    for (int j = 0; j < n; ++j) {
      if (j == i)
        m.at(i, i) = S{-1};
      else
        // -2 B_{ij} = 2 cos(pi / m(i,j))
        m.at(i, j) = two_cos(sys.label(Gen(i), Gen(j)));
    }
    gens.push_back(std::move(m));
  }
  return gens;
}

}  // namespace

template <>
std::vector<SquareMat<Quad64>> build_generator_matrices<Quad64>(
    const CoxeterSystem& sys) {
  if (!sys.has_exact_scalars())
    throw std::invalid_argument(
        "exact representation needs labels in {2, 3, 4, 6, inf}");
  return build_gens<Quad64>(sys, [](int m) { return two_cos_pi_over(m); });
}

template <>
std::vector<SquareMat<QuadBig>> build_generator_matrices<QuadBig>(
    const CoxeterSystem& sys) {
  if (!sys.has_exact_scalars())
    throw std::invalid_argument(
        "exact representation needs labels in {2, 3, 4, 6, inf}");
  return build_gens<QuadBig>(sys,
                             [](int m) { return to_big(two_cos_pi_over(m)); });
}

template <>
std::vector<SquareMat<double>> build_generator_matrices<double>(
    const CoxeterSystem& sys) {
  return build_gens<double>(sys, [](int m) {
    return m == CoxeterSystem::kInfinity ? 2.0 : 2.0 * std::cos(M_PI / m);
  });
}

double identity_distance(const SquareMat<double>& m) {
  double worst = 0.0;
  for (int i = 0; i < m.n; ++i)
    for (int j = 0; j < m.n; ++j)
      worst = std::max(worst, std::abs(m.at(i, j) - (i == j ? 1.0 : 0.0)));
  return worst;
}

bool matrix_is_identity(const Word& w, const CoxeterSystem& sys) {
  validate_word(w, sys);
  if (sys.has_exact_scalars()) {
    try {
      auto gens = build_generator_matrices<Quad64>(sys);
      return word_matrix(w, gens, sys.rank()) ==
             SquareMat<Quad64>::identity(sys.rank());
    } catch (const RingOverflow&) {
      auto gens = build_generator_matrices<QuadBig>(sys);
      return word_matrix(w, gens, sys.rank()) ==
             SquareMat<QuadBig>::identity(sys.rank());
    }
  }
  auto gens = build_generator_matrices<double>(sys);
  // Entries of intermediate products grow geometrically with the word, and
  // rounding error grows with them, so the reject band scales with the
  // largest magnitude seen along the way.  The accept band stays absolute:
  // the target is the identity matrix, whose entries are O(1).
  SquareMat<double> m = SquareMat<double>::identity(sys.rank());
  double grow = 1.0;
  for (std::size_t i = 0; i < w.size(); ++i) {
    m = m.mul(gens[w.at(i)]);
    for (double e : m.a) grow = std::max(grow, std::abs(e));
  }
  double dist = identity_distance(m);
  double scale = 1.0 + double(w.size());
  if (dist < kFloatAccept * scale) return true;
  if (dist > kFloatReject * scale * grow) return false;
  throw PrecisionInconclusive("identity distance " + std::to_string(dist) +
                              " lies between the accept and reject bands");
}

}  // namespace coxlen
