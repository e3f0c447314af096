#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace coxlen {

using Gen = std::uint8_t;  // 0-based generator index

/**
 * A finitely presented Coxeter system (W, S): a rank together with the
 * symmetric order matrix m, where m(a,a) = 1 and m(a,b) ∈ {2,3,...} ∪ {∞}
 * for a ≠ b.  Infinite labels are stored as the sentinel value 0, matching
 * the JSON encoding.  Instances are immutable after construction.
 */
class CoxeterSystem {
 public:
  static constexpr int kInfinity = 0;

  CoxeterSystem(int rank, std::vector<int> matrix);

  // All off-diagonal labels infinite: the universal system W_n.
  static CoxeterSystem universal(int n);
  // All off-diagonal labels equal to k.
  static CoxeterSystem single_braided(int n, int k);
  // Rank 3 with m(1,2) = p, m(1,3) = q, m(2,3) = r (1-based naming).
  static CoxeterSystem triangle(int p, int q, int r);

  int rank() const { return rank_; }
  // Label m(a,b); 0 means infinite.
  int label(Gen a, Gen b) const { return m_[std::size_t(a) * rank_ + b]; }
  bool finite_label(Gen a, Gen b) const { return label(a, b) != kInfinity; }
  bool is_universal() const;
  // The common off-diagonal label when all agree (single-braided systems;
  // kInfinity for universal ones), -1 when labels are mixed.  Rank 1 has no
  // off-diagonal labels and reports -1.
  int uniform_label() const;
  // All labels lie in {2,3,4,6,∞}: the geometric representation has exact
  // scalars in Z[sqrt(2), sqrt(3)].
  bool has_exact_scalars() const;

  // Stable content digest (hex string) used as the cache key component.
  std::string digest() const;
  // Round-trippable description, e.g. "triangle:3:3:4" or "matrix:[...]".
  std::string describe() const;

  bool operator==(const CoxeterSystem&) const = default;

 private:
  int rank_;
  std::vector<int> m_;  // row-major rank x rank
};

// Parses a group description.  Accepted forms:
//   universal:<n>        all labels infinite
//   single:<n>:<k>       all labels k
//   triangle:<p>:<q>:<r> rank 3, labels as in CoxeterSystem::triangle
//   { "rank": n, "matrix": [[...], ...] }   JSON, 0 encoding an infinite label
// The token "inf" is accepted for an infinite label in the colon forms'
// numeric positions.  Throws ParseError on malformed input.
CoxeterSystem parse_group(std::string_view text);

}  // namespace coxlen
