#include "coxlen/universal.hpp"

#include <vector>

#include "coxlen/errors.hpp"
#include "coxlen/rewrite.hpp"

namespace coxlen {

namespace {

using Mask = unsigned __int128;

// Deletion counts alone, arbitrary length.
int dp_count(const RawWord& v) {
  int p = int(v.size());
  std::vector<int> d(std::size_t(p + 1) * (p + 1), 0);
  auto at = [&](int i, int j) -> int& { return d[std::size_t(i) * (p + 1) + j]; };
  for (int len = 1; len <= p; ++len)
    for (int i = 0; i + len <= p; ++i) {
      int j = i + len;
      int best = 1 + at(i + 1, j);
      for (int k = i + 1; k < j; ++k)
        if (v[k] == v[i]) best = std::min(best, at(i + 1, k) + at(k + 1, j));
      at(i, j) = best;
    }
  return at(0, p);
}

}  // namespace

int universal_reflection_length(const Word& w) {
  return dp_count(nil_reduce(w.raw()));
}

std::pair<int, DeletionSet> universal_reflection_length_witness(const Word& w) {
  const RawWord& v = w.raw();
  if (has_nil_pair(v))
    throw ParseError("witness computation requires a freely reduced word");
  int p = int(v.size());
  if (p > 128) throw ParseError("witness computation supports up to 128 letters");

  struct Cell {
    int count = 0;
    Mask mask = 0;
  };
  std::vector<Cell> d(std::size_t(p + 1) * (p + 1));
  auto at = [&](int i, int j) -> Cell& {
    return d[std::size_t(i) * (p + 1) + j];
  };
  for (int len = 1; len <= p; ++len)
    for (int i = 0; i + len <= p; ++i) {
      int j = i + len;
      const Cell& drop = at(i + 1, j);
      Cell best{1 + drop.count, (Mask(1) << i) | drop.mask};
      for (int k = i + 1; k < j; ++k) {
        if (v[k] != v[i]) continue;
        const Cell& lhs = at(i + 1, k);
        const Cell& rhs = at(k + 1, j);
        int count = lhs.count + rhs.count;
        Mask mask = lhs.mask | rhs.mask;
        if (count < best.count || (count == best.count && mask < best.mask))
          best = {count, mask};
      }
      at(i, j) = best;
    }

  const Cell& root = at(0, p);
  DeletionSet positions;
  for (int i = 0; i < p; ++i)
    if ((root.mask >> i) & 1) positions.push_back(std::size_t(i));
  return {root.count, positions};
}

}  // namespace coxlen
