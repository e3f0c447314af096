#pragma once

// Test-side reference implementations.  Each one recomputes a quantity the
// library also computes, by the most direct method available and without
// sharing any code with the library's engines, so agreement is meaningful.

#include <cstdint>
#include <map>
#include <queue>
#include <set>
#include <stdexcept>
#include <vector>

#include "coxlen/coxeter_system.hpp"
#include "coxlen/word.hpp"

// Word literal from 1-based letters; the Word constructors themselves are
// ambiguous for brace lists of ints.
inline coxlen::Word W(std::initializer_list<int> one_based) {
  return coxlen::Word(std::vector<int>(one_based));
}

namespace oracle {

using coxlen::CoxeterSystem;
using coxlen::Gen;
using coxlen::RawWord;
using coxlen::Word;

// Stack-based free cancellation.
inline RawWord free_reduce(const RawWord& w) {
  RawWord out;
  for (char c : w) {
    if (!out.empty() && out.back() == c)
      out.pop_back();
    else
      out.push_back(c);
  }
  return out;
}

// Reflection length in the universal group straight from the deletion
// characterization: smallest popcount over all subsets whose removal leaves
// a word that freely cancels away.  Exponential; keep inputs under ~20.
inline int universal_lrn(const RawWord& w0) {
  RawWord w = free_reduce(w0);
  int p = int(w.size());
  if (p == 0) return 0;
  if (p > 22) throw std::invalid_argument("universal_lrn oracle cap is 22");
  int best = p;
  for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << p); ++mask) {
    int pc = __builtin_popcountll(mask);
    if (pc >= best) continue;
    RawWord kept;
    for (int i = 0; i < p; ++i)
      if (!(mask >> i & 1)) kept.push_back(w[std::size_t(i)]);
    if (free_reduce(kept).empty()) best = pc;
  }
  return best;
}

// All words one elementary rewrite away: nil deletions plus braid-block
// replacements, both recomputed from the label matrix here.
inline std::vector<RawWord> neighbors(const RawWord& w,
                                      const CoxeterSystem& sys) {
  std::vector<RawWord> out;
  for (std::size_t i = 0; i + 1 < w.size(); ++i) {
    if (w[i] == w[i + 1]) {
      RawWord nb = w;
      nb.erase(i, 2);
      out.push_back(std::move(nb));
    }
  }
  for (std::size_t i = 0; i + 1 < w.size(); ++i) {
    char a = w[i], b = w[i + 1];
    if (a == b) continue;
    int m = sys.label(Gen(a), Gen(b));
    if (m == CoxeterSystem::kInfinity || i + std::size_t(m) > w.size())
      continue;
    bool block = true;
    for (int t = 0; t < m; ++t)
      if (w[i + std::size_t(t)] != (t % 2 == 0 ? a : b)) block = false;
    if (!block) continue;
    RawWord nb = w;
    for (int t = 0; t < m; ++t) nb[i + std::size_t(t)] = t % 2 == 0 ? b : a;
    out.push_back(std::move(nb));
  }
  return out;
}

// Word-problem test by plain breadth-first search over all rewrites, with
// no cancellation strategy at all.
inline bool is_identity_bfs(const RawWord& w, const CoxeterSystem& sys,
                            std::size_t cap = 500000) {
  std::set<RawWord> seen{w};
  std::queue<RawWord> q;
  q.push(w);
  while (!q.empty()) {
    RawWord cur = q.front();
    q.pop();
    if (cur.empty()) return true;
    for (RawWord& nb : neighbors(cur, sys)) {
      if (!seen.insert(nb).second) continue;
      if (seen.size() > cap)
        throw std::runtime_error("is_identity_bfs oracle cap exceeded");
      q.push(std::move(nb));
    }
  }
  return false;
}

// Reflection length by subset enumeration over the given word, each
// candidate checked with the search above.  Strictly for short words.
inline int reflection_length_brute(const RawWord& w, const CoxeterSystem& sys) {
  int p = int(w.size());
  if (p > 12) throw std::invalid_argument("reflection_length_brute cap is 12");
  for (int q = p % 2; q <= p; q += 2) {
    for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << p); ++mask) {
      if (__builtin_popcountll(mask) != q) continue;
      RawWord kept;
      for (int i = 0; i < p; ++i)
        if (!(mask >> i & 1)) kept.push_back(w[std::size_t(i)]);
      if (is_identity_bfs(kept, sys)) return q;
    }
  }
  throw std::logic_error("reflection_length_brute: no subset worked");
}

// Fewest braid rewrites to reach the empty word, by uniform-cost search
// (nil edges free, braid edges cost one).
inline int min_braid_moves(const RawWord& w, const CoxeterSystem& sys,
                           std::size_t cap = 500000) {
  std::map<RawWord, int> dist{{w, 0}};
  using Entry = std::pair<int, RawWord>;
  std::priority_queue<Entry, std::vector<Entry>, std::greater<>> pq;
  pq.push({0, w});
  while (!pq.empty()) {
    auto [d, cur] = pq.top();
    pq.pop();
    if (d > dist[cur]) continue;
    if (cur.empty()) return d;
    for (RawWord& nb : neighbors(cur, sys)) {
      bool is_nil = nb.size() + 2 == cur.size();
      int nd = d + (is_nil ? 0 : 1);
      auto it = dist.find(nb);
      if (it != dist.end() && it->second <= nd) continue;
      dist[nb] = nd;
      if (dist.size() > cap)
        throw std::runtime_error("min_braid_moves oracle cap exceeded");
      pq.push({nd, std::move(nb)});
    }
  }
  throw std::invalid_argument("min_braid_moves: word is not the identity");
}

// Deterministic test RNG (64-bit LCG, high bits).
struct Lcg {
  std::uint64_t state;
  explicit Lcg(std::uint64_t seed) : state(seed) {}
  std::uint64_t next(std::uint64_t bound) {
    state = state * 6364136223846793005ull + 1442695040888963407ull;
    return (state >> 33) % bound;
  }
  RawWord word(int rank, std::size_t len) {
    RawWord w;
    for (std::size_t i = 0; i < len; ++i)
      w.push_back(char(next(std::uint64_t(rank))));
    return w;
  }
};

}  // namespace oracle
