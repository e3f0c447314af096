#include "coxlen/rewrite.hpp"

#include <algorithm>
#include <deque>
#include <list>
#include <mutex>
#include <unordered_map>
#include <unordered_set>

#include "coxlen/errors.hpp"

namespace coxlen {

RawWord nil_reduce(const RawWord& w) {
  RawWord stack;
  stack.reserve(w.size());
  for (char c : w) {
    if (!stack.empty() && stack.back() == c)
      stack.pop_back();
    else
      stack.push_back(c);
  }
  return stack;
}

bool has_nil_pair(const RawWord& w) {
  for (std::size_t i = 0; i + 1 < w.size(); ++i)
    if (w[i] == w[i + 1]) return true;
  return false;
}

namespace {

constexpr int kInf = CoxeterSystem::kInfinity;

// Calls fn(i, a, b, m) for every braid move applicable to x, in position
// order.  fn returns true to stop the enumeration early.
template <class Fn>
void for_each_braid(const RawWord& x, const CoxeterSystem& sys, Fn&& fn) {
  for (std::size_t i = 0; i + 1 < x.size(); ++i) {
    Gen a = Gen(x[i]), b = Gen(x[i + 1]);
    if (a == b) continue;
    int m = sys.label(a, b);
    if (m == kInf || i + std::size_t(m) > x.size()) continue;
    bool ok = true;
    for (int t = 2; t < m; ++t)
      if (Gen(x[i + t]) != (t % 2 == 0 ? a : b)) {
        ok = false;
        break;
      }
    if (!ok) continue;
    if (fn(i, a, b, m)) return;
  }
}

RawWord apply_braid(const RawWord& x, std::size_t i, Gen a, Gen b, int m) {
  RawWord y = x;
  for (int t = 0; t < m; ++t) y[i + t] = char(t % 2 == 0 ? b : a);
  return y;
}

class IdentityCache {
 public:
  std::optional<bool> get(const std::string& key) {
    std::lock_guard lk(mu_);
    auto it = map_.find(key);
    if (it == map_.end()) return std::nullopt;
    order_.splice(order_.begin(), order_, it->second.first);
    return it->second.second;
  }

  void put(const std::string& key, bool verdict, std::size_t cap) {
    if (cap == 0) return;
    std::lock_guard lk(mu_);
    auto it = map_.find(key);
    if (it != map_.end()) {
      order_.splice(order_.begin(), order_, it->second.first);
      it->second.second = verdict;
      return;
    }
    order_.push_front(key);
    map_.emplace(key, std::make_pair(order_.begin(), verdict));
    while (map_.size() > cap) {
      map_.erase(order_.back());
      order_.pop_back();
    }
  }

  void clear() {
    std::lock_guard lk(mu_);
    map_.clear();
    order_.clear();
  }

 private:
  std::mutex mu_;
  std::list<std::string> order_;
  std::unordered_map<std::string,
                     std::pair<std::list<std::string>::iterator, bool>>
      map_;
};

IdentityCache& verdict_cache() {
  static IdentityCache c;
  return c;
}

std::string cache_key(const CoxeterSystem& sys, const RawWord& w) {
  return sys.digest() + '|' + w;
}

using ParentMap = std::unordered_map<RawWord, std::pair<RawWord, Move>>;

// Breadth-first walk of the braid closure of a nil-free word.  Returns the
// first member found that admits a nil move, or nullopt when the whole
// closure is nil-free (which certifies that the word is S-reduced).
std::optional<RawWord> find_nil_in_closure(const RawWord& start,
                                           const CoxeterSystem& sys,
                                           const SearchLimits& limits,
                                           SearchStats* stats,
                                           ParentMap* parents) {
  std::unordered_set<RawWord> visited{start};
  std::deque<RawWord> queue{start};
  std::optional<RawWord> found;
  while (!queue.empty() && !found) {
    RawWord x = std::move(queue.front());
    queue.pop_front();
    for_each_braid(x, sys, [&](std::size_t i, Gen a, Gen b, int m) {
      RawWord y = apply_braid(x, i, a, b, m);
      if (visited.count(y)) return false;
      if (parents) (*parents)[y] = {x, Move{Move::Braid, i, a, b}};
      if (has_nil_pair(y)) {
        found = std::move(y);
        return true;
      }
      visited.insert(y);
      if (visited.size() > limits.max_orbit)
        throw OrbitLimitExceeded(limits.max_orbit);
      queue.push_back(std::move(y));
      return false;
    });
  }
  if (stats) stats->orbit_states += visited.size();
  return found;
}

// Nil-cancels w while recording the deletions as replayable moves.
RawWord stack_cancel_trace(const RawWord& w, MoveTrace& trace) {
  RawWord stack;
  stack.reserve(w.size());
  for (char c : w) {
    if (!stack.empty() && stack.back() == c) {
      trace.moves.push_back({Move::Nil, stack.size() - 1, Gen(c), Gen(c)});
      stack.pop_back();
    } else {
      stack.push_back(c);
    }
  }
  return stack;
}

}  // namespace

bool is_identity(const Word& w, const CoxeterSystem& sys,
                 const SearchLimits& limits, SearchStats* stats) {
  validate_word(w, sys);
  RawWord cur = nil_reduce(w.raw());
  std::vector<std::string> pending;
  bool verdict;
  while (true) {
    if (cur.empty()) {
      verdict = true;
      break;
    }
    std::string key = cache_key(sys, cur);
    if (auto hit = verdict_cache().get(key)) {
      if (stats) ++stats->cache_hits;
      verdict = *hit;
      break;
    }
    pending.push_back(std::move(key));
    auto nxt = find_nil_in_closure(cur, sys, limits, stats, nullptr);
    if (!nxt) {
      verdict = false;  // cur is reduced and nonempty
      break;
    }
    cur = nil_reduce(*nxt);
  }
  for (auto& k : pending) verdict_cache().put(k, verdict, limits.max_cache);
  return verdict;
}

ReduceResult reduce(const Word& w, const CoxeterSystem& sys,
                    const SearchLimits& limits, SearchStats* stats) {
  validate_word(w, sys);
  MoveTrace trace;
  RawWord cur = stack_cancel_trace(w.raw(), trace);
  while (!cur.empty()) {
    ParentMap parents;
    auto nxt = find_nil_in_closure(cur, sys, limits, stats, &parents);
    if (!nxt) break;
    std::vector<Move> path;
    RawWord z = *nxt;
    while (z != cur) {
      const auto& [p, mv] = parents.at(z);
      path.push_back(mv);
      z = p;
    }
    for (auto it = path.rbegin(); it != path.rend(); ++it) {
      trace.moves.push_back(*it);
      ++trace.braid_count;
    }
    cur = stack_cancel_trace(*nxt, trace);
  }
  return {Word(std::move(cur)), std::move(trace)};
}

bool is_reduced(const Word& w, const CoxeterSystem& sys,
                const SearchLimits& limits, SearchStats* stats) {
  if (has_nil_pair(w.raw())) return false;
  return !find_nil_in_closure(w.raw(), sys, limits, stats, nullptr).has_value();
}

std::vector<Word> braid_orbit(const Word& w, const CoxeterSystem& sys,
                              const SearchLimits& limits, SearchStats* stats) {
  validate_word(w, sys);
  std::unordered_set<RawWord> visited{w.raw()};
  std::deque<RawWord> queue{w.raw()};
  while (!queue.empty()) {
    RawWord x = std::move(queue.front());
    queue.pop_front();
    for_each_braid(x, sys, [&](std::size_t i, Gen a, Gen b, int m) {
      RawWord y = apply_braid(x, i, a, b, m);
      if (visited.insert(y).second) {
        if (visited.size() > limits.max_orbit)
          throw OrbitLimitExceeded(limits.max_orbit);
        queue.push_back(std::move(y));
      }
      return false;
    });
  }
  if (stats) stats->orbit_states += visited.size();
  std::vector<Word> out;
  out.reserve(visited.size());
  for (const auto& r : visited) out.push_back(Word(r));
  std::sort(out.begin(), out.end());
  return out;
}

Word canonical_form(const Word& w, const CoxeterSystem& sys,
                    const SearchLimits& limits, SearchStats* stats) {
  Word red = reduce(w, sys, limits, stats).word;
  return braid_orbit(red, sys, limits, stats).front();
}

std::size_t minimal_braid_moves_to_identity(const Word& w,
                                            const CoxeterSystem& sys,
                                            const SearchLimits& limits,
                                            SearchStats* stats) {
  if (!is_identity(w, sys, limits, stats))
    throw NotIdentityError("word does not represent the identity");
  std::unordered_map<RawWord, std::size_t> dist;
  std::deque<std::pair<RawWord, std::size_t>> dq;
  dist.emplace(w.raw(), 0);
  dq.emplace_back(w.raw(), 0);
  auto relax = [&](RawWord&& y, std::size_t nd, bool front) {
    auto it = dist.find(y);
    if (it != dist.end() && it->second <= nd) return;
    dist[y] = nd;
    if (dist.size() > limits.max_orbit)
      throw OrbitLimitExceeded(limits.max_orbit);
    if (front)
      dq.emplace_front(std::move(y), nd);
    else
      dq.emplace_back(std::move(y), nd);
  };
  while (!dq.empty()) {
    auto [x, d] = std::move(dq.front());
    dq.pop_front();
    if (dist.at(x) != d) continue;  // superseded entry
    if (x.empty()) {
      if (stats) stats->orbit_states += dist.size();
      return d;
    }
    for (std::size_t i = 0; i + 1 < x.size(); ++i)
      if (x[i] == x[i + 1]) {
        RawWord y = x;
        y.erase(i, 2);
        relax(std::move(y), d, /*front=*/true);
      }
    for_each_braid(x, sys, [&](std::size_t i, Gen a, Gen b, int m) {
      relax(apply_braid(x, i, a, b, m), d + 1, /*front=*/false);
      return false;
    });
  }
  throw std::logic_error("identity word had no move path to the empty word");
}

std::optional<std::pair<int, int>> contains_braid_power_subword(
    const Word& w, const CoxeterSystem& sys) {
  for (int a = 0; a < sys.rank(); ++a)
    for (int b = 0; b < sys.rank(); ++b) {
      if (a == b) continue;
      int m = sys.label(Gen(a), Gen(b));
      if (m == kInf) continue;
      std::size_t need = 2 * std::size_t(m), got = 0;
      for (char ch : w.raw()) {
        Gen expect = (got % 2 == 0) ? Gen(a) : Gen(b);
        if (Gen(ch) == expect && ++got == need) break;
      }
      if (got == need) return std::make_pair(a + 1, b + 1);
    }
  return std::nullopt;
}

std::optional<RelationSubwordHit> orbit_has_relation_subword(
    const Word& w, const CoxeterSystem& sys, const SearchLimits& limits,
    SearchStats* stats) {
  for (const Word& x : braid_orbit(w, sys, limits, stats))
    if (auto pair = contains_braid_power_subword(x, sys))
      return RelationSubwordHit{x, pair->first, pair->second};
  return std::nullopt;
}

void clear_identity_cache() { verdict_cache().clear(); }

}  // namespace coxlen
