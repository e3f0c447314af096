#include "coxlen/deletion_search.hpp"

#include <atomic>
#include <thread>
#include <unordered_map>

#include "coxlen/errors.hpp"
#include "coxlen/rewrite.hpp"
#include "coxlen/tits_rep.hpp"

namespace coxlen::detail {

void BudgetCounter::spend(std::uint64_t n) {
  used += n;
  if (used > cap)
    throw SubsetBudgetExceeded("deletion-subset budget of " +
                               std::to_string(cap) + " candidates exhausted");
}

namespace {

// Above this many candidates the exact path switches to meet-in-the-middle.
constexpr std::uint64_t kMitmThreshold = 4'000'000;

std::uint64_t binom_capped(int n, int k, std::uint64_t cap) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) {
    if (r > cap / std::uint64_t(n - k + i)) return cap;
    r = r * std::uint64_t(n - k + i) / std::uint64_t(i);
    if (r >= cap) return cap;
  }
  return r;
}

// Prefix products of the generator matrices along the word:
//   prefix[i]  = M(u_0) ... M(u_{i-1})
//   rprefix[i] = M(u_{i-1}) ... M(u_0) = prefix[i]^{-1}  (involutions)
// so the segment product M(u_a) ... M(u_{b-1}) is rprefix[a] * prefix[b].
template <class S>
struct Arrays {
  int n = 0;
  std::vector<SquareMat<S>> gens, prefix, rprefix;

  static Arrays build(const RawWord& u, const CoxeterSystem& sys) {
    Arrays arr;
    arr.n = sys.rank();
    arr.gens = build_generator_matrices<S>(sys);
    std::size_t p = u.size();
    arr.prefix.reserve(p + 1);
    arr.rprefix.reserve(p + 1);
    arr.prefix.push_back(SquareMat<S>::identity(arr.n));
    arr.rprefix.push_back(SquareMat<S>::identity(arr.n));
    for (std::size_t i = 0; i < p; ++i) {
      const auto& m = arr.gens[Gen(u[i])];
      arr.prefix.push_back(arr.prefix[i].mul(m));
      arr.rprefix.push_back(m.mul(arr.rprefix[i]));
    }
    return arr;
  }

  SquareMat<S> segment(std::size_t a, std::size_t b) const {
    return rprefix[a].mul(prefix[b]);
  }

  // Product of the letters outside mask equals the identity?
  bool kept_is_identity(std::uint64_t mask, std::size_t p) const {
    SquareMat<S> acc = SquareMat<S>::identity(n);
    std::size_t pos = 0;
    for (std::size_t d = 0; d < p; ++d) {
      if (!((mask >> d) & 1)) continue;
      if (d > pos) acc = acc.mul(segment(pos, d));
      pos = d + 1;
    }
    if (pos < p) acc = acc.mul(segment(pos, p));
    return acc == SquareMat<S>::identity(n);
  }
};

double mat_distance(const SquareMat<double>& a, const SquareMat<double>& b) {
  double worst = 0.0;
  for (std::size_t i = 0; i < a.a.size(); ++i)
    worst = std::max(worst, std::abs(a.a[i] - b.a[i]));
  return worst;
}

RawWord word_minus_mask(const RawWord& u, std::uint64_t mask) {
  RawWord kept;
  kept.reserve(u.size());
  for (std::size_t i = 0; i < u.size(); ++i)
    if (!((mask >> i) & 1)) kept.push_back(u[i]);
  return kept;
}

// Leaf predicate: does the candidate cancel to the identity?  rp is the kept
// product strictly right of the smallest deleted position d; the candidate
// is the identity iff rp equals prefix[d]^{-1} = rprefix[d].
template <class S>
struct ExactLeaf {
  const Arrays<S>* arr;
  bool operator()(const SquareMat<S>& rp, std::size_t d,
                  std::uint64_t /*mask*/) const {
    return rp == arr->rprefix[d];
  }
};

// Float scan: the matrix comparison only screens candidates out.  Entries
// of long products grow into the thousands, where an absolute band is
// meaningless, so the reject threshold scales with the compared matrix and
// everything that survives is confirmed by the exact rewriting engine.
// False accepts are therefore impossible, and a false reject would need a
// relative rounding error above kFloatReject, orders of magnitude past what
// any 64-letter product can accumulate.
struct FloatLeaf {
  const Arrays<double>* arr;
  const RawWord* u;
  const CoxeterSystem* sys;
  const SearchLimits* limits;
  SearchStats* stats;
  double reject;  // relative to the magnitude of the compared matrix

  bool operator()(const SquareMat<double>& rp, std::size_t d,
                  std::uint64_t mask) const {
    const SquareMat<double>& want = arr->rprefix[d];
    double norm = 0.0;
    for (double e : want.a) norm = std::max(norm, std::abs(e));
    if (mat_distance(rp, want) > reject * (1.0 + norm)) return false;
    return is_identity(Word(word_minus_mask(*u, mask)), *sys, *limits, stats);
  }
};

// Colex-ordered recursive scan.  Levels pick deletion positions from the
// largest down, folding the segment right of each position into a running
// product, so a candidate costs about one matrix multiply.  Subsets are
// visited in increasing bitmask order, making the first hit colex-least.
template <class S, class Leaf>
class DirectScan {
 public:
  DirectScan(const RawWord& u, const Arrays<S>& arr, Leaf leaf,
             BudgetCounter& budget)
      : u_(u), arr_(arr), leaf_(leaf), budget_(budget) {}

  std::optional<std::uint64_t> find(int q) {
    reset(nullptr);
    run(q, /*stop_on_hit=*/true);
    return found_;
  }

  std::vector<std::uint64_t> all(int q) {
    std::vector<std::uint64_t> out;
    reset(&out);
    run(q, /*stop_on_hit=*/false);
    return out;
  }

  // Subsets of size q whose largest element is exactly top.
  std::optional<std::uint64_t> find_with_top(int q, std::size_t top) {
    reset(nullptr);
    stop_on_hit_ = true;
    std::size_t p = u_.size();
    SquareMat<S> rp = arr_.rprefix[top + 1].mul(arr_.prefix[p]);
    descend(q - 1, top, rp, std::uint64_t(1) << top);
    return found_;
  }

 private:
  void reset(std::vector<std::uint64_t>* collect) {
    found_.reset();
    collect_ = collect;
  }

  void run(int q, bool stop_on_hit) {
    stop_on_hit_ = stop_on_hit;
    std::size_t p = u_.size();
    if (q == 0) {
      budget_.spend(1);
      if (arr_.kept_is_identity(0, p)) {
        found_ = 0;
        if (collect_) collect_->push_back(0);
      }
      return;
    }
    if (std::size_t(q) > p) return;
    for (std::size_t d = std::size_t(q) - 1; d < p; ++d) {
      SquareMat<S> rp = arr_.rprefix[d + 1].mul(arr_.prefix[p]);
      if (descend(q - 1, d, rp, std::uint64_t(1) << d)) return;
    }
  }

  // Chooses the level-j deletion position below hi; rightR is the kept
  // product strictly right of hi.  Returns true to unwind after a hit.
  bool descend(int j, std::size_t hi, const SquareMat<S>& rightR,
               std::uint64_t partial) {
    if (j == 0) {
      budget_.spend(1);
      if (leaf_(rightR, hi, partial)) {
        if (!found_) found_ = partial;
        if (collect_) collect_->push_back(partial);
        return stop_on_hit_;
      }
      return false;
    }
    SquareMat<S> t = arr_.prefix[hi].mul(rightR);
    for (std::size_t d = std::size_t(j) - 1; d < hi; ++d) {
      SquareMat<S> rp = arr_.rprefix[d + 1].mul(t);
      if (descend(j - 1, d, rp, partial | (std::uint64_t(1) << d)))
        return true;
    }
    return false;
  }

  const RawWord& u_;
  const Arrays<S>& arr_;
  Leaf leaf_;
  BudgetCounter& budget_;
  bool stop_on_hit_ = true;
  std::optional<std::uint64_t> found_;
  std::vector<std::uint64_t>* collect_ = nullptr;
};

// Parallel wrapper over the top-level position of the exact direct scan.
// Tasks are claimed in ascending top-position order; worker-local hits are
// combined by minimum mask, so the result is schedule-independent.  A task
// whose top position exceeds an already-hit one is pruned: all its masks are
// numerically larger.
template <class S>
std::optional<std::uint64_t> direct_find_parallel(const RawWord& u,
                                                  const Arrays<S>& arr, int q,
                                                  int nthreads,
                                                  BudgetCounter& budget) {
  std::size_t p = u.size();
  const std::uint64_t remaining =
      budget.cap > budget.used ? budget.cap - budget.used : 0;
  std::atomic<std::size_t> next_top{std::size_t(q) - 1};
  std::atomic<std::size_t> best_top{SIZE_MAX};
  std::atomic<std::uint64_t> spent{0};
  std::atomic<bool> over_budget{false};
  std::vector<std::optional<std::uint64_t>> results(
      static_cast<std::size_t>(nthreads));

  auto worker = [&](int tid) {
    BudgetCounter local;  // uncapped; the shared counter enforces the cap
    DirectScan<S, ExactLeaf<S>> scan(u, arr, ExactLeaf<S>{&arr}, local);
    while (true) {
      std::size_t d = next_top.fetch_add(1);
      if (d >= p || over_budget.load(std::memory_order_relaxed)) return;
      if (d > best_top.load(std::memory_order_relaxed)) return;
      std::uint64_t before = local.used;
      auto hit = scan.find_with_top(q, d);
      std::uint64_t delta = local.used - before;
      if (spent.fetch_add(delta) + delta > remaining) {
        over_budget.store(true);
        return;
      }
      if (hit) {
        auto& best = results[std::size_t(tid)];
        best = best ? std::min(*best, *hit) : *hit;
        std::size_t cur = best_top.load();
        while (d < cur && !best_top.compare_exchange_weak(cur, d)) {
        }
      }
    }
  };

  std::vector<std::thread> pool;
  pool.reserve(std::size_t(nthreads));
  for (int t = 0; t < nthreads; ++t) pool.emplace_back(worker, t);
  for (auto& th : pool) th.join();

  budget.used += spent.load();
  if (over_budget.load() || budget.used > budget.cap)
    throw SubsetBudgetExceeded("deletion-subset budget of " +
                               std::to_string(budget.cap) +
                               " candidates exhausted");
  std::optional<std::uint64_t> best;
  for (const auto& r : results)
    if (r) best = best ? std::min(*best, *r) : *r;
  return best;
}

// Meet-in-the-middle for large C(p, q) on exact scalars.  The word splits at
// mid; every deletion pattern of the left half is keyed by its kept product,
// then right-half patterns are enumerated computing the inverse of their
// kept product directly (reversed multiplication of involutions), so a full
// candidate is the identity iff the two matrices coincide.  Hash hits are
// verified exactly before acceptance; the minimum combined mask wins.
template <class S>
std::optional<std::uint64_t> mitm_find(const RawWord& u, const Arrays<S>& arr,
                                       int q, BudgetCounter& budget) {
  const std::size_t p = u.size();
  const std::size_t mid = p / 2;
  const int amax = int(std::min<std::size_t>(std::size_t(q), mid));
  const int bmax = int(std::min<std::size_t>(std::size_t(q), p - mid));

  auto hash_mat = [](const SquareMat<S>& m) {
    std::string key;
    for (const auto& e : m.a) append_key(key, e);
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : key) {
      h ^= c;
      h *= 1099511628211ull;
    }
    return h;
  };

  // key -> (deletion count, mask) for every left-half pattern
  std::unordered_map<std::uint64_t,
                     std::vector<std::pair<int, std::uint64_t>>>
      table;

  {
    // DFS over positions [0, mid), keeping or deleting each.
    struct Frame {
      std::size_t idx;
      int dels;
      std::uint64_t mask;
      SquareMat<S> prod;
    };
    std::vector<Frame> stack;
    stack.push_back({0, 0, 0, SquareMat<S>::identity(arr.n)});
    while (!stack.empty()) {
      Frame f = std::move(stack.back());
      stack.pop_back();
      if (f.idx == mid) {
        if (f.dels + bmax >= q) {
          budget.spend(1);
          table[hash_mat(f.prod)].emplace_back(f.dels, f.mask);
        }
        continue;
      }
      if (f.dels < amax)
        stack.push_back(
            {f.idx + 1, f.dels + 1, f.mask | (std::uint64_t(1) << f.idx),
             f.prod});
      stack.push_back({f.idx + 1, f.dels, f.mask,
                       f.prod.mul(arr.gens[Gen(u[f.idx])])});
    }
  }

  std::optional<std::uint64_t> best;
  {
    // DFS over positions [mid, p) processed right to left; prod accumulates
    // the INVERSE of the kept product.
    struct Frame {
      std::size_t idx;  // next position to process, moving down; mid-1 = done
      int dels;
      std::uint64_t mask;
      SquareMat<S> prod;
    };
    std::vector<Frame> stack;
    stack.push_back({p - 1, 0, 0, SquareMat<S>::identity(arr.n)});
    if (mid == p) stack.clear();
    while (!stack.empty()) {
      Frame f = std::move(stack.back());
      stack.pop_back();
      if (f.idx + 1 == mid) {  // all right positions decided
        int need = q - f.dels;
        if (need < 0 || need > amax) continue;
        budget.spend(1);
        auto it = table.find(hash_mat(f.prod));
        if (it == table.end()) continue;
        for (const auto& [a, lmask] : it->second) {
          if (a != need) continue;
          std::uint64_t mask = lmask | f.mask;
          if (best && *best <= mask) continue;
          if (arr.kept_is_identity(mask, p)) best = mask;
        }
        continue;
      }
      if (f.dels < bmax)
        stack.push_back(
            {f.idx - 1, f.dels + 1, f.mask | (std::uint64_t(1) << f.idx),
             f.prod});
      stack.push_back({f.idx - 1, f.dels, f.mask,
                       f.prod.mul(arr.gens[Gen(u[f.idx])])});
    }
  }
  return best;
}

template <class S>
std::optional<std::uint64_t> exact_find(const RawWord& u,
                                        const CoxeterSystem& sys, int q,
                                        const SearchLimits& limits,
                                        BudgetCounter& budget) {
  Arrays<S> arr = Arrays<S>::build(u, sys);
  std::uint64_t cands = binom_capped(int(u.size()), q, UINT64_MAX);
  if (cands > kMitmThreshold && u.size() >= 16)
    return mitm_find<S>(u, arr, q, budget);
  int nthreads = std::max(1, limits.threads);
  if (nthreads > 1 && q >= 2 && cands > 10'000)
    return direct_find_parallel<S>(u, arr, q, nthreads, budget);
  DirectScan<S, ExactLeaf<S>> scan(u, arr, ExactLeaf<S>{&arr}, budget);
  return scan.find(q);
}

}  // namespace

std::optional<std::uint64_t> find_deletion_mask(const Word& reduced,
                                                const CoxeterSystem& sys,
                                                int q,
                                                const SearchLimits& limits,
                                                BudgetCounter& budget,
                                                SearchStats* stats) {
  const RawWord& u = reduced.raw();
  if (u.size() > 64)
    throw SubsetBudgetExceeded(
        "deletion search supports reduced words up to 64 letters, got " +
        std::to_string(u.size()));
  budget.cap = limits.max_subsets;
  if (sys.has_exact_scalars()) {
    try {
      return exact_find<Quad64>(u, sys, q, limits, budget);
    } catch (const RingOverflow&) {
      return exact_find<QuadBig>(u, sys, q, limits, budget);
    }
  }
  Arrays<double> arr = Arrays<double>::build(u, sys);
  FloatLeaf leaf{&arr,  &u, &sys, &limits, stats,
                 kFloatReject * (1.0 + double(u.size()))};
  DirectScan<double, FloatLeaf> scan(u, arr, leaf, budget);
  return scan.find(q);
}

std::vector<std::uint64_t> all_deletion_masks(const Word& reduced,
                                              const CoxeterSystem& sys, int q,
                                              const SearchLimits& limits,
                                              BudgetCounter& budget,
                                              SearchStats* stats) {
  const RawWord& u = reduced.raw();
  if (u.size() > 64)
    throw SubsetBudgetExceeded(
        "deletion search supports reduced words up to 64 letters, got " +
        std::to_string(u.size()));
  budget.cap = limits.max_subsets;
  if (sys.has_exact_scalars()) {
    try {
      Arrays<Quad64> arr = Arrays<Quad64>::build(u, sys);
      DirectScan<Quad64, ExactLeaf<Quad64>> scan(
          u, arr, ExactLeaf<Quad64>{&arr}, budget);
      return scan.all(q);
    } catch (const RingOverflow&) {
      Arrays<QuadBig> arr = Arrays<QuadBig>::build(u, sys);
      DirectScan<QuadBig, ExactLeaf<QuadBig>> scan(
          u, arr, ExactLeaf<QuadBig>{&arr}, budget);
      return scan.all(q);
    }
  }
  Arrays<double> arr = Arrays<double>::build(u, sys);
  FloatLeaf leaf{&arr,  &u, &sys, &limits, stats,
                 kFloatReject * (1.0 + double(u.size()))};
  DirectScan<double, FloatLeaf> scan(u, arr, leaf, budget);
  return scan.all(q);
}

bool mask_deletes_to_identity(const Word& reduced, const CoxeterSystem& sys,
                              std::uint64_t mask, const SearchLimits& limits,
                              SearchStats* stats) {
  Word kept(word_minus_mask(reduced.raw(), mask));
  try {
    return matrix_is_identity(kept, sys);
  } catch (const PrecisionInconclusive&) {
    return is_identity(kept, sys, limits, stats);
  }
}

}  // namespace coxlen::detail
