#pragma once

#include <cstddef>
#include <cstdint>

namespace coxlen {

// Budgets for the exhaustive searches.  Every potentially unbounded loop in
// the library is guarded by one of these fields and fails with a typed error
// instead of hanging.
struct SearchLimits {
  // Maximum number of distinct words the braid-orbit walker may visit.
  std::size_t max_orbit = 2'000'000;
  // Maximum number of deletion subsets tested in one length query.
  std::uint64_t max_subsets = 200'000'000;
  // Capacity of the memoized identity-verdict cache (entries).
  std::size_t max_cache = 1'000'000;
  // Deletion sets up to this size get their subsets checked exhaustively in
  // verify_after_dyer; larger sets are sampled.
  int after_dyer_max = 6;
  // Worker threads for the deletion-subset scan (results are independent of
  // the schedule; 1 disables spawning).
  int threads = 1;
};

// Counters surfaced to the CLI stats block.  All fields are cumulative.
struct SearchStats {
  std::uint64_t subsets_tested = 0;
  std::uint64_t orbit_states = 0;
  std::uint64_t cache_hits = 0;

  void add(const SearchStats& o) {
    subsets_tested += o.subsets_tested;
    orbit_states += o.orbit_states;
    cache_hits += o.cache_hits;
  }
};

}  // namespace coxlen
