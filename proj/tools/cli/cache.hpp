#pragma once

#include <cstdint>
#include <iosfwd>
#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>

namespace coxlen::cli {

struct CacheVerdicts {
  std::optional<bool> is_identity;
  std::optional<long long> reflection_length;
};

// Line-delimited JSON store of computed verdicts, keyed by group digest and
// canonical word.  The whole file is loaded up front; record() appends one
// line per new fact with a single buffered write, so concurrent writers
// interleave at line granularity.  Unparseable lines are skipped with a
// warning.  A cache hit can only ever short-circuit work, never change a
// result: values are looked up under the same key they were stored under.
class ResultCache {
 public:
  ResultCache() = default;  // disabled: lookups miss, records are dropped
  ResultCache(std::string path, std::ostream& warn);

  bool enabled() const { return !path_.empty(); }

  // Pure lookup; does not count a hit (call count_hit when a verdict is
  // actually consumed).
  std::optional<CacheVerdicts> lookup(const std::string& digest,
                                      const std::string& canonical_word);
  void count_hit() { ++hits_; }
  std::uint64_t hits() const { return hits_; }

  // Merges v into the stored entry and appends any genuinely new verdicts.
  void record(const std::string& digest, const std::string& canonical_word,
              const CacheVerdicts& v);

 private:
  std::string path_;
  std::unordered_map<std::string, CacheVerdicts> map_;
  std::uint64_t hits_ = 0;
  std::mutex mu_;
};

}  // namespace coxlen::cli
