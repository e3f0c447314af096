#include "cli/cache.hpp"

#include <fstream>
#include <ostream>

#include <nlohmann/json.hpp>

namespace coxlen::cli {
namespace {

using nlohmann::json;

std::string key_of(const std::string& digest, const std::string& word) {
  return digest + '\n' + word;  // neither part can contain a newline
}

}  // namespace

ResultCache::ResultCache(std::string path, std::ostream& warn)
    : path_(std::move(path)) {
  if (path_.empty()) return;
  std::ifstream in(path_);
  if (!in) return;  // no file yet; first record() creates it
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    json j = json::parse(line, nullptr, /*allow_exceptions=*/false);
    bool ok = j.is_object() && j.contains("group_hash") &&
              j["group_hash"].is_string() && j.contains("canonical_word") &&
              j["canonical_word"].is_string() && j.contains("verdicts") &&
              j["verdicts"].is_object();
    CacheVerdicts v;
    if (ok) {
      const json& verd = j["verdicts"];
      for (const auto& [name, value] : verd.items()) {
        if (name == "is_identity" && value.is_boolean())
          v.is_identity = value.get<bool>();
        else if (name == "reflection_length" && value.is_number_integer())
          v.reflection_length = value.get<long long>();
        else
          ok = false;
      }
    }
    if (!ok) {
      warn << "warning: " << path_ << ':' << lineno
           << ": skipping corrupt cache line\n";
      continue;
    }
    CacheVerdicts& slot = map_[key_of(j["group_hash"].get<std::string>(),
                                      j["canonical_word"].get<std::string>())];
    if (v.is_identity) slot.is_identity = v.is_identity;
    if (v.reflection_length) slot.reflection_length = v.reflection_length;
  }
}

std::optional<CacheVerdicts> ResultCache::lookup(
    const std::string& digest, const std::string& canonical_word) {
  if (!enabled()) return std::nullopt;
  std::lock_guard<std::mutex> lock(mu_);
  auto it = map_.find(key_of(digest, canonical_word));
  if (it == map_.end()) return std::nullopt;
  return it->second;
}

void ResultCache::record(const std::string& digest,
                         const std::string& canonical_word,
                         const CacheVerdicts& v) {
  if (!enabled()) return;
  std::lock_guard<std::mutex> lock(mu_);
  CacheVerdicts& slot = map_[key_of(digest, canonical_word)];
  json verd = json::object();
  if (v.is_identity && !slot.is_identity) {
    slot.is_identity = v.is_identity;
    verd["is_identity"] = *v.is_identity;
  }
  if (v.reflection_length && !slot.reflection_length) {
    slot.reflection_length = v.reflection_length;
    verd["reflection_length"] = *v.reflection_length;
  }
  if (verd.empty()) return;
  json j{{"group_hash", digest},
         {"canonical_word", canonical_word},
         {"verdicts", verd}};
  std::ofstream app(path_, std::ios::app);
  if (!app) return;
  std::string line = j.dump();
  line += '\n';
  app.write(line.data(), std::streamsize(line.size()));
}

}  // namespace coxlen::cli
