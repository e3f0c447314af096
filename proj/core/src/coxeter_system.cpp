#include "coxlen/coxeter_system.hpp"

#include <cctype>
#include <charconv>
#include <cstdio>
#include <nlohmann/json.hpp>
#include <sstream>

#include "coxlen/errors.hpp"

namespace coxlen {
namespace {

int parse_label_token(std::string_view tok) {
  if (tok == "inf") return CoxeterSystem::kInfinity;
  int v = 0;
  auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc{} || p != tok.data() + tok.size())
    throw ParseError("bad numeric token '" + std::string(tok) + "'");
  return v;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    auto pos = s.find(sep, start);
    if (pos == std::string_view::npos) {
      out.push_back(s.substr(start));
      return out;
    }
    out.push_back(s.substr(start, pos - start));
    start = pos + 1;
  }
}

}  // namespace

CoxeterSystem::CoxeterSystem(int rank, std::vector<int> matrix)
    : rank_(rank), m_(std::move(matrix)) {
  if (rank_ < 1 || rank_ > 255)
    throw ParseError("rank must be between 1 and 255");
  if (m_.size() != std::size_t(rank_) * rank_)
    throw ParseError("order matrix must be rank x rank");
  for (int a = 0; a < rank_; ++a) {
    for (int b = 0; b < rank_; ++b) {
      int v = m_[std::size_t(a) * rank_ + b];
      if (a == b) {
        if (v != 1) throw ParseError("diagonal entries must be 1");
      } else {
        if (v != kInfinity && v < 2)
          throw ParseError("off-diagonal labels must be >= 2 or infinite");
        if (v != m_[std::size_t(b) * rank_ + a])
          throw ParseError("order matrix must be symmetric");
      }
    }
  }
}

CoxeterSystem CoxeterSystem::universal(int n) {
  return single_braided(n, kInfinity);
}

CoxeterSystem CoxeterSystem::single_braided(int n, int k) {
  if (n < 1) throw ParseError("rank must be positive");
  std::vector<int> m(std::size_t(n) * n, k);
  for (int a = 0; a < n; ++a) m[std::size_t(a) * n + a] = 1;
  return CoxeterSystem(n, std::move(m));
}

CoxeterSystem CoxeterSystem::triangle(int p, int q, int r) {
  return CoxeterSystem(3, {1, p, q,  //
                           p, 1, r,  //
                           q, r, 1});
}

bool CoxeterSystem::is_universal() const {
  for (int a = 0; a < rank_; ++a)
    for (int b = a + 1; b < rank_; ++b)
      if (label(Gen(a), Gen(b)) != kInfinity) return false;
  return true;
}

int CoxeterSystem::uniform_label() const {
  if (rank_ < 2) return -1;
  int k = label(Gen(0), Gen(1));
  for (int a = 0; a < rank_; ++a)
    for (int b = a + 1; b < rank_; ++b)
      if (label(Gen(a), Gen(b)) != k) return -1;
  return k;
}

bool CoxeterSystem::has_exact_scalars() const {
  for (int a = 0; a < rank_; ++a)
    for (int b = a + 1; b < rank_; ++b) {
      int v = label(Gen(a), Gen(b));
      if (v != kInfinity && v != 2 && v != 3 && v != 4 && v != 6) return false;
    }
  return true;
}

std::string CoxeterSystem::digest() const {
  // FNV-1a over the canonical serialization; stable across runs.
  std::uint64_t h = 1469598103934665603ull;
  auto mix = [&h](std::uint64_t v) {
    for (int i = 0; i < 8; ++i) {
      h ^= (v >> (8 * i)) & 0xff;
      h *= 1099511628211ull;
    }
  };
  mix(std::uint64_t(rank_));
  for (int v : m_) mix(std::uint64_t(v));
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::string CoxeterSystem::describe() const {
  if (rank_ == 3)
    return "triangle:" + std::to_string(label(0, 1)) + ":" +
           std::to_string(label(0, 2)) + ":" + std::to_string(label(1, 2));
  bool single = true;
  int k = rank_ > 1 ? label(0, 1) : kInfinity;
  for (int a = 0; a < rank_ && single; ++a)
    for (int b = a + 1; b < rank_; ++b)
      if (label(Gen(a), Gen(b)) != k) {
        single = false;
        break;
      }
  if (single) {
    if (k == kInfinity) return "universal:" + std::to_string(rank_);
    return "single:" + std::to_string(rank_) + ":" + std::to_string(k);
  }
  std::ostringstream os;
  os << "matrix:[";
  for (int a = 0; a < rank_; ++a) {
    os << (a ? ";" : "");
    for (int b = 0; b < rank_; ++b) os << (b ? "," : "") << label(a, b);
  }
  os << "]";
  return os.str();
}

CoxeterSystem parse_group(std::string_view text) {
  // Trim surrounding whitespace.
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front())))
    text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back())))
    text.remove_suffix(1);
  if (text.empty()) throw ParseError("empty group description");

  if (text.front() == '{') {
    nlohmann::json j = nlohmann::json::parse(text, nullptr, false);
    if (j.is_discarded()) throw ParseError("malformed JSON group description");
    if (!j.contains("rank") || !j.contains("matrix"))
      throw ParseError("JSON group needs 'rank' and 'matrix'");
    int n = 0;
    try {
      n = j.at("rank").get<int>();
    } catch (const nlohmann::json::exception&) {
      throw ParseError("JSON 'rank' must be an integer");
    }
    if (!j.at("matrix").is_array() || int(j.at("matrix").size()) != n)
      throw ParseError("JSON 'matrix' must be a rank x rank array");
    std::vector<int> m;
    m.reserve(std::size_t(n) * n);
    for (const auto& row : j.at("matrix")) {
      if (!row.is_array() || int(row.size()) != n)
        throw ParseError("JSON 'matrix' must be a rank x rank array");
      for (const auto& cell : row) {
        if (!cell.is_number_integer())
          throw ParseError("matrix entries must be integers (0 = infinite)");
        m.push_back(cell.get<int>());
      }
    }
    return CoxeterSystem(n, std::move(m));
  }

  auto parts = split(text, ':');
  const auto& kind = parts[0];
  if (kind == "universal") {
    if (parts.size() != 2) throw ParseError("expected universal:<n>");
    return CoxeterSystem::universal(parse_label_token(parts[1]));
  }
  if (kind == "single") {
    if (parts.size() != 3) throw ParseError("expected single:<n>:<k>");
    return CoxeterSystem::single_braided(parse_label_token(parts[1]),
                                         parse_label_token(parts[2]));
  }
  if (kind == "triangle") {
    if (parts.size() != 4) throw ParseError("expected triangle:<p>:<q>:<r>");
    return CoxeterSystem::triangle(parse_label_token(parts[1]),
                                   parse_label_token(parts[2]),
                                   parse_label_token(parts[3]));
  }
  throw ParseError("unknown group form '" + std::string(kind) + "'");
}

}  // namespace coxlen
