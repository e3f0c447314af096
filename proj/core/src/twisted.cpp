#include "coxlen/twisted.hpp"

#include <set>

#include "coxlen/errors.hpp"
#include "coxlen/universal.hpp"

namespace coxlen {
namespace {

bool freely_reduced(const RawWord& w, std::size_t lo, std::size_t hi) {
  for (std::size_t i = lo; i + 1 < hi; ++i)
    if (w[i] == w[i + 1]) return false;
  return true;
}

// Alternating word over exactly two distinct letters?
bool two_letter_alternating(const RawWord& w, std::size_t lo, std::size_t hi) {
  if (hi - lo < 2) return false;
  char a = w[lo], b = w[lo + 1];
  if (a == b) return false;
  for (std::size_t i = lo; i < hi; ++i)
    if (w[i] != ((i - lo) % 2 == 0 ? a : b)) return false;
  return true;
}

struct Matcher {
  const RawWord& w;
  std::set<std::pair<std::size_t, std::size_t>> dead;
  std::vector<TwistedLayer> layers;

  bool match(std::size_t lo, std::size_t hi) {
    if (hi - lo == 1) return true;
    if (dead.count({lo, hi})) return false;
    std::size_t maxlen = (hi - lo - 1) / 2;
    for (std::size_t len = maxlen; len >= 1; --len) {
      // condition 1: suffix block is the reversed prefix block
      if (freely_reduced(w, lo, lo + len)) {
        bool rev = true;
        for (std::size_t t = 0; t < len; ++t)
          if (w[lo + t] != w[hi - 1 - t]) {
            rev = false;
            break;
          }
        if (rev && try_layer(lo, hi, len, 1)) return true;
      }
      // condition 2: alternating two-letter block, swapped partner on odd
      // length, equal partner on even length
      if (two_letter_alternating(w, lo, lo + len)) {
        char a = w[lo], b = w[lo + 1];
        bool match2 = true;
        for (std::size_t t = 0; t < len; ++t) {
          char expect = w[lo + t];
          if (len % 2 == 1) expect = expect == a ? b : a;
          if (w[hi - len + t] != expect) {
            match2 = false;
            break;
          }
        }
        if (match2 && try_layer(lo, hi, len, 2)) return true;
      }
    }
    dead.insert({lo, hi});
    return false;
  }

  bool try_layer(std::size_t lo, std::size_t hi, std::size_t len, int cond) {
    layers.push_back({Word(w.substr(lo, len)), Word(w.substr(hi - len, len)),
                      cond});
    if (match(lo + len, hi - len)) return true;
    layers.pop_back();
    return false;
  }
};

}  // namespace

std::optional<TwistedPalindrome> is_twisted_palindrome(const Word& w) {
  const RawWord& raw = w.raw();
  if (raw.size() % 2 == 0 || raw.empty()) return std::nullopt;
  Matcher m{raw, {}, {}};
  if (!m.match(0, raw.size())) return std::nullopt;
  TwistedPalindrome tp;
  tp.layers = std::move(m.layers);
  std::size_t pos = 0;
  for (const auto& layer : tp.layers) pos += layer.left.size();
  tp.center_pos = pos;
  return tp;
}

MiddleDeletionReport verify_middle_deletion_at(const Word& w,
                                               std::size_t center_pos) {
  if (center_pos >= w.size())
    throw ParseError("center position out of range");
  MiddleDeletionReport rep;
  rep.twisted = true;
  rep.center_pos = center_pos;
  rep.full_len = universal_reflection_length(w);
  RawWord rest = w.raw();
  rest.erase(center_pos, 1);
  rep.deleted_len = universal_reflection_length(Word(std::move(rest)));
  rep.drop_is_one = rep.deleted_len == rep.full_len - 1;
  return rep;
}

MiddleDeletionReport verify_middle_deletion(const Word& w) {
  auto tp = is_twisted_palindrome(w);
  if (!tp) return {};
  return verify_middle_deletion_at(w, tp->center_pos);
}

std::vector<GeneratedPalindrome> generate_twisted_palindromes(
    int rank, int max_depth, int count, std::uint64_t seed) {
  if (rank < 2) throw ParseError("generator needs rank >= 2");
  if (max_depth < 1) throw ParseError("max_depth must be >= 1");
  if (count < 0) throw ParseError("count must be >= 0");

  std::uint64_t state = seed;
  auto next = [&state](std::uint64_t bound) {
    state = state * 6364136223846793005ull + 1442695040888963407ull;
    return (state >> 33) % bound;
  };
  const std::uint64_t R = std::uint64_t(rank);

  std::vector<GeneratedPalindrome> out;
  out.reserve(std::size_t(count));
  for (int s = 0; s < count; ++s) {
    int depth = 1 + int(next(std::uint64_t(max_depth)));
    RawWord left;
    std::vector<RawWord> partners;  // partner_1 ... partner_n; the word ends
                                    // with partner_n ... partner_1
    int cond2_layers = 0;
    // Keeping the assembled word freely reduced makes it the unique reduced
    // spelling of its element, so each layer is sampled against two
    // adjacency constraints: its block must not start with the previous
    // block's last letter, and its partner must not end with the previous
    // partner's first letter.
    int no_first = -1, no_last = -1;
    for (int layer = 0; layer < depth; ++layer) {
      RawWord block, partner;
      bool ok = false;
      bool cond1 = true;
      for (int attempt = 0; attempt < 64 && !ok; ++attempt) {
        block.clear();
        partner.clear();
        // At rank 2 every layer must satisfy condition 1: a condition-2
        // layer forbids both letters inside it (its block ends and its
        // partner starts with different letters), leaving nothing legal for
        // the next block or the center.
        cond1 = rank == 2 ? true : next(2) == 0;
        if (cond1) {
          // condition 1: freely reduced block, partner = reversal
          std::size_t len = 1 + next(4);
          RawWord b;
          b.push_back(char(next(R)));
          while (b.size() < len) {
            char c = char(next(R));
            if (c == b.back()) continue;
            b.push_back(c);
          }
          block = b;
          partner.assign(block.rbegin(), block.rend());
        } else {
          // condition 2: two-letter alternating block; odd lengths pair
          // with the letter swap, even lengths with the block itself
          char a = char(next(R));
          char b = char(next(R));
          while (b == a) b = char(next(R));
          std::size_t len = 2 + next(4);
          for (std::size_t t = 0; t < len; ++t)
            block.push_back(t % 2 == 0 ? a : b);
          partner = block;
          if (len % 2 == 1)
            for (char& c : partner) c = (c == a) ? b : a;
        }
        ok = (no_first < 0 || block.front() != char(no_first)) &&
             (no_last < 0 || partner.back() != char(no_last));
      }
      if (!ok) {
        // Deterministic fallback: a one-letter condition-1 layer dodging
        // both forbidden letters.  One always exists: condition-1 layers
        // forbid a single letter (their block ends and partner starts with
        // the same one), and rank >= 3 spares a letter even when two are
        // forbidden.
        block.clear();
        partner.clear();
        int z = 0;
        while (z == no_first || z == no_last) ++z;
        block.push_back(char(z));
        partner = block;
        cond1 = true;
      }
      if (!cond1) ++cond2_layers;
      no_first = int(block.back());
      no_last = int(partner.front());
      left += block;
      partners.push_back(std::move(partner));
    }
    GeneratedPalindrome g;
    g.center_pos = left.size();
    g.layers = depth;
    g.cond2_layers = cond2_layers;
    RawWord word = left;
    char before = left.back();
    char after = partners.back().front();
    char c;
    do {
      c = char(next(R));
    } while (c == before || c == after);
    word.push_back(c);
    for (auto it = partners.rbegin(); it != partners.rend(); ++it) word += *it;
    g.word = Word(std::move(word));
    out.push_back(std::move(g));
  }
  return out;
}


}  // namespace coxlen
