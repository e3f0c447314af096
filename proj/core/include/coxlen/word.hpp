#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "coxlen/coxeter_system.hpp"

namespace coxlen {

// Internal word storage: one byte per letter, 0-based generator indices.
// std::string gives cheap hashing and copies for the orbit searches.
using RawWord = std::string;

/**
 * A word in the generators of a Coxeter system.  Letters are stored 0-based;
 * all parsing and rendering is 1-based.  The empty word represents the
 * identity.  Immutable value type.
 */
class Word {
 public:
  Word() = default;
  explicit Word(RawWord letters) : letters_(std::move(letters)) {}
  explicit Word(const std::vector<int>& one_based);

  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  Gen at(std::size_t i) const { return Gen(letters_[i]); }
  const RawWord& raw() const { return letters_; }

  // 1-based copies of the letters.
  std::vector<int> indices() const;
  // Space separated 1-based indices, e.g. "1 2 1".  Empty word renders as "".
  std::string render() const;

  Word concat(const Word& other) const;
  Word pow(int exponent) const;

  bool operator==(const Word&) const = default;
  auto operator<=>(const Word&) const = default;

 private:
  RawWord letters_;
};

// Throws ParseError unless every letter indexes a generator of sys.
void validate_word(const Word& w, const CoxeterSystem& sys);

// Whitespace separated 1-based generator tokens, each a decimal index with
// an optional leading 's' ("1 2 1" or "s1 s2 s1").  Empty input is the
// identity.  Throws ParseError on malformed tokens or out-of-range indices.
Word parse_word(std::string_view text, const CoxeterSystem& sys);

// Extended form used by the CLI: factors separated by whitespace, each either
// a generator token as in parse_word or a power "(<digits>)^<exp>" whose
// digits are single-character generator indices, e.g. "(123)^4 1 2".
// Exponents must be >= 0.  Rank must be <= 9 to use the power form.
Word parse_word_powers(std::string_view text, const CoxeterSystem& sys);

// (s_1 s_2 ... s_n)^lambda s_1 ... s_r for 0 <= r <= n.
Word coxeter_power_word(const CoxeterSystem& sys, int lambda, int r);

}  // namespace coxlen
