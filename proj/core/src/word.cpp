#include "coxlen/word.hpp"

#include <cctype>
#include <charconv>
#include <sstream>

#include "coxlen/errors.hpp"

namespace coxlen {

Word::Word(const std::vector<int>& one_based) {
  letters_.reserve(one_based.size());
  for (int v : one_based) {
    if (v < 1 || v > 255)
      throw ParseError("generator index " + std::to_string(v) +
                       " out of range");
    letters_.push_back(char(v - 1));
  }
}

std::vector<int> Word::indices() const {
  std::vector<int> out;
  out.reserve(letters_.size());
  for (char c : letters_) out.push_back(int(static_cast<unsigned char>(c)) + 1);
  return out;
}

std::string Word::render() const {
  std::ostringstream os;
  bool first = true;
  for (char c : letters_) {
    if (!first) os << ' ';
    os << int(static_cast<unsigned char>(c)) + 1;
    first = false;
  }
  return os.str();
}

Word Word::concat(const Word& other) const {
  return Word(letters_ + other.letters_);
}

Word Word::pow(int exponent) const {
  if (exponent < 0) throw ParseError("word exponent must be >= 0");
  RawWord out;
  out.reserve(letters_.size() * std::size_t(exponent));
  for (int i = 0; i < exponent; ++i) out += letters_;
  return Word(std::move(out));
}

void validate_word(const Word& w, const CoxeterSystem& sys) {
  for (std::size_t i = 0; i < w.size(); ++i)
    if (int(w.at(i)) >= sys.rank())
      throw ParseError("letter " + std::to_string(int(w.at(i)) + 1) +
                       " exceeds rank " + std::to_string(sys.rank()));
}

namespace {

Gen parse_gen_token(std::string_view tok, const CoxeterSystem& sys) {
  if (!tok.empty() && (tok.front() == 's' || tok.front() == 'S'))
    tok.remove_prefix(1);
  int v = 0;
  auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc{} || p != tok.data() + tok.size() || v < 1)
    throw ParseError("bad generator token '" + std::string(tok) + "'");
  if (v > sys.rank())
    throw ParseError("generator index " + std::to_string(v) +
                     " exceeds rank " + std::to_string(sys.rank()));
  return Gen(v - 1);
}

std::vector<std::string_view> tokenize(std::string_view text) {
  std::vector<std::string_view> toks;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i])))
      ++i;
    std::size_t start = i;
    while (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i])))
      ++i;
    if (i > start) toks.push_back(text.substr(start, i - start));
  }
  return toks;
}

}  // namespace

Word parse_word(std::string_view text, const CoxeterSystem& sys) {
  RawWord letters;
  for (auto tok : tokenize(text)) letters.push_back(char(parse_gen_token(tok, sys)));
  return Word(std::move(letters));
}

Word parse_word_powers(std::string_view text, const CoxeterSystem& sys) {
  RawWord letters;
  for (auto tok : tokenize(text)) {
    if (tok.front() == '(') {
      auto close = tok.find(')');
      if (close == std::string_view::npos || close + 1 >= tok.size() ||
          tok[close + 1] != '^')
        throw ParseError("power factor must look like (123)^4, got '" +
                         std::string(tok) + "'");
      if (sys.rank() > 9)
        throw ParseError("power syntax requires rank <= 9");
      RawWord base;
      for (std::size_t i = 1; i < close; ++i) {
        char c = tok[i];
        if (c < '1' || c > '9')
          throw ParseError("power base digits must be generator indices");
        if (c - '0' > sys.rank())
          throw ParseError("generator index " + std::string(1, c) +
                           " exceeds rank " + std::to_string(sys.rank()));
        base.push_back(char(c - '1'));
      }
      auto exp_tok = tok.substr(close + 2);
      int e = 0;
      auto [p, ec] =
          std::from_chars(exp_tok.data(), exp_tok.data() + exp_tok.size(), e);
      if (ec != std::errc{} || p != exp_tok.data() + exp_tok.size() || e < 0)
        throw ParseError("bad exponent in '" + std::string(tok) + "'");
      for (int i = 0; i < e; ++i) letters += base;
    } else {
      letters.push_back(char(parse_gen_token(tok, sys)));
    }
  }
  return Word(std::move(letters));
}

Word coxeter_power_word(const CoxeterSystem& sys, int lambda, int r) {
  if (lambda < 0) throw ParseError("lambda must be >= 0");
  if (r < 0 || r > sys.rank())
    throw ParseError("r must lie in [0, rank]");
  RawWord cox;
  for (int i = 0; i < sys.rank(); ++i) cox.push_back(char(i));
  RawWord out;
  for (int i = 0; i < lambda; ++i) out += cox;
  out.append(cox, 0, std::size_t(r));
  return Word(std::move(out));
}

}  // namespace coxlen
