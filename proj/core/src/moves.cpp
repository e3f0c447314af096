#include "coxlen/moves.hpp"

#include "coxlen/errors.hpp"

namespace coxlen {
namespace {

// Length of the alternating a,b,a,b,... run starting at i.
std::size_t alternating_run(const RawWord& w, std::size_t i) {
  Gen a = Gen(w[i]);
  if (i + 1 >= w.size()) return 1;
  Gen b = Gen(w[i + 1]);
  if (a == b) return 1;
  std::size_t len = 2;
  while (i + len < w.size() &&
         Gen(w[i + len]) == (len % 2 == 0 ? a : b))
    ++len;
  return len;
}

}  // namespace

std::vector<Move> applicable_moves(const Word& w, const CoxeterSystem& sys) {
  const RawWord& raw = w.raw();
  std::vector<Move> out;
  for (std::size_t i = 0; i + 1 < raw.size(); ++i) {
    Gen a = Gen(raw[i]), b = Gen(raw[i + 1]);
    if (a == b) {
      out.push_back({Move::Nil, i, a, a});
      continue;
    }
    int m = sys.label(a, b);
    if (m == CoxeterSystem::kInfinity) continue;
    if (alternating_run(raw, i) >= std::size_t(m))
      out.push_back({Move::Braid, i, a, b});
  }
  return out;
}

Word apply_move(const Word& w, const Move& mv, const CoxeterSystem& sys) {
  RawWord raw = w.raw();
  if (mv.kind == Move::Nil) {
    if (mv.position + 1 >= raw.size() ||
        raw[mv.position] != raw[mv.position + 1])
      throw ParseError("nil move not applicable at position " +
                       std::to_string(mv.position));
    raw.erase(mv.position, 2);
    return Word(std::move(raw));
  }
  int m = sys.label(mv.a, mv.b);
  if (m == CoxeterSystem::kInfinity)
    throw ParseError("no braid relation between the given generators");
  if (mv.position + m > raw.size())
    throw ParseError("braid move does not fit at position " +
                     std::to_string(mv.position));
  for (int t = 0; t < m; ++t)
    if (Gen(raw[mv.position + t]) != (t % 2 == 0 ? mv.a : mv.b))
      throw ParseError("braid move not applicable at position " +
                       std::to_string(mv.position));
  for (int t = 0; t < m; ++t)
    raw[mv.position + t] = char(t % 2 == 0 ? mv.b : mv.a);
  return Word(std::move(raw));
}

Word replay(const Word& source, const MoveTrace& trace,
            const CoxeterSystem& sys) {
  Word cur = source;
  for (const Move& mv : trace.moves) cur = apply_move(cur, mv, sys);
  return cur;
}

}  // namespace coxlen
