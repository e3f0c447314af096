#pragma once

#include <vector>

#include "coxlen/coxeter_system.hpp"
#include "coxlen/word.hpp"

namespace coxlen {

// One elementary rewrite.  A nil move deletes the equal adjacent pair at
// [position, position+1].  A braid move replaces the alternating block
// a b a b ... of length m(a,b) starting at position by the block b a b a ...
// of the same length.  Positions are 0-based.
struct Move {
  enum Kind { Nil, Braid };
  Kind kind;
  std::size_t position;
  Gen a, b;  // the generator pair; for Nil, a == b

  bool operator==(const Move&) const = default;
};

// Record of an applied move sequence, replayable from the source word.
struct MoveTrace {
  std::vector<Move> moves;
  std::size_t braid_count = 0;
};

// All moves applicable to w, ordered by (position, kind) with Nil before
// Braid at equal positions, braid pairs ordered by first letter.  m = 2
// blocks are ordinary braid moves; infinite labels admit no braid move.
std::vector<Move> applicable_moves(const Word& w, const CoxeterSystem& sys);

// Applies mv, which must be applicable to w at its position.
Word apply_move(const Word& w, const Move& mv, const CoxeterSystem& sys);

// Replays a trace from source; returns the final word.
Word replay(const Word& source, const MoveTrace& trace,
            const CoxeterSystem& sys);

}  // namespace coxlen
