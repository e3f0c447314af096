#pragma once

#include <optional>
#include <vector>

#include "coxlen/moves.hpp"
#include "coxlen/search_limits.hpp"

namespace coxlen {

// Unique normal form of w under nil moves alone (deletion order does not
// matter; the rewriting system xx -> empty is confluent).
RawWord nil_reduce(const RawWord& w);

bool has_nil_pair(const RawWord& w);

// Word-problem test: true iff w represents the identity element.  Strategy:
// cancel nil pairs eagerly, then walk the braid orbit of the current word
// breadth-first looking for a member with an adjacent equal pair; every nil
// found restarts the loop on the shorter word.  A word whose whole braid
// orbit is nil-free is reduced, so a nonempty one is not the identity.
// Verdicts are memoized in a process-wide LRU keyed by the nil-reduced word.
bool is_identity(const Word& w, const CoxeterSystem& sys,
                 const SearchLimits& limits = {}, SearchStats* stats = nullptr);

struct ReduceResult {
  Word word;        // an S-reduced word for the same element
  MoveTrace trace;  // braid-minimalistic: braid moves appear only while the
                    // current word admits no nil move
};

ReduceResult reduce(const Word& w, const CoxeterSystem& sys,
                    const SearchLimits& limits = {},
                    SearchStats* stats = nullptr);

bool is_reduced(const Word& w, const CoxeterSystem& sys,
                const SearchLimits& limits = {}, SearchStats* stats = nullptr);

// All words reachable from w by braid moves alone, sorted lexicographically.
// Intended for S-reduced input (then the orbit is the set of reduced words
// obtained without changing length).
std::vector<Word> braid_orbit(const Word& w, const CoxeterSystem& sys,
                              const SearchLimits& limits = {},
                              SearchStats* stats = nullptr);

// Lexicographically least member of braid_orbit(reduce(w).word); a canonical
// representative of the element (all orbit words share one length).
Word canonical_form(const Word& w, const CoxeterSystem& sys,
                    const SearchLimits& limits = {},
                    SearchStats* stats = nullptr);

// Minimal number of braid moves over all nil/braid sequences transforming w
// into the empty word (0-1 breadth-first search: nil edges cost 0, braid
// edges cost 1).  Throws NotIdentityError unless w represents the identity.
std::size_t minimal_braid_moves_to_identity(const Word& w,
                                            const CoxeterSystem& sys,
                                            const SearchLimits& limits = {},
                                            SearchStats* stats = nullptr);

// Scans w for a subsequence (s_a s_b)^{m(a,b)} with a finite label; ordered
// pairs are tried in lexicographic order and matched greedily left to right.
// The returned pair is 1-based.
std::optional<std::pair<int, int>> contains_braid_power_subword(
    const Word& w, const CoxeterSystem& sys);

struct RelationSubwordHit {
  Word witness;  // the orbit member containing the subsequence
  int a, b;      // 1-based generator pair
};

// Searches the braid orbit of w (which should be S-reduced) for a member
// containing a braid power subword.
std::optional<RelationSubwordHit> orbit_has_relation_subword(
    const Word& w, const CoxeterSystem& sys, const SearchLimits& limits = {},
    SearchStats* stats = nullptr);

// Drops all memoized identity verdicts (mainly for tests and benchmarks).
void clear_identity_cache();

}  // namespace coxlen
