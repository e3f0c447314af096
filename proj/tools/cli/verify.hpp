#pragma once

#include <string>
#include <vector>

#include "coxlen/coxeter_system.hpp"
#include "coxlen/search_limits.hpp"

namespace coxlen::cli {

struct VerifyCheck {
  std::string name;
  bool pass = false;
  std::string detail;  // counts, or the first failing case
};

struct VerifyReport {
  std::string suite;
  std::vector<VerifyCheck> checks;

  bool ok() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }
  int passed() const {
    int n = 0;
    for (const auto& c : checks) n += c.pass;
    return n;
  }
  int total() const { return int(checks.size()); }
};

// Runs one verification suite against sys:
//   invariants  parity, length bounds, move/conjugation invariance, witness
//               subset behaviour, closed-form grid for universal groups
//   table1      reflection lengths of Coxeter-element powers in
//               triangle:3:3:4 against the known row (lambda = 2..8;
//               set COXLEN_TABLE1_EXTENDED=1 to add 9..12 and 15)
//   bounds      realized reflection lengths against the closed-form upper
//               and lower bounds on a (lambda, r) grid (single-braided
//               groups with a finite label, rank >= 3)
//   twisted     generated twisted palindromes: free reduction, matcher
//               round-trip, center-removal descent, scan witnesses
// Throws ParseError when the suite does not apply to sys.
VerifyReport run_verify(const std::string& suite, const CoxeterSystem& sys,
                        const SearchLimits& limits, SearchStats* stats);

}  // namespace coxlen::cli
