#pragma once

#include <optional>
#include <vector>

namespace coxlen {

// Reflection length of (s_1 ... s_n)^lambda s_1 ... s_r in the universal
// system: lambda * (n - 2) + r for 1 <= r <= n.  r = 0 is normalized to
// (lambda - 1, n) for lambda >= 1; the identity (lambda = r = 0) gives 0.
long long universal_power_length(long long lambda, int r, int n);

// Smallest length of an alternating st-word whose deletion from the front of
// a suitable power forces a relation: (m-1)/2 * n + 1 for odd m,
// m/2 * n - (n - 2) for even m.  Requires m >= 2, n >= 2.
long long chi(int m, int n);

// True when reflection length is unbounded on powers of the Coxeter element
// in the single-braided system: chi(k, n) * (n - 2) - 2n > 0 (the odd and
// even cases of k reduce to the same inequality).
bool unbounded_condition(int k, int n);

// Closed-form lower bound for the reflection length of the lambda-th power
// of the Coxeter element in the single-braided system of rank n, label k:
// ceil(lambda*n*(1 - 2/chi(k,n)) - 2*lambda + 2), evaluated in integers.
long long lower_bound_powers(int n, int k, long long lambda);

// Upper bound for l_R((s1 s2 s3)^lambda s1 ... s_r) in the rank-3
// single-braided system with label k:
//   lambda + r - 2 * floor((lambda + [r >= 2]) / k).
long long upper_bound_rank3(int k, long long lambda, int r);

// The rank >= 4 analogue:
//   lambda*(n-2) + r - 2*[lambda + [r >= 2] >= k]*(1 + floor((lambda - k + [r >= 2]) / (k - 1))).
long long upper_bound_rank_ge4(int n, int k, long long lambda, int r);

// Admissible reflection lengths of (s1 s2 s3)^lambda in a rank-3 system with
// exactly one commuting pair (one label 2, the other two finite >= 3):
// {2} for even lambda >= 2, {1, 3} for odd lambda.  lambda = 0 gives {0}.
std::vector<int> commuting_rank3_lengths(long long lambda);

struct BoundParams {
  int n = 3;
  int k = 3;
  long long lambda = 1;
  int r = 1;
};

// One (lambda, r) cell of a bounds table.
struct BoundReport {
  BoundParams params;
  long long chi_value = 0;
  long long upper = 0;
  bool unbounded = false;
  // Present when the cell is an exact power of the Coxeter element
  // (r == 0 or r == n), for the effective exponent.
  std::optional<long long> closed_form_lower;
  // Search value, when a caller ran the deletion-set engine.
  std::optional<long long> realized;
};

// Fills the closed-form fields; realized stays empty.
BoundReport make_bound_report(const BoundParams& p);

}  // namespace coxlen
