#include "coxlen/formulas.hpp"

#include "coxlen/errors.hpp"

namespace coxlen {

long long universal_power_length(long long lambda, int r, int n) {
  if (n < 1) throw ParseError("rank must be positive");
  if (lambda < 0 || r < 0 || r > n)
    throw ParseError("need lambda >= 0 and 0 <= r <= n");
  if (r == 0) {
    if (lambda == 0) return 0;
    lambda -= 1;
    r = n;
  }
  return lambda * (n - 2) + r;
}

long long chi(int m, int n) {
  if (m < 2 || n < 2) throw ParseError("chi needs m >= 2 and n >= 2");
  if (m % 2 == 1) return (long long)(m - 1) / 2 * n + 1;
  return (long long)m / 2 * n - (n - 2);
}

bool unbounded_condition(int k, int n) {
  return chi(k, n) * (n - 2) - 2LL * n > 0;
}

long long lower_bound_powers(int n, int k, long long lambda) {
  if (lambda < 1) throw ParseError("lambda must be >= 1");
  long long x = chi(k, n);
  // ceil(lambda*n - 2*lambda*n/x - 2*lambda + 2) with only the middle term
  // fractional.
  return lambda * n - 2 * lambda + 2 - (2 * lambda * n) / x;
}

long long upper_bound_rank3(int k, long long lambda, int r) {
  if (k < 2) throw ParseError("label must be >= 2");
  if (lambda < 0 || r < 0 || r > 3) throw ParseError("need 0 <= r <= 3");
  long long bump = r >= 2 ? 1 : 0;
  return lambda + r - 2 * ((lambda + bump) / k);
}

long long upper_bound_rank_ge4(int n, int k, long long lambda, int r) {
  if (n < 4) throw ParseError("rank must be >= 4");
  if (k < 2) throw ParseError("label must be >= 2");
  if (lambda < 0 || r < 0 || r > n) throw ParseError("need 0 <= r <= n");
  long long bump = r >= 2 ? 1 : 0;
  long long cut = 0;
  if (lambda + bump >= k)
    cut = 1 + (lambda - k + bump) / (k - 1);
  return lambda * (n - 2) + r - 2 * cut;
}

std::vector<int> commuting_rank3_lengths(long long lambda) {
  if (lambda < 0) throw ParseError("lambda must be >= 0");
  if (lambda == 0) return {0};
  if (lambda % 2 == 0) return {2};
  return {1, 3};
}

BoundReport make_bound_report(const BoundParams& p) {
  BoundReport rep;
  rep.params = p;
  rep.chi_value = chi(p.k, p.n);
  rep.unbounded = unbounded_condition(p.k, p.n);
  // The upper-bound formulas cover 1 <= r <= n; a pure power (r = 0) is
  // bounded through its (lambda - 1, r = n) form.
  long long lam = p.lambda;
  int r = p.r;
  if (r == 0) {
    if (lam == 0) return rep;  // identity: upper 0, no lower bound
    lam -= 1;
    r = p.n;
  }
  rep.upper = p.n == 3 ? upper_bound_rank3(p.k, lam, r)
                       : upper_bound_rank_ge4(p.n, p.k, lam, r);
  if (p.r == 0 || p.r == p.n) {
    long long mu = p.lambda + (p.r == p.n ? 1 : 0);
    if (mu >= 1) rep.closed_form_lower = lower_bound_powers(p.n, p.k, mu);
  }
  return rep;
}

}  // namespace coxlen
