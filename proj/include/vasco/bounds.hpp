#pragma once

// Exact evaluation of the completeness length bounds. These never influence a
// Yes verdict (witnesses certify those); they only calibrate how far an
// exhaustive search would have to go before a No becomes definite, and are
// reported alongside Unknown verdicts.

#include "vasco/core.hpp"

namespace vasco {

inline Int ipow(Int base, Int exp) {
  if (exp < 0) throw PreconditionViolated("negative exponent");
  Int r = 1;
  while (exp > 0) {
    if ((exp & 1) != 0) r *= base;
    exp >>= 1;
    if (exp > 0) base *= base;
  }
  return r;
}

struct BoundParams {
  int n = 1;          // dimension
  std::size_t k = 1;  // property length
  Int absmax_transitions = 1;
  Int absmax_property = 1;
  Int pic = 1;  // clamped to >= 1 inside every formula
  int c1 = 2;   // recurrence exponent constant
  int c = 3;    // closed-form exponent constant

  void check() const {
    if (n < 1 || k < 1 || c1 < 1 || c < 1 || absmax_transitions < 0 ||
        absmax_property < 0 || pic < 0)
      throw PreconditionViolated("bound parameters out of range");
  }
};

inline Int bound_mu(const BoundParams& p) {
  p.check();
  return (1 + Int(static_cast<std::int64_t>(p.k))) * p.absmax_transitions *
         p.absmax_property;
}

inline Int bound_pic(const BoundParams& p) { return p.pic < 1 ? Int(1) : p.pic; }

// g(0) = (2mu)^(n^c1); g(i) = (2 mu pic g(i-1))^(n^c1) + g(i-1).
inline Int rackoff_g(const BoundParams& p, int i) {
  p.check();
  if (i < 0 || i > p.n) throw PreconditionViolated("index outside [0, n]");
  Int mu = bound_mu(p);
  Int e = ipow(p.n, p.c1);
  Int g = ipow(2 * mu, e);
  for (int j = 1; j <= i; ++j) g = ipow(2 * mu * bound_pic(p) * g, e) + g;
  return g;
}

// (mu 2 pic)^(n^((2n+1)c)), the run-length horizon beyond which searching
// cannot learn anything new.
inline Int rackoff_closed_bound(const BoundParams& p) {
  p.check();
  return ipow(bound_mu(p) * 2 * bound_pic(p),
              ipow(p.n, Int(2 * p.n + 1) * p.c));
}

}  // namespace vasco
