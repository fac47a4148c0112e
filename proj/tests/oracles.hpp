#pragma once

// Test-only oracles.  These deliberately avoid the library's fast paths:
// geometry is done with explicit rational points and matrices.

#include <cstdlib>
#include <vector>

#include "hecke_walks/weyl.hpp"

namespace hw::oracle {

using RVec = std::vector<Rational>;

/// x(x_0) in X_* coordinates, x_0 = rho^vee / h.
inline RVec sample_image(const AffineWeylGroup& g, const AffineElement& x) {
  const auto& d = g.datum();
  const int n = d.rank();
  const IntMatrix w = g.finite_matrix(x);
  RVec p(n);
  for (int a = 0; a < n; ++a)
    p[a] = Rational(d.two_rho_check()[a], 2 * d.coxeter_number()) + Rational(x.lambda[a]);
  RVec q(n, Rational(0));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) q[a] += Rational(w[a][b]) * p[b];
  return q;
}

inline Rational pair(const RootDatum& d, RootId alpha, const RVec& p) {
  Rational s = 0;
  for (int a = 0; a < d.rank(); ++a) s += Rational(d.root_functional(alpha)[a]) * p[a];
  return s;
}

inline std::int64_t floor_of(const Rational& r) {
  std::int64_t q = r.numerator() / r.denominator();
  if (r.numerator() < 0 && q * r.denominator() != r.numerator()) --q;
  return q;
}

/// Number of affine root hyperplanes separating the base alcove and x a.
inline int separating_hyperplanes(const AffineWeylGroup& g, const AffineElement& x) {
  const auto& d = g.datum();
  const RVec base = sample_image(g, g.identity());
  const RVec img = sample_image(g, x);
  int count = 0;
  for (RootId a = 0; a < d.num_positive_roots(); ++a)
    count += static_cast<int>(std::llabs(floor_of(pair(d, a, img)) - floor_of(pair(d, a, base))));
  return count;
}

}  // namespace hw::oracle
