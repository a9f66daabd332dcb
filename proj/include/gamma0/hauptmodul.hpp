#pragma once

#include <gamma0/bigfloat.hpp>
#include <gamma0/cusps.hpp>
#include <gamma0/forms.hpp>

#include <map>

namespace gamma0 {

// j_N = (eta(tau)/eta(N tau))^e + e with e = 24/(N-1): the normalized
// hauptmodul 1/q + O(q).  Numeric values carry certified error bounds.

// Certified Euler product P(q) = prod (1 - q^k), summed through the
// pentagonal series with an explicit geometric tail bound.  |q| < 1.
CComplex euler_eval(const CComplex& q);

// j_N from an already computed q = e^{2 pi i tau}.
CComplex j_from_q(const CComplex& q, long N);

// Exact CM point in the upper half plane.  prec >= 53.
CComplex j_eval_cm(const CmPoint& tau, long N, long prec);

// Arbitrary point, used by invariance tests and cusp limits.
CComplex j_eval_tau(const CComplex& tau, long N);

// Exact values at the cusp classes away from infinity: the class of 0
// takes 24/(N-1) at every supported level, and level 4 additionally has
// j_4(1/2) = -8.
struct CuspValueTable {
  long level;
  std::map<CuspRep, Rat> values;
};

const CuspValueTable& cusp_value_table(long N);

// Exact value at the class of s.  Throws std::domain_error for the pole
// at the class of infinity.
Rat j_at_cusp(const CuspRep& s, long N);

// Numeric cross-check of the table: evaluates at rho(i h t0) where
// rho(infinity) = s and h is the cusp width, so the error decays like
// e^{-2 pi t0} at every cusp.
CComplex j_at_cusp_numeric(const CuspRep& s, long N, double t0, long prec);

}  // namespace gamma0
