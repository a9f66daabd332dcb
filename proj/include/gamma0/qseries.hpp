#pragma once
#include <map>
#include <vector>

#include "gamma0/bigfloat.hpp"
#include "gamma0/numtheory.hpp"

namespace gamma0 {

// Truncated Puiseux/Laurent series with exact rational coefficients.
// Exponents are terms.first / ram. If has_trunc, the series is exact for all
// exponents < trunc_order (a rational in q-units); otherwise it is an exact
// finite sum.
struct PuiseuxSeries {
  long ram = 1;
  std::map<long, Rat> terms;  // exponent numerator -> nonzero coefficient
  bool has_trunc = false;
  Rat trunc_order;

  bool is_zero() const { return terms.empty(); }
  Rat lowest_exponent() const;  // requires nonempty
  void normalize();             // drop zeros, minimize ram
};

PuiseuxSeries ps_monomial(const Rat& coeff, const Rat& exponent);
PuiseuxSeries ps_add(const PuiseuxSeries& a, const PuiseuxSeries& b);
PuiseuxSeries ps_mul(const PuiseuxSeries& a, const PuiseuxSeries& b);
// k < 0 inverts first (requires truncated input with nonzero lowest term)
PuiseuxSeries ps_pow(const PuiseuxSeries& a, long k);
PuiseuxSeries ps_inverse(const PuiseuxSeries& a);
PuiseuxSeries ps_truncate(const PuiseuxSeries& a, const Rat& order);
bool ps_equal(const PuiseuxSeries& a, const PuiseuxSeries& b);

// prod_{k>=1} (1 - q^k), exact through exponent M, via the pentagonal-number
// expansion: sum_k (-1)^k q^{k(3k-1)/2}.
PuiseuxSeries euler_product_series(long M);

// exponents g with |coeff| 1 in the pentagonal expansion, g < T: (g, sign)
std::vector<std::pair<long, int>> pentagonal_terms(long T);

// j_N = 1/q + c_1 q + c_2 q^2 + ...; c_0 = 0. c[m-1] stores c_m.
struct HauptmodulSeries {
  long level = 0;
  long order = 0;  // coefficients exact for m <= order
  std::vector<Int> c;

  const Int& coeff(long m) const;  // m in [1, order]
  PuiseuxSeries to_puiseux() const;
};

HauptmodulSeries hauptmodul_series(long N, long M);

// Evaluate at q0 (|q0| < 1 required). err covers rounding plus a geometric
// tail bound A*|q0|^T/(1-|q0|) with A = max stored |coefficient|; for series
// whose dropped coefficients exceed A this is a heuristic, stated here once.
CComplex series_eval_complex(const PuiseuxSeries& f, const CComplex& q0,
                             long prec);
CComplex series_eval_complex(const HauptmodulSeries& f, const CComplex& q0,
                             long prec);

// Dense integer Laurent slice: c[i] is the coefficient of u^{lo+i}; exact for
// exponents < trunc. The workhorse representation of the modular-polynomial
// pipeline, where exact rational maps are too slow.
struct ZSeries {
  long lo = 0;
  long trunc = 0;
  std::vector<Int> c;

  Int at(long e) const;  // 0 outside the stored window
  bool stored_zero() const;
};

ZSeries zs_from_coeffs(long lo, std::vector<Int> coeffs, long trunc);
ZSeries zs_add(const ZSeries& a, const ZSeries& b);
ZSeries zs_sub(const ZSeries& a, const ZSeries& b);
ZSeries zs_mul(const ZSeries& a, const ZSeries& b);
// schoolbook product, but only exponents < cap are accumulated
ZSeries zs_mul_capped(const ZSeries& a, const ZSeries& b, long cap);
ZSeries zs_scale(const ZSeries& a, const Int& s);
ZSeries zs_divexact_ui(const ZSeries& a, unsigned long k);  // throws if inexact
// keep exponents E == 0 mod d, rescale coefficient by d, map E -> (E/d)*a
ZSeries zs_collapse(const ZSeries& a, long d, long mult);
PuiseuxSeries zs_to_puiseux(const ZSeries& a, long ram);

// j_N as a ZSeries in q: exponents -1..M
ZSeries hauptmodul_zseries(long N, long M);

}  // namespace gamma0
