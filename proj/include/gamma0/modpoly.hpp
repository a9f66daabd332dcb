#pragma once
#include <utility>
#include <vector>

#include "gamma0/numtheory.hpp"
#include "gamma0/qseries.hpp"

namespace gamma0 {

// Upper-triangular representatives (a, b) with a | n, gcd(a, N) = 1,
// 0 <= b < n/a, lexicographic; alpha_{a,b} acts by tau -> (a tau + b)/(n/a).
std::vector<std::pair<long, long>> coset_representatives(long n, long N);

// p_k = sum_{0<=b<d} (j_N composed with alpha_{a,b})^k for k = 1..k_max, one
// divisor a of n with gcd(a, N) = 1, d = n/a. The sum over b kills every
// exponent not on the integer grid and scales survivors by d, so no
// root-of-unity arithmetic is needed. M is the q-order of the backing
// hauptmodul series.
std::vector<PuiseuxSeries> conjugate_power_sums(long n, long N, long a,
                                                long k_max, long M);

// Phi_n(X, Y) over Z, Y standing for j_N. coeffs[i][k] multiplies X^i Y^k.
struct ModularPolynomial {
  long n = 0;
  long level = 0;
  std::vector<std::vector<Int>> coeffs;

  long x_degree() const { return static_cast<long>(coeffs.size()) - 1; }
  long y_degree() const;
  Int at(long i, long k) const;  // 0 outside the stored matrix
};

ModularPolynomial build_modular_polynomial(long n, long N, long guard = 10);

// Phi_n(X, X) as a dense coefficient vector (index = degree). Rejects square
// n, where the diagonal is identically zero.
std::vector<Int> diagonal(const ModularPolynomial& P);

// (Phi_n(X, Y) / (X - Y)) at Y = X for square n; the division is exact in
// Z[X, Y] and is checked.
std::vector<Int> diagonal_quotient(const ModularPolynomial& P);

}  // namespace gamma0
