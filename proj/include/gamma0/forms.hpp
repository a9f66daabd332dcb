#pragma once

#include <gamma0/numtheory.hpp>

#include <vector>

namespace gamma0 {

// Positive definite integral binary quadratic form a x^2 + b xy + c y^2.
struct QuadForm {
  Int a, b, c;

  friend bool operator==(const QuadForm& l, const QuadForm& r) {
    return l.a == r.a && l.b == r.b && l.c == r.c;
  }
  friend bool operator<(const QuadForm& l, const QuadForm& r) {
    if (int t = cmp(l.a, r.a)) return t < 0;
    if (int t = cmp(l.b, r.b)) return t < 0;
    return cmp(l.c, r.c) < 0;
  }
};

Int form_disc(const QuadForm& Q);

// Integer 2x2 matrix ((a, b), (c, d)).  Group elements have determinant 1.
// gamma0_level records the level against which c = 0 (mod N) was last
// verified, 0 if never checked.  It is bookkeeping only and does not take
// part in arithmetic or comparison.
struct Mat2 {
  Int a, b, c, d;
  long gamma0_level = 0;

  friend bool operator==(const Mat2& l, const Mat2& r) {
    return l.a == r.a && l.b == r.b && l.c == r.c && l.d == r.d;
  }
};

Mat2 mat_identity();
Mat2 mat_translation(const Int& t);  // ((1, t), (0, 1))
Mat2 mat_mul(const Mat2& g, const Mat2& h);
Mat2 mat_inverse(const Mat2& g);  // requires det 1
Int mat_det(const Mat2& g);

// Verifies det g = 1 and c = 0 (mod N); stamps gamma0_level on success.
bool check_gamma0(Mat2& g, long N);

// Point r + s*sqrt(-m) in the upper half plane, carried exactly as the
// rational real part and the rational square of the imaginary part.
struct CmPoint {
  Rat re;
  Rat im2;  // (Im tau)^2 > 0

  friend bool operator==(const CmPoint& l, const CmPoint& r) {
    return l.re == r.re && l.im2 == r.im2;
  }
  friend bool operator<(const CmPoint& l, const CmPoint& r) {
    if (int t = cmp(l.re, r.re)) return t < 0;
    return cmp(l.im2, r.im2) < 0;
  }
};

struct FormInvariants {
  Int disc;            // b^2 - 4ac
  Int content;         // gcd(a, b, c)
  QuadForm primitive;  // Q / content
  Int primitive_disc;
  CmPoint tau;  // root of Q(x, 1) = 0 in the upper half plane
};

// Requires a > 0 and disc < 0.
FormInvariants form_invariants(const QuadForm& Q);

// Right action Q.g = Q(ax + by, cx + dy).  Throws unless det g = 1.
// tau_{Q.g} = g^{-1}(tau_Q), so discriminant and content are preserved.
QuadForm act(const QuadForm& Q, const Mat2& g);

// Order of the stabilizer of Q in Gamma_0(N) mod +-1: 2 for primitive
// discriminant -4, 3 for -3, if the automorph's lower left a'u is
// divisible by N; otherwise 1.
long omega(const QuadForm& Q, long N);

bool is_reduced(const QuadForm& Q, long N);

struct ReduceResult {
  QuadForm form;
  Mat2 g;  // in Gamma_0(N); form = act(input, g)
  long steps;
};

ReduceResult reduce(const QuadForm& Q, long N);

// Classical SL_2(Z)-reduced forms: |b| <= a <= c with b >= 0 whenever
// |b| = a or a = c.  Imprimitive forms included.
std::vector<QuadForm> sl2_reduced_forms(const Int& D);

// Representatives g of the cosets g Gamma_0(N) in SL_2(Z), classified by
// the first column of g mod N: one per point of P^1(Z/N), identity first,
// deterministic order.
std::vector<Mat2> gamma0_coset_reps(long N);

// All Gamma_0(N)-reduced forms of discriminant D (every a > 0, not just
// N | a; imprimitive included), sorted by (a, b, c).
std::vector<QuadForm> enumerate_reduced(const Int& D, long N);

// Same output contract as enumerate_reduced, computed independently by
// reducing SL_2(Z)-reduced forms hit with every coset representative.
std::vector<QuadForm> enumerate_reduced_via_cosets(const Int& D, long N);

// The subset of enumerate_reduced with N | a: representatives of the
// classes counted by the class number.
std::vector<QuadForm> enumerate_classes(const Int& D, long N);

// Hurwitz-like class number: sum of 1/omega over enumerate_classes.
Rat class_number_H(const Int& D, long N);

}  // namespace gamma0
