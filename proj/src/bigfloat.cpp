#include "gamma0/bigfloat.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace gamma0 {

namespace {
long join_prec(const Real& a, const Real& b) {
  return std::max(a.prec(), b.prec());
}
// Relative rounding error of one mpfr op at precision p, with slack.
// Floored so that very high working precisions never underflow the bound
// to zero; the floor is still negligible against every tolerance used here.
double eps_at(long p, int ops = 1) {
  return ops * std::max(std::ldexp(1.0, 2 - static_cast<int>(p)), 1e-310);
}
}  // namespace

Real Real::of_long(long v, long prec) {
  Real r(prec);
  mpfr_set_si(r.x_, v, MPFR_RNDN);
  return r;
}

Real Real::of_int(const Int& v, long prec) {
  Real r(prec);
  mpfr_set_z(r.x_, v.get_mpz_t(), MPFR_RNDN);
  return r;
}

Real Real::of_rat(const Rat& v, long prec) {
  Real r(prec);
  mpfr_set_q(r.x_, v.get_mpq_t(), MPFR_RNDN);
  return r;
}

Real Real::pi(long prec) {
  Real r(prec);
  mpfr_const_pi(r.x_, MPFR_RNDN);
  return r;
}

Int Real::round_to_int() const {
  Real t(*this);
  mpfr_rint(t.x_, x_, MPFR_RNDN);
  Int z;
  mpfr_get_z(z.get_mpz_t(), t.x_, MPFR_RNDN);
  return z;
}

std::string Real::str(size_t digits) const {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%%.%zuRg", digits);
  char* out = nullptr;
  mpfr_asprintf(&out, buf, x_);
  std::string s(out);
  mpfr_free_str(out);
  return s;
}

#define GAMMA0_REAL_BINOP(opname, mpfr_fn)                \
  Real opname(const Real& a, const Real& b) {            \
    Real r(join_prec(a, b));                              \
    mpfr_fn(r.get(), a.get(), b.get(), MPFR_RNDN);        \
    return r;                                             \
  }
GAMMA0_REAL_BINOP(operator+, mpfr_add)
GAMMA0_REAL_BINOP(operator-, mpfr_sub)
GAMMA0_REAL_BINOP(operator*, mpfr_mul)
GAMMA0_REAL_BINOP(operator/, mpfr_div)
#undef GAMMA0_REAL_BINOP

Real operator-(const Real& a) {
  Real r(a.prec());
  mpfr_neg(r.get(), a.get(), MPFR_RNDN);
  return r;
}

bool operator<(const Real& a, const Real& b) {
  return mpfr_cmp(a.get(), b.get()) < 0;
}

#define GAMMA0_REAL_UNOP(cname, mpfr_fn)       \
  Real cname(const Real& a) {                  \
    Real r(a.prec());                          \
    mpfr_fn(r.get(), a.get(), MPFR_RNDN);      \
    return r;                                  \
  }
GAMMA0_REAL_UNOP(r_sqrt, mpfr_sqrt)
GAMMA0_REAL_UNOP(r_exp, mpfr_exp)
GAMMA0_REAL_UNOP(r_sin, mpfr_sin)
GAMMA0_REAL_UNOP(r_cos, mpfr_cos)
GAMMA0_REAL_UNOP(r_abs, mpfr_abs)
#undef GAMMA0_REAL_UNOP

double CComplex::abs_double() const {
  return std::hypot(re.to_double(), im.to_double());
}

double CComplex::abs_lower() const {
  double m = abs_double() - err;
  return m > 0 ? m : 0.0;
}

double ulp_bound(const Real& magnitude_witness, int op_count) {
  double m = std::fabs(magnitude_witness.to_double());
  if (!(m < 1e300)) m = 1e300;
  return (m + 1e-300) * eps_at(magnitude_witness.prec(), op_count);
}

CComplex cc_zero(long prec) { return CComplex{Real(prec), Real(prec), 0.0}; }

CComplex cc_of_rat(const Rat& re, const Rat& im, long prec) {
  CComplex z{Real::of_rat(re, prec), Real::of_rat(im, prec), 0.0};
  z.err = z.abs_double() * eps_at(prec, 2);
  return z;
}

CComplex cc_exact(Real re, Real im) {
  return CComplex{std::move(re), std::move(im), 0.0};
}

CComplex cc_add(const CComplex& a, const CComplex& b) {
  CComplex z{a.re + b.re, a.im + b.im, 0.0};
  z.err = a.err + b.err + z.abs_double() * eps_at(z.prec(), 2);
  return z;
}

CComplex cc_sub(const CComplex& a, const CComplex& b) {
  CComplex z{a.re - b.re, a.im - b.im, 0.0};
  // cancellation: the rounding term must be scaled by the operand magnitudes
  double scale = a.abs_double() + b.abs_double();
  z.err = a.err + b.err + scale * eps_at(z.prec(), 2);
  return z;
}

CComplex cc_neg(const CComplex& a) {
  return CComplex{-a.re, -a.im, a.err};
}

CComplex cc_mul(const CComplex& a, const CComplex& b) {
  CComplex z{a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re, 0.0};
  double ma = a.abs_double() + a.err, mb = b.abs_double() + b.err;
  z.err = ma * b.err + mb * a.err + a.err * b.err +
          (ma * mb + 1e-300) * eps_at(z.prec(), 8);
  return z;
}

CComplex cc_inv(const CComplex& a) {
  Real n = a.re * a.re + a.im * a.im;
  if (n.is_zero()) throw std::domain_error("cc_inv: zero divisor");
  CComplex z{a.re / n, -a.im / n, 0.0};
  double la = a.abs_lower();
  if (la <= 0.0) throw std::domain_error("cc_inv: divisor not certified nonzero");
  // |1/a - 1/a~| = |a - a~| / (|a||a~|)
  z.err = a.err / (la * a.abs_double()) + z.abs_double() * eps_at(z.prec(), 8);
  return z;
}

CComplex cc_div(const CComplex& a, const CComplex& b) {
  return cc_mul(a, cc_inv(b));
}

CComplex cc_mul_rat(const CComplex& a, const Rat& w) {
  Real wr = Real::of_rat(w, a.prec());
  CComplex z{a.re * wr, a.im * wr, 0.0};
  double aw = std::fabs(wr.to_double());
  z.err = a.err * aw + z.abs_double() * eps_at(z.prec(), 4);
  return z;
}

CComplex cc_pow_ui(const CComplex& a, unsigned long k) {
  CComplex acc = cc_of_rat(Rat(1), Rat(0), a.prec());
  CComplex base = a;
  while (k) {
    if (k & 1UL) acc = cc_mul(acc, base);
    k >>= 1UL;
    if (k) base = cc_mul(base, base);
  }
  return acc;
}

CComplex cc_q_from_tau(const Rat& x, const Rat& y2, long prec) {
  if (sgn(y2) <= 0) throw std::domain_error("cc_q_from_tau: requires Im > 0");
  Real y = r_sqrt(Real::of_rat(y2, prec));
  Real twopi = Real::of_long(2, prec) * Real::pi(prec);
  Real r = r_exp(-(twopi * y));            // |q| = e^{-2 pi y}
  Real theta = twopi * Real::of_rat(x, prec);
  CComplex q{r * r_cos(theta), r * r_sin(theta), 0.0};
  // error budget: sqrt+exp+trig chain, plus sensitivity |dq| <= |q| * 2pi * |dtau|
  double qm = q.abs_double();
  double sens = qm * (1.0 + twopi.to_double() * (1.0 + std::fabs(y.to_double()) +
                                                 std::fabs(theta.to_double())));
  q.err = sens * eps_at(prec, 16);
  return q;
}

}  // namespace gamma0
