#pragma once
#include <mpfr.h>

#include <string>
#include <utility>

#include "gamma0/numtheory.hpp"

namespace gamma0 {

// Thin RAII wrapper over mpfr_t. Precision is explicit: binary operations
// produce a result at the larger operand precision, rounding to nearest.
class Real {
 public:
  explicit Real(long prec = 128) {
    mpfr_init2(x_, prec);
    mpfr_set_zero(x_, 1);
  }
  Real(const Real& o) {
    mpfr_init2(x_, mpfr_get_prec(o.x_));
    mpfr_set(x_, o.x_, MPFR_RNDN);
  }
  Real(Real&& o) noexcept {
    mpfr_init2(x_, mpfr_get_prec(o.x_));
    mpfr_swap(x_, o.x_);
  }
  Real& operator=(const Real& o) {
    if (this != &o) {
      mpfr_set_prec(x_, mpfr_get_prec(o.x_));
      mpfr_set(x_, o.x_, MPFR_RNDN);
    }
    return *this;
  }
  Real& operator=(Real&& o) noexcept {
    mpfr_swap(x_, o.x_);
    return *this;
  }
  ~Real() { mpfr_clear(x_); }

  long prec() const { return mpfr_get_prec(x_); }
  mpfr_ptr get() { return x_; }
  mpfr_srcptr get() const { return x_; }

  static Real of_long(long v, long prec);
  static Real of_int(const Int& v, long prec);
  static Real of_rat(const Rat& v, long prec);
  static Real pi(long prec);

  double to_double() const { return mpfr_get_d(x_, MPFR_RNDN); }
  // Nearest integer (ties to even).
  Int round_to_int() const;
  int sign() const { return mpfr_sgn(x_); }
  bool is_zero() const { return mpfr_zero_p(x_); }
  std::string str(size_t digits = 30) const;

 private:
  mpfr_t x_;
};

Real operator+(const Real& a, const Real& b);
Real operator-(const Real& a, const Real& b);
Real operator-(const Real& a);
Real operator*(const Real& a, const Real& b);
Real operator/(const Real& a, const Real& b);
bool operator<(const Real& a, const Real& b);

Real r_sqrt(const Real& a);
Real r_exp(const Real& a);
Real r_sin(const Real& a);
Real r_cos(const Real& a);
Real r_abs(const Real& a);

// Complex value with a certified absolute error bound: the true quantity lies
// within distance err of (re + i*im). err is tracked in double precision; all
// magnitudes handled here stay far from the double range limits (the one
// large-product path, verify_factorization, tracks relative error instead).
struct CComplex {
  Real re, im;
  double err = 0.0;

  long prec() const { return re.prec(); }
  double abs_double() const;
  double abs_upper() const { return abs_double() + err; }
  // Positive lower bound on the true modulus; 0 if err engulfs the value.
  double abs_lower() const;
};

CComplex cc_zero(long prec);
CComplex cc_of_rat(const Rat& re, const Rat& im, long prec);
CComplex cc_exact(Real re, Real im);  // err = representation only (treated 0)

CComplex cc_add(const CComplex& a, const CComplex& b);
CComplex cc_sub(const CComplex& a, const CComplex& b);
CComplex cc_neg(const CComplex& a);
CComplex cc_mul(const CComplex& a, const CComplex& b);
CComplex cc_div(const CComplex& a, const CComplex& b);
CComplex cc_inv(const CComplex& a);
CComplex cc_mul_rat(const CComplex& a, const Rat& w);
CComplex cc_pow_ui(const CComplex& a, unsigned long k);

// e^{2*pi*i*(x + i*y)} with x, y exact rationals given as (x, y^2);
// y = sqrt(y2) > 0. Returns a certified CComplex with |q| < 1.
CComplex cc_q_from_tau(const Rat& x, const Rat& y2, long prec);

// ulp-scale bound used when composing certified operations by hand
double ulp_bound(const Real& magnitude_witness, int op_count);

}  // namespace gamma0
