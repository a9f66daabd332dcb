#include <gamma0/hauptmodul.hpp>

#include <gamma0/errors.hpp>

#include <cmath>
#include <mutex>
#include <stdexcept>

namespace gamma0 {

CComplex euler_eval(const CComplex& q) {
  const long prec = q.prec();
  double aq = q.abs_upper();
  if (!(aq < 1.0)) throw std::domain_error("euler_eval needs |q| < 1");

  // terms beyond q^T are folded into the tail bound
  long T = static_cast<long>(std::ceil((prec + 10) * M_LN2 / -std::log(aq))) + 2;
  CComplex s = cc_exact(Real::of_long(1, prec), Real::of_long(0, prec));
  for (long k = 1;; ++k) {
    long g1 = k * (3 * k - 1) / 2;
    long g2 = k * (3 * k + 1) / 2;
    if (g1 > T) break;
    CComplex t1 = cc_pow_ui(q, g1);
    s = (k % 2) ? cc_sub(s, t1) : cc_add(s, t1);
    if (g2 <= T) {
      CComplex t2 = cc_pow_ui(q, g2);
      s = (k % 2) ? cc_sub(s, t2) : cc_add(s, t2);
    }
  }
  // two pentagonal terms per block: tail <= 2 |q|^{T+1} / (1 - |q|)
  double tail_log2 = (T + 1) * std::log2(aq) + 1.0 - std::log2(1.0 - aq);
  s.err += std::exp2(std::max(tail_log2, -1070.0));
  return s;
}

CComplex j_from_q(const CComplex& q, long N) {
  const long e = eta_exponent(N);
  CComplex pq = euler_eval(q);
  CComplex pqn = euler_eval(cc_pow_ui(q, N));
  CComplex ratio = cc_div(pq, pqn);
  CComplex main = cc_mul(cc_pow_ui(ratio, e), cc_inv(q));
  Rat K(e);
  return cc_add(main, cc_of_rat(K, Rat(0), q.prec()));
}

CComplex j_eval_cm(const CmPoint& tau, long N, long prec) {
  require_level(N);
  if (prec < 53) throw std::invalid_argument("prec must be at least 53");
  return j_from_q(cc_q_from_tau(tau.re, tau.im2, prec), N);
}

CComplex j_eval_tau(const CComplex& tau, long N) {
  require_level(N);
  const long prec = tau.prec();
  Real twopi = Real::of_long(2, prec) * Real::pi(prec);
  Real theta = twopi * tau.re;
  Real r = r_exp(-(twopi * tau.im));
  CComplex q{r * r_cos(theta), r * r_sin(theta), 0.0};
  // |dq/dtau| = 2 pi |q|; the second term covers exp/cos/sin rounding,
  // which scales with the argument magnitudes fed to them
  double round_scale =
      1.0 + twopi.to_double() * (1.0 + std::fabs(tau.im.to_double()) +
                                 std::fabs(theta.to_double()));
  q.err = 8.0 * (q.abs_double() + 1e-300) * tau.err +
          round_scale * ulp_bound(r, 16);
  return j_from_q(q, N);
}

const CuspValueTable& cusp_value_table(long N) {
  require_level(N);
  static std::map<long, CuspValueTable> tables;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto it = tables.find(N);
  if (it != tables.end()) return it->second;
  CuspValueTable t;
  t.level = N;
  for (const CuspRep& s : cusp_set(N)) {
    if (s.v == N) continue;  // the class of infinity: pole
    if (s.v == 1) {
      Rat val(24, N - 1);
      val.canonicalize();
      t.values[s] = val;
    }
    else if (N == 4 && s.v == 2)
      t.values[s] = Rat(-8);
    else
      throw std::logic_error("cusp without a tabulated value");
  }
  return tables[N] = t;
}

Rat j_at_cusp(const CuspRep& s, long N) {
  require_level(N);
  CuspRep r = cusp_normalize(s, N);
  if (r.v == N)
    throw std::domain_error("j_N has a pole at the class of infinity");
  return cusp_value_table(N).values.at(r);
}

CComplex j_at_cusp_numeric(const CuspRep& s, long N, double t0, long prec) {
  require_level(N);
  if (!(t0 > 1)) throw std::invalid_argument("t0 must exceed 1");
  CuspRep r = cusp_normalize(s, N);
  if (r.v == N)
    throw std::domain_error("j_N has a pole at the class of infinity");
  long h = cusp_width(r, N);

  // rho = ((u, y), (v, x)) in SL2(Z) sends infinity to u/v.
  Int g, x, yneg;
  Int u = r.u, v = r.v;
  mpz_gcdext(g.get_mpz_t(), x.get_mpz_t(), yneg.get_mpz_t(), u.get_mpz_t(),
             v.get_mpz_t());
  Mat2 rho{u, -yneg, v, x};
  if (mat_det(rho) != 1) throw std::logic_error("cusp matrix is singular");

  // rho(i h t0) = (u z + y)/(v z + x) with z = i h t0
  Real z_im = Real::of_long(h, prec) * Real::of_rat(Rat(t0), prec);
  CComplex z{Real::of_long(0, prec), z_im, 0.0};
  CComplex num = cc_add(cc_mul(z, cc_of_rat(Rat(rho.a), Rat(0), prec)),
                        cc_of_rat(Rat(rho.b), Rat(0), prec));
  CComplex den = cc_add(cc_mul(z, cc_of_rat(Rat(rho.c), Rat(0), prec)),
                        cc_of_rat(Rat(rho.d), Rat(0), prec));
  return j_eval_tau(cc_div(num, den), N);
}

}  // namespace gamma0
