#include "gamma0/qseries.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <mutex>
#include <numeric>
#include <stdexcept>

#include "gamma0/errors.hpp"

namespace gamma0 {

namespace {

long lcm_long(long a, long b) { return a / std::gcd(a, b) * b; }

// exponent keys rescaled from ram r0 to ram r1 (r0 | r1)
std::map<long, Rat> rescale(const std::map<long, Rat>& t, long r0, long r1) {
  long f = r1 / r0;
  std::map<long, Rat> out;
  for (auto& [e, c] : t) out.emplace(e * f, c);
  return out;
}

}  // namespace

Rat PuiseuxSeries::lowest_exponent() const {
  assert(!terms.empty());
  Rat e(terms.begin()->first, ram);
  e.canonicalize();
  return e;
}

void PuiseuxSeries::normalize() {
  for (auto it = terms.begin(); it != terms.end();) {
    if (it->second == 0)
      it = terms.erase(it);
    else
      ++it;
  }
  long g = ram;
  for (auto& [e, c] : terms) g = std::gcd(g, std::labs(e));
  if (g > 1) {
    std::map<long, Rat> out;
    for (auto& [e, c] : terms) out.emplace(e / g, c);
    terms = std::move(out);
    ram /= g;
  }
}

PuiseuxSeries ps_monomial(const Rat& coeff, const Rat& exponent) {
  PuiseuxSeries f;
  Rat e(exponent);
  e.canonicalize();
  f.ram = static_cast<long>(e.get_den().get_si());
  if (coeff != 0) f.terms.emplace(static_cast<long>(e.get_num().get_si()), coeff);
  return f;
}

PuiseuxSeries ps_add(const PuiseuxSeries& a, const PuiseuxSeries& b) {
  PuiseuxSeries f;
  f.ram = lcm_long(a.ram, b.ram);
  f.terms = rescale(a.terms, a.ram, f.ram);
  for (auto& [e, c] : rescale(b.terms, b.ram, f.ram)) f.terms[e] += c;
  if (a.has_trunc || b.has_trunc) {
    f.has_trunc = true;
    if (a.has_trunc && b.has_trunc)
      f.trunc_order = std::min(a.trunc_order, b.trunc_order);
    else
      f.trunc_order = a.has_trunc ? a.trunc_order : b.trunc_order;
    for (auto it = f.terms.begin(); it != f.terms.end();)
      it = (Rat(it->first, f.ram) >= f.trunc_order) ? f.terms.erase(it) : ++it;
  }
  f.normalize();
  return f;
}

PuiseuxSeries ps_mul(const PuiseuxSeries& a, const PuiseuxSeries& b) {
  PuiseuxSeries f;
  f.ram = lcm_long(a.ram, b.ram);
  auto ta = rescale(a.terms, a.ram, f.ram);
  auto tb = rescale(b.terms, b.ram, f.ram);
  // valid order of the product: min over operands of (own trunc + other valuation)
  auto val = [&](const std::map<long, Rat>& t, const PuiseuxSeries& src) {
    if (!t.empty()) return Rat(t.begin()->first, f.ram);
    return src.has_trunc ? src.trunc_order : Rat(0);
  };
  if (a.has_trunc || b.has_trunc) {
    f.has_trunc = true;
    Rat cand_a = a.has_trunc ? a.trunc_order + val(tb, b) : Rat(0);
    Rat cand_b = b.has_trunc ? b.trunc_order + val(ta, a) : Rat(0);
    if (a.has_trunc && b.has_trunc)
      f.trunc_order = std::min(cand_a, cand_b);
    else
      f.trunc_order = a.has_trunc ? cand_a : cand_b;
  }
  for (auto& [ea, ca] : ta)
    for (auto& [eb, cb] : tb) {
      long e = ea + eb;
      if (f.has_trunc && Rat(e, f.ram) >= f.trunc_order) continue;
      f.terms[e] += ca * cb;
    }
  f.normalize();
  return f;
}

PuiseuxSeries ps_pow(const PuiseuxSeries& a, long k) {
  if (k < 0) return ps_pow(ps_inverse(a), -k);
  PuiseuxSeries acc = ps_monomial(Rat(1), Rat(0));
  acc.has_trunc = false;
  PuiseuxSeries base = a;
  unsigned long e = static_cast<unsigned long>(k);
  while (e) {
    if (e & 1UL) acc = ps_mul(acc, base);
    e >>= 1UL;
    if (e) base = ps_mul(base, base);
  }
  if (k > 0 && a.has_trunc && !acc.has_trunc) {
    acc.has_trunc = true;  // k == 1 path copies; larger k handled by ps_mul
    acc.trunc_order = a.trunc_order;
  }
  return acc;
}

PuiseuxSeries ps_inverse(const PuiseuxSeries& a) {
  if (a.terms.empty()) throw std::domain_error("ps_inverse: empty series");
  if (!a.has_trunc)
    throw std::domain_error("ps_inverse: inversion requires a truncated series");
  long r = a.ram;
  long vn = a.terms.begin()->first;
  // trunc numerator in 1/r units; the reciprocal is provably exact below
  // T - 2v, which covers output exponents -v + m for m < T - v
  Rat tn_q = a.trunc_order * r;
  long Tn = static_cast<long>(tn_q.get_num().get_si() / tn_q.get_den().get_si());
  long steps = Tn - vn;
  if (Tn - 2 * vn <= -vn)
    throw std::domain_error("ps_inverse: no certified output order");
  const Rat& lead = a.terms.begin()->second;
  PuiseuxSeries g;
  g.ram = r;
  g.has_trunc = true;
  g.trunc_order = Rat(Tn - 2 * vn, r);
  std::vector<Rat> b(static_cast<size_t>(steps));
  b[0] = 1 / lead;
  for (long m = 1; m < steps; ++m) {
    Rat s(0);
    for (auto& [e, c] : a.terms) {
      long j = e - vn;
      if (j <= 0) continue;
      if (j > m) break;
      s += c * b[static_cast<size_t>(m - j)];
    }
    b[static_cast<size_t>(m)] = -s / lead;
  }
  for (long m = 0; m < steps; ++m)
    if (b[static_cast<size_t>(m)] != 0) g.terms.emplace(-vn + m, b[static_cast<size_t>(m)]);
  g.normalize();
  return g;
}

PuiseuxSeries ps_truncate(const PuiseuxSeries& a, const Rat& order) {
  PuiseuxSeries f = a;
  if (!f.has_trunc || order < f.trunc_order) {
    f.has_trunc = true;
    f.trunc_order = order;
  }
  for (auto it = f.terms.begin(); it != f.terms.end();)
    it = (Rat(it->first, f.ram) >= f.trunc_order) ? f.terms.erase(it) : ++it;
  f.normalize();
  return f;
}

bool ps_equal(const PuiseuxSeries& a, const PuiseuxSeries& b) {
  PuiseuxSeries x = a, y = b;
  x.normalize();
  y.normalize();
  return x.ram == y.ram && x.terms == y.terms;
}

std::vector<std::pair<long, int>> pentagonal_terms(long T) {
  std::vector<std::pair<long, int>> out;
  for (long k = 0;; ++k) {
    long g1 = k * (3 * k - 1) / 2, g2 = k * (3 * k + 1) / 2;
    int s = (k % 2 == 0) ? 1 : -1;
    bool any = false;
    if (g1 < T) out.emplace_back(g1, s), any = true;
    if (k > 0 && g2 < T) out.emplace_back(g2, s), any = true;
    if (!any) break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

PuiseuxSeries euler_product_series(long M) {
  if (M < 0) throw std::invalid_argument("euler_product_series: M >= 0");
  PuiseuxSeries f;
  f.ram = 1;
  f.has_trunc = true;
  f.trunc_order = Rat(M + 1);  // exact through exponent M
  for (auto& [g, s] : pentagonal_terms(M + 1)) f.terms.emplace(g, Rat(s));
  return f;
}

// ---- dense integer Laurent slices ----

Int ZSeries::at(long e) const {
  if (e < lo || e - lo >= static_cast<long>(c.size())) return Int(0);
  return c[static_cast<size_t>(e - lo)];
}

bool ZSeries::stored_zero() const {
  for (auto& x : c)
    if (x != 0) return false;
  return true;
}

ZSeries zs_from_coeffs(long lo, std::vector<Int> coeffs, long trunc) {
  ZSeries z;
  z.lo = lo;
  z.trunc = trunc;
  z.c = std::move(coeffs);
  if (static_cast<long>(z.c.size()) > trunc - lo)
    z.c.resize(static_cast<size_t>(std::max(0L, trunc - lo)));
  return z;
}

// stored length is driven by the operand windows, never by the validity
// bound: exact constants carry a far trunc that must not be materialized
ZSeries zs_add(const ZSeries& a, const ZSeries& b) {
  ZSeries z;
  z.trunc = std::min(a.trunc, b.trunc);
  z.lo = std::min(a.lo, b.lo);
  long hi = std::max(a.lo + static_cast<long>(a.c.size()),
                     b.lo + static_cast<long>(b.c.size()));
  hi = std::min(hi, z.trunc);
  z.c.assign(static_cast<size_t>(std::max(0L, hi - z.lo)), Int(0));
  for (long e = z.lo; e < hi; ++e)
    z.c[static_cast<size_t>(e - z.lo)] = a.at(e) + b.at(e);
  return z;
}

ZSeries zs_sub(const ZSeries& a, const ZSeries& b) {
  ZSeries z;
  z.trunc = std::min(a.trunc, b.trunc);
  z.lo = std::min(a.lo, b.lo);
  long hi = std::max(a.lo + static_cast<long>(a.c.size()),
                     b.lo + static_cast<long>(b.c.size()));
  hi = std::min(hi, z.trunc);
  z.c.assign(static_cast<size_t>(std::max(0L, hi - z.lo)), Int(0));
  for (long e = z.lo; e < hi; ++e)
    z.c[static_cast<size_t>(e - z.lo)] = a.at(e) - b.at(e);
  return z;
}

ZSeries zs_mul_capped(const ZSeries& a, const ZSeries& b, long cap) {
  ZSeries z;
  z.trunc = std::min({a.trunc + b.lo, b.trunc + a.lo, cap});
  z.lo = a.lo + b.lo;
  long stored = static_cast<long>(a.c.size()) + static_cast<long>(b.c.size());
  long len = std::max(0L, std::min(z.trunc - z.lo, stored - 1));
  z.c.assign(static_cast<size_t>(len), Int(0));
  if (len == 0) return z;
  long na = static_cast<long>(a.c.size()), nb = static_cast<long>(b.c.size());
  for (long i = 0; i < na; ++i) {
    if (a.c[static_cast<size_t>(i)] == 0) continue;
    long jmax = std::min(nb, len - i);
    for (long j = 0; j < jmax; ++j) {
      if (b.c[static_cast<size_t>(j)] == 0) continue;
      mpz_addmul(z.c[static_cast<size_t>(i + j)].get_mpz_t(),
                 a.c[static_cast<size_t>(i)].get_mpz_t(),
                 b.c[static_cast<size_t>(j)].get_mpz_t());
    }
  }
  return z;
}

ZSeries zs_mul(const ZSeries& a, const ZSeries& b) {
  return zs_mul_capped(a, b, a.trunc + b.trunc);  // effective cap from operands
}

ZSeries zs_scale(const ZSeries& a, const Int& s) {
  ZSeries z = a;
  for (auto& x : z.c) x *= s;
  return z;
}

ZSeries zs_divexact_ui(const ZSeries& a, unsigned long k) {
  ZSeries z = a;
  for (auto& x : z.c) {
    if (x == 0) continue;
    if (!mpz_divisible_ui_p(x.get_mpz_t(), k))
      throw NonIntegralCoefficient("series coefficient not divisible by " +
                                   std::to_string(k));
    mpz_divexact_ui(x.get_mpz_t(), x.get_mpz_t(), k);
  }
  return z;
}

ZSeries zs_collapse(const ZSeries& a, long d, long mult) {
  assert(d >= 1 && mult >= 1);
  auto fdiv = [](long x, long y) {
    long q = x / y;
    return (x % y < 0) ? q - 1 : q;
  };
  ZSeries z;
  long tmax = fdiv(a.trunc - 1, d);   // every t*d < trunc is known
  long tlo = -fdiv(-a.lo, d);         // smallest grid point >= a.lo
  z.trunc = (tmax + 1) * mult;
  z.lo = tlo * mult;
  // stored window ends at the last grid point the operand actually stores
  long last = a.lo + static_cast<long>(a.c.size()) - 1;
  long thi = a.c.empty() ? tlo - 1 : std::min(tmax, fdiv(last, d));
  z.c.assign(static_cast<size_t>(std::max(0L, thi * mult + 1 - z.lo)), Int(0));
  for (long t = tlo; t <= thi; ++t)
    z.c[static_cast<size_t>(t * mult - z.lo)] = a.at(t * d) * d;
  return z;
}

PuiseuxSeries zs_to_puiseux(const ZSeries& a, long ram) {
  PuiseuxSeries f;
  f.ram = ram;
  f.has_trunc = true;
  f.trunc_order = Rat(a.trunc, ram);
  for (long e = a.lo; e < a.trunc; ++e) {
    Int v = a.at(e);
    if (v != 0) f.terms.emplace(e, Rat(v));
  }
  f.normalize();
  return f;
}

// ---- Hauptmodul expansion ----

namespace {

// dense coefficient vector (index = exponent) of prod (1 - q^k) below T
std::vector<Int> euler_dense(long T, long stride) {
  std::vector<Int> p(static_cast<size_t>(T), Int(0));
  for (auto& [g, s] : pentagonal_terms((T + stride - 1) / stride))
    if (g * stride < T) p[static_cast<size_t>(g * stride)] = s;
  return p;
}

std::mutex g_haupt_mutex;
std::map<long, ZSeries> g_haupt_cache;

}  // namespace

ZSeries hauptmodul_zseries(long N, long M) {
  require_level(N);
  {
    std::lock_guard<std::mutex> lk(g_haupt_mutex);
    auto it = g_haupt_cache.find(N);
    if (it != g_haupt_cache.end() && it->second.trunc > M) {
      ZSeries z = it->second;
      z.trunc = M + 1;
      z.c.resize(static_cast<size_t>(z.trunc - z.lo));
      return z;
    }
  }
  long e = eta_exponent(N);
  long T = M + 2;
  std::vector<Int> P = euler_dense(T, 1);
  std::vector<Int> PN = euler_dense(T, N);
  // B = 1/PN mod q^T; PN is sparse with constant term 1
  std::vector<Int> B(static_cast<size_t>(T), Int(0));
  B[0] = 1;
  auto pent_n = pentagonal_terms((T + N - 1) / N);
  for (long m = 1; m < T; ++m) {
    Int s(0);
    for (auto& [g, sg] : pent_n) {
      long j = g * N;
      if (j == 0) continue;
      if (j > m) break;
      if (sg > 0)
        s += B[static_cast<size_t>(m - j)];
      else
        s -= B[static_cast<size_t>(m - j)];
    }
    B[static_cast<size_t>(m)] = -s;
  }
  // A = P * B mod q^T (P sparse)
  std::vector<Int> A(static_cast<size_t>(T), Int(0));
  for (auto& [g, sg] : pentagonal_terms(T)) {
    for (long m = g; m < T; ++m) {
      if (sg > 0)
        A[static_cast<size_t>(m)] += B[static_cast<size_t>(m - g)];
      else
        A[static_cast<size_t>(m)] -= B[static_cast<size_t>(m - g)];
    }
  }
  // A^e mod q^T by binary powering
  ZSeries base = zs_from_coeffs(0, std::move(A), T);
  ZSeries acc = zs_from_coeffs(0, {Int(1)}, T);
  long k = e;
  while (k) {
    if (k & 1L) acc = zs_mul_capped(acc, base, T);
    k >>= 1L;
    if (k) base = zs_mul_capped(base, base, T);
  }
  // j = q^{-1} * acc + e  (e = 24/(N-1) cancels the constant term)
  ZSeries j;
  j.lo = -1;
  j.trunc = M + 1;
  j.c.assign(static_cast<size_t>(M + 2), Int(0));
  for (long m = 0; m < T && m - 1 < j.trunc; ++m)
    j.c[static_cast<size_t>(m)] = acc.at(m);
  j.c[1] += e;
  if (j.c[0] != 1 || j.c[1] != 0)
    throw NonIntegralCoefficient("hauptmodul normalization failed");
  {
    std::lock_guard<std::mutex> lk(g_haupt_mutex);
    auto it = g_haupt_cache.find(N);
    if (it == g_haupt_cache.end() || it->second.trunc < j.trunc)
      g_haupt_cache[N] = j;
  }
  return j;
}

const Int& HauptmodulSeries::coeff(long m) const {
  assert(m >= 1 && m <= order);
  return c[static_cast<size_t>(m - 1)];
}

PuiseuxSeries HauptmodulSeries::to_puiseux() const {
  PuiseuxSeries f;
  f.ram = 1;
  f.has_trunc = true;
  f.trunc_order = Rat(order + 1);
  f.terms.emplace(-1, Rat(1));
  for (long m = 1; m <= order; ++m)
    if (coeff(m) != 0) f.terms.emplace(m, Rat(coeff(m)));
  return f;
}

HauptmodulSeries hauptmodul_series(long N, long M) {
  if (M < 1) throw std::invalid_argument("hauptmodul_series: M >= 1");
  ZSeries z = hauptmodul_zseries(N, M);
  HauptmodulSeries h;
  h.level = N;
  h.order = M;
  h.c.reserve(static_cast<size_t>(M));
  for (long m = 1; m <= M; ++m) h.c.push_back(z.at(m));
  return h;
}

// ---- numeric evaluation ----

namespace {

// principal q0^(num/den) for a certified q0
CComplex cc_pow_rat(const CComplex& q0, long num, long den, long prec) {
  if (den == 1) {
    if (num >= 0) return cc_pow_ui(q0, static_cast<unsigned long>(num));
    return cc_inv(cc_pow_ui(q0, static_cast<unsigned long>(-num)));
  }
  Real n2 = q0.re * q0.re + q0.im * q0.im;
  if (n2.is_zero()) throw std::domain_error("cc_pow_rat: zero base");
  Real lre(prec), lim(prec);
  mpfr_log(lre.get(), n2.get(), MPFR_RNDN);
  lre = lre / Real::of_long(2, prec);
  mpfr_atan2(lim.get(), q0.im.get(), q0.re.get(), MPFR_RNDN);
  Real s = Real::of_rat(Rat(num, den), prec);
  Real wre = s * lre, wim = s * lim;
  Real mag = r_exp(wre);
  CComplex w{mag * r_cos(wim), mag * r_sin(wim), 0.0};
  double sens = std::fabs(s.to_double()) * w.abs_double() /
                std::max(q0.abs_lower(), 1e-300);
  w.err = sens * q0.err +
          w.abs_double() * (1.0 + std::fabs(wim.to_double())) *
              std::ldexp(1.0, 6 - static_cast<int>(prec));
  return w;
}

double tail_bound(double maxcoeff, double qabs_up, double first_dropped) {
  if (qabs_up >= 1.0) return 1e308;
  return maxcoeff * std::pow(qabs_up, first_dropped) / (1.0 - qabs_up);
}

}  // namespace

CComplex series_eval_complex(const PuiseuxSeries& f, const CComplex& q0,
                             long prec) {
  if (!(q0.abs_upper() < 1.0))
    throw std::domain_error("series_eval_complex: requires |q0| < 1");
  CComplex s = cc_zero(prec);
  double maxc = 0.0;
  for (auto& [e, c] : f.terms) {
    CComplex t = cc_mul_rat(cc_pow_rat(q0, e, f.ram, prec), c);
    s = cc_add(s, t);
    maxc = std::max(maxc, std::fabs(c.get_d()));
  }
  if (f.has_trunc)
    s.err += tail_bound(std::max(maxc, 1.0), q0.abs_upper(),
                        f.trunc_order.get_d());
  return s;
}

CComplex series_eval_complex(const HauptmodulSeries& f, const CComplex& q0,
                             long prec) {
  if (!(q0.abs_upper() < 1.0))
    throw std::domain_error("series_eval_complex: requires |q0| < 1");
  CComplex s = cc_zero(prec);
  double maxc = 1.0;
  for (long m = f.order; m >= 1; --m) {
    s = cc_mul(s, q0);
    if (f.coeff(m) != 0)
      s = cc_add(s, cc_of_rat(Rat(f.coeff(m)), Rat(0), prec));
    maxc = std::max(maxc, std::fabs(mpz_get_d(f.coeff(m).get_mpz_t())));
  }
  s = cc_mul(s, q0);  // now s = sum c_m q^m
  s = cc_add(s, cc_inv(q0));
  s.err += tail_bound(maxc, q0.abs_upper(), static_cast<double>(f.order + 1));
  return s;
}

}  // namespace gamma0
