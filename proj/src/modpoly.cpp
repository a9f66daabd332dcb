#include <gamma0/modpoly.hpp>

#include <gamma0/errors.hpp>

#include <numeric>
#include <stdexcept>

namespace gamma0 {

namespace {

// effectively-exact truncation marker for constant series
constexpr long kFarTrunc = 1L << 40;

ZSeries zs_zero() { return zs_from_coeffs(0, {}, kFarTrunc); }

ZSeries zs_one() { return zs_from_coeffs(0, {Int(1)}, kFarTrunc); }

std::vector<ZSeries> poly_mul(const std::vector<ZSeries>& A,
                              const std::vector<ZSeries>& B) {
  std::vector<ZSeries> C(A.size() + B.size() - 1, zs_zero());
  for (size_t i = 0; i < A.size(); ++i)
    for (size_t j = 0; j < B.size(); ++j)
      C[i + j] = zs_add(C[i + j], zs_mul(A[i], B[j]));
  return C;
}

// elementary symmetric functions e_1..e_d of the d conjugates for divisor a,
// from the collapsed power sums via Newton's identities
std::vector<ZSeries> newton_elementary(const std::vector<ZSeries>& p, long d) {
  std::vector<ZSeries> e(static_cast<size_t>(d + 1));
  e[0] = zs_one();
  for (long k = 1; k <= d; ++k) {
    ZSeries acc = zs_zero();
    for (long i = 1; i <= k; ++i) {
      ZSeries t = (i == k) ? p[static_cast<size_t>(i)]
                           : zs_mul(e[static_cast<size_t>(k - i)],
                                    p[static_cast<size_t>(i)]);
      acc = (i % 2) ? zs_add(acc, t) : zs_sub(acc, t);
    }
    e[static_cast<size_t>(k)] =
        zs_divexact_ui(acc, static_cast<unsigned long>(k));
  }
  return e;
}

// write the Laurent series S as an integer polynomial in j_N of degree <= B,
// using that j_N^m = q^{-m} + O(q^{-m+1}); the leftover must vanish through
// q^guard
std::vector<Int> extract_j_polynomial(ZSeries S, long B, long guard,
                                      const std::vector<ZSeries>& jp) {
  if (S.trunc <= guard)
    throw NonvanishingRemainder(
        "series validity does not reach the guard window; increase guard");
  std::vector<Int> y(static_cast<size_t>(B + 1), Int(0));
  for (;;) {
    long e0 = 0;
    bool found = false;
    for (long e = S.lo; e < 0; ++e)
      if (S.at(e) != 0) {
        e0 = e;
        found = true;
        break;
      }
    if (!found) break;
    long m = -e0;
    if (m > B)
      throw NonvanishingRemainder("pole order exceeds the degree bound");
    Int c = S.at(e0);
    y[static_cast<size_t>(m)] = c;
    S = zs_sub(S, zs_scale(jp[static_cast<size_t>(m)], c));
  }
  y[0] = S.at(0);
  if (S.trunc <= guard)
    throw NonvanishingRemainder(
        "guard window lost during pole subtraction; increase guard");
  for (long e = 1; e <= guard; ++e)
    if (S.at(e) != 0)
      throw NonvanishingRemainder("nonzero remainder at q^" +
                                  std::to_string(e));
  return y;
}

std::vector<Int> trim(std::vector<Int> v) {
  while (v.size() > 1 && v.back() == 0) v.pop_back();
  return v;
}

}  // namespace

std::vector<std::pair<long, long>> coset_representatives(long n, long N) {
  require_level(N);
  if (n < 1) throw std::invalid_argument("n must be positive");
  std::vector<std::pair<long, long>> out;
  for (long a : divisor_stats(n).divisors) {
    if (std::gcd(a, N) != 1) continue;
    for (long b = 0; b < n / a; ++b) out.emplace_back(a, b);
  }
  return out;
}

std::vector<PuiseuxSeries> conjugate_power_sums(long n, long N, long a,
                                                long k_max, long M) {
  require_level(N);
  if (n < 1 || a < 1 || n % a != 0 || std::gcd(a, N) != 1)
    throw std::invalid_argument("a must divide n and be coprime to the level");
  if (k_max < 1) throw std::invalid_argument("k_max must be positive");
  if (M < 1) throw std::invalid_argument("insufficient series order");
  long d = n / a;
  ZSeries j1 = hauptmodul_zseries(N, M);
  std::vector<PuiseuxSeries> out;
  ZSeries jk = j1;
  for (long k = 1; k <= k_max; ++k) {
    ZSeries pk = zs_collapse(jk, d, a);
    if (pk.trunc <= 0)
      throw std::invalid_argument("insufficient series order");
    out.push_back(zs_to_puiseux(pk, 1));
    if (k < k_max) jk = zs_mul_capped(jk, j1, M + 1);
  }
  return out;
}

long ModularPolynomial::y_degree() const {
  long deg = 0;
  for (const auto& row : coeffs)
    for (size_t k = row.size(); k-- > 0;)
      if (row[k] != 0) {
        deg = std::max(deg, static_cast<long>(k));
        break;
      }
  return deg;
}

Int ModularPolynomial::at(long i, long k) const {
  if (i < 0 || i >= static_cast<long>(coeffs.size())) return Int(0);
  const auto& row = coeffs[static_cast<size_t>(i)];
  if (k < 0 || k >= static_cast<long>(row.size())) return Int(0);
  return row[static_cast<size_t>(k)];
}

ModularPolynomial build_modular_polynomial(long n, long N, long guard) {
  require_level(N);
  if (n < 1) throw std::invalid_argument("n must be positive");
  if (std::gcd(n, N) != 1)
    throw std::domain_error("n must be coprime to the level");
  if (guard < 1) throw std::invalid_argument("guard must be positive");

  DivisorStats ds = divisor_stats(n);
  long B = ds.sigma1;  // X-degree and total pole bound

  std::vector<ZSeries> phi{zs_one()};
  for (long a : ds.divisors) {
    long d = n / a;
    // power sums must stay valid through the Newton recursion (each level
    // can lose up to one pole depth a) and the later product over divisors
    // (cofactor pole B - a)
    long vp = guard + 1 + B + n - a;
    long Tj = (vp * d + a - 1) / a + d + 2;
    ZSeries j1 = hauptmodul_zseries(N, Tj - 1);
    std::vector<ZSeries> p(static_cast<size_t>(d + 1));
    ZSeries jk = j1;
    for (long i = 1; i <= d; ++i) {
      p[static_cast<size_t>(i)] = zs_collapse(jk, d, a);
      if (i < d) jk = zs_mul_capped(jk, j1, Tj);
    }
    std::vector<ZSeries> e = newton_elementary(p, d);
    std::vector<ZSeries> F(static_cast<size_t>(d + 1));
    for (long k = 0; k <= d; ++k) {
      ZSeries ek = e[static_cast<size_t>(k)];
      F[static_cast<size_t>(d - k)] = (k % 2) ? zs_scale(ek, Int(-1)) : ek;
    }
    phi = poly_mul(phi, F);
  }
  if (static_cast<long>(phi.size()) != B + 1)
    throw std::logic_error("X-degree does not match the divisor sum");

  std::vector<ZSeries> jp(static_cast<size_t>(B + 1));
  jp[0] = zs_one();
  if (B >= 1) {
    ZSeries base = hauptmodul_zseries(N, guard + B);
    for (long m = 1; m <= B; ++m)
      jp[static_cast<size_t>(m)] = zs_mul(jp[static_cast<size_t>(m - 1)], base);
  }

  ModularPolynomial P;
  P.n = n;
  P.level = N;
  P.coeffs.reserve(phi.size());
  for (const ZSeries& S : phi)
    P.coeffs.push_back(extract_j_polynomial(S, B, guard, jp));
  if (P.at(B, 0) != 1) throw std::logic_error("top coefficient not monic");
  for (long k = 1; k <= B; ++k)
    if (P.at(B, k) != 0) throw std::logic_error("top coefficient not monic");
  return P;
}

std::vector<Int> diagonal(const ModularPolynomial& P) {
  if (square_root_if_perfect(P.n))
    throw std::domain_error(
        "diagonal of a square-n modular polynomial is identically zero");
  long D = P.x_degree() + P.y_degree();
  std::vector<Int> out(static_cast<size_t>(D + 1), Int(0));
  for (long i = 0; i <= P.x_degree(); ++i)
    for (long k = 0; k <= P.y_degree(); ++k)
      out[static_cast<size_t>(i + k)] += P.at(i, k);
  return trim(std::move(out));
}

std::vector<Int> diagonal_quotient(const ModularPolynomial& P) {
  if (!square_root_if_perfect(P.n))
    throw std::domain_error("diagonal_quotient requires a perfect-square n");
  long dx = P.x_degree();
  long width = P.y_degree() + dx + 2;
  // synthetic division of sum_i R_i(Y) X^i by (X - Y):
  // Q_{dx-1} = R_dx, Q_{i-1} = R_i + Y Q_i, remainder R_0 + Y Q_0 must vanish
  std::vector<std::vector<Int>> Q(
      static_cast<size_t>(std::max(1L, dx)),
      std::vector<Int>(static_cast<size_t>(width), Int(0)));
  auto row = [&](long i) {
    std::vector<Int> r(static_cast<size_t>(width), Int(0));
    for (long k = 0; k < width; ++k) r[static_cast<size_t>(k)] = P.at(i, k);
    return r;
  };
  auto shift_add = [&](const std::vector<Int>& base,
                       const std::vector<Int>& q) {
    std::vector<Int> r = base;
    for (long k = width - 1; k >= 1; --k)
      r[static_cast<size_t>(k)] += q[static_cast<size_t>(k - 1)];
    return r;
  };
  Q[static_cast<size_t>(dx - 1)] = row(dx);
  for (long i = dx - 1; i >= 1; --i)
    Q[static_cast<size_t>(i - 1)] = shift_add(row(i), Q[static_cast<size_t>(i)]);
  std::vector<Int> rem = shift_add(row(0), Q[0]);
  for (const Int& c : rem)
    if (c != 0)
      throw std::logic_error("modular polynomial is not divisible by X - Y");
  std::vector<Int> out(static_cast<size_t>(dx + width), Int(0));
  for (long i = 0; i < dx; ++i)
    for (long k = 0; k < width; ++k)
      out[static_cast<size_t>(i + k)] += Q[static_cast<size_t>(i)][static_cast<size_t>(k)];
  return trim(std::move(out));
}

}  // namespace gamma0
