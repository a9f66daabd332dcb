#include "gamma0/numtheory.hpp"

#include <cassert>
#include <numeric>
#include <stdexcept>

namespace gamma0 {

DivisorStats divisor_stats(long n) {
  if (n <= 0) throw std::invalid_argument("divisor_stats: n must be positive");
  DivisorStats st;
  st.n = n;
  for (long d = 1; d * d <= n; ++d) {
    if (n % d) continue;
    st.divisors.push_back(d);
    if (d != n / d) st.divisors.push_back(n / d);
  }
  std::sort(st.divisors.begin(), st.divisors.end());
  st.sigma0 = static_cast<long>(st.divisors.size());
  for (long d : st.divisors) {
    st.sigma1 += d;
    st.sum_min += std::min(d, n / d);
    st.sum_max += std::max(d, n / d);
  }
  return st;
}

long euler_phi(long m) {
  if (m <= 0) throw std::invalid_argument("euler_phi: m must be positive");
  long result = m;
  for (long p = 2; p * p <= m; ++p) {
    if (m % p) continue;
    while (m % p == 0) m /= p;
    result -= result / p;
  }
  if (m > 1) result -= result / m;
  return result;
}

std::optional<long> square_root_if_perfect(long n) {
  if (n < 0) return std::nullopt;
  mpz_class z(static_cast<long>(n));
  if (mpz_perfect_square_p(z.get_mpz_t())) {
    mpz_class r;
    mpz_sqrt(r.get_mpz_t(), z.get_mpz_t());
    return r.get_si();
  }
  return std::nullopt;
}

long sp_reduce(long p, long x) {
  assert(p >= 3 && p % 2 == 1);
  long r = x % p;
  if (r < 0) r += p;
  if (r == 0) throw std::invalid_argument("sp_reduce: x divisible by p");
  if (r > (p - 1) / 2) r -= p;
  return r;
}

std::pair<long, long> sp_inverse(long p, long x) {
  long red = sp_reduce(p, x);
  mpz_class inv, xm(red), pm(p);
  if (!mpz_invert(inv.get_mpz_t(), xm.get_mpz_t(), pm.get_mpz_t()))
    throw std::invalid_argument("sp_inverse: not invertible");
  return {sp_reduce(p, inv.get_si()), red};
}

long gcd_long(long a, long b) { return std::gcd(a, b); }

}  // namespace gamma0
