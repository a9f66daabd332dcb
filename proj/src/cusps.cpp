#include <gamma0/cusps.hpp>

#include <gamma0/errors.hpp>

#include <map>
#include <stdexcept>

namespace gamma0 {

namespace {

// Lowest terms, v >= 0, infinity pinned to 1/0.
CuspRep normalize_fraction(const CuspRep& s) {
  long u = s.u, v = s.v;
  if (v == 0) return {1, 0};
  if (v < 0) {
    u = -u;
    v = -v;
  }
  long g = gcd_long(u < 0 ? -u : u, v);
  if (g > 1) {
    u /= g;
    v /= g;
  }
  return {u, v};
}

}  // namespace

std::vector<CuspRep> cusp_set(long N) {
  require_level(N);
  std::vector<CuspRep> out;
  for (long v : divisor_stats(N).divisors) {
    long m = gcd_long(v, N / v);
    std::map<long, long> least;  // class of u mod m -> least u
    for (long u = 0; u < N; ++u) {
      if (gcd_long(u, N) != 1) continue;
      long r = u % m;
      auto it = least.find(r);
      if (it == least.end()) least[r] = u;
    }
    for (auto& [r, u] : least) out.push_back({u, v});
  }
  return out;
}

bool cusp_equivalent(const CuspRep& x, const CuspRep& y, long N) {
  CuspRep s = normalize_fraction(x), r = normalize_fraction(y);
  // u/v ~ u'/v' iff for some unit t: v' = t v (mod N) and
  // u' = t^{-1} u (mod (v, N)).
  long gv = gcd_long(s.v, N);  // equals gcd(r.v, N) when equivalent
  for (long t = 1; t < N; ++t) {
    if (gcd_long(t, N) != 1) continue;
    if ((r.v - t * s.v) % N != 0) continue;
    long tinv = 0;
    for (long w = 1; w < N; ++w)
      if ((t * w) % N == 1) {
        tinv = w;
        break;
      }
    long m = gv == 0 ? N : gv;
    if (((r.u - tinv * s.u) % m + m) % m == 0) return true;
  }
  return false;
}

CuspRep cusp_normalize(const CuspRep& s, long N) {
  for (const CuspRep& r : cusp_set(N))
    if (cusp_equivalent(s, r, N)) return r;
  throw std::logic_error("cusp missed every representative");
}

long cusp_width(const CuspRep& s, long N) {
  require_level(N);
  if (s.v <= 0 || N % s.v != 0)
    throw std::invalid_argument("cusp width needs v | N");
  return N / (s.v * gcd_long(s.v, N / s.v));
}

long nu(const CuspRep& s, long n, long N) {
  require_level(N);
  if (n <= 0) throw std::invalid_argument("n must be positive");
  if (gcd_long(n, N) != 1)
    throw std::invalid_argument("n must be coprime to the level");
  CuspRep r = s.is_infinity() ? CuspRep{1, 0} : cusp_normalize(s, N);
  long m = r.is_infinity() ? 1 : gcd_long(r.v, N / r.v);
  long total = 0;
  for (long d : divisor_stats(n).divisors)
    if ((n - d * d) % m == 0) total += std::min(d, n / d);
  return total;
}

bool selfmap_cusp_predicate(long a, long b, const CuspRep& s, long n, long N) {
  require_level(N);
  if (n <= 0 || a <= 0 || n % a != 0)
    throw std::invalid_argument("a must divide n");
  if (gcd_long(n, N) != 1 || gcd_long(a, N) != 1)
    throw std::invalid_argument("n and a must be coprime to the level");
  CuspRep r = s.is_infinity() ? CuspRep{1, 0} : cusp_normalize(s, N);
  long m = r.is_infinity() ? 1 : gcd_long(r.v, N / r.v);
  long g = gcd_long(a * r.u + b * r.v, n / a);
  return ((n - g * g) % m + m) % m == 0;
}

}  // namespace gamma0
