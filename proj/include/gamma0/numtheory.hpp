#pragma once
#include <gmpxx.h>

#include <optional>
#include <utility>
#include <vector>

namespace gamma0 {

using Int = mpz_class;
using Rat = mpq_class;

struct DivisorStats {
  long n = 0;
  std::vector<long> divisors;  // ascending
  long sigma0 = 0;             // number of divisors
  long sigma1 = 0;             // sum of divisors
  long sum_min = 0;            // sum of min(d, n/d)
  long sum_max = 0;            // sum of max(d, n/d)
};

DivisorStats divisor_stats(long n);

long euler_phi(long m);

std::optional<long> square_root_if_perfect(long n);

// Signed residue system S_p = {±1, ..., ±(p-1)/2}.
// sp_reduce maps any x coprime to p into S_p; sp_inverse returns
// (inverse of x in S_p, reduction of x into S_p).
long sp_reduce(long p, long x);
std::pair<long, long> sp_inverse(long p, long x);

long gcd_long(long a, long b);

}  // namespace gamma0
