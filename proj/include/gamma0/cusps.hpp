#pragma once

#include <gamma0/numtheory.hpp>

#include <vector>

namespace gamma0 {

// Cusp u/v of Gamma_0(N) in lowest terms; infinity is encoded as 1/0.
struct CuspRep {
  long u = 1;
  long v = 0;

  bool is_infinity() const { return v == 0; }

  friend bool operator==(const CuspRep& l, const CuspRep& r) {
    return l.u == r.u && l.v == r.v;
  }
  friend bool operator<(const CuspRep& l, const CuspRep& r) {
    if (l.v != r.v) return l.v < r.v;
    return l.u < r.u;
  }
};

// Inequivalent representatives u/v with v | N, 0 <= u < N, gcd(u, N) = 1,
// u minimal in its class mod (v, N/v).  Ordered by v then u; the member
// 1/N represents the class of infinity.
std::vector<CuspRep> cusp_set(long N);

// Gamma_0(N)-equivalence of arbitrary cusps (coprime pairs, v >= 0).
bool cusp_equivalent(const CuspRep& x, const CuspRep& y, long N);

// Width N/(v (v, N/v)).  Requires v | N.
long cusp_width(const CuspRep& s, long N);

// Multiplicity nu_{s,n,N}: sum of min(d, n/d) over divisors d of n with
// n = d^2 mod (v, N/(v,N)); modulus 1 for the infinity class.
// Requires gcd(n, N) = 1.
long nu(const CuspRep& s, long n, long N);

// Whether the degree-n map alpha_{a,b} = ((a, b), (0, n/a)) sends the
// cusp class of s to itself: n = (au + bv, n/a)^2 mod (v, N/v).
bool selfmap_cusp_predicate(long a, long b, const CuspRep& s, long n, long N);

// Normalizes an arbitrary cusp to its representative in cusp_set(N).
CuspRep cusp_normalize(const CuspRep& s, long N);

}  // namespace gamma0
