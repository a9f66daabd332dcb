#pragma once

#include <gamma0/forms.hpp>
#include <gamma0/numtheory.hpp>

#include <map>
#include <string>
#include <vector>

namespace gamma0 {

// Tables describing the fundamental region of Gamma_0(p) for a prime
// p >= 5: the signed residues S_p = {+-1, ..., +-(p-1)/2}, the arc
// matrices gamma_k, the elliptic sets E2 (k^2 = -1 mod p) and E3
// (k^2 - k + 1 = 0 mod p), and the boundary tie-break tables k2, k3.
struct PrimeDomainData {
  long p;
  std::vector<long> S;            // ascending, zero omitted
  std::map<long, long> inv;       // k -> k^{-1} reduced into S_p
  std::map<long, Mat2> gamma;     // k -> gamma_k, lower row (p, k^{-1})
  std::vector<long> E2, E3;       // ascending
  std::map<long, long> k2;        // k -> min{k, -k^{-1}}
  std::map<long, long> k3;        // on S_p - {1}: min of the 3-cycle of
                                  // k under k -> <1 - k^{-1}>
};

// Cached; rejects composite p and p < 5.
const PrimeDomainData& build_domain(long p);

// gamma_k = ((k, (k k^{-1} - 1)/p), (p, k^{-1})).  Rejects k = 0 mod p.
Mat2 gamma_k(long p, long k);

// Exact membership test for the fundamental region of Gamma_0(N),
// including all boundary tie-break rules.
bool in_fundamental_region(const CmPoint& tau, long N);

struct EllipticPoints {
  std::vector<CmPoint> order2;  // k/p + i/p for k in E2
  std::vector<CmPoint> order3;  // k/p - 1/(2p) + (sqrt(3)/(2p)) i, k in E3
};

EllipticPoints elliptic_points(long p);

// Serialized views of the region: arcs, elliptic points, tie tables.
// The JSON "im" pair holds the rational coefficient as displayed in the
// point's closed form: the imaginary part itself for order-2 points,
// the multiplier of sqrt(3) for order-3 points.
std::string export_domain_json(long p);
std::string export_domain_svg(long p);

}  // namespace gamma0
