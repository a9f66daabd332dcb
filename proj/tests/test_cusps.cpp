#include <catch2/catch_amalgamated.hpp>

#include <gamma0/cusps.hpp>
#include <gamma0/errors.hpp>
#include <gamma0/modpoly.hpp>
#include <gamma0/numtheory.hpp>

#include <algorithm>

using namespace gamma0;

namespace {

CuspRep C(long u, long v) { return CuspRep{u, v}; }

}  // namespace

TEST_CASE("cusp representatives and widths") {
  struct Row {
    long N;
    std::vector<CuspRep> reps;
    std::vector<long> widths;
  };
  const Row rows[] = {
      {2, {C(1, 1), C(1, 2)}, {2, 1}},
      {3, {C(1, 1), C(1, 3)}, {3, 1}},
      {4, {C(1, 1), C(1, 2), C(1, 4)}, {4, 1, 1}},
      {5, {C(1, 1), C(1, 5)}, {5, 1}},
      {7, {C(1, 1), C(1, 7)}, {7, 1}},
      {13, {C(1, 1), C(1, 13)}, {13, 1}},
  };
  for (const Row& row : rows) {
    std::vector<CuspRep> s = cusp_set(row.N);
    CHECK(s == row.reps);
    for (size_t i = 0; i < s.size(); ++i)
      CHECK(cusp_width(s[i], row.N) == row.widths[i]);
    // 1/N carries the class of infinity
    CHECK(cusp_equivalent(s.back(), C(1, 0), row.N));
    // representatives are fixed points of normalization and pairwise distinct
    for (size_t i = 0; i < s.size(); ++i) {
      CHECK(cusp_normalize(s[i], row.N) == s[i]);
      for (size_t j = i + 1; j < s.size(); ++j)
        CHECK(!cusp_equivalent(s[i], s[j], row.N));
    }
  }
  CHECK(CuspRep{}.is_infinity());
}

TEST_CASE("cusp count matches the divisor formula") {
  for (long N : kSupportedLevels) {
    long count = 0;
    for (long d = 1; d <= N; ++d)
      if (N % d == 0) count += euler_phi(gcd_long(d, N / d));
    CHECK(static_cast<long>(cusp_set(N).size()) == count);
  }
}

TEST_CASE("cusp equivalence and normalization") {
  // the rational cusp 0 = 0/1 joins the class of 1/1
  CHECK(cusp_equivalent(C(0, 1), C(1, 1), 2));
  CHECK(cusp_normalize(C(0, 1), 4) == C(1, 1));
  // infinity normalizes to 1/N
  CHECK(cusp_normalize(C(1, 0), 5) == C(1, 5));
  CHECK(cusp_normalize(C(1, 0), 4) == C(1, 4));
  // 3/2 and 1/2 agree at level 4
  CHECK(cusp_equivalent(C(3, 2), C(1, 2), 4));
  CHECK(cusp_normalize(C(3, 2), 4) == C(1, 2));
  // denominators coprime to the level all fall into the class of 0
  CHECK(cusp_normalize(C(1, 3), 4) == C(1, 1));
  CHECK(cusp_normalize(C(2, 5), 4) == C(1, 1));
  // distinct classes stay distinct
  CHECK(!cusp_equivalent(C(1, 1), C(1, 2), 4));
  CHECK(!cusp_equivalent(C(1, 2), C(1, 4), 4));
  CHECK(!cusp_equivalent(C(1, 1), C(1, 0), 2));

  CHECK_THROWS_AS(cusp_width(C(1, 3), 4), std::invalid_argument);  // 3 does not divide 4
}

TEST_CASE("cusp multiplicities") {
  CHECK(nu(C(1, 1), 9, 4) == 5);
  CHECK(nu(C(1, 2), 9, 4) == 5);
  CHECK(nu(C(1, 1), 12, 5) == 12);
  CHECK(nu(C(1, 5), 12, 5) == 12);
  CHECK(nu(C(1, 1), 4, 13) == 4);
  CHECK(nu(C(1, 13), 4, 13) == 4);
  CHECK(nu(C(1, 2), 35, 4) == 12);
  CHECK(nu(C(1, 1), 3, 2) == 2);
  CHECK(nu(C(1, 2), 3, 2) == 2);
  CHECK(nu(C(1, 1), 1, 7) == 1);

  CHECK_THROWS_AS(nu(C(1, 2), 6, 4), std::invalid_argument);  // gcd(6, 4) = 2
  CHECK_THROWS_AS(nu(C(1, 1), 0, 2), std::invalid_argument);
}

TEST_CASE("width-weighted selfmap sum collapses to nu") {
  // h * sum over selfmaps alpha_{a,b} of min(1/h, 1/h') = nu(s, n, N), where
  // h' = h n / gcd(a u + b v, n/a)^2 is the width of the image cusp scaled
  // through alpha_{a,b}
  for (long N : kSupportedLevels)
    for (long n = 1; n <= 30; ++n) {
      if (gcd_long(n, N) != 1) continue;
      for (const CuspRep& s : cusp_set(N)) {
        long h = cusp_width(s, N);
        Rat sum(0);
        for (auto [a, b] : coset_representatives(n, N)) {
          if (!selfmap_cusp_predicate(a, b, s, n, N)) continue;
          long g = gcd_long(a * s.u + b * s.v, n / a);
          Rat inv_image(g * g, h * n);
          inv_image.canonicalize();
          sum += std::min(Rat(1, h), inv_image);
        }
        CHECK(Rat(h) * sum == nu(s, n, N));
      }
    }
}
