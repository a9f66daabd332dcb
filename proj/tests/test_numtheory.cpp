#include <catch2/catch_amalgamated.hpp>

#include <gamma0/numtheory.hpp>

using namespace gamma0;

TEST_CASE("divisor_stats") {
  DivisorStats d1 = divisor_stats(1);
  CHECK(d1.divisors == std::vector<long>{1});
  CHECK(d1.sigma0 == 1);
  CHECK(d1.sigma1 == 1);
  CHECK(d1.sum_min == 1);
  CHECK(d1.sum_max == 1);

  DivisorStats d12 = divisor_stats(12);
  CHECK(d12.divisors == std::vector<long>{1, 2, 3, 4, 6, 12});
  CHECK(d12.sigma0 == 6);
  CHECK(d12.sigma1 == 28);
  CHECK(d12.sum_min == 12);
  CHECK(d12.sum_max == 44);

  DivisorStats d49 = divisor_stats(49);
  CHECK(d49.sigma0 == 3);
  CHECK(d49.sum_min == 1 + 7 + 1);
  CHECK(d49.sum_max == 49 + 7 + 49);

  // min + max pairs up to the full divisor sum twice
  for (long n : {2L, 6L, 9L, 30L, 36L, 97L}) {
    DivisorStats ds = divisor_stats(n);
    CHECK(ds.sum_min + ds.sum_max == 2 * ds.sigma1);
    CHECK(ds.sigma0 % 2 == (square_root_if_perfect(n) ? 1 : 0));
  }
}

TEST_CASE("euler_phi") {
  CHECK(euler_phi(1) == 1);
  CHECK(euler_phi(2) == 1);
  CHECK(euler_phi(12) == 4);
  CHECK(euler_phi(13) == 12);
  CHECK(euler_phi(100) == 40);
}

TEST_CASE("square_root_if_perfect") {
  CHECK(square_root_if_perfect(1).value() == 1);
  CHECK(square_root_if_perfect(16).value() == 4);
  CHECK(square_root_if_perfect(49).value() == 7);
  CHECK(!square_root_if_perfect(2));
  CHECK(!square_root_if_perfect(3));
  CHECK(!square_root_if_perfect(15));
  CHECK(!square_root_if_perfect(17));
  CHECK(!square_root_if_perfect(24));
  CHECK(square_root_if_perfect(1L << 40).value() == (1L << 20));
  CHECK(!square_root_if_perfect((1L << 40) + 1));
}

TEST_CASE("signed residues and inverses") {
  CHECK(sp_reduce(13, 14) == 1);
  CHECK(sp_reduce(13, 7) == -6);
  CHECK(sp_reduce(13, -7) == 6);
  CHECK(sp_reduce(5, 3) == -2);

  // frozen inverse tables
  const std::pair<long, long> inv5[] = {{-2, 2}, {-1, -1}, {1, 1}, {2, -2}};
  for (auto [k, i] : inv5) CHECK(sp_inverse(5, k).first == i);
  const std::pair<long, long> inv7[] = {{-3, 2},  {-2, 3}, {-1, -1},
                                        {1, 1},   {2, -3}, {3, -2}};
  for (auto [k, i] : inv7) CHECK(sp_inverse(7, k).first == i);
  const std::pair<long, long> inv13[] = {{-6, 2}, {-5, 5},  {-4, 3}, {-3, 4},
                                         {-2, 6}, {-1, -1}, {1, 1},  {2, -6},
                                         {3, -4}, {4, -3},  {5, -5}, {6, -2}};
  for (auto [k, i] : inv13) CHECK(sp_inverse(13, k).first == i);

  // defining property k * k^{-1} = 1 mod p, both reduced into S_p
  for (long p : {5L, 7L, 13L})
    for (long k = -(p - 1) / 2; k <= (p - 1) / 2; ++k) {
      if (k == 0) continue;
      auto [ki, kr] = sp_inverse(p, k);
      CHECK(kr == k);
      CHECK((ki * k - 1) % p == 0);
      CHECK(ki >= -(p - 1) / 2);
      CHECK(ki <= (p - 1) / 2);
    }
}

TEST_CASE("gcd_long") {
  CHECK(gcd_long(12, 18) == 6);
  CHECK(gcd_long(-12, 18) == 6);
  CHECK(gcd_long(0, 7) == 7);
  CHECK(gcd_long(7, 0) == 7);
  CHECK(gcd_long(1, 1) == 1);
  CHECK(gcd_long(35, 4) == 1);
}
