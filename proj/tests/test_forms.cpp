#include <catch2/catch_amalgamated.hpp>

#include <gamma0/errors.hpp>
#include <gamma0/forms.hpp>

#include <random>

using namespace gamma0;

namespace {

QuadForm F(long a, long b, long c) { return QuadForm{Int(a), Int(b), Int(c)}; }

std::vector<QuadForm> table(std::initializer_list<std::array<long, 3>> rows) {
  std::vector<QuadForm> out;
  for (auto& r : rows) out.push_back(F(r[0], r[1], r[2]));
  std::sort(out.begin(), out.end());
  return out;
}

QuadForm random_form(std::mt19937_64& rng, long a_multiple) {
  std::uniform_int_distribution<long> da(1, 12), db(-20, 20), dc(1, 20);
  long a = da(rng) * a_multiple;
  long b = db(rng);
  long cmin = b * b / (4 * a) + 1;  // forces b^2 - 4ac < 0
  long c = cmin + dc(rng);
  return F(a, b, c);
}

Mat2 random_gamma0(std::mt19937_64& rng, long N) {
  std::uniform_int_distribution<long> de(-3, 3), dlen(2, 6);
  Mat2 g = mat_identity();
  long len = dlen(rng);
  for (long i = 0; i < len; ++i) {
    long e = de(rng);
    Mat2 f = (i % 2 == 0) ? mat_translation(Int(e))
                          : Mat2{Int(1), Int(0), Int(e * N), Int(1)};
    g = mat_mul(g, f);
  }
  return g;
}

}  // namespace

TEST_CASE("form invariants") {
  QuadForm Q = F(2, 2, 1);
  CHECK(form_disc(Q) == -4);
  FormInvariants inv = form_invariants(Q);
  CHECK(inv.disc == -4);
  CHECK(inv.content == 1);
  CHECK(inv.primitive == Q);
  CHECK(inv.tau.re == Rat(-1, 2));
  CHECK(inv.tau.im2 == Rat(1, 4));

  FormInvariants imp = form_invariants(F(2, 4, 4));
  CHECK(imp.disc == -16);
  CHECK(imp.content == 2);
  CHECK(imp.primitive == F(1, 2, 2));
  CHECK(imp.primitive_disc == -4);

  CHECK_THROWS_AS(form_invariants(F(-1, 0, -1)), std::invalid_argument);
  CHECK_THROWS_AS(form_invariants(F(1, 3, 1)), std::invalid_argument);  // disc > 0
}

TEST_CASE("matrix action") {
  QuadForm Q = F(3, 1, 5);
  CHECK(act(Q, mat_identity()) == Q);

  std::mt19937_64 rng(20240816);
  for (int i = 0; i < 50; ++i) {
    QuadForm R = random_form(rng, 1);
    Mat2 g = random_gamma0(rng, 2), h = random_gamma0(rng, 2);
    CHECK(act(act(R, g), h) == act(R, mat_mul(g, h)));
    CHECK(form_disc(act(R, g)) == form_disc(R));
    FormInvariants a = form_invariants(act(R, g));
    CHECK(a.content == form_invariants(R).content);
  }

  Mat2 bad{Int(1), Int(0), Int(0), Int(2)};
  CHECK_THROWS_AS(act(Q, bad), std::invalid_argument);
  CHECK(mat_det(mat_inverse(random_gamma0(rng, 3))) == 1);
}

TEST_CASE("check_gamma0 stamps the level") {
  Mat2 g{Int(1), Int(0), Int(6), Int(1)};
  CHECK(check_gamma0(g, 3));
  CHECK(g.gamma0_level == 3);
  Mat2 h{Int(1), Int(1), Int(1), Int(2)};
  CHECK(!check_gamma0(h, 2));
}

TEST_CASE("classical reduced forms") {
  CHECK(sl2_reduced_forms(Int(-3)) == table({{1, 1, 1}}));
  CHECK(sl2_reduced_forms(Int(-4)) == table({{1, 0, 1}}));
  CHECK(sl2_reduced_forms(Int(-7)) == table({{1, 1, 2}}));
  CHECK(sl2_reduced_forms(Int(-8)) == table({{1, 0, 2}}));
  CHECK(sl2_reduced_forms(Int(-11)) == table({{1, 1, 3}}));
  CHECK(sl2_reduced_forms(Int(-12)) == table({{1, 0, 3}, {2, 2, 2}}));
  CHECK(sl2_reduced_forms(Int(-15)) == table({{1, 1, 4}, {2, 1, 2}}));
  CHECK(sl2_reduced_forms(Int(-16)) == table({{1, 0, 4}, {2, 0, 2}}));
  CHECK(sl2_reduced_forms(Int(-20)) == table({{1, 0, 5}, {2, 2, 3}}));
  CHECK(sl2_reduced_forms(Int(-23)) ==
        table({{1, 1, 6}, {2, -1, 3}, {2, 1, 3}}));
}

TEST_CASE("coset representatives") {
  const std::pair<long, long> sizes[] = {{2, 3},  {3, 4},  {4, 6},
                                         {5, 6},  {7, 8},  {13, 14}};
  for (auto [N, size] : sizes) {
    std::vector<Mat2> reps = gamma0_coset_reps(N);
    REQUIRE(reps.size() == static_cast<size_t>(size));
    CHECK(reps.front() == mat_identity());
    for (const Mat2& g : reps) CHECK(mat_det(g) == 1);
    // pairwise inequivalent: g^{-1} h must leave Gamma_0(N)
    for (size_t i = 0; i < reps.size(); ++i)
      for (size_t j = i + 1; j < reps.size(); ++j) {
        Mat2 d = mat_mul(mat_inverse(reps[i]), reps[j]);
        CHECK(d.c % N != 0);
      }
  }
}

TEST_CASE("reduced form tables") {
  using T = std::initializer_list<std::array<long, 3>>;
  struct Row {
    long N;
    long D;
    std::vector<QuadForm> want;
  };
  const Row rows[] = {
      {2, -3, table(T{{1, 1, 1}})},
      {2, -4, table(T{{1, 0, 1}, {2, 2, 1}})},
      {2, -7, table(T{{1, 1, 2}, {2, 1, 1}, {2, -1, 1}})},
      {2, -8, table(T{{1, 0, 2}, {2, 0, 1}, {3, 2, 1}})},
      {3, -3, table(T{{1, 1, 1}, {3, 3, 1}})},
      {3, -4, table(T{{1, 0, 1}, {2, 2, 1}})},
      {3, -7, table(T{{1, 1, 2}, {2, 1, 1}, {2, -1, 1}, {4, 3, 1}})},
      {3, -8, table(T{{1, 0, 2}, {2, 0, 1}, {3, 2, 1}, {3, -2, 1}})},
      {4, -3, table(T{{1, 1, 1}, {3, 3, 1}})},
      {4, -4, table(T{{1, 0, 1}, {2, 2, 1}, {5, 4, 1}})},
      {4, -7, table(T{{1, 1, 2}, {2, 1, 1}, {2, -1, 1}, {4, 3, 1}, {4, -3, 1},
                      {7, 7, 2}})},
      {4, -8, table(T{{1, 0, 2}, {2, 0, 1}, {3, 2, 1}, {3, -2, 1}, {6, 4, 1},
                      {9, 8, 2}})},
      {5, -3, table(T{{1, 1, 1}, {3, 3, 1}})},
      {5, -4, table(T{{1, 0, 1}, {2, 2, 1}, {5, 4, 1}, {5, -4, 1}})},
      {5, -7, table(T{{1, 1, 2}, {2, 1, 1}, {2, -1, 1}, {4, 3, 1}, {4, -3, 1},
                      {7, 7, 2}})},
      {5, -8, table(T{{1, 0, 2}, {2, 0, 1}, {3, 2, 1}, {3, -2, 1}, {6, 4, 1},
                      {6, -4, 1}})},
  };
  for (const Row& r : rows) {
    CAPTURE(r.N, r.D);
    CHECK(enumerate_reduced(Int(r.D), r.N) == r.want);
    CHECK(enumerate_reduced_via_cosets(Int(r.D), r.N) == r.want);
  }
  CHECK_THROWS_AS(enumerate_reduced(Int(-4), 99), UnsupportedLevel);
}

TEST_CASE("reduction is idempotent and orbit invariant") {
  std::mt19937_64 rng(987654321);
  for (long N : {2L, 3L, 4L, 5L, 7L, 13L}) {
    for (int i = 0; i < 250; ++i) {
      QuadForm Q = random_form(rng, 1);
      ReduceResult r = reduce(Q, N);
      CHECK(is_reduced(r.form, N));
      CHECK(act(Q, r.g) == r.form);
      Mat2 witness = r.g;
      CHECK(check_gamma0(witness, N));
      CHECK(reduce(r.form, N).form == r.form);

      Mat2 g = random_gamma0(rng, N);
      CHECK(reduce(act(Q, g), N).form == r.form);
    }
  }
}

TEST_CASE("level-divisible leading coefficients stay in the family") {
  std::mt19937_64 rng(555);
  for (long N : {2L, 3L, 4L, 5L, 7L, 13L})
    for (int i = 0; i < 150; ++i) {
      QuadForm Q = random_form(rng, N);
      Mat2 g = random_gamma0(rng, N);
      QuadForm R = reduce(act(Q, g), N).form;
      CHECK(R.a % N == 0);
    }
}

TEST_CASE("class representatives and class numbers") {
  CHECK(enumerate_classes(Int(-4), 2) == table({{2, 2, 1}}));
  CHECK(enumerate_classes(Int(-8), 2) == table({{2, 0, 1}}));
  CHECK(enumerate_classes(Int(-12), 2) == table({{2, 2, 2}, {4, 2, 1}}));
  CHECK(enumerate_classes(Int(-16), 2) ==
        table({{2, 0, 2}, {4, 0, 1}, {4, 4, 2}}));
  CHECK(enumerate_classes(Int(-3), 3) == table({{3, 3, 1}}));
  CHECK(enumerate_classes(Int(-12), 3) == table({{3, 0, 1}, {6, 6, 2}}));
  CHECK(enumerate_classes(Int(-4), 5) == table({{5, -4, 1}, {5, 4, 1}}));
  CHECK(enumerate_classes(Int(-16), 5) ==
        table({{5, -2, 1}, {5, 2, 1}, {10, -8, 2}, {10, 8, 2}}));
  CHECK(enumerate_classes(Int(-7), 4) == table({{4, -3, 1}, {4, 3, 1}}));
  CHECK(enumerate_classes(Int(-3), 7) == table({{7, -5, 1}, {7, 5, 1}}));
  CHECK(enumerate_classes(Int(-4), 13) == table({{13, -10, 2}, {13, 10, 2}}));
  CHECK(enumerate_classes(Int(-3), 13) == table({{13, -7, 1}, {13, 7, 1}}));

  CHECK(class_number_H(Int(-4), 2) == Rat(1, 2));
  CHECK(class_number_H(Int(-8), 2) == 1);
  CHECK(class_number_H(Int(-12), 2) == 2);
  CHECK(class_number_H(Int(-16), 2) == Rat(5, 2));
  CHECK(class_number_H(Int(-3), 3) == Rat(1, 3));
  CHECK(class_number_H(Int(-12), 3) == Rat(4, 3));
  CHECK(class_number_H(Int(-4), 5) == 1);
  CHECK(class_number_H(Int(-16), 5) == 3);
  CHECK(class_number_H(Int(-7), 4) == 2);
  CHECK(class_number_H(Int(-3), 7) == Rat(2, 3));
  CHECK(class_number_H(Int(-4), 13) == 1);
  CHECK(class_number_H(Int(-3), 13) == Rat(2, 3));

  // empty families
  CHECK(class_number_H(Int(-3), 2) == 0);
  CHECK(class_number_H(Int(-3), 4) == 0);
  CHECK(class_number_H(Int(-4), 4) == 0);
  CHECK(enumerate_classes(Int(-3), 2).empty());
}

TEST_CASE("stabilizer orders") {
  // elliptic classes of order 2 and 3
  CHECK(omega(F(2, -2, 1), 2) == 2);   // disc -4
  CHECK(omega(F(3, -3, 1), 3) == 3);   // disc -3
  CHECK(omega(F(5, -4, 1), 5) == 2);
  CHECK(omega(F(7, -5, 1), 7) == 3);
  CHECK(omega(F(13, -7, 1), 13) == 3);
  // classes whose extra automorphs do not lie in the level's group
  CHECK(omega(F(2, 0, 1), 2) == 1);    // disc -8
  CHECK(omega(F(2, -2, 2), 2) == 1);   // content 2, primitive disc -3
  // content 2, primitive disc -4: the automorph (1,-1;2,-1) has c = 2,
  // so it does lie in Gamma_0(2)
  CHECK(omega(F(4, -4, 2), 2) == 2);
  // sum of 1/omega over the -16 classes at level 5 equals the class number 3
  Rat s(0);
  for (const QuadForm& Q : enumerate_classes(Int(-16), 5))
    s += Rat(1, omega(Q, 5));
  CHECK(s == 3);
}
