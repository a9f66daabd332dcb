// Acceptance runner: one PASS/FAIL line per criterion, nonzero exit on any
// failure.  Each criterion carries a wall-clock budget in seconds and fails
// when it runs over.

#include <gamma0/cusps.hpp>
#include <gamma0/errors.hpp>
#include <gamma0/forms.hpp>
#include <gamma0/funddomain.hpp>
#include <gamma0/hauptmodul.hpp>
#include <gamma0/modpoly.hpp>
#include <gamma0/numtheory.hpp>
#include <gamma0/qseries.hpp>
#include <gamma0/verify.hpp>

#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

using namespace gamma0;

namespace {

int g_failures = 0;

void run_criterion(int k, const char* what, double budget_s,
                   const std::function<bool(std::string&)>& body) {
  std::string note;
  bool ok = false;
  auto t0 = std::chrono::steady_clock::now();
  try {
    ok = body(note);
  } catch (const std::exception& e) {
    ok = false;
    note = std::string("exception: ") + e.what();
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (secs > budget_s) {
    ok = false;
    note += (note.empty() ? "" : "; ");
    note += "over budget";
  }
  std::printf("%s criterion %d: %s (%.2f s%s%s)\n", ok ? "PASS" : "FAIL", k,
              what, secs, note.empty() ? "" : "; ", note.c_str());
  if (!ok) ++g_failures;
}

QuadForm F(long a, long b, long c) { return QuadForm{Int(a), Int(b), Int(c)}; }

std::vector<QuadForm> table(std::initializer_list<std::array<long, 3>> rows) {
  std::vector<QuadForm> v;
  for (const auto& r : rows) v.push_back(F(r[0], r[1], r[2]));
  std::sort(v.begin(), v.end());
  return v;
}

QuadForm random_form(std::mt19937_64& rng, long a_multiple) {
  std::uniform_int_distribution<long> da(1, 12), db(-20, 20), dc(1, 12);
  Int a = Int(da(rng)) * a_multiple;
  Int b = db(rng);
  Int c = (b * b) / (4 * a) + 1 + dc(rng);
  return QuadForm{a, b, c};
}

Mat2 random_gamma0(std::mt19937_64& rng, long N) {
  std::uniform_int_distribution<long> de(-4, 4), dlen(2, 6);
  Mat2 g = mat_identity();
  long len = dlen(rng);
  for (long i = 0; i < len; ++i) {
    long e = de(rng);
    Mat2 w = (i % 2 == 0) ? mat_translation(e)
                          : Mat2{Int(1), Int(0), Int(e * N), Int(1)};
    g = mat_mul(g, w);
  }
  return g;
}

bool golden_values(std::string& note) {
  bool ok = true;
  auto expect_rat = [&](const Rat& got, const Rat& want, const char* label) {
    Rat w = want;
    w.canonicalize();
    if (got != w) {
      ok = false;
      note += std::string(label) + " ";
    }
  };
  expect_rat(class_number_H(Int(-4), 2), Rat(1, 2), "H(-4,2)");
  expect_rat(trace_t(Int(-4), 2, 128).first, Rat(-20), "t(-4,2)");
  expect_rat(class_number_H(Int(-3), 3), Rat(1, 3), "H(-3,3)");
  expect_rat(trace_t(Int(-3), 3, 128).first, Rat(-5), "t(-3,3)");
  expect_rat(class_number_H(Int(-4), 5), Rat(1), "H(-4,5)");
  expect_rat(trace_t(Int(-4), 5, 128).first, Rat(-5), "t(-4,5)");
  expect_rat(class_number_H(Int(-3), 2), Rat(0), "H(-3,2)");
  expect_rat(trace_t(Int(-3), 2, 128).first, Rat(0), "t(-3,2)");
  expect_rat(class_number_H(Int(-4), 4), Rat(0), "H(-4,4)");
  expect_rat(class_number_H(Int(-3), 4), Rat(0), "H(-3,4)");
  for (long N : kSupportedLevels)
    expect_rat(j_at_cusp(CuspRep{0, 1}, N), Rat(24, N - 1), "j_N(0)");
  expect_rat(j_at_cusp(CuspRep{1, 2}, 4), Rat(-8), "j_4(1/2)");
  return ok;
}

bool reduced_form_tables(std::string& note) {
  struct Row {
    long N;
    long D;
    std::vector<QuadForm> want;
  };
  using T = std::initializer_list<std::array<long, 3>>;
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
      {4, -7,
       table(T{{1, 1, 2}, {2, 1, 1}, {2, -1, 1}, {4, 3, 1}, {4, -3, 1}, {7, 7, 2}})},
      {4, -8,
       table(T{{1, 0, 2}, {2, 0, 1}, {3, 2, 1}, {3, -2, 1}, {6, 4, 1}, {9, 8, 2}})},
      {5, -3, table(T{{1, 1, 1}, {3, 3, 1}})},
      {5, -4, table(T{{1, 0, 1}, {2, 2, 1}, {5, 4, 1}, {5, -4, 1}})},
      {5, -7,
       table(T{{1, 1, 2}, {2, 1, 1}, {2, -1, 1}, {4, 3, 1}, {4, -3, 1}, {7, 7, 2}})},
      {5, -8,
       table(T{{1, 0, 2}, {2, 0, 1}, {3, 2, 1}, {3, -2, 1}, {6, 4, 1}, {6, -4, 1}})},
  };
  bool ok = true;
  for (const Row& r : rows)
    if (enumerate_reduced(Int(r.D), r.N) != r.want) {
      ok = false;
      note += "table N=" + std::to_string(r.N) + " D=" + std::to_string(r.D) + " ";
    }

  for (long N : kSupportedLevels)
    for (long D = -3; D >= -100; --D) {
      long m = ((D % 4) + 4) % 4;
      if (m != 0 && m != 1) continue;
      if (enumerate_reduced(Int(D), N) != enumerate_reduced_via_cosets(Int(D), N)) {
        ok = false;
        note += "cosets N=" + std::to_string(N) + " D=" + std::to_string(D) + " ";
      }
    }
  return ok;
}

bool diagonal_structure(std::string& note) {
  bool ok = true;
  for (long N : {2L, 3L, 5L})
    for (long n = 1; n <= 20; ++n) {
      if (gcd_long(n, N) != 1) continue;
      ModularPolynomial P = build_modular_polynomial(n, N);
      DivisorStats ds = divisor_stats(n);
      bool good;
      if (auto root = square_root_if_perfect(n)) {
        std::vector<Int> dq = diagonal_quotient(P);
        Int lead = (((ds.sigma0 - 1) / 2) % 2) ? Int(-*root) : Int(*root);
        good = static_cast<long>(dq.size()) - 1 == ds.sum_max - 1 &&
               dq.back() == lead;
      } else {
        std::vector<Int> dg = diagonal(P);
        Int lead = ((ds.sigma0 / 2) % 2) ? Int(-1) : Int(1);
        good = static_cast<long>(dg.size()) - 1 == ds.sum_max && dg.back() == lead;
      }
      if (!good) {
        ok = false;
        note += "n=" + std::to_string(n) + " N=" + std::to_string(N) + " ";
      }
    }
  return ok;
}

bool class_relations(std::string& note) {
  bool ok = true;
  for (long N : kSupportedLevels)
    for (long n = 1; n <= 50; ++n) {
      if (gcd_long(n, N) != 1) continue;
      VerificationReport r = verify_class_number_relation(n, N);
      if (!r.pass) {
        ok = false;
        note += "n=" + std::to_string(n) + " N=" + std::to_string(N) + " ";
      }
    }
  return ok;
}

bool trace_relations(std::string& note) {
  bool ok = true;
  double errmax = 0;
  for (long N : kSupportedLevels)
    for (long n = 1; n <= 50; ++n) {
      if (gcd_long(n, N) != 1) continue;
      VerificationReport r = verify_trace_relation(n, N, 128);
      if (!r.pass) {
        ok = false;
        note += "n=" + std::to_string(n) + " N=" + std::to_string(N) + " ";
      }
      for (long rr = 0; rr * rr < 4 * n; ++rr)
        errmax = std::max(errmax, trace_t(Int(rr * rr - 4 * n), N, 128).second);
      errmax = std::max(errmax, trace_t(Int(-3), N, 128).second);
      errmax = std::max(errmax, trace_t(Int(-4), N, 128).second);
    }
  char buf[64];
  std::snprintf(buf, sizeof buf, "max certified error %.3g", errmax);
  note += buf;
  return ok && errmax < 1e-6;
}

bool factorization_samples(std::string& note) {
  const std::vector<Rat> samples{Rat(-3), Rat(1, 2), Rat(17)};
  bool ok = true;
  for (long N : {2L, 3L, 4L, 5L})
    for (long n = 1; n <= 12; ++n) {
      if (gcd_long(n, N) != 1) continue;
      VerificationReport r = verify_factorization(n, N, samples, 128);
      if (!r.pass || r.abs_error >= 1e-6) {
        ok = false;
        note += "n=" + std::to_string(n) + " N=" + std::to_string(N) + " ";
      }
    }
  return ok;
}

bool property_suites(std::string& note) {
  bool ok = true;
  auto flag = [&](bool good, const char* label) {
    if (!good) {
      ok = false;
      note += std::string(label) + " ";
    }
  };

  // reduction: idempotent, witnessed, orbit invariant
  for (long N : kSupportedLevels) {
    std::mt19937_64 rng(1000 + N);
    for (int i = 0; i < 1000; ++i) {
      QuadForm Q = random_form(rng, 1);
      Mat2 g = random_gamma0(rng, N);
      QuadForm moved = act(Q, g);
      ReduceResult r = reduce(moved, N);
      flag(is_reduced(r.form, N), "reduced");
      flag(act(moved, r.g) == r.form, "witness");
      flag(reduce(r.form, N).form == r.form, "idempotent");
      flag(reduce(Q, N).form == r.form, "orbit");
    }
  }

  // forms with N | a keep that property through reduction
  for (long N : kSupportedLevels) {
    std::mt19937_64 rng(2000 + N);
    for (int i = 0; i < 1000; ++i) {
      QuadForm Q = random_form(rng, N);
      Mat2 g = random_gamma0(rng, N);
      QuadForm R = reduce(act(Q, g), N).form;
      flag(R.a % N == 0, "family");
    }
  }

  // width-weighted selfmap sums collapse to the cusp multiplicity
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
        flag(Rat(h) * sum == nu(s, n, N), "collapse");
      }
    }

  // arc matrices: unimodular, correct lower row, correct endpoint image
  for (long p : {5L, 7L, 13L}) {
    const PrimeDomainData& dom = build_domain(p);
    for (long k : dom.S) {
      Mat2 g = dom.gamma.at(k);
      long kinv = dom.inv.at(k);
      flag(mat_det(g) == 1, "det");
      flag(g.c == p && g.d == kinv, "row");
      flag(g.a * Int(-kinv) + g.b * Int(p) == -1 &&
               g.c * Int(-kinv) + g.d * Int(p) == 0,
           "endpoint");
    }
  }

  // elliptic points agree with the class lists
  for (long p : {5L, 7L, 13L}) {
    EllipticPoints e = elliptic_points(p);
    auto tau_set = [](const std::vector<QuadForm>& v) {
      std::set<std::pair<Rat, Rat>> s;
      for (const QuadForm& Q : v) {
        FormInvariants inv = form_invariants(Q);
        s.insert({inv.tau.re, inv.tau.im2});
      }
      return s;
    };
    std::set<std::pair<Rat, Rat>> got2, got3;
    for (const CmPoint& t : e.order2) got2.insert({t.re, t.im2});
    for (const CmPoint& t : e.order3) got3.insert({t.re, t.im2});
    flag(got2 == tau_set(enumerate_classes(Int(-4), p)), "elliptic2");
    flag(got3 == tau_set(enumerate_classes(Int(-3), p)), "elliptic3");
  }
  return ok;
}

bool cusp_counts(std::string& note) {
  bool ok = true;
  for (long N : kSupportedLevels) {
    long count = 0;
    for (long d = 1; d <= N; ++d)
      if (N % d == 0) count += euler_phi(gcd_long(d, N / d));
    if (static_cast<long>(cusp_set(N).size()) != count) {
      ok = false;
      note += "count N=" + std::to_string(N) + " ";
    }
    for (const CuspRep& s : cusp_set(N)) {
      if (s.v == N) continue;
      Rat want = j_at_cusp(s, N);
      CComplex got = j_at_cusp_numeric(s, N, 10.0, 128);
      if (std::fabs(got.re.to_double() - want.get_d()) > 1e-8 ||
          std::fabs(got.im.to_double()) > 1e-8) {
        ok = false;
        note += "limit N=" + std::to_string(N) + " ";
      }
    }
  }
  return ok;
}

}  // namespace

int main() {
  run_criterion(1, "exact golden values", 5.0, golden_values);
  run_criterion(2, "reduced form tables and coset cross-enumeration", 30.0,
                reduced_form_tables);
  run_criterion(3, "diagonal degrees and leading coefficients", 300.0,
                diagonal_structure);
  run_criterion(4, "class number relations", 120.0, class_relations);
  run_criterion(5, "trace relations with certified rounding", 600.0,
                trace_relations);
  run_criterion(6, "diagonal factorization at rational samples", 600.0,
                factorization_samples);
  run_criterion(7, "reduction, cusp and domain property suites", 120.0,
                property_suites);
  run_criterion(8, "cusp counts and numeric limits", 60.0, cusp_counts);

  if (g_failures) {
    std::printf("%d criterion(s) failed\n", g_failures);
    return 1;
  }
  std::printf("all criteria passed\n");
  return 0;
}
