#include "gamma0/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>

#include "gamma0/cusps.hpp"
#include "gamma0/errors.hpp"
#include "gamma0/hauptmodul.hpp"
#include "gamma0/modpoly.hpp"

namespace gamma0 {

namespace {

class Stopwatch {
 public:
  Stopwatch() : t0_(std::chrono::steady_clock::now()) {}
  double ms() const {
    return std::chrono::duration<double, std::milli>(
               std::chrono::steady_clock::now() - t0_)
        .count();
  }

 private:
  std::chrono::steady_clock::time_point t0_;
};

std::string rat_str(const Rat& r) { return r.get_str(); }

// Largest r >= 0 with r^2 < 4n.
long interior_r_max(long n) {
  long r = static_cast<long>(std::sqrt(4.0 * static_cast<double>(n)));
  while ((r + 1) * (r + 1) < 4 * n) ++r;
  while (r > 0 && r * r >= 4 * n) --r;
  return r;
}

void require_instance(long n, long N) {
  require_level(N);
  if (n <= 0) throw std::domain_error("n must be positive");
  if (gcd_long(n, N) != 1)
    throw std::domain_error("n must be coprime to the level");
}

Rat rat_pow_ui(const Rat& x, unsigned long e) {
  Rat r;
  mpz_pow_ui(r.get_num_mpz_t(), x.get_num().get_mpz_t(), e);
  mpz_pow_ui(r.get_den_mpz_t(), x.get_den().get_mpz_t(), e);
  return r;
}

Int rat_ceil(const Rat& x) {
  Int q;
  mpz_cdiv_q(q.get_mpz_t(), x.get_num().get_mpz_t(), x.get_den().get_mpz_t());
  return q;
}

Rat poly_eval(const std::vector<Int>& c, const Rat& x) {
  Rat acc(0);
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + Rat(*it);
  return acc;
}

Real cc_abs_real(const CComplex& z) {
  return r_sqrt(z.re * z.re + z.im * z.im);
}

std::string err_note(double errmax) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "max pre-rounding error %.3g", errmax);
  return buf;
}

}  // namespace

ClassFactorData class_factor_data(const Int& D, long N, long prec) {
  require_level(N);
  ClassFactorData out;
  out.disc = D;
  for (const QuadForm& Q : enumerate_classes(D, N)) {
    FormInvariants inv = form_invariants(Q);
    out.entries.push_back(
        {j_eval_cm(inv.tau, N, prec), static_cast<int>(omega(Q, N))});
  }
  return out;
}

std::pair<Rat, double> trace_t(const Int& D, long N, long prec) {
  require_level(N);
  static std::map<std::pair<long, Int>, std::pair<Rat, double>> cache;
  static std::mutex mu;
  const std::pair<long, Int> key{N, D};
  {
    std::lock_guard<std::mutex> lk(mu);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }

  std::vector<QuadForm> cls = enumerate_classes(D, N);
  std::pair<Rat, double> out{Rat(0), 0.0};
  if (!cls.empty()) {
    long p = std::min(std::max(prec, 53L), 2048L);
    for (;;) {
      CComplex S = cc_zero(p);
      for (const QuadForm& Q : cls) {
        FormInvariants inv = form_invariants(Q);
        S = cc_add(S, cc_mul_rat(j_eval_cm(inv.tau, N, p), Rat(1, omega(Q, N))));
      }
      // the class set is conjugation closed, so an imaginary part that
      // survives its own error bound can only be a computation defect
      if (std::fabs(S.im.to_double()) > S.err)
        throw NonrealTrace("class trace has nonreal part beyond its bound");
      if (S.err < 1.0 / 24.0) {
        // the true trace lies in (1/6)Z and within err of S.re
        Int m = (Real::of_long(6, p) * S.re).round_to_int();
        out.first = Rat(m, Int(6));
        out.first.canonicalize();
        out.second = S.err;
        break;
      }
      if (p >= 2048)
        throw RoundingUncertified("trace rounding not certified at 2048 bits");
      p = std::min(2 * p, 2048L);
    }
  }
  std::lock_guard<std::mutex> lk(mu);
  cache.emplace(key, out);
  return out;
}

VerificationReport verify_class_number_relation(long n, long N) {
  Stopwatch sw;
  require_instance(n, N);
  auto sq = square_root_if_perfect(n);

  Rat lhs(0);
  long rmax = interior_r_max(n);
  for (long r = -rmax; r <= rmax; ++r)
    lhs += class_number_H(Int(r) * r - Int(4) * n, N);
  for (const CuspRep& s : cusp_set(N)) lhs += nu(s, n, N);

  DivisorStats ds = divisor_stats(n);
  Rat rhs(2 * ds.sigma1);
  if (sq) {
    rhs += 2 * class_number_H(Int(-3), N) + class_number_H(Int(-4), N);
    long sumphi = 0;
    for (long d : divisor_stats(N).divisors)
      sumphi += euler_phi(gcd_long(d, N / d));
    rhs += sumphi - 2;
  }

  VerificationReport rep;
  rep.level = N;
  rep.n = n;
  rep.theorem_id = sq ? "thm25.2" : "cor24.1";
  rep.lhs = rat_str(lhs);
  rep.rhs = rat_str(rhs);
  rep.abs_error = std::fabs(Rat(lhs - rhs).get_d());
  rep.pass = (lhs == rhs);
  rep.runtime_ms = sw.ms();
  return rep;
}

VerificationReport verify_trace_relation(long n, long N, long prec) {
  Stopwatch sw;
  require_instance(n, N);
  auto sq = square_root_if_perfect(n);

  Rat lhs(0);
  double errmax = 0.0;
  long rmax = interior_r_max(n);
  for (long r = -rmax; r <= rmax; ++r) {
    auto [t, e] = trace_t(Int(r) * r - Int(4) * n, N, prec);
    lhs += t;
    errmax = std::max(errmax, e);
  }
  for (const CuspRep& s : cusp_set(N)) {
    if (s.v == N) continue;  // the class of infinity carries the pole
    long w = nu(s, n, N) - (sq ? 1 : 0);
    if (w != 0) lhs += w * j_at_cusp(s, N);
  }

  Rat rhs(0);
  if (sq) {
    auto [t4, e4] = trace_t(Int(-4), N, prec);
    auto [t3, e3] = trace_t(Int(-3), N, prec);
    errmax = std::max({errmax, e4, e3});
    rhs = t4 + 2 * t3;
  } else if (square_root_if_perfect(4 * n + 1)) {
    rhs = 2;
  }

  VerificationReport rep;
  rep.level = N;
  rep.n = n;
  rep.theorem_id = sq ? "thm25.3" : "cor24.2";
  rep.lhs = rat_str(lhs);
  rep.rhs = rat_str(rhs);
  rep.abs_error = std::fabs(Rat(lhs - rhs).get_d());
  rep.pass = (lhs == rhs);
  rep.runtime_ms = sw.ms();
  rep.note = err_note(errmax);
  return rep;
}

VerificationReport verify_class_number_prime(long n, long p) {
  Stopwatch sw;
  require_instance(n, p);
  if (p == 4) throw std::domain_error("level must be prime");
  auto sq = square_root_if_perfect(n);

  Rat lhs(0);
  long rmax = interior_r_max(n);
  for (long r = -rmax; r <= rmax; ++r)
    lhs += class_number_H(Int(r) * r - Int(4) * n, p);

  DivisorStats ds = divisor_stats(n);
  Rat rhs(2 * ds.sigma1 - 2 * ds.sum_min);
  if (sq) rhs += class_number_H(Int(-4), p) + 2 * class_number_H(Int(-3), p);

  VerificationReport rep;
  rep.level = p;
  rep.n = n;
  rep.theorem_id = "thm11.1";
  rep.lhs = rat_str(lhs);
  rep.rhs = rat_str(rhs);
  rep.abs_error = std::fabs(Rat(lhs - rhs).get_d());
  rep.pass = (lhs == rhs);
  rep.runtime_ms = sw.ms();
  return rep;
}

VerificationReport verify_trace_prime(long n, long p, long prec) {
  Stopwatch sw;
  require_instance(n, p);
  if (p == 4) throw std::domain_error("level must be prime");
  auto sq = square_root_if_perfect(n);

  Rat lhs(0);
  double errmax = 0.0;
  long rmax = interior_r_max(n);
  for (long r = -rmax; r <= rmax; ++r) {
    auto [t, e] = trace_t(Int(r) * r - Int(4) * n, p, prec);
    lhs += t;
    errmax = std::max(errmax, e);
  }

  DivisorStats ds = divisor_stats(n);
  long j0 = eta_exponent(p);  // value of the hauptmodul at the cusp 0
  Rat rhs(-j0 * ds.sum_min);
  if (sq) {
    auto [t4, e4] = trace_t(Int(-4), p, prec);
    auto [t3, e3] = trace_t(Int(-3), p, prec);
    errmax = std::max({errmax, e4, e3});
    rhs += j0 + t4 + 2 * t3;
  } else if (square_root_if_perfect(4 * n + 1)) {
    rhs += 2;
  }

  VerificationReport rep;
  rep.level = p;
  rep.n = n;
  rep.theorem_id = "thm11.2";
  rep.lhs = rat_str(lhs);
  rep.rhs = rat_str(rhs);
  rep.abs_error = std::fabs(Rat(lhs - rhs).get_d());
  rep.pass = (lhs == rhs);
  rep.runtime_ms = sw.ms();
  rep.note = err_note(errmax);
  return rep;
}

VerificationReport verify_factorization(long n, long N,
                                        const std::vector<Rat>& X_samples,
                                        long prec) {
  Stopwatch sw;
  require_instance(n, N);
  if (prec < 64) prec = 64;
  auto sq = square_root_if_perfect(n);

  ModularPolynomial P = build_modular_polynomial(n, N);
  std::vector<Int> diag = sq ? diagonal_quotient(P) : diagonal(P);
  DivisorStats ds = divisor_stats(n);

  VerificationReport rep;
  rep.level = N;
  rep.n = n;
  rep.theorem_id = sq ? "thm25.1" : "thm22";
  if (diag.empty()) {
    rep.pass = false;
    rep.note = "diagonal vanished";
    rep.runtime_ms = sw.ms();
    return rep;
  }

  // Both sides are compared in sixth powers so every exponent is an
  // integer: class factors enter with 6/omega, the square-n quotient
  // divides out the |r| < 2 class data, and sqrt(n) becomes n^3.
  struct NumFactor {
    CComplex j;
    long exp6;
  };
  std::vector<NumFactor> numeric;
  long rmax = interior_r_max(n);
  for (long r = -rmax; r <= rmax; ++r) {
    ClassFactorData cd = class_factor_data(Int(r) * r - Int(4) * n, N, prec);
    for (const ClassFactorEntry& e : cd.entries)
      numeric.push_back({e.j, 6 / e.omega});
  }
  if (sq) {
    for (long r = -1; r <= 1; ++r) {
      ClassFactorData cd = class_factor_data(Int(r) * r - 4, N, prec);
      for (const ClassFactorEntry& e : cd.entries)
        numeric.push_back({e.j, -(6 / e.omega)});
    }
  }

  struct ExactFactor {
    Rat j;
    long exp6;
  };
  std::vector<ExactFactor> exact;
  for (const CuspRep& s : cusp_set(N)) {
    if (s.v == N) continue;
    long e = nu(s, n, N) - (sq ? 1 : 0);
    if (e != 0) exact.push_back({j_at_cusp(s, N), 6 * e});
  }

  Rat scale6(1);
  if (sq) mpz_pow_ui(scale6.get_num_mpz_t(), Int(n).get_mpz_t(), 3);

  long sign_pow = sq ? (ds.sigma0 - 1) / 2 : ds.sigma0 / 2;
  int claimed_sign = (sign_pow % 2 == 0) ? 1 : -1;

  std::vector<Rat> samples = X_samples;
  if (samples.empty()) samples = {Rat(-3), Rat(1, 2), Rat(17)};

  double worst_rel = 0.0;
  bool all_ok = true;
  std::ostringstream note;
  note << "sixth powers at X =";

  for (Rat X : samples) {
    bool done = false;
    for (int attempt = 0; attempt < 8 && !done; ++attempt, X += 1) {
      Rat L = poly_eval(diag, X);
      if (L == 0) continue;  // sample sits on a root, move over
      bool collide = false;
      for (const ExactFactor& f : exact)
        if (X == f.j) collide = true;
      if (collide) continue;

      Rat L6 = rat_pow_ui(Rat(abs(L)), 6);
      Rat Rex = scale6;
      for (const ExactFactor& f : exact)
        Rex *= rat_pow_ui(Rat(abs(X - f.j)),
                          static_cast<unsigned long>(f.exp6));

      CComplex Xc = cc_of_rat(X, Rat(0), prec);
      Real acc = Real::of_rat(Rex, prec);
      double rel = 0.0;
      bool uncertified = false;
      for (const NumFactor& f : numeric) {
        CComplex d = cc_sub(Xc, f.j);
        double lower = d.abs_lower();
        if (lower <= 0.0) {
          uncertified = true;
          break;
        }
        rel += static_cast<double>(std::labs(f.exp6)) * (d.err / lower);
        Real m = cc_abs_real(d);
        for (long k = 0; k < std::labs(f.exp6); ++k)
          acc = (f.exp6 > 0) ? acc * m : acc / m;
      }
      if (uncertified) continue;

      Real L6r = Real::of_rat(L6, prec);
      Real diff = r_abs(L6r - acc);
      Real denom = (L6r < acc) ? acc : L6r;
      double relerr = (diff / denom).to_double();
      worst_rel = std::max(worst_rel, relerr);
      if (relerr > 1e-6 + 16.0 * rel) all_ok = false;
      if (rep.lhs.empty()) {
        rep.lhs = L6r.str(20);
        rep.rhs = acc.str(20);
      }
      note << ' ' << rat_str(X);
      done = true;
    }
    if (!done) {
      all_ok = false;
      note << " <no sample clear of roots>";
    }
  }

  // Sign is invisible in sixth powers; pin it down at a real argument
  // beyond every root, where each factor of the product is positive.
  Rat lead(diag.back());
  Rat cmax(0);
  for (size_t i = 0; i + 1 < diag.size(); ++i) {
    Rat a(abs(Rat(diag[i]) / lead));
    if (a > cmax) cmax = a;
  }
  double jmax = 0.0;
  for (const NumFactor& f : numeric) jmax = std::max(jmax, f.j.abs_upper());
  for (const ExactFactor& f : exact)
    jmax = std::max(jmax, std::fabs(f.j.get_d()));
  Int X0 = rat_ceil(cmax) + rat_ceil(Rat(jmax)) + 3;
  int sign_found = sgn(poly_eval(diag, Rat(X0)));
  bool sign_ok = (sign_found == claimed_sign);
  note << "; sign at X = " << X0.get_str() << (sign_ok ? " ok" : " MISMATCH");

  rep.abs_error = worst_rel;
  rep.pass = all_ok && sign_ok;
  rep.runtime_ms = sw.ms();
  rep.note = note.str();
  return rep;
}

std::vector<VerificationReport> run_suite(const SuiteOptions& opt) {
  std::vector<VerificationReport> out;
  for (long N : opt.levels) {
    require_level(N);
    const bool prime_level = (N != 4);
    for (long n = std::max(opt.n_lo, 1L); n <= opt.n_hi; ++n) {
      if (gcd_long(n, N) != 1) {
        VerificationReport rep;
        rep.level = N;
        rep.n = n;
        rep.theorem_id = "skipped";
        rep.pass = true;
        rep.note = "gcd(n, N) != 1";
        out.push_back(rep);
        continue;
      }
      const bool sq = square_root_if_perfect(n).has_value();
      if (!sq && opt.cor24) {
        out.push_back(verify_class_number_relation(n, N));
        out.push_back(verify_trace_relation(n, N, opt.prec));
      }
      if (sq && opt.thm25) {
        out.push_back(verify_class_number_relation(n, N));
        out.push_back(verify_trace_relation(n, N, opt.prec));
        out.push_back(verify_factorization(n, N, {}, opt.prec));
      }
      if (!sq && opt.thm22)
        out.push_back(verify_factorization(n, N, {}, opt.prec));
      if (prime_level && opt.thm11) {
        out.push_back(verify_class_number_prime(n, N));
        out.push_back(verify_trace_prime(n, N, opt.prec));
      }
    }
  }
  std::stable_sort(out.begin(), out.end(),
                   [](const VerificationReport& a, const VerificationReport& b) {
                     if (a.level != b.level) return a.level < b.level;
                     if (a.n != b.n) return a.n < b.n;
                     return a.theorem_id < b.theorem_id;
                   });
  return out;
}

}  // namespace gamma0
