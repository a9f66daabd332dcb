#include <gamma0/forms.hpp>

#include <gamma0/errors.hpp>
#include <gamma0/funddomain.hpp>

#include <algorithm>
#include <cstdlib>
#include <set>
#include <stdexcept>
#include <utility>

namespace gamma0 {

Int form_disc(const QuadForm& Q) { return Q.b * Q.b - 4 * Q.a * Q.c; }

Mat2 mat_identity() { return {1, 0, 0, 1}; }

Mat2 mat_translation(const Int& t) { return {1, t, 0, 1}; }

Mat2 mat_mul(const Mat2& g, const Mat2& h) {
  return {g.a * h.a + g.b * h.c, g.a * h.b + g.b * h.d,
          g.c * h.a + g.d * h.c, g.c * h.b + g.d * h.d};
}

Int mat_det(const Mat2& g) { return g.a * g.d - g.b * g.c; }

Mat2 mat_inverse(const Mat2& g) {
  if (mat_det(g) != 1)
    throw std::invalid_argument("matrix must have determinant 1");
  return {g.d, -g.b, -g.c, g.a};
}

bool check_gamma0(Mat2& g, long N) {
  if (mat_det(g) != 1) return false;
  if (g.c % N != 0) return false;
  g.gamma0_level = N;
  return true;
}

namespace {

void check_positive_definite(const QuadForm& Q) {
  if (Q.a <= 0) throw std::invalid_argument("form must have a > 0");
  if (form_disc(Q) >= 0)
    throw std::invalid_argument("form must have negative discriminant");
}

void check_disc(const Int& D) {
  if (D >= 0) throw std::invalid_argument("discriminant must be negative");
  Int r = ((D % 4) + 4) % 4;
  if (r != 0 && r != 1)
    throw std::invalid_argument("discriminant must be 0 or 1 mod 4");
}

bool contains(const std::vector<long>& v, long k) {
  return std::find(v.begin(), v.end(), k) != v.end();
}

// p^2 c + k p b + (k^2 - 1) a.  Zero exactly when tau_Q lies on arc(k),
// negative strictly inside the disk |tau - k/p| < 1/p.  Acting by
// gamma_k sends a to a + arcval, so negative values drive the descent.
Int arcval(const QuadForm& Q, long p, long k) {
  return Int(p) * p * Q.c + Int(k) * p * Q.b + Int(k * k - 1) * Q.a;
}

}  // namespace

FormInvariants form_invariants(const QuadForm& Q) {
  check_positive_definite(Q);
  FormInvariants out;
  out.disc = form_disc(Q);
  Int g = gcd(gcd(Q.a, abs(Q.b)), Q.c);
  out.content = g;
  out.primitive = {Q.a / g, Q.b / g, Q.c / g};
  out.primitive_disc = form_disc(out.primitive);
  Rat re(-Q.b, 2 * Q.a);
  re.canonicalize();
  Rat im2(-out.disc, 4 * Q.a * Q.a);
  im2.canonicalize();
  out.tau = {re, im2};
  return out;
}

QuadForm act(const QuadForm& Q, const Mat2& g) {
  if (mat_det(g) != 1)
    throw std::invalid_argument("matrix must have determinant 1");
  QuadForm r;
  r.a = Q.a * g.a * g.a + Q.b * g.a * g.c + Q.c * g.c * g.c;
  r.b = 2 * Q.a * g.a * g.b + Q.b * (g.a * g.d + g.b * g.c) +
        2 * Q.c * g.c * g.d;
  r.c = Q.a * g.b * g.b + Q.b * g.b * g.d + Q.c * g.d * g.d;
  return r;
}

long omega(const QuadForm& Q, long N) {
  require_level(N);
  FormInvariants inv = form_invariants(Q);
  if (inv.primitive.a % N != 0) return 1;
  if (inv.primitive_disc == -4) return 2;
  if (inv.primitive_disc == -3) return 3;
  return 1;
}

namespace {

bool is_reduced_small(const QuadForm& Q, long N) {
  Int ab = abs(Q.b);
  if (ab > Q.a) return false;
  if (ab > N * Q.c) return false;
  if ((ab == Q.a || ab == N * Q.c) && Q.b < 0) return false;
  return true;
}

bool is_reduced_prime(const QuadForm& Q, long p) {
  const PrimeDomainData& dom = build_domain(p);
  Int ab = abs(Q.b);
  if (ab > Q.a) return false;
  for (long k = 1; k <= (p - 1) / 2; ++k)
    if (Int(p) * k * ab > Int(p) * p * Q.c + Int(k * k - 1) * Q.a)
      return false;
  if ((ab == Q.a || ab == Int(p) * Q.c) && Q.b < 0) return false;

  // Boundary rules on the arcs.  k = +-1 is settled by the b >= 0 rule
  // above, since those arcs carry |b| = pc.
  for (long k : dom.S) {
    if (k == 1 || k == -1) continue;
    if (arcval(Q, p, k) != 0) continue;
    if (contains(dom.E2, k)) {
      if (Int(p) * Q.b + Int(2 * k) * Q.a < 0) return false;
    } else {
      if (Int(p) * Q.b + Int(2 * dom.k2.at(k) + 1) * Q.a < 0) return false;
    }
  }

  // Corner rule: tau at height sqrt(3)/2p with Re = (2k0 - 1)/2p is kept
  // only for k0 = 1, k0 elliptic of order 3, or k0 minimal in its cycle.
  if (Int(p) * p * (4 * Q.a * Q.c - Q.b * Q.b) == 3 * Q.a * Q.a) {
    Int num = Q.a - Int(p) * Q.b;
    Int den = 2 * Q.a;
    if (num % den == 0) {
      Int q = num / den;
      if (q.fits_slong_p()) {
        long k0 = q.get_si();
        if (k0 != 0 && std::abs(k0) <= (p - 1) / 2 && k0 != 1 &&
            !contains(dom.E3, k0) && dom.k3.at(k0) != k0)
          return false;
      }
    }
  }
  return true;
}

}  // namespace

bool is_reduced(const QuadForm& Q, long N) {
  require_level(N);
  check_positive_definite(Q);
  if (N <= 4) return is_reduced_small(Q, N);
  return is_reduced_prime(Q, N);
}

namespace {

// Translation count moving b into (-a, a].
Int normalize_shift(const Int& a, const Int& b) {
  Int t, num = a - b, den = 2 * a;
  mpz_fdiv_q(t.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  return t;
}

}  // namespace

ReduceResult reduce(const QuadForm& Q0, long N) {
  require_level(N);
  check_positive_definite(Q0);
  QuadForm Q = Q0;
  Mat2 g = mat_identity();
  long steps = 0;
  const long cap = 100000;
  auto apply = [&](const Mat2& m) {
    Q = act(Q, m);
    g = mat_mul(g, m);
    ++steps;
  };

  if (N <= 4) {
    while (true) {
      if (steps > cap) throw std::logic_error("reduction did not terminate");
      Int t = normalize_shift(Q.a, Q.b);
      if (t != 0) apply(mat_translation(t));
      if (Q.b < -N * Q.c) {  // strictly inside |tau - 1/N| < 1/N
        apply({1, 0, N, 1});
        continue;
      }
      if (Q.b > N * Q.c) {  // strictly inside |tau + 1/N| < 1/N
        apply({1, 0, -N, 1});
        continue;
      }
      if (Q.b == -N * Q.c) {  // boundary tie, move to b = +Nc
        apply({1, 0, N, 1});
        continue;
      }
      break;
    }
  } else {
    const PrimeDomainData& dom = build_domain(N);
    while (true) {
      if (steps > cap) throw std::logic_error("reduction did not terminate");
      Int t = normalize_shift(Q.a, Q.b);
      if (t != 0) apply(mat_translation(t));

      // Steepest descent while strictly inside some disk.
      long best = 0;
      Int bestval = 0;
      for (long k : dom.S) {
        Int v = arcval(Q, N, k);
        if (v < bestval) {
          bestval = v;
          best = k;
        }
      }
      if (best != 0) {
        apply(dom.gamma.at(best));
        continue;
      }

      // Corner walk comes before the arc ties: a corner lies on two arcs
      // and is settled by its own rule.
      if (Int(N) * N * (4 * Q.a * Q.c - Q.b * Q.b) == 3 * Q.a * Q.a) {
        Int num = Q.a - Int(N) * Q.b;
        Int den = 2 * Q.a;
        if (num % den == 0) {
          Int q = num / den;
          if (q.fits_slong_p()) {
            long k0 = q.get_si();
            if (k0 != 0 && std::abs(k0) <= (N - 1) / 2 && k0 != 1 &&
                !contains(dom.E3, k0) && dom.k3.at(k0) != k0) {
              apply(dom.gamma.at(k0));
              continue;
            }
          }
        }
      }

      if (arcval(Q, N, 1) == 0) {  // b = -pc, flip to b = +pc
        apply(dom.gamma.at(1));
        continue;
      }

      bool acted = false;
      for (long k : dom.S) {
        if (k == 1 || k == -1) continue;
        if (arcval(Q, N, k) != 0) continue;
        if (contains(dom.E2, k)) {
          if (Int(N) * Q.b + Int(2 * k) * Q.a < 0) {
            apply(dom.gamma.at(k));
            acted = true;
            break;
          }
        } else if (Int(N) * Q.b + Int(2 * dom.k2.at(k) + 1) * Q.a < 0) {
          apply(dom.gamma.at(k));
          acted = true;
          break;
        }
      }
      if (acted) continue;
      break;
    }
  }

  if (!is_reduced(Q, N))
    throw std::logic_error("reduction reached a non reduced form");
  if (!check_gamma0(g, N))
    throw std::logic_error("reduction word left the group");
  return {Q, g, steps};
}

std::vector<QuadForm> sl2_reduced_forms(const Int& D) {
  check_disc(D);
  Int absD = -D;
  std::vector<QuadForm> out;
  for (Int a = 1; 3 * a * a <= absD; ++a) {
    for (Int b = -a; b <= a; ++b) {
      Int num = b * b + absD;
      if (num % (4 * a) != 0) continue;
      Int c = num / (4 * a);
      if (c < a) continue;
      if ((abs(b) == a || a == c) && b < 0) continue;
      out.push_back({a, b, c});
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Mat2> gamma0_coset_reps(long N) {
  if (N < 1) throw std::invalid_argument("level must be positive");
  // Q.g and Q.h share a Gamma_0(N) orbit exactly when g and h lie in the
  // same coset g Gamma_0(N), and those cosets are classified by the first
  // column of g mod N up to unit scaling.
  std::set<std::pair<long, long>> points;
  for (long a0 = 0; a0 < N; ++a0)
    for (long c0 = 0; c0 < N; ++c0) {
      if (gcd_long(gcd_long(a0, c0), N) != 1) continue;
      std::pair<long, long> best{N, N};
      for (long t = 1; t == 1 || t < N; ++t) {
        if (t > 1 && gcd_long(t, N) != 1) continue;
        best = std::min(best, {(t * a0) % N, (t * c0) % N});
        if (N == 1) break;
      }
      points.insert(best);
    }

  std::vector<Mat2> out;
  for (auto [a0, c0] : points) {
    Int A = a0, C = c0;
    if (a0 == 0)
      C = 1;
    else
      while (gcd(A, C) != 1) C += N;
    Int gg, x, y;
    mpz_gcdext(gg.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t(), A.get_mpz_t(),
               C.get_mpz_t());
    // x*A + y*C = 1, so ((A, -y), (C, x)) has determinant 1.
    out.push_back({A, -y, C, x});
  }
  // identity coset first
  for (size_t i = 0; i < out.size(); ++i)
    if (out[i].c % N == 0) {
      std::swap(out[0], out[i]);
      break;
    }
  return out;
}

std::vector<QuadForm> enumerate_reduced(const Int& D, long N) {
  require_level(N);
  check_disc(D);
  Int absD = -D;
  std::set<QuadForm> out;
  auto try_ab = [&](const Int& a, const Int& b) {
    Int num = b * b + absD;
    if (num % (4 * a) != 0) return;
    QuadForm Q{a, b, num / (4 * a)};
    if (is_reduced(Q, N)) out.insert(Q);
  };

  if (N <= 3) {
    // |b| <= a and |b| <= Nc give ac <= |D|/(4 - N).
    Int amax = absD / (4 - N);
    for (Int a = 1; a <= amax; ++a)
      for (Int b = -a; b <= a; ++b) try_ab(a, b);
  } else if (N == 4) {
    // (a - |b|)(4c - |b|) >= 0 expands to |b|(a - |b|) <= |D|, and with
    // the b = 0 and |b| = a cases this bounds a by |D| + 1.
    Int amax = absD + 1;
    for (Int a = 1; a <= amax; ++a)
      for (Int b = -a; b <= a; ++b) try_ab(a, b);
  } else {
    // Either Im tau >= sqrt(3)/2p, bounding a by p sqrt(|D|/3), or the
    // point sits in the pinch at the cusp 0, where |b| <= pc and
    // c <= sqrt(3|D|)/2p.  Scan both boxes.
    for (Int a = 1; 3 * (a - 1) * (a - 1) <= Int(N) * N * absD; ++a)
      for (Int b = -a; b <= a; ++b) try_ab(a, b);
    for (Int c = 1; 4 * Int(N) * N * (c - 1) * (c - 1) <= 3 * absD; ++c)
      for (Int b = -Int(N) * c; b <= Int(N) * c; ++b) {
        Int num = b * b + absD;
        if (num % (4 * c) != 0) continue;
        QuadForm Q{num / (4 * c), b, c};
        if (is_reduced(Q, N)) out.insert(Q);
      }
  }
  return {out.begin(), out.end()};
}

std::vector<QuadForm> enumerate_reduced_via_cosets(const Int& D, long N) {
  require_level(N);
  check_disc(D);
  std::set<QuadForm> out;
  std::vector<Mat2> reps = gamma0_coset_reps(N);
  for (const QuadForm& Q : sl2_reduced_forms(D))
    for (const Mat2& g : reps) {
      QuadForm F = act(Q, g);
      if (is_reduced(F, N))
        out.insert(F);
      else
        out.insert(reduce(F, N).form);
    }
  return {out.begin(), out.end()};
}

std::vector<QuadForm> enumerate_classes(const Int& D, long N) {
  std::vector<QuadForm> out;
  for (const QuadForm& Q : enumerate_reduced(D, N))
    if (Q.a % N == 0) out.push_back(Q);
  return out;
}

Rat class_number_H(const Int& D, long N) {
  Rat sum(0);
  for (const QuadForm& Q : enumerate_classes(D, N)) {
    Rat term(1, omega(Q, N));
    term.canonicalize();
    sum += term;
  }
  return sum;
}

}  // namespace gamma0
