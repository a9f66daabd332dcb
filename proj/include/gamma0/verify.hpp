#pragma once
#include <string>
#include <utility>
#include <vector>

#include "gamma0/bigfloat.hpp"
#include "gamma0/forms.hpp"

namespace gamma0 {

struct ClassFactorEntry {
  CComplex j;  // j_N(tau_Q), certified
  int omega;   // 1, 2, or 3
};

// One entry per class of discriminant-D forms with level-divisible leading
// coefficient; the factor (X - j)^{1/omega} data behind the trace sums.
struct ClassFactorData {
  Int disc;
  std::vector<ClassFactorEntry> entries;
};

ClassFactorData class_factor_data(const Int& D, long N, long prec);

// Weighted trace of j_N over the discriminant-D classes, rounded to the
// (1/6)Z lattice once the certified error drops below 1/24. Escalates the
// working precision internally (up to 2048 bits); results are cached.
// Returns the rational and the pre-rounding error bound of the accepted run.
std::pair<Rat, double> trace_t(const Int& D, long N, long prec);

struct VerificationReport {
  long level = 0;
  long n = 0;
  std::string theorem_id;
  std::string lhs, rhs;  // exact rationals, or decimals for numeric checks
  double abs_error = 0.0;
  bool pass = false;
  double runtime_ms = 0.0;
  std::string note;
};

// Class-number recurrence: sum of H(r^2-4n, N) plus all cusp nu terms versus
// the divisor-sum closed form (square n gets the elliptic and cusp-count
// corrections). Exact rational arithmetic throughout.
VerificationReport verify_class_number_relation(long n, long N);

// Trace recurrence: sum of t(r^2-4n, N) plus the finite-cusp nu-weighted
// hauptmodul values versus the closed form. Exact after certified rounding.
VerificationReport verify_trace_relation(long n, long N, long prec);

// Prime-level closed forms (the two-cusp specialization); n may be any
// positive integer coprime to the prime level.
VerificationReport verify_class_number_prime(long n, long p);
VerificationReport verify_trace_prime(long n, long p, long prec);

// Factorization of the modular-equation diagonal into class factors and cusp
// factors, compared at sample points in sixth powers (integer exponents), with
// a separate exact sign check at a large real argument.
VerificationReport verify_factorization(long n, long N,
                                        const std::vector<Rat>& X_samples,
                                        long prec);

struct SuiteOptions {
  std::vector<long> levels;
  long n_lo = 1;
  long n_hi = 10;
  bool cor24 = true;   // nonsquare-n class-number and trace relations
  bool thm11 = true;   // prime-level closed forms
  bool thm22 = true;   // nonsquare-n diagonal factorization
  bool thm25 = true;   // square-n relations and quotient factorization
  long prec = 128;
};

// One report per executed check, stable-sorted by (level, n, theorem_id).
// Instances with gcd(n, N) > 1 are recorded as skipped, never executed.
std::vector<VerificationReport> run_suite(const SuiteOptions& opt);

}  // namespace gamma0
