#pragma once
#include <stdexcept>
#include <string>

namespace gamma0 {

// Levels for which the quotient curve has genus zero and 24/(N-1) is integral.
inline constexpr long kSupportedLevels[] = {2, 3, 4, 5, 7, 13};

inline bool level_supported(long N) {
  for (long v : kSupportedLevels)
    if (v == N) return true;
  return false;
}

struct UnsupportedLevel : std::domain_error {
  explicit UnsupportedLevel(long N)
      : std::domain_error("unsupported level " + std::to_string(N)) {}
};

inline void require_level(long N) {
  if (!level_supported(N)) throw UnsupportedLevel(N);
}

// 24/(N-1): exponent of the eta quotient and also the value of j_N at the cusp 0.
inline long eta_exponent(long N) {
  require_level(N);
  return 24 / (N - 1);
}

struct NonIntegralCoefficient : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NonvanishingRemainder : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NonrealTrace : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RoundingUncertified : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct PrecisionExhausted : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace gamma0
