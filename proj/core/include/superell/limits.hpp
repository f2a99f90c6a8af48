#pragma once

#include <cstdint>

namespace superell {

/// Resource guards. Defaults can be overridden through SUPERELL_LIMIT_POINTS
/// and SUPERELL_LIMIT_CENSUS; everything else is set programmatically.
struct Limits {
  std::uint64_t max_field_size = std::uint64_t{1} << 40;
  /// Largest q^n for which count_points walks the field.
  std::uint64_t point_count = 1'000'000'000;
  /// Largest number of characters a census may enumerate.
  std::uint64_t census = 2'000'000;
  /// Largest number of candidates an exhaustive polynomial enumeration visits.
  std::uint64_t enumeration = 20'000'000;
  /// Largest |pi|^4 for a brute-force local density count.
  std::uint64_t local_density = 100'000'000;
  /// Largest number of monic polynomials summed per L-polynomial.
  std::uint64_t character_sum = 200'000'000;
};

/// Process-wide limits, initialised from the environment on first use.
Limits& limits();

/// Re-reads the environment overrides into limits().
void reload_limits_from_env();

}  // namespace superell
