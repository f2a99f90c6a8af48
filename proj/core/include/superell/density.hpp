#pragma once

// Squarefree-value densities of binary forms over F_q[t].

#include <cstdint>
#include <optional>
#include <vector>

#include <gmpxx.h>
#include <nlohmann/json.hpp>

#include "superell/families.hpp"

namespace superell {

struct LocalFactor {
  Poly prime;
  mpz_class c;        // zeros of F in (A/pi^2)^2
  mpq_class factor;   // 1 - c / |pi|^4

  nlohmann::json to_json() const;
};

struct EmpiricalResult {
  std::uint64_t samples = 0;
  std::uint64_t hits = 0;
  std::optional<double> frequency;

  nlohmann::json to_json() const;
};

struct DensityReport {
  mpq_class truncated_product = 1;
  unsigned truncation_degree = 0;
  std::vector<Poly> excluded;
  std::vector<LocalFactor> factors;
  std::optional<EmpiricalResult> empirical;

  nlohmann::json to_json() const;
};

nlohmann::json rational_json(const mpq_class& r);

/// Monic irreducibles pi with |pi| <= deg F.
std::vector<Poly> excluded_primes(const BinaryForm& F);

/// c_pi from a Hensel count over (A/pi)^2.
LocalFactor local_factor(const BinaryForm& F, const Poly& pi);
/// c_pi by walking all of (A/pi^2)^2.
LocalFactor local_factor_bruteforce(const BinaryForm& F, const Poly& pi);

/// Product of local factors over non-excluded primes of degree <= deg_max.
DensityReport truncated_density(const BinaryForm& F, unsigned deg_max);

/// One-variable analogue: prod_{deg pi <= D} (1 - u^deg pi) truncated at u^D,
/// evaluated at u = q^-2.
mpq_class squarefree_density_m1(std::uint64_t q, unsigned deg_max);
/// Exact fraction of squarefree monic polynomials of degree n.
mpq_class squarefree_frequency(const Field& f, unsigned n);

/// Fraction of random pairs (a, b) with deg a, deg b <= h_deg for which
/// prod F_i(a, b) is squarefree away from the excluded primes.
EmpiricalResult empirical_density(const SuperellipticModel& base, unsigned h_deg, std::uint64_t samples, std::uint64_t seed);

}  // namespace superell
