#pragma once

// Censuses of order-ell characters, seed curve checks and family experiments.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>
#include <nlohmann/json.hpp>

#include "superell/characters.hpp"
#include "superell/curves.hpp"
#include "superell/families.hpp"
#include "superell/lfunction.hpp"

namespace superell {

constexpr int kSchemaVersion = 1;

struct CensusOptions {
  /// Skip L-functions and only count characters.
  bool compute_l = true;
  /// Normalized models on which P(T) = prod_j L*(chi^j) is checked.
  std::size_t sample_decomp = 25;
  std::optional<std::string> cache_path;
  bool verify_orthogonality = false;
  /// Worker threads; 0 picks the hardware concurrency.
  unsigned threads = 0;
};

struct CharacterRecord {
  DirichletChar chi;
  bool vanishing = false;
  std::optional<unsigned> trivial_k;
  bool ambiguous = false;
  int stripped_degree = 0;
};

struct DegreeRow {
  unsigned d = 0;
  mpz_class count_A;
  std::uint64_t count_B = 0;
  std::vector<nlohmann::json> vanishing;  // conductor text plus exponent map
};

struct DecompositionCheck {
  SuperellipticModel model;
  ZetaNum P;
  bool holds = false;
};

struct CensusStats {
  double seconds = 0;
  std::uint64_t cache_hits = 0;
  std::uint64_t cache_misses = 0;
  bool cache_rebuilt = false;
};

struct CensusReport {
  std::uint64_t p = 0;
  unsigned e = 1;
  std::uint64_t q = 0;
  unsigned ell = 0;
  unsigned n = 0;
  std::vector<DegreeRow> per_degree;
  std::vector<CharacterRecord> characters;  // empty when L-functions are skipped
  std::vector<DecompositionCheck> decomposition;
  bool duality_closed = true;
  std::size_t ambiguous_strips = 0;
  CensusStats stats;

  nlohmann::json to_json(bool with_runtime = true) const;
  std::string to_csv() const;
};

CensusReport run_census(const Field& f, unsigned ell, unsigned n, const CensusOptions& opts = {});

/// P(T) = prod_{j=1}^{ell-1} L*(u, chi^j) for a normalized model.
bool decomposition_holds(const SuperellipticModel& m, const ZetaNum& P);

struct SeedReport {
  std::string kind;
  nlohmann::json parameters;
  nlohmann::json chain;
  nlohmann::json verdicts;
  std::optional<SuperellipticModel> model;  // the seed curve, if any
  std::optional<ZetaNum> P;                 // its zeta numerator

  nlohmann::json to_json() const;
};

/// y^2 = x^3 + 1 and y^3 = x^3 - x over F_p, p = 2 mod 3.
SeedReport seed_thm41(std::uint64_t p);
/// y^ell = x(x-1)(x-2)^(ell-2) over F_p, p = -1 mod ell.
SeedReport seed_thm42(unsigned ell, std::uint64_t p);
/// A sextic twist y^3 = c(x^3 - a x) over F_{p^2} with P = (1 - pT)^2.
SeedReport seed_f25twist(std::uint64_t p);
SeedReport seed_check(const std::string& kind, std::uint64_t p, unsigned ell = 0);

struct ExperimentOptions {
  FamilyOptions family;
  /// Confirm central vanishing through the character sum as well.
  bool verify_vanishing = false;
  /// Verify at most this many members (all when unset).
  std::optional<std::size_t> verify_limit;
};

struct MemberCheck {
  SuperellipticModel model;
  ZetaNum P;
  bool divides = false;
  bool central = false;
  std::optional<bool> l_vanishing;
};

struct ExperimentReport {
  SeedReport seed;
  FamilyReport family;
  std::vector<MemberCheck> checks;
  bool all_verified = true;
  std::string note;

  nlohmann::json to_json() const;
};

/// Seeds: "f25twist" (over F_{p^2}), "thm41" (y^3 = x^3 - x over F_{p^4}),
/// "thm42" (over F_{p^d} with d the minimal central extension).
ExperimentReport family_experiment(const std::string& seed_kind, std::uint64_t p, unsigned n, const ExperimentOptions& opts = {},
                                   unsigned ell = 0);

}  // namespace superell
