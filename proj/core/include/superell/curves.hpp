#pragma once

// Point counts and zeta numerators of superelliptic curves.

#include <cstdint>
#include <optional>
#include <vector>

#include <gmpxx.h>
#include <nlohmann/json.hpp>

#include "superell/model.hpp"

namespace superell {

/// P(T) = sum a_i T^i with Z(C,T) = P(T) / ((1-T)(1-qT)), over q = p^e.
struct ZetaNum {
  std::uint64_t p = 0;
  unsigned e = 1;
  unsigned g = 0;
  std::vector<mpz_class> coeffs;  // a_0 .. a_{2g}

  mpz_class q() const;
  nlohmann::json to_json() const;
  static ZetaNum from_json(const nlohmann::json& j);
  bool operator==(const ZetaNum& o) const { return p == o.p && e == o.e && coeffs == o.coeffs; }
  bool operator!=(const ZetaNum& o) const { return !(*this == o); }
};

unsigned genus(const SuperellipticModel& m);

/// Degree-one places of the smooth projective model over F_{q^n}.
mpz_class count_points(const SuperellipticModel& m, unsigned n);

struct ZetaOptions {
  /// Also count N_{g+1}..N_{2g} (where within the point limit) and compare.
  bool verify = false;
};

ZetaNum zeta_numerator(const SuperellipticModel& m, const ZetaOptions& opts = {});
/// Assembles P(T) from N_1..N_g by Newton's identities.
ZetaNum zeta_from_counts(std::uint64_t p, unsigned e, unsigned g, const std::vector<mpz_class>& counts);
/// N_1..N_n predicted from P.
std::vector<mpz_class> predict_counts(const ZetaNum& P, unsigned n);
/// Power sums S_1..S_n of the reciprocal roots.
std::vector<mpz_class> power_sums(const ZetaNum& P, unsigned n);

ZetaNum base_change(const ZetaNum& P, unsigned m);
bool is_supersingular_np(const ZetaNum& P, std::uint64_t p, unsigned e);
/// +sqrt(q) is a reciprocal root of P.
bool has_central_eigenvalue(const ZetaNum& P);
/// 2 * lcm{m : phi(m) <= 2g}.
unsigned default_extension_bound(unsigned g);
std::optional<unsigned> find_central_extension(const ZetaNum& P, std::optional<unsigned> d_max = std::nullopt);
/// Exact divisibility P0 | P in Q[T].
bool numerator_divides(const ZetaNum& P0, const ZetaNum& P);
/// q^g T^{2g} P(1/(qT)) = P(T).
bool functional_equation_holds(const ZetaNum& P);
/// |q^n + 1 - N| <= 2g q^{n/2}.
bool weil_bound_holds(const mpz_class& N, const mpz_class& q, unsigned n, unsigned g);

/// The same curve with its coefficients read in the degree-k extension.
SuperellipticModel extend_scalars(const SuperellipticModel& m, unsigned k);

}  // namespace superell
