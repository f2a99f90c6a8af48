#pragma once

// Exact Dirichlet L-polynomials L(u, chi) = sum_{g monic} chi(g) u^deg g.

#include <cstdint>
#include <optional>
#include <vector>

#include <nlohmann/json.hpp>

#include "superell/characters.hpp"
#include "superell/cyclo.hpp"

namespace superell {

struct LPoly {
  std::uint64_t p = 0;
  unsigned e = 1;
  std::uint64_t q = 0;
  unsigned ell = 0;
  std::vector<CycInt> coeffs;  // trimmed; coeffs[0] = 1
  nlohmann::json char_ref;

  int degree() const { return static_cast<int>(coeffs.size()) - 1; }
  /// L(zeta^-k), i.e. zero iff (1 - zeta^k u) divides L.
  CycInt eval_at_root(unsigned k) const;

  nlohmann::json to_json() const;
  static LPoly from_json(const nlohmann::json& j);
  bool operator==(const LPoly& o) const { return q == o.q && ell == o.ell && coeffs == o.coeffs; }
};

struct LOptions {
  /// Also sum degree deg f (must vanish by orthogonality) and throw if it does not.
  bool verify_orthogonality = false;
};

LPoly l_polynomial(const DirichletChar& chi, const LOptions& opts = {});

/// Per-degree sums of chi over monic g, as exponent histograms:
/// counts[n][k] = #{g monic, deg g = n, chi(g) = zeta^k}, for n <= max_degree.
std::vector<std::vector<std::int64_t>> character_histogram(const DirichletChar& chi, unsigned max_degree);

struct StripResult {
  LPoly quotient;
  std::optional<unsigned> k;       // None for odd characters
  std::vector<unsigned> candidates;  // every k with (1 - zeta^k u) | L
  bool ambiguous = false;
};

/// Removes the trivial factor (1 - zeta^k u) of an even character. `hint`
/// picks among several candidates; otherwise the smallest is taken and the
/// result is marked ambiguous.
StripResult strip_trivial_factor(const LPoly& L, const DirichletChar& chi, std::optional<unsigned> hint = std::nullopt);

/// Exact test of L(q^{-1/2}) = 0.
bool central_value_is_zero(const LPoly& L);

DirichletChar dual_char(const DirichletChar& chi);

/// Coefficients of prod_j F_j as CycInt polynomials.
std::vector<CycInt> multiply(const std::vector<CycInt>& a, const std::vector<CycInt>& b);

namespace detail {
/// Res(a, b) on raw coefficient arrays (low first, both nonzero, degrees
/// given). Allocation free; degrees must stay below 128.
Elem resultant_raw(const FieldData& f, const Elem* a, int da, const Elem* b, int db);
}  // namespace detail

}  // namespace superell
