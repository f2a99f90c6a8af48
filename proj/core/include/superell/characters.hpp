#pragma once

// Order-ell Dirichlet characters of F_q[t] attached to superelliptic models.

#include <cstdint>
#include <optional>
#include <vector>

#include <gmpxx.h>
#include <nlohmann/json.hpp>

#include "superell/cyclo.hpp"
#include "superell/model.hpp"
#include "superell/polyring.hpp"

namespace superell {

/// A value in mu_ell together with 0, stored as an exponent of zeta.
class MuValue {
 public:
  static MuValue zero(unsigned ell) { return MuValue(ell, std::nullopt); }
  static MuValue root(unsigned ell, std::int64_t k);

  unsigned ell() const { return ell_; }
  bool is_zero() const { return !k_.has_value(); }
  /// Exponent k of zeta^k; requires !is_zero().
  unsigned exponent() const { return *k_; }

  MuValue operator*(const MuValue& o) const;
  MuValue pow(unsigned j) const;
  CycInt embed() const;

  bool operator==(const MuValue& o) const { return ell_ == o.ell_ && k_ == o.k_; }

 private:
  MuValue(unsigned ell, std::optional<unsigned> k) : ell_(ell), k_(k) {}
  unsigned ell_;
  std::optional<unsigned> k_;
};

struct CharFactor {
  Poly prime;         // monic irreducible
  unsigned exponent;  // 1 .. ell-1
};

/// chi(g) = prod_P (g / P)_ell^{e_P}, times zeta^{a * deg g} where
/// a = infinity_exponent() is nonzero only for twisted models.
///
/// zeta is fixed as g0^((q-1)/ell) with g0 = primitive_root(field).
class DirichletChar {
 public:
  DirichletChar(unsigned ell, Field field, std::vector<CharFactor> factors, unsigned infinity_exponent = 0);

  unsigned ell() const { return ell_; }
  const Field& field() const { return field_; }
  const std::vector<CharFactor>& factors() const { return factors_; }
  unsigned infinity_exponent() const { return infinity_exponent_; }
  /// The fixed primitive ell-th root of unity in F_q.
  Elem zeta() const { return zeta_pows_[1]; }
  bool even() const { return even_; }

  /// prod P over the factors; squarefree by construction.
  Poly conductor() const;
  unsigned conductor_degree() const;
  /// Exponent k with a^((q-1)/ell) = zeta^k, for nonzero a in F_q.
  unsigned omega(Elem a) const;
  MuValue eval(const Poly& g) const;
  /// chi^j: exponents e_P -> j e_P mod ell.
  DirichletChar power(unsigned j) const;
  /// The model y^ell = c * prod D_i^i this character comes from, with
  /// D_i = product of primes of exponent i and c = g0^a.
  SuperellipticModel model() const;

  /// Products of the primes sharing exponent k, indexed by k-1.
  const std::vector<Poly>& grouped() const { return grouped_; }

  nlohmann::json to_json() const;
  static DirichletChar from_json(const nlohmann::json& j);

  bool operator==(const DirichletChar& o) const;
  /// (deg conductor, conductor, exponent map, infinity exponent).
  bool operator<(const DirichletChar& o) const;

 private:
  unsigned ell_;
  Field field_;
  std::vector<CharFactor> factors_;
  unsigned infinity_exponent_;
  std::vector<Elem> zeta_pows_;
  std::vector<Poly> grouped_;
  bool even_;
};

/// Power residue symbol (g/P)_ell computed as g^((|P|-1)/ell) mod P.
MuValue residue_symbol(const Poly& g, const Poly& P, unsigned ell);

DirichletChar char_from_model(const SuperellipticModel& m);
inline MuValue char_eval(const DirichletChar& chi, const Poly& g) { return chi.eval(g); }

/// Number of primitive Dirichlet characters whose conductor has degree d.
mpz_class count_all_primitive(std::uint64_t q, unsigned d);
/// Coefficient of u^d in prod_P (1 + (ell-1) u^deg P).
mpz_class count_order_ell_exact(std::uint64_t q, unsigned ell, unsigned d);
/// All primitive order-ell characters with conductor degree <= n, sorted.
std::vector<DirichletChar> enumerate_order_ell(const Field& f, unsigned ell, unsigned n);

}  // namespace superell
