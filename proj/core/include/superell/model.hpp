#pragma once

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "superell/polyring.hpp"

namespace superell {

/// The affine curve y^ell = twist * D_1 * D_2^2 * ... * D_{ell-1}^{ell-1}.
/// Components are monic, pairwise coprime and squarefree, not all constant.
class SuperellipticModel {
 public:
  SuperellipticModel(unsigned ell, Field field, Elem twist, std::vector<Poly> components);

  unsigned ell() const { return ell_; }
  const Field& field() const { return field_; }
  Elem twist() const { return twist_; }
  /// components()[i] is D_{i+1}.
  const std::vector<Poly>& components() const { return components_; }

  /// d = sum deg D_i, the number of geometric branch points in A^1.
  unsigned branch_degree() const;
  /// sum i * deg D_i = deg of the defining polynomial.
  unsigned weighted_degree() const;
  /// Unramified at infinity: weighted_degree() divisible by ell.
  bool normalized() const { return weighted_degree() % ell_ == 0; }
  /// prod D_i.
  Poly radical() const;
  /// twist * prod D_i^i.
  Poly defining_polynomial() const;
  /// True when prod D_i^i is a power of a single irreducible.
  bool is_prime_power() const;

  nlohmann::json to_json() const;
  static SuperellipticModel from_json(const nlohmann::json& j);

  bool operator==(const SuperellipticModel& o) const;
  bool operator<(const SuperellipticModel& o) const;

 private:
  unsigned ell_;
  Field field_;
  Elem twist_;
  std::vector<Poly> components_;
};

}  // namespace superell
