#pragma once

// Specializing a base model along rational maps h = numer/denom.

#include <cstdint>
#include <optional>
#include <set>
#include <vector>

#include <nlohmann/json.hpp>

#include "superell/model.hpp"

namespace superell {

/// F(u, v) = v^deg f f(u/v); coeffs[i] multiplies u^i v^(degree-i).
class BinaryForm {
 public:
  BinaryForm(Field field, std::vector<Elem> coeffs, unsigned degree);

  const Field& field() const { return field_; }
  const std::vector<Elem>& coeffs() const { return coeffs_; }
  unsigned degree() const { return degree_; }

  Elem eval(Elem u, Elem v) const;
  /// F(a, b) for polynomials a, b.
  Poly eval(const Poly& a, const Poly& b) const;
  BinaryForm operator*(const BinaryForm& o) const;
  /// Partial derivatives d/du, d/dv.
  BinaryForm du() const;
  BinaryForm dv() const;

  bool operator==(const BinaryForm& o) const { return degree_ == o.degree_ && coeffs_ == o.coeffs_; }

 private:
  Field field_;
  std::vector<Elem> coeffs_;
  unsigned degree_;
};

BinaryForm homogenize(const Poly& f);

struct RationalMap {
  Poly numer;
  Poly denom;

  RationalMap(Poly n, Poly d);
  unsigned degree() const;
};

/// floor((g_target + ell - 1) / (g0 + ell - 1)).
unsigned genus_bound_degree(unsigned g_target, unsigned g0, unsigned ell);

/// c' with c' / c an ell-th power, canonical in its class.
Elem canonical_twist(const Field& f, Elem c, unsigned ell);

/// The pulled-back model, or None if it fails the squarefree, degree or
/// normalization filters. The twist is returned in canonical form.
std::optional<SuperellipticModel> specialize(const SuperellipticModel& base, const RationalMap& h);

/// Product of the homogenized components, the form whose values decide
/// whether a specialization is squarefree.
BinaryForm radical_form(const SuperellipticModel& base);

struct FamilyOptions {
  /// Draw this many random pairs instead of enumerating all of them.
  std::optional<std::uint64_t> sample_pairs;
  std::uint64_t seed = 0;
  /// Stop once this many distinct members are found.
  std::optional<std::size_t> max_members;
};

struct FamilyReport {
  SuperellipticModel base;
  unsigned n = 0;
  std::uint64_t raw_pairs = 0;
  std::uint64_t squarefree_pairs = 0;
  std::set<SuperellipticModel> members;
  bool sampled = false;

  nlohmann::json to_json(std::size_t member_limit = 1000) const;
};

FamilyReport generate_family(const SuperellipticModel& base, unsigned n, const FamilyOptions& opts = {});

}  // namespace superell
