#pragma once

// Dense univariate polynomials over a Field: the ring A = F_q[t].

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>
#include <nlohmann/json.hpp>

#include "superell/ffield.hpp"

namespace superell {

class Poly {
 public:
  explicit Poly(Field f) : field_(std::move(f)) {}
  Poly(Field f, std::vector<Elem> coeffs);

  static Poly constant(const Field& f, Elem c);
  static Poly monomial(const Field& f, Elem c, std::size_t degree);
  /// The polynomial t.
  static Poly variable(const Field& f);
  /// Monic polynomial of the given degree whose lower coefficients are the
  /// base-q digits of `index` (constant term least significant).
  static Poly monic_from_index(const Field& f, unsigned degree, std::uint64_t index);
  /// Arbitrary polynomial of degree < `length` from the base-q digits of index.
  static Poly from_index(const Field& f, unsigned length, std::uint64_t index);

  const Field& field() const { return field_; }
  const std::vector<Elem>& coeffs() const { return c_; }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  bool is_one() const { return c_.size() == 1 && c_[0] == 1; }
  bool is_monic() const { return !c_.empty() && c_.back() == 1; }
  Elem lead() const { return c_.empty() ? 0 : c_.back(); }
  Elem operator[](std::size_t i) const { return i < c_.size() ? c_[i] : 0; }
  /// Base-q index of the non-leading coefficients (see monic_from_index).
  std::uint64_t index() const;
  /// |f| = q^deg f as an exact integer.
  mpz_class norm() const;

  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator-() const;
  Poly operator*(const Poly& o) const;
  Poly scaled(Elem c) const;
  Poly operator/(const Poly& o) const { return divmod(o).first; }
  Poly operator%(const Poly& o) const { return divmod(o).second; }
  std::pair<Poly, Poly> divmod(const Poly& divisor) const;

  Poly monic() const;
  Poly derivative() const;
  Poly pow(unsigned k) const;
  Elem eval(Elem x) const;
  /// Evaluates at an element of an extension field containing field().
  Elem eval_in(const Field& ext, Elem x) const;
  /// f(g(t)).
  Poly compose(const Poly& g) const;

  bool operator==(const Poly& o) const { return c_ == o.c_ && field_ == o.field_; }
  bool operator!=(const Poly& o) const { return !(*this == o); }
  /// Canonical order: degree first, then coefficients from the top down.
  bool operator<(const Poly& o) const;

 private:
  void trim();

  Field field_;
  std::vector<Elem> c_;
};

struct Factorization {
  Elem unit = 0;
  std::vector<std::pair<Poly, unsigned>> factors;  // monic irreducible, sorted

  Poly expand(const Field& f) const;
};

/// Monic gcd (zero only if both inputs are zero).
Poly gcd(const Poly& a, const Poly& b);
/// base^exponent mod modulus.
Poly powmod(const Poly& base, const mpz_class& exponent, const Poly& modulus);
Poly mulmod(const Poly& a, const Poly& b, const Poly& modulus);
/// Res(a, b) = lc(a)^deg b * prod_{a(x)=0} b(x).
Elem resultant(const Poly& a, const Poly& b);

bool is_squarefree(const Poly& f);
bool is_irreducible(const Poly& f);
/// Squarefree decomposition: pairs (squarefree monic part, multiplicity).
std::vector<std::pair<Poly, unsigned>> squarefree_decomposition(const Poly& f);
/// Complete factorization; equal-degree splitting is driven by `seed`.
Factorization factor(const Poly& f, std::uint64_t seed = 0);

/// Number of monic irreducibles of degree d over F_q (necklace count).
mpz_class count_irreducibles(std::uint64_t q, unsigned d);
/// All monic irreducibles of degree d in canonical order.
std::vector<Poly> irreducibles(const Field& f, unsigned d);

/// Text format: "[1,0,6]" is 6t^2+1 over F_7. Coefficients over extension
/// fields are base-p digit vectors, e.g. "[[0,1],1]".
std::string to_text(const Poly& f);
nlohmann::json to_json(const Poly& f);
Poly poly_from_json(const Field& f, const nlohmann::json& j);
Poly parse_poly(const Field& f, const std::string& text);

}  // namespace superell
