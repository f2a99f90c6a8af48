#pragma once

// Exact arithmetic in Z[zeta_ell] for an odd prime ell, and in Z[zeta_ell][sqrt(r)].

#include <cstdint>
#include <span>
#include <vector>

#include <gmpxx.h>
#include <nlohmann/json.hpp>

namespace superell {

/// sum coords[i] * zeta^i over the basis 1, zeta, ..., zeta^(ell-2).
class CycInt {
 public:
  CycInt() = default;
  explicit CycInt(unsigned ell);
  CycInt(unsigned ell, std::vector<mpz_class> coords);

  static CycInt from_integer(unsigned ell, const mpz_class& n);
  /// sum counts[k] * zeta^k for k < ell (counts has length ell).
  static CycInt from_exponent_counts(unsigned ell, std::span<const std::int64_t> counts);

  unsigned ell() const { return ell_; }
  const std::vector<mpz_class>& coords() const { return coords_; }
  bool is_zero() const;
  /// Set when the value is a rational integer.
  bool is_integer() const;
  const mpz_class& constant_term() const { return coords_[0]; }

  CycInt operator+(const CycInt& o) const;
  CycInt operator-(const CycInt& o) const;
  CycInt operator-() const;
  CycInt operator*(const CycInt& o) const;
  CycInt operator*(const mpz_class& s) const;
  CycInt& operator+=(const CycInt& o);
  /// Multiplication by zeta^k.
  CycInt times_zeta(unsigned k) const;

  bool operator==(const CycInt& o) const { return ell_ == o.ell_ && coords_ == o.coords_; }
  bool operator!=(const CycInt& o) const { return !(*this == o); }

  nlohmann::json to_json() const;
  static CycInt from_json(const nlohmann::json& j);

 private:
  static CycInt reduce(unsigned ell, std::vector<mpz_class>&& full);

  unsigned ell_ = 0;
  std::vector<mpz_class> coords_;
};

/// zeta^(k mod ell).
CycInt mu_embed(unsigned ell, std::int64_t k);
/// Image under zeta -> zeta^(-1).
CycInt conjugate(const CycInt& x);
inline bool is_zero(const CycInt& x) { return x.is_zero(); }

/// a + b*sqrt(radicand). Componentwise equality is valid while sqrt(radicand)
/// is not in Q(zeta_ell), i.e. radicand a power of a prime p != ell with odd
/// exponent, or a perfect square.
struct SqrtExt {
  CycInt a;
  CycInt b;
  mpz_class radicand;

  SqrtExt operator+(const SqrtExt& o) const;
  SqrtExt operator*(const SqrtExt& o) const;
  bool is_zero() const { return a.is_zero() && b.is_zero(); }
};

}  // namespace superell
