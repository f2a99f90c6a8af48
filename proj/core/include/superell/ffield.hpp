#pragma once

// Finite fields F_{p^e} built as towers of simple extensions.
//
// Every element is stored as its canonical index: the integer whose base-p
// digits are the flattened coefficient vector (lowest coefficient least
// significant). A subfield's elements keep their index inside every tower
// extension, so the embedding F -> F' is the identity on Elem values.

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>
#include <nlohmann/json.hpp>

namespace superell {

using Elem = std::uint64_t;

namespace detail {

/// Division by a runtime constant through a 128-bit reciprocal. Exact while
/// a * d < 2^64, which holds for every index in fields below the size guard.
struct FastDiv {
  std::uint64_t d = 1;
  std::uint64_t m = 0;

  FastDiv() = default;
  explicit FastDiv(std::uint64_t divisor) : d(divisor), m(~std::uint64_t{0} / divisor + 1) {}

  std::uint64_t div(std::uint64_t a) const {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * m) >> 64);
  }
};

struct FieldData {
  std::uint64_t p = 0;
  std::uint64_t q = 0;
  unsigned abs_degree = 1;
  unsigned level_degree = 1;
  std::shared_ptr<const FieldData> parent;
  std::vector<Elem> modulus;  // monic, over parent, low coefficient first
  std::vector<unsigned> tower;
  std::string key;
  FastDiv pdiv;
  Elem primitive_root = 0;
  bool tables = false;
  std::vector<std::uint32_t> log_table;  // log_table[a] for a != 0
  std::vector<std::uint32_t> exp_table;  // length 2(q-1)
};

Elem generic_mul(const FieldData& d, Elem a, Elem b);
Elem generic_pow(const FieldData& d, Elem a, std::uint64_t k);

inline Elem add(const FieldData& d, Elem a, Elem b) {
  const std::uint64_t p = d.p;
  if (d.abs_degree == 1) {
    const Elem s = a + b;
    return s >= p ? s - p : s;
  }
  Elem out = 0;
  std::uint64_t place = 1;
  for (unsigned j = 0; j < d.abs_degree && (a | b) != 0; ++j) {
    const std::uint64_t qa = d.pdiv.div(a);
    const std::uint64_t qb = d.pdiv.div(b);
    std::uint64_t s = (a - qa * p) + (b - qb * p);
    if (s >= p) s -= p;
    out += s * place;
    place *= p;
    a = qa;
    b = qb;
  }
  return out;
}

inline Elem neg(const FieldData& d, Elem a) {
  const std::uint64_t p = d.p;
  if (d.abs_degree == 1) return a == 0 ? 0 : p - a;
  Elem out = 0;
  std::uint64_t place = 1;
  for (unsigned j = 0; j < d.abs_degree && a != 0; ++j) {
    const std::uint64_t qa = d.pdiv.div(a);
    const std::uint64_t r = a - qa * p;
    if (r != 0) out += (p - r) * place;
    place *= p;
    a = qa;
  }
  return out;
}

inline Elem mul(const FieldData& d, Elem a, Elem b) {
  if (a == 0 || b == 0) return 0;
  if (d.tables) return d.exp_table[d.log_table[a] + d.log_table[b]];
  return generic_mul(d, a, b);
}

}  // namespace detail

class FieldElem;

/// Immutable handle to a finite field. Copies share the same tables.
class Field {
 public:
  Field() = default;

  /// The canonical field with p^e elements (single extension of F_p).
  static Field make(std::uint64_t p, unsigned e = 1);
  /// The canonical degree-n extension built on top of this field.
  Field extend(unsigned n) const;

  bool valid() const { return d_ != nullptr; }
  std::uint64_t characteristic() const { return d_->p; }
  std::uint64_t size() const { return d_->q; }
  unsigned absolute_degree() const { return d_->abs_degree; }
  /// Degree over base().
  unsigned degree() const { return d_->level_degree; }
  bool is_prime_field() const { return d_->parent == nullptr; }
  /// Field one tower level down; the prime field is its own base.
  Field base() const;
  /// Monic modulus over base(), low coefficient first. The prime field uses t.
  const std::vector<Elem>& modulus() const { return d_->modulus; }
  const std::vector<unsigned>& tower_degrees() const { return d_->tower; }
  /// True when `sub` is this field or one of its tower ancestors.
  bool contains(const Field& sub) const;

  Elem from_int(std::int64_t v) const;

  Elem add(Elem a, Elem b) const { return detail::add(*d_, a, b); }
  Elem neg(Elem a) const { return detail::neg(*d_, a); }
  Elem sub(Elem a, Elem b) const { return detail::add(*d_, a, detail::neg(*d_, b)); }
  Elem mul(Elem a, Elem b) const { return detail::mul(*d_, a, b); }
  Elem inv(Elem a) const;
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
  Elem pow(Elem a, std::uint64_t k) const;
  Elem pow(Elem a, const mpz_class& k) const;
  /// Inverse Frobenius a^(q/p).
  Elem pth_root(Elem a) const;

  /// Coordinates over base(), length degree().
  std::vector<Elem> coeffs(Elem a) const;
  Elem from_coeffs(std::span<const Elem> c) const;
  /// Flattened base-p digits, length absolute_degree().
  std::vector<std::uint64_t> digits(Elem a) const;
  Elem from_digits(std::span<const std::int64_t> digits) const;

  /// Smallest generator of the multiplicative group in index order.
  Elem primitive_root() const { return d_->primitive_root; }
  bool has_tables() const { return d_->tables; }
  /// Discrete log to primitive_root(); a must be nonzero.
  std::uint64_t log(Elem a) const;
  /// True if a is an ell-th power (0 counts as one).
  bool is_power(Elem a, std::uint64_t ell) const;

  FieldElem elem(Elem v) const;

  nlohmann::json descriptor() const;
  static Field from_descriptor(const nlohmann::json& j);
  const std::string& key() const { return d_->key; }

  bool operator==(const Field& o) const { return d_ == o.d_ || (d_ && o.d_ && d_->key == o.d_->key); }
  bool operator!=(const Field& o) const { return !(*this == o); }

  const detail::FieldData& data() const { return *d_; }

 private:
  explicit Field(std::shared_ptr<const detail::FieldData> d) : d_(std::move(d)) {}
  std::shared_ptr<const detail::FieldData> d_;
};

/// Convenience value type pairing an element with its field.
class FieldElem {
 public:
  FieldElem(Field f, Elem v) : field_(std::move(f)), value_(v) {}

  const Field& field() const { return field_; }
  Elem value() const { return value_; }
  std::vector<Elem> coeffs() const { return field_.coeffs(value_); }
  bool is_zero() const { return value_ == 0; }

  FieldElem operator+(const FieldElem& o) const { return {field_, field_.add(value_, o.value_)}; }
  FieldElem operator-(const FieldElem& o) const { return {field_, field_.sub(value_, o.value_)}; }
  FieldElem operator-() const { return {field_, field_.neg(value_)}; }
  FieldElem operator*(const FieldElem& o) const { return {field_, field_.mul(value_, o.value_)}; }
  FieldElem operator/(const FieldElem& o) const { return {field_, field_.div(value_, o.value_)}; }
  FieldElem pow(std::uint64_t k) const { return {field_, field_.pow(value_, k)}; }
  FieldElem inverse() const { return {field_, field_.inv(value_)}; }

  bool operator==(const FieldElem& o) const { return value_ == o.value_ && field_ == o.field_; }
  bool operator!=(const FieldElem& o) const { return !(*this == o); }
  bool operator<(const FieldElem& o) const { return value_ < o.value_; }

 private:
  Field field_;
  Elem value_;
};

/// Primality by trial division (inputs stay below 2^40).
bool is_prime(std::uint64_t n);
/// Distinct prime divisors, increasing.
std::vector<std::uint64_t> prime_divisors(std::uint64_t n);

}  // namespace superell
