#include "superell/cyclo.hpp"

#include "superell/errors.hpp"
#include "superell/ffield.hpp"

namespace superell {
namespace {

void check_ell(unsigned ell) {
  if (ell < 3 || !is_prime(ell)) throw PreconditionError("cyclotomic order must be an odd prime, got " + std::to_string(ell));
}

void check_same(const CycInt& a, const CycInt& b) {
  if (a.ell() != b.ell()) throw PreconditionError("mixing cyclotomic rings of different order");
}

}  // namespace

CycInt::CycInt(unsigned ell) : ell_(ell), coords_(ell - 1) { check_ell(ell); }

CycInt::CycInt(unsigned ell, std::vector<mpz_class> coords) : ell_(ell), coords_(std::move(coords)) {
  check_ell(ell);
  if (coords_.size() != ell - 1) throw PreconditionError("CycInt needs ell-1 coordinates");
}

CycInt CycInt::reduce(unsigned ell, std::vector<mpz_class>&& full) {
  // zeta^(ell-1) = -(1 + zeta + ... + zeta^(ell-2))
  CycInt out(ell);
  const mpz_class top = full[ell - 1];
  for (unsigned i = 0; i + 1 < ell; ++i) out.coords_[i] = full[i] - top;
  return out;
}

CycInt CycInt::from_integer(unsigned ell, const mpz_class& n) {
  CycInt out(ell);
  out.coords_[0] = n;
  return out;
}

CycInt CycInt::from_exponent_counts(unsigned ell, std::span<const std::int64_t> counts) {
  CycInt out(ell);
  const std::int64_t top = counts[ell - 1];
  for (unsigned i = 0; i + 1 < ell; ++i) out.coords_[i] = static_cast<long>(counts[i] - top);
  return out;
}

bool CycInt::is_zero() const {
  for (const auto& c : coords_) {
    if (c != 0) return false;
  }
  return true;
}

bool CycInt::is_integer() const {
  for (std::size_t i = 1; i < coords_.size(); ++i) {
    if (coords_[i] != 0) return false;
  }
  return true;
}

CycInt CycInt::operator+(const CycInt& o) const {
  CycInt out = *this;
  out += o;
  return out;
}

CycInt& CycInt::operator+=(const CycInt& o) {
  check_same(*this, o);
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += o.coords_[i];
  return *this;
}

CycInt CycInt::operator-(const CycInt& o) const {
  check_same(*this, o);
  CycInt out = *this;
  for (std::size_t i = 0; i < coords_.size(); ++i) out.coords_[i] -= o.coords_[i];
  return out;
}

CycInt CycInt::operator-() const {
  CycInt out = *this;
  for (auto& c : out.coords_) c = -c;
  return out;
}

CycInt CycInt::operator*(const CycInt& o) const {
  check_same(*this, o);
  std::vector<mpz_class> full(ell_);
  for (unsigned i = 0; i + 1 < ell_; ++i) {
    if (coords_[i] == 0) continue;
    for (unsigned j = 0; j + 1 < ell_; ++j) {
      full[(i + j) % ell_] += coords_[i] * o.coords_[j];
    }
  }
  return reduce(ell_, std::move(full));
}

CycInt CycInt::operator*(const mpz_class& s) const {
  CycInt out = *this;
  for (auto& c : out.coords_) c *= s;
  return out;
}

CycInt CycInt::times_zeta(unsigned k) const {
  std::vector<mpz_class> full(ell_);
  for (unsigned i = 0; i + 1 < ell_; ++i) full[(i + k) % ell_] += coords_[i];
  return reduce(ell_, std::move(full));
}

nlohmann::json CycInt::to_json() const {
  nlohmann::json c = nlohmann::json::array();
  for (const auto& x : coords_) c.push_back(x.get_str());
  return {{"ell", ell_}, {"coords", c}};
}

CycInt CycInt::from_json(const nlohmann::json& j) {
  const auto ell = j.at("ell").get<unsigned>();
  std::vector<mpz_class> coords;
  for (const auto& c : j.at("coords")) coords.emplace_back(c.get<std::string>());
  return CycInt(ell, std::move(coords));
}

CycInt mu_embed(unsigned ell, std::int64_t k) {
  check_ell(ell);
  const auto l = static_cast<std::int64_t>(ell);
  const auto r = static_cast<unsigned>(((k % l) + l) % l);
  return CycInt::from_integer(ell, 1).times_zeta(r);
}

CycInt conjugate(const CycInt& x) {
  const unsigned ell = x.ell();
  std::vector<mpz_class> full(ell);
  for (unsigned i = 0; i + 1 < ell; ++i) full[(ell - i) % ell] += x.coords()[i];
  const mpz_class top = full[ell - 1];
  std::vector<mpz_class> coords(ell - 1);
  for (unsigned i = 0; i + 1 < ell; ++i) coords[i] = full[i] - top;
  return CycInt(ell, std::move(coords));
}

SqrtExt SqrtExt::operator+(const SqrtExt& o) const {
  if (radicand != o.radicand) throw PreconditionError("SqrtExt radicands differ");
  return {a + o.a, b + o.b, radicand};
}

SqrtExt SqrtExt::operator*(const SqrtExt& o) const {
  if (radicand != o.radicand) throw PreconditionError("SqrtExt radicands differ");
  return {a * o.a + b * o.b * radicand, a * o.b + b * o.a, radicand};
}

}  // namespace superell
