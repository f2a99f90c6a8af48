#include "superell/characters.hpp"

#include <algorithm>
#include <functional>

#include "superell/errors.hpp"
#include "superell/limits.hpp"

namespace superell {
namespace {

void require_split(const Field& f, unsigned ell) {
  if (ell < 3 || !is_prime(ell)) throw PreconditionError("character order must be an odd prime");
  if ((f.size() - 1) % ell != 0) {
    throw PreconditionError("q = " + std::to_string(f.size()) + " is not 1 mod " + std::to_string(ell));
  }
}

bool factor_less(const CharFactor& a, const CharFactor& b) { return a.prime < b.prime; }

}  // namespace

MuValue MuValue::root(unsigned ell, std::int64_t k) {
  const auto l = static_cast<std::int64_t>(ell);
  return MuValue(ell, static_cast<unsigned>(((k % l) + l) % l));
}

MuValue MuValue::operator*(const MuValue& o) const {
  if (ell_ != o.ell_) throw PreconditionError("MuValue: mismatched orders");
  if (is_zero() || o.is_zero()) return zero(ell_);
  return root(ell_, static_cast<std::int64_t>(*k_) + *o.k_);
}

MuValue MuValue::pow(unsigned j) const {
  if (is_zero()) return j == 0 ? root(ell_, 0) : *this;
  return root(ell_, static_cast<std::int64_t>(*k_) * j);
}

CycInt MuValue::embed() const {
  if (is_zero()) return CycInt(ell_);
  return mu_embed(ell_, *k_);
}

DirichletChar::DirichletChar(unsigned ell, Field field, std::vector<CharFactor> factors, unsigned infinity_exponent)
    : ell_(ell), field_(std::move(field)), factors_(std::move(factors)), infinity_exponent_(infinity_exponent % ell) {
  require_split(field_, ell_);
  if (factors_.empty()) throw PreconditionError("character needs at least one ramified prime");
  std::sort(factors_.begin(), factors_.end(), factor_less);
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    const auto& f = factors_[i];
    if (f.prime.field() != field_) throw PreconditionError("character factor over a different field");
    if (!f.prime.is_monic() || f.prime.degree() < 1) throw PreconditionError("character factors must be monic of positive degree");
    if (f.exponent == 0 || f.exponent >= ell_) throw PreconditionError("character exponents must lie in 1..ell-1");
    if (i > 0 && factors_[i - 1].prime == f.prime) throw PreconditionError("repeated prime in character");
  }

  const Elem z = field_.pow(field_.primitive_root(), (field_.size() - 1) / ell_);
  zeta_pows_.resize(ell_);
  zeta_pows_[0] = 1;
  for (unsigned k = 1; k < ell_; ++k) zeta_pows_[k] = field_.mul(zeta_pows_[k - 1], z);

  grouped_.assign(ell_ - 1, Poly::constant(field_, 1));
  unsigned weighted = 0;
  for (const auto& f : factors_) {
    grouped_[f.exponent - 1] = grouped_[f.exponent - 1] * f.prime;
    weighted += f.exponent * static_cast<unsigned>(f.prime.degree());
  }
  even_ = weighted % ell_ == 0;
}

Poly DirichletChar::conductor() const {
  Poly out = Poly::constant(field_, 1);
  for (const auto& g : grouped_) out = out * g;
  return out;
}

unsigned DirichletChar::conductor_degree() const {
  unsigned d = 0;
  for (const auto& f : factors_) d += static_cast<unsigned>(f.prime.degree());
  return d;
}

unsigned DirichletChar::omega(Elem a) const {
  if (a == 0) throw PreconditionError("omega of zero");
  if (field_.has_tables()) return static_cast<unsigned>(field_.log(a) % ell_);
  const Elem s = field_.pow(a, (field_.size() - 1) / ell_);
  for (unsigned k = 0; k < ell_; ++k) {
    if (zeta_pows_[k] == s) return k;
  }
  throw InvariantViolation("ell-th power residue", "a^((q-1)/ell) is not an ell-th root of unity");
}

MuValue DirichletChar::eval(const Poly& g) const {
  if (g.field() != field_) throw PreconditionError("character evaluated on a polynomial over another field");
  if (g.is_zero()) return MuValue::zero(ell_);
  std::uint64_t k = static_cast<std::uint64_t>(infinity_exponent_) * static_cast<unsigned>(g.degree());
  for (unsigned e = 1; e < ell_; ++e) {
    const Poly& E = grouped_[e - 1];
    if (E.degree() < 1) continue;
    const Elem r = resultant(E, g);
    if (r == 0) return MuValue::zero(ell_);
    k += static_cast<std::uint64_t>(e) * omega(r);
  }
  return MuValue::root(ell_, static_cast<std::int64_t>(k % ell_));
}

DirichletChar DirichletChar::power(unsigned j) const {
  if (j % ell_ == 0) throw PreconditionError("chi^j with ell | j is trivial");
  std::vector<CharFactor> out;
  out.reserve(factors_.size());
  for (const auto& f : factors_) out.push_back({f.prime, static_cast<unsigned>((static_cast<std::uint64_t>(f.exponent) * j) % ell_)});
  return DirichletChar(ell_, field_, std::move(out), static_cast<unsigned>((static_cast<std::uint64_t>(infinity_exponent_) * j) % ell_));
}

SuperellipticModel DirichletChar::model() const {
  const Elem c = field_.pow(field_.primitive_root(), static_cast<std::uint64_t>(infinity_exponent_));
  return SuperellipticModel(ell_, field_, c, grouped_);
}

nlohmann::json DirichletChar::to_json() const {
  nlohmann::json fs = nlohmann::json::array();
  for (const auto& f : factors_) fs.push_back({superell::to_json(f.prime), f.exponent});
  return {{"ell", ell_}, {"field", field_.descriptor()}, {"factors", fs}, {"infinity_exponent", infinity_exponent_}};
}

DirichletChar DirichletChar::from_json(const nlohmann::json& j) {
  const Field f = Field::from_descriptor(j.at("field"));
  std::vector<CharFactor> fs;
  for (const auto& e : j.at("factors")) fs.push_back({poly_from_json(f, e.at(0)), e.at(1).get<unsigned>()});
  return DirichletChar(j.at("ell").get<unsigned>(), f, std::move(fs), j.value("infinity_exponent", 0u));
}

bool DirichletChar::operator==(const DirichletChar& o) const {
  if (ell_ != o.ell_ || field_ != o.field_ || infinity_exponent_ != o.infinity_exponent_) return false;
  if (factors_.size() != o.factors_.size()) return false;
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    if (factors_[i].prime != o.factors_[i].prime || factors_[i].exponent != o.factors_[i].exponent) return false;
  }
  return true;
}

bool DirichletChar::operator<(const DirichletChar& o) const {
  const unsigned d1 = conductor_degree(), d2 = o.conductor_degree();
  if (d1 != d2) return d1 < d2;
  const Poly c1 = conductor(), c2 = o.conductor();
  if (c1 != c2) return c1 < c2;
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    if (factors_[i].exponent != o.factors_[i].exponent) return factors_[i].exponent < o.factors_[i].exponent;
  }
  return infinity_exponent_ < o.infinity_exponent_;
}

MuValue residue_symbol(const Poly& g, const Poly& P, unsigned ell) {
  const Field& f = P.field();
  require_split(f, ell);
  if (!P.is_monic() || P.degree() < 1 || !is_irreducible(P)) {
    throw PreconditionError("residue_symbol: modulus must be monic irreducible");
  }
  const Poly r = g % P;
  if (r.is_zero()) return MuValue::zero(ell);
  const mpz_class e = (P.norm() - 1) / ell;
  const Poly s = powmod(r, e, P);
  if (s.degree() != 0) throw InvariantViolation("Euler criterion", "g^((|P|-1)/ell) mod P is not constant");
  const Elem z = f.pow(f.primitive_root(), (f.size() - 1) / ell);
  Elem acc = 1;
  for (unsigned k = 0; k < ell; ++k) {
    if (acc == s[0]) return MuValue::root(ell, k);
    acc = f.mul(acc, z);
  }
  throw InvariantViolation("Euler criterion", "g^((|P|-1)/ell) mod P is not an ell-th root of unity");
}

DirichletChar char_from_model(const SuperellipticModel& m) {
  const Field& f = m.field();
  require_split(f, m.ell());
  std::vector<CharFactor> fs;
  for (std::size_t i = 0; i < m.components().size(); ++i) {
    const Poly& D = m.components()[i];
    if (D.degree() < 1) continue;
    for (const auto& [P, mult] : factor(D).factors) {
      if (mult != 1) throw InvariantViolation("squarefree components", "repeated factor in D_" + std::to_string(i + 1));
      fs.push_back({P, static_cast<unsigned>(i + 1)});
    }
  }
  const unsigned a = f.has_tables() ? static_cast<unsigned>(f.log(m.twist()) % m.ell()) : 0;
  if (f.has_tables()) return DirichletChar(m.ell(), f, std::move(fs), a);
  // No tables: build once to obtain omega, then attach the twist exponent.
  DirichletChar base(m.ell(), f, fs, 0);
  return DirichletChar(m.ell(), f, std::move(fs), base.omega(m.twist()));
}

mpz_class count_all_primitive(std::uint64_t q, unsigned d) {
  const mpz_class Q = static_cast<unsigned long>(q);
  if (d == 0) return 1;
  if (d == 1) return Q * Q - 2 * Q;
  mpz_class pw;
  mpz_pow_ui(pw.get_mpz_t(), Q.get_mpz_t(), 2 * d - 2);
  return pw * (Q - 1) * (Q - 1);
}

mpz_class count_order_ell_exact(std::uint64_t q, unsigned ell, unsigned d) {
  if (ell < 3 || !is_prime(ell)) throw PreconditionError("ell must be an odd prime");
  if ((q - 1) % ell != 0) throw PreconditionError("q is not 1 mod ell");
  // Truncated product of (1 + (ell-1) u^k)^{N_k}.
  std::vector<mpz_class> poly(d + 1);
  poly[0] = 1;
  for (unsigned k = 1; k <= d; ++k) {
    const mpz_class nk = count_irreducibles(q, k);
    std::vector<mpz_class> next(d + 1);
    mpz_class binom = 1, w = 1;
    for (unsigned j = 0; j * k <= d; ++j) {
      if (j > 0) {
        binom = binom * (nk - (j - 1)) / j;
        w *= ell - 1;
      }
      if (binom == 0) break;
      const mpz_class term = binom * w;
      for (unsigned i = 0; i + j * k <= d; ++i) next[i + j * k] += poly[i] * term;
    }
    poly = std::move(next);
  }
  return poly[d];
}

std::vector<DirichletChar> enumerate_order_ell(const Field& f, unsigned ell, unsigned n) {
  require_split(f, ell);
  mpz_class total = 0;
  for (unsigned d = 1; d <= n; ++d) total += count_order_ell_exact(f.size(), ell, d);
  if (total > mpz_class(static_cast<unsigned long>(limits().census))) {
    throw LimitError("enumerate_order_ell: " + total.get_str() + " characters exceed the census limit");
  }

  std::vector<Poly> primes;
  for (unsigned d = 1; d <= n; ++d) {
    auto irr = irreducibles(f, d);
    primes.insert(primes.end(), irr.begin(), irr.end());
  }

  struct Entry {
    Poly conductor;
    std::vector<CharFactor> factors;
  };
  std::vector<Entry> entries;
  entries.reserve(total.get_ui());
  std::vector<CharFactor> chosen;
  std::function<void(std::size_t, unsigned, const Poly&)> rec = [&](std::size_t start, unsigned deg, const Poly& cond) {
    if (!chosen.empty()) entries.push_back({cond, chosen});
    for (std::size_t i = start; i < primes.size(); ++i) {
      const auto pd = static_cast<unsigned>(primes[i].degree());
      if (deg + pd > n) break;
      const Poly next = cond * primes[i];
      for (unsigned e = 1; e < ell; ++e) {
        chosen.push_back({primes[i], e});
        rec(i + 1, deg + pd, next);
        chosen.pop_back();
      }
    }
  };
  rec(0, 0, Poly::constant(f, 1));
  // Factors are already in canonical prime order, so the exponent map
  // compares lexicographically.
  std::sort(entries.begin(), entries.end(), [](const Entry& a, const Entry& b) {
    if (a.conductor != b.conductor) return a.conductor < b.conductor;
    for (std::size_t i = 0; i < a.factors.size(); ++i) {
      if (a.factors[i].exponent != b.factors[i].exponent) return a.factors[i].exponent < b.factors[i].exponent;
    }
    return false;
  });
  std::vector<DirichletChar> out;
  out.reserve(entries.size());
  for (auto& e : entries) out.emplace_back(ell, f, std::move(e.factors), 0);
  return out;
}

}  // namespace superell
