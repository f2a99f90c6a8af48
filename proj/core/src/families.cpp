#include "superell/families.hpp"

#include <random>

#include "superell/errors.hpp"
#include "superell/limits.hpp"

namespace superell {

BinaryForm::BinaryForm(Field field, std::vector<Elem> coeffs, unsigned degree)
    : field_(std::move(field)), coeffs_(std::move(coeffs)), degree_(degree) {
  if (coeffs_.size() > degree_ + 1) throw PreconditionError("BinaryForm: too many coefficients for the degree");
  coeffs_.resize(degree_ + 1, 0);
}

Elem BinaryForm::eval(Elem u, Elem v) const {
  Elem acc = 0, vpow = 1;
  // Horner in u with v powers folded in from the top coefficient down.
  std::vector<Elem> vp(degree_ + 1);
  for (unsigned i = 0; i <= degree_; ++i) {
    vp[i] = vpow;
    vpow = field_.mul(vpow, v);
  }
  for (unsigned i = degree_ + 1; i-- > 0;) acc = field_.add(field_.mul(acc, u), field_.mul(coeffs_[i], vp[degree_ - i]));
  return acc;
}

Poly BinaryForm::eval(const Poly& a, const Poly& b) const {
  std::vector<Poly> apow{Poly::constant(field_, 1)}, bpow{Poly::constant(field_, 1)};
  for (unsigned i = 0; i < degree_; ++i) {
    apow.push_back(apow.back() * a);
    bpow.push_back(bpow.back() * b);
  }
  Poly acc(field_);
  for (unsigned i = 0; i <= degree_; ++i) {
    if (coeffs_[i] == 0) continue;
    acc = acc + (apow[i] * bpow[degree_ - i]).scaled(coeffs_[i]);
  }
  return acc;
}

BinaryForm BinaryForm::operator*(const BinaryForm& o) const {
  std::vector<Elem> out(degree_ + o.degree_ + 1, 0);
  for (unsigned i = 0; i <= degree_; ++i) {
    if (coeffs_[i] == 0) continue;
    for (unsigned j = 0; j <= o.degree_; ++j) out[i + j] = field_.add(out[i + j], field_.mul(coeffs_[i], o.coeffs_[j]));
  }
  return BinaryForm(field_, std::move(out), degree_ + o.degree_);
}

BinaryForm BinaryForm::du() const {
  if (degree_ == 0) return BinaryForm(field_, {0}, 0);
  std::vector<Elem> out(degree_);
  for (unsigned i = 1; i <= degree_; ++i) out[i - 1] = field_.mul(field_.from_int(i), coeffs_[i]);
  return BinaryForm(field_, std::move(out), degree_ - 1);
}

BinaryForm BinaryForm::dv() const {
  if (degree_ == 0) return BinaryForm(field_, {0}, 0);
  std::vector<Elem> out(degree_);
  for (unsigned i = 0; i < degree_; ++i) out[i] = field_.mul(field_.from_int(degree_ - i), coeffs_[i]);
  return BinaryForm(field_, std::move(out), degree_ - 1);
}

BinaryForm homogenize(const Poly& f) {
  if (f.is_zero()) throw PreconditionError("homogenize: zero polynomial");
  return BinaryForm(f.field(), f.coeffs(), static_cast<unsigned>(f.degree()));
}

RationalMap::RationalMap(Poly n, Poly d) : numer(std::move(n)), denom(std::move(d)) {
  if (denom.is_zero()) throw PreconditionError("RationalMap: zero denominator");
  if (numer.is_constant() && denom.is_constant()) throw PreconditionError("RationalMap: constant map");
  if (gcd(numer, denom).degree() > 0) throw PreconditionError("RationalMap: numer and denom share a factor");
}

unsigned RationalMap::degree() const { return static_cast<unsigned>(std::max(numer.degree(), denom.degree())); }

unsigned genus_bound_degree(unsigned g_target, unsigned g0, unsigned ell) {
  return (g_target + ell - 1) / (g0 + ell - 1);
}

Elem canonical_twist(const Field& f, Elem c, unsigned ell) {
  if (c == 0) throw PreconditionError("canonical_twist: zero");
  if ((f.size() - 1) % ell != 0) return 1;
  return f.pow(f.primitive_root(), f.log(c) % ell);
}

namespace {

void require_family_base(const SuperellipticModel& base) {
  if (!base.normalized()) throw PreconditionError("family base must be normalized");
  if (base.is_prime_power()) throw PreconditionError("family base must not be a power of one irreducible");
}

// Without the precondition checks; used in the pair loops.
std::optional<SuperellipticModel> specialize_unchecked(const SuperellipticModel& base, const std::vector<std::optional<BinaryForm>>& forms,
                                                       const Poly& numer, const Poly& denom, unsigned degh) {
  const Field& f = base.field();
  Elem twist = base.twist();
  std::vector<Poly> comps;
  comps.reserve(forms.size());
  Poly radical = Poly::constant(f, 1);
  for (std::size_t i = 0; i < forms.size(); ++i) {
    if (!forms[i]) {
      comps.push_back(Poly::constant(f, 1));
      continue;
    }
    Poly v = forms[i]->eval(numer, denom);
    if (v.degree() != static_cast<int>(forms[i]->degree() * degh)) return std::nullopt;
    const Elem lead = v.lead();
    twist = f.mul(twist, f.pow(lead, static_cast<std::uint64_t>(i + 1)));
    v = v.monic();
    radical = radical * v;
    comps.push_back(std::move(v));
  }
  if (!is_squarefree(radical)) return std::nullopt;
  SuperellipticModel out(base.ell(), f, canonical_twist(f, twist, base.ell()), std::move(comps));
  if (!out.normalized()) return std::nullopt;
  return out;
}

std::vector<std::optional<BinaryForm>> component_forms(const SuperellipticModel& base) {
  std::vector<std::optional<BinaryForm>> forms;
  for (const auto& c : base.components()) {
    if (c.degree() >= 1) {
      forms.emplace_back(homogenize(c));
    } else {
      forms.emplace_back(std::nullopt);
    }
  }
  return forms;
}

}  // namespace

std::optional<SuperellipticModel> specialize(const SuperellipticModel& base, const RationalMap& h) {
  require_family_base(base);
  return specialize_unchecked(base, component_forms(base), h.numer, h.denom, h.degree());
}

BinaryForm radical_form(const SuperellipticModel& base) {
  BinaryForm acc(base.field(), {1}, 0);
  for (const auto& c : base.components()) {
    if (c.degree() >= 1) acc = acc * homogenize(c);
  }
  return acc;
}

FamilyReport generate_family(const SuperellipticModel& base, unsigned n, const FamilyOptions& opts) {
  require_family_base(base);
  FamilyReport rep{base, n, 0, 0, {}, opts.sample_pairs.has_value()};
  const unsigned d = base.branch_degree();
  const unsigned K = n / d;
  if (K == 0) return rep;

  const Field& f = base.field();
  const std::uint64_t q = f.size();
  const auto forms = component_forms(base);
  auto full = [&]() { return opts.max_members && rep.members.size() >= *opts.max_members; };
  auto consider = [&](const Poly& numer, const Poly& denom) {
    if (gcd(numer, denom).degree() > 0) return;
    ++rep.raw_pairs;
    const unsigned degh = static_cast<unsigned>(std::max(numer.degree(), denom.degree()));
    auto m = specialize_unchecked(base, forms, numer, denom, degh);
    if (!m) return;
    ++rep.squarefree_pairs;
    rep.members.insert(std::move(*m));
  };

  if (opts.sample_pairs) {
    std::mt19937_64 rng(opts.seed);
    std::uniform_int_distribution<std::uint64_t> coef(0, q - 1);
    for (std::uint64_t s = 0; s < *opts.sample_pairs && !full(); ++s) {
      std::vector<Elem> a(K + 1), b(K + 1);
      for (auto& x : a) x = coef(rng);
      for (auto& x : b) x = coef(rng);
      Poly numer(f, a), denom(f, b);
      if (numer.is_zero() || denom.is_zero() || (numer.is_constant() && denom.is_constant())) continue;
      // scale so that the higher-degree entry (numer on ties) is monic
      const Elem lead = numer.degree() >= denom.degree() ? numer.lead() : denom.lead();
      const Elem li = f.inv(lead);
      consider(numer.scaled(li), denom.scaled(li));
    }
    return rep;
  }

  std::uint64_t budget = 0, qD = 1;
  for (unsigned D = 1; D <= K; ++D) {
    qD *= q;
    budget += qD * (qD * q) + qD * qD;
  }
  if (budget > limits().enumeration) {
    throw LimitError("generate_family: " + std::to_string(budget) + " pairs exceed the enumeration limit");
  }
  qD = 1;
  for (unsigned D = 1; D <= K && !full(); ++D) {
    qD *= q;
    for (std::uint64_t i = 0; i < qD && !full(); ++i) {
      const Poly monic = Poly::monic_from_index(f, D, i);
      // numer monic of degree D, denom nonzero of degree <= D
      for (std::uint64_t j = 1; j < qD * q && !full(); ++j) consider(monic, Poly::from_index(f, D + 1, j));
      // denom monic of degree D, numer nonzero of degree < D
      for (std::uint64_t j = 1; j < qD && !full(); ++j) consider(Poly::from_index(f, D, j), monic);
    }
  }
  return rep;
}

nlohmann::json FamilyReport::to_json(std::size_t member_limit) const {
  nlohmann::json j{{"base", base.to_json()},
                   {"n", n},
                   {"raw_pairs", raw_pairs},
                   {"squarefree_pairs", squarefree_pairs},
                   {"distinct_models", members.size()},
                   {"sampled", sampled}};
  if (members.size() <= member_limit) {
    nlohmann::json ms = nlohmann::json::array();
    for (const auto& m : members) ms.push_back(m.to_json());
    j["members"] = ms;
  } else {
    j["members_elided"] = true;
  }
  return j;
}

}  // namespace superell
