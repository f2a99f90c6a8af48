#include "superell/model.hpp"

#include "superell/errors.hpp"

namespace superell {

SuperellipticModel::SuperellipticModel(unsigned ell, Field field, Elem twist, std::vector<Poly> components)
    : ell_(ell), field_(std::move(field)), twist_(twist), components_(std::move(components)) {
  if (ell < 2 || !is_prime(ell)) throw PreconditionError("model: ell must be prime");
  if (field_.characteristic() == ell) throw PreconditionError("model: ell must be coprime to q");
  if (twist_ == 0 || twist_ >= field_.size()) throw PreconditionError("model: twist must be a nonzero field element");
  if (components_.size() != ell - 1) {
    throw PreconditionError("model: expected " + std::to_string(ell - 1) + " components");
  }
  bool all_constant = true;
  for (const auto& c : components_) {
    if (c.field() != field_) throw PreconditionError("model: component over a different field");
    if (!c.is_monic()) throw PreconditionError("model: components must be monic");
    if (c.degree() > 0) all_constant = false;
  }
  if (all_constant) throw PreconditionError("model: all components are constant");
  if (!is_squarefree(radical())) {
    throw PreconditionError("model: components must be squarefree and pairwise coprime");
  }
}

unsigned SuperellipticModel::branch_degree() const {
  unsigned d = 0;
  for (const auto& c : components_) d += static_cast<unsigned>(c.degree());
  return d;
}

unsigned SuperellipticModel::weighted_degree() const {
  unsigned d = 0;
  for (std::size_t i = 0; i < components_.size(); ++i) d += static_cast<unsigned>(i + 1) * static_cast<unsigned>(components_[i].degree());
  return d;
}

Poly SuperellipticModel::radical() const {
  Poly out = Poly::constant(field_, 1);
  for (const auto& c : components_) out = out * c;
  return out;
}

Poly SuperellipticModel::defining_polynomial() const {
  Poly out = Poly::constant(field_, twist_);
  for (std::size_t i = 0; i < components_.size(); ++i) out = out * components_[i].pow(static_cast<unsigned>(i + 1));
  return out;
}

bool SuperellipticModel::is_prime_power() const {
  const Poly rad = radical();
  return rad.degree() >= 1 && is_irreducible(rad);
}

nlohmann::json SuperellipticModel::to_json() const {
  nlohmann::json comps = nlohmann::json::array();
  for (const auto& c : components_) comps.push_back(superell::to_json(c));
  nlohmann::json twist = field_.is_prime_field() ? nlohmann::json(twist_) : nlohmann::json(field_.digits(twist_));
  return {{"ell", ell_}, {"field", field_.descriptor()}, {"twist", twist}, {"components", comps}};
}

SuperellipticModel SuperellipticModel::from_json(const nlohmann::json& j) {
  const auto ell = j.at("ell").get<unsigned>();
  const Field f = Field::from_descriptor(j.at("field"));
  Elem twist = 1;
  if (j.contains("twist")) {
    const auto& t = j["twist"];
    twist = t.is_array() ? f.from_digits(t.get<std::vector<std::int64_t>>()) : f.from_int(t.get<std::int64_t>());
  }
  std::vector<Poly> comps;
  for (const auto& c : j.at("components")) comps.push_back(poly_from_json(f, c));
  return SuperellipticModel(ell, f, twist, std::move(comps));
}

bool SuperellipticModel::operator==(const SuperellipticModel& o) const {
  return ell_ == o.ell_ && field_ == o.field_ && twist_ == o.twist_ && components_ == o.components_;
}

bool SuperellipticModel::operator<(const SuperellipticModel& o) const {
  if (ell_ != o.ell_) return ell_ < o.ell_;
  const unsigned d1 = branch_degree(), d2 = o.branch_degree();
  if (d1 != d2) return d1 < d2;
  for (std::size_t i = 0; i < components_.size(); ++i) {
    if (components_[i] != o.components_[i]) return components_[i] < o.components_[i];
  }
  return twist_ < o.twist_;
}

}  // namespace superell
