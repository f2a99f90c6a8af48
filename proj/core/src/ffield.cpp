#include "superell/ffield.hpp"

#include <map>
#include <mutex>

#include "superell/errors.hpp"
#include "superell/limits.hpp"
#include "superell/polyring.hpp"

namespace superell {
namespace {

// Fields up to this size get log/exp tables.
constexpr std::uint64_t kTableLimit = std::uint64_t{1} << 22;

std::mutex& registry_mutex() {
  static std::mutex m;
  return m;
}

std::map<std::string, std::shared_ptr<const detail::FieldData>>& registry() {
  static std::map<std::string, std::shared_ptr<const detail::FieldData>> r;
  return r;
}

std::uint64_t checked_power(std::uint64_t base, unsigned e) {
  mpz_class v;
  mpz_ui_pow_ui(v.get_mpz_t(), base, e);
  if (v > mpz_class(std::to_string(limits().max_field_size))) {
    throw LimitError("field of size " + v.get_str() + " exceeds the size guard");
  }
  return std::stoull(v.get_str());
}

Elem find_primitive_root(const detail::FieldData& d) {
  if (d.q == 2) return 1;
  const auto primes = prime_divisors(d.q - 1);
  for (Elem g = 2; g < d.q; ++g) {
    bool ok = true;
    for (auto r : primes) {
      if (detail::generic_pow(d, g, (d.q - 1) / r) == 1) {
        ok = false;
        break;
      }
    }
    if (ok) return g;
  }
  throw InvariantViolation("primitive_root", "no generator found in field " + d.key);
}

void build_tables(detail::FieldData& d) {
  d.primitive_root = find_primitive_root(d);
  if (d.q > kTableLimit) return;
  const std::uint64_t order = d.q - 1;
  d.log_table.assign(d.q, 0);
  d.exp_table.assign(2 * order, 0);
  Elem x = 1;
  for (std::uint64_t i = 0; i < order; ++i) {
    d.exp_table[i] = static_cast<std::uint32_t>(x);
    d.exp_table[i + order] = static_cast<std::uint32_t>(x);
    d.log_table[x] = static_cast<std::uint32_t>(i);
    x = detail::generic_mul(d, x, d.primitive_root);
  }
  if (x != 1) throw InvariantViolation("primitive_root", "generator order mismatch in " + d.key);
  d.tables = true;
}

std::shared_ptr<const detail::FieldData> lookup(const std::string& key) {
  std::lock_guard lock(registry_mutex());
  auto it = registry().find(key);
  return it == registry().end() ? nullptr : it->second;
}

std::shared_ptr<const detail::FieldData> publish(std::shared_ptr<const detail::FieldData> d) {
  std::lock_guard lock(registry_mutex());
  auto [it, inserted] = registry().emplace(d->key, d);
  return it->second;
}

}  // namespace

namespace detail {

Elem generic_mul(const FieldData& d, Elem a, Elem b) {
  if (a == 0 || b == 0) return 0;
  if (d.parent == nullptr) {
    return static_cast<Elem>((static_cast<unsigned __int128>(a) * b) % d.p);
  }
  // Elements fit in 64 bits, so no level has degree 64 or more.
  constexpr unsigned kMax = 64;
  const FieldData& base = *d.parent;
  const unsigned n = d.level_degree;
  const std::uint64_t bq = base.q;
  Elem ca[kMax], cb[kMax];
  if (base.parent == nullptr) {
    for (unsigned i = 0; i < n; ++i) {
      const std::uint64_t qa = d.pdiv.div(a), qb = d.pdiv.div(b);
      ca[i] = a - qa * bq;
      cb[i] = b - qb * bq;
      a = qa;
      b = qb;
    }
  } else {
    for (unsigned i = 0; i < n; ++i) {
      ca[i] = a % bq;
      a /= bq;
      cb[i] = b % bq;
      b /= bq;
    }
  }
  if (base.parent == nullptr && d.p < (std::uint64_t{1} << 19)) {
    // Over a small prime field every slot stays below 2n p^2 <= 2^7 p^2, so
    // sums need one reduction each and that reduction can use the reciprocal.
    const std::uint64_t p = d.p;
    auto mod = [&](std::uint64_t x) { return x - d.pdiv.div(x) * p; };
    std::uint64_t acc[2 * kMax - 1] = {};
    for (unsigned i = 0; i < n; ++i) {
      if (ca[i] == 0) continue;
      for (unsigned j = 0; j < n; ++j) acc[i + j] += ca[i] * cb[j];
    }
    for (unsigned k = 2 * n - 2; k >= n; --k) {
      const std::uint64_t c = mod(acc[k]);
      if (c == 0) continue;
      const std::uint64_t nc = p - c;
      for (unsigned j = 0; j < n; ++j) {
        if (d.modulus[j] != 0) acc[k - n + j] += nc * d.modulus[j];
      }
    }
    Elem out = 0;
    for (unsigned i = n; i-- > 0;) out = out * p + mod(acc[i]);
    return out;
  }
  Elem prod[2 * kMax - 1] = {};
  for (unsigned i = 0; i < n; ++i) {
    if (ca[i] == 0) continue;
    for (unsigned j = 0; j < n; ++j) {
      prod[i + j] = add(base, prod[i + j], mul(base, ca[i], cb[j]));
    }
  }
  for (unsigned k = 2 * n - 2; k >= n; --k) {
    const Elem c = prod[k];
    if (c == 0) continue;
    for (unsigned j = 0; j < n; ++j) {
      prod[k - n + j] = add(base, prod[k - n + j], neg(base, mul(base, c, d.modulus[j])));
    }
    prod[k] = 0;
  }
  Elem out = 0;
  for (unsigned i = n; i-- > 0;) out = out * bq + prod[i];
  return out;
}

Elem generic_pow(const FieldData& d, Elem a, std::uint64_t k) {
  Elem result = 1;
  while (k > 0) {
    if (k & 1) result = generic_mul(d, result, a);
    a = generic_mul(d, a, a);
    k >>= 1;
  }
  return result;
}

}  // namespace detail

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

std::vector<std::uint64_t> prime_divisors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

Field Field::make(std::uint64_t p, unsigned e) {
  if (!is_prime(p)) throw PreconditionError("make_field: " + std::to_string(p) + " is not prime");
  if (e == 0) throw PreconditionError("make_field: extension degree must be positive");
  checked_power(p, e);
  const std::string key = "p=" + std::to_string(p) + ";t=";
  auto prime = lookup(key);
  if (!prime) {
    auto d = std::make_shared<detail::FieldData>();
    d->p = p;
    d->q = p;
    d->abs_degree = 1;
    d->level_degree = 1;
    d->modulus = {0, 1};
    d->key = key;
    d->pdiv = detail::FastDiv(p);
    build_tables(*d);
    prime = publish(std::move(d));
  }
  Field f(prime);
  return e == 1 ? f : f.extend(e);
}

Field Field::extend(unsigned n) const {
  if (n == 0) throw PreconditionError("extend_field: degree must be positive");
  if (n == 1) return *this;
  const std::uint64_t q = checked_power(size(), n);
  std::string key = d_->key;
  if (key.back() != '=') key += ",";
  key += std::to_string(n);
  if (auto existing = lookup(key)) return Field(existing);

  std::uint64_t candidates = 1;
  for (unsigned i = 0; i < n; ++i) candidates *= size();
  std::vector<Elem> modulus;
  for (std::uint64_t idx = 0; idx < candidates; ++idx) {
    Poly cand = Poly::monic_from_index(*this, n, idx);
    if (is_irreducible(cand)) {
      modulus = cand.coeffs();
      break;
    }
  }
  if (modulus.empty()) throw InvariantViolation("extend_field", "no irreducible of degree " + std::to_string(n));

  auto d = std::make_shared<detail::FieldData>();
  d->p = d_->p;
  d->q = q;
  d->abs_degree = d_->abs_degree * n;
  d->level_degree = n;
  d->parent = d_;
  d->modulus = std::move(modulus);
  d->tower = d_->tower;
  d->tower.push_back(n);
  d->key = key;
  d->pdiv = detail::FastDiv(d_->p);
  build_tables(*d);
  return Field(publish(std::move(d)));
}

Field Field::base() const { return d_->parent ? Field(d_->parent) : *this; }

bool Field::contains(const Field& sub) const {
  for (auto cur = d_; cur; cur = cur->parent) {
    if (cur == sub.d_ || cur->key == sub.d_->key) return true;
  }
  return false;
}

Elem Field::from_int(std::int64_t v) const {
  const auto p = static_cast<std::int64_t>(d_->p);
  std::int64_t r = v % p;
  if (r < 0) r += p;
  return static_cast<Elem>(r);
}

Elem Field::inv(Elem a) const {
  if (a == 0) throw PreconditionError("inverse of zero");
  if (d_->tables) {
    const std::uint64_t order = d_->q - 1;
    return d_->exp_table[(order - d_->log_table[a]) % order];
  }
  return detail::generic_pow(*d_, a, d_->q - 2);
}

Elem Field::pow(Elem a, std::uint64_t k) const {
  if (k == 0) return 1;
  if (a == 0) return 0;
  if (d_->tables) {
    const std::uint64_t order = d_->q - 1;
    const auto e = static_cast<std::uint64_t>((static_cast<unsigned __int128>(d_->log_table[a]) * (k % order)) % order);
    return d_->exp_table[e];
  }
  return detail::generic_pow(*d_, a, k);
}

Elem Field::pow(Elem a, const mpz_class& k) const {
  if (k < 0) return pow(inv(a), mpz_class(-k));
  if (k == 0) return 1;
  if (a == 0) return 0;
  mpz_class r = k % mpz_class(std::to_string(d_->q - 1));
  if (r == 0) return 1;
  return pow(a, std::stoull(r.get_str()));
}

Elem Field::pth_root(Elem a) const { return pow(a, d_->q / d_->p); }

std::vector<Elem> Field::coeffs(Elem a) const {
  const unsigned n = d_->level_degree;
  if (!d_->parent) return {a};
  const std::uint64_t bq = d_->parent->q;
  std::vector<Elem> out(n);
  for (unsigned i = 0; i < n; ++i) {
    out[i] = a % bq;
    a /= bq;
  }
  return out;
}

Elem Field::from_coeffs(std::span<const Elem> c) const {
  if (!d_->parent) return c.empty() ? 0 : c[0] % d_->p;
  const std::uint64_t bq = d_->parent->q;
  Elem out = 0;
  for (std::size_t i = std::min<std::size_t>(c.size(), d_->level_degree); i-- > 0;) out = out * bq + c[i];
  return out;
}

std::vector<std::uint64_t> Field::digits(Elem a) const {
  std::vector<std::uint64_t> out(d_->abs_degree);
  for (auto& x : out) {
    x = a % d_->p;
    a /= d_->p;
  }
  return out;
}

Elem Field::from_digits(std::span<const std::int64_t> digits) const {
  if (digits.size() > d_->abs_degree) throw PreconditionError("too many base-p digits for field");
  Elem out = 0;
  for (std::size_t i = digits.size(); i-- > 0;) out = out * d_->p + from_int(digits[i]);
  return out;
}

std::uint64_t Field::log(Elem a) const {
  if (a == 0) throw PreconditionError("log of zero");
  if (d_->tables) return d_->log_table[a];
  // Pohlig-Hellman is not needed at desk scale: walk the group.
  Elem x = 1;
  for (std::uint64_t i = 0; i + 1 < d_->q; ++i) {
    if (x == a) return i;
    x = mul(x, d_->primitive_root);
  }
  throw InvariantViolation("log", "element outside multiplicative group");
}

bool Field::is_power(Elem a, std::uint64_t ell) const {
  if (a == 0) return true;
  const std::uint64_t order = d_->q - 1;
  if (order % ell != 0) return true;
  if (d_->tables) return d_->log_table[a] % ell == 0;
  return pow(a, order / ell) == 1;
}

FieldElem Field::elem(Elem v) const { return FieldElem(*this, v); }

nlohmann::json Field::descriptor() const {
  nlohmann::json moduli = nlohmann::json::array();
  std::vector<const detail::FieldData*> chain;
  for (auto cur = d_.get(); cur->parent; cur = cur->parent.get()) chain.push_back(cur);
  for (auto it = chain.rbegin(); it != chain.rend(); ++it) moduli.push_back((*it)->modulus);
  return {{"p", d_->p}, {"tower", d_->tower}, {"moduli", moduli}};
}

Field Field::from_descriptor(const nlohmann::json& j) {
  Field f = Field::make(j.at("p").get<std::uint64_t>(), 1);
  for (auto n : j.at("tower")) f = f.extend(n.get<unsigned>());
  if (j.contains("moduli") && f.descriptor()["moduli"] != j["moduli"]) {
    throw PreconditionError("field descriptor moduli do not match the canonical tower");
  }
  return f;
}

}  // namespace superell
