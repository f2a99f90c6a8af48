#include "superell/polyring.hpp"

#include <algorithm>
#include <random>

#include "superell/errors.hpp"
#include "superell/limits.hpp"

namespace superell {

Poly::Poly(Field f, std::vector<Elem> coeffs) : field_(std::move(f)), c_(std::move(coeffs)) { trim(); }

void Poly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Poly Poly::constant(const Field& f, Elem c) { return Poly(f, {c}); }

Poly Poly::monomial(const Field& f, Elem c, std::size_t degree) {
  std::vector<Elem> v(degree + 1, 0);
  v[degree] = c;
  return Poly(f, std::move(v));
}

Poly Poly::variable(const Field& f) { return Poly(f, {0, 1}); }

Poly Poly::monic_from_index(const Field& f, unsigned degree, std::uint64_t index) {
  std::vector<Elem> v(degree + 1);
  const std::uint64_t q = f.size();
  for (unsigned i = 0; i < degree; ++i) {
    v[i] = index % q;
    index /= q;
  }
  v[degree] = 1;
  return Poly(f, std::move(v));
}

Poly Poly::from_index(const Field& f, unsigned length, std::uint64_t index) {
  std::vector<Elem> v(length);
  const std::uint64_t q = f.size();
  for (unsigned i = 0; i < length; ++i) {
    v[i] = index % q;
    index /= q;
  }
  return Poly(f, std::move(v));
}

std::uint64_t Poly::index() const {
  std::uint64_t out = 0;
  for (std::size_t i = c_.empty() ? 0 : c_.size() - 1; i-- > 0;) out = out * field_.size() + c_[i];
  return out;
}

mpz_class Poly::norm() const {
  mpz_class out;
  mpz_ui_pow_ui(out.get_mpz_t(), field_.size(), static_cast<unsigned long>(std::max(degree(), 0)));
  return out;
}

Poly Poly::operator+(const Poly& o) const {
  std::vector<Elem> v(std::max(c_.size(), o.c_.size()), 0);
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = field_.add((*this)[i], o[i]);
  return Poly(field_, std::move(v));
}

Poly Poly::operator-(const Poly& o) const {
  std::vector<Elem> v(std::max(c_.size(), o.c_.size()), 0);
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = field_.sub((*this)[i], o[i]);
  return Poly(field_, std::move(v));
}

Poly Poly::operator-() const {
  std::vector<Elem> v(c_.size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = field_.neg(c_[i]);
  return Poly(field_, std::move(v));
}

Poly Poly::operator*(const Poly& o) const {
  if (is_zero() || o.is_zero()) return Poly(field_);
  std::vector<Elem> v(c_.size() + o.c_.size() - 1, 0);
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    for (std::size_t j = 0; j < o.c_.size(); ++j) {
      v[i + j] = field_.add(v[i + j], field_.mul(c_[i], o.c_[j]));
    }
  }
  return Poly(field_, std::move(v));
}

Poly Poly::scaled(Elem c) const {
  std::vector<Elem> v(c_.size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = field_.mul(c_[i], c);
  return Poly(field_, std::move(v));
}

std::pair<Poly, Poly> Poly::divmod(const Poly& divisor) const {
  if (divisor.is_zero()) throw PreconditionError("polynomial division by zero");
  if (degree() < divisor.degree()) return {Poly(field_), *this};
  std::vector<Elem> rem = c_;
  const std::size_t dn = divisor.c_.size() - 1;
  std::vector<Elem> quot(rem.size() - dn, 0);
  const Elem lead_inv = field_.inv(divisor.lead());
  for (std::size_t k = rem.size(); k-- > dn;) {
    const Elem coef = field_.mul(rem[k], lead_inv);
    quot[k - dn] = coef;
    if (coef == 0) continue;
    const Elem neg_coef = field_.neg(coef);
    for (std::size_t j = 0; j <= dn; ++j) {
      rem[k - dn + j] = field_.add(rem[k - dn + j], field_.mul(neg_coef, divisor.c_[j]));
    }
  }
  rem.resize(dn);
  return {Poly(field_, std::move(quot)), Poly(field_, std::move(rem))};
}

Poly Poly::monic() const {
  if (is_zero()) return *this;
  return scaled(field_.inv(lead()));
}

Poly Poly::derivative() const {
  if (c_.size() <= 1) return Poly(field_);
  std::vector<Elem> v(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) {
    v[i - 1] = field_.mul(c_[i], field_.from_int(static_cast<std::int64_t>(i % field_.characteristic())));
  }
  return Poly(field_, std::move(v));
}

Poly Poly::pow(unsigned k) const {
  Poly result = constant(field_, 1);
  Poly base = *this;
  while (k > 0) {
    if (k & 1) result = result * base;
    k >>= 1;
    if (k > 0) base = base * base;
  }
  return result;
}

Elem Poly::eval(Elem x) const {
  Elem acc = 0;
  for (std::size_t i = c_.size(); i-- > 0;) acc = field_.add(field_.mul(acc, x), c_[i]);
  return acc;
}

Elem Poly::eval_in(const Field& ext, Elem x) const {
  Elem acc = 0;
  for (std::size_t i = c_.size(); i-- > 0;) acc = ext.add(ext.mul(acc, x), c_[i]);
  return acc;
}

Poly Poly::compose(const Poly& g) const {
  Poly acc(field_);
  for (std::size_t i = c_.size(); i-- > 0;) acc = acc * g + constant(field_, c_[i]);
  return acc;
}

bool Poly::operator<(const Poly& o) const {
  if (c_.size() != o.c_.size()) return c_.size() < o.c_.size();
  for (std::size_t i = c_.size(); i-- > 0;) {
    if (c_[i] != o.c_[i]) return c_[i] < o.c_[i];
  }
  return false;
}

Poly Factorization::expand(const Field& f) const {
  Poly out = Poly::constant(f, unit);
  for (const auto& [p, e] : factors) out = out * p.pow(e);
  return out;
}

Poly gcd(const Poly& a, const Poly& b) {
  Poly x = a, y = b;
  while (!y.is_zero()) {
    Poly r = x % y;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

Poly mulmod(const Poly& a, const Poly& b, const Poly& modulus) { return (a * b) % modulus; }

Poly powmod(const Poly& base, const mpz_class& exponent, const Poly& modulus) {
  Poly result = Poly::constant(base.field(), 1) % modulus;
  Poly b = base % modulus;
  const std::size_t bits = mpz_sizeinbase(exponent.get_mpz_t(), 2);
  for (std::size_t i = bits; i-- > 0;) {
    result = mulmod(result, result, modulus);
    if (mpz_tstbit(exponent.get_mpz_t(), i)) result = mulmod(result, b, modulus);
  }
  return result;
}

Elem resultant(const Poly& a_in, const Poly& b_in) {
  const Field& f = a_in.field();
  if (a_in.is_zero() || b_in.is_zero()) return 0;
  Poly a = a_in, b = b_in;
  Elem acc = 1;
  while (b.degree() > 0) {
    if (a.degree() == 0) {
      return f.mul(acc, f.pow(a.lead(), static_cast<std::uint64_t>(b.degree())));
    }
    Poly r = a % b;
    if (r.is_zero()) return 0;
    // Res(a,b) = (-1)^{deg a deg b} lc(b)^{deg a - deg r} Res(b, r)
    const auto da = static_cast<std::uint64_t>(a.degree());
    const auto db = static_cast<std::uint64_t>(b.degree());
    const auto dr = static_cast<std::uint64_t>(r.degree());
    Elem factor = f.pow(b.lead(), da - dr);
    if ((da * db) % 2 == 1) factor = f.neg(factor);
    acc = f.mul(acc, factor);
    a = std::move(b);
    b = std::move(r);
  }
  return f.mul(acc, f.pow(b.lead(), static_cast<std::uint64_t>(std::max(a.degree(), 0))));
}

bool is_squarefree(const Poly& f) {
  if (f.is_zero()) throw PreconditionError("is_squarefree: zero polynomial");
  if (f.degree() <= 0) return true;
  const Poly d = f.derivative();
  if (d.is_zero()) return false;
  return gcd(f, d).degree() == 0;
}

bool is_irreducible(const Poly& f) {
  const int n = f.degree();
  if (n <= 0) return false;
  if (n == 1) return true;
  const Poly m = f.monic();
  const Poly t = Poly::variable(f.field());
  const mpz_class q(std::to_string(f.field().size()));
  std::vector<Poly> frob;  // frob[k] = t^{q^k} mod f
  frob.push_back(t % m);
  for (int k = 1; k <= n; ++k) frob.push_back(powmod(frob.back(), q, m));
  if (frob[static_cast<std::size_t>(n)] != frob[0]) return false;
  for (auto r : prime_divisors(static_cast<std::uint64_t>(n))) {
    const Poly g = gcd(frob[static_cast<std::size_t>(n) / r] - t, m);
    if (g.degree() != 0) return false;
  }
  return true;
}

namespace {

Poly pth_root_poly(const Poly& f) {
  const Field& F = f.field();
  const auto p = F.characteristic();
  std::vector<Elem> v(static_cast<std::size_t>(f.degree()) / p + 1, 0);
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = F.pth_root(f[i * p]);
  return Poly(F, std::move(v));
}

void sqf_rec(const Poly& f, unsigned mult, std::vector<std::pair<Poly, unsigned>>& out) {
  if (f.degree() <= 0) return;
  const auto p = static_cast<unsigned>(f.field().characteristic());
  const Poly d = f.derivative();
  if (d.is_zero()) {
    sqf_rec(pth_root_poly(f), mult * p, out);
    return;
  }
  Poly c = gcd(f, d);
  Poly w = f / c;
  unsigned i = 1;
  while (w.degree() > 0) {
    Poly y = gcd(w, c);
    Poly fac = w / y;
    if (fac.degree() > 0) out.emplace_back(fac.monic(), i * mult);
    ++i;
    w = std::move(y);
    c = c / w;
  }
  if (c.degree() > 0) sqf_rec(pth_root_poly(c), mult * p, out);
}

Poly random_poly(const Field& F, int below_degree, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::uint64_t> dist(0, F.size() - 1);
  std::vector<Elem> v(static_cast<std::size_t>(below_degree));
  for (auto& x : v) x = dist(rng);
  return Poly(F, std::move(v));
}

void equal_degree_split(const Poly& f, unsigned d, std::mt19937_64& rng, std::vector<Poly>& out) {
  if (f.degree() <= static_cast<int>(d)) {
    out.push_back(f);
    return;
  }
  const Field& F = f.field();
  const Poly one = Poly::constant(F, 1);
  mpz_class qd;
  mpz_ui_pow_ui(qd.get_mpz_t(), F.size(), d);
  while (true) {
    const Poly a = random_poly(F, f.degree(), rng);
    if (a.degree() <= 0) continue;
    Poly g = gcd(a, f);
    if (g.degree() <= 0) {
      Poly b(F);
      if (F.characteristic() == 2) {
        // Trace map a + a^2 + ... + a^{2^{k-1}} with q^d = 2^k.
        const std::size_t k = mpz_sizeinbase(qd.get_mpz_t(), 2) - 1;
        Poly term = a % f;
        b = term;
        for (std::size_t i = 1; i < k; ++i) {
          term = mulmod(term, term, f);
          b = b + term;
        }
      } else {
        b = powmod(a, (qd - 1) / 2, f) - one;
      }
      g = gcd(b, f);
    }
    if (g.degree() > 0 && g.degree() < f.degree()) {
      equal_degree_split(g, d, rng, out);
      equal_degree_split(f / g, d, rng, out);
      return;
    }
  }
}

}  // namespace

std::vector<std::pair<Poly, unsigned>> squarefree_decomposition(const Poly& f) {
  if (f.is_zero()) throw PreconditionError("squarefree_decomposition: zero polynomial");
  std::vector<std::pair<Poly, unsigned>> out;
  sqf_rec(f.monic(), 1, out);
  return out;
}

Factorization factor(const Poly& f, std::uint64_t seed) {
  if (f.is_zero()) throw PreconditionError("factor: zero polynomial");
  const Field& F = f.field();
  Factorization result;
  result.unit = f.lead();
  std::mt19937_64 rng(seed);
  const Poly t = Poly::variable(F);
  const mpz_class q(std::to_string(F.size()));
  for (const auto& [part, mult] : squarefree_decomposition(f)) {
    Poly rest = part;
    Poly h = t % rest;
    for (unsigned d = 1; rest.degree() > 0; ++d) {
      if (2 * static_cast<int>(d) > rest.degree()) {
        result.factors.emplace_back(rest.monic(), mult);
        break;
      }
      h = powmod(h, q, rest);
      const Poly g = gcd(h - t, rest);
      if (g.degree() > 0) {
        std::vector<Poly> pieces;
        equal_degree_split(g, d, rng, pieces);
        for (auto& pc : pieces) result.factors.emplace_back(pc.monic(), mult);
        rest = rest / g;
        h = h % rest;
      }
    }
  }
  std::sort(result.factors.begin(), result.factors.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  // Distinct squarefree parts are coprime, so no factor repeats.
  return result;
}

mpz_class count_irreducibles(std::uint64_t q, unsigned d) {
  if (d == 0) return 0;
  auto mobius = [](unsigned m) {
    int mu = 1;
    for (unsigned p = 2; p * p <= m; ++p) {
      if (m % p == 0) {
        m /= p;
        if (m % p == 0) return 0;
        mu = -mu;
      }
    }
    if (m > 1) mu = -mu;
    return mu;
  };
  mpz_class total = 0;
  for (unsigned m = 1; m <= d; ++m) {
    if (d % m != 0) continue;
    const int mu = mobius(m);
    if (mu == 0) continue;
    mpz_class term;
    mpz_ui_pow_ui(term.get_mpz_t(), q, d / m);
    total += mu * term;
  }
  return total / d;
}

std::vector<Poly> irreducibles(const Field& f, unsigned d) {
  if (d == 0) throw PreconditionError("irreducibles: degree must be positive");
  mpz_class candidates;
  mpz_ui_pow_ui(candidates.get_mpz_t(), f.size(), d);
  if (candidates > mpz_class(std::to_string(limits().enumeration))) {
    throw LimitError("irreducibles: q^d = " + candidates.get_str() + " exceeds enumeration limit");
  }
  const std::uint64_t n = std::stoull(candidates.get_str());
  std::vector<Poly> out;
  for (std::uint64_t idx = 0; idx < n; ++idx) {
    Poly cand = Poly::monic_from_index(f, d, idx);
    if (d == 1 || is_irreducible(cand)) out.push_back(std::move(cand));
  }
  return out;
}

nlohmann::json to_json(const Poly& f) {
  nlohmann::json arr = nlohmann::json::array();
  const Field& F = f.field();
  for (auto c : f.coeffs()) {
    if (F.is_prime_field()) {
      arr.push_back(c);
    } else {
      arr.push_back(F.digits(c));
    }
  }
  return arr;
}

std::string to_text(const Poly& f) { return to_json(f).dump(); }

Poly poly_from_json(const Field& f, const nlohmann::json& j) {
  if (!j.is_array()) throw PreconditionError("polynomial must be a JSON array of coefficients");
  std::vector<Elem> v;
  for (const auto& c : j) {
    if (c.is_number_integer()) {
      v.push_back(f.from_int(c.get<std::int64_t>()));
    } else if (c.is_array()) {
      v.push_back(f.from_digits(c.get<std::vector<std::int64_t>>()));
    } else {
      throw PreconditionError("polynomial coefficient must be an integer or digit array");
    }
  }
  return Poly(f, std::move(v));
}

Poly parse_poly(const Field& f, const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw PreconditionError(std::string("cannot parse polynomial: ") + e.what());
  }
  return poly_from_json(f, j);
}

}  // namespace superell
