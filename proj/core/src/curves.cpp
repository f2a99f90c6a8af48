#include "superell/curves.hpp"

#include <numeric>

#include "superell/errors.hpp"
#include "superell/limits.hpp"

namespace superell {
namespace {

mpz_class ipow(const mpz_class& b, unsigned long k) {
  mpz_class r;
  mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), k);
  return r;
}

mpz_class from_u64(std::uint64_t v) { return mpz_class(static_cast<unsigned long>(v)); }

unsigned valuation(mpz_class a, const mpz_class& p) {
  unsigned v = 0;
  while (a != 0 && a % p == 0) {
    a /= p;
    ++v;
  }
  return v;
}

// a_1..a_n from power sums by k a_k = -sum_{i=1}^k S_i a_{k-i}.
std::vector<mpz_class> newton_coeffs(const std::vector<mpz_class>& S, unsigned n) {
  std::vector<mpz_class> a(n + 1);
  a[0] = 1;
  for (unsigned k = 1; k <= n; ++k) {
    mpz_class acc = 0;
    for (unsigned i = 1; i <= k; ++i) acc += S[i - 1] * a[k - i];
    if (acc % k != 0) throw InvariantViolation("Newton identities", "non-integral coefficient a_" + std::to_string(k));
    a[k] = -acc / k;
  }
  return a;
}

}  // namespace

mpz_class ZetaNum::q() const { return ipow(from_u64(p), e); }

nlohmann::json ZetaNum::to_json() const {
  nlohmann::json cs = nlohmann::json::array();
  for (const auto& c : coeffs) cs.push_back(c.get_str());
  return {{"q", q().get_str()}, {"p", p}, {"e", e}, {"g", g}, {"coeffs", cs}};
}

ZetaNum ZetaNum::from_json(const nlohmann::json& j) {
  ZetaNum P;
  P.p = j.at("p").get<std::uint64_t>();
  P.e = j.at("e").get<unsigned>();
  for (const auto& c : j.at("coeffs")) P.coeffs.emplace_back(c.get<std::string>());
  P.g = static_cast<unsigned>((P.coeffs.size() - 1) / 2);
  return P;
}

unsigned genus(const SuperellipticModel& m) {
  const unsigned ram = m.branch_degree() + (m.normalized() ? 0 : 1);
  // 2g - 2 = -2 ell + ram (ell - 1)
  const long twice = -2L * m.ell() + static_cast<long>(ram) * (m.ell() - 1) + 2;
  if (twice < 0 || twice % 2 != 0) throw InvariantViolation("Riemann-Hurwitz", "negative or odd 2g");
  return static_cast<unsigned>(twice / 2);
}

SuperellipticModel extend_scalars(const SuperellipticModel& m, unsigned k) {
  if (k == 1) return m;
  const Field ext = m.field().extend(k);
  std::vector<Poly> comps;
  for (const auto& c : m.components()) comps.emplace_back(ext, c.coeffs());
  return SuperellipticModel(m.ell(), ext, m.twist(), std::move(comps));
}

mpz_class count_points(const SuperellipticModel& m, unsigned n) {
  if (n == 0) throw PreconditionError("count_points: n must be positive");
  const std::uint64_t q = m.field().size();
  std::uint64_t Q = 1;
  for (unsigned i = 0; i < n; ++i) {
    if (Q > limits().point_count / q) {
      throw LimitError("count_points: q^n exceeds the point-count limit " + std::to_string(limits().point_count));
    }
    Q *= q;
  }
  const Field F = n == 1 ? m.field() : m.field().extend(n);
  const auto& fd = F.data();
  const unsigned ell = m.ell();
  const bool split = (Q - 1) % ell == 0;

  std::vector<std::vector<Elem>> comps;
  for (const auto& c : m.components()) comps.push_back(c.coeffs());

  std::uint64_t total = 0;
  for (Elem x = 0; x < Q; ++x) {
    Elem v = m.twist();
    bool ramified = false;
    for (std::size_t i = 0; i < comps.size() && !ramified; ++i) {
      const auto& c = comps[i];
      if (c.size() <= 1) continue;
      Elem y = c.back();
      for (std::size_t j = c.size() - 1; j-- > 0;) y = detail::add(fd, detail::mul(fd, y, x), c[j]);
      if (y == 0) {
        ramified = true;
      } else if (split) {
        for (std::size_t r = 0; r <= i; ++r) v = detail::mul(fd, v, y);
      }
    }
    if (ramified || !split) {
      total += 1;
    } else if (F.is_power(v, ell)) {
      total += ell;
    }
  }
  // places over infinity
  if (!m.normalized()) {
    total += 1;
  } else if (!split) {
    total += 1;
  } else if (F.is_power(m.twist(), ell)) {
    total += ell;
  }
  return from_u64(total);
}

ZetaNum zeta_from_counts(std::uint64_t p, unsigned e, unsigned g, const std::vector<mpz_class>& counts) {
  if (counts.size() < g) throw PreconditionError("zeta_from_counts: need N_1..N_g");
  ZetaNum P;
  P.p = p;
  P.e = e;
  P.g = g;
  const mpz_class q = P.q();
  std::vector<mpz_class> S(g);
  mpz_class qn = 1;
  for (unsigned n = 1; n <= g; ++n) {
    qn *= q;
    S[n - 1] = qn + 1 - counts[n - 1];
  }
  auto a = newton_coeffs(S, g);
  a.resize(2 * g + 1);
  for (unsigned i = 0; i < g; ++i) a[2 * g - i] = ipow(q, g - i) * a[i];
  P.coeffs = std::move(a);
  return P;
}

ZetaNum zeta_numerator(const SuperellipticModel& m, const ZetaOptions& opts) {
  const unsigned g = genus(m);
  const std::uint64_t p = m.field().characteristic();
  const unsigned e = m.field().absolute_degree();
  std::vector<mpz_class> counts;
  for (unsigned n = 1; n <= g; ++n) counts.push_back(count_points(m, n));
  ZetaNum P = zeta_from_counts(p, e, g, counts);
  const mpz_class q = P.q();
  for (unsigned n = 1; n <= g; ++n) {
    if (!weil_bound_holds(counts[n - 1], q, n, g)) {
      throw InvariantViolation("Weil bound", "N_" + std::to_string(n) + " = " + counts[n - 1].get_str());
    }
  }
  if (opts.verify && g > 0) {
    const auto predicted = predict_counts(P, 2 * g);
    for (unsigned n = g + 1; n <= 2 * g; ++n) {
      mpz_class N;
      try {
        N = count_points(m, n);
      } catch (const LimitError&) {
        break;
      }
      if (N != predicted[n - 1]) {
        throw InvariantViolation("predicted counts", "N_" + std::to_string(n) + " counted " + N.get_str() + ", predicted " +
                                                         predicted[n - 1].get_str());
      }
    }
  }
  return P;
}

std::vector<mpz_class> power_sums(const ZetaNum& P, unsigned n) {
  // S_k = -k a_k - sum_{i=1}^{k-1} S_i a_{k-i}
  std::vector<mpz_class> S(n);
  auto a = [&](unsigned k) -> mpz_class { return k < P.coeffs.size() ? P.coeffs[k] : mpz_class(0); };
  for (unsigned k = 1; k <= n; ++k) {
    mpz_class acc = -mpz_class(k) * a(k);
    for (unsigned i = 1; i < k; ++i) acc -= S[i - 1] * a(k - i);
    S[k - 1] = acc;
  }
  return S;
}

std::vector<mpz_class> predict_counts(const ZetaNum& P, unsigned n) {
  const auto S = power_sums(P, n);
  const mpz_class q = P.q();
  std::vector<mpz_class> N(n);
  mpz_class qk = 1;
  for (unsigned k = 1; k <= n; ++k) {
    qk *= q;
    N[k - 1] = qk + 1 - S[k - 1];
  }
  return N;
}

ZetaNum base_change(const ZetaNum& P, unsigned m) {
  if (m == 0) throw PreconditionError("base_change: m must be positive");
  if (m == 1) return P;
  const unsigned deg = static_cast<unsigned>(P.coeffs.size()) - 1;
  const auto S = power_sums(P, deg * m);
  std::vector<mpz_class> Sm(deg);
  for (unsigned k = 1; k <= deg; ++k) Sm[k - 1] = S[k * m - 1];
  ZetaNum out;
  out.p = P.p;
  out.e = P.e * m;
  out.g = P.g;
  out.coeffs = newton_coeffs(Sm, deg);
  return out;
}

bool is_supersingular_np(const ZetaNum& P, std::uint64_t p, unsigned e) {
  const mpz_class pp = from_u64(p);
  for (std::size_t i = 1; i < P.coeffs.size(); ++i) {
    if (P.coeffs[i] == 0) continue;
    if (2 * static_cast<unsigned long>(valuation(P.coeffs[i], pp)) < i * e) return false;
  }
  return true;
}

bool has_central_eigenvalue(const ZetaNum& P) {
  const std::size_t D = P.coeffs.size() - 1;
  if (D == 0) return false;
  const mpz_class p = from_u64(P.p);
  // (sqrt q)^D P(1/sqrt q) = sum_i a_i (sqrt q)^{D-i}
  if (P.e % 2 == 0) {
    const mpz_class s = ipow(p, P.e / 2);
    mpz_class acc = 0, w = 1;
    for (std::size_t i = D + 1; i-- > 0;) {
      acc += P.coeffs[i] * w;
      w *= s;
    }
    return acc == 0;
  }
  const mpz_class q = P.q();
  mpz_class A = 0, B = 0, w = 1;
  for (std::size_t m = 0; m <= D; ++m) {
    const mpz_class& c = P.coeffs[D - m];
    if (m % 2 == 0) {
      A += c * w;
    } else {
      B += c * w;
      w *= q;
    }
  }
  return A == 0 && B == 0;
}

unsigned default_extension_bound(unsigned g) {
  // phi(m) >= sqrt(m/2), so m <= 2 (2g)^2 covers every candidate.
  const unsigned top = std::max(2u, 8 * g * g + 2);
  unsigned long l = 1;
  for (unsigned m = 1; m <= top; ++m) {
    unsigned phi = m;
    unsigned x = m;
    for (unsigned r = 2; r * r <= x; ++r) {
      if (x % r == 0) {
        while (x % r == 0) x /= r;
        phi -= phi / r;
      }
    }
    if (x > 1) phi -= phi / x;
    if (phi <= 2 * g) l = std::lcm(l, static_cast<unsigned long>(m));
  }
  return static_cast<unsigned>(2 * l);
}

std::optional<unsigned> find_central_extension(const ZetaNum& P, std::optional<unsigned> d_max) {
  const unsigned bound = d_max ? *d_max : default_extension_bound(P.g);
  for (unsigned m = 1; m <= bound; ++m) {
    if (has_central_eigenvalue(base_change(P, m))) return m;
  }
  return std::nullopt;
}

bool numerator_divides(const ZetaNum& P0, const ZetaNum& P) {
  if (P0.q() != P.q()) throw PreconditionError("numerator_divides: different base fields");
  const std::size_t d0 = P0.coeffs.size() - 1, d = P.coeffs.size() - 1;
  if (d0 > d) return false;
  if (P0.coeffs[0] != 1) throw PreconditionError("numerator_divides: P0(0) must be 1");
  // power series quotient, then an exact remainder check
  std::vector<mpz_class> Q(d - d0 + 1);
  for (std::size_t k = 0; k < Q.size(); ++k) {
    mpz_class acc = P.coeffs[k];
    for (std::size_t i = 1; i <= std::min(k, d0); ++i) acc -= P0.coeffs[i] * Q[k - i];
    Q[k] = acc;
  }
  for (std::size_t k = 0; k <= d; ++k) {
    mpz_class acc = 0;
    for (std::size_t i = 0; i <= d0; ++i) {
      if (k >= i && k - i < Q.size()) acc += P0.coeffs[i] * Q[k - i];
    }
    if (acc != P.coeffs[k]) return false;
  }
  return true;
}

bool functional_equation_holds(const ZetaNum& P) {
  const std::size_t D = P.coeffs.size() - 1;
  if (D != 2 * P.g) return false;
  const mpz_class q = P.q();
  for (unsigned i = 0; i <= P.g; ++i) {
    if (P.coeffs[2 * P.g - i] != ipow(q, P.g - i) * P.coeffs[i]) return false;
  }
  return true;
}

bool weil_bound_holds(const mpz_class& N, const mpz_class& q, unsigned n, unsigned g) {
  const mpz_class qn = ipow(q, n);
  const mpz_class diff = qn + 1 - N;
  return diff * diff <= 4 * mpz_class(g) * g * qn;
}

}  // namespace superell
