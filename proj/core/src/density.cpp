#include "superell/density.hpp"

#include <random>

#include "superell/errors.hpp"
#include "superell/limits.hpp"

namespace superell {
namespace {

mpz_class upow(std::uint64_t b, unsigned long k) {
  mpz_class r;
  const mpz_class base = static_cast<unsigned long>(b);
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), k);
  return r;
}

LocalFactor finish(const Poly& pi, const mpz_class& c) {
  const mpz_class n4 = upow(pi.field().size(), 4UL * static_cast<unsigned>(pi.degree()));
  mpq_class fac = 1 - mpq_class(c, n4);
  fac.canonicalize();
  return {pi, c, fac};
}

void require_prime(const Poly& pi) {
  if (!pi.is_monic() || pi.degree() < 1 || !is_irreducible(pi)) throw PreconditionError("local_factor: pi must be monic irreducible");
}

}  // namespace

nlohmann::json rational_json(const mpq_class& r) {
  return {{"num", r.get_num().get_str()}, {"den", r.get_den().get_str()}};
}

nlohmann::json LocalFactor::to_json() const {
  return {{"prime", superell::to_json(prime)}, {"c", c.get_str()}, {"factor", rational_json(factor)}};
}

nlohmann::json EmpiricalResult::to_json() const {
  nlohmann::json j{{"samples", samples}, {"hits", hits}};
  j["frequency"] = frequency ? nlohmann::json(*frequency) : nlohmann::json(nullptr);
  return j;
}

nlohmann::json DensityReport::to_json() const {
  nlohmann::json ex = nlohmann::json::array(), fs = nlohmann::json::array();
  for (const auto& p : excluded) ex.push_back(superell::to_json(p));
  for (const auto& f : factors) fs.push_back(f.to_json());
  nlohmann::json j{{"truncated_product", rational_json(truncated_product)},
                   {"truncation_degree", truncation_degree},
                   {"excluded", ex},
                   {"factors", fs}};
  if (empirical) j["empirical"] = empirical->to_json();
  return j;
}

std::vector<Poly> excluded_primes(const BinaryForm& F) {
  std::vector<Poly> out;
  const std::uint64_t q = F.field().size();
  std::uint64_t norm = q;
  for (unsigned k = 1; norm <= F.degree(); ++k, norm *= q) {
    auto irr = irreducibles(F.field(), k);
    out.insert(out.end(), irr.begin(), irr.end());
  }
  return out;
}

LocalFactor local_factor(const BinaryForm& F, const Poly& pi) {
  require_prime(pi);
  const Field& f = pi.field();
  const auto dpi = static_cast<unsigned>(pi.degree());
  const mpz_class norm = pi.norm();
  std::uint64_t residues = 1;
  for (unsigned i = 0; i < dpi; ++i) {
    if (residues > limits().local_density / f.size()) throw LimitError("local_factor: residue field too large");
    residues *= f.size();
  }
  if (residues > limits().local_density / residues) throw LimitError("local_factor: |pi|^2 exceeds the local density limit");
  const Poly pi2 = pi * pi;
  const BinaryForm Fu = F.du(), Fv = F.dv();

  // Each zero (x, y) mod pi lifts to |pi| zeros mod pi^2 when the gradient
  // is nonzero there, and to |pi|^2 or none when it vanishes.
  mpz_class c = 0;
  for (std::uint64_t i = 0; i < residues; ++i) {
    const Poly x = Poly::from_index(f, dpi, i);
    for (std::uint64_t j = 0; j < residues; ++j) {
      const Poly y = Poly::from_index(f, dpi, j);
      const Poly v = F.eval(x, y) % pi2;
      const auto [w, r] = v.divmod(pi);
      if (!r.is_zero()) continue;
      const bool grad = !(Fu.eval(x, y) % pi).is_zero() || !(Fv.eval(x, y) % pi).is_zero();
      if (grad) {
        c += norm;
      } else if ((w % pi).is_zero()) {
        c += norm * norm;
      }
    }
  }
  return finish(pi, c);
}

LocalFactor local_factor_bruteforce(const BinaryForm& F, const Poly& pi) {
  require_prime(pi);
  const Field& f = pi.field();
  const auto d2 = static_cast<unsigned>(2 * pi.degree());
  std::uint64_t residues = 1;
  for (unsigned i = 0; i < d2; ++i) {
    if (residues > limits().local_density / f.size()) throw LimitError("local_factor: residue ring too large");
    residues *= f.size();
  }
  if (residues > limits().local_density / residues) throw LimitError("local_factor: |pi|^4 exceeds the local density limit");
  const Poly pi2 = pi * pi;
  mpz_class c = 0;
  for (std::uint64_t i = 0; i < residues; ++i) {
    const Poly x = Poly::from_index(f, d2, i);
    for (std::uint64_t j = 0; j < residues; ++j) {
      if ((F.eval(x, Poly::from_index(f, d2, j)) % pi2).is_zero()) c += 1;
    }
  }
  return finish(pi, c);
}

DensityReport truncated_density(const BinaryForm& F, unsigned deg_max) {
  DensityReport rep;
  rep.truncation_degree = deg_max;
  rep.excluded = excluded_primes(F);
  for (unsigned k = 1; k <= deg_max; ++k) {
    for (const auto& pi : irreducibles(F.field(), k)) {
      bool skip = false;
      for (const auto& e : rep.excluded) skip = skip || e == pi;
      if (skip) continue;
      auto lf = local_factor(F, pi);
      if (lf.factor == 0) throw InvariantViolation("positive local factor", "F vanishes identically mod pi^2 at " + to_text(pi));
      rep.truncated_product *= lf.factor;
      rep.factors.push_back(std::move(lf));
    }
  }
  rep.truncated_product.canonicalize();
  return rep;
}

mpq_class squarefree_density_m1(std::uint64_t q, unsigned deg_max) {
  // Coefficients of prod_k (1 - u^k)^{N_k} mod u^{deg_max + 1}.
  std::vector<mpz_class> poly(deg_max + 1);
  poly[0] = 1;
  for (unsigned k = 1; k <= deg_max; ++k) {
    const mpz_class nk = count_irreducibles(q, k);
    std::vector<mpz_class> next(deg_max + 1);
    mpz_class binom = 1;
    for (unsigned j = 0; j * k <= deg_max; ++j) {
      if (j > 0) binom = binom * (nk - (j - 1)) / j;
      if (binom == 0) break;
      const mpz_class term = j % 2 == 0 ? binom : mpz_class(-binom);
      for (unsigned i = 0; i + j * k <= deg_max; ++i) next[i + j * k] += poly[i] * term;
    }
    poly = std::move(next);
  }
  mpq_class acc = 0;
  const mpz_class q2 = upow(q, 2);
  mpz_class den = 1;
  for (unsigned i = 0; i <= deg_max; ++i) {
    acc += mpq_class(poly[i], den);
    den *= q2;
  }
  acc.canonicalize();
  return acc;
}

mpq_class squarefree_frequency(const Field& f, unsigned n) {
  std::uint64_t total = 1;
  for (unsigned i = 0; i < n; ++i) {
    if (total > limits().enumeration / f.size()) throw LimitError("squarefree_frequency: too many polynomials");
    total *= f.size();
  }
  std::uint64_t hits = 0;
  for (std::uint64_t i = 0; i < total; ++i) {
    if (is_squarefree(Poly::monic_from_index(f, n, i))) ++hits;
  }
  mpq_class r(mpz_class(static_cast<unsigned long>(hits)), mpz_class(static_cast<unsigned long>(total)));
  r.canonicalize();
  return r;
}

EmpiricalResult empirical_density(const SuperellipticModel& base, unsigned h_deg, std::uint64_t samples, std::uint64_t seed) {
  EmpiricalResult res;
  res.samples = samples;
  if (samples == 0) return res;
  const Field& f = base.field();
  const BinaryForm F = radical_form(base);
  const auto excluded = excluded_primes(F);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::uint64_t> coef(0, f.size() - 1);
  for (std::uint64_t s = 0; s < samples; ++s) {
    std::vector<Elem> a(h_deg + 1), b(h_deg + 1);
    for (auto& x : a) x = coef(rng);
    for (auto& x : b) x = coef(rng);
    Poly v = F.eval(Poly(f, a), Poly(f, b));
    if (v.is_zero()) continue;
    for (const auto& pi : excluded) {
      while (true) {
        auto [quo, rem] = v.divmod(pi);
        if (!rem.is_zero()) break;
        v = std::move(quo);
      }
    }
    if (is_squarefree(v)) ++res.hits;
  }
  res.frequency = static_cast<double>(res.hits) / static_cast<double>(samples);
  return res;
}

}  // namespace superell
