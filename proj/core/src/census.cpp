#include "superell/census.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <exception>
#include <fstream>
#include <map>
#include <mutex>
#include <sstream>
#include <thread>

#include <boost/crc.hpp>

#include "superell/errors.hpp"
#include "superell/limits.hpp"

namespace superell {
namespace {

template <class Fn>
void parallel_for(std::size_t count, unsigned threads, Fn&& fn) {
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(count, 1)));
  if (threads <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < threads; ++t) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < count; i = next++) {
        try {
          fn(i);
        } catch (...) {
          std::lock_guard<std::mutex> lock(error_mutex);
          if (!error) error = std::current_exception();
          next = count;
        }
      }
    });
  }
  for (auto& th : pool) th.join();
  if (error) std::rethrow_exception(error);
}

std::string checksum(const std::string& s) {
  boost::crc_32_type crc;
  crc.process_bytes(s.data(), s.size());
  std::ostringstream os;
  os << std::hex << crc.checksum();
  return os.str();
}

std::string char_key(const DirichletChar& chi) {
  const auto j = chi.to_json();
  return chi.field().key() + "|" + std::to_string(chi.ell()) + "|" + j["factors"].dump() + "|" +
         std::to_string(chi.infinity_exponent());
}

// Append-only L-polynomial cache, one checksummed JSON object per line.
class LCache {
 public:
  explicit LCache(std::optional<std::string> path) : path_(std::move(path)) {
    if (!path_) return;
    std::ifstream in(*path_);
    if (!in) return;
    std::string line;
    while (std::getline(in, line)) {
      if (line.empty()) continue;
      try {
        const auto j = nlohmann::json::parse(line);
        const std::string key = j.at("key").get<std::string>();
        const std::string body = j.at("lpoly").dump();
        if (j.at("checksum").get<std::string>() != checksum(key + "\n" + body)) throw std::runtime_error("checksum");
        entries_.emplace(key, LPoly::from_json(j.at("lpoly")));
      } catch (const std::exception&) {
        entries_.clear();
        rebuilt_ = true;
        break;
      }
    }
  }

  const LPoly* find(const std::string& key) const {
    const auto it = entries_.find(key);
    return it == entries_.end() ? nullptr : &it->second;
  }

  void add(const std::string& key, const LPoly& L) {
    if (entries_.emplace(key, L).second) pending_.push_back(key);
  }

  void flush() {
    if (!path_) return;
    std::ofstream out(*path_, rebuilt_ ? std::ios::trunc : std::ios::app);
    if (!out) throw std::runtime_error("cannot write cache " + *path_);
    auto write = [&](const std::string& key) {
      const std::string body = entries_.at(key).to_json().dump();
      nlohmann::json line{{"key", key}, {"checksum", checksum(key + "\n" + body)}};
      line["lpoly"] = nlohmann::json::parse(body);
      out << line.dump() << '\n';
    };
    if (rebuilt_) {
      for (const auto& [key, L] : entries_) write(key);
    } else {
      for (const auto& key : pending_) write(key);
    }
    pending_.clear();
  }

  bool rebuilt() const { return rebuilt_; }

 private:
  std::optional<std::string> path_;
  std::map<std::string, LPoly> entries_;
  std::vector<std::string> pending_;
  bool rebuilt_ = false;
};

nlohmann::json vanishing_entry(const DirichletChar& chi) {
  nlohmann::json ex = nlohmann::json::array();
  for (const auto& f : chi.factors()) ex.push_back(f.exponent);
  return {{"conductor", to_text(chi.conductor())}, {"exponents", ex}};
}

nlohmann::json mpz_json(const mpz_class& v) {
  if (v.fits_slong_p()) return v.get_si();
  return v.get_str();
}

}  // namespace

bool decomposition_holds(const SuperellipticModel& m, const ZetaNum& P) {
  if (!m.normalized()) throw PreconditionError("decomposition identity needs a normalized model");
  const DirichletChar chi = char_from_model(m);
  std::vector<CycInt> prod{CycInt::from_integer(m.ell(), 1)};
  for (unsigned j = 1; j < m.ell(); ++j) {
    const DirichletChar cj = chi.power(j);
    const auto s = strip_trivial_factor(l_polynomial(cj), cj, cj.infinity_exponent());
    prod = multiply(prod, s.quotient.coeffs);
  }
  while (prod.size() > 1 && prod.back().is_zero()) prod.pop_back();
  if (prod.size() != P.coeffs.size()) return false;
  for (std::size_t i = 0; i < prod.size(); ++i) {
    if (!prod[i].is_integer() || prod[i].constant_term() != P.coeffs[i]) return false;
  }
  return true;
}

nlohmann::json CensusReport::to_json(bool with_runtime) const {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& r : per_degree) {
    rows.push_back({{"d", r.d}, {"count_A", mpz_json(r.count_A)}, {"count_B", r.count_B}, {"vanishing", r.vanishing}});
  }
  nlohmann::json dec = nlohmann::json::array();
  for (const auto& c : decomposition) dec.push_back({{"model", c.model.to_json()}, {"P", c.P.to_json()}, {"holds", c.holds}});
  nlohmann::json j{{"schema_version", kSchemaVersion},
                   {"q", q},
                   {"p", p},
                   {"e", e},
                   {"ell", ell},
                   {"n", n},
                   {"per_degree", rows},
                   {"decomposition", dec},
                   {"duality_closed", duality_closed},
                   {"ambiguous_strips", ambiguous_strips}};
  if (with_runtime) {
    j["runtime_stats"] = {{"seconds", stats.seconds},
                          {"cache_hits", stats.cache_hits},
                          {"cache_misses", stats.cache_misses},
                          {"cache_rebuilt", stats.cache_rebuilt}};
  }
  return j;
}

std::string CensusReport::to_csv() const {
  std::ostringstream os;
  os << "d,count_A,count_B\n";
  for (const auto& r : per_degree) os << r.d << ',' << r.count_A.get_str() << ',' << r.count_B << '\n';
  return os.str();
}

CensusReport run_census(const Field& f, unsigned ell, unsigned n, const CensusOptions& opts) {
  const auto t0 = std::chrono::steady_clock::now();
  CensusReport rep;
  rep.p = f.characteristic();
  rep.e = f.absolute_degree();
  rep.q = f.size();
  rep.ell = ell;
  rep.n = n;

  const auto chars = enumerate_order_ell(f, ell, n);
  for (unsigned d = 1; d <= n; ++d) {
    DegreeRow row;
    row.d = d;
    row.count_A = static_cast<unsigned long>(
        std::count_if(chars.begin(), chars.end(), [d](const DirichletChar& c) { return c.conductor_degree() == d; }));
    const mpz_class expected = count_order_ell_exact(f.size(), ell, d);
    if (row.count_A != expected) {
      throw InvariantViolation("count_A", "degree " + std::to_string(d) + ": enumerated " + row.count_A.get_str() + ", expected " +
                                              expected.get_str());
    }
    rep.per_degree.push_back(std::move(row));
  }

  if (opts.compute_l && !chars.empty()) {
    LCache cache(opts.cache_path);
    rep.stats.cache_rebuilt = cache.rebuilt();
    std::vector<std::string> keys(chars.size());
    std::vector<std::optional<LPoly>> fresh(chars.size());
    std::vector<std::optional<CharacterRecord>> records(chars.size());
    LOptions lopts;
    lopts.verify_orthogonality = opts.verify_orthogonality;
    parallel_for(chars.size(), opts.threads, [&](std::size_t i) {
      const auto& chi = chars[i];
      keys[i] = char_key(chi);
      const LPoly* hit = cache.find(keys[i]);
      LPoly L = hit ? *hit : l_polynomial(chi, lopts);
      const auto s = strip_trivial_factor(L, chi, chi.infinity_exponent());
      CharacterRecord rec{chi, central_value_is_zero(s.quotient), s.k, s.ambiguous, s.quotient.degree()};
      if (!chi.even() && L.degree() != static_cast<int>(chi.conductor_degree()) - 1) {
        throw InvariantViolation("degree law", "odd character with deg L != deg f - 1");
      }
      records[i] = std::move(rec);
      if (!hit) fresh[i] = std::move(L);
    });
    for (std::size_t i = 0; i < chars.size(); ++i) {
      if (fresh[i]) {
        cache.add(keys[i], *fresh[i]);
        ++rep.stats.cache_misses;
      } else {
        ++rep.stats.cache_hits;
      }
    }
    cache.flush();

    std::map<std::string, bool> vanish;
    for (std::size_t i = 0; i < chars.size(); ++i) vanish[keys[i]] = records[i]->vanishing;
    for (auto& r : records) {
      rep.characters.push_back(std::move(*r));
      const auto& rec = rep.characters.back();
      if (rec.ambiguous) ++rep.ambiguous_strips;
      if (!rec.vanishing) continue;
      auto& row = rep.per_degree[rec.chi.conductor_degree() - 1];
      ++row.count_B;
      row.vanishing.push_back(vanishing_entry(rec.chi));
      if (!vanish.at(char_key(dual_char(rec.chi)))) rep.duality_closed = false;
    }
    if (!rep.duality_closed) throw InvariantViolation("duality", "a vanishing character has a non-vanishing dual");

    std::vector<const DirichletChar*> even;
    for (const auto& c : chars) {
      if (c.even()) even.push_back(&c);
    }
    const std::size_t S = std::min(opts.sample_decomp, even.size());
    for (std::size_t k = 0; k < S; ++k) {
      const auto model = even[k * even.size() / S]->model();
      const ZetaNum P = zeta_numerator(model);
      DecompositionCheck chk{model, P, decomposition_holds(model, P)};
      if (!chk.holds) throw InvariantViolation("decomposition", "P(T) != prod L*(chi^j) for " + model.to_json().dump());
      rep.decomposition.push_back(std::move(chk));
    }
  }
  rep.stats.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return rep;
}

nlohmann::json SeedReport::to_json() const {
  nlohmann::json j{{"schema_version", kSchemaVersion}, {"kind", kind}, {"parameters", parameters}, {"chain", chain}, {"verdicts", verdicts}};
  j["model"] = model ? model->to_json() : nlohmann::json(nullptr);
  j["P"] = P ? P->to_json() : nlohmann::json(nullptr);
  return j;
}

SeedReport seed_thm41(std::uint64_t p) {
  if (p < 3 || !is_prime(p) || p % 3 != 2) throw PreconditionError("thm41 seed needs an odd prime p = 2 mod 3");
  SeedReport rep;
  rep.kind = "thm41";
  rep.parameters = {{"p", p}};
  const Field F = Field::make(p);
  const SuperellipticModel E(2, F, 1, {Poly(F, {1, 0, 0, 1})});
  const SuperellipticModel C(3, F, 1, {Poly(F, {0, F.neg(1), 0, 1}), Poly::constant(F, 1)});

  const ZetaNum P = zeta_numerator(E, {true});
  const mpz_class pp = static_cast<unsigned long>(p);
  const ZetaNum P4 = base_change(P, 4);
  const mpz_class p2 = pp * pp;
  const bool a_zero = P.coeffs.at(1) == 0;
  const bool square = P4.coeffs == std::vector<mpz_class>{1, -2 * p2, p2 * p2};
  const bool central = has_central_eigenvalue(P4);
  const auto ext = find_central_extension(P);

  nlohmann::json agree;
  nlohmann::json numerators;
  for (unsigned k : {1u, 2u, 4u}) {
    const ZetaNum PE = zeta_numerator(extend_scalars(E, k));
    const ZetaNum PC = zeta_numerator(extend_scalars(C, k));
    if (PE != base_change(P, k)) throw InvariantViolation("base change", "counted and base-changed numerators differ");
    agree[std::to_string(k)] = PE == PC;
    numerators[std::to_string(k)] = {{"elliptic", PE.to_json()}, {"cubic", PC.to_json()}};
  }
  rep.chain = {{"P", P.to_json()}, {"P_base_changed_4", P4.to_json()}, {"by_extension", numerators}};
  rep.verdicts = {{"a_p_zero", a_zero},
                  {"base_change_square", square},
                  {"central_eigenvalue", central},
                  {"minimal_central_extension", ext ? nlohmann::json(*ext) : nlohmann::json(nullptr)},
                  {"zeta_agree", agree}};
  rep.model = E;
  rep.P = P;
  if (!a_zero) throw InvariantViolation("a_p = 0", "trace of Frobenius is " + P.coeffs.at(1).get_str());
  if (!square) throw InvariantViolation("(1 - p^2 T)^2", "base change to F_{p^4} gave " + P4.to_json().dump());
  if (!central) throw InvariantViolation("central eigenvalue", "no +p^2 eigenvalue over F_{p^4}");
  return rep;
}

SeedReport seed_thm42(unsigned ell, std::uint64_t p) {
  if (ell < 3 || !is_prime(ell)) throw PreconditionError("thm42 seed needs an odd prime ell");
  if (p < 3 || !is_prime(p) || p % ell != ell - 1) throw PreconditionError("thm42 seed needs an odd prime p = -1 mod ell");
  SeedReport rep;
  rep.kind = "thm42";
  rep.parameters = {{"p", p}, {"ell", ell}};
  const Field F = Field::make(p);
  std::vector<Poly> comps(ell - 1, Poly::constant(F, 1));
  const Poly x2 = Poly(F, {F.neg(2), 1});
  comps[0] = Poly(F, {0, F.neg(1), 1});
  comps[ell - 3] = comps[ell - 3] * x2;
  const SuperellipticModel M(ell, F, 1, comps);
  const unsigned g = genus(M);
  const unsigned g_formula = (M.branch_degree() - 2) * (ell - 1) / 2;
  const ZetaNum P = zeta_numerator(M, {true});
  const bool ss = is_supersingular_np(P, p, 1);
  const auto d = find_central_extension(P);
  rep.chain = {{"P", P.to_json()}, {"genus", g}};
  if (d) rep.chain["P_base_changed"] = base_change(P, *d).to_json();
  rep.verdicts = {{"genus_matches_formula", g == g_formula},
                  {"supersingular", ss},
                  {"minimal_central_extension", d ? nlohmann::json(*d) : nlohmann::json(nullptr)},
                  {"extension_bound", default_extension_bound(g)}};
  rep.model = M;
  rep.P = P;
  if (g != g_formula) throw InvariantViolation("genus formula", "Riemann-Hurwitz genus " + std::to_string(g));
  if (!ss) throw InvariantViolation("Newton polygon", "slopes are not all 1/2");
  if (!d) throw InvariantViolation("central extension", "no extension within the default bound");
  return rep;
}

SeedReport seed_f25twist(std::uint64_t p) {
  if (p < 3 || !is_prime(p) || p % 3 != 2) throw PreconditionError("f25twist seed needs an odd prime p = 2 mod 3");
  if (p * p > limits().census) throw LimitError("f25twist: p^2 exceeds the census limit");
  SeedReport rep;
  rep.kind = "f25twist";
  rep.parameters = {{"p", p}};
  const Field F = Field::make(p, 2);
  const Elem g0 = F.primitive_root();
  const mpz_class pp = static_cast<unsigned long>(p);
  const std::vector<mpz_class> target{1, -2 * pp, pp * pp};
  // Sextic twists of y^3 = x^3 - x: c runs over cube classes, a over square classes.
  const std::vector<Elem> cube_classes{1, g0, F.mul(g0, g0)};
  const std::vector<Elem> square_classes{1, g0};
  nlohmann::json tried = nlohmann::json::array();
  for (Elem c : cube_classes) {
    for (Elem a : square_classes) {
      const SuperellipticModel M(3, F, c, {Poly(F, {0, F.neg(a), 0, 1}), Poly::constant(F, 1)});
      const ZetaNum P = zeta_numerator(M, {true});
      tried.push_back({{"c", F.digits(c)}, {"a", F.digits(a)}, {"P", P.to_json()}});
      if (!rep.model && P.coeffs == target) {
        rep.model = M;
        rep.P = P;
      }
    }
  }
  rep.chain = {{"candidates", tried}};
  rep.verdicts = {{"found", rep.model.has_value()}};
  if (rep.model) rep.verdicts["central_eigenvalue"] = has_central_eigenvalue(*rep.P);
  return rep;
}

SeedReport seed_check(const std::string& kind, std::uint64_t p, unsigned ell) {
  if (kind == "thm41") return seed_thm41(p);
  if (kind == "thm42") return seed_thm42(ell, p);
  if (kind == "f25twist") return seed_f25twist(p);
  throw PreconditionError("unknown seed kind '" + kind + "'");
}

nlohmann::json ExperimentReport::to_json() const {
  nlohmann::json cs = nlohmann::json::array();
  for (const auto& c : checks) {
    nlohmann::json j{{"model", c.model.to_json()}, {"P", c.P.to_json()}, {"divides", c.divides}, {"central", c.central}};
    j["l_vanishing"] = c.l_vanishing ? nlohmann::json(*c.l_vanishing) : nlohmann::json(nullptr);
    cs.push_back(j);
  }
  return {{"schema_version", kSchemaVersion},
          {"seed", seed.to_json()},
          {"family", family.to_json()},
          {"checks", cs},
          {"all_verified", all_verified},
          {"note", note}};
}

ExperimentReport family_experiment(const std::string& seed_kind, std::uint64_t p, unsigned n, const ExperimentOptions& opts,
                                   unsigned ell) {
  SeedReport seed = seed_check(seed_kind, p, ell);
  std::optional<SuperellipticModel> base;
  ZetaNum P0;
  std::string note;
  if (seed_kind == "f25twist") {
    if (!seed.model) throw PreconditionError("f25twist search found no seed with a central eigenvalue");
    base = seed.model;
    P0 = *seed.P;
  } else if (seed_kind == "thm41") {
    const Field F = Field::make(p);
    const SuperellipticModel C(3, F, 1, {Poly(F, {0, F.neg(1), 0, 1}), Poly::constant(F, 1)});
    base = extend_scalars(C, 4);
    P0 = zeta_numerator(*base);
    note = "family built on y^3 = x^3 - x over F_{p^4}, which shares the zeta numerator of the elliptic seed";
  } else {
    const unsigned d = seed.verdicts.at("minimal_central_extension").get<unsigned>();
    base = extend_scalars(*seed.model, d);
    P0 = base_change(*seed.P, d);
  }
  if (!has_central_eigenvalue(P0)) throw PreconditionError("seed lacks a central eigenvalue");

  ExperimentReport rep{seed, generate_family(*base, n, opts.family), {}, true, note};
  if (rep.family.members.empty() && n < base->branch_degree()) {
    rep.note = "vacuous: n is below the seed branch degree " + std::to_string(base->branch_degree());
  }
  const Field& F = base->field();
  const bool characters = (F.size() - 1) % base->ell() == 0 && base->ell() > 2;
  std::size_t budget = opts.verify_limit.value_or(rep.family.members.size());
  for (const auto& m : rep.family.members) {
    if (budget-- == 0) break;
    MemberCheck chk{m, zeta_numerator(m), false, false, std::nullopt};
    chk.divides = numerator_divides(P0, chk.P);
    chk.central = has_central_eigenvalue(chk.P);
    if (opts.verify_vanishing && characters) chk.l_vanishing = central_value_is_zero(l_polynomial(char_from_model(m)));
    if (!chk.divides || !chk.central || chk.l_vanishing == false) rep.all_verified = false;
    rep.checks.push_back(std::move(chk));
  }
  return rep;
}

}  // namespace superell
