#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "superell/census.hpp"
#include "superell/density.hpp"
#include "superell/errors.hpp"
#include "superell/limits.hpp"

using namespace superell;

namespace {

void emit(const std::string& text, const std::string& out) {
  if (out.empty()) {
    std::cout << text << '\n';
    return;
  }
  std::ofstream f(out);
  if (!f) throw std::runtime_error("cannot open " + out);
  f << text << '\n';
}

bool ends_with(const std::string& s, const std::string& suffix) {
  return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

// Accepts inline JSON or a path to a JSON file.
nlohmann::json read_json_arg(const std::string& arg) {
  const auto first = arg.find_first_not_of(" \t\n");
  if (first != std::string::npos && (arg[first] == '{' || arg[first] == '[')) return nlohmann::json::parse(arg);
  std::ifstream f(arg);
  if (!f) throw PreconditionError("cannot read " + arg);
  return nlohmann::json::parse(f);
}

Field field_from(std::uint64_t p, unsigned e) {
  if (!is_prime(p)) throw PreconditionError("p must be prime");
  return Field::make(p, e);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Superelliptic curves and order-ell Dirichlet characters over F_q[t]"};
  app.require_subcommand(1);
  std::string out;

  // census
  auto* census = app.add_subcommand("census", "Enumerate order-ell characters and decide central vanishing");
  std::uint64_t c_p = 7;
  unsigned c_e = 1, c_ell = 3, c_deg = 2, c_threads = 0;
  std::size_t c_sample = 25;
  std::string c_cache;
  bool c_count_only = false;
  census->add_option("--p", c_p, "Characteristic")->required();
  census->add_option("--e", c_e, "Extension degree, q = p^e");
  census->add_option("--ell", c_ell, "Character order (odd prime)")->required();
  census->add_option("--max-degree", c_deg, "Largest conductor degree")->required();
  census->add_option("--sample-decomp", c_sample, "Models checked against the zeta decomposition");
  census->add_option("--cache", c_cache, "Append-only L-polynomial cache (jsonl)");
  census->add_option("--threads", c_threads, "Worker threads (0 = all cores)");
  census->add_flag("--count-only", c_count_only, "Skip L-functions");

  // seed-check
  auto* seed = app.add_subcommand("seed-check", "Verify a seed curve");
  std::string s_kind;
  std::uint64_t s_p = 5;
  unsigned s_ell = 0;
  seed->add_option("--kind", s_kind, "thm41 | thm42 | f25twist")->required()->check(CLI::IsMember({"thm41", "thm42", "f25twist"}));
  seed->add_option("--p", s_p, "Prime")->required();
  seed->add_option("--ell", s_ell, "Order for thm42");

  // family
  auto* family = app.add_subcommand("family", "Specialize a seed along rational maps and verify the members");
  std::string f_kind;
  std::uint64_t f_p = 5, f_seed = 0, f_samples = 0;
  unsigned f_n = 6, f_ell = 0;
  std::size_t f_max = 0, f_verify_limit = 0;
  bool f_vanish = false;
  family->add_option("--seed-kind", f_kind, "f25twist | thm41 | thm42")->required()->check(CLI::IsMember({"thm41", "thm42", "f25twist"}));
  family->add_option("--p", f_p, "Prime")->required();
  family->add_option("--ell", f_ell, "Order for thm42");
  family->add_option("--n", f_n, "Bound on the branch degree of members")->required();
  family->add_flag("--verify-vanishing", f_vanish, "Also sum the character L-function of each member");
  family->add_option("--sample-pairs", f_samples, "Draw this many random pairs instead of enumerating");
  family->add_option("--seed", f_seed, "Sampling seed");
  family->add_option("--max-members", f_max, "Stop after this many distinct members");
  family->add_option("--verify-limit", f_verify_limit, "Verify at most this many members");

  // density
  auto* density = app.add_subcommand("density", "Truncated squarefree density of a base model");
  std::string d_base;
  unsigned d_deg = 2, d_hdeg = 2;
  std::uint64_t d_samples = 0, d_seed = 0;
  density->add_option("--base", d_base, "Model JSON (inline or file)")->required();
  density->add_option("--deg-max", d_deg, "Largest prime degree in the product");
  density->add_option("--h-deg", d_hdeg, "Degree bound for sampled pairs");
  density->add_option("--samples", d_samples, "Empirical samples");
  density->add_option("--seed", d_seed, "Sampling seed");

  // lpoly
  auto* lpoly = app.add_subcommand("lpoly", "L-polynomial of a single character");
  std::uint64_t l_p = 7;
  unsigned l_e = 1, l_ell = 3, l_inf = 0;
  std::vector<std::string> l_factors;
  lpoly->add_option("--p", l_p, "Characteristic")->required();
  lpoly->add_option("--e", l_e, "Extension degree");
  lpoly->add_option("--ell", l_ell, "Character order")->required();
  lpoly->add_option("--conductor-factors", l_factors, "Prime:exponent pairs, e.g. [0,1]:1 [6,1]:2")->required();
  lpoly->add_option("--infinity-exponent", l_inf, "Twist exponent at infinity");

  for (auto* sub : {census, seed, family, density, lpoly}) {
    sub->add_option("--out", out, "Write the report here (.json, or .csv for census tables) instead of stdout");
  }

  CLI11_PARSE(app, argc, argv);

  try {
    if (*census) {
      CensusOptions opts;
      opts.compute_l = !c_count_only;
      opts.sample_decomp = c_sample;
      opts.threads = c_threads;
      if (!c_cache.empty()) opts.cache_path = c_cache;
      const auto rep = run_census(field_from(c_p, c_e), c_ell, c_deg, opts);
      emit(ends_with(out, ".csv") ? rep.to_csv() : rep.to_json().dump(2), out);
    } else if (*seed) {
      emit(seed_check(s_kind, s_p, s_ell).to_json().dump(2), out);
    } else if (*family) {
      ExperimentOptions opts;
      opts.verify_vanishing = f_vanish;
      if (f_samples > 0) opts.family.sample_pairs = f_samples;
      opts.family.seed = f_seed;
      if (f_max > 0) opts.family.max_members = f_max;
      if (f_verify_limit > 0) opts.verify_limit = f_verify_limit;
      const auto rep = family_experiment(f_kind, f_p, f_n, opts, f_ell);
      emit(rep.to_json().dump(2), out);
      if (!rep.all_verified) throw InvariantViolation("family divisibility", "a member failed verification");
    } else if (*density) {
      const auto base = SuperellipticModel::from_json(read_json_arg(d_base));
      auto rep = truncated_density(radical_form(base), d_deg);
      if (d_samples > 0) rep.empirical = empirical_density(base, d_hdeg, d_samples, d_seed);
      nlohmann::json j = rep.to_json();
      j["schema_version"] = kSchemaVersion;
      emit(j.dump(2), out);
    } else if (*lpoly) {
      const Field F = field_from(l_p, l_e);
      std::vector<CharFactor> fs;
      for (const auto& s : l_factors) {
        const auto colon = s.rfind(':');
        if (colon == std::string::npos) throw PreconditionError("factor '" + s + "' is not of the form poly:exponent");
        fs.push_back({parse_poly(F, s.substr(0, colon)), static_cast<unsigned>(std::stoul(s.substr(colon + 1)))});
      }
      const DirichletChar chi(l_ell, F, fs, l_inf);
      const LPoly L = l_polynomial(chi);
      const auto st = strip_trivial_factor(L, chi, chi.infinity_exponent());
      nlohmann::json j{{"schema_version", kSchemaVersion},
                       {"conductor", to_text(chi.conductor())},
                       {"even", chi.even()},
                       {"L", L.to_json()},
                       {"stripped", st.quotient.to_json()},
                       {"central_vanishing", central_value_is_zero(st.quotient)}};
      j["trivial_k"] = st.k ? nlohmann::json(*st.k) : nlohmann::json(nullptr);
      emit(j.dump(2), out);
    }
  } catch (const InvariantViolation& e) {
    std::cerr << nlohmann::json{{"error", "invariant violation"}, {"invariant", e.invariant()}, {"detail", e.what()}}.dump() << '\n';
    return 2;
  } catch (const LimitError& e) {
    std::cerr << nlohmann::json{{"error", "resource guard"}, {"detail", e.what()}}.dump() << '\n';
    return 3;
  } catch (const std::exception& e) {
    std::cerr << nlohmann::json{{"error", "bad input"}, {"detail", e.what()}}.dump() << '\n';
    return 1;
  }
  return 0;
}
