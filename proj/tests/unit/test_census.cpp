#include <doctest.h>

#include <unistd.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "superell/census.hpp"
#include "superell/errors.hpp"

using namespace superell;

namespace {

std::string temp_path(const std::string& name) {
  return (std::filesystem::temp_directory_path() / ("superell_" + name + "_" + std::to_string(::getpid()))).string();
}

std::vector<std::string> read_lines(const std::string& path) {
  std::ifstream in(path);
  std::vector<std::string> out;
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

}  // namespace

TEST_SUITE("census") {
  TEST_CASE("small census and cache") {
    const Field F7 = Field::make(7);
    const std::string cache = temp_path("lcache.jsonl");
    std::filesystem::remove(cache);
    CensusOptions opts;
    opts.cache_path = cache;
    opts.threads = 2;
    const CensusReport a = run_census(F7, 3, 3, opts);
    REQUIRE(a.per_degree.size() == 3);
    CHECK(a.per_degree[0].count_A == 14);
    CHECK(a.per_degree[1].count_A == 126);
    CHECK(a.per_degree[2].count_A == 1092);
    for (const auto& row : a.per_degree) CHECK(row.count_A == count_order_ell_exact(7, 3, row.d));
    CHECK(a.per_degree[0].count_B == 0);
    CHECK(a.per_degree[1].count_B == 0);
    CHECK(a.duality_closed);
    CHECK(a.ambiguous_strips == 0);
    CHECK(a.characters.size() == 1232);
    CHECK(a.stats.cache_misses == 1232);
    for (const auto& d : a.decomposition) CHECK(d.holds);
    CHECK(a.decomposition.size() == 25);

    const CensusReport b = run_census(F7, 3, 3, opts);
    CHECK(b.stats.cache_hits == 1232);
    CHECK(b.stats.cache_misses == 0);
    CHECK(b.to_json(false) == a.to_json(false));
    CHECK(read_lines(cache).size() == 1232);

    // Damage one line: the cache is dropped and rewritten.
    auto lines = read_lines(cache);
    lines[10][lines[10].size() / 2] ^= 1;
    {
      std::ofstream out(cache, std::ios::trunc);
      for (const auto& l : lines) out << l << '\n';
    }
    const CensusReport c = run_census(F7, 3, 3, opts);
    CHECK(c.stats.cache_rebuilt);
    CHECK(c.to_json(false) == a.to_json(false));
    const CensusReport d = run_census(F7, 3, 3, opts);
    CHECK_FALSE(d.stats.cache_rebuilt);
    CHECK(d.stats.cache_hits == 1232);
    std::filesystem::remove(cache);

    const std::string csv = a.to_csv();
    CHECK(csv.rfind("d,count_A,count_B\n1,14,0\n2,126,0\n", 0) == 0);
  }

  TEST_CASE("central vanishing agrees with the zeta route") {
    // P(T) of the model is the product of the (stripped) L-functions of chi
    // and its dual, so +sqrt(q) is an eigenvalue iff chi vanishes.
    const Field F7 = Field::make(7);
    CensusOptions opts;
    opts.sample_decomp = 0;
    const CensusReport rep = run_census(F7, 3, 4, opts);
    int vanishing = 0;
    for (const auto& rec : rep.characters) {
      const ZetaNum P = zeta_numerator(rec.chi.model());
      CHECK(rec.vanishing == has_central_eigenvalue(P));
      vanishing += rec.vanishing;
    }
    CHECK(vanishing == 28 + 224);
  }

  TEST_CASE("count only") {
    CensusOptions opts;
    opts.compute_l = false;
    const CensusReport rep = run_census(Field::make(13), 3, 2, opts);
    CHECK(rep.characters.empty());
    CHECK(rep.per_degree[1].count_A == count_order_ell_exact(13, 3, 2));
    CHECK_THROWS_AS(run_census(Field::make(5), 3, 2, opts), PreconditionError);
  }

  TEST_CASE("decomposition rejects a wrong numerator") {
    const Field F7 = Field::make(7);
    const SuperellipticModel m(3, F7, 1, {Poly(F7, {0, 6, 0, 1}), Poly::constant(F7, 1)});
    ZetaNum P = zeta_numerator(m);
    CHECK(decomposition_holds(m, P));
    P.coeffs[1] += 1;
    CHECK_FALSE(decomposition_holds(m, P));
  }

  TEST_CASE("seed checks") {
    const auto a = seed_thm41(5);
    CHECK(a.verdicts["a_p_zero"] == true);
    CHECK(a.verdicts["minimal_central_extension"] == 4);
    CHECK(a.verdicts["zeta_agree"]["4"] == true);
    CHECK_THROWS_AS(seed_thm41(7), PreconditionError);

    const auto b = seed_thm42(5, 19);
    CHECK(b.verdicts["genus_matches_formula"] == true);
    CHECK(b.verdicts["supersingular"] == true);
    CHECK(b.verdicts["minimal_central_extension"].get<unsigned>() <= 40);
    CHECK(b.P->g == 2);

    const auto c = seed_f25twist(5);
    REQUIRE(c.model.has_value());
    CHECK(c.P->coeffs == std::vector<mpz_class>{1, -10, 25});
    CHECK(has_central_eigenvalue(*c.P));
    CHECK_THROWS_AS(seed_check("nope", 5), PreconditionError);
  }
}
