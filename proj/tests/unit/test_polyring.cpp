#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "superell/errors.hpp"
#include "superell/polyring.hpp"

using namespace superell;

namespace {

Poly random_poly(const Field& f, unsigned deg, std::mt19937_64& rng) {
  std::uniform_int_distribution<Elem> d(0, f.size() - 1);
  std::vector<Elem> c(deg + 1);
  for (auto& x : c) x = d(rng);
  if (c.back() == 0) c.back() = 1;
  return Poly(f, c);
}

}  // namespace

TEST_SUITE("polyring") {
  TEST_CASE("squarefree examples") {
    const Field F7 = Field::make(7), F5 = Field::make(5);
    CHECK_FALSE(is_squarefree(Poly(F7, {0, 0, 1, 1})));
    CHECK(is_squarefree(Poly(F5, {0, 4, 0, 1})));
    CHECK_FALSE(is_squarefree(Poly::monomial(F5, 1, 5)));
    CHECK_THROWS_AS(is_squarefree(Poly(F5)), PreconditionError);
  }

  TEST_CASE("factor examples") {
    const Field F5 = Field::make(5), F7 = Field::make(7);
    const auto a = factor(Poly(F5, {1, 0, 1}));
    REQUIRE(a.factors.size() == 2);
    CHECK(a.factors[0].first == Poly(F5, {2, 1}));
    CHECK(a.factors[1].first == Poly(F5, {3, 1}));
    const auto b = factor(Poly(F5, {2, 0, 1}));
    REQUIRE(b.factors.size() == 1);
    CHECK(b.factors[0].first == Poly(F5, {2, 0, 1}));
    CHECK(b.factors[0].second == 1);
    const auto c = factor(Poly(F7, {0, 3}));
    CHECK(c.unit == 3);
    REQUIRE(c.factors.size() == 1);
    CHECK(c.factors[0].first == Poly::variable(F7));
  }

  TEST_CASE("irreducible counts") {
    CHECK(irreducibles(Field::make(7), 1).size() == 7);
    CHECK(irreducibles(Field::make(7), 2).size() == 21);
    CHECK(irreducibles(Field::make(5), 2).size() == 10);
    for (std::uint64_t q : {2, 3, 4, 5, 7, 9}) {
      const Field F = q == 4 ? Field::make(2, 2) : q == 9 ? Field::make(3, 2) : Field::make(q);
      for (unsigned d = 1; d <= 4; ++d) {
        mpz_class total = 0;
        for (unsigned dp = 1; dp <= d; ++dp) {
          if (d % dp == 0) total += mpz_class(dp) * count_irreducibles(q, dp);
        }
        mpz_class qd = 1;
        for (unsigned i = 0; i < d; ++i) qd *= static_cast<unsigned long>(q);
        CHECK(total == qd);
        if (d <= 3) CHECK(mpz_class(static_cast<unsigned long>(irreducibles(F, d).size())) == count_irreducibles(q, d));
      }
    }
  }

  TEST_CASE("irreducibles agree with trial division") {
    for (std::uint64_t q : {3, 5, 7}) {
      const Field F = Field::make(q);
      for (unsigned d = 1; d <= 3; ++d) {
        const auto irr = irreducibles(F, d);
        std::size_t found = 0;
        std::uint64_t total = 1;
        for (unsigned i = 0; i < d; ++i) total *= q;
        for (std::uint64_t i = 0; i < total; ++i) {
          const Poly f = Poly::monic_from_index(F, d, i);
          const bool irr_oracle = oracle::irreducible_by_trial(f);
          CHECK(is_irreducible(f) == irr_oracle);
          if (irr_oracle) {
            REQUIRE(found < irr.size());
            CHECK(irr[found] == f);
            ++found;
          }
        }
        CHECK(found == irr.size());
      }
    }
  }

  TEST_CASE("squarefree iff all factor exponents are one") {
    for (std::uint64_t q : {2, 3, 5, 7}) {
      const Field F = Field::make(q);
      for (unsigned d = 1; d <= 4; ++d) {
        std::uint64_t total = 1;
        for (unsigned i = 0; i < d; ++i) total *= q;
        for (std::uint64_t i = 0; i < total; ++i) {
          const Poly f = Poly::monic_from_index(F, d, i);
          const auto fac = factor(f);
          bool all_one = true;
          for (const auto& [P, e] : fac.factors) {
            all_one = all_one && e == 1;
            CHECK(oracle::irreducible_by_trial(P));
          }
          CHECK(is_squarefree(f) == all_one);
          CHECK(fac.expand(F) == f);
        }
      }
    }
  }

  TEST_CASE("factorization over extension fields") {
    std::mt19937_64 rng(11);
    for (const Field& F : {Field::make(5, 2), Field::make(3, 3), Field::make(2, 4), Field::make(7).extend(2)}) {
      for (int trial = 0; trial < 30; ++trial) {
        const Poly f = random_poly(F, 2 + trial % 7, rng);
        const auto fac = factor(f, static_cast<std::uint64_t>(trial));
        CHECK(fac.expand(F) == f);
        for (const auto& [P, e] : fac.factors) {
          CHECK(P.is_monic());
          if (P.degree() <= 3) CHECK(oracle::irreducible_by_trial(P));
        }
        const auto again = factor(f, static_cast<std::uint64_t>(trial) + 99);
        CHECK(again.factors == fac.factors);
      }
    }
  }

  TEST_CASE("resultant against the Sylvester determinant") {
    std::mt19937_64 rng(5);
    for (const Field& F : {Field::make(7), Field::make(5, 2), Field::make(3, 2).extend(2)}) {
      for (int trial = 0; trial < 60; ++trial) {
        const Poly a = random_poly(F, 1 + trial % 5, rng);
        const Poly b = random_poly(F, trial % 6, rng);
        CHECK(resultant(a, b) == oracle::sylvester_resultant(a, b));
      }
    }
  }

  TEST_CASE("division, gcd and powmod") {
    std::mt19937_64 rng(9);
    const Field F = Field::make(5, 2);
    for (int trial = 0; trial < 50; ++trial) {
      const Poly a = random_poly(F, 6, rng), b = random_poly(F, 3, rng), c = random_poly(F, 2, rng);
      const auto [quo, rem] = a.divmod(b);
      CHECK(quo * b + rem == a);
      CHECK(rem.degree() < b.degree());
      const Poly g = gcd(a * c, b * c);
      CHECK((g % c.monic()).is_zero());
      Poly naive = Poly::constant(F, 1);
      for (int k = 0; k < 13; ++k) naive = (naive * c) % b;
      CHECK(powmod(c, 13, b) == naive);
    }
  }

  TEST_CASE("text format") {
    const Field F7 = Field::make(7);
    const Poly f = parse_poly(F7, "[1,0,6]");
    CHECK(f == Poly(F7, {1, 0, 6}));
    CHECK(to_text(f) == "[1,0,6]");
    const Field F25 = Field::make(5, 2);
    const Poly g = parse_poly(F25, "[[0,1],1]");
    CHECK(g == Poly(F25, {5, 1}));
    CHECK(parse_poly(F25, to_text(g)) == g);
    CHECK(poly_from_json(F25, to_json(g)) == g);
  }
}
