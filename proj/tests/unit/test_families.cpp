#include <doctest.h>

#include <random>
#include <set>

#include "superell/curves.hpp"
#include "superell/errors.hpp"
#include "superell/families.hpp"

using namespace superell;

namespace {

SuperellipticModel cubic_base(const Field& F) {
  return SuperellipticModel(3, F, 1, {Poly(F, {0, F.neg(1), 0, 1}), Poly::constant(F, 1)});
}

}  // namespace

TEST_SUITE("families") {
  TEST_CASE("homogenize examples") {
    const Field F7 = Field::make(7);
    const BinaryForm a = homogenize(Poly(F7, {0, 6, 0, 1}));
    CHECK(a.degree() == 3);
    CHECK(a.coeffs() == std::vector<Elem>{0, 6, 0, 1});
    const BinaryForm b = homogenize(Poly::constant(F7, 1));
    CHECK(b.degree() == 0);
    CHECK(b.eval(3, 5) == 1);
    const BinaryForm c = homogenize(Poly(F7, {3, 0, 1}));
    for (Elem u = 0; u < 7; ++u)
      for (Elem v = 0; v < 7; ++v) CHECK(c.eval(u, v) == F7.add(F7.mul(u, u), F7.mul(3, F7.mul(v, v))));
  }

  TEST_CASE("forms evaluate like the polynomial") {
    std::mt19937_64 rng(1);
    const Field F = Field::make(5, 2);
    std::uniform_int_distribution<Elem> d(0, 24);
    for (int trial = 0; trial < 20; ++trial) {
      std::vector<Elem> c(1 + trial % 6);
      for (auto& x : c) x = d(rng);
      c.back() = 1 + d(rng) % 24;
      const Poly f(F, c);
      const BinaryForm H = homogenize(f);
      for (Elem x = 0; x < 25; ++x) {
        CHECK(H.eval(x, 1) == f.eval(x));
        // Homogeneity: F(ax, a) = a^deg F(x, 1).
        const Elem a = 1 + x % 24;
        CHECK(H.eval(F.mul(a, x), a) == F.mul(F.pow(a, H.degree()), f.eval(x)));
      }
      const Poly a = Poly(F, {d(rng), d(rng), 1}), b = Poly(F, {d(rng), 1});
      const Poly direct = H.eval(a, b);
      for (Elem x = 0; x < 25; ++x) CHECK(direct.eval(x) == H.eval(a.eval(x), b.eval(x)));
    }
  }

  TEST_CASE("genus bound degree") {
    CHECK(genus_bound_degree(4, 1, 3) == 2);
    CHECK(genus_bound_degree(3, 3, 5) == 1);
    CHECK(genus_bound_degree(10, 1, 3) == 4);
  }

  TEST_CASE("rational maps") {
    const Field F7 = Field::make(7);
    CHECK(RationalMap(Poly(F7, {3, 0, 1}), Poly::constant(F7, 1)).degree() == 2);
    CHECK_THROWS_AS(RationalMap(Poly::variable(F7), Poly(F7)), PreconditionError);
    CHECK_THROWS_AS(RationalMap(Poly::constant(F7, 2), Poly::constant(F7, 1)), PreconditionError);
    CHECK_THROWS_AS(RationalMap(Poly::variable(F7) * Poly::variable(F7), Poly::variable(F7)), PreconditionError);
  }

  TEST_CASE("specialize examples") {
    const Field F7 = Field::make(7);
    const auto base = cubic_base(F7);
    const Poly one = Poly::constant(F7, 1);
    CHECK_FALSE(specialize(base, RationalMap(Poly(F7, {0, 0, 1}), one)).has_value());
    const auto m = specialize(base, RationalMap(Poly(F7, {3, 0, 1}), one));
    REQUIRE(m.has_value());
    CHECK(m->components()[0] == Poly(F7, {3, 0, 1}) * Poly(F7, {2, 0, 1}) * Poly(F7, {4, 0, 1}));
    CHECK(genus(*m) == 4);
    CHECK(specialize(base, RationalMap(Poly::variable(F7), one)) == base);
    const SuperellipticModel prime_power(3, F7, 1, {Poly::variable(F7), one});
    CHECK_THROWS_AS(specialize(prime_power, RationalMap(Poly::variable(F7), one)), PreconditionError);
  }

  TEST_CASE("twist classes") {
    const Field F7 = Field::make(7);
    std::set<Elem> classes;
    for (Elem c = 1; c < 7; ++c) {
      const Elem k = canonical_twist(F7, c, 3);
      classes.insert(k);
      CHECK(F7.is_power(F7.div(k, c), 3));
      CHECK(canonical_twist(F7, k, 3) == k);
    }
    CHECK(classes.size() == 3);
  }

  TEST_CASE("family against exhaustive specialization") {
    const Field F7 = Field::make(7);
    const auto base = cubic_base(F7);
    const auto rep3 = generate_family(base, 3);
    CHECK(rep3.members.count(base) == 1);

    const auto rep = generate_family(base, 6);
    CHECK(rep.members.size() <= rep.squarefree_pairs);
    CHECK(rep.squarefree_pairs <= rep.raw_pairs);
    // Every pair (numer, denom) with max degree <= 2, in every scaling.
    std::set<SuperellipticModel> oracle;
    for (std::uint64_t i = 0; i < 343; ++i) {
      const Poly a = Poly::from_index(F7, 3, i);
      for (std::uint64_t j = 1; j < 343; ++j) {
        const Poly b = Poly::from_index(F7, 3, j);
        if (a.degree() < 1 && b.degree() < 1) continue;
        if (a.is_zero() || gcd(a, b).degree() > 0) continue;
        if (auto m = specialize(base, RationalMap(a, b))) {
          CHECK(m->branch_degree() <= 6);
          oracle.insert(*m);
        }
      }
    }
    CHECK(oracle == rep.members);
    const auto P0 = zeta_numerator(base);
    int checked = 0;
    for (const auto& m : rep.members) {
      if (m.branch_degree() != 6 || checked >= 4) continue;
      CHECK(numerator_divides(P0, zeta_numerator(m)));
      ++checked;
    }
    CHECK(checked == 4);
  }

  TEST_CASE("sampling is reproducible") {
    const Field F7 = Field::make(7);
    FamilyOptions opts;
    opts.sample_pairs = 2000;
    opts.seed = 42;
    const auto a = generate_family(cubic_base(F7), 6, opts);
    const auto b = generate_family(cubic_base(F7), 6, opts);
    CHECK(a.sampled);
    CHECK(a.members == b.members);
    CHECK(!a.members.empty());
    const auto full = generate_family(cubic_base(F7), 6);
    for (const auto& m : a.members) CHECK(full.members.count(m) == 1);
  }
}
