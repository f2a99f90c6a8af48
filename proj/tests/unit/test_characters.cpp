#include <doctest.h>

#include <map>
#include <random>

#include "superell/characters.hpp"
#include "superell/errors.hpp"

using namespace superell;

namespace {

// (g / P)_ell by naive repeated multiplication of g mod P.
MuValue naive_symbol(const Poly& g, const Poly& P, unsigned ell) {
  const Field& f = P.field();
  const Poly r = g % P;
  if (r.is_zero()) return MuValue::zero(ell);
  mpz_class e = (P.norm() - 1) / ell;
  Poly acc = Poly::constant(f, 1);
  for (mpz_class i = 0; i < e; ++i) acc = (acc * r) % P;
  REQUIRE(acc.degree() == 0);
  const Elem z = f.pow(f.primitive_root(), (f.size() - 1) / ell);
  Elem zk = 1;
  for (unsigned k = 0; k < ell; ++k, zk = f.mul(zk, z)) {
    if (zk == acc[0]) return MuValue::root(ell, k);
  }
  FAIL("not a root of unity");
  return MuValue::zero(ell);
}

MuValue naive_eval(const DirichletChar& chi, const Poly& g) {
  MuValue v = MuValue::root(chi.ell(), static_cast<std::int64_t>(chi.infinity_exponent()) * std::max(g.degree(), 0));
  for (const auto& [P, e] : chi.factors()) v = v * naive_symbol(g, P, chi.ell()).pow(e);
  return v;
}

Poly lin(const Field& f, std::int64_t a) { return Poly(f, {f.from_int(a), 1}); }

std::vector<DirichletChar> sample_chars() {
  const Field F7 = Field::make(7), F13 = Field::make(13), F11 = Field::make(11), F25 = Field::make(5, 2);
  return {
      DirichletChar(3, F7, {{Poly::variable(F7), 1}}),
      DirichletChar(3, F7, {{Poly::variable(F7), 1}, {lin(F7, -1), 2}}),
      DirichletChar(3, F7, {{Poly(F7, {1, 0, 1}), 1}, {lin(F7, 2), 1}}, 2),
      DirichletChar(3, F13, {{lin(F13, 1), 2}, {lin(F13, 5), 1}, {lin(F13, 7), 1}}),
      DirichletChar(5, F11, {{lin(F11, 0), 3}, {lin(F11, 3), 4}}, 1),
      DirichletChar(3, F25, {{Poly(F25, {0, 1}), 1}, {Poly(F25, {7, 1}), 1}, {Poly(F25, {5, 1}), 1}}, 1),
  };
}

}  // namespace

TEST_SUITE("characters") {
  TEST_CASE("residue symbol examples") {
    const Field F7 = Field::make(7);
    const Poly t = Poly::variable(F7);
    CHECK(residue_symbol(Poly::constant(F7, 3), t, 3) == MuValue::root(3, 1));
    CHECK(residue_symbol(Poly::constant(F7, 1), lin(F7, 4), 3) == MuValue::root(3, 0));
    CHECK(residue_symbol(t, t, 3).is_zero());
    CHECK_THROWS_AS(residue_symbol(t, Poly(F7, {0, 1, 1}), 3), PreconditionError);
    CHECK_THROWS_AS(residue_symbol(t, t, 5), PreconditionError);
  }

  TEST_CASE("residue symbol against naive exponentiation") {
    const Field F7 = Field::make(7);
    for (unsigned d = 1; d <= 2; ++d) {
      for (const Poly& P : irreducibles(F7, d)) {
        for (std::uint64_t i = 0; i < 343; ++i) {
          const Poly g = Poly::from_index(F7, 3, i);
          CHECK(residue_symbol(g, P, 3) == naive_symbol(g, P, 3));
        }
      }
    }
  }

  TEST_CASE("characters attached to models") {
    const Field F7 = Field::make(7);
    const Poly t = Poly::variable(F7);
    const Poly one = Poly::constant(F7, 1);
    const auto a = char_from_model(SuperellipticModel(3, F7, 1, {Poly(F7, {0, 6, 0, 1}), one}));
    CHECK(a.even());
    CHECK(a.conductor() == Poly(F7, {0, 6, 0, 1}));
    const auto b = char_from_model(SuperellipticModel(3, F7, 1, {t, lin(F7, -1)}));
    CHECK(b.even());
    CHECK(b.conductor() == t * lin(F7, -1));
    const auto c = char_from_model(SuperellipticModel(3, F7, 1, {t, one}));
    CHECK_FALSE(c.even());
    CHECK(c.conductor() == t);
    CHECK(char_from_model(c.model()) == c);
    CHECK_THROWS_AS(char_from_model(SuperellipticModel(3, Field::make(5), 1, {Poly::variable(Field::make(5)), Poly::constant(Field::make(5), 1)})),
                    PreconditionError);
  }

  TEST_CASE("evaluation against residue symbols") {
    const Field F7 = Field::make(7);
    const DirichletChar chi(3, F7, {{Poly::variable(F7), 1}});
    CHECK(chi.eval(lin(F7, 3)) == MuValue::root(3, 1));
    for (const auto& x : sample_chars()) {
      const Field& f = x.field();
      const std::uint64_t n = f.size() * f.size() * (f.size() < 20 ? f.size() : 1);
      const unsigned len = f.size() < 20 ? 3 : 2;
      for (std::uint64_t i = 0; i < n; i += 3) {
        const Poly g = Poly::monic_from_index(f, len, i);
        CHECK(x.eval(g) == naive_eval(x, g));
      }
    }
  }

  TEST_CASE("multiplicative and periodic") {
    std::mt19937_64 rng(17);
    for (const auto& x : sample_chars()) {
      const Field& f = x.field();
      std::uniform_int_distribution<std::uint64_t> d(0, f.size() * f.size() * f.size() - 1);
      const Poly m = x.conductor();
      for (int i = 0; i < 100; ++i) {
        const Poly g = Poly::monic_from_index(f, 3, d(rng)), h = Poly::monic_from_index(f, 3, d(rng));
        CHECK(x.eval(g * h) == x.eval(g) * x.eval(h));
        if (x.infinity_exponent() == 0) CHECK(x.eval(g + m * h) == x.eval(g));
      }
    }
  }

  TEST_CASE("evenness is triviality on constants") {
    for (const auto& x : sample_chars()) {
      bool trivial = true;
      for (Elem a = 1; a < x.field().size(); ++a) trivial = trivial && x.eval(Poly::constant(x.field(), a)) == MuValue::root(x.ell(), 0);
      CHECK(x.even() == trivial);
    }
  }

  TEST_CASE("powers and duals") {
    for (const auto& x : sample_chars()) {
      std::mt19937_64 rng(3);
      for (unsigned j = 1; j < x.ell(); ++j) {
        const auto xj = x.power(j);
        for (int i = 0; i < 30; ++i) {
          const Poly g = Poly::monic_from_index(x.field(), 2, rng() % (x.field().size() * x.field().size()));
          CHECK(xj.eval(g) == x.eval(g).pow(j));
        }
      }
      CHECK(x.power(x.ell() - 1).power(x.ell() - 1) == x);
      CHECK_THROWS_AS(x.power(x.ell()), PreconditionError);
    }
  }

  TEST_CASE("json round trip") {
    for (const auto& x : sample_chars()) CHECK(DirichletChar::from_json(x.to_json()) == x);
  }

  TEST_CASE("counting formulas") {
    CHECK(count_all_primitive(7, 0) == 1);
    CHECK(count_all_primitive(7, 1) == 35);
    CHECK(count_all_primitive(7, 2) == 1764);
    CHECK(count_order_ell_exact(7, 3, 0) == 1);
    CHECK(count_order_ell_exact(7, 3, 1) == 14);
    CHECK(count_order_ell_exact(7, 3, 2) == 126);
    CHECK_THROWS_AS(count_order_ell_exact(5, 3, 1), PreconditionError);
  }

  TEST_CASE("enumeration") {
    const Field F7 = Field::make(7);
    CHECK(enumerate_order_ell(F7, 3, 0).empty());
    CHECK(enumerate_order_ell(F7, 3, 1).size() == 14);
    const auto all = enumerate_order_ell(F7, 3, 3);
    CHECK(all.size() == 14 + 126 + 1092);
    std::map<Poly, int> per_conductor;
    for (std::size_t i = 0; i < all.size(); ++i) {
      if (i > 0) CHECK(all[i - 1] < all[i]);
      ++per_conductor[all[i].conductor()];
    }
    for (const auto& [m, n] : per_conductor) {
      CHECK(n == (1 << factor(m).factors.size()));
      CHECK(is_squarefree(m));
    }
    const Field F13 = Field::make(13);
    for (unsigned d = 1; d <= 2; ++d) {
      std::size_t exact = 0;
      for (const auto& x : enumerate_order_ell(F13, 3, 2)) exact += x.conductor_degree() == d;
      CHECK(mpz_class(static_cast<unsigned long>(exact)) == count_order_ell_exact(13, 3, d));
    }
  }

  TEST_CASE("invalid characters") {
    const Field F7 = Field::make(7);
    CHECK_THROWS_AS(DirichletChar(3, F7, {}), PreconditionError);
    CHECK_THROWS_AS(DirichletChar(3, F7, {{Poly::variable(F7), 3}}), PreconditionError);
    CHECK_THROWS_AS(DirichletChar(3, F7, {{Poly::variable(F7), 1}, {Poly::variable(F7), 2}}), PreconditionError);
    CHECK_THROWS_AS(DirichletChar(3, F7, {{Poly(F7, {0, 2}), 1}}), PreconditionError);
    CHECK_THROWS_AS(DirichletChar(5, F7, {{Poly::variable(F7), 1}}), PreconditionError);
  }
}
