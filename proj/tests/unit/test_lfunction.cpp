#include <doctest.h>

#include "superell/errors.hpp"
#include "superell/lfunction.hpp"

using namespace superell;

namespace {

Poly lin(const Field& f, std::int64_t a) { return Poly(f, {f.from_int(a), 1}); }

// sum over monic g of degree n of chi(g), evaluated one polynomial at a time.
CycInt direct_sum(const DirichletChar& chi, unsigned n) {
  const Field& f = chi.field();
  std::uint64_t count = 1;
  for (unsigned i = 0; i < n; ++i) count *= f.size();
  std::vector<std::int64_t> hist(chi.ell(), 0);
  for (std::uint64_t i = 0; i < count; ++i) {
    const MuValue v = chi.eval(Poly::monic_from_index(f, n, i));
    if (!v.is_zero()) ++hist[v.exponent()];
  }
  return CycInt::from_exponent_counts(chi.ell(), hist);
}

LPoly synthetic(std::uint64_t p, unsigned e, unsigned ell, std::vector<CycInt> c) {
  LPoly L;
  L.p = p;
  L.e = e;
  L.q = 1;
  for (unsigned i = 0; i < e; ++i) L.q *= p;
  L.ell = ell;
  L.coeffs = std::move(c);
  return L;
}

CycInt Z(unsigned ell, long n) { return CycInt::from_integer(ell, n); }

}  // namespace

TEST_SUITE("lfunction") {
  TEST_CASE("linear conductor gives L = 1") {
    const Field F7 = Field::make(7);
    const DirichletChar chi(3, F7, {{Poly::variable(F7), 1}});
    const LPoly L = l_polynomial(chi);
    CHECK(L.degree() == 0);
    CHECK(L.coeffs[0] == Z(3, 1));
    const auto st = strip_trivial_factor(L, chi);
    CHECK_FALSE(st.k.has_value());
    CHECK(st.quotient == L);
  }

  TEST_CASE("coefficients against direct sums") {
    const Field F7 = Field::make(7), F13 = Field::make(13), F25 = Field::make(5, 2), F11 = Field::make(11);
    const std::vector<DirichletChar> chars{
        DirichletChar(3, F7, {{Poly::variable(F7), 1}, {lin(F7, -1), 2}}),
        DirichletChar(3, F7, {{Poly::variable(F7), 1}, {lin(F7, 1), 1}, {lin(F7, -1), 1}}),
        DirichletChar(3, F7, {{Poly(F7, {1, 0, 1}), 1}, {lin(F7, 2), 2}, {lin(F7, 4), 2}}, 1),
        DirichletChar(3, F13, {{lin(F13, 0), 1}, {lin(F13, 1), 1}, {lin(F13, 2), 2}, {lin(F13, 3), 2}}),
        DirichletChar(5, F11, {{lin(F11, 0), 1}, {lin(F11, 1), 2}, {lin(F11, 5), 3}}, 2),
        DirichletChar(3, F25, {{Poly(F25, {0, 1}), 1}, {Poly(F25, {1, 1}), 1}, {Poly(F25, {6, 1}), 1}}),
    };
    for (const auto& chi : chars) {
      const LPoly L = l_polynomial(chi, {true});
      CHECK(L.degree() <= static_cast<int>(chi.conductor_degree()) - 1);
      for (unsigned n = 0; n < chi.conductor_degree(); ++n) {
        const CycInt expect = direct_sum(chi, n);
        CHECK((static_cast<int>(n) <= L.degree() ? L.coeffs[n] : CycInt(chi.ell())) == expect);
      }
      // Orthogonality past the conductor degree.
      CHECK(direct_sum(chi, chi.conductor_degree()).is_zero());
      const auto hist = character_histogram(chi, chi.conductor_degree() - 1);
      for (unsigned n = 0; n < hist.size(); ++n) CHECK(CycInt::from_exponent_counts(chi.ell(), hist[n]) == direct_sum(chi, n));
    }
  }

  TEST_CASE("conductor t(t-1) even character") {
    const Field F7 = Field::make(7);
    const DirichletChar chi(3, F7, {{Poly::variable(F7), 1}, {lin(F7, -1), 2}});
    REQUIRE(chi.even());
    const LPoly L = l_polynomial(chi);
    CHECK(L.degree() <= 1);
    std::vector<std::int64_t> hist(3, 0);
    for (Elem a = 0; a < 7; ++a) {
      const MuValue v = chi.eval(Poly(F7, {a, 1}));
      if (!v.is_zero()) ++hist[v.exponent()];
    }
    CHECK(L.coeffs.at(1) == CycInt::from_exponent_counts(3, hist));
    const auto st = strip_trivial_factor(L, chi, chi.infinity_exponent());
    CHECK(st.quotient.degree() == 0);
  }

  TEST_CASE("stripping follows the degree law") {
    const Field F7 = Field::make(7);
    const DirichletChar chi(3, F7, {{Poly::variable(F7), 1}, {lin(F7, 1), 1}, {lin(F7, -1), 1}});
    REQUIRE(chi.even());
    const LPoly L = l_polynomial(chi);
    const auto st = strip_trivial_factor(L, chi, 0);
    REQUIRE(st.k.has_value());
    CHECK(st.quotient.degree() == 1);
    // Multiplying back recovers L.
    std::vector<CycInt> lin_factor{Z(3, 1), -mu_embed(3, *st.k)};
    CHECK(multiply(st.quotient.coeffs, lin_factor) == L.coeffs);
  }

  TEST_CASE("synthetic strip") {
    const Field F7 = Field::make(7);
    const DirichletChar chi(3, F7, {{Poly::variable(F7), 1}, {lin(F7, -1), 2}});
    const LPoly L = synthetic(7, 1, 3, {Z(3, 1), Z(3, -1)});
    const auto st = strip_trivial_factor(L, chi);
    REQUIRE(st.k.has_value());
    CHECK(*st.k == 0);
    CHECK(st.quotient.coeffs == std::vector<CycInt>{Z(3, 1)});
    const LPoly bad = synthetic(7, 1, 3, {Z(3, 1), Z(3, 2)});
    CHECK_THROWS_AS(strip_trivial_factor(bad, chi), InvariantViolation);
  }

  TEST_CASE("central value") {
    CHECK_FALSE(central_value_is_zero(synthetic(5, 2, 3, {Z(3, 1)})));
    CHECK(central_value_is_zero(synthetic(5, 2, 3, {Z(3, 1), Z(3, 0), Z(3, -25)})));
    CHECK_FALSE(central_value_is_zero(synthetic(5, 2, 3, {Z(3, 1), Z(3, 0), Z(3, 25)})));
    // Odd e: 1 - 7u^2 vanishes at u = 1/sqrt 7, 1 - 7u does not.
    CHECK(central_value_is_zero(synthetic(7, 1, 3, {Z(3, 1), Z(3, 0), Z(3, -7)})));
    CHECK_FALSE(central_value_is_zero(synthetic(7, 1, 3, {Z(3, 1), Z(3, -7)})));
    // (1 - sqrt(7^3) u)(1 + sqrt(7^3) u) = 1 - 343 u^2.
    CHECK(central_value_is_zero(synthetic(7, 3, 3, {Z(3, 1), Z(3, 0), Z(3, -343)})));
    CHECK_FALSE(central_value_is_zero(synthetic(7, 3, 3, {Z(3, 1), Z(3, 0), Z(3, -49)})));
  }

  TEST_CASE("dual L-function is the conjugate") {
    const Field F13 = Field::make(13);
    const DirichletChar chi(3, F13, {{lin(F13, 0), 1}, {lin(F13, 1), 1}, {lin(F13, 2), 2}, {Poly(F13, {2, 0, 1}), 1}});
    const LPoly L = l_polynomial(chi), Lbar = l_polynomial(dual_char(chi));
    REQUIRE(L.coeffs.size() == Lbar.coeffs.size());
    for (std::size_t i = 0; i < L.coeffs.size(); ++i) CHECK(Lbar.coeffs[i] == conjugate(L.coeffs[i]));
  }

  TEST_CASE("json round trip") {
    const Field F7 = Field::make(7);
    const DirichletChar chi(3, F7, {{Poly::variable(F7), 1}, {lin(F7, 1), 1}, {lin(F7, -1), 1}});
    const LPoly L = l_polynomial(chi);
    CHECK(LPoly::from_json(L.to_json()) == L);
  }
}
