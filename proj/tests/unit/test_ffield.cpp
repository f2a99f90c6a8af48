#include <doctest.h>

#include <random>
#include <set>

#include "superell/errors.hpp"
#include "superell/ffield.hpp"
#include "superell/polyring.hpp"

using namespace superell;

namespace {

// Order of a in F^* by repeated multiplication.
std::uint64_t brute_order(const Field& f, Elem a) {
  Elem x = a;
  std::uint64_t k = 1;
  while (x != 1) {
    x = f.mul(x, a);
    ++k;
  }
  return k;
}

// Monic x^2 + b x + c over F_p is irreducible iff it has no root.
bool quadratic_irreducible(std::uint64_t p, std::uint64_t b, std::uint64_t c) {
  for (std::uint64_t x = 0; x < p; ++x) {
    if ((x * x + b * x + c) % p == 0) return false;
  }
  return true;
}

}  // namespace

TEST_SUITE("ffield") {
  TEST_CASE("prime fields") {
    const Field F5 = Field::make(5);
    CHECK(F5.size() == 5);
    CHECK(F5.is_prime_field());
    CHECK(F5.modulus() == std::vector<Elem>{0, 1});
    CHECK(Field::make(7).size() == 7);
    CHECK(F5.mul(3, 4) == 2);
    CHECK(F5.inv(2) == 3);
    CHECK(F5.from_int(-1) == 4);
  }

  TEST_CASE("canonical quadratic modulus over F_5") {
    const Field F25 = Field::make(5, 2);
    CHECK(F25.size() == 25);
    CHECK(F25.modulus() == std::vector<Elem>{2, 0, 1});
    // Smallest irreducible in the (c, b) order, low coefficient first.
    std::vector<Elem> first;
    for (std::uint64_t idx = 0; idx < 25; ++idx) {
      const std::uint64_t c = idx % 5, b = idx / 5;
      if (quadratic_irreducible(5, b, c)) {
        first = {c, b, 1};
        break;
      }
    }
    CHECK(F25.modulus() == first);
  }

  TEST_CASE("moduli are irreducible and reproducible") {
    for (auto [p, e] : std::vector<std::pair<std::uint64_t, unsigned>>{{2, 3}, {3, 4}, {5, 3}, {7, 2}, {11, 2}}) {
      const Field F = Field::make(p, e);
      const Field G = Field::make(p, e);
      CHECK(F.modulus() == G.modulus());
      CHECK(F.key() == G.key());
      const Field Fp = Field::make(p);
      CHECK(is_irreducible(Poly(Fp, F.modulus())));
    }
  }

  TEST_CASE("primitive roots") {
    CHECK(Field::make(5).primitive_root() == 2);
    CHECK(Field::make(7).primitive_root() == 3);
    CHECK(Field::make(2).primitive_root() == 1);
    for (auto [p, e] : std::vector<std::pair<std::uint64_t, unsigned>>{{3, 2}, {5, 2}, {7, 2}, {2, 4}, {3, 3}, {13, 1}}) {
      const Field F = Field::make(p, e);
      const Elem g = F.primitive_root();
      CHECK(brute_order(F, g) == F.size() - 1);
      for (Elem a = 1; a < g; ++a) CHECK(brute_order(F, a) < F.size() - 1);
    }
  }

  TEST_CASE("field axioms and Frobenius on small fields") {
    for (auto [p, e] : std::vector<std::pair<std::uint64_t, unsigned>>{{5, 2}, {3, 3}, {2, 5}, {7, 2}}) {
      const Field F = Field::make(p, e);
      const std::uint64_t q = F.size();
      for (Elem a = 0; a < q; ++a) {
        CHECK(F.pow(a, q) == a);
        if (a != 0) CHECK(F.mul(a, F.inv(a)) == 1);
        CHECK(F.add(a, F.neg(a)) == 0);
        CHECK(F.pow(F.pth_root(a), p) == a);
        for (Elem b = 0; b < q; ++b) {
          CHECK(F.pow(F.add(a, b), p) == F.add(F.pow(a, p), F.pow(b, p)));
          CHECK(F.mul(a, b) == F.mul(b, a));
        }
      }
    }
  }

  TEST_CASE("distributivity on random triples") {
    const Field F = Field::make(3, 7);
    std::mt19937_64 rng(3);
    std::uniform_int_distribution<Elem> d(0, F.size() - 1);
    for (int i = 0; i < 1000; ++i) {
      const Elem a = d(rng), b = d(rng), c = d(rng);
      CHECK(F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c)));
      CHECK(F.mul(F.mul(a, b), c) == F.mul(a, F.mul(b, c)));
    }
  }

  TEST_CASE("tower extensions") {
    const Field F5 = Field::make(5);
    CHECK(F5.extend(1).size() == 5);
    const Field F25 = F5.extend(2);
    CHECK(F25.size() == 25);
    for (Elem a = 0; a < 5; ++a) CHECK(F25.pow(a, 25) == a);
    CHECK(F25.contains(F5));

    const Field F625 = Field::make(5, 2).extend(2);
    CHECK(F625.size() == 625);
    CHECK(F625.tower_degrees() == std::vector<unsigned>{2, 2});
    CHECK(F625.contains(Field::make(5, 2)));
    // Subfield elements keep their index and their arithmetic.
    const Field base = Field::make(5, 2);
    for (Elem a = 0; a < 25; ++a) {
      CHECK(F625.pow(a, 25) == a);
      for (Elem b = 0; b < 25; ++b) CHECK(F625.mul(a, b) == base.mul(a, b));
    }
    std::mt19937_64 rng(1);
    std::uniform_int_distribution<Elem> d(0, 624);
    for (int i = 0; i < 100; ++i) {
      const Elem x = d(rng);
      CHECK(F625.pow(x, 625) == x);
    }
    CHECK(Field::make(3).extend(2).extend(3).size() == 729);
  }

  TEST_CASE("descriptor round trip") {
    const Field F = Field::make(5, 2).extend(3);
    const Field G = Field::from_descriptor(F.descriptor());
    CHECK(F == G);
    CHECK(G.size() == 15625);
  }

  TEST_CASE("log and power classes") {
    const Field F = Field::make(7, 2);
    const Elem g = F.primitive_root();
    for (std::uint64_t k = 0; k < 48; ++k) CHECK(F.log(F.pow(g, k)) == k);
    std::set<Elem> cubes;
    for (Elem a = 1; a < 49; ++a) cubes.insert(F.pow(a, 3));
    for (Elem a = 1; a < 49; ++a) CHECK(F.is_power(a, 3) == (cubes.count(a) == 1));
  }

  TEST_CASE("invalid input") {
    CHECK_THROWS_AS(Field::make(9), PreconditionError);
    CHECK_THROWS(Field::make(2, 41));
  }
}
