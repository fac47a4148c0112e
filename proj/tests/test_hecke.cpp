#include <random>
#include <unordered_map>

#include "doctest.h"
#include "hecke_walks/hecke.hpp"

using namespace hw;

namespace {

GroupPtr group(CartanType t, int n, LatticeFlavor f = LatticeFlavor::adjoint) {
  return AffineWeylGroup::make(RootDatum::build(t, n, f));
}

LaurentPoly v(int k, std::int64_t c = 1) { return LaurentPoly::monomial(k, c); }
LaurentPoly k(std::int64_t c) { return LaurentPoly::constant(c); }

AffineElement random_element(const AffineWeylGroup& g, std::mt19937_64& rng, int max_letters) {
  std::uniform_int_distribution<int> len(0, max_letters), letter(0, g.rank());
  std::uniform_int_distribution<std::size_t> om(0, g.omega().size() - 1);
  std::vector<int> l;
  for (int n = len(rng); n > 0; --n) l.push_back(letter(rng));
  return g.multiply(g.evaluate_letters(l), g.omega()[om(rng)].element);
}

LaurentPoly random_poly(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> e(-3, 3), c(-4, 4), n(1, 3);
  LaurentPoly p;
  for (int t = n(rng); t > 0; --t) p += v(e(rng), c(rng));
  return p;
}

HeckeElement random_hecke(const HeckeAlgebra& H, std::mt19937_64& rng, int terms, int max_letters) {
  HeckeElement x;
  for (int t = 0; t < terms; ++t) x.add_term(random_element(H.group(), rng, max_letters), random_poly(rng));
  return x;
}

// Specialisation v = 1: the Hecke algebra becomes the group algebra.
using GroupAlgebra = std::unordered_map<AffineElement, std::int64_t, AffineElementHash>;

GroupAlgebra at_one(const HeckeElement& x) {
  GroupAlgebra r;
  for (const auto& [w, c] : x.terms())
    if (c.at_one() != 0) r[w] += c.at_one();
  return r;
}

GroupAlgebra group_product(const AffineWeylGroup& g, const GroupAlgebra& a, const GroupAlgebra& b) {
  GroupAlgebra r;
  for (const auto& [x, c] : a)
    for (const auto& [y, d] : b) r[g.multiply(x, y)] += c * d;
  std::erase_if(r, [](const auto& kv) { return kv.second == 0; });
  return r;
}

}  // namespace

TEST_CASE("laurent: arithmetic and printing") {
  CHECK(LaurentPoly{}.to_string() == "0");
  CHECK((v(2) - k(1) + v(-1, 3)).to_string() == "v^2 - 1 + 3*v^-1");
  CHECK((-v(1)).to_string() == "-v");
  CHECK(LaurentPoly::vdiff(2) == v(2) - v(-2));
  CHECK((v(1) - v(-1)) * (v(1) + v(-1)) == v(2) - v(-2));
  CHECK((v(3) - v(3)).is_zero());
  CHECK(v(-2, -1).as_unit() == std::make_pair(-2, -1));
  CHECK_FALSE((v(0) + v(1)).as_unit());
  CHECK((v(5, 2) + v(-1, 3)).at_one() == 5);
  CHECK(LaurentPoly::from_map({{-1, 2}, {3, -1}}).to_map() == std::map<int, std::int64_t>{{-1, 2}, {3, -1}});
  CHECK(v(2).shifted(-3, 5) == v(-1, 5));

  std::mt19937_64 rng(3);
  for (int t = 0; t < 200; ++t) {
    const auto a = random_poly(rng), b = random_poly(rng), c = random_poly(rng);
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * b == b * a);
    CHECK(a - a == LaurentPoly{});
  }
  CHECK_THROWS_AS(v(0, INT64_MAX) + v(0, 1), std::overflow_error);
}

TEST_CASE("hecke: quadratic relations and small products") {
  SUBCASE("A1 equal parameters") {
    HeckeAlgebra H(group(CartanType::A, 1));
    const auto& g = H.group();
    const auto s1 = g.simple_reflection(1), s0 = g.simple_reflection(0);
    // T_1 T_1 = q + (q - 1) T_1
    HeckeElement expected = H.scalar(v(2));
    expected.add_term(s1, v(2) - k(1));
    CHECK(H.mul(H.T(s1), H.T(s1)) == expected);
    CHECK(H.mul(H.T(s0), H.T(s1)) == H.T(g.multiply(s0, s1)));
    CHECK(H.mul(H.T(s1), H.t_inverse(1)) == H.one());
    CHECK(H.mul(H.t_inverse(0), H.T(s0)) == H.one());
    // T_1^{-1} = q^{-1} T_1 + (q^{-1} - 1)
    HeckeElement inv = H.scalar(v(-2) - k(1));
    inv.add_term(s1, v(-2));
    CHECK(H.t_inverse(1) == inv);
    CHECK(H.to_string(H.T(s1)) == "(1)*T" + g.describe(s1));
  }

  SUBCASE("unequal parameters in C2") {
    for (auto L : {std::vector<int>{3, 2, 1}, std::vector<int>{1, 2, 1}}) {
      HeckeAlgebra H(group(CartanType::C, 2, LatticeFlavor::simply_connected), ParameterSystem{L});
      const auto& g = H.group();
      for (int i = 0; i <= 2; ++i) {
        const auto s = g.simple_reflection(i);
        HeckeElement expected = H.scalar(v(2 * L[i]));
        expected.add_term(s, v(2 * L[i]) - k(1));
        CHECK(H.mul(H.T(s), H.T(s)) == expected);
        CHECK(H.mul(H.Tt(s), H.product({{Factor::Kind::Tt_inv, i}})) == H.one());
      }
    }
  }
}

TEST_CASE("hecke: braid relations") {
  for (auto [t, n] : {std::pair{CartanType::A, 2}, std::pair{CartanType::C, 2}, std::pair{CartanType::G, 2},
                      std::pair{CartanType::B, 3}}) {
    HeckeAlgebra H(group(t, n));
    const auto& g = H.group();
    for (int i = 0; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j) {
        const int m = g.coxeter_m(i, j);
        if (m == 0) continue;
        std::vector<Factor> a, b;
        for (int r = 0; r < m; ++r) {
          a.push_back({Factor::Kind::T, r % 2 ? j : i});
          b.push_back({Factor::Kind::T, r % 2 ? i : j});
        }
        CHECK(H.product(a) == H.product(b));
      }
  }
}

TEST_CASE("hecke: length-additive products and Omega") {
  HeckeAlgebra H(group(CartanType::A, 2));
  const auto& g = H.group();
  std::mt19937_64 rng(11);
  int additive = 0;
  for (int t = 0; t < 300; ++t) {
    const auto x = random_element(g, rng, 6), y = random_element(g, rng, 6);
    const auto xy = g.multiply(x, y);
    if (g.length(xy) != g.length(x) + g.length(y)) continue;
    ++additive;
    CHECK(H.mul(H.T(x), H.T(y)) == H.T(xy));
  }
  CHECK(additive > 30);
  for (const auto& tau : g.omega()) {
    const auto x = random_element(g, rng, 6);
    CHECK(H.mul(H.T(tau.element), H.T(x)) == H.T(g.multiply(tau.element, x)));
    CHECK(H.mul(H.Tt(x), H.product(H.inverse_tilde_factors(x))) == H.one());
  }
}

TEST_CASE("hecke: specialisation at v = 1 is the group algebra") {
  for (auto f : {LatticeFlavor::adjoint, LatticeFlavor::simply_connected}) {
    HeckeAlgebra H(group(CartanType::C, 2, f));
    std::mt19937_64 rng(13);
    for (int t = 0; t < 40; ++t) {
      const auto a = random_hecke(H, rng, 3, 6), b = random_hecke(H, rng, 3, 6);
      CHECK(at_one(H.mul(a, b)) == group_product(H.group(), at_one(a), at_one(b)));
    }
  }
}

TEST_CASE("hecke: serial and parallel products agree; associativity") {
  HeckeAlgebra H(group(CartanType::G, 2, LatticeFlavor::adjoint));
  HeckeAlgebra H2(group(CartanType::C, 2, LatticeFlavor::simply_connected), ParameterSystem{{3, 2, 1}});
  for (const HeckeAlgebra* A : {&H, &H2}) {
    std::mt19937_64 rng(23);
    for (int t = 0; t < 25; ++t) {
      const auto a = random_hecke(*A, rng, 4, 7), b = random_hecke(*A, rng, 5, 7), c = random_hecke(*A, rng, 2, 5);
      const auto ab = A->mul_serial(a, b);
      CHECK(ab == A->mul_parallel(a, b));
      CHECK(A->mul(ab, c) == A->mul(a, A->mul(b, c)));
      CHECK(A->mul(a, b + c) == ab + A->mul(a, c));
    }
  }
}

TEST_CASE("hecke: term cap") {
  HeckeAlgebra H(group(CartanType::A, 2), ParameterSystem{{1, 1, 1}}, 3);
  const auto& g = H.group();
  std::vector<Factor> f;
  for (int i : {1, 2, 1}) f.push_back({Factor::Kind::T_inv, i});
  CHECK_THROWS_AS(H.product(f), std::length_error);
  CHECK_NOTHROW(H.product({{Factor::Kind::T, 1}, {Factor::Kind::T, 2}}));
  CHECK(H.T(g.identity()) == H.one());
}
