#include <random>

#include "doctest.h"
#include "hecke_walks/serialize.hpp"
#include "hecke_walks/svg.hpp"
#include "xml_check.hpp"

using namespace hw;

namespace {

GroupPtr group(CartanType t, int n, LatticeFlavor f = LatticeFlavor::adjoint) {
  return AffineWeylGroup::make(RootDatum::build(t, n, f));
}

HeckeElement random_hecke(const HeckeAlgebra& H, std::mt19937_64& rng) {
  const auto& g = H.group();
  std::uniform_int_distribution<int> terms(0, 6), len(0, 8), letter(0, g.rank()), e(-4, 4), c(-9, 9);
  std::uniform_int_distribution<std::size_t> om(0, g.omega().size() - 1);
  HeckeElement x;
  for (int t = terms(rng); t > 0; --t) {
    std::vector<int> l;
    for (int n = len(rng); n > 0; --n) l.push_back(letter(rng));
    x.add_term(g.multiply(g.evaluate_letters(l), g.omega()[om(rng)].element),
               LaurentPoly::monomial(e(rng), c(rng)) + LaurentPoly::monomial(e(rng), c(rng)));
  }
  return x;
}

}  // namespace

TEST_CASE("xml checker") {
  CHECK(xml::check("<a><b x=\"1\"/>t &amp; u</a>").empty());
  CHECK(xml::check("<?xml version=\"1.0\"?>\n<a/>\n").empty());
  CHECK_FALSE(xml::check("<a><b></a>").empty());
  CHECK_FALSE(xml::check("<a x=1/>").empty());
  CHECK_FALSE(xml::check("<a>&nope;</a>").empty());
  CHECK_FALSE(xml::check("<a/><b/>").empty());
  CHECK_FALSE(xml::check("<a x=\"1\" x=\"2\"/>").empty());
}

TEST_CASE("json: datum, word, hyperplane, element") {
  for (auto f : {LatticeFlavor::adjoint, LatticeFlavor::simply_connected}) {
    const auto g = group(CartanType::C, 2, f);
    const auto& d = g->datum();
    const RootDatum back = datum_from_json(to_json(d));
    CHECK(back.fingerprint() == d.fingerprint());

    const Word w{{0, 2, 1}, static_cast<int>(g->omega().size()) - 1};
    CHECK(word_from_json(*g, to_json(w)) == w);
    CHECK_THROWS_AS(word_from_json(*g, json{{"letters", {0, 7}}}), std::invalid_argument);

    const Hyperplane h = wall(*g, g->evaluate_letters({0, 1, 2}), 0);
    CHECK(hyperplane_from_json(d, to_json(d, h)) == h);

    std::mt19937_64 rng(2);
    for (int t = 0; t < 20; ++t) {
      std::vector<int> l;
      for (int k = 0; k < 9; ++k) l.push_back(static_cast<int>(rng() % 3));
      const auto x = g->multiply(g->evaluate_letters(l), g->omega().back().element);
      CHECK(element_from_json(*g, to_json(*g, x)) == x);
    }
  }
  const auto g = group(CartanType::A, 2);
  json bad = to_json(*g, g->simple_reflection(1));
  bad["w_matrix"] = {{2, 0}, {0, 1}};
  CHECK_THROWS_AS(element_from_json(*g, bad), std::invalid_argument);
  bad = to_json(*g, g->simple_reflection(1));
  bad["omega"] = 2;
  CHECK_THROWS_AS(element_from_json(*g, bad), std::invalid_argument);
}

TEST_CASE("json: Hecke elements round-trip byte for byte") {
  HeckeAlgebra H(group(CartanType::C, 2, LatticeFlavor::simply_connected), ParameterSystem{{3, 2, 1}});
  std::mt19937_64 rng(41);
  for (int t = 0; t < 100; ++t) {
    const auto x = random_hecke(H, rng);
    const json j = to_json(H, x);
    CHECK(j.at("basis") == "T");
    const auto y = hecke_from_json(H, json::parse(j.dump()));
    CHECK(y == x);
    CHECK(to_json(H, y).dump() == j.dump());
  }
  const auto s1 = H.group().simple_reflection(1);
  const json j = to_json(H, H.T(s1).scaled(LaurentPoly::monomial(-2, 3)));
  CHECK(j.at("terms")[0].at("coeff") == json{{"-2", 3}});
  HeckeAlgebra H2(group(CartanType::C, 2, LatticeFlavor::simply_connected));
  CHECK_THROWS_AS(hecke_from_json(H2, j), std::invalid_argument);
  json broken = j;
  broken["terms"][0]["coeff"] = json{{"x", 1}};
  CHECK_THROWS_AS(hecke_from_json(H, broken), std::invalid_argument);
}

TEST_CASE("json: walks") {
  const auto g = group(CartanType::A, 2);
  for (const auto& o : {Orientation::standard(), Orientation::alcove_negative(g->evaluate_letters({0, 1}))}) {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
      const Walk w = random_walk(*g, o, 7, seed);
      const Walk back = walk_from_json(*g, to_json(*g, w));
      CHECK(back.word() == w.word());
      CHECK(back.orientation() == w.orientation());
      CHECK(back.end() == w.end());
    }
  }
  // The base alcove is on the positive side of H_{alpha_1, 0}.
  CHECK_THROWS_AS(walk_from_json(*g, json{{"steps", {"c1+"}}}), std::invalid_argument);
  CHECK_NOTHROW(walk_from_json(*g, json{{"steps", {"c1-", "c1+"}}}));
}

TEST_CASE("svg: well-formed for random walks") {
  for (auto [t, n, f] : {std::tuple{CartanType::A, 2, LatticeFlavor::adjoint},
                         std::tuple{CartanType::C, 2, LatticeFlavor::simply_connected},
                         std::tuple{CartanType::G, 2, LatticeFlavor::adjoint},
                         std::tuple{CartanType::A, 1, LatticeFlavor::simply_connected}}) {
    const auto g = group(t, n, f);
    for (std::uint64_t seed = 0; seed < 8; ++seed) {
      const Walk w = random_walk(*g, Orientation::standard(), 1 + static_cast<int>(seed), seed);
      const std::string svg = render_svg(*g, w);
      CHECK_MESSAGE(xml::check(svg).empty(), xml::check(svg));
      CHECK(svg.find("<svg") != std::string::npos);
      CHECK(svg.find("id=\"hyperplanes\"") != std::string::npos);
    }
  }
  const auto b3 = group(CartanType::B, 3);
  CHECK_THROWS_AS(render_svg(*b3, random_walk(*b3, Orientation::standard(), 2, 0)), std::invalid_argument);

  // Same walk, same picture.
  const auto g = group(CartanType::A, 2);
  const Walk w = random_walk(*g, Orientation::standard(), 6, 3);
  CHECK(render_svg(*g, w) == render_svg(*g, w));
}
