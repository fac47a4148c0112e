#include "hecke_walks/serialize.hpp"

#include <stdexcept>
#include <string>

namespace hw {

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw std::invalid_argument("malformed JSON: " + what);
}

json vec_json(const Vec& v, int n) {
  json a = json::array();
  for (int k = 0; k < n; ++k) a.push_back(v[k]);
  return a;
}

std::vector<std::int64_t> int_array(const json& j, std::size_t n, const std::string& what) {
  require(j.is_array() && j.size() == n, what + " must be an array of length " + std::to_string(n));
  std::vector<std::int64_t> out;
  for (const auto& x : j) {
    require(x.is_number_integer(), what + " entries must be integers");
    out.push_back(x.get<std::int64_t>());
  }
  return out;
}

}  // namespace

json to_json(const RootDatum& d) {
  return {{"type", to_string(d.type())},
          {"rank", d.rank()},
          {"flavor", to_string(d.flavor())},
          {"coroots", d.coroot_matrix()}};
}

RootDatum datum_from_json(const json& j) {
  require(j.is_object() && j.contains("type") && j.contains("rank") && j.contains("flavor"), "datum");
  const auto type = parse_cartan_type(j.at("type").get<std::string>());
  const int rank = j.at("rank").get<int>();
  const auto flavor = parse_lattice_flavor(j.at("flavor").get<std::string>());
  std::optional<IntMatrix> coroots;
  if (flavor == LatticeFlavor::explicit_basis) {
    require(j.contains("coroots"), "explicit datum needs coroots");
    coroots = j.at("coroots").get<IntMatrix>();
  }
  RootDatum d = RootDatum::build(type, rank, flavor, coroots);
  if (j.contains("coroots")) require(j.at("coroots").get<IntMatrix>() == d.coroot_matrix(), "coroot matrix mismatch");
  return d;
}

json to_json(const Word& w) { return {{"letters", w.letters}, {"omega", w.omega}}; }

Word word_from_json(const AffineWeylGroup& g, const json& j) {
  require(j.is_object() && j.contains("letters"), "word");
  Word w;
  w.letters = j.at("letters").get<std::vector<int>>();
  w.omega = j.value("omega", 0);
  for (int l : w.letters) require(l >= 0 && l <= g.rank(), "letter out of range");
  require(w.omega >= 0 && w.omega < static_cast<int>(g.omega().size()), "omega index out of range");
  return w;
}

json to_json(const RootDatum& d, const Hyperplane& h) {
  return {{"root", vec_json(d.root_coords(h.alpha), d.rank())}, {"level", h.level}};
}

Hyperplane hyperplane_from_json(const RootDatum& d, const json& j) {
  require(j.is_object() && j.contains("root") && j.contains("level"), "hyperplane");
  const auto c = int_array(j.at("root"), static_cast<std::size_t>(d.rank()), "root");
  Vec v{};
  for (int k = 0; k < d.rank(); ++k) v[k] = static_cast<std::int32_t>(c[k]);
  const auto id = d.root_from_coords(v);
  require(id.has_value(), "not a root");
  return Hyperplane::normalized(d, *id, j.at("level").get<std::int64_t>());
}

json to_json(const AffineWeylGroup& g, const AffineElement& x) {
  return {{"lambda", x.lambda.to_vector(g.rank())}, {"w_matrix", g.finite_matrix(x)}, {"omega", g.omega_class(x)}};
}

AffineElement element_from_json(const AffineWeylGroup& g, const json& j) {
  require(j.is_object() && j.contains("lambda") && j.contains("w_matrix"), "element");
  const auto r = static_cast<std::size_t>(g.rank());
  const auto lambda = int_array(j.at("lambda"), r, "lambda");
  const auto& m = j.at("w_matrix");
  require(m.is_array() && m.size() == r, "w_matrix");
  IntMatrix w;
  for (const auto& row : m) w.push_back(int_array(row, r, "w_matrix row"));
  const AffineElement x = g.multiply(g.finite_from_matrix(w), g.translation(Coweight::from(lambda)));
  if (j.contains("omega")) require(j.at("omega").get<int>() == g.omega_class(x), "omega class mismatch");
  return x;
}

json to_json(const LaurentPoly& p) {
  json o = json::object();
  for (const auto& [e, c] : p.to_map()) o[std::to_string(e)] = c;
  return o;
}

LaurentPoly laurent_from_json(const json& j) {
  require(j.is_object(), "coefficient must be an object");
  std::map<int, std::int64_t> m;
  for (const auto& [k, c] : j.items()) {
    std::size_t used = 0;
    int e = 0;
    try {
      e = std::stoi(k, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    require(used == k.size() && !k.empty(), "exponent key '" + k + "'");
    require(c.is_number_integer(), "coefficient value");
    m[e] += c.get<std::int64_t>();
  }
  return LaurentPoly::from_map(m);
}

json to_json(const AffineWeylGroup& g, const Walk& w) {
  json steps = json::array();
  for (const auto& s : w.word().steps) steps.push_back(to_string(s));
  return {{"steps", steps},
          {"omega", w.word().omega},
          {"orientation", describe(g, w.orientation())},
          {"start", to_json(g, w.start())},
          {"end", to_json(g, w.end())}};
}

Walk walk_from_json(const AffineWeylGroup& g, const json& j) {
  require(j.is_object() && j.contains("steps"), "walk");
  WalkWord word;
  for (const auto& s : j.at("steps")) word.steps.push_back(parse_step(s.get<std::string>()));
  word.omega = j.value("omega", 0);
  require(word.omega >= 0 && word.omega < static_cast<int>(g.omega().size()), "omega index out of range");
  const Orientation o = parse_orientation(g, j.value("orientation", std::string("standard")));
  std::optional<AffineElement> start;
  if (j.contains("start")) start = element_from_json(g, j.at("start"));
  Walk w(g, word, o, start);
  if (j.contains("end")) require(element_from_json(g, j.at("end")) == w.end(), "end point mismatch");
  return w;
}

json to_json(const HeckeAlgebra& H, const HeckeElement& x) {
  json terms = json::array();
  for (const auto& [w, c] : H.sorted_terms(x)) terms.push_back({{"element", to_json(H.group(), w)}, {"coeff", to_json(c)}});
  return {{"basis", "T"}, {"params", H.params().L}, {"terms", terms}};
}

HeckeElement hecke_from_json(const HeckeAlgebra& H, const json& j) {
  require(j.is_object() && j.value("basis", std::string()) == "T", "basis must be \"T\"");
  require(j.contains("params") && j.at("params").get<std::vector<int>>() == H.params().L, "parameter mismatch");
  require(j.contains("terms") && j.at("terms").is_array(), "terms");
  HeckeElement x;
  for (const auto& t : j.at("terms")) {
    require(t.contains("element") && t.contains("coeff"), "term");
    x.add_term(element_from_json(H.group(), t.at("element")), laurent_from_json(t.at("coeff")));
  }
  return x;
}

}  // namespace hw
