// hecke-walks: command-line front end.
//
// Exit codes: 0 success, 1 verification failure or runtime error, 2 bad input.

#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "hecke_walks/serialize.hpp"
#include "hecke_walks/svg.hpp"
#include "hecke_walks/verify.hpp"

using namespace hw;

namespace {

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Config {
  std::string type = "A";
  int rank = 1;
  std::string flavor = "adjoint";
  std::string coroots;
  std::string L;
  std::string orientation = "standard";
  std::string format;  // empty: the command's default
  std::uint64_t seed = 1;
  std::size_t budget = 0;

  std::string word;
  std::string lambda;
  std::string walk;
  std::string output;
  int i = 1;
  int omega = 0;
  int length = 6;
  bool tilde = false;
  bool show_phi = false;
  bool timing = false;

  SuiteOptions suite;
};

void add_common(CLI::App* c, Config& cfg) {
  c->add_option("--type", cfg.type, "Cartan type A-G")->capture_default_str();
  c->add_option("--rank", cfg.rank, "rank")->capture_default_str();
  c->add_option("--flavor", cfg.flavor, "adjoint | simply_connected | explicit")->capture_default_str();
  c->add_option("--coroots", cfg.coroots, "explicit coroot matrix, rows separated by ';' (columns are coroots)");
  c->add_option("--L", cfg.L, "parameters L_0,...,L_r (default all 1)");
  c->add_option("--orientation", cfg.orientation,
                "standard | chamber:<word> | alcove-neg:<word> | alcove-pos:<word>")
      ->capture_default_str();
  c->add_option("--format", cfg.format, "text | json | svg (psi and theta default to json, svg to svg, others to text)");
  c->add_option("--seed", cfg.seed, "seed for randomised commands")->capture_default_str();
  c->add_option("--budget", cfg.budget, "term cap for Hecke elements (default HECKE_WALKS_BUDGET or 100000)");
}

std::vector<int> ints(const std::string& s) {
  std::vector<int> out;
  for (auto v : parse_int_list(s)) out.push_back(static_cast<int>(v));
  return out;
}

RootDatum make_datum(Config& cfg) {
  std::optional<IntMatrix> coroots;
  if (!cfg.coroots.empty()) {
    IntMatrix m;
    std::stringstream ss(cfg.coroots);
    std::string row;
    while (std::getline(ss, row, ';')) m.push_back(parse_int_list(row));
    coroots = m;
  }
  return RootDatum::build(parse_cartan_type(cfg.type), cfg.rank, parse_lattice_flavor(cfg.flavor), coroots);
}

HeckeAlgebra make_algebra(const Config& cfg, GroupPtr g) {
  ParameterSystem p = cfg.L.empty() ? ParameterSystem::equal(*g) : ParameterSystem{ints(cfg.L)};
  return HeckeAlgebra(g, p, cfg.budget ? cfg.budget : HeckeAlgebra::default_term_cap());
}

Coweight coweight(const Config& cfg, const RootDatum& d) {
  const auto v = parse_int_list(cfg.lambda);
  if (static_cast<int>(v.size()) != d.rank())
    throw std::invalid_argument("--lambda needs " + std::to_string(d.rank()) + " coordinates");
  return Coweight::from(v);
}

Word word_arg(const Config& cfg, const AffineWeylGroup& g) {
  Word w{ints(cfg.word), cfg.omega};
  for (int l : w.letters)
    if (l < 0 || l > g.rank()) throw std::invalid_argument("letter " + std::to_string(l) + " out of range");
  if (w.omega < 0 || w.omega >= static_cast<int>(g.omega().size()))
    throw std::invalid_argument("--omega out of range");
  return w;
}

std::string coweight_text(const RootDatum& d, const Coweight& c) {
  std::string s = "(";
  for (int k = 0; k < d.rank(); ++k) s += (k ? "," : "") + std::to_string(c[k]);
  return s + ")";
}

// The first allowed format is the default.
void require_format(Config& cfg, std::initializer_list<const char*> allowed) {
  if (cfg.format.empty()) cfg.format = *allowed.begin();
  for (const char* a : allowed)
    if (cfg.format == a) return;
  throw std::invalid_argument("--format " + cfg.format + " is not available for this command");
}

int cmd_datum(Config& cfg) {
  require_format(cfg, {"text", "json"});
  const auto g = AffineWeylGroup::make(make_datum(cfg));
  const RootDatum& d = g->datum();
  const auto classes = simple_conjugacy_classes(*g);
  if (cfg.format == "json") {
    json j = to_json(d);
    j["cartan"] = d.cartan();
    j["positive_roots"] = d.num_positive_roots();
    j["coxeter_number"] = d.coxeter_number();
    j["omega_order"] = g->omega().size();
    j["conjugacy_classes"] = classes;
    std::cout << j.dump(2) << "\n";
    return 0;
  }
  std::cout << "datum " << d.label() << " " << to_string(d.flavor()) << "\n";
  std::cout << "positive roots " << d.num_positive_roots() << ", Coxeter number " << d.coxeter_number()
            << ", |Omega| " << g->omega().size() << "\n";
  std::cout << "coroot matrix\n";
  for (const auto& row : d.coroot_matrix()) {
    std::cout << " ";
    for (auto x : row) std::cout << " " << x;
    std::cout << "\n";
  }
  std::cout << "conjugacy classes of s_0..s_r:";
  for (const auto& c : classes) {
    std::cout << " {";
    for (std::size_t k = 0; k < c.size(); ++k) std::cout << (k ? "," : "") << c[k];
    std::cout << "}";
  }
  std::cout << "\n";
  return 0;
}

int cmd_word(Config& cfg) {
  require_format(cfg, {"text", "json"});
  const auto g = AffineWeylGroup::make(make_datum(cfg));
  const Word w = word_arg(cfg, *g);
  const Orientation o = parse_orientation(*g, cfg.orientation);
  const AffineElement x = g->evaluate(w);
  const Word red = g->reduced_word(x);
  const auto signs = crossing_signs(*g, w.letters, o);
  std::vector<Hyperplane> walls;
  AffineElement cur = g->identity();
  for (int l : w.letters) {
    walls.push_back(wall(*g, cur, l));
    cur = g->right_reflect(cur, l);
  }
  if (cfg.format == "json") {
    json j{{"element", to_json(*g, x)},
           {"length", g->length(x)},
           {"reduced_word", to_json(red)},
           {"orientation", describe(*g, o)},
           {"signs", signs}};
    json hs = json::array();
    for (const auto& h : walls) hs.push_back(to_json(g->datum(), h));
    j["walls"] = hs;
    std::cout << j.dump(2) << "\n";
    return 0;
  }
  std::cout << "element " << g->describe(x) << " length " << g->length(x) << "\n";
  std::cout << "orientation " << describe(*g, o) << "\n";
  for (std::size_t k = 0; k < w.letters.size(); ++k)
    std::cout << "  s_" << w.letters[k] << " crosses " << to_string(g->datum(), walls[k]) << " sign "
              << (signs[k] > 0 ? "+" : "-") << "\n";
  return 0;
}

void print_element(const Config& cfg, const HeckeAlgebra& H, const HeckeElement& x) {
  if (cfg.format == "json")
    std::cout << to_json(H, x).dump(2) << "\n";
  else
    std::cout << H.to_string(x) << "\n";
}

int cmd_psi(Config& cfg) {
  require_format(cfg, {"json", "text"});
  const auto g = AffineWeylGroup::make(make_datum(cfg));
  const HeckeAlgebra H = make_algebra(cfg, g);
  print_element(cfg, H, psi(H, word_arg(cfg, *g), parse_orientation(*g, cfg.orientation), std::nullopt, cfg.tilde));
  return 0;
}

int cmd_theta(Config& cfg) {
  require_format(cfg, {"json", "text"});
  const auto g = AffineWeylGroup::make(make_datum(cfg));
  const HeckeAlgebra H = make_algebra(cfg, g);
  print_element(cfg, H, theta(H, coweight(cfg, g->datum()), parse_orientation(*g, cfg.orientation)));
  return 0;
}

int cmd_bernstein(Config& cfg) {
  require_format(cfg, {"text", "json"});
  const auto g = AffineWeylGroup::make(make_datum(cfg));
  const HeckeAlgebra H = make_algebra(cfg, g);
  if (cfg.i < 1 || cfg.i > g->rank()) throw std::invalid_argument("--i must be in 1..rank");
  const BernsteinReport r = verify_bernstein(H, cfg.i, coweight(cfg, g->datum()));
  if (cfg.format == "json") {
    std::cout << json{{"result", r.ok ? "PASS" : "FAIL"},
                      {"i", r.i},
                      {"lambda", r.lambda.to_vector(g->rank())},
                      {"pairing", r.pairing},
                      {"twice_case", r.twice_case},
                      {"L_even", r.L_even},
                      {"L_odd", r.L_odd},
                      {"lhs", to_json(H, r.lhs)},
                      {"rhs", to_json(H, r.rhs)}}
                     .dump(2)
              << "\n";
  } else {
    std::cout << (r.ok ? "PASS" : "FAIL") << " Bernstein relation i=" << r.i
              << " lambda=" << coweight_text(g->datum(), r.lambda) << " <alpha_i,lambda>=" << r.pairing
              << (r.twice_case ? " (alpha_i in 2X^*, L=" + std::to_string(r.L_even) + "/" + std::to_string(r.L_odd) + ")"
                               : "")
              << "\n";
    std::cout << "  t_i theta_lambda - theta_{s_i lambda} t_i = " << H.to_string(r.lhs) << "\n";
    if (!r.ok) std::cout << "  expected " << H.to_string(r.rhs) << "\n";
  }
  return r.ok ? 0 : 1;
}

int cmd_straighten(Config& cfg) {
  require_format(cfg, {"text", "json"});
  const auto g = AffineWeylGroup::make(make_datum(cfg));
  const HeckeAlgebra H = make_algebra(cfg, g);
  const Orientation o = parse_orientation(*g, cfg.orientation);
  const WalkWord x = parse_walk_word(cfg.walk);
  const WalkCombination comb = straighten(*g, x, o);
  const bool check = cfg.show_phi;
  bool ok = true;
  HeckeElement image;
  if (check) {
    image = phi(H, comb);
    ok = image == phi(H, x);
  }
  if (cfg.format == "json") {
    json terms = json::array();
    for (const auto& [w, c] : comb.terms) terms.push_back({{"walk", to_string(w)}, {"coeff", c}});
    json j{{"input", to_string(x)}, {"orientation", describe(*g, o)}, {"terms", terms}};
    if (check) {
      j["phi"] = to_json(H, image);
      j["phi_preserved"] = ok;
    }
    std::cout << j.dump(2) << "\n";
  } else {
    for (const auto& [w, c] : comb.terms) std::cout << (c < 0 ? "- " : "+ ") << (c < 0 ? -c : c) << " " << to_string(w) << "\n";
    if (check) std::cout << "Phi = " << H.to_string(image) << (ok ? "  (preserved)" : "  (CHANGED)") << "\n";
  }
  return ok ? 0 : 1;
}

int cmd_svg(Config& cfg) {
  require_format(cfg, {"svg"});
  const auto g = AffineWeylGroup::make(make_datum(cfg));
  if (g->rank() > 2) throw std::invalid_argument("svg needs rank <= 2");
  const Orientation o = parse_orientation(*g, cfg.orientation);
  const Walk w = cfg.walk.empty() ? random_walk(*g, o, cfg.length, cfg.seed) : Walk(*g, parse_walk_word(cfg.walk), o);
  const std::string svg = render_svg(*g, w);
  if (cfg.output.empty()) {
    std::cout << svg;
  } else {
    std::ofstream f(cfg.output);
    if (!f) throw std::runtime_error("cannot write " + cfg.output);
    f << svg;
  }
  return 0;
}

int cmd_selftest(Config& cfg) {
  require_format(cfg, {"text", "json"});
  const auto g = AffineWeylGroup::make(make_datum(cfg));
  const HeckeAlgebra H = make_algebra(cfg, g);
  SuiteOptions opt = cfg.suite;
  opt.seed = cfg.seed;
  const auto reports = run_selftest(H, opt);
  bool ok = true;
  for (const auto& r : reports) ok = ok && r.ok();
  if (cfg.format == "json") {
    json arr = json::array();
    for (const auto& r : reports) {
      json j{{"suite", r.name}, {"cases", r.cases}, {"failed", r.failed}, {"failures", r.failures}};
      if (cfg.timing) j["seconds"] = r.seconds;
      arr.push_back(j);
    }
    std::cout << json{{"datum", to_json(g->datum())}, {"params", H.params().L}, {"ok", ok}, {"suites", arr}}.dump(2)
              << "\n";
  } else {
    std::cout << "selftest " << g->datum().label() << " " << to_string(g->datum().flavor()) << " L=";
    for (std::size_t k = 0; k < H.params().L.size(); ++k) std::cout << (k ? "," : "") << H.params().L[k];
    std::cout << " seed=" << cfg.seed << "\n";
    for (const auto& r : reports) {
      std::cout << (r.ok() ? "PASS " : "FAIL ") << r.name << " cases=" << r.cases << " failed=" << r.failed;
      if (cfg.timing) std::cout << " seconds=" << r.seconds;
      std::cout << "\n";
      for (const auto& m : r.failures) std::cout << "  " << m << "\n";
    }
  }
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Affine Hecke algebras via alcove walks"};
  app.require_subcommand(1);
  Config cfg;

  auto* datum = app.add_subcommand("datum", "describe a root datum");
  auto* word = app.add_subcommand("word", "evaluate a word, its walls and crossing signs");
  auto* psi_c = app.add_subcommand("psi", "signed T-product along a word");
  auto* theta_c = app.add_subcommand("theta", "the element theta_lambda");
  auto* bern = app.add_subcommand("bernstein", "check the Bernstein relation for (i, lambda)");
  auto* str = app.add_subcommand("straighten", "rewrite a step word as a combination of walks");
  auto* svg = app.add_subcommand("svg", "draw a walk (rank <= 2)");
  auto* self = app.add_subcommand("selftest", "run every verification suite for the datum");
  for (auto* c : {datum, word, psi_c, theta_c, bern, str, svg, self}) add_common(c, cfg);

  for (auto* c : {word, psi_c}) {
    c->add_option("--word", cfg.word, "letters, e.g. 0,1,2")->required();
    c->add_option("--omega", cfg.omega, "Omega index appended to the word")->capture_default_str();
  }
  psi_c->add_flag("--tilde", cfg.tilde, "use T~_i = v^{-L_i} T_i");
  for (auto* c : {theta_c, bern}) c->add_option("--lambda", cfg.lambda, "coweight coordinates")->required();
  bern->add_option("--i", cfg.i, "simple reflection 1..r")->required();
  str->add_option("--walk", cfg.walk, "steps like \"c1- f0+ c2+ | tau1\"")->required();
  str->add_flag("--phi", cfg.show_phi, "also compare Phi before and after");
  svg->add_option("--walk", cfg.walk, "steps; random walk when omitted");
  svg->add_option("--length", cfg.length, "length of the random walk")->capture_default_str();
  svg->add_option("-o,--output", cfg.output, "write to a file instead of stdout");
  self->add_option("--max-length", cfg.suite.max_length, "element / gallery length")->capture_default_str();
  self->add_option("--random-words", cfg.suite.random_words, "perturbed words per element")->capture_default_str();
  self->add_option("--straighten-length", cfg.suite.straighten_length, "step words up to this length")
      ->capture_default_str();
  self->add_option("--box", cfg.suite.coweight_box, "coweight coordinates in [-box, box]")->capture_default_str();
  self->add_option("--samples", cfg.suite.oracle_samples, "random elements for the length oracle")
      ->capture_default_str();
  self->add_flag("--timing", cfg.timing, "report seconds per suite");
  bool serial = false;
  self->add_flag("--serial", serial, "run the serial reference instead of OpenMP");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }
  cfg.suite.parallel = !serial;

  try {
    if (*datum) return cmd_datum(cfg);
    if (*word) return cmd_word(cfg);
    if (*psi_c) return cmd_psi(cfg);
    if (*theta_c) return cmd_theta(cfg);
    if (*bern) return cmd_bernstein(cfg);
    if (*str) return cmd_straighten(cfg);
    if (*svg) return cmd_svg(cfg);
    if (*self) return cmd_selftest(cfg);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
