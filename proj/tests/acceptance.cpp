// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.
// All comparisons are exact; the tolerance for every criterion is zero failed cases.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

#include "hecke_walks/serialize.hpp"
#include "hecke_walks/svg.hpp"
#include "hecke_walks/verify.hpp"
#include "xml_check.hpp"

#ifndef HECKE_WALKS_CLI
#error "HECKE_WALKS_CLI must point at the hecke-walks executable"
#endif

using namespace hw;

namespace {

constexpr std::size_t kMaxFailures = 0;

struct Datum {
  CartanType type;
  int rank;
  LatticeFlavor flavor;
};

GroupPtr group(const Datum& d) { return AffineWeylGroup::make(RootDatum::build(d.type, d.rank, d.flavor)); }

std::string name(const Datum& d) {
  return to_string(d.type) + std::to_string(d.rank) + "/" + to_string(d.flavor);
}

// Collects suite reports and ad hoc checks for one criterion.
struct Criterion {
  std::size_t cases = 0;
  std::size_t failed = 0;
  std::vector<std::string> notes;

  void add(const std::string& where, const SuiteReport& r) {
    cases += r.cases;
    failed += r.failed;
    for (const auto& f : r.failures)
      if (notes.size() < 10) notes.push_back(where + " " + r.name + ": " + f);
  }
  void check(bool ok, const std::string& what) {
    ++cases;
    if (ok) return;
    ++failed;
    if (notes.size() < 10) notes.push_back(what);
  }
};

bool report(int n, const std::string& title, const std::function<void(Criterion&)>& body) {
  Criterion c;
  const auto t0 = std::chrono::steady_clock::now();
  try {
    body(c);
  } catch (const std::exception& e) {
    c.check(false, std::string("exception: ") + e.what());
  }
  const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  const bool ok = c.failed <= kMaxFailures && c.cases > 0;
  std::printf("%s criterion %d: %s (cases=%zu, failed=%zu, tolerance=exact/%zu failures, %.1fs)\n",
              ok ? "PASS" : "FAIL", n, title.c_str(), c.cases, c.failed, kMaxFailures, s);
  for (const auto& m : c.notes) std::printf("    %s\n", m.c_str());
  std::fflush(stdout);
  return ok;
}

const Datum A1ad{CartanType::A, 1, LatticeFlavor::adjoint};
const Datum A1sc{CartanType::A, 1, LatticeFlavor::simply_connected};
const Datum A2ad{CartanType::A, 2, LatticeFlavor::adjoint};
const Datum C2ad{CartanType::C, 2, LatticeFlavor::adjoint};
const Datum C2sc{CartanType::C, 2, LatticeFlavor::simply_connected};

SuiteOptions full() { return SuiteOptions{}; }

HeckeElement random_hecke(const HeckeAlgebra& H, std::mt19937_64& rng) {
  const auto& g = H.group();
  std::uniform_int_distribution<int> terms(0, 8), len(0, 10), letter(0, g.rank()), e(-6, 6), c(-20, 20);
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

// Runs the CLI, returning its exit status and stdout.
std::pair<int, std::string> run_cli(const std::string& args) {
  const std::string cmd = std::string(HECKE_WALKS_CLI) + " " + args + " 2>&1";
  FILE* p = popen(cmd.c_str(), "r");
  if (!p) return {-1, ""};
  std::string out;
  char buf[4096];
  while (std::size_t n = std::fread(buf, 1, sizeof buf, p)) out.append(buf, n);
  const int st = pclose(p);
  return {WIFEXITED(st) ? WEXITSTATUS(st) : -1, out};
}

}  // namespace

int main() {
  bool all = true;

  all &= report(1, "Psi independent of the word in A1, A2, C2 under 3 orientations", [](Criterion& c) {
    const SuiteOptions opt = full();
    for (const Datum& d : {A1ad, A1sc, A2ad, C2ad, C2sc}) {
      const HeckeAlgebra H(group(d));
      c.add(name(d), suite_independence(H, default_orientations(H.group()), opt));
    }
  });

  all &= report(2, "Phi kernel, straightening and triangularity", [](Criterion& c) {
    const SuiteOptions opt = full();
    for (const Datum& d : {A1ad, A1sc, A2ad, C2ad, C2sc}) {
      const HeckeAlgebra H(group(d));
      c.add(name(d), suite_kernel(H, Orientation::standard(), opt));
    }
  });

  all &= report(3, "Bernstein presentation in A1 (both flavors), A2, C2", [](Criterion& c) {
    const SuiteOptions opt = full();
    for (const Datum& d : {A1ad, A1sc, A2ad, C2ad, C2sc}) {
      const HeckeAlgebra H(group(d));
      c.add(name(d), suite_bernstein(H, opt));
    }
  });

  all &= report(4, "unequal parameters in C2, L = (3,2,1) and (1,2,1)", [](Criterion& c) {
    const SuiteOptions opt = full();
    // Omega identifies s_0 with s_2 in the adjoint group, so (3,2,1) needs
    // the simply connected lattice; (1,2,1) also runs on the adjoint one.
    const auto ad = group(C2ad);
    bool rejected = false;
    try {
      HeckeAlgebra(ad, ParameterSystem{{3, 2, 1}});
    } catch (const std::invalid_argument&) {
      rejected = true;
    }
    c.check(rejected, "C2 adjoint accepted L=(3,2,1)");

    const auto sc = group(C2sc);
    c.check(simple_conjugacy_classes(*sc) == std::vector<std::vector<int>>{{0}, {1}, {2}},
            "C2 simply connected classes are not {0},{1},{2}");
    const std::vector<std::pair<GroupPtr, std::vector<int>>> runs{
        {sc, {3, 2, 1}}, {sc, {1, 2, 1}}, {ad, {1, 2, 1}}};
    for (const auto& [g, L] : runs) {
      const HeckeAlgebra H(g, ParameterSystem{L});
      std::string where = g->datum().label() + "/" + to_string(g->datum().flavor()) + " L=";
      for (int l : L) where += std::to_string(l);
      c.add(where, suite_parameters(H, opt));
      c.add(where, suite_independence(H, default_orientations(*g), opt));
      c.add(where, suite_bernstein(H, opt));
    }
  });

  all &= report(5, "minimal expressions for Theta and Theta^- in A2, C2", [](Criterion& c) {
    const SuiteOptions opt = full();
    for (const Datum& d : {A2ad, C2ad, C2sc}) {
      const HeckeAlgebra H(group(d));
      c.add(name(d), suite_minimal(H, opt));
    }
  });

  all &= report(6, "length, reduced word and root count oracles", [](Criterion& c) {
    const SuiteOptions opt = full();
    const std::vector<std::pair<Datum, int>> types{
        {{CartanType::A, 1, LatticeFlavor::adjoint}, 1}, {{CartanType::A, 2, LatticeFlavor::adjoint}, 3},
        {{CartanType::A, 3, LatticeFlavor::adjoint}, 6}, {{CartanType::B, 2, LatticeFlavor::adjoint}, 4},
        {{CartanType::C, 2, LatticeFlavor::adjoint}, 4}, {{CartanType::G, 2, LatticeFlavor::adjoint}, 6}};
    for (const auto& [d, roots] : types) {
      const auto g = group(d);
      c.check(g->datum().num_positive_roots() == roots, name(d) + " positive root count");
      c.add(name(d), suite_oracles(*g, opt));
    }
  });

  all &= report(7, "CLI selftest, JSON round trip, SVG validity", [](Criterion& c) {
    const std::vector<std::string> configured{
        "--type A --rank 1 --flavor adjoint",       "--type A --rank 1 --flavor simply_connected",
        "--type A --rank 2",                        "--type C --rank 2 --flavor adjoint",
        "--type C --rank 2 --flavor simply_connected", "--type C --rank 2 --flavor simply_connected --L 3,2,1",
        "--type B --rank 2",                        "--type G --rank 2"};
    for (const auto& args : configured) {
      const auto [code, out] = run_cli("selftest " + args);
      c.check(code == 0, "selftest " + args + " exited " + std::to_string(code));
    }
    const auto a = run_cli("selftest --type A --rank 2 --max-length 4 --seed 7 --format json");
    const auto b = run_cli("selftest --type A --rank 2 --max-length 4 --seed 7 --format json");
    c.check(a.first == 0 && a.second == b.second, "selftest output differs between identical seeds");
    c.check(run_cli("psi --type A --rank 1 --word 1,1 --omega 5").first == 2, "bad flag value did not exit 2");

    const HeckeAlgebra H(group(C2sc), ParameterSystem{{3, 2, 1}});
    std::mt19937_64 rng(2024);
    for (int t = 0; t < 100; ++t) {
      const HeckeElement x = random_hecke(H, rng);
      const std::string s = to_json(H, x).dump();
      const HeckeElement y = hecke_from_json(H, json::parse(s));
      c.check(y == x && to_json(H, y).dump() == s, "JSON round trip " + std::to_string(t));
    }

    const std::vector<Datum> rank2{A2ad, C2ad, {CartanType::G, 2, LatticeFlavor::adjoint}, {CartanType::B, 2, LatticeFlavor::simply_connected}};
    for (int t = 0; t < 20; ++t) {
      const auto g = group(rank2[t % rank2.size()]);
      const Walk w = random_walk(*g, Orientation::standard(), 4 + t % 5, 100 + t);
      const std::string err = xml::check(render_svg(*g, w));
      c.check(err.empty(), "SVG " + std::to_string(t) + ": " + err);
    }
  });

  std::printf("%s\n", all ? "ALL CRITERIA PASS" : "SOME CRITERIA FAIL");
  return all ? 0 : 1;
}
