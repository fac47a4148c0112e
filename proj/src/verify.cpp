#include "hecke_walks/verify.hpp"

#include <chrono>
#include <map>
#include <random>
#include <set>
#include <stdexcept>
#include <unordered_map>

#include <omp.h>

namespace hw {

namespace {

constexpr std::size_t kKeptMessages = 20;

// Runs fn(k, failures) for k in [0, n), in parallel or in order, and merges
// failures by case index.
template <class F>
void run_cases(SuiteReport& rep, std::size_t n, bool parallel, F&& fn) {
  std::vector<std::vector<std::string>> per(n);
#pragma omp parallel for schedule(dynamic, 8) if (parallel)
  for (std::ptrdiff_t k = 0; k < static_cast<std::ptrdiff_t>(n); ++k) {
    try {
      fn(static_cast<std::size_t>(k), per[k]);
    } catch (const std::exception& e) {
      per[k].push_back(std::string("exception: ") + e.what());
    }
  }
  rep.cases += n;
  for (auto& f : per)
    for (auto& m : f) {
      ++rep.failed;
      if (rep.failures.size() < kKeptMessages) rep.failures.push_back(std::move(m));
    }
}

using Clock = std::chrono::steady_clock;

SuiteReport start_report(const std::string& name) {
  SuiteReport r;
  r.name = name;
  return r;
}

SuiteReport& stamp(SuiteReport& r, Clock::time_point t0) {
  r.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
  return r;
}

std::uint64_t case_seed(std::uint64_t seed, std::uint64_t k) {
  std::seed_seq s{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                  static_cast<std::uint32_t>(k), static_cast<std::uint32_t>(k >> 32)};
  std::uint32_t out[2];
  s.generate(out, out + 2);
  return (std::uint64_t{out[0]} << 32) | out[1];
}

std::vector<Coweight> coweight_box(int rank, int r) {
  std::vector<Coweight> out{Coweight{}};
  for (int a = 0; a < rank; ++a) {
    std::vector<Coweight> next;
    for (const auto& c : out)
      for (int x = -r; x <= r; ++x) {
        Coweight d = c;
        d[a] = x;
        next.push_back(d);
      }
    out = std::move(next);
  }
  return out;
}

std::string coweight_string(const RootDatum& d, const Coweight& c) {
  std::string s = "(";
  for (int k = 0; k < d.rank(); ++k) s += (k ? "," : "") + std::to_string(c[k]);
  return s + ")";
}

std::string word_string(const Word& w) {
  std::string s = "[";
  for (std::size_t k = 0; k < w.letters.size(); ++k) s += (k ? "," : "") + std::to_string(w.letters[k]);
  s += "]";
  if (w.omega != 0) s += "*tau" + std::to_string(w.omega);
  return s;
}

// All words of length <= max_len over an alphabet of size a, in shortlex order.
std::vector<std::vector<int>> all_words(int a, int max_len) {
  std::vector<std::vector<int>> out{{}};
  std::size_t begin = 0;
  for (int len = 1; len <= max_len; ++len) {
    const std::size_t end = out.size();
    for (std::size_t k = begin; k < end; ++k)
      for (int x = 0; x < a; ++x) {
        auto w = out[k];
        w.push_back(x);
        out.push_back(std::move(w));
      }
    begin = end;
  }
  return out;
}

// k-th word of length <= max_len over an alphabet of size a, shortlex order.
std::vector<int> word_at(std::size_t k, int a, int max_len) {
  std::size_t count = 1;
  int len = 0;
  while (k >= count && len < max_len) {
    k -= count;
    count *= static_cast<std::size_t>(a);
    ++len;
  }
  std::vector<int> w(len);
  for (int p = len - 1; p >= 0; --p) {
    w[p] = static_cast<int>(k % a);
    k /= a;
  }
  return w;
}

std::size_t word_count(int a, int max_len) {
  std::size_t total = 0, count = 1;
  for (int len = 0; len <= max_len; ++len, count *= static_cast<std::size_t>(a)) total += count;
  return total;
}

Step step_of(int code) {
  // code = 4 * type + {c+, c-, f+, f-}
  const int type = code / 4, k = code % 4;
  return k < 2 ? Step::c(type, k == 0 ? 1 : -1) : Step::f(type, k == 2 ? 1 : -1);
}

}  // namespace

std::vector<Orientation> default_orientations(const AffineWeylGroup& g) {
  std::vector<int> letters;
  for (int i = 0; i <= g.rank(); ++i) letters.push_back(i);
  return {Orientation::standard(), Orientation::chamber(g.longest_finite_element()),
          Orientation::alcove_negative(g.evaluate_letters(letters))};
}

int separation_count(const AffineWeylGroup& g, const AffineElement& x) {
  const RootDatum& d = g.datum();
  const int n = d.rank();
  const IntMatrix w = g.finite_matrix(x);
  std::vector<Rational> x0(n), p(n), q(n, Rational(0));
  for (int a = 0; a < n; ++a) {
    x0[a] = Rational(d.two_rho_check()[a], 2 * d.coxeter_number());
    p[a] = x0[a] + Rational(x.lambda[a]);
  }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) q[a] += Rational(w[a][b]) * p[b];
  auto floor_of = [](const Rational& r) {
    std::int64_t f = r.numerator() / r.denominator();
    if (r.numerator() < 0 && f * r.denominator() != r.numerator()) --f;
    return f;
  };
  int count = 0;
  for (RootId alpha = 0; alpha < d.num_positive_roots(); ++alpha) {
    Rational s(0), t(0);
    for (int a = 0; a < n; ++a) {
      s += Rational(d.root_functional(alpha)[a]) * x0[a];
      t += Rational(d.root_functional(alpha)[a]) * q[a];
    }
    const std::int64_t diff = floor_of(t) - floor_of(s);
    count += static_cast<int>(diff < 0 ? -diff : diff);
  }
  return count;
}

Word perturb_word(const AffineWeylGroup& g, const Word& w, int extra, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const std::size_t limit = w.letters.size() + static_cast<std::size_t>(extra);
  Word cur = w;
  const int moves = std::uniform_int_distribution<int>(1, 2 * extra + 4)(rng);
  for (int m = 0; m < moves; ++m) {
    std::vector<Move> braids;
    const int n = static_cast<int>(cur.letters.size());
    for (int pos = 0; pos < n; ++pos)
      for (int j = 0; j <= g.rank(); ++j) {
        const int i = cur.letters[pos];
        const int mij = i == j ? 0 : g.coxeter_m(i, j);
        if (mij == 0 || pos + mij > n) continue;
        bool match = true;
        for (int k = 0; k < mij && match; ++k) match = cur.letters[pos + k] == (k % 2 == 0 ? i : j);
        if (match) braids.push_back({Move::Kind::braid, pos, i, j});
      }
    const bool can_insert = cur.letters.size() + 2 <= limit;
    const bool use_braid = !braids.empty() && (!can_insert || std::bernoulli_distribution(0.5)(rng));
    if (use_braid) {
      cur = g.apply_move(cur, braids[std::uniform_int_distribution<std::size_t>(0, braids.size() - 1)(rng)]);
    } else if (can_insert) {
      const int pos = std::uniform_int_distribution<int>(0, n)(rng);
      const int letter = std::uniform_int_distribution<int>(0, g.rank())(rng);
      cur = g.apply_move(cur, {Move::Kind::nil_insert, pos, letter, 0});
    } else {
      break;
    }
  }
  return cur;
}

SuiteReport suite_independence(const HeckeAlgebra& H, const std::vector<Orientation>& orientations,
                               const SuiteOptions& opt) {
  const AffineWeylGroup& g = H.group();
  SuiteReport rep = start_report("independence");
  const auto t0 = Clock::now();
  const auto elements = g.affine_elements_up_to(opt.max_length);
  const std::size_t n_omega = g.omega().size();
  const std::size_t n = elements.size() * n_omega;
  run_cases(rep, n, opt.parallel, [&](std::size_t k, std::vector<std::string>& fails) {
    Word base = g.reduced_word(elements[k / n_omega]);
    base.omega = static_cast<int>(k % n_omega);
    std::vector<Word> words{base};
    for (int r = 0; r < opt.random_words; ++r)
      words.push_back(perturb_word(g, base, opt.extra_length, case_seed(opt.seed, k * 1000 + r)));
    for (const auto& o : orientations) {
      const HeckeElement ref = psi(H, base, o);
      for (std::size_t r = 1; r < words.size(); ++r)
        if (psi(H, words[r], o) != ref)
          fails.push_back("Psi differs on " + word_string(words[r]) + " vs " + word_string(base) + " under " +
                          describe(g, o));
    }
  });
  return stamp(rep, t0);
}

SuiteReport suite_kernel(const HeckeAlgebra& H, const Orientation& o, const SuiteOptions& opt) {
  const AffineWeylGroup& g = H.group();
  SuiteReport rep = start_report("kernel");
  const auto t0 = Clock::now();

  // Non-folded walks with equal end points.
  const auto galleries = all_words(g.num_generators(), opt.max_length);
  std::vector<HeckeElement> images(galleries.size());
  std::vector<AffineElement> ends(galleries.size());
  run_cases(rep, galleries.size(), opt.parallel, [&](std::size_t k, std::vector<std::string>&) {
    const Walk p = non_folded_walk(g, Word{galleries[k], 0}, o);
    ends[k] = p.end();
    images[k] = phi(H, p.word());
  });
  std::unordered_map<AffineElement, std::size_t, AffineElementHash> first;
  for (std::size_t k = 0; k < galleries.size(); ++k) {
    auto [it, fresh] = first.try_emplace(ends[k], k);
    if (!fresh && images[k] != images[it->second]) {
      ++rep.failed;
      if (rep.failures.size() < kKeptMessages)
        rep.failures.push_back("Phi differs on non-folded walks " + word_string(Word{galleries[k], 0}) + " and " +
                               word_string(Word{galleries[it->second], 0}));
    }
  }

  // Straightening preserves Phi; basis words are triangular.
  const int alphabet = 4 * g.num_generators();
  const std::size_t total = word_count(alphabet, opt.straighten_length);
  const AffineElement start = g.identity();
  run_cases(rep, total, opt.parallel, [&](std::size_t k, std::vector<std::string>& fails) {
    WalkWord x;
    for (int c : word_at(k, alphabet, opt.straighten_length)) x.steps.push_back(step_of(c));
    const WalkCombination comb = straighten(g, x, o);
    if (phi(H, comb) != phi(H, x)) fails.push_back("Phi(straighten(x)) != Phi(x) for " + to_string(x));
    if (first_violation(g, x, o, start) != -1) return;
    const WalkCombination b = straighten(g, basis_word(x), o);
    int plus_folds = 0;
    for (const Step& s : x.steps) plus_folds += !s.crossing() && s.sign > 0;
    const std::int64_t expected = plus_folds % 2 ? -1 : 1;
    auto it = b.terms.find(x);
    if (it == b.terms.end() || it->second != expected)
      fails.push_back("basis word of " + to_string(x) + " does not lead with the walk itself");
    for (const auto& [w, c] : b.terms)
      if (!(w == x) && w.crossings() >= x.crossings())
        fails.push_back("basis word of " + to_string(x) + " has a term with as many crossings: " + to_string(w));
  });
  return stamp(rep, t0);
}

SuiteReport suite_bernstein(const HeckeAlgebra& H, const SuiteOptions& opt) {
  const RootDatum& d = H.datum();
  SuiteReport rep = start_report("bernstein");
  const auto t0 = Clock::now();

  const auto box = coweight_box(d.rank(), opt.coweight_box);
  const auto wide = coweight_box(d.rank(), 2 * opt.coweight_box);
  std::vector<HeckeElement> th(wide.size());
  run_cases(rep, wide.size(), opt.parallel,
            [&](std::size_t k, std::vector<std::string>&) { th[k] = theta(H, wide[k]); });
  std::map<Coweight, std::size_t> index;
  for (std::size_t k = 0; k < wide.size(); ++k) index[wide[k]] = k;

  run_cases(rep, box.size() * box.size(), opt.parallel, [&](std::size_t k, std::vector<std::string>& fails) {
    const Coweight& a = box[k / box.size()];
    const Coweight& b = box[k % box.size()];
    if (H.mul(th[index.at(a)], th[index.at(b)]) != th[index.at(a + b)])
      fails.push_back("theta_a theta_b != theta_{a+b} for a=" + coweight_string(d, a) + " b=" + coweight_string(d, b));
  });

  const CheckReport t_rule = check_t_multiplication(H);
  rep.cases += static_cast<std::size_t>(t_rule.checks);
  rep.failed += t_rule.failures.size();
  for (const auto& m : t_rule.failures)
    if (rep.failures.size() < kKeptMessages) rep.failures.push_back(m);

  std::vector<std::pair<int, Coweight>> cases;
  for (int i = 1; i <= d.rank(); ++i)
    for (const auto& l : box) {
      const std::int64_t p = d.pairing(d.simple_root(i), l);
      if (p <= opt.pairing_bound && p >= -opt.pairing_bound) cases.emplace_back(i, l);
    }
  run_cases(rep, cases.size(), opt.parallel, [&](std::size_t k, std::vector<std::string>& fails) {
    const auto r = verify_bernstein(H, cases[k].first, cases[k].second);
    if (!r.ok) fails.push_back(r.message);
  });

  const CheckReport omega = check_omega_identities(H);
  rep.cases += static_cast<std::size_t>(omega.checks);
  rep.failed += omega.failures.size();
  for (const auto& m : omega.failures)
    if (rep.failures.size() < kKeptMessages) rep.failures.push_back(m);
  return stamp(rep, t0);
}

SuiteReport suite_parameters(const HeckeAlgebra& H, const SuiteOptions& opt) {
  const AffineWeylGroup& g = H.group();
  const RootDatum& d = H.datum();
  SuiteReport rep = start_report("parameters");
  const auto t0 = Clock::now();
  const int r = g.rank();

  run_cases(rep, static_cast<std::size_t>(r + 1), opt.parallel, [&](std::size_t k, std::vector<std::string>& fails) {
    const int i = static_cast<int>(k);
    const auto s = g.simple_reflection(i);
    HeckeElement expected = H.scalar(LaurentPoly::monomial(2 * H.L(i)));
    expected.add_term(s, LaurentPoly::monomial(2 * H.L(i)) - LaurentPoly::constant(1));
    if (H.mul(H.T(s), H.T(s)) != expected) fails.push_back("quadratic relation fails for T_" + std::to_string(i));
    for (int j = i + 1; j <= r; ++j) {
      const int m = g.coxeter_m(i, j);
      if (m == 0) continue;
      std::vector<Factor> a, b;
      for (int t = 0; t < m; ++t) {
        a.push_back({Factor::Kind::T, t % 2 ? j : i});
        b.push_back({Factor::Kind::T, t % 2 ? i : j});
      }
      if (H.product(a) != H.product(b))
        fails.push_back("braid relation fails for " + std::to_string(i) + "," + std::to_string(j));
    }
  });

  for (const auto& cls : simple_conjugacy_classes(g)) {
    ++rep.cases;
    for (int i : cls)
      if (H.L(i) != H.L(cls.front())) {
        ++rep.failed;
        rep.failures.push_back("parameters differ on a conjugacy class");
        break;
      }
  }

  // Walls of type k met by galleries carry L(s_k); compare with the parity rule.
  std::vector<int> L_odd(r + 1, 0);
  for (int i = 1; i <= r; ++i)
    L_odd[i] = d.in_twice_character_lattice(d.simple_root(i))
                   ? hyperplane_parameter(g, H.params(), Hyperplane::normalized(d, d.simple_root(i), 1))
                   : H.L(i);
  std::map<std::pair<int, std::int64_t>, std::set<int>> seen;
  const int P = opt.parity_level;
  std::size_t wanted = static_cast<std::size_t>(r) * static_cast<std::size_t>(2 * P + 1);
  for (int len = 2 * P + 4; seen.size() < wanted && len <= 4 * P + 12; len += 2) {
    seen.clear();
    for (const auto& x : g.affine_elements_up_to(len))
      for (int k = 0; k <= r; ++k) {
        const Hyperplane h = wall(g, x, k);
        for (int i = 1; i <= r; ++i)
          if (h.alpha == d.simple_root(i) && h.level >= -P && h.level <= P) seen[{i, h.level}].insert(H.L(k));
      }
  }
  for (int i = 1; i <= r; ++i)
    for (int j = -P; j <= P; ++j) {
      ++rep.cases;
      const int expected = (j % 2 == 0) ? H.L(i) : L_odd[i];
      const int computed = hyperplane_parameter(g, H.params(), Hyperplane::normalized(d, d.simple_root(i), j));
      auto it = seen.find({i, j});
      std::string bad;
      if (computed != expected) bad = "hyperplane_parameter disagrees with the parity rule";
      if (it == seen.end()) bad = "no gallery reached the hyperplane";
      else if (it->second.size() != 1 || *it->second.begin() != expected) bad = "galleries disagree with the parity rule";
      if (!bad.empty()) {
        ++rep.failed;
        if (rep.failures.size() < kKeptMessages)
          rep.failures.push_back(bad + " at alpha_" + std::to_string(i) + ", j=" + std::to_string(j));
      }
    }
  return stamp(rep, t0);
}

SuiteReport suite_minimal(const HeckeAlgebra& H, const SuiteOptions& opt) {
  const RootDatum& d = H.datum();
  SuiteReport rep = start_report("minimal");
  const auto t0 = Clock::now();
  const auto box = coweight_box(d.rank(), opt.coweight_box);
  run_cases(rep, box.size(), opt.parallel, [&](std::size_t k, std::vector<std::string>& fails) {
    const Coweight& l = box[k];
    const auto m = minimal_expression(H, l);
    if (m.product != Theta(H, l)) fails.push_back("signed product differs from Theta at " + coweight_string(d, l));
    if (d.is_dominant(l))
      for (int s : m.signs)
        if (s != 1) fails.push_back("dominant coweight with a negative sign at " + coweight_string(d, l));
    if (minimal_expression(H, l, true).product != Theta_minus(H, l))
      fails.push_back("signed product differs from Theta^- at " + coweight_string(d, l));
  });
  return stamp(rep, t0);
}

SuiteReport suite_oracles(const AffineWeylGroup& g, const SuiteOptions& opt) {
  SuiteReport rep = start_report("oracles");
  const auto t0 = Clock::now();
  run_cases(rep, static_cast<std::size_t>(opt.oracle_samples), opt.parallel,
            [&](std::size_t k, std::vector<std::string>& fails) {
              std::mt19937_64 rng(case_seed(opt.seed, k));
              std::uniform_int_distribution<int> len(0, 20), letter(0, g.rank());
              std::uniform_int_distribution<std::size_t> om(0, g.omega().size() - 1);
              std::vector<int> l;
              for (int n = len(rng); n > 0; --n) l.push_back(letter(rng));
              const AffineElement x = g.multiply(g.evaluate_letters(l), g.omega()[om(rng)].element);
              const int len_x = g.length(x);
              if (len_x != separation_count(g, x)) fails.push_back("length differs from separation count at " + g.describe(x));
              const Word w = g.reduced_word(x);
              if (static_cast<int>(w.letters.size()) != len_x || !(g.evaluate(w) == x))
                fails.push_back("reduced word mismatch at " + g.describe(x));
            });
  const RootDatum& d = g.datum();
  ++rep.cases;
  if (d.num_positive_roots() != classical_positive_root_count(d.type(), d.rank())) {
    ++rep.failed;
    rep.failures.push_back("positive root count differs from the classical value");
  }
  return stamp(rep, t0);
}

std::vector<SuiteReport> run_selftest(const HeckeAlgebra& H, const SuiteOptions& opt) {
  std::vector<SuiteReport> out;
  out.push_back(suite_oracles(H.group(), opt));
  out.push_back(suite_parameters(H, opt));
  out.push_back(suite_independence(H, default_orientations(H.group()), opt));
  out.push_back(suite_kernel(H, Orientation::standard(), opt));
  out.push_back(suite_bernstein(H, opt));
  out.push_back(suite_minimal(H, opt));
  return out;
}

}  // namespace hw
