#include "hecke_walks/bernstein.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace hw {

namespace {

Factor crossing_factor(int type, int sign) { return {sign > 0 ? Factor::Kind::Tt : Factor::Kind::Tt_inv, type}; }

// Factor codes for grouping walks by their crossing pattern.
constexpr int kOmegaCode = 1 << 20;

int encode(const Factor& f) {
  if (f.kind == Factor::Kind::omega) return kOmegaCode + f.index;
  return 2 * f.index + (f.kind == Factor::Kind::Tt ? 0 : 1);
}

Factor decode(int code) {
  if (code >= kOmegaCode) return {Factor::Kind::omega, code - kOmegaCode};
  return {code % 2 == 0 ? Factor::Kind::Tt : Factor::Kind::Tt_inv, code / 2};
}

// Crossing factors of a walk word and the scalar contributed by its foldings.
std::pair<std::vector<int>, LaurentPoly> split(const HeckeAlgebra& H, const WalkWord& w) {
  std::vector<int> codes;
  LaurentPoly scalar = LaurentPoly::constant(1);
  for (const Step& s : w.steps) {
    if (s.crossing()) {
      codes.push_back(encode(crossing_factor(s.type, s.sign)));
    } else {
      const LaurentPoly c = LaurentPoly::vdiff(H.L(s.type));
      scalar = scalar * (s.sign > 0 ? c : -c);
    }
  }
  if (w.omega != 0) codes.push_back(kOmegaCode + w.omega);
  return {std::move(codes), std::move(scalar)};
}

std::string coweight_string(const RootDatum& d, const Coweight& c) {
  std::ostringstream os;
  os << "(";
  for (int k = 0; k < d.rank(); ++k) os << (k ? "," : "") << c[k];
  os << ")";
  return os.str();
}

}  // namespace

HeckeElement psi(const HeckeAlgebra& H, const Word& word, const Orientation& o,
                 const std::optional<AffineElement>& start, bool tilde) {
  const std::vector<int> signs = crossing_signs(H.group(), word.letters, o, start);
  std::vector<Factor> f;
  f.reserve(word.letters.size() + 1);
  for (std::size_t k = 0; k < word.letters.size(); ++k) {
    const bool pos = signs[k] > 0;
    if (tilde)
      f.push_back({pos ? Factor::Kind::Tt : Factor::Kind::Tt_inv, word.letters[k]});
    else
      f.push_back({pos ? Factor::Kind::T : Factor::Kind::T_inv, word.letters[k]});
  }
  if (word.omega != 0) f.push_back({Factor::Kind::omega, word.omega});
  return H.product(f);
}

HeckeElement phi(const HeckeAlgebra& H, const WalkWord& w) {
  auto [codes, scalar] = split(H, w);
  std::vector<Factor> f;
  for (int c : codes) f.push_back(decode(c));
  return H.product(f).scaled(scalar);
}

HeckeElement phi(const HeckeAlgebra& H, const WalkCombination& comb) {
  std::map<std::vector<int>, LaurentPoly> groups;
  for (const auto& [w, c] : comb.terms) {
    auto [codes, scalar] = split(H, w);
    groups[std::move(codes)] += scalar * LaurentPoly::constant(c);
  }
  // Sorted keys share prefixes; keep the partial products along the current one.
  HeckeElement result;
  std::vector<int> current;
  std::vector<HeckeElement> prefix{H.one()};
  for (const auto& [codes, scalar] : groups) {
    if (scalar.is_zero()) continue;
    std::size_t common = 0;
    while (common < current.size() && common < codes.size() && current[common] == codes[common]) ++common;
    current.resize(common);
    prefix.resize(common + 1);
    for (std::size_t k = common; k < codes.size(); ++k) {
      prefix.push_back(H.apply_right(prefix.back(), {decode(codes[k])}));
      current.push_back(codes[k]);
    }
    result += prefix.back().scaled(scalar);
  }
  return result;
}

HeckeElement phi_inverse(const HeckeAlgebra& H, const WalkWord& w) {
  if (w.crossings() != static_cast<int>(w.steps.size()))
    throw std::invalid_argument("phi_inverse needs a non-folded walk");
  const AffineWeylGroup& g = H.group();
  std::vector<Factor> f;
  if (w.omega != 0) f.push_back({Factor::Kind::omega, g.omega_class(g.inverse(g.omega()[w.omega].element))});
  for (auto it = w.steps.rbegin(); it != w.steps.rend(); ++it) f.push_back(crossing_factor(it->type, -it->sign));
  return H.product(f);
}

HeckeElement theta(const HeckeAlgebra& H, const Coweight& lambda, const Orientation& o) {
  const AffineWeylGroup& g = H.group();
  return phi(H, non_folded_walk(g, g.reduced_word(g.translation(lambda)), o).word());
}

std::pair<Coweight, Coweight> dominant_decomposition(const RootDatum& d, const Coweight& lambda) {
  Coweight lambda2;
  for (int i = 1; i <= d.rank(); ++i) {
    const std::int64_t a = d.pairing(d.simple_root(i), lambda);
    if (a >= 0) continue;
    const Coweight m = d.fundamental_coweight_multiple(i);
    const std::int64_t n = d.pairing(d.simple_root(i), m);
    const std::int64_t k = (-a + n - 1) / n;
    lambda2 = lambda2 + m * static_cast<int>(k);
  }
  return {lambda + lambda2, lambda2};
}

HeckeElement Theta_from(const HeckeAlgebra& H, const Coweight& lambda1, const Coweight& lambda2) {
  const AffineWeylGroup& g = H.group();
  if (!H.datum().is_dominant(lambda1) || !H.datum().is_dominant(lambda2))
    throw std::invalid_argument("Theta_from needs dominant coweights");
  return H.apply_right(H.Tt(g.translation(lambda1)), H.inverse_tilde_factors(g.translation(lambda2)));
}

HeckeElement Theta(const HeckeAlgebra& H, const Coweight& lambda) {
  const auto [l1, l2] = dominant_decomposition(H.datum(), lambda);
  return Theta_from(H, l1, l2);
}

HeckeElement Theta_minus(const HeckeAlgebra& H, const Coweight& lambda) {
  // lambda = (lambda - mu) - (-mu) with mu dominant and lambda - mu anti-dominant.
  const auto [m1, m2] = dominant_decomposition(H.datum(), -lambda);
  const AffineWeylGroup& g = H.group();
  return H.apply_right(H.Tt(g.translation(-m1)), H.inverse_tilde_factors(g.translation(-m2)));
}

HeckeElement t_elem(const HeckeAlgebra& H, const AffineElement& w) {
  const AffineWeylGroup& g = H.group();
  if (!g.is_finite(w)) throw std::invalid_argument("t_w needs w in the finite Weyl group");
  return phi_inverse(H, non_folded_walk(g, g.reduced_word(g.inverse(w)), Orientation::standard()).word());
}

BernsteinReport verify_bernstein(const HeckeAlgebra& H, int i, const Coweight& lambda) {
  const AffineWeylGroup& g = H.group();
  const RootDatum& d = H.datum();
  if (i < 1 || i > d.rank()) throw std::out_of_range("Bernstein relation needs a finite simple reflection");
  BernsteinReport r;
  r.i = i;
  r.lambda = lambda;
  const RootId alpha = d.simple_root(i);
  const Coweight av = d.coroot(alpha);
  r.pairing = d.pairing(alpha, lambda);
  const Coweight s_lambda = lambda - av * static_cast<int>(r.pairing);
  r.twice_case = d.in_twice_character_lattice(alpha);
  r.L_even = H.L(i);
  r.L_odd = r.twice_case ? hyperplane_parameter(g, H.params(), Hyperplane::normalized(d, alpha, 1)) : H.L(i);

  const HeckeElement ti = H.Tt(g.simple_reflection(i));
  r.lhs = H.mul(ti, theta(H, lambda)) - H.mul(theta(H, s_lambda), ti);

  const std::int64_t k = r.pairing;
  const Coweight& base = k >= 0 ? lambda : s_lambda;
  const LaurentPoly sign = LaurentPoly::constant(k >= 0 ? 1 : -1);
  for (std::int64_t j = 0; j < (k >= 0 ? k : -k); ++j) {
    const LaurentPoly c = LaurentPoly::vdiff(j % 2 == 0 ? r.L_even : r.L_odd);
    r.rhs += theta(H, base - av * static_cast<int>(j)).scaled(sign * c);
  }
  r.ok = r.lhs == r.rhs;
  if (!r.ok)
    r.message = "Bernstein relation fails for i=" + std::to_string(i) + " lambda=" + coweight_string(d, lambda) +
                ": lhs " + H.to_string(r.lhs) + " rhs " + H.to_string(r.rhs);
  return r;
}

CheckReport check_omega_identities(const HeckeAlgebra& H) {
  const AffineWeylGroup& g = H.group();
  const RootDatum& d = H.datum();
  CheckReport rep;

  const RootId top = d.highest_root();
  const AffineElement s_phi = g.finite_from_matrix(d.reflection_matrix(top));
  const HeckeElement lhs = H.mul(H.Tt(g.simple_reflection(0)), t_elem(H, s_phi));
  ++rep.checks;
  if (lhs != theta(H, d.coroot(top))) rep.failures.push_back("Phi(c_0^+) t_{s_phi} != theta_{phi^vee}");

  const AffineElement w0 = g.longest_finite_element();
  for (std::size_t k = 0; k < g.omega().size(); ++k) {
    const OmegaElement& tau = g.omega()[k];
    const Coweight mu = tau.origin_image;
    const AffineElement w = g.longest_in_stabilizer(mu);
    const HeckeElement rhs = H.mul(H.T(tau.element), t_elem(H, g.multiply(w0, w)));
    ++rep.checks;
    if (theta(H, mu) != rhs)
      rep.failures.push_back("theta_{tau(0)} != T_tau t_{w_0 w} for tau " + std::to_string(k) + " with tau(0) = " +
                             coweight_string(d, mu));
  }
  return rep;
}

CheckReport check_t_multiplication(const HeckeAlgebra& H) {
  const AffineWeylGroup& g = H.group();
  CheckReport rep;
  const auto W = g.finite_weyl_group();
  std::unordered_map<AffineElement, HeckeElement, AffineElementHash> t;
  for (const auto& w : W) t.emplace(w, t_elem(H, w));
  for (int i = 1; i <= g.rank(); ++i) {
    const AffineElement si = g.simple_reflection(i);
    for (const auto& w : W) {
      const AffineElement siw = g.multiply(si, w);
      HeckeElement expected = t.at(siw);
      if (!g.left_ascent(i, w)) expected += t.at(w).scaled(LaurentPoly::vdiff(H.L(i)));
      ++rep.checks;
      if (H.mul(t.at(si), t.at(w)) != expected)
        rep.failures.push_back("t_{s_" + std::to_string(i) + "} t_w mismatch at w = " + g.describe(w));
    }
  }
  return rep;
}

MinimalExpression minimal_expression(const HeckeAlgebra& H, const Coweight& lambda, bool minus) {
  const AffineWeylGroup& g = H.group();
  MinimalExpression m;
  m.word = g.reduced_word(g.translation(lambda));
  const Orientation o = minus ? Orientation::chamber(g.longest_finite_element()) : Orientation::standard();
  m.signs = crossing_signs(g, m.word.letters, o);
  m.product = psi(H, m.word, o, std::nullopt, true);
  return m;
}

HeckeElement walk_basis_element(const HeckeAlgebra& H, const AffineElement& w, const Orientation& o) {
  const AffineWeylGroup& g = H.group();
  return phi(H, non_folded_walk(g, g.reduced_word(w), o).word());
}

std::vector<std::pair<AffineElement, LaurentPoly>> expand_in_walk_basis(const HeckeAlgebra& H, const HeckeElement& x,
                                                                        const Orientation& o) {
  const AffineWeylGroup& g = H.group();
  std::vector<std::pair<AffineElement, LaurentPoly>> out;
  HeckeElement rest = x;
  while (!rest.is_zero()) {
    // Basis element of w has T_w as its unique longest term with a unit coefficient.
    const auto terms = H.sorted_terms(rest);
    const auto& [w, c] = terms.back();
    const HeckeElement b = walk_basis_element(H, w, o);
    const auto unit = b.coeff(w).as_unit();
    if (!unit) throw std::logic_error("walk basis element without unit leading coefficient at " + g.describe(w));
    const LaurentPoly coef = c.shifted(-unit->first, unit->second);
    rest -= b.scaled(coef);
    out.emplace_back(w, coef);
  }
  return out;
}

HeckeElement reconstruct_from_walk_basis(const HeckeAlgebra& H,
                                         const std::vector<std::pair<AffineElement, LaurentPoly>>& coeffs,
                                         const Orientation& o) {
  HeckeElement r;
  for (const auto& [w, c] : coeffs) r += walk_basis_element(H, w, o).scaled(c);
  return r;
}

}  // namespace hw
