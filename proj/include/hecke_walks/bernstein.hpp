#pragma once

// From words and walks to the Hecke algebra: Psi, Phi, the Bernstein
// elements theta_lambda / Theta_lambda, t_w, and checks of the Bernstein
// relations.
//
// Phi sends c_i^+ -> T~_i, c_i^- -> T~_i^{-1}, f_i^+- -> +-(v^{L_i} - v^{-L_i})
// and t_tau -> T_tau.

#include <string>
#include <utility>
#include <vector>

#include "hecke_walks/hecke.hpp"
#include "hecke_walks/walks.hpp"

namespace hw {

/// T_{i_1}^{e_1} ... T_{i_n}^{e_n} T_tau with e from crossing_signs; with
/// `tilde` the T~_i are used instead.
HeckeElement psi(const HeckeAlgebra& H, const Word& word, const Orientation& o,
                 const std::optional<AffineElement>& start = std::nullopt, bool tilde = false);

HeckeElement phi(const HeckeAlgebra& H, const WalkWord& w);
/// Sums Phi over the terms; walks sharing a crossing pattern are evaluated once.
HeckeElement phi(const HeckeAlgebra& H, const WalkCombination& comb);
/// Phi(p)^{-1} for a non-folded word.
HeckeElement phi_inverse(const HeckeAlgebra& H, const WalkWord& w);

/// theta_lambda = Phi(non-folded walk to eps^lambda).
HeckeElement theta(const HeckeAlgebra& H, const Coweight& lambda, const Orientation& o = Orientation::standard());

/// lambda = lambda_1 - lambda_2 with both dominant (lambda_2 a sum of minimal
/// multiples of fundamental coweights).
std::pair<Coweight, Coweight> dominant_decomposition(const RootDatum& d, const Coweight& lambda);
/// T~_{eps^{lambda_1}} T~_{eps^{lambda_2}}^{-1}; both must be dominant.
HeckeElement Theta_from(const HeckeAlgebra& H, const Coweight& lambda1, const Coweight& lambda2);
HeckeElement Theta(const HeckeAlgebra& H, const Coweight& lambda);
/// Same with lambda_1, lambda_2 anti-dominant.
HeckeElement Theta_minus(const HeckeAlgebra& H, const Coweight& lambda);

/// t_w = Phi(p)^{-1} for p the non-folded standard walk to w^{-1} a (w finite).
HeckeElement t_elem(const HeckeAlgebra& H, const AffineElement& w);

struct BernsteinReport {
  bool ok = false;
  int i = 0;
  Coweight lambda;
  std::int64_t pairing = 0;  // <alpha_i, lambda>
  bool twice_case = false;   // alpha_i in 2X^*
  int L_even = 0, L_odd = 0; // parameters weighting theta_{lambda - j alpha_i^vee}
  HeckeElement lhs;          // t_i theta_lambda - theta_{s_i lambda} t_i
  HeckeElement rhs;          // the geometric sum
  std::string message;
};

/// t_i theta_lambda - theta_{s_i lambda} t_i against
///   sum_{0 <= j < k} c_j theta_{lambda - j alpha_i^vee}            (k >= 0)
///  -sum_{0 <= j < -k} c_j theta_{s_i lambda - j alpha_i^vee}       (k < 0)
/// where k = <alpha_i, lambda> and c_j = v^{L} - v^{-L} with L = L(H_{alpha_i, j}),
/// i.e. L(s_i) for even j and L(s~_i) for odd j when alpha_i is in 2X^*.
BernsteinReport verify_bernstein(const HeckeAlgebra& H, int i, const Coweight& lambda);

struct CheckReport {
  int checks = 0;
  std::vector<std::string> failures;
  bool ok() const { return failures.empty(); }
};

/// Phi(c_0^+) t_{s_phi} = theta_{phi^vee}, and theta_{tau(0)} = T_tau t_{w_0 w}
/// for every tau in Omega.
CheckReport check_omega_identities(const HeckeAlgebra& H);
/// t_{s_i} t_w against the multiplication rule for all i and w in W.
CheckReport check_t_multiplication(const HeckeAlgebra& H);

struct MinimalExpression {
  Word word;
  std::vector<int> signs;
  HeckeElement product;  // T~_{i_1}^{e_1} ... T~_{i_k}^{e_k} T_tau
};

/// Reduced word of eps^lambda with standard signs (or chamber(w_0) signs for
/// the Theta^- variant).
MinimalExpression minimal_expression(const HeckeAlgebra& H, const Coweight& lambda, bool minus = false);

/// Phi of the non-folded walk along the reduced word of w.
HeckeElement walk_basis_element(const HeckeAlgebra& H, const AffineElement& w, const Orientation& o);
/// Coefficients of x in the basis walk_basis_element(w), by elimination of
/// the longest term.
std::vector<std::pair<AffineElement, LaurentPoly>> expand_in_walk_basis(const HeckeAlgebra& H, const HeckeElement& x,
                                                                        const Orientation& o);
HeckeElement reconstruct_from_walk_basis(const HeckeAlgebra& H,
                                         const std::vector<std::pair<AffineElement, LaurentPoly>>& coeffs,
                                         const Orientation& o);

}  // namespace hw
