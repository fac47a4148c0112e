#pragma once

// Batch verification of the identities behind the library.  Every suite
// shards its cases across OpenMP threads; with `parallel = false` the same
// cases run in order on one thread, which is the reference the parallel run
// is tested against.  Reports are deterministic: failures are listed in case
// order whatever the thread count.

#include <cstdint>
#include <string>
#include <vector>

#include "hecke_walks/bernstein.hpp"

namespace hw {

struct SuiteOptions {
  std::uint64_t seed = 1;
  bool parallel = true;
  int max_length = 6;         // elements for Psi, non-folded walks for Phi
  int random_words = 20;      // perturbed words per element
  int extra_length = 6;       // how much longer a perturbed word may get
  int straighten_length = 5;  // all step words up to this length
  int coweight_box = 2;       // coordinates in [-box, box]
  int pairing_bound = 4;      // |<alpha_i, lambda>| for the Bernstein relation
  int parity_level = 4;       // |j| for L(H_{alpha_i, j})
  int oracle_samples = 500;
};

struct SuiteReport {
  std::string name;
  std::size_t cases = 0;
  std::size_t failed = 0;
  std::vector<std::string> failures;  // first few messages, in case order
  double seconds = 0;
  bool ok() const { return failed == 0; }
};

/// standard, chamber(w_0) and alcove_negative(s_0 s_1 ... s_r).
std::vector<Orientation> default_orientations(const AffineWeylGroup& g);

/// Psi along the reduced word against `random_words` move-perturbed words,
/// for every element of W_a up to max_length times every tau.
SuiteReport suite_independence(const HeckeAlgebra& H, const std::vector<Orientation>& orientations,
                               const SuiteOptions& opt);
/// Phi equal on non-folded walks with equal ends; Phi(straighten(x)) = Phi(x)
/// for all step words; triangularity of straighten(basis_word(p)).
SuiteReport suite_kernel(const HeckeAlgebra& H, const Orientation& o, const SuiteOptions& opt);
/// theta multiplicativity, the t_w rule, the Bernstein relation, and the
/// theta / t_w identities for c_0^+ and Omega.
SuiteReport suite_bernstein(const HeckeAlgebra& H, const SuiteOptions& opt);
/// Quadratic and braid relations, parameters constant on conjugacy classes,
/// and the parity rule for L(H_{alpha_i, j}) against walls seen by galleries.
SuiteReport suite_parameters(const HeckeAlgebra& H, const SuiteOptions& opt);
/// Signed T~-products along reduced words of translations against Theta and
/// Theta^-.
SuiteReport suite_minimal(const HeckeAlgebra& H, const SuiteOptions& opt);
/// Length against a rational hyperplane-separation count, reduced word
/// lengths, positive root count.
SuiteReport suite_oracles(const AffineWeylGroup& g, const SuiteOptions& opt);

std::vector<SuiteReport> run_selftest(const HeckeAlgebra& H, const SuiteOptions& opt);

/// Independent count of hyperplanes separating a and x a.
int separation_count(const AffineWeylGroup& g, const AffineElement& x);

/// Word obtained from `w` by random nil-inserts and braid moves, at most
/// `extra` letters longer.
Word perturb_word(const AffineWeylGroup& g, const Word& w, int extra, std::uint64_t seed);

}  // namespace hw
