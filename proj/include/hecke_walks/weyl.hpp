#pragma once

// The extended affine Weyl group W~ = X_* x| W.
//
// An element is stored in the normal form w * eps^lambda, with the finite part
// w kept as its integer matrix on X_* (and the inverse matrix, which the
// multiplication rule needs).  It acts on the apartment by p -> w(p + lambda).
//
// s_0 = eps^{alpha_0^vee} s_{alpha_0} is the reflection in H_{alpha_0,1}; in
// the normal form it reads s_{alpha_0} * eps^{-alpha_0^vee}.

#include <array>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "hecke_walks/rootdata.hpp"

namespace hw {

using WeylMatrix = std::array<std::int16_t, kMaxRank * kMaxRank>;

struct AffineElement {
  WeylMatrix w{};      // row-major with stride kMaxRank
  WeylMatrix w_inv{};  // determined by w; not part of equality
  Coweight lambda;
  std::uint32_t datum = 0;

  std::int32_t entry(int a, int b) const { return w[a * kMaxRank + b]; }

  friend bool operator==(const AffineElement& x, const AffineElement& y) {
    return x.lambda == y.lambda && x.w == y.w && x.datum == y.datum;
  }
};

struct AffineElementHash {
  std::size_t operator()(const AffineElement& x) const noexcept;
};

/// Deterministic total order on elements (translation first, then matrix).
bool key_less(const AffineElement& x, const AffineElement& y);

/// A word s_{i_1} ... s_{i_n} tau with letters in {0..r} and tau given by its
/// index in AffineWeylGroup::omega().
struct Word {
  std::vector<int> letters;
  int omega = 0;

  friend bool operator==(const Word&, const Word&) = default;
  friend auto operator<=>(const Word&, const Word&) = default;
};

struct OmegaElement {
  AffineElement element;
  std::vector<int> type_permutation;  // tau s_i tau^{-1} = s_{tau(i)}
  Coweight origin_image;              // tau(0)
};

struct Move {
  enum class Kind { nil_delete, nil_insert, braid };
  Kind kind = Kind::nil_delete;
  int pos = 0;
  int i = 0;  // inserted letter (nil_insert) or leading letter (braid)
  int j = 0;  // second letter (braid)

  friend bool operator==(const Move&, const Move&) = default;
};

std::string to_string(const Move& m);

class AffineWeylGroup {
 public:
  explicit AffineWeylGroup(RootDatum datum);
  static std::shared_ptr<const AffineWeylGroup> make(RootDatum datum);

  const RootDatum& datum() const { return datum_; }
  int rank() const { return datum_.rank(); }
  /// Number of affine generators, r + 1.
  int num_generators() const { return datum_.rank() + 1; }

  AffineElement identity() const;
  AffineElement simple_reflection(int i) const;
  AffineElement translation(const Coweight& lambda) const;
  /// Finite element from an integer matrix on X_*; throws unless it is in W.
  AffineElement finite_from_matrix(const IntMatrix& m) const;
  AffineElement from_parts(const IntMatrix& w, const Coweight& lambda) const;
  IntMatrix finite_matrix(const AffineElement& x) const;

  AffineElement multiply(const AffineElement& x, const AffineElement& y) const;
  AffineElement inverse(const AffineElement& x) const;
  AffineElement left_reflect(int i, const AffineElement& x) const { return multiply(generators_[i], x); }
  AffineElement right_reflect(const AffineElement& x, int i) const { return multiply(x, generators_[i]); }

  /// Length by the two-sum formula over positive roots.
  int length(const AffineElement& x) const;
  /// l(s_i x) > l(x).
  bool left_ascent(int i, const AffineElement& x) const;
  /// l(x s_i) > l(x).
  bool right_ascent(const AffineElement& x, int i) const;

  /// Reduced word: repeatedly strip the smallest i with l(s_i x) < l(x).
  Word reduced_word(const AffineElement& x) const;
  AffineElement evaluate(const Word& word) const;
  AffineElement evaluate_letters(const std::vector<int>& letters) const;

  const std::vector<OmegaElement>& omega() const { return omega_; }
  /// Index of the Omega-component of x.
  int omega_class(const AffineElement& x) const;
  /// The W_a part u of x = u tau.
  AffineElement affine_part(const AffineElement& x) const;
  bool in_affine_weyl_group(const AffineElement& x) const;

  /// Coxeter matrix entry of (W_a, S_a); 0 encodes infinity.
  int coxeter_m(int i, int j) const { return coxeter_[i][j]; }

  /// w(beta) and w^{-1}(beta) for the finite part w of x.
  RootId act_on_root(const AffineElement& x, RootId beta) const;
  RootId act_on_root_inverse(const AffineElement& x, RootId beta) const;
  Coweight apply_finite(const AffineElement& x, const Coweight& mu) const;
  Coweight apply_finite_inverse(const AffineElement& x, const Coweight& mu) const;
  /// x(0).
  Coweight origin_image(const AffineElement& x) const { return apply_finite(x, x.lambda); }
  /// h * <beta, x(x_0)> with x_0 = rho^vee / h the sample point of the base
  /// alcove; always an integer not divisible by h.
  std::int64_t scaled_sample_pairing(const AffineElement& x, RootId beta) const;

  bool is_finite(const AffineElement& x) const { return x.lambda == Coweight{}; }
  std::vector<AffineElement> finite_weyl_group(std::size_t cap = 200000) const;
  AffineElement longest_finite_element() const;
  /// Longest element of the stabiliser of a dominant coweight.
  AffineElement longest_in_stabilizer(const Coweight& dominant) const;

  /// Bruhat order extended to W~ (same Omega part, subword of a reduced word).
  /// Exponential in l(y); meant for small elements.
  bool bruhat_le(const AffineElement& x, const AffineElement& y) const;

  /// All elements of W_a with length <= max_length.
  std::vector<AffineElement> affine_elements_up_to(int max_length) const;

  Word apply_move(const Word& word, const Move& move) const;
  /// Breadth-first search over nil/braid moves, never exceeding the longer
  /// word's length.  Throws std::runtime_error when the budget is exhausted.
  std::vector<Move> connect_words(const Word& from, const Word& to, std::size_t node_budget = 1000000) const;

  std::string describe(const AffineElement& x) const;

 private:
  void check(const AffineElement& x) const;
  void build_omega();

  RootDatum datum_;
  std::vector<AffineElement> generators_;
  std::vector<std::vector<int>> coxeter_;
  std::vector<OmegaElement> omega_;
};

using GroupPtr = std::shared_ptr<const AffineWeylGroup>;

}  // namespace hw

template <>
struct std::hash<hw::AffineElement> {
  std::size_t operator()(const hw::AffineElement& x) const noexcept { return hw::AffineElementHash{}(x); }
};
