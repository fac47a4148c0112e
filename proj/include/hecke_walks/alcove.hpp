#pragma once

// Alcove geometry of the apartment X_* (x) R.
//
// Alcoves are identified with elements: x in W~ names the alcove x a, where
// a is the base alcove.  For x = u tau the alcove is u a, but the face types
// are those of x, i.e. permuted by tau.  Everything is exact: the side of a
// hyperplane is read off the integer h * <beta, x(x_0)> with x_0 = rho^vee / h.

#include <optional>
#include <string>
#include <vector>

#include "hecke_walks/weyl.hpp"

namespace hw {

/// H_{alpha,n} = {x : <alpha, x> = n} with alpha a positive root.
struct Hyperplane {
  RootId alpha = 0;
  std::int64_t level = 0;

  /// H_{beta,n} with beta of either sign.
  static Hyperplane normalized(const RootDatum& d, RootId beta, std::int64_t n);
  friend bool operator==(const Hyperplane&, const Hyperplane&) = default;
  friend auto operator<=>(const Hyperplane&, const Hyperplane&) = default;
};

enum class Side { negative, positive };

struct Orientation {
  enum class Kind { standard, chamber, alcove_negative, alcove_positive };
  Kind kind = Kind::standard;
  /// u for chamber (finite), b for the alcove kinds.
  std::optional<AffineElement> ref;

  static Orientation standard() { return {}; }
  static Orientation chamber(const AffineElement& u) { return {Kind::chamber, u}; }
  static Orientation alcove_negative(const AffineElement& b) { return {Kind::alcove_negative, b}; }
  static Orientation alcove_positive(const AffineElement& b) { return {Kind::alcove_positive, b}; }

  /// standard and chamber orientations are invariant under translations.
  bool translation_invariant() const { return kind == Kind::standard || kind == Kind::chamber; }
  friend bool operator==(const Orientation&, const Orientation&) = default;
};

/// Grammar: standard | chamber:<word> | alcove-neg:<word> | alcove-pos:<word>,
/// words as comma-separated letters (chamber words use letters 1..r only).
Orientation parse_orientation(const AffineWeylGroup& g, const std::string& spec);
std::string describe(const AffineWeylGroup& g, const Orientation& o);

/// The wall of the base alcove of type i: H_{alpha_i,0}, or H_{theta,1} for i = 0.
Hyperplane base_wall(const RootDatum& d, int i);
/// x(H) for x in W~.
Hyperplane transform(const AffineWeylGroup& g, const AffineElement& x, const Hyperplane& h);
/// Wall of type i of the alcove x a, i.e. x(base_wall(i)).
Hyperplane wall(const AffineWeylGroup& g, const AffineElement& x, int i);

/// h * (<alpha, x(x_0)> - n); never zero.
std::int64_t scaled_offset(const AffineWeylGroup& g, const Hyperplane& h, const AffineElement& x);
Side side(const AffineWeylGroup& g, const Orientation& o, const Hyperplane& h, const AffineElement& x);

/// epsilon_nu = +1 iff the alcove before step nu lies on the negative side of
/// the wall it crosses.  The gallery starts at `start` a.
std::vector<int> crossing_signs(const AffineWeylGroup& g, const std::vector<int>& letters, const Orientation& o,
                                const std::optional<AffineElement>& start = std::nullopt);

/// W_a-conjugacy classes of {s_0..s_r}: components of the Coxeter graph
/// restricted to odd m_ij.
std::vector<std::vector<int>> simple_conjugacy_classes(const AffineWeylGroup& g);

/// L : {0..r} -> Z_{>=0}, constant on conjugacy classes of simple reflections
/// in W~ (W_a-classes glued by the Omega permutations).
struct ParameterSystem {
  std::vector<int> L;

  static ParameterSystem equal(const AffineWeylGroup& g, int value = 1);
  /// Throws std::invalid_argument with a readable reason if L is not valid.
  static ParameterSystem checked(const AffineWeylGroup& g, std::vector<int> L);
  int operator[](int i) const { return L[i]; }
  friend bool operator==(const ParameterSystem&, const ParameterSystem&) = default;
};

/// An alcove x a (x in W_a) having h as its wall of type `type`.
struct FaceWitness {
  AffineElement alcove;
  int type = 0;
};

/// Smallest type i with h a wall of type i, with an explicit alcove.
FaceWitness face_of(const AffineWeylGroup& g, const Hyperplane& h);
/// L(H) := L(s_i) for i the type of any face supported by h.
int hyperplane_parameter(const AffineWeylGroup& g, const ParameterSystem& L, const Hyperplane& h);

std::string to_string(const RootDatum& d, const Hyperplane& h);

}  // namespace hw
