#pragma once

// Based, reduced, irreducible root data realised with integer coordinates.
//
// The coweight lattice X_* is Z^r in a basis fixed by the lattice flavor.
// Roots are stored twice: by their coordinates in the simple-root basis and
// as integer functionals on X_*.  Every coroot is stored by its X_*
// coordinates.  Root ids 0..N-1 are the positive roots in graded
// lexicographic order (height ascending, then coordinates descending, so the
// simple roots come first in their natural order); id N+k is the negative of
// root k.

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "hecke_walks/linalg.hpp"

namespace hw {

enum class CartanType { A, B, C, D, E, F, G };
enum class LatticeFlavor { adjoint, simply_connected, explicit_basis };

CartanType parse_cartan_type(const std::string& s);
LatticeFlavor parse_lattice_flavor(const std::string& s);
std::string to_string(CartanType t);
std::string to_string(LatticeFlavor f);

using RootId = int;

/// An element of X_*, coordinates in the datum's lattice basis.
struct Coweight {
  Vec c{};

  static Coweight from(const std::vector<std::int64_t>& coords);
  std::vector<std::int64_t> to_vector(int rank) const;

  std::int32_t& operator[](int i) { return c[i]; }
  std::int32_t operator[](int i) const { return c[i]; }

  friend bool operator==(const Coweight&, const Coweight&) = default;
  friend auto operator<=>(const Coweight&, const Coweight&) = default;
  Coweight operator+(const Coweight& o) const;
  Coweight operator-(const Coweight& o) const;
  Coweight operator-() const;
  Coweight operator*(int k) const;
};

class RootDatum {
 public:
  /// `explicit_coroots` is required for LatticeFlavor::explicit_basis: column j
  /// holds the X_* coordinates of the j-th simple coroot.
  static RootDatum build(CartanType type, int rank, LatticeFlavor flavor,
                         const std::optional<IntMatrix>& explicit_coroots = std::nullopt);

  CartanType type() const { return type_; }
  LatticeFlavor flavor() const { return flavor_; }
  int rank() const { return rank_; }
  std::string label() const;
  /// Stable fingerprint of (type, rank, lattice); elements carry it so that
  /// mixing data can be detected.
  std::uint32_t fingerprint() const { return fingerprint_; }

  /// cartan()[i][j] = <alpha_{i+1}, alpha_{j+1}^vee>.
  const IntMatrix& cartan() const { return cartan_; }
  /// Squared lengths of the simple roots (shortest = 2).
  const std::vector<int>& simple_root_length_sq() const { return length_sq_; }
  /// Columns are the simple coroots in X_* coordinates.
  const IntMatrix& coroot_matrix() const { return coroot_matrix_; }

  int num_positive_roots() const { return num_positive_; }
  int num_roots() const { return 2 * num_positive_; }
  bool is_positive(RootId id) const { return id < num_positive_; }
  RootId negate(RootId id) const { return id < num_positive_ ? id + num_positive_ : id - num_positive_; }
  RootId positive_part(RootId id) const { return is_positive(id) ? id : negate(id); }

  /// Simple root alpha_i for i in 1..rank.
  RootId simple_root(int i) const;
  RootId highest_root() const { return highest_; }
  int coxeter_number() const { return coxeter_number_; }

  const Vec& root_coords(RootId id) const { return coords_[id]; }
  const Vec& root_functional(RootId id) const { return functional_[id]; }
  Coweight coroot(RootId id) const { return Coweight{coroot_[id]}; }
  int height(RootId id) const { return height_[id]; }

  std::optional<RootId> root_from_coords(const Vec& coords) const;
  std::optional<RootId> root_from_functional(const Vec& f) const;
  std::optional<RootId> root_from_coroot(const Vec& c) const;

  std::int64_t pairing(RootId alpha, const Coweight& lambda) const {
    return dot(functional_[alpha], lambda.c, rank_);
  }

  /// Sum of the positive coroots; pairs to 2 with every simple root.
  const Coweight& two_rho_check() const { return two_rho_check_; }

  /// Smallest n > 0 with n * omega_i^vee in X_* (i in 1..rank), and that
  /// coweight.
  int fundamental_coweight_index(int i) const { return fund_index_[i - 1]; }
  Coweight fundamental_coweight_multiple(int i) const { return fund_multiple_[i - 1]; }
  /// omega_i^vee when it lies in X_*.
  std::optional<Coweight> fundamental_coweight(int i) const;

  bool is_dominant(const Coweight& lambda) const;
  bool in_coroot_lattice(const Coweight& lambda) const;
  /// alpha in 2 X^*: X^* is the dual lattice of X_*, so this is evenness of
  /// the functional.
  bool in_twice_character_lattice(RootId alpha) const;
  /// |X_* / Q^vee|.
  int fundamental_group_order() const { return fundamental_group_order_; }

  /// Coefficient of alpha_i in the highest root (i in 1..rank).
  int highest_root_coefficient(int i) const { return coords_[highest_][i - 1]; }

  /// Matrix of the simple reflection s_i (i in 1..rank) on X_*.
  IntMatrix simple_reflection_matrix(int i) const;
  /// Matrix of the reflection s_alpha on X_*.
  IntMatrix reflection_matrix(RootId alpha) const;

 private:
  RootDatum() = default;
  void generate_roots();

  CartanType type_{};
  LatticeFlavor flavor_{};
  int rank_ = 0;
  std::uint32_t fingerprint_ = 0;
  IntMatrix cartan_;
  std::vector<int> length_sq_;
  IntMatrix coroot_matrix_;
  IntMatrix functional_matrix_;  // rows: simple root functionals
  RatMatrix coroot_matrix_inverse_;
  RatMatrix functional_matrix_inverse_;

  int num_positive_ = 0;
  RootId highest_ = 0;
  int coxeter_number_ = 0;
  int fundamental_group_order_ = 1;
  std::vector<Vec> coords_, functional_, coroot_;
  std::vector<int> height_;
  std::unordered_map<Vec, RootId, VecHash> by_coords_, by_functional_, by_coroot_;
  Coweight two_rho_check_;
  std::vector<int> fund_index_;
  std::vector<Coweight> fund_multiple_;
};

/// Classical number of positive roots for a type/rank, used by tests.
int classical_positive_root_count(CartanType type, int rank);

}  // namespace hw

template <>
struct std::hash<hw::Coweight> {
  std::size_t operator()(const hw::Coweight& c) const noexcept { return hw::VecHash{}(c.c); }
};
