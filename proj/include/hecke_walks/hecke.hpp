#pragma once

// The affine Hecke algebra of W~ over Z[v, v^-1] with parameters L, in the
// basis T_w.  Generators satisfy (T_i + 1)(T_i - q^{L_i}) = 0 with q = v^2 and
// T_w T_w' = T_{ww'} whenever lengths add.
//
// Products are computed by expanding one operand into generator factors along
// reduced words and applying them to the other.  mul_serial is the reference
// path; mul_parallel picks the cheaper side and splits its terms across
// OpenMP threads.

#include <cstddef>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "hecke_walks/alcove.hpp"
#include "hecke_walks/laurent.hpp"

namespace hw {

class HeckeElement {
 public:
  using Map = std::unordered_map<AffineElement, LaurentPoly, AffineElementHash>;

  const Map& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  LaurentPoly coeff(const AffineElement& x) const;

  /// Adds c T_x, dropping the term if it cancels.
  void add_term(const AffineElement& x, const LaurentPoly& c);
  HeckeElement& operator+=(const HeckeElement& o);
  HeckeElement& operator-=(const HeckeElement& o);
  friend HeckeElement operator+(HeckeElement a, const HeckeElement& b) { return a += b; }
  friend HeckeElement operator-(HeckeElement a, const HeckeElement& b) { return a -= b; }
  HeckeElement operator-() const;
  /// c * this.
  HeckeElement scaled(const LaurentPoly& c) const;

  friend bool operator==(const HeckeElement& a, const HeckeElement& b) { return a.terms_ == b.terms_; }

 private:
  friend class HeckeAlgebra;
  Map terms_;
};

/// One factor of a product: T_i^{+-1}, T~_i^{+-1} (i in 0..r) or T_tau.
struct Factor {
  enum class Kind { T, T_inv, Tt, Tt_inv, omega };
  Kind kind = Kind::T;
  int index = 0;  // generator, or Omega index

  friend bool operator==(const Factor&, const Factor&) = default;
};

class HeckeAlgebra {
 public:
  /// Term cap from HECKE_WALKS_BUDGET, else 100000.
  static std::size_t default_term_cap();

  HeckeAlgebra(GroupPtr group, ParameterSystem params, std::size_t term_cap = default_term_cap());
  /// Equal parameters.
  explicit HeckeAlgebra(GroupPtr group);

  const AffineWeylGroup& group() const { return *group_; }
  const GroupPtr& group_ptr() const { return group_; }
  const RootDatum& datum() const { return group_->datum(); }
  const ParameterSystem& params() const { return params_; }
  int L(int i) const { return params_[i]; }
  std::size_t term_cap() const { return term_cap_; }

  /// L(x) = sum of L over a reduced word.
  int parameter_length(const AffineElement& x) const;

  HeckeElement zero() const { return {}; }
  HeckeElement one() const { return T(group_->identity()); }
  HeckeElement scalar(const LaurentPoly& c) const;
  HeckeElement T(const AffineElement& x) const;
  /// T~_x = v^{-L(x)} T_x.
  HeckeElement Tt(const AffineElement& x) const;
  HeckeElement product(const std::vector<Factor>& factors) const { return apply_right(one(), factors); }

  /// T_x as generator factors along the reduced word of x.
  std::vector<Factor> factors_of(const AffineElement& x) const;
  /// Factors of T~_x^{-1}.
  std::vector<Factor> inverse_tilde_factors(const AffineElement& x) const;

  HeckeElement apply_right(HeckeElement a, const std::vector<Factor>& factors) const;
  /// f_1 ... f_n * a.
  HeckeElement apply_left(const std::vector<Factor>& factors, HeckeElement a) const;

  HeckeElement mul(const HeckeElement& a, const HeckeElement& b) const { return mul_parallel(a, b); }
  HeckeElement mul_serial(const HeckeElement& a, const HeckeElement& b) const;
  HeckeElement mul_parallel(const HeckeElement& a, const HeckeElement& b) const;

  /// q^{-L} T_i + (q^{-L} - 1).
  HeckeElement t_inverse(int i) const { return product({{Factor::Kind::T_inv, i}}); }

  /// Terms sorted by (length, key) for printing and serialisation.
  std::vector<std::pair<AffineElement, LaurentPoly>> sorted_terms(const HeckeElement& x) const;
  std::string to_string(const HeckeElement& x) const;

 private:
  void right_factor(const HeckeElement::Map& in, const Factor& f, HeckeElement::Map& out) const;
  void left_factor(const Factor& f, const HeckeElement::Map& in, HeckeElement::Map& out) const;
  void guard(const HeckeElement& x) const;

  GroupPtr group_;
  ParameterSystem params_;
  std::size_t term_cap_;
};

}  // namespace hw
