#pragma once

// Laurent polynomials in v over Z (q = v^2), stored densely from the lowest
// exponent.  Coefficients are int64 with checked arithmetic.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace hw {

class LaurentPoly {
 public:
  LaurentPoly() = default;
  static LaurentPoly constant(std::int64_t c) { return monomial(0, c); }
  static LaurentPoly monomial(int exp, std::int64_t c = 1);
  /// v^L - v^{-L}.
  static LaurentPoly vdiff(int L) { return monomial(L) - monomial(-L); }
  static LaurentPoly from_map(const std::map<int, std::int64_t>& m);

  bool is_zero() const { return c_.empty(); }
  int min_exp() const { return lo_; }
  int max_exp() const { return lo_ + static_cast<int>(c_.size()) - 1; }
  std::int64_t coeff(int exp) const;
  std::map<int, std::int64_t> to_map() const;
  /// (k, c) when this is c v^k with c = +-1.
  std::optional<std::pair<int, int>> as_unit() const;
  /// Value at v = 1 (the specialisation q = 1).
  std::int64_t at_one() const;

  LaurentPoly operator-() const;
  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  /// Multiplication by c v^k.
  LaurentPoly shifted(int k, std::int64_t c = 1) const;

  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

  /// "v^2 - 1 + 3*v^-1", highest power first; "0" for zero.
  std::string to_string() const;

 private:
  void trim();
  void add_scaled(const LaurentPoly& o, std::int64_t sign);

  int lo_ = 0;
  std::vector<std::int64_t> c_;
};

}  // namespace hw
