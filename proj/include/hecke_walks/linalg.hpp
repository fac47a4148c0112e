#pragma once

// Small exact integer / rational linear algebra used while setting up root
// data.  Everything here runs once per datum, so clarity beats speed.

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <boost/rational.hpp>

namespace hw {

inline constexpr int kMaxRank = 8;

/// Fixed-capacity integer vector; entries past the rank are kept at zero so
/// that equality and hashing can look at the whole array.
using Vec = std::array<std::int32_t, kMaxRank>;

using Rational = boost::rational<std::int64_t>;
using IntMatrix = std::vector<std::vector<std::int64_t>>;
using RatMatrix = std::vector<std::vector<Rational>>;

IntMatrix identity_matrix(int n);
IntMatrix multiply(const IntMatrix& a, const IntMatrix& b);
std::int64_t determinant(const IntMatrix& m);

/// Inverse over the rationals, or nullopt when singular.
std::optional<RatMatrix> inverse(const IntMatrix& m);

/// Returns the integer matrix when every entry of `m` is integral.
std::optional<IntMatrix> to_integer(const RatMatrix& m);

/// "1,-2,3" -> {1,-2,3}; the empty string gives an empty list.  Throws
/// std::invalid_argument on anything else.
std::vector<std::int64_t> parse_int_list(const std::string& s);

inline std::int64_t dot(const Vec& a, const Vec& b, int n) {
  std::int64_t s = 0;
  for (int i = 0; i < n; ++i) s += std::int64_t{a[i]} * b[i];
  return s;
}

struct VecHash {
  std::size_t operator()(const Vec& v) const noexcept {
    std::size_t h = 0xcbf29ce484222325ull;
    for (auto x : v) {
      h ^= static_cast<std::uint32_t>(x);
      h *= 0x100000001b3ull;
    }
    return h;
  }
};

}  // namespace hw
