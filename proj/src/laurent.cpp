#include "hecke_walks/laurent.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace hw {

namespace {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("Laurent coefficient overflow");
  return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("Laurent coefficient overflow");
  return r;
}

}  // namespace

LaurentPoly LaurentPoly::monomial(int exp, std::int64_t c) {
  LaurentPoly p;
  if (c != 0) {
    p.lo_ = exp;
    p.c_.push_back(c);
  }
  return p;
}

LaurentPoly LaurentPoly::from_map(const std::map<int, std::int64_t>& m) {
  LaurentPoly p;
  for (const auto& [e, c] : m) p += monomial(e, c);
  return p;
}

std::int64_t LaurentPoly::coeff(int exp) const {
  if (c_.empty() || exp < lo_ || exp > max_exp()) return 0;
  return c_[exp - lo_];
}

std::map<int, std::int64_t> LaurentPoly::to_map() const {
  std::map<int, std::int64_t> m;
  for (std::size_t k = 0; k < c_.size(); ++k)
    if (c_[k] != 0) m[lo_ + static_cast<int>(k)] = c_[k];
  return m;
}

std::optional<std::pair<int, int>> LaurentPoly::as_unit() const {
  if (c_.size() == 1 && (c_[0] == 1 || c_[0] == -1)) return std::make_pair(lo_, static_cast<int>(c_[0]));
  return std::nullopt;
}

std::int64_t LaurentPoly::at_one() const {
  std::int64_t s = 0;
  for (auto x : c_) s = checked_add(s, x);
  return s;
}

void LaurentPoly::trim() {
  std::size_t first = 0;
  while (first < c_.size() && c_[first] == 0) ++first;
  if (first == c_.size()) {
    c_.clear();
    lo_ = 0;
    return;
  }
  std::size_t last = c_.size();
  while (c_[last - 1] == 0) --last;
  if (first > 0 || last < c_.size()) {
    c_ = std::vector<std::int64_t>(c_.begin() + static_cast<std::ptrdiff_t>(first),
                                   c_.begin() + static_cast<std::ptrdiff_t>(last));
    lo_ += static_cast<int>(first);
  }
}

void LaurentPoly::add_scaled(const LaurentPoly& o, std::int64_t sign) {
  if (o.c_.empty()) return;
  if (c_.empty()) {
    lo_ = o.lo_;
    c_ = o.c_;
    if (sign < 0)
      for (auto& x : c_) x = checked_mul(x, -1);
    return;
  }
  const int lo = std::min(lo_, o.lo_), hi = std::max(max_exp(), o.max_exp());
  if (lo < lo_ || hi > max_exp()) {
    std::vector<std::int64_t> grown(static_cast<std::size_t>(hi - lo + 1), 0);
    std::copy(c_.begin(), c_.end(), grown.begin() + (lo_ - lo));
    c_ = std::move(grown);
    lo_ = lo;
  }
  for (std::size_t k = 0; k < o.c_.size(); ++k) {
    auto& x = c_[static_cast<std::size_t>(o.lo_ - lo_) + k];
    x = checked_add(x, sign > 0 ? o.c_[k] : checked_mul(o.c_[k], -1));
  }
  trim();
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly p = *this;
  for (auto& x : p.c_) x = checked_mul(x, -1);
  return p;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  add_scaled(o, 1);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  add_scaled(o, -1);
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly p;
  if (a.c_.empty() || b.c_.empty()) return p;
  p.lo_ = a.lo_ + b.lo_;
  p.c_.assign(a.c_.size() + b.c_.size() - 1, 0);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j)
      p.c_[i + j] = checked_add(p.c_[i + j], checked_mul(a.c_[i], b.c_[j]));
  }
  p.trim();
  return p;
}

LaurentPoly LaurentPoly::shifted(int k, std::int64_t c) const {
  if (c == 0 || c_.empty()) return {};
  LaurentPoly p = *this;
  p.lo_ += k;
  if (c != 1)
    for (auto& x : p.c_) x = checked_mul(x, c);
  return p;
}

std::string LaurentPoly::to_string() const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int e = max_exp(); e >= lo_; --e) {
    std::int64_t c = coeff(e);
    if (c == 0) continue;
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    const std::uint64_t mag = c < 0 ? 0 - static_cast<std::uint64_t>(c) : static_cast<std::uint64_t>(c);
    if (e == 0) {
      os << mag;
    } else {
      if (mag != 1) os << mag << "*";
      os << "v";
      if (e != 1) os << "^" << e;
    }
    first = false;
  }
  return os.str();
}

}  // namespace hw
