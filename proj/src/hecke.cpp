#include "hecke_walks/hecke.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>
#include <stdexcept>
#include <tuple>

#include <omp.h>

namespace hw {

namespace {

void accumulate(HeckeElement::Map& m, const AffineElement& x, const LaurentPoly& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = m.try_emplace(x, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) m.erase(it);
}

}  // namespace

LaurentPoly HeckeElement::coeff(const AffineElement& x) const {
  auto it = terms_.find(x);
  return it == terms_.end() ? LaurentPoly{} : it->second;
}

void HeckeElement::add_term(const AffineElement& x, const LaurentPoly& c) { accumulate(terms_, x, c); }

HeckeElement& HeckeElement::operator+=(const HeckeElement& o) {
  for (const auto& [x, c] : o.terms_) accumulate(terms_, x, c);
  return *this;
}

HeckeElement& HeckeElement::operator-=(const HeckeElement& o) {
  for (const auto& [x, c] : o.terms_) accumulate(terms_, x, -c);
  return *this;
}

HeckeElement HeckeElement::operator-() const {
  HeckeElement r;
  for (const auto& [x, c] : terms_) r.terms_.emplace(x, -c);
  return r;
}

HeckeElement HeckeElement::scaled(const LaurentPoly& c) const {
  HeckeElement r;
  if (c.is_zero()) return r;
  for (const auto& [x, k] : terms_) r.terms_.emplace(x, c * k);
  return r;
}

std::size_t HeckeAlgebra::default_term_cap() {
  if (const char* env = std::getenv("HECKE_WALKS_BUDGET")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
  }
  return 100000;
}

HeckeAlgebra::HeckeAlgebra(GroupPtr group, ParameterSystem params, std::size_t term_cap)
    : group_(std::move(group)), params_(ParameterSystem::checked(*group_, std::move(params.L))), term_cap_(term_cap) {}

HeckeAlgebra::HeckeAlgebra(GroupPtr group) : HeckeAlgebra(group, ParameterSystem::equal(*group)) {}

int HeckeAlgebra::parameter_length(const AffineElement& x) const {
  int s = 0;
  for (int i : group_->reduced_word(x).letters) s += params_[i];
  return s;
}

HeckeElement HeckeAlgebra::scalar(const LaurentPoly& c) const {
  HeckeElement e;
  e.add_term(group_->identity(), c);
  return e;
}

HeckeElement HeckeAlgebra::T(const AffineElement& x) const {
  HeckeElement e;
  e.add_term(x, LaurentPoly::constant(1));
  return e;
}

HeckeElement HeckeAlgebra::Tt(const AffineElement& x) const {
  HeckeElement e;
  e.add_term(x, LaurentPoly::monomial(-parameter_length(x)));
  return e;
}

std::vector<Factor> HeckeAlgebra::factors_of(const AffineElement& x) const {
  const Word w = group_->reduced_word(x);
  std::vector<Factor> f;
  for (int i : w.letters) f.push_back({Factor::Kind::T, i});
  if (w.omega != 0) f.push_back({Factor::Kind::omega, w.omega});
  return f;
}

std::vector<Factor> HeckeAlgebra::inverse_tilde_factors(const AffineElement& x) const {
  const Word w = group_->reduced_word(x);
  std::vector<Factor> f;
  if (w.omega != 0)
    f.push_back({Factor::Kind::omega, group_->omega_class(group_->inverse(group_->omega()[w.omega].element))});
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) f.push_back({Factor::Kind::Tt_inv, *it});
  return f;
}

void HeckeAlgebra::guard(const HeckeElement& x) const {
  if (x.size() > term_cap_)
    throw std::length_error("Hecke element exceeds the term cap of " + std::to_string(term_cap_) +
                            " (raise HECKE_WALKS_BUDGET)");
}

// T_w * f, term by term.
void HeckeAlgebra::right_factor(const HeckeElement::Map& in, const Factor& f, HeckeElement::Map& out) const {
  const AffineWeylGroup& g = *group_;
  if (f.kind == Factor::Kind::omega) {
    const AffineElement& tau = g.omega()[f.index].element;
    for (const auto& [w, c] : in) accumulate(out, g.multiply(w, tau), c);
    return;
  }
  const int L = params_[f.index];
  for (const auto& [w, c] : in) {
    const AffineElement ws = g.right_reflect(w, f.index);
    const bool up = g.right_ascent(w, f.index);
    switch (f.kind) {
      case Factor::Kind::T:
        if (up) {
          accumulate(out, ws, c);
        } else {
          accumulate(out, ws, c.shifted(2 * L));
          accumulate(out, w, c.shifted(2 * L) - c);
        }
        break;
      case Factor::Kind::T_inv:
        if (up) {
          accumulate(out, ws, c.shifted(-2 * L));
          accumulate(out, w, c.shifted(-2 * L) - c);
        } else {
          accumulate(out, ws, c);
        }
        break;
      case Factor::Kind::Tt:
        if (up) {
          accumulate(out, ws, c.shifted(-L));
        } else {
          accumulate(out, ws, c.shifted(L));
          accumulate(out, w, c.shifted(L) - c.shifted(-L));
        }
        break;
      case Factor::Kind::Tt_inv:
        if (up) {
          accumulate(out, ws, c.shifted(-L));
          accumulate(out, w, c.shifted(-L) - c.shifted(L));
        } else {
          accumulate(out, ws, c.shifted(L));
        }
        break;
      case Factor::Kind::omega: break;
    }
  }
}

// f * T_w, term by term; mirror image of right_factor.
void HeckeAlgebra::left_factor(const Factor& f, const HeckeElement::Map& in, HeckeElement::Map& out) const {
  const AffineWeylGroup& g = *group_;
  if (f.kind == Factor::Kind::omega) {
    const AffineElement& tau = g.omega()[f.index].element;
    for (const auto& [w, c] : in) accumulate(out, g.multiply(tau, w), c);
    return;
  }
  const int L = params_[f.index];
  for (const auto& [w, c] : in) {
    const AffineElement sw = g.left_reflect(f.index, w);
    const bool up = g.left_ascent(f.index, w);
    switch (f.kind) {
      case Factor::Kind::T:
        if (up) {
          accumulate(out, sw, c);
        } else {
          accumulate(out, sw, c.shifted(2 * L));
          accumulate(out, w, c.shifted(2 * L) - c);
        }
        break;
      case Factor::Kind::T_inv:
        if (up) {
          accumulate(out, sw, c.shifted(-2 * L));
          accumulate(out, w, c.shifted(-2 * L) - c);
        } else {
          accumulate(out, sw, c);
        }
        break;
      case Factor::Kind::Tt:
        if (up) {
          accumulate(out, sw, c.shifted(-L));
        } else {
          accumulate(out, sw, c.shifted(L));
          accumulate(out, w, c.shifted(L) - c.shifted(-L));
        }
        break;
      case Factor::Kind::Tt_inv:
        if (up) {
          accumulate(out, sw, c.shifted(-L));
          accumulate(out, w, c.shifted(-L) - c.shifted(L));
        } else {
          accumulate(out, sw, c.shifted(L));
        }
        break;
      case Factor::Kind::omega: break;
    }
  }
}

HeckeElement HeckeAlgebra::apply_right(HeckeElement a, const std::vector<Factor>& factors) const {
  for (const auto& f : factors) {
    if (f.kind != Factor::Kind::omega && (f.index < 0 || f.index > group_->rank()))
      throw std::out_of_range("generator index out of range");
    HeckeElement next;
    HeckeElement::Map& out = next.terms_;
    out.reserve(a.size() * 2);
    right_factor(a.terms(), f, out);
    guard(next);
    a = std::move(next);
  }
  return a;
}

HeckeElement HeckeAlgebra::apply_left(const std::vector<Factor>& factors, HeckeElement a) const {
  for (auto it = factors.rbegin(); it != factors.rend(); ++it) {
    if (it->kind != Factor::Kind::omega && (it->index < 0 || it->index > group_->rank()))
      throw std::out_of_range("generator index out of range");
    HeckeElement next;
    HeckeElement::Map& out = next.terms_;
    out.reserve(a.size() * 2);
    left_factor(*it, a.terms(), out);
    guard(next);
    a = std::move(next);
  }
  return a;
}

HeckeElement HeckeAlgebra::mul_serial(const HeckeElement& a, const HeckeElement& b) const {
  HeckeElement r;
  for (const auto& [w, c] : b.terms()) r += apply_right(a, factors_of(w)).scaled(c);
  guard(r);
  return r;
}

HeckeElement HeckeAlgebra::mul_parallel(const HeckeElement& a, const HeckeElement& b) const {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<std::pair<AffineElement, LaurentPoly>> at(a.terms().begin(), a.terms().end());
  std::vector<std::pair<AffineElement, LaurentPoly>> bt(b.terms().begin(), b.terms().end());
  std::vector<std::vector<Factor>> af(at.size()), bf(bt.size());
  std::size_t cost_left = 0, cost_right = 0;
  for (std::size_t k = 0; k < at.size(); ++k) {
    af[k] = factors_of(at[k].first);
    cost_left += (af[k].size() + 1) * bt.size();
  }
  for (std::size_t k = 0; k < bt.size(); ++k) {
    bf[k] = factors_of(bt[k].first);
    cost_right += (bf[k].size() + 1) * at.size();
  }
  const bool expand_right = cost_right <= cost_left;
  const auto& terms = expand_right ? bt : at;
  const auto& factors = expand_right ? bf : af;

  HeckeElement result;
  bool failed = false;
  std::string error;
#pragma omp parallel
  {
    HeckeElement local;
#pragma omp for schedule(dynamic, 1)
    for (std::ptrdiff_t k = 0; k < static_cast<std::ptrdiff_t>(terms.size()); ++k) {
      try {
        const HeckeElement part = expand_right ? apply_right(a, factors[k]) : apply_left(factors[k], b);
        local += part.scaled(terms[k].second);
      } catch (const std::exception& e) {
#pragma omp critical(hecke_mul_error)
        {
          failed = true;
          error = e.what();
        }
      }
    }
#pragma omp critical(hecke_mul_merge)
    result += local;
  }
  if (failed) throw std::length_error(error);
  guard(result);
  return result;
}

std::vector<std::pair<AffineElement, LaurentPoly>> HeckeAlgebra::sorted_terms(const HeckeElement& x) const {
  std::vector<std::tuple<int, AffineElement, LaurentPoly>> tmp;
  for (const auto& [w, c] : x.terms()) tmp.emplace_back(group_->length(w), w, c);
  std::sort(tmp.begin(), tmp.end(), [](const auto& p, const auto& q) {
    if (std::get<0>(p) != std::get<0>(q)) return std::get<0>(p) < std::get<0>(q);
    return key_less(std::get<1>(p), std::get<1>(q));
  });
  std::vector<std::pair<AffineElement, LaurentPoly>> out;
  for (auto& [len, w, c] : tmp) out.emplace_back(std::move(w), std::move(c));
  return out;
}

std::string HeckeAlgebra::to_string(const HeckeElement& x) const {
  if (x.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [w, c] : sorted_terms(x)) {
    if (!first) os << " + ";
    os << "(" << c.to_string() << ")*T" << group_->describe(w);
    first = false;
  }
  return os.str();
}

}  // namespace hw
