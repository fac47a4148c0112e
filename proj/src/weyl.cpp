#include "hecke_walks/weyl.hpp"

#include <algorithm>
#include <cstring>
#include <deque>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

namespace hw {

namespace {

constexpr int S = kMaxRank;

std::int16_t narrow(std::int64_t v) {
  if (v < std::numeric_limits<std::int16_t>::min() || v > std::numeric_limits<std::int16_t>::max())
    throw std::overflow_error("Weyl group matrix entry exceeds 16 bits");
  return static_cast<std::int16_t>(v);
}

WeylMatrix mat_mul(const WeylMatrix& a, const WeylMatrix& b, int n) {
  WeylMatrix c{};
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      std::int64_t s = 0;
      for (int k = 0; k < n; ++k) s += std::int64_t{a[i * S + k]} * b[k * S + j];
      c[i * S + j] = narrow(s);
    }
  return c;
}

Coweight mat_apply(const WeylMatrix& m, const Coweight& v, int n) {
  Coweight r;
  for (int i = 0; i < n; ++i) {
    std::int64_t s = 0;
    for (int k = 0; k < n; ++k) s += std::int64_t{m[i * S + k]} * v.c[k];
    r.c[i] = static_cast<std::int32_t>(s);
  }
  return r;
}

WeylMatrix from_int_matrix(const IntMatrix& m) {
  WeylMatrix w{};
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m[i].size(); ++j) w[i * S + j] = narrow(m[i][j]);
  return w;
}

struct LettersHash {
  std::size_t operator()(const std::vector<int>& v) const noexcept {
    std::size_t h = 0x9e3779b97f4a7c15ull;
    for (int x : v) h = (h ^ static_cast<std::size_t>(x + 1)) * 0x100000001b3ull;
    return h;
  }
};

}  // namespace

std::size_t AffineElementHash::operator()(const AffineElement& x) const noexcept {
  std::uint64_t words[sizeof(WeylMatrix) / 8];
  std::memcpy(words, x.w.data(), sizeof(WeylMatrix));
  std::uint64_t h = 0x9e3779b97f4a7c15ull ^ x.datum;
  auto mix = [&h](std::uint64_t v) {
    h ^= v + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  };
  for (auto wd : words) mix(wd);
  for (auto c : x.lambda.c) mix(static_cast<std::uint32_t>(c));
  return static_cast<std::size_t>(h);
}

bool key_less(const AffineElement& x, const AffineElement& y) {
  if (x.lambda != y.lambda) return x.lambda < y.lambda;
  return x.w < y.w;
}

std::string to_string(const Move& m) {
  std::ostringstream os;
  switch (m.kind) {
    case Move::Kind::nil_delete: os << "nil_delete(" << m.pos << ")"; break;
    case Move::Kind::nil_insert: os << "nil_insert(" << m.pos << "," << m.i << ")"; break;
    case Move::Kind::braid: os << "braid(" << m.pos << "," << m.i << "," << m.j << ")"; break;
  }
  return os.str();
}

AffineWeylGroup::AffineWeylGroup(RootDatum datum) : datum_(std::move(datum)) {
  const int r = rank();
  generators_.reserve(r + 1);
  const RootId theta = datum_.highest_root();
  generators_.push_back(from_parts(datum_.reflection_matrix(theta), -datum_.coroot(theta)));
  for (int i = 1; i <= r; ++i) generators_.push_back(from_parts(datum_.simple_reflection_matrix(i), Coweight{}));

  // Extended Cartan integers with a_0 = -theta.
  auto functional = [&](int i) {
    Vec f = datum_.root_functional(i == 0 ? theta : datum_.simple_root(i));
    if (i == 0)
      for (auto& x : f) x = -x;
    return f;
  };
  auto coroot = [&](int i) { return i == 0 ? -datum_.coroot(theta) : datum_.coroot(datum_.simple_root(i)); };
  coxeter_.assign(r + 1, std::vector<int>(r + 1, 1));
  for (int i = 0; i <= r; ++i)
    for (int j = 0; j <= r; ++j) {
      if (i == j) continue;
      const std::int64_t p = dot(functional(i), coroot(j).c, r) * dot(functional(j), coroot(i).c, r);
      static const int table[] = {2, 3, 4, 6, 0};
      if (p < 0 || p > 4) throw std::logic_error("unexpected extended Cartan product");
      coxeter_[i][j] = table[p];
    }
  build_omega();
}

std::shared_ptr<const AffineWeylGroup> AffineWeylGroup::make(RootDatum datum) {
  return std::make_shared<const AffineWeylGroup>(std::move(datum));
}

void AffineWeylGroup::check(const AffineElement& x) const {
  if (x.datum != datum_.fingerprint()) throw std::invalid_argument("element belongs to a different root datum");
}

AffineElement AffineWeylGroup::identity() const {
  AffineElement e;
  for (int i = 0; i < rank(); ++i) e.w[i * S + i] = e.w_inv[i * S + i] = 1;
  e.datum = datum_.fingerprint();
  return e;
}

AffineElement AffineWeylGroup::simple_reflection(int i) const {
  if (i < 0 || i > rank()) throw std::out_of_range("simple reflection index out of range");
  return generators_[i];
}

AffineElement AffineWeylGroup::translation(const Coweight& lambda) const {
  AffineElement e = identity();
  e.lambda = lambda;
  return e;
}

AffineElement AffineWeylGroup::from_parts(const IntMatrix& w, const Coweight& lambda) const {
  const int n = rank();
  if (static_cast<int>(w.size()) != n) throw std::invalid_argument("matrix size does not match rank");
  auto winv = hw::inverse(w);
  if (!winv) throw std::invalid_argument("singular matrix is not a Weyl group element");
  auto winv_int = to_integer(*winv);
  if (!winv_int) throw std::invalid_argument("matrix is not unimodular, so not a Weyl group element");
  AffineElement x;
  x.w = from_int_matrix(w);
  x.w_inv = from_int_matrix(*winv_int);
  x.lambda = lambda;
  x.datum = datum_.fingerprint();
  return x;
}

AffineElement AffineWeylGroup::finite_from_matrix(const IntMatrix& m) const {
  AffineElement x = from_parts(m, Coweight{});
  // Must permute the roots.
  for (RootId b = 0; b < datum_.num_roots(); ++b) {
    Vec img{};
    const Vec& k = datum_.coroot(b).c;
    for (int a = 0; a < rank(); ++a) {
      std::int64_t s = 0;
      for (int c = 0; c < rank(); ++c) s += std::int64_t{x.w[a * S + c]} * k[c];
      img[a] = static_cast<std::int32_t>(s);
    }
    if (!datum_.root_from_coroot(img)) throw std::invalid_argument("matrix does not permute the coroots");
  }
  for (RootId b = 0; b < datum_.num_roots(); ++b) {
    Vec f{};
    for (int c = 0; c < rank(); ++c) {
      std::int64_t s = 0;
      for (int a = 0; a < rank(); ++a) s += std::int64_t{datum_.root_functional(b)[a]} * x.w[a * S + c];
      f[c] = static_cast<std::int32_t>(s);
    }
    if (!datum_.root_from_functional(f)) throw std::invalid_argument("matrix does not permute the roots");
  }
  return x;
}

IntMatrix AffineWeylGroup::finite_matrix(const AffineElement& x) const {
  IntMatrix m(rank(), std::vector<std::int64_t>(rank()));
  for (int a = 0; a < rank(); ++a)
    for (int b = 0; b < rank(); ++b) m[a][b] = x.w[a * S + b];
  return m;
}

AffineElement AffineWeylGroup::multiply(const AffineElement& x, const AffineElement& y) const {
  check(x);
  check(y);
  const int n = rank();
  AffineElement z;
  z.w = mat_mul(x.w, y.w, n);
  z.w_inv = mat_mul(y.w_inv, x.w_inv, n);
  z.lambda = mat_apply(y.w_inv, x.lambda, n) + y.lambda;
  z.datum = x.datum;
  return z;
}

AffineElement AffineWeylGroup::inverse(const AffineElement& x) const {
  check(x);
  AffineElement z;
  z.w = x.w_inv;
  z.w_inv = x.w;
  z.lambda = -mat_apply(x.w, x.lambda, rank());
  z.datum = x.datum;
  return z;
}

Coweight AffineWeylGroup::apply_finite(const AffineElement& x, const Coweight& mu) const {
  return mat_apply(x.w, mu, rank());
}

Coweight AffineWeylGroup::apply_finite_inverse(const AffineElement& x, const Coweight& mu) const {
  return mat_apply(x.w_inv, mu, rank());
}

RootId AffineWeylGroup::act_on_root(const AffineElement& x, RootId beta) const {
  const Coweight img = apply_finite(x, datum_.coroot(beta));
  auto id = datum_.root_from_coroot(img.c);
  if (!id) throw std::logic_error("finite part does not permute coroots");
  return *id;
}

RootId AffineWeylGroup::act_on_root_inverse(const AffineElement& x, RootId beta) const {
  // (w^{-1} beta)(mu) = beta(w mu): the functional is f * W.
  const int n = rank();
  const Vec& f = datum_.root_functional(beta);
  Vec g{};
  for (int b = 0; b < n; ++b) {
    std::int64_t s = 0;
    for (int a = 0; a < n; ++a) s += std::int64_t{f[a]} * x.w[a * S + b];
    g[b] = static_cast<std::int32_t>(s);
  }
  auto id = datum_.root_from_functional(g);
  if (!id) throw std::logic_error("finite part does not permute roots");
  return *id;
}

std::int64_t AffineWeylGroup::scaled_sample_pairing(const AffineElement& x, RootId beta) const {
  const RootId g = act_on_root_inverse(x, beta);
  return std::int64_t{datum_.coxeter_number()} * datum_.pairing(g, x.lambda) + datum_.height(g);
}

int AffineWeylGroup::length(const AffineElement& x) const {
  check(x);
  const Coweight u = apply_finite_inverse(x, datum_.two_rho_check());
  int len = 0;
  for (RootId a = 0; a < datum_.num_positive_roots(); ++a) {
    const std::int64_t n = datum_.pairing(a, x.lambda);
    const bool flips = datum_.pairing(a, u) < 0;  // w(alpha) < 0
    len += static_cast<int>(flips ? std::llabs(n + 1) : std::llabs(n));
  }
  return len;
}

bool AffineWeylGroup::left_ascent(int i, const AffineElement& x) const {
  check(x);
  if (i < 0 || i > rank()) throw std::out_of_range("generator index out of range");
  const RootId beta = i == 0 ? datum_.highest_root() : datum_.simple_root(i);
  const RootId g = act_on_root_inverse(x, beta);
  const std::int64_t n = datum_.pairing(g, x.lambda);
  if (i == 0) return n <= 0 || (n == 1 && !datum_.is_positive(g));
  return n > 0 || (n == 0 && datum_.is_positive(g));
}

bool AffineWeylGroup::right_ascent(const AffineElement& x, int i) const { return left_ascent(i, inverse(x)); }

Word AffineWeylGroup::reduced_word(const AffineElement& x0) const {
  check(x0);
  Word word;
  AffineElement x = x0;
  const int len = length(x0);
  for (int step = 0; step < len; ++step) {
    int found = -1;
    for (int i = 0; i <= rank(); ++i)
      if (!left_ascent(i, x)) {
        found = i;
        break;
      }
    if (found < 0) throw std::logic_error("reduced_word: no descent although length > 0");
    word.letters.push_back(found);
    x = left_reflect(found, x);
  }
  for (std::size_t k = 0; k < omega_.size(); ++k)
    if (omega_[k].element == x) {
      word.omega = static_cast<int>(k);
      return word;
    }
  throw std::logic_error("reduced_word: remainder is not in Omega");
}

AffineElement AffineWeylGroup::evaluate_letters(const std::vector<int>& letters) const {
  AffineElement x = identity();
  for (int i : letters) {
    if (i < 0 || i > rank()) throw std::out_of_range("letter out of range");
    x = multiply(x, generators_[i]);
  }
  return x;
}

AffineElement AffineWeylGroup::evaluate(const Word& word) const {
  if (word.omega < 0 || word.omega >= static_cast<int>(omega_.size())) throw std::out_of_range("omega index out of range");
  return multiply(evaluate_letters(word.letters), omega_[word.omega].element);
}

void AffineWeylGroup::build_omega() {
  std::vector<Coweight> candidates{Coweight{}};
  for (int j = 1; j <= rank(); ++j)
    if (datum_.highest_root_coefficient(j) == 1)
      if (auto w = datum_.fundamental_coweight(j)) candidates.push_back(*w);
  for (const Coweight& lam : candidates) {
    AffineElement x = translation(lam);
    for (bool moved = true; moved;) {
      moved = false;
      for (int i = 0; i <= rank(); ++i)
        if (!right_ascent(x, i)) {
          x = right_reflect(x, i);
          moved = true;
          break;
        }
    }
    if (length(x) != 0) throw std::logic_error("Omega construction failed");
    OmegaElement o;
    o.element = x;
    o.origin_image = origin_image(x);
    omega_.push_back(std::move(o));
  }
  if (static_cast<int>(omega_.size()) != datum_.fundamental_group_order())
    throw std::logic_error("|Omega| differs from |X_*/Q^vee|");
  for (auto& o : omega_) {
    const AffineElement inv = inverse(o.element);
    for (int i = 0; i <= rank(); ++i) {
      const AffineElement c = multiply(multiply(o.element, generators_[i]), inv);
      int j = 0;
      while (j <= rank() && !(generators_[j] == c)) ++j;
      if (j > rank()) throw std::logic_error("Omega element does not normalise the generators");
      o.type_permutation.push_back(j);
    }
  }
}

int AffineWeylGroup::omega_class(const AffineElement& x) const {
  check(x);
  for (std::size_t k = 0; k < omega_.size(); ++k)
    if (datum_.in_coroot_lattice(x.lambda - omega_[k].element.lambda)) return static_cast<int>(k);
  throw std::logic_error("element has no Omega class");
}

AffineElement AffineWeylGroup::affine_part(const AffineElement& x) const {
  return multiply(x, inverse(omega_[omega_class(x)].element));
}

bool AffineWeylGroup::in_affine_weyl_group(const AffineElement& x) const {
  return datum_.in_coroot_lattice(x.lambda);
}

std::vector<AffineElement> AffineWeylGroup::finite_weyl_group(std::size_t cap) const {
  std::vector<AffineElement> out{identity()};
  std::unordered_set<AffineElement> seen{identity()};
  for (std::size_t k = 0; k < out.size(); ++k)
    for (int i = 1; i <= rank(); ++i) {
      AffineElement y = multiply(generators_[i], out[k]);
      if (seen.insert(y).second) {
        out.push_back(y);
        if (out.size() > cap) throw std::length_error("finite Weyl group too large to enumerate");
      }
    }
  return out;
}

AffineElement AffineWeylGroup::longest_finite_element() const { return longest_in_stabilizer(Coweight{}); }

AffineElement AffineWeylGroup::longest_in_stabilizer(const Coweight& mu) const {
  if (!datum_.is_dominant(mu)) throw std::invalid_argument("longest_in_stabilizer expects a dominant coweight");
  std::vector<int> gens;
  for (int i = 1; i <= rank(); ++i)
    if (datum_.pairing(datum_.simple_root(i), mu) == 0) gens.push_back(i);
  AffineElement x = identity();
  for (bool moved = true; moved;) {
    moved = false;
    for (int i : gens)
      if (left_ascent(i, x)) {
        x = left_reflect(i, x);
        moved = true;
        break;
      }
  }
  return x;
}

bool AffineWeylGroup::bruhat_le(const AffineElement& x, const AffineElement& y) const {
  if (omega_class(x) != omega_class(y)) return false;
  const AffineElement xa = affine_part(x), ya = affine_part(y);
  if (length(xa) > length(ya)) return false;
  const Word wy = reduced_word(ya);
  std::unordered_set<AffineElement> prefixes{identity()};
  for (int letter : wy.letters) {
    std::vector<AffineElement> next;
    for (const auto& p : prefixes) next.push_back(multiply(p, generators_[letter]));
    prefixes.insert(next.begin(), next.end());
  }
  return prefixes.count(xa) > 0;
}

std::vector<AffineElement> AffineWeylGroup::affine_elements_up_to(int max_length) const {
  std::vector<AffineElement> out{identity()};
  std::unordered_set<AffineElement> seen{identity()};
  std::size_t layer_begin = 0;
  for (int len = 0; len < max_length; ++len) {
    const std::size_t layer_end = out.size();
    for (std::size_t k = layer_begin; k < layer_end; ++k)
      for (int i = 0; i <= rank(); ++i)
        if (left_ascent(i, out[k])) {
          AffineElement y = left_reflect(i, out[k]);
          if (seen.insert(y).second) out.push_back(y);
        }
    layer_begin = layer_end;
  }
  return out;
}

Word AffineWeylGroup::apply_move(const Word& word, const Move& move) const {
  Word out = word;
  auto& l = out.letters;
  const int n = static_cast<int>(l.size());
  switch (move.kind) {
    case Move::Kind::nil_delete:
      if (move.pos < 0 || move.pos + 1 >= n || l[move.pos] != l[move.pos + 1])
        throw std::invalid_argument("nil_delete: no repeated letter at position");
      l.erase(l.begin() + move.pos, l.begin() + move.pos + 2);
      break;
    case Move::Kind::nil_insert:
      if (move.pos < 0 || move.pos > n || move.i < 0 || move.i > rank())
        throw std::invalid_argument("nil_insert: bad position or letter");
      l.insert(l.begin() + move.pos, {move.i, move.i});
      break;
    case Move::Kind::braid: {
      if (move.i < 0 || move.i > rank() || move.j < 0 || move.j > rank() || move.i == move.j)
        throw std::invalid_argument("braid: bad letters");
      const int m = coxeter_m(move.i, move.j);
      if (m == 0) throw std::invalid_argument("braid: generators have infinite order product");
      if (move.pos < 0 || move.pos + m > n) throw std::invalid_argument("braid: pattern out of range");
      for (int k = 0; k < m; ++k)
        if (l[move.pos + k] != (k % 2 == 0 ? move.i : move.j)) throw std::invalid_argument("braid: pattern mismatch");
      for (int k = 0; k < m; ++k) l[move.pos + k] = (k % 2 == 0 ? move.j : move.i);
      break;
    }
  }
  return out;
}

std::vector<Move> AffineWeylGroup::connect_words(const Word& from, const Word& to, std::size_t node_budget) const {
  if (from.omega != to.omega || !(evaluate(from) == evaluate(to)))
    throw std::invalid_argument("connect_words: words evaluate to different elements");
  const std::size_t cap = std::max(from.letters.size(), to.letters.size());

  struct Parent {
    std::vector<int> prev;
    Move move;
  };
  std::unordered_map<std::vector<int>, Parent, LettersHash> parent;
  std::deque<std::vector<int>> queue{from.letters};
  parent.emplace(from.letters, Parent{{}, {}});

  auto neighbours = [&](const std::vector<int>& l) {
    std::vector<Move> moves;
    const int n = static_cast<int>(l.size());
    for (int p = 0; p + 1 < n; ++p)
      if (l[p] == l[p + 1]) moves.push_back({Move::Kind::nil_delete, p, 0, 0});
    for (int p = 0; p + 1 < n; ++p) {
      const int i = l[p], j = l[p + 1];
      if (i == j) continue;
      const int m = coxeter_m(i, j);
      if (m == 0 || p + m > n) continue;
      bool ok = true;
      for (int k = 0; k < m && ok; ++k) ok = l[p + k] == (k % 2 == 0 ? i : j);
      if (ok) moves.push_back({Move::Kind::braid, p, i, j});
    }
    if (l.size() + 2 <= cap)
      for (int p = 0; p <= n; ++p)
        for (int i = 0; i <= rank(); ++i) moves.push_back({Move::Kind::nil_insert, p, i, 0});
    return moves;
  };

  while (!queue.empty()) {
    std::vector<int> cur = std::move(queue.front());
    queue.pop_front();
    if (cur == to.letters) {
      std::vector<Move> path;
      while (cur != from.letters) {
        const Parent& p = parent.at(cur);
        path.push_back(p.move);
        cur = p.prev;
      }
      std::reverse(path.begin(), path.end());
      return path;
    }
    for (const Move& m : neighbours(cur)) {
      Word next = apply_move(Word{cur, from.omega}, m);
      if (parent.count(next.letters)) continue;
      parent.emplace(next.letters, Parent{cur, m});
      if (parent.size() > node_budget) throw std::runtime_error("connect_words: node budget exhausted");
      queue.push_back(std::move(next.letters));
    }
  }
  throw std::logic_error("connect_words: search space exhausted without reaching target");
}

std::string AffineWeylGroup::describe(const AffineElement& x) const {
  const Word w = reduced_word(x);
  std::ostringstream os;
  os << "[";
  for (std::size_t k = 0; k < w.letters.size(); ++k) os << (k ? "," : "") << w.letters[k];
  os << "]";
  if (w.omega != 0) os << "*tau" << w.omega;
  return os.str();
}

}  // namespace hw
