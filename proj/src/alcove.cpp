#include "hecke_walks/alcove.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <tuple>

namespace hw {

namespace {

std::string join(const std::vector<int>& v) {
  std::string s;
  for (std::size_t k = 0; k < v.size(); ++k) s += (k ? "," : "") + std::to_string(v[k]);
  return s;
}

int sign_of(std::int64_t v) { return v > 0 ? 1 : -1; }

// Extended Euclid: returns g = gcd(a, b) >= 0 with x a + y b = g.
std::int64_t ext_gcd(std::int64_t a, std::int64_t b, std::int64_t& x, std::int64_t& y) {
  std::int64_t x0 = 1, y0 = 0, x1 = 0, y1 = 1;
  while (b != 0) {
    const std::int64_t q = a / b;
    std::tie(a, b) = std::make_pair(b, a - q * b);
    std::tie(x0, x1) = std::make_pair(x1, x0 - q * x1);
    std::tie(y0, y1) = std::make_pair(y1, y0 - q * y1);
  }
  if (a < 0) {
    a = -a;
    x0 = -x0;
    y0 = -y0;
  }
  x = x0;
  y = y0;
  return a;
}

// Letters of some u in W (as s_{l_0} s_{l_1} ...) with u(from) = to, if any.
std::optional<std::vector<int>> conjugating_word(const AffineWeylGroup& g, RootId from, RootId to) {
  const RootDatum& d = g.datum();
  std::vector<int> parent(d.num_roots(), -2), via(d.num_roots(), 0);
  std::deque<RootId> queue{from};
  parent[from] = -1;
  while (!queue.empty()) {
    const RootId b = queue.front();
    queue.pop_front();
    if (b == to) break;
    for (int j = 1; j <= g.rank(); ++j) {
      const RootId c = g.act_on_root(g.simple_reflection(j), b);
      if (parent[c] != -2) continue;
      parent[c] = b;
      via[c] = j;
      queue.push_back(c);
    }
  }
  if (parent[to] == -2) return std::nullopt;
  // Walking back from `to` lists the reflections in left-to-right order.
  std::vector<int> letters;
  for (RootId c = to; parent[c] != -1; c = parent[c]) letters.push_back(via[c]);
  return letters;
}

}  // namespace

Hyperplane Hyperplane::normalized(const RootDatum& d, RootId beta, std::int64_t n) {
  if (d.is_positive(beta)) return {beta, n};
  return {d.negate(beta), -n};
}

std::string to_string(const RootDatum& d, const Hyperplane& h) {
  std::ostringstream os;
  os << "H(";
  for (int a = 0; a < d.rank(); ++a) os << (a ? "," : "") << d.root_coords(h.alpha)[a];
  os << ";" << h.level << ")";
  return os.str();
}

Orientation parse_orientation(const AffineWeylGroup& g, const std::string& spec) {
  if (spec == "standard") return Orientation::standard();
  const auto colon = spec.find(':');
  if (colon == std::string::npos) throw std::invalid_argument("unknown orientation '" + spec + "'");
  const std::string kind = spec.substr(0, colon);
  std::vector<int> letters;
  for (auto v : parse_int_list(spec.substr(colon + 1))) letters.push_back(static_cast<int>(v));
  if (kind == "chamber") {
    for (int l : letters)
      if (l < 1 || l > g.rank()) throw std::invalid_argument("chamber words use letters 1..r");
    return Orientation::chamber(g.evaluate_letters(letters));
  }
  for (int l : letters)
    if (l < 0 || l > g.rank()) throw std::invalid_argument("alcove words use letters 0..r");
  if (kind == "alcove-neg") return Orientation::alcove_negative(g.evaluate_letters(letters));
  if (kind == "alcove-pos") return Orientation::alcove_positive(g.evaluate_letters(letters));
  throw std::invalid_argument("unknown orientation kind '" + kind + "'");
}

std::string describe(const AffineWeylGroup& g, const Orientation& o) {
  switch (o.kind) {
    case Orientation::Kind::standard: return "standard";
    case Orientation::Kind::chamber: return "chamber:" + join(g.reduced_word(*o.ref).letters);
    case Orientation::Kind::alcove_negative: return "alcove-neg:" + join(g.reduced_word(*o.ref).letters);
    case Orientation::Kind::alcove_positive: return "alcove-pos:" + join(g.reduced_word(*o.ref).letters);
  }
  return {};
}

Hyperplane base_wall(const RootDatum& d, int i) {
  if (i < 0 || i > d.rank()) throw std::out_of_range("wall type out of range");
  if (i == 0) return {d.highest_root(), 1};
  return {d.simple_root(i), 0};
}

Hyperplane transform(const AffineWeylGroup& g, const AffineElement& x, const Hyperplane& h) {
  // x(p) = w(p + lambda), so <w beta, x(p)> = <beta, p> + <beta, lambda>.
  const RootDatum& d = g.datum();
  return Hyperplane::normalized(d, g.act_on_root(x, h.alpha), h.level + d.pairing(h.alpha, x.lambda));
}

Hyperplane wall(const AffineWeylGroup& g, const AffineElement& x, int i) {
  return transform(g, x, base_wall(g.datum(), i));
}

std::int64_t scaled_offset(const AffineWeylGroup& g, const Hyperplane& h, const AffineElement& x) {
  return g.scaled_sample_pairing(x, h.alpha) - h.level * g.datum().coxeter_number();
}

Side side(const AffineWeylGroup& g, const Orientation& o, const Hyperplane& h, const AffineElement& x) {
  const int s = sign_of(scaled_offset(g, h, x));
  int oriented = s;
  switch (o.kind) {
    case Orientation::Kind::standard: break;
    case Orientation::Kind::chamber:
      if (!g.datum().is_positive(g.act_on_root_inverse(*o.ref, h.alpha))) oriented = -s;
      break;
    case Orientation::Kind::alcove_negative:
      oriented = s == sign_of(scaled_offset(g, h, *o.ref)) ? -1 : 1;
      break;
    case Orientation::Kind::alcove_positive:
      oriented = s == sign_of(scaled_offset(g, h, *o.ref)) ? 1 : -1;
      break;
  }
  return oriented > 0 ? Side::positive : Side::negative;
}

std::vector<int> crossing_signs(const AffineWeylGroup& g, const std::vector<int>& letters, const Orientation& o,
                                const std::optional<AffineElement>& start) {
  AffineElement cur = start ? *start : g.identity();
  std::vector<int> eps;
  eps.reserve(letters.size());
  for (int i : letters) {
    eps.push_back(side(g, o, wall(g, cur, i), cur) == Side::negative ? 1 : -1);
    cur = g.right_reflect(cur, i);
  }
  return eps;
}

std::vector<std::vector<int>> simple_conjugacy_classes(const AffineWeylGroup& g) {
  const int n = g.num_generators();
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  };
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (g.coxeter_m(i, j) % 2 == 1) parent[find(i)] = find(j);
  std::vector<std::vector<int>> classes;
  std::vector<int> slot(n, -1);
  for (int i = 0; i < n; ++i) {
    const int root = find(i);
    if (slot[root] < 0) {
      slot[root] = static_cast<int>(classes.size());
      classes.emplace_back();
    }
    classes[slot[root]].push_back(i);
  }
  return classes;
}

ParameterSystem ParameterSystem::equal(const AffineWeylGroup& g, int value) {
  return checked(g, std::vector<int>(g.num_generators(), value));
}

ParameterSystem ParameterSystem::checked(const AffineWeylGroup& g, std::vector<int> L) {
  if (static_cast<int>(L.size()) != g.num_generators())
    throw std::invalid_argument("parameter list needs " + std::to_string(g.num_generators()) + " entries (L_0..L_r)");
  for (int x : L)
    if (x < 0) throw std::invalid_argument("parameters must be non-negative");
  for (const auto& cls : simple_conjugacy_classes(g))
    for (int i : cls)
      if (L[i] != L[cls.front()])
        throw std::invalid_argument("L_" + std::to_string(i) + " != L_" + std::to_string(cls.front()) +
                                    " although s_" + std::to_string(i) + " and s_" + std::to_string(cls.front()) +
                                    " are conjugate in W_a");
  for (const auto& o : g.omega())
    for (int i = 0; i < g.num_generators(); ++i)
      if (L[o.type_permutation[i]] != L[i])
        throw std::invalid_argument("L_" + std::to_string(i) + " != L_" + std::to_string(o.type_permutation[i]) +
                                    " although an element of Omega conjugates s_" + std::to_string(i) + " to s_" +
                                    std::to_string(o.type_permutation[i]) +
                                    (g.datum().flavor() == LatticeFlavor::adjoint
                                         ? "; use the simply_connected flavor for independent parameters"
                                         : ""));
  return ParameterSystem{std::move(L)};
}

FaceWitness face_of(const AffineWeylGroup& g, const Hyperplane& h) {
  const RootDatum& d = g.datum();
  for (int i = 0; i <= g.rank(); ++i) {
    const Hyperplane b = base_wall(d, i);
    const auto word = conjugating_word(g, b.alpha, h.alpha);
    if (!word) continue;  // different root length
    // Need mu in Q^vee with <alpha, mu> = n - c.
    std::int64_t gcd = 0;
    std::vector<std::int64_t> coef(g.rank(), 0);
    for (int j = 1; j <= g.rank(); ++j) {
      const std::int64_t a = d.pairing(h.alpha, d.coroot(d.simple_root(j)));
      std::int64_t x = 0, y = 0;
      gcd = ext_gcd(gcd, a, x, y);
      for (auto& c : coef) c *= x;
      coef[j - 1] = y;
    }
    const std::int64_t target = h.level - b.level;
    if (target % gcd != 0) continue;
    Coweight mu;
    for (int j = 1; j <= g.rank(); ++j) mu = mu + d.coroot(d.simple_root(j)) * static_cast<int>(coef[j - 1] * (target / gcd));
    const AffineElement x = g.multiply(g.translation(mu), g.evaluate_letters(*word));
    if (!(wall(g, x, i) == h)) throw std::logic_error("face_of: constructed alcove does not have the wall");
    return {x, i};
  }
  throw std::logic_error("face_of: hyperplane is not a wall of any alcove");
}

int hyperplane_parameter(const AffineWeylGroup& g, const ParameterSystem& L, const Hyperplane& h) {
  return L[face_of(g, h).type];
}

}  // namespace hw
