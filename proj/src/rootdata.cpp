#include "hecke_walks/rootdata.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <tuple>
#include <stdexcept>

namespace hw {

namespace {

struct DynkinData {
  std::vector<int> length_sq;                   // (alpha_i, alpha_i)
  std::vector<std::tuple<int, int, int>> edges;  // (i, j, (alpha_i, alpha_j)), 1-based
};

DynkinData dynkin(CartanType type, int n) {
  DynkinData d;
  auto chain = [&](int upto, int product) {
    for (int i = 1; i < upto; ++i) d.edges.emplace_back(i, i + 1, product);
  };
  switch (type) {
    case CartanType::A:
      if (n < 1) throw std::invalid_argument("type A needs rank >= 1");
      d.length_sq.assign(n, 2);
      chain(n, -1);
      break;
    case CartanType::B:
      if (n < 2) throw std::invalid_argument("type B needs rank >= 2");
      d.length_sq.assign(n, 4);
      d.length_sq[n - 1] = 2;
      chain(n, -2);
      break;
    case CartanType::C:
      if (n < 2) throw std::invalid_argument("type C needs rank >= 2");
      d.length_sq.assign(n, 2);
      d.length_sq[n - 1] = 4;
      chain(n - 1, -1);
      d.edges.emplace_back(n - 1, n, -2);
      break;
    case CartanType::D:
      if (n < 4) throw std::invalid_argument("type D needs rank >= 4");
      d.length_sq.assign(n, 2);
      chain(n - 1, -1);
      d.edges.emplace_back(n - 2, n, -1);
      break;
    case CartanType::E:
      if (n < 6 || n > 8) throw std::invalid_argument("type E needs rank 6, 7 or 8");
      d.length_sq.assign(n, 2);
      d.edges = {{1, 3, -1}, {3, 4, -1}, {2, 4, -1}, {4, 5, -1}};
      for (int i = 5; i < n; ++i) d.edges.emplace_back(i, i + 1, -1);
      break;
    case CartanType::F:
      if (n != 4) throw std::invalid_argument("type F needs rank 4");
      d.length_sq = {4, 4, 2, 2};
      d.edges = {{1, 2, -2}, {2, 3, -2}, {3, 4, -1}};
      break;
    case CartanType::G:
      if (n != 2) throw std::invalid_argument("type G needs rank 2");
      d.length_sq = {2, 6};
      d.edges = {{1, 2, -3}};
      break;
  }
  return d;
}

Vec row_to_vec(const std::vector<std::int64_t>& row) {
  Vec v{};
  for (std::size_t i = 0; i < row.size(); ++i) v[i] = static_cast<std::int32_t>(row[i]);
  return v;
}

}  // namespace

CartanType parse_cartan_type(const std::string& s) {
  if (s == "A") return CartanType::A;
  if (s == "B") return CartanType::B;
  if (s == "C") return CartanType::C;
  if (s == "D") return CartanType::D;
  if (s == "E") return CartanType::E;
  if (s == "F") return CartanType::F;
  if (s == "G") return CartanType::G;
  throw std::invalid_argument("unknown Cartan type '" + s + "'");
}

LatticeFlavor parse_lattice_flavor(const std::string& s) {
  if (s == "adjoint") return LatticeFlavor::adjoint;
  if (s == "simply_connected" || s == "sc") return LatticeFlavor::simply_connected;
  if (s == "explicit") return LatticeFlavor::explicit_basis;
  throw std::invalid_argument("unknown lattice flavor '" + s + "'");
}

std::string to_string(CartanType t) {
  static const char* names[] = {"A", "B", "C", "D", "E", "F", "G"};
  return names[static_cast<int>(t)];
}

std::string to_string(LatticeFlavor f) {
  switch (f) {
    case LatticeFlavor::adjoint: return "adjoint";
    case LatticeFlavor::simply_connected: return "simply_connected";
    case LatticeFlavor::explicit_basis: return "explicit";
  }
  return "?";
}

Coweight Coweight::from(const std::vector<std::int64_t>& coords) {
  if (coords.size() > static_cast<std::size_t>(kMaxRank)) throw std::invalid_argument("coweight too long");
  return Coweight{row_to_vec(coords)};
}

std::vector<std::int64_t> Coweight::to_vector(int rank) const { return {c.begin(), c.begin() + rank}; }

Coweight Coweight::operator+(const Coweight& o) const {
  Coweight r;
  for (int i = 0; i < kMaxRank; ++i) r.c[i] = c[i] + o.c[i];
  return r;
}
Coweight Coweight::operator-(const Coweight& o) const {
  Coweight r;
  for (int i = 0; i < kMaxRank; ++i) r.c[i] = c[i] - o.c[i];
  return r;
}
Coweight Coweight::operator-() const {
  Coweight r;
  for (int i = 0; i < kMaxRank; ++i) r.c[i] = -c[i];
  return r;
}
Coweight Coweight::operator*(int k) const {
  Coweight r;
  for (int i = 0; i < kMaxRank; ++i) r.c[i] = c[i] * k;
  return r;
}

RootDatum RootDatum::build(CartanType type, int rank, LatticeFlavor flavor,
                           const std::optional<IntMatrix>& explicit_coroots) {
  if (rank < 1 || rank > kMaxRank) throw std::invalid_argument("rank must be in 1..8");
  const DynkinData dd = dynkin(type, rank);

  RootDatum d;
  d.type_ = type;
  d.flavor_ = flavor;
  d.rank_ = rank;
  d.length_sq_ = dd.length_sq;

  IntMatrix gram(rank, std::vector<std::int64_t>(rank, 0));
  for (int i = 0; i < rank; ++i) gram[i][i] = dd.length_sq[i];
  for (auto [i, j, p] : dd.edges) gram[i - 1][j - 1] = gram[j - 1][i - 1] = p;
  d.cartan_.assign(rank, std::vector<std::int64_t>(rank, 0));
  for (int i = 0; i < rank; ++i)
    for (int j = 0; j < rank; ++j) {
      const std::int64_t num = 2 * gram[i][j];
      if (num % gram[j][j] != 0) throw std::logic_error("non-integral Cartan entry");
      d.cartan_[i][j] = num / gram[j][j];
    }

  switch (flavor) {
    case LatticeFlavor::simply_connected:
      d.coroot_matrix_ = identity_matrix(rank);
      break;
    case LatticeFlavor::adjoint:
      d.coroot_matrix_ = d.cartan_;  // column j = (<alpha_i, alpha_j^vee>)_i
      break;
    case LatticeFlavor::explicit_basis:
      if (!explicit_coroots) throw std::invalid_argument("explicit flavor requires coroot coordinates");
      if (static_cast<int>(explicit_coroots->size()) != rank)
        throw std::invalid_argument("explicit coroot matrix must be rank x rank");
      for (const auto& row : *explicit_coroots)
        if (static_cast<int>(row.size()) != rank)
          throw std::invalid_argument("explicit coroot matrix must be rank x rank");
      d.coroot_matrix_ = *explicit_coroots;
      break;
  }

  auto kinv = inverse(d.coroot_matrix_);
  if (!kinv) throw std::invalid_argument("coroots are linearly dependent (datum would not be semisimple of this rank)");
  d.coroot_matrix_inverse_ = *kinv;
  // Root functionals R satisfy R K = C.
  RatMatrix r(rank, std::vector<Rational>(rank));
  for (int i = 0; i < rank; ++i)
    for (int j = 0; j < rank; ++j) {
      Rational s = 0;
      for (int k = 0; k < rank; ++k) s += Rational(d.cartan_[i][k]) * (*kinv)[k][j];
      r[i][j] = s;
    }
  auto rint = to_integer(r);
  if (!rint) throw std::invalid_argument("a root does not pair integrally with the lattice spanned by the given basis");
  d.functional_matrix_ = *rint;
  auto rinv = inverse(d.functional_matrix_);
  if (!rinv) throw std::logic_error("singular root functional matrix");
  d.functional_matrix_inverse_ = *rinv;
  d.fundamental_group_order_ = static_cast<int>(std::llabs(determinant(d.coroot_matrix_)));

  d.generate_roots();

  d.fund_index_.resize(rank);
  d.fund_multiple_.resize(rank);
  for (int i = 0; i < rank; ++i) {
    // omega_i^vee = R^{-1} e_i.
    std::int64_t lcm = 1;
    for (int k = 0; k < rank; ++k) {
      const auto den = d.functional_matrix_inverse_[k][i].denominator();
      lcm = std::lcm(lcm, den);
    }
    d.fund_index_[i] = static_cast<int>(lcm);
    Coweight c;
    for (int k = 0; k < rank; ++k) {
      const Rational x = d.functional_matrix_inverse_[k][i] * Rational(lcm);
      c.c[k] = static_cast<std::int32_t>(x.numerator());
    }
    d.fund_multiple_[i] = c;
  }

  std::uint32_t h = 2166136261u;
  auto mix = [&](std::int64_t x) {
    h ^= static_cast<std::uint32_t>(x);
    h *= 16777619u;
  };
  mix(static_cast<int>(type));
  mix(rank);
  for (const auto& row : d.coroot_matrix_)
    for (auto x : row) mix(x);
  d.fingerprint_ = h;
  return d;
}

void RootDatum::generate_roots() {
  const int n = rank_;
  // Reflection closure on simple-root coordinates, tracking coroots in X_*.
  std::unordered_map<Vec, Vec, VecHash> coroot_of;
  std::deque<Vec> queue;
  for (int i = 0; i < n; ++i) {
    Vec e{};
    e[i] = 1;
    Vec k{};
    for (int a = 0; a < n; ++a) k[a] = static_cast<std::int32_t>(coroot_matrix_[a][i]);
    coroot_of.emplace(e, k);
    queue.push_back(e);
  }
  while (!queue.empty()) {
    const Vec beta = queue.front();
    queue.pop_front();
    const Vec beta_coroot = coroot_of.at(beta);
    for (int j = 0; j < n; ++j) {
      std::int64_t p = 0;  // <beta, alpha_j^vee>
      for (int i = 0; i < n; ++i) p += std::int64_t{beta[i]} * cartan_[i][j];
      Vec img = beta;
      img[j] -= static_cast<std::int32_t>(p);
      if (coroot_of.count(img)) continue;
      // s_j(mu) = mu - <alpha_j, mu> alpha_j^vee
      std::int64_t q = 0;
      for (int a = 0; a < n; ++a) q += functional_matrix_[j][a] * beta_coroot[a];
      Vec kimg = beta_coroot;
      for (int a = 0; a < n; ++a) kimg[a] -= static_cast<std::int32_t>(q * coroot_matrix_[a][j]);
      coroot_of.emplace(img, kimg);
      queue.push_back(img);
    }
    if (coroot_of.size() > 1000) throw std::logic_error("root closure did not terminate");
  }
  // Add the negatives of the simple roots' orbit (closure already contains them,
  // since s_i alpha_i = -alpha_i), then order the positive ones.
  std::vector<Vec> positives;
  for (const auto& [c, k] : coroot_of) {
    bool nonneg = true, nonpos = true;
    for (int i = 0; i < n; ++i) {
      nonneg &= c[i] >= 0;
      nonpos &= c[i] <= 0;
    }
    if (!nonneg && !nonpos) throw std::logic_error("root with mixed signs");
    if (nonneg) positives.push_back(c);
  }
  auto ht = [n](const Vec& v) {
    int s = 0;
    for (int i = 0; i < n; ++i) s += v[i];
    return s;
  };
  std::sort(positives.begin(), positives.end(), [&](const Vec& a, const Vec& b) {
    const int ha = ht(a), hb = ht(b);
    if (ha != hb) return ha < hb;
    return a > b;
  });
  if (coroot_of.size() != 2 * positives.size()) throw std::logic_error("root system is not symmetric");

  num_positive_ = static_cast<int>(positives.size());
  const int total = 2 * num_positive_;
  coords_.resize(total);
  functional_.resize(total);
  coroot_.resize(total);
  height_.resize(total);
  for (int k = 0; k < num_positive_; ++k) {
    for (int sgn = 0; sgn < 2; ++sgn) {
      const int id = k + sgn * num_positive_;
      Vec c = positives[k];
      if (sgn)
        for (int i = 0; i < n; ++i) c[i] = -c[i];
      coords_[id] = c;
      coroot_[id] = coroot_of.at(c);
      Vec f{};
      for (int a = 0; a < n; ++a) {
        std::int64_t s = 0;
        for (int i = 0; i < n; ++i) s += std::int64_t{c[i]} * functional_matrix_[i][a];
        f[a] = static_cast<std::int32_t>(s);
      }
      functional_[id] = f;
      height_[id] = ht(c);
      by_coords_.emplace(c, id);
      by_functional_.emplace(f, id);
      by_coroot_.emplace(coroot_[id], id);
    }
  }
  highest_ = num_positive_ - 1;
  for (int k = 0; k < num_positive_ - 1; ++k)
    if (height_[k] == height_[highest_]) throw std::logic_error("highest root not unique");
  coxeter_number_ = height_[highest_] + 1;

  Vec s{};
  for (int k = 0; k < num_positive_; ++k)
    for (int a = 0; a < n; ++a) s[a] += coroot_[k][a];
  two_rho_check_ = Coweight{s};
}

std::string RootDatum::label() const { return to_string(type_) + std::to_string(rank_); }

RootId RootDatum::simple_root(int i) const {
  if (i < 1 || i > rank_) throw std::out_of_range("simple root index out of range");
  return i - 1;  // simple roots are the first `rank` positive roots
}

std::optional<RootId> RootDatum::root_from_coords(const Vec& c) const {
  auto it = by_coords_.find(c);
  if (it == by_coords_.end()) return std::nullopt;
  return it->second;
}

std::optional<RootId> RootDatum::root_from_functional(const Vec& f) const {
  auto it = by_functional_.find(f);
  if (it == by_functional_.end()) return std::nullopt;
  return it->second;
}

std::optional<RootId> RootDatum::root_from_coroot(const Vec& c) const {
  auto it = by_coroot_.find(c);
  if (it == by_coroot_.end()) return std::nullopt;
  return it->second;
}

std::optional<Coweight> RootDatum::fundamental_coweight(int i) const {
  if (fund_index_[i - 1] != 1) return std::nullopt;
  return fund_multiple_[i - 1];
}

bool RootDatum::is_dominant(const Coweight& lambda) const {
  for (int i = 1; i <= rank_; ++i)
    if (pairing(simple_root(i), lambda) < 0) return false;
  return true;
}

bool RootDatum::in_coroot_lattice(const Coweight& lambda) const {
  for (int i = 0; i < rank_; ++i) {
    Rational s = 0;
    for (int j = 0; j < rank_; ++j) s += coroot_matrix_inverse_[i][j] * Rational(lambda.c[j]);
    if (s.denominator() != 1) return false;
  }
  return true;
}

bool RootDatum::in_twice_character_lattice(RootId alpha) const {
  for (int a = 0; a < rank_; ++a)
    if (functional_[alpha][a] % 2 != 0) return false;
  return true;
}

IntMatrix RootDatum::simple_reflection_matrix(int i) const { return reflection_matrix(simple_root(i)); }

IntMatrix RootDatum::reflection_matrix(RootId alpha) const {
  IntMatrix m = identity_matrix(rank_);
  for (int a = 0; a < rank_; ++a)
    for (int b = 0; b < rank_; ++b) m[a][b] -= std::int64_t{coroot_[alpha][a]} * functional_[alpha][b];
  return m;
}

int classical_positive_root_count(CartanType type, int n) {
  switch (type) {
    case CartanType::A: return n * (n + 1) / 2;
    case CartanType::B:
    case CartanType::C: return n * n;
    case CartanType::D: return n * (n - 1);
    case CartanType::E: return n == 6 ? 36 : n == 7 ? 63 : 120;
    case CartanType::F: return 24;
    case CartanType::G: return 6;
  }
  return 0;
}

}  // namespace hw
