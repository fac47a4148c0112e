#include "hecke_walks/svg.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <iomanip>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace hw {

namespace {

using P = std::array<double, 2>;

constexpr const char* kPositive = "#1f77b4";
constexpr const char* kNegative = "#d62728";

// Euclidean coordinates for X_* (rank <= 2), from the invariant form
// sum over positive roots of <a, x><a, y>, normalised so that the shortest
// simple coroot has length 1.
struct Embedding {
  const RootDatum& d;
  double m[2][2] = {{1, 0}, {0, 1}};

  explicit Embedding(const RootDatum& datum) : d(datum) {
    const int r = d.rank();
    double G[2][2] = {{0, 0}, {0, 0}};
    for (RootId a = 0; a < d.num_positive_roots(); ++a)
      for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) G[i][j] += double(d.root_functional(a)[i]) * d.root_functional(a)[j];
    if (r == 1) {
      m[0][0] = std::sqrt(G[0][0]);
    } else {
      // G = U^T U with U upper triangular.
      const double u00 = std::sqrt(G[0][0]);
      const double u01 = G[0][1] / u00;
      const double u11 = std::sqrt(G[1][1] - u01 * u01);
      m[0][0] = u00;
      m[0][1] = u01;
      m[1][0] = 0;
      m[1][1] = u11;
    }
    double shortest = std::numeric_limits<double>::infinity();
    for (int i = 1; i <= r; ++i) {
      const P c = raw(coords(d.coroot(d.simple_root(i))));
      shortest = std::min(shortest, std::hypot(c[0], c[1]));
    }
    for (auto& row : m)
      for (auto& x : row) x /= shortest;
  }

  P coords(const Coweight& c) const { return {double(c[0]), d.rank() > 1 ? double(c[1]) : 0.0}; }

  P raw(const P& p) const {
    if (d.rank() == 1) return {m[0][0] * p[0], 0};
    return {m[0][0] * p[0] + m[0][1] * p[1], m[1][0] * p[0] + m[1][1] * p[1]};
  }

  // Functional on embedded coordinates representing alpha: f . raw(p) = <alpha, p>.
  P functional(RootId alpha) const {
    const auto& f = d.root_functional(alpha);
    if (d.rank() == 1) return {f[0] / m[0][0], 0};
    // Solve M^T g = f.
    const double det = m[0][0] * m[1][1] - m[0][1] * m[1][0];
    return {(m[1][1] * f[0] - m[1][0] * f[1]) / det, (-m[0][1] * f[0] + m[0][0] * f[1]) / det};
  }
};

// Vertices of x a in X_* coordinates; vertex i is opposite the wall of type i.
std::vector<P> alcove_vertices(const AffineWeylGroup& g, const AffineElement& x) {
  const RootDatum& d = g.datum();
  const int r = d.rank();
  const IntMatrix w = g.finite_matrix(x);
  std::vector<P> out;
  for (int i = 0; i <= r; ++i) {
    double p[2] = {0, 0};
    if (i > 0) {
      const Coweight m = d.fundamental_coweight_multiple(i);
      const double denom = double(d.pairing(d.simple_root(i), m)) * d.highest_root_coefficient(i);
      for (int a = 0; a < r; ++a) p[a] = m[a] / denom;
    }
    for (int a = 0; a < r; ++a) p[a] += x.lambda[a];
    P q{0, 0};
    for (int a = 0; a < r; ++a)
      for (int b = 0; b < r; ++b) q[a] += double(w[a][b]) * p[b];
    out.push_back(q);
  }
  return out;
}

std::string fmt(double x) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(2) << (std::abs(x) < 0.005 ? 0.0 : x);
  return os.str();
}

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

}  // namespace

std::string render_svg(const AffineWeylGroup& g, const Walk& walk, const SvgOptions& opt) {
  const RootDatum& d = g.datum();
  const int r = d.rank();
  if (r > 2) throw std::invalid_argument("SVG rendering needs rank <= 2");
  const Embedding E(d);
  const bool line = r == 1;

  // Alcoves along the walk and the step geometry in embedded coordinates.
  std::vector<AffineElement> visited{walk.start()};
  AffineElement cur = walk.start();
  for (const Step& s : walk.word().steps)
    if (s.crossing()) visited.push_back(cur = g.right_reflect(cur, s.type));

  auto embed = [&](const P& p) { return E.raw(p); };
  auto centre = [&](const AffineElement& x) {
    const auto v = alcove_vertices(g, x);
    P c{0, 0};
    for (const auto& p : v) {
      const P e = embed(p);
      c[0] += e[0] / v.size();
      c[1] += e[1] / v.size();
    }
    return c;
  };
  auto face_mid = [&](const AffineElement& x, int i) {
    const auto v = alcove_vertices(g, x);
    P c{0, 0};
    for (int k = 0; k <= r; ++k) {
      if (k == i) continue;
      const P e = embed(v[k]);
      c[0] += e[0] / r;
      c[1] += e[1] / r;
    }
    return c;
  };

  double lo[2] = {1e300, 1e300}, hi[2] = {-1e300, -1e300};
  for (const auto& x : visited)
    for (const auto& p : alcove_vertices(g, x)) {
      const P e = embed(p);
      for (int a = 0; a < 2; ++a) {
        lo[a] = std::min(lo[a], e[a]);
        hi[a] = std::max(hi[a], e[a]);
      }
    }
  for (int a = 0; a < 2; ++a) {
    lo[a] -= opt.margin;
    hi[a] += opt.margin;
  }
  if (line) {
    lo[1] = 0;
    hi[1] = 1;
  }
  const double S = opt.scale;
  // Screen: x right, y down.
  auto sx = [&](double x) { return (x - lo[0]) * S; };
  auto sy = [&](double y) { return (hi[1] - y) * S; };
  const double width = (hi[0] - lo[0]) * S, height = (hi[1] - lo[1]) * S;

  std::ostringstream os;
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << fmt(width) << "\" height=\"" << fmt(height)
     << "\" viewBox=\"0 0 " << fmt(width) << " " << fmt(height) << "\">\n";
  os << "  <title>" << escape(d.label() + " walk " + to_string(walk.word()) + " (" +
                              describe(g, walk.orientation()) + ")")
     << "</title>\n";
  os << "  <defs>\n";
  for (auto [id, colour] : {std::pair{"pos", kPositive}, std::pair{"neg", kNegative}})
    os << "    <marker id=\"arrow-" << id << "\" viewBox=\"0 0 10 10\" refX=\"9\" refY=\"5\" markerWidth=\"6\""
       << " markerHeight=\"6\" orient=\"auto\"><path d=\"M0,0 L10,5 L0,10 z\" fill=\"" << colour
       << "\"/></marker>\n";
  os << "  </defs>\n";
  os << "  <rect x=\"0\" y=\"0\" width=\"" << fmt(width) << "\" height=\"" << fmt(height)
     << "\" fill=\"white\"/>\n";

  // Alcoves on the walk; the start is darker.
  os << "  <g id=\"alcoves\" stroke=\"none\">\n";
  for (std::size_t k = 0; k < visited.size(); ++k) {
    const auto v = alcove_vertices(g, visited[k]);
    const char* fill = k == 0 ? "#bbbbbb" : "#e6e6e6";
    if (line) {
      const double a = embed(v[0])[0], b = embed(v[1])[0];
      os << "    <rect x=\"" << fmt(sx(std::min(a, b))) << "\" y=\"0\" width=\"" << fmt(std::abs(b - a) * S)
         << "\" height=\"" << fmt(height) << "\" fill=\"" << fill << "\"/>\n";
    } else {
      os << "    <polygon fill=\"" << fill << "\" points=\"";
      for (std::size_t q = 0; q < v.size(); ++q) {
        const P e = embed(v[q]);
        os << (q ? " " : "") << fmt(sx(e[0])) << "," << fmt(sy(e[1]));
      }
      os << "\"/>\n";
    }
  }
  os << "  </g>\n";

  // Hyperplanes meeting the box.
  os << "  <g id=\"hyperplanes\" stroke=\"#888888\" stroke-width=\"1\">\n";
  for (RootId a = 0; a < d.num_positive_roots(); ++a) {
    const P f = E.functional(a);
    double vmin = 1e300, vmax = -1e300;
    for (double x : {lo[0], hi[0]})
      for (double y : {lo[1], hi[1]}) {
        const double val = f[0] * x + (line ? 0 : f[1] * y);
        vmin = std::min(vmin, val);
        vmax = std::max(vmax, val);
      }
    for (auto n = static_cast<long>(std::ceil(vmin - 1e-9)); n <= static_cast<long>(std::floor(vmax + 1e-9)); ++n) {
      if (line) {
        const double x = n / f[0];
        os << "    <line x1=\"" << fmt(sx(x)) << "\" y1=\"0\" x2=\"" << fmt(sx(x)) << "\" y2=\"" << fmt(height)
           << "\"/>\n";
        continue;
      }
      // Intersect f . p = n with the four sides of the box.
      std::vector<P> hits;
      for (double x : {lo[0], hi[0]})
        if (std::abs(f[1]) > 1e-12) {
          const double y = (n - f[0] * x) / f[1];
          if (y >= lo[1] - 1e-9 && y <= hi[1] + 1e-9) hits.push_back({x, y});
        }
      for (double y : {lo[1], hi[1]})
        if (std::abs(f[0]) > 1e-12) {
          const double x = (n - f[1] * y) / f[0];
          if (x >= lo[0] - 1e-9 && x <= hi[0] + 1e-9) hits.push_back({x, y});
        }
      if (hits.size() < 2) continue;
      auto far = std::max_element(hits.begin(), hits.end(), [&](const P& p, const P& q) {
        return std::hypot(p[0] - hits[0][0], p[1] - hits[0][1]) < std::hypot(q[0] - hits[0][0], q[1] - hits[0][1]);
      });
      os << "    <line x1=\"" << fmt(sx(hits[0][0])) << "\" y1=\"" << fmt(sy(hits[0][1])) << "\" x2=\""
         << fmt(sx((*far)[0])) << "\" y2=\"" << fmt(sy((*far)[1])) << "\"/>\n";
    }
  }
  os << "  </g>\n";

  // Steps.
  os << "  <g id=\"steps\" fill=\"none\" stroke-width=\"2.5\">\n";
  cur = walk.start();
  const std::size_t n = walk.word().steps.size();
  for (std::size_t k = 0; k < n; ++k) {
    const Step& s = walk.word().steps[k];
    const bool pos = s.sign > 0;
    const char* colour = pos ? kPositive : kNegative;
    P a = centre(cur);
    const AffineElement next = s.crossing() ? g.right_reflect(cur, s.type) : cur;
    P b = s.crossing() ? centre(next) : face_mid(cur, s.type);
    if (line) a[1] = b[1] = 0.15 + 0.7 * double(k + 1) / double(n + 1);
    os << "    <path stroke=\"" << colour << "\" ";
    if (s.crossing()) {
      os << "marker-end=\"url(#arrow-" << (pos ? "pos" : "neg") << ")\" d=\"M" << fmt(sx(a[0])) << ","
         << fmt(sy(a[1])) << " L" << fmt(sx(b[0])) << "," << fmt(sy(b[1])) << "\">";
    } else {
      // Out to the wall and back, with the return slightly offset.
      const double dx = b[0] - a[0], dy = b[1] - a[1];
      const P back{a[0] - 0.15 * dy, a[1] + 0.15 * dx};
      os << "stroke-dasharray=\"5,3\" marker-end=\"url(#arrow-" << (pos ? "pos" : "neg") << ")\" d=\"M"
         << fmt(sx(a[0])) << "," << fmt(sy(a[1])) << " L" << fmt(sx(b[0])) << "," << fmt(sy(b[1])) << " L"
         << fmt(sx(back[0])) << "," << fmt(sy(back[1])) << "\">";
    }
    os << "<title>" << escape(to_string(s)) << "</title></path>\n";
    cur = next;
  }
  os << "  </g>\n";
  os << "</svg>\n";
  return os.str();
}

}  // namespace hw
