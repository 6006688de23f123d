#pragma once

#include <array>
#include <cmath>
#include <compare>
#include <complex>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace gridcurve {

using i64 = std::int64_t;

// r + s*sqrt(K), exact.
template <int K>
struct Surd {
  i64 r = 0;
  i64 s = 0;

  friend Surd operator+(Surd a, Surd b) { return {a.r + b.r, a.s + b.s}; }
  friend Surd operator-(Surd a, Surd b) { return {a.r - b.r, a.s - b.s}; }
  friend Surd operator-(Surd a) { return {-a.r, -a.s}; }
  friend Surd operator*(Surd a, Surd b) {
    return {a.r * b.r + K * a.s * b.s, a.r * b.s + a.s * b.r};
  }
  friend bool operator==(Surd, Surd) = default;

  int sign() const {
    if (r >= 0 && s >= 0) return (r > 0 || s > 0) ? 1 : 0;
    if (r <= 0 && s <= 0) return -1;
    __int128 rr = static_cast<__int128>(r) * r;
    __int128 ss = static_cast<__int128>(K) * s * s;
    if (r > 0) return rr > ss ? 1 : -1;
    return ss > rr ? 1 : -1;
  }
  bool is_integer() const { return s == 0; }
  double value() const { return static_cast<double>(r) + static_cast<double>(s) * std::sqrt(double(K)); }
};

template <int K>
int compare(Surd<K> a, Surd<K> b) {
  return (a - b).sign();
}

// Ring data for Z[zeta_N], N in {12, 8}; both have degree 4.
template <int N>
struct Cyclotomic;

template <>
struct Cyclotomic<12> {
  static constexpr int radicand = 3;
  // zeta^4 = zeta^2 - 1
  static constexpr std::array<i64, 4> x4 = {-1, 0, 1, 0};
  // doubled cartesian coordinates of 1, zeta, zeta^2, zeta^3
  static constexpr std::array<std::array<i64, 4>, 4> cart2 = {{
      {2, 0, 0, 0},  // (2, 0)
      {0, 1, 1, 0},  // (sqrt3, 1)
      {1, 0, 0, 1},  // (1, sqrt3)
      {0, 0, 2, 0},  // (0, 2)
  }};
};

template <>
struct Cyclotomic<8> {
  static constexpr int radicand = 2;
  // eta^4 = -1
  static constexpr std::array<i64, 4> x4 = {-1, 0, 0, 0};
  static constexpr std::array<std::array<i64, 4>, 4> cart2 = {{
      {2, 0, 0, 0},   // (2, 0)
      {0, 1, 0, 1},   // (sqrt2, sqrt2)
      {0, 0, 2, 0},   // (0, 2)
      {0, -1, 0, 1},  // (-sqrt2, sqrt2)
  }};
};

// a + b*z + c*z^2 + d*z^3 with z = exp(2*pi*i/N).
template <int N>
struct CycloPoint {
  static constexpr int kDirections = N;
  static constexpr int kRadicand = Cyclotomic<N>::radicand;
  using Real = Surd<kRadicand>;

  i64 a = 0, b = 0, c = 0, d = 0;

  friend auto operator<=>(const CycloPoint&, const CycloPoint&) = default;
  friend bool operator==(const CycloPoint&, const CycloPoint&) = default;

  friend CycloPoint operator+(CycloPoint p, CycloPoint q) { return {p.a + q.a, p.b + q.b, p.c + q.c, p.d + q.d}; }
  friend CycloPoint operator-(CycloPoint p, CycloPoint q) { return {p.a - q.a, p.b - q.b, p.c - q.c, p.d - q.d}; }
  friend CycloPoint operator-(CycloPoint p) { return {-p.a, -p.b, -p.c, -p.d}; }
  friend CycloPoint operator*(i64 k, CycloPoint p) { return {k * p.a, k * p.b, k * p.c, k * p.d}; }
  CycloPoint& operator+=(CycloPoint q) { return *this = *this + q; }
  CycloPoint& operator-=(CycloPoint q) { return *this = *this - q; }

  bool is_zero() const { return a == 0 && b == 0 && c == 0 && d == 0; }
  std::array<i64, 4> coeffs() const { return {a, b, c, d}; }
  static CycloPoint from(const std::array<i64, 4>& v) { return {v[0], v[1], v[2], v[3]}; }
};

using ExactPoint = CycloPoint<12>;
using OctPoint = CycloPoint<8>;

namespace detail {

// Reduce a polynomial of degree <= 6 modulo the minimal polynomial.
template <int N>
CycloPoint<N> reduce(std::array<i64, 7> p) {
  constexpr auto x4 = Cyclotomic<N>::x4;
  for (int k = 6; k >= 4; --k) {
    i64 v = p[k];
    if (v == 0) continue;
    p[k] = 0;
    for (int j = 0; j < 4; ++j) p[k - 4 + j] += v * x4[j];
  }
  return {p[0], p[1], p[2], p[3]};
}

}  // namespace detail

template <int N>
CycloPoint<N> rotate1(CycloPoint<N> p) {
  return detail::reduce<N>({0, p.a, p.b, p.c, p.d, 0, 0});
}

inline int mod(int k, int n) {
  int r = k % n;
  return r < 0 ? r + n : r;
}

template <int N>
CycloPoint<N> rotate(CycloPoint<N> p, int steps) {
  steps = mod(steps, N);
  if (steps >= N / 2) {
    p = -p;
    steps -= N / 2;
  }
  for (int i = 0; i < steps; ++i) p = rotate1(p);
  return p;
}

template <int N = 12>
CycloPoint<N> unit(int k) {
  return rotate(CycloPoint<N>{1, 0, 0, 0}, k);
}

template <int N>
CycloPoint<N> operator*(CycloPoint<N> p, CycloPoint<N> q) {
  auto x = p.coeffs();
  auto y = q.coeffs();
  std::array<i64, 7> r{};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) r[i + j] += x[i] * y[j];
  return detail::reduce<N>(r);
}

// Complex conjugate: z -> z^(N-1).
template <int N>
CycloPoint<N> conj(CycloPoint<N> p) {
  return p.a * unit<N>(0) + p.b * unit<N>(N - 1) + p.c * unit<N>(N - 2) + p.d * unit<N>(N - 3);
}

// (x, y) -> (-x, y)
template <int N>
CycloPoint<N> mirror_y(CycloPoint<N> p) {
  return -conj(p);
}

// Doubled cartesian coordinates (2x, 2y), exact.
template <int N>
std::pair<typename CycloPoint<N>::Real, typename CycloPoint<N>::Real> cart2(CycloPoint<N> p) {
  constexpr auto t = Cyclotomic<N>::cart2;
  auto v = p.coeffs();
  typename CycloPoint<N>::Real x{}, y{};
  for (int i = 0; i < 4; ++i) {
    x.r += v[i] * t[i][0];
    x.s += v[i] * t[i][1];
    y.r += v[i] * t[i][2];
    y.s += v[i] * t[i][3];
  }
  return {x, y};
}

template <int N>
typename CycloPoint<N>::Real sq_norm(CycloPoint<N> p) {
  auto [x, y] = cart2(p);
  auto s = x * x + y * y;
  return {s.r / 4, s.s / 4};
}

template <int N>
typename CycloPoint<N>::Real sq_dist(CycloPoint<N> p, CycloPoint<N> q) {
  return sq_norm(p - q);
}

template <int N>
std::complex<double> to_complex(CycloPoint<N> p) {
  auto [x, y] = cart2(p);
  return {x.value() / 2.0, y.value() / 2.0};
}

// Exact division in the ring, when the quotient is integral. Requires |q|^2 rational.
template <int N>
std::optional<CycloPoint<N>> exact_div(CycloPoint<N> p, CycloPoint<N> q) {
  auto n = sq_norm(q);
  if (n.s != 0 || n.r == 0) return std::nullopt;
  auto t = p * conj(q);
  if (t.a % n.r || t.b % n.r || t.c % n.r || t.d % n.r) return std::nullopt;
  return CycloPoint<N>{t.a / n.r, t.b / n.r, t.c / n.r, t.d / n.r};
}

template <int N>
std::string to_string(const CycloPoint<N>& p) {
  return "(" + std::to_string(p.a) + "," + std::to_string(p.b) + "," + std::to_string(p.c) + "," +
         std::to_string(p.d) + ")";
}

struct PointHash {
  template <int N>
  std::size_t operator()(const CycloPoint<N>& p) const {
    std::uint64_t h = 1469598103934665603ull;
    for (i64 v : p.coeffs()) {
      h ^= static_cast<std::uint64_t>(v) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    }
    return static_cast<std::size_t>(h);
  }
};

// ---------------------------------------------------------------------------
// Grids

enum class Tiling {
  Triangular,        // (3^6)
  Square,            // (4^4)
  Hexagonal,         // (6^3)
  TriHexagonal,      // (3.6.3.6)
  ElongatedTri,      // (3^3.4^2)
  TruncatedSquare,   // (4.8.8)
  SnubSquare,        // (3.3.4.3.4)
  TruncatedTriHex,   // (4.6.12)
  SnubHexagonal,     // (3^4.6)
  TruncatedHex,      // (3.12.12)
  RhombiTriHex,      // (3.4.6.4)
};

struct GridKind {
  Tiling tiling = Tiling::Square;
  bool enantiomer = false;  // only meaningful for (3^4.6)

  friend bool operator==(const GridKind&, const GridKind&) = default;
};

inline constexpr GridKind kTri{Tiling::Triangular};
inline constexpr GridKind kSquare{Tiling::Square};
inline constexpr GridKind kTriHex{Tiling::TriHexagonal};

std::string grid_name(GridKind g);
// Accepts "tri", "square", "trihex", "hex" and vertex symbols like "3.6.3.6", "3^4.6", "3^4.6*".
std::optional<GridKind> parse_grid(std::string_view s);
// Short tag used in curve references: tri, square, trihex; vertex symbol otherwise.
std::string grid_tag(GridKind g);
std::vector<GridKind> all_grids();

bool is_searchable(GridKind g);
// 12 for every grid except (4.8.8), which needs the 8th roots of unity.
int ring_order(GridKind g);
// Turtle turn angle for the searchable grids, in units of 2*pi/ring_order.
int turn_units(GridKind g);
std::vector<int> admissible_directions(GridKind g);

// Directed unit edge.
template <int N>
struct BasicEdge {
  CycloPoint<N> origin;
  int dir = 0;

  CycloPoint<N> target() const { return origin + unit<N>(dir); }
  std::pair<CycloPoint<N>, CycloPoint<N>> undirected() const {
    auto t = target();
    return origin < t ? std::pair{origin, t} : std::pair{t, origin};
  }
  friend bool operator==(const BasicEdge&, const BasicEdge&) = default;
};
using DirectedEdge = BasicEdge<12>;

// Vertex set of a periodic tiling: offsets plus the integer span of two periods.
template <int N>
struct PeriodicSet {
  CycloPoint<N> t1, t2;
  std::vector<CycloPoint<N>> offsets;

  bool in_lattice(CycloPoint<N> p) const {
    auto u = t1.coeffs(), v = t2.coeffs(), w = p.coeffs();
    for (int i = 0; i < 4; ++i)
      for (int j = i + 1; j < 4; ++j) {
        i64 det = u[i] * v[j] - u[j] * v[i];
        if (det == 0) continue;
        i64 mn = w[i] * v[j] - w[j] * v[i];
        i64 nn = u[i] * w[j] - u[j] * w[i];
        if (mn % det || nn % det) return false;
        i64 m = mn / det, n = nn / det;
        for (int k = 0; k < 4; ++k)
          if (m * u[k] + n * v[k] != w[k]) return false;
        return true;
      }
    return false;
  }
  bool contains(CycloPoint<N> p) const {
    for (auto& o : offsets)
      if (in_lattice(p - o)) return true;
    return false;
  }
};

const PeriodicSet<12>& vertex_set(GridKind g);  // all grids except (4.8.8)
const PeriodicSet<8>& octagonal_vertex_set();   // (4.8.8)

bool grid_member(GridKind g, ExactPoint p);
bool grid_member(GridKind g, OctPoint p);
bool edge_member(GridKind g, const DirectedEdge& e);
bool edge_member(GridKind g, const BasicEdge<8>& e);

// Winding number of a closed polygon (first == last) around q, by an exact
// horizontal ray at ordinate y(q)+epsilon. nullopt when q lies on the polygon.
template <int N>
std::optional<int> winding_number(std::span<const CycloPoint<N>> loop, CycloPoint<N> q) {
  auto [qx, qy] = cart2(q);
  int w = 0;
  auto [px, py] = cart2(loop[0]);
  for (std::size_t i = 1; i < loop.size(); ++i) {
    auto [nx, ny] = cart2(loop[i]);
    bool above_a = compare(py, qy) > 0;
    bool above_b = compare(ny, qy) > 0;
    if (above_a != above_b) {
      auto cross = (nx - px) * (qy - py) - (ny - py) * (qx - px);
      int s = cross.sign();
      if (s == 0) return std::nullopt;
      if (above_b && s > 0) ++w;
      if (above_a && s < 0) --w;
    } else if (compare(py, qy) == 0 && compare(ny, qy) == 0) {
      // horizontal edge on the ray line: q on it?
      int s1 = compare(px, qx), s2 = compare(nx, qx);
      if (s1 == 0 || s2 == 0 || s1 != s2) return std::nullopt;
    }
    px = nx;
    py = ny;
  }
  return w;
}

// Face centres are given scaled by `scale`; the loop is scaled to match.
template <int N>
std::vector<bool> winding_interior(std::span<const CycloPoint<N>> loop, std::span<const CycloPoint<N>> centers,
                                   i64 scale = 1) {
  std::vector<CycloPoint<N>> scaled;
  scaled.reserve(loop.size());
  for (auto& p : loop) scaled.push_back(scale * p);
  std::vector<bool> out;
  out.reserve(centers.size());
  for (auto& c : centers) {
    auto w = winding_number<N>(scaled, c);
    out.push_back(w && *w != 0);
  }
  return out;
}

// One visit of a vertex: direction back along the incoming edge and direction
// of the outgoing edge; -1 marks an open endpoint.
struct Pass {
  int in = -1;
  int out = -1;
};

// True iff no two chords (in, out) interleave on the circle of directions.
bool chords_noncrossing(std::span<const Pass> passes);

}  // namespace gridcurve

template <int N>
struct std::hash<gridcurve::CycloPoint<N>> {
  std::size_t operator()(const gridcurve::CycloPoint<N>& p) const { return gridcurve::PointHash{}(p); }
};
