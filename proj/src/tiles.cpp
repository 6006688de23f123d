#include "gridcurve/tiles.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>

namespace gridcurve {

namespace {

const ExactPoint kOne{1, 0, 0, 0};
const ExactPoint kI{0, 0, 0, 1};       // zeta^3
const ExactPoint kOmega6{0, 0, 1, 0};  // zeta^2

int unit_step(GridKind g) { return g.tiling == Tiling::Square ? 3 : 2; }

void require_digit_grid(GridKind g) {
  if (g.tiling != Tiling::Square && g.tiling != Tiling::Triangular)
    throw MalformedSystem("digit sets are defined on the square and triangular grids");
}

std::optional<ExactPoint> div_int(ExactPoint p, i64 k) {
  if (p.a % k || p.b % k || p.c % k || p.d % k) return std::nullopt;
  return ExactPoint{p.a / k, p.b / k, p.c / k, p.d / k};
}

ExactPoint power(ExactPoint b, int k) {
  ExactPoint r = kOne;
  for (int i = 0; i < k; ++i) r = r * b;
  return r;
}

// Unit multiple with the largest real part (ties: larger imaginary part).
ExactPoint unit_representative(ExactPoint p, GridKind g) {
  int step = unit_step(g);
  ExactPoint best = p;
  for (int r = step; r < 12; r += step) {
    ExactPoint q = rotate(p, r);
    auto [bx, by] = cart2(best);
    auto [qx, qy] = cart2(q);
    int cx = compare(qx, bx);
    if (cx > 0 || (cx == 0 && compare(qy, by) > 0)) best = q;
  }
  return best;
}

}  // namespace

std::string format_lattice(GridKind g, ExactPoint p) {
  require_digit_grid(g);
  auto [u, v] = to_lattice(g, p);
  const char* unit = g.tiling == Tiling::Square ? "i" : "w";
  std::string s;
  if (u != 0) s = std::to_string(u);
  if (v != 0) {
    if (v < 0)
      s += "-";
    else if (!s.empty())
      s += "+";
    if (v != 1 && v != -1) s += std::to_string(v < 0 ? -v : v);
    s += unit;
  }
  return s.empty() ? "0" : s;
}

Tile tile_iterate(const SimpleLsys& s, int sign, int k) { return build_tile(s, sign, k); }

Decomposition decompose(const SimpleLsys& s, int n) {
  if (n < 1) throw MalformedSystem("decompose needs n >= 1");
  auto whole = turtle(iterate(s, n), s.grid);
  auto part = turtle(iterate(s, n - 1), s.grid);
  const std::size_t len = part.size();
  const std::size_t R = static_cast<std::size_t>(order(s));
  if (whole.size() != R * len) throw std::logic_error("iterate length is not R times the previous one");
  Decomposition d;
  d.n = n;
  for (std::size_t j = 0; j < R; ++j) {
    Segment seg;
    seg.first = j * len;
    seg.length = len;
    seg.rotation = mod(whole.dirs[seg.first] - part.dirs[0], 12);
    seg.offset = whole.pts[seg.first];
    for (std::size_t i = 0; i < len; ++i)
      if (mod(part.dirs[i] + seg.rotation, 12) != whole.dirs[seg.first + i])
        throw std::logic_error("segment " + std::to_string(j) + " is not congruent to the previous iterate");
    d.parts.push_back(seg);
  }
  return d;
}

std::vector<ExactPoint> extract_digits(const SimpleLsys& s, int sign) {
  require_digit_grid(s.grid);
  Tile t = build_tile(s, sign, 1);
  const auto& f = t.faces;
  if (f.empty()) return {};
  const i64 n = static_cast<i64>(f.size());
  ExactPoint sum;
  for (auto& p : f) sum += p;

  // the face whose centre is closest to the centroid, smallest first on ties
  ExactPoint centre = f.front();
  auto best = sq_dist(n * centre, sum);
  for (auto& p : f) {
    auto d = sq_dist(n * p, sum);
    int c = compare(d, best);
    if (c < 0 || (c == 0 && p < centre)) {
      centre = p;
      best = d;
    }
  }

  std::vector<ExactPoint> out;
  for (auto& p : f) {
    auto q = div_int(p - centre, t.face_scale);
    if (!q) throw std::logic_error("enclosed faces of mixed orientation");
    out.push_back(conj(*q));
  }
  if (s.grid.tiling == Tiling::Square) {
    std::vector<ExactPoint> halved;
    for (auto& p : out)
      if (auto q = exact_div(p, kOne + kI)) halved.push_back(*q);
    if (halved.size() == out.size()) out = std::move(halved);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<ExactPoint> find_bases(GridKind g, int R) {
  require_digit_grid(g);
  std::set<ExactPoint> reps;
  i64 lim = static_cast<i64>(2 * std::sqrt(static_cast<double>(R))) + 2;
  ExactPoint e2 = g.tiling == Tiling::Square ? kI : kOmega6;
  for (i64 u = -lim; u <= lim; ++u)
    for (i64 v = -lim; v <= lim; ++v) {
      ExactPoint p = u * kOne + v * e2;
      auto nrm = sq_norm(p);
      if (nrm.s == 0 && nrm.r == R) reps.insert(unit_representative(p, g));
    }
  std::vector<ExactPoint> out(reps.begin(), reps.end());
  std::sort(out.begin(), out.end(),
            [](ExactPoint a, ExactPoint b) { return std::arg(to_complex(a)) < std::arg(to_complex(b)); });
  return out;
}

bool is_complete_residue_system(ExactPoint base, const std::vector<ExactPoint>& digits) {
  auto nrm = sq_norm(base);
  if (nrm.s != 0 || nrm.r != static_cast<i64>(digits.size())) return false;
  for (std::size_t i = 0; i < digits.size(); ++i)
    for (std::size_t j = i + 1; j < digits.size(); ++j)
      if (exact_div(digits[i] - digits[j], base)) return false;
  return true;
}

std::optional<NumerationSystem> numeration_system(const SimpleLsys& s, int sign) {
  auto digits = extract_digits(s, sign);
  for (auto& b : find_bases(s.grid, order(s)))
    if (is_complete_residue_system(b, digits)) return NumerationSystem{b, digits, s.grid};
  return std::nullopt;
}

Expansion digit_expansion(ExactPoint z, const NumerationSystem& ns, int max_steps) {
  Expansion e;
  std::set<ExactPoint> seen;
  for (int step = 0; step <= max_steps; ++step) {
    if (z.is_zero()) {
      e.integral = true;
      std::reverse(e.digits.begin(), e.digits.end());
      return e;
    }
    if (!seen.insert(z).second) break;
    bool moved = false;
    for (auto& d : ns.digits)
      if (auto q = exact_div(z - d, ns.base)) {
        e.digits.push_back(d);
        z = *q;
        moved = true;
        break;
      }
    if (!moved) break;
  }
  e.integral = false;
  e.digits.clear();
  return e;
}

std::vector<CloudPoint> fundamental_region_points(const NumerationSystem& ns, int depth) {
  if (depth < 1) throw MalformedSystem("depth must be at least 1");
  const std::complex<double> inv = 1.0 / to_complex(ns.base);
  std::vector<std::complex<double>> d;
  for (auto& x : ns.digits) d.push_back(to_complex(x));
  std::vector<CloudPoint> pts;
  for (std::size_t j = 0; j < d.size(); ++j) pts.push_back({d[j] * inv, j});
  std::complex<double> scale = inv;
  for (int k = 2; k <= depth; ++k) {
    scale *= inv;
    std::vector<CloudPoint> next;
    next.reserve(pts.size() * d.size());
    for (auto& p : pts)
      for (auto& x : d) next.push_back({p.z + x * scale, p.leading});
    pts = std::move(next);
  }
  return pts;
}

std::pair<ExactPoint, ExactPoint> tiling_periods(const SimpleLsys& s, int k) {
  ExactPoint p1, p2;
  switch (s.grid.tiling) {
    case Tiling::Square:  // checkerboard: each edge borders one square of the colour
      p1 = kOne + kI;
      p2 = kOne - kI;
      break;
    case Tiling::Triangular:
      p1 = kOne;
      p2 = kOmega6;
      break;
    case Tiling::TriHexagonal:  // hexagons; each kagome edge borders exactly one
      p1 = 2 * kOne;
      p2 = 2 * kOmega6;
      break;
    default:
      throw MalformedSystem("no tiling for " + grid_name(s.grid));
  }
  ExactPoint v = power(turtle(s.production, s.grid).end(), k);
  return {v * p1, v * p2};
}

std::vector<TilePlacement> tiling_copies(const SimpleLsys& s, int sign, int k, int range) {
  std::vector<TilePlacement> out;
  if (s.grid.tiling == Tiling::TriHexagonal && sign < 0) {
    // kagome arrangement: triangles 0, P, Q and their half-turns about P
    ExactPoint P = power(turtle(s.production, s.grid).end(), k);
    ExactPoint Q = rotate(P, -2);
    for (int a = -range; a <= range; ++a)
      for (int b = -range; b <= range; ++b) {
        ExactPoint t = 2 * a * P + 2 * b * Q;
        out.push_back({0, t});
        out.push_back({6, t + 2 * P});
      }
    return out;
  }
  auto [p1, p2] = tiling_periods(s, k);
  for (int a = -range; a <= range; ++a)
    for (int b = -range; b <= range; ++b) out.push_back({0, a * p1 + b * p2});
  return out;
}

std::map<std::pair<ExactPoint, ExactPoint>, int> tiling_edge_counts(const SimpleLsys& s, int k, int range,
                                                                    int sign) {
  auto tile = turtle(tile_word(s, sign, k), s.grid);
  std::map<std::pair<ExactPoint, ExactPoint>, int> counts;
  for (auto& c : tiling_copies(s, sign, k, range))
    for (std::size_t i = 0; i < tile.size(); ++i) {
      ExactPoint x = c(tile.pts[i]), y = c(tile.pts[i + 1]);
      ++counts[x < y ? std::pair{x, y} : std::pair{y, x}];
    }
  return counts;
}

std::vector<std::pair<ExactPoint, ExactPoint>> window_edges(GridKind g, int radius) {
  std::vector<std::pair<ExactPoint, ExactPoint>> out;
  const i64 r2 = static_cast<i64>(radius) * radius;
  auto inside = [&](ExactPoint p) {
    auto n = sq_norm(p);
    return compare(n, decltype(n){r2, 0}) <= 0 && grid_member(g, p);
  };
  const i64 lim = 2 * radius + 2;
  for (i64 u = -lim; u <= lim; ++u)
    for (i64 v = -lim; v <= lim; ++v) {
      ExactPoint p = from_lattice(g, u, v);
      if (!inside(p)) continue;
      for (int d : admissible_directions(g)) {
        ExactPoint q = p + unit<12>(d);
        if (p < q && inside(q)) out.push_back({p, q});
      }
    }
  std::sort(out.begin(), out.end());
  return out;
}

bool tiling_covers_window(const SimpleLsys& s, int k, int radius, int sign) {
  auto tile = turtle(tile_word(s, sign, k), s.grid);
  // enough copies that every tile meeting the window is present
  auto v = std::abs(to_complex(power(turtle(s.production, s.grid).end(), k)));
  double reach = 0;
  for (auto& p : tile.pts) reach = std::max(reach, std::abs(to_complex(p)));
  int range = static_cast<int>(std::ceil((radius + reach) / v * 2.0)) + 1;
  auto counts = tiling_edge_counts(s, k, range, sign);
  for (auto& e : window_edges(s.grid, radius)) {
    auto it = counts.find(e);
    if (it == counts.end() || it->second != 1) return false;
  }
  return true;
}

}  // namespace gridcurve
