#include "gridcurve/validity.hpp"

#include <stdexcept>

namespace gridcurve {

std::pair<i64, i64> to_lattice(GridKind g, ExactPoint p) {
  if (g.tiling == Tiling::Square) return {p.a, p.d};
  return {p.a, p.c};
}

ExactPoint from_lattice(GridKind g, i64 u, i64 v) {
  if (g.tiling == Tiling::Square) return {u, 0, 0, v};
  return {u, 0, v, 0};
}

GridPath turtle(const Word& w, GridKind g, ExactPoint start, int start_dir) {
  if (!is_searchable(g)) throw MalformedSystem("turtle needs a searchable grid");
  for (Tok t : tokenize(w, g))
    if (t == Tok::Zero && g.tiling != Tiling::Triangular)
      throw MalformedSystem("turn 0 not admissible on " + grid_name(g));
  return turtle_generic<12>(w, turn_units(g), "F", start, start_dir);
}

void check_directions(const GridPath& p, GridKind g) {
  auto adm = admissible_directions(g);
  for (int d : p.dirs)
    if (std::find(adm.begin(), adm.end(), d) == adm.end())
      throw MalformedSystem("direction " + std::to_string(d) + " not admissible on " + grid_name(g));
}

bool check_turn(const SimpleLsys& s) {
  int sum = 0;
  for (Tok t : tokenize(s.production, s.grid)) sum += turn_value(t, s.grid);
  return sum == 0;
}

bool check_dist(const SimpleLsys& s) {
  auto p = turtle(s.production, s.grid);
  auto d = sq_dist(p.start(), p.end());
  return d.s == 0 && d.r == order(s);
}

Word tile_axiom(GridKind g, int sign) {
  switch (g.tiling) {
    case Tiling::Square:
      return sign > 0 ? "F+F+F+F" : "F-F-F-F";
    case Tiling::Triangular:
      return sign > 0 ? "F+F+F" : "F-F-F";
    case Tiling::TriHexagonal:
      return sign > 0 ? "F+F+F+F+F+F" : "F--F--F";
    default:
      throw MalformedSystem("no tile axiom for " + grid_name(g));
  }
}

Word tile_word(const SimpleLsys& s, int sign, int k) {
  MultiLsys m = as_multi(s);
  m.axiom = tile_axiom(s.grid, sign);
  return iterate(m, k);
}

namespace {

// Windings of all faces and traversal counts of all edges in a padded
// bounding box of a closed lattice path on a searchable grid.
struct FaceGrid {
  GridKind g;
  i64 u0 = 0, v0 = 0;  // lowest padded vertex
  int nu = 0, nv = 0;  // vertex counts
  // per vertex and orientation: traversal count and signed upward sense
  std::vector<int> cnt, sgn;
  // faces: square one per cell, triangular two per cell (up = 0, down = 1)
  std::vector<int> wind;

  int orientations() const { return g.tiling == Tiling::Square ? 2 : 3; }
  int faces_per_cell() const { return g.tiling == Tiling::Square ? 1 : 2; }
  bool in_vertex(i64 u, i64 v) const { return u >= u0 && v >= v0 && u < u0 + nu && v < v0 + nv; }
  std::size_t eidx(i64 u, i64 v, int o) const {
    return (static_cast<std::size_t>(v - v0) * nu + static_cast<std::size_t>(u - u0)) * orientations() + o;
  }
  std::size_t fidx(i64 u, i64 v, int f) const {
    return (static_cast<std::size_t>(v - v0) * nu + static_cast<std::size_t>(u - u0)) * faces_per_cell() + f;
  }
  bool in_face(i64 u, i64 v) const { return u >= u0 && v >= v0 && u < u0 + nu - 1 && v < v0 + nv - 1; }
  int face(i64 u, i64 v, int f) const { return in_face(u, v) ? wind[fidx(u, v, f)] : 0; }
  int edge_count(i64 u, i64 v, int o) const { return in_vertex(u, v) ? cnt[eidx(u, v, o)] : 0; }
  bool hex_centre(i64 u, i64 v) const {
    return g.tiling == Tiling::TriHexagonal && mod(static_cast<int>(u), 2) == 0 && mod(static_cast<int>(v), 2) == 1;
  }
};

FaceGrid make_face_grid(const GridPath& path, GridKind g) {
  FaceGrid fg;
  fg.g = g;
  i64 umin = 0, umax = 0, vmin = 0, vmax = 0;
  bool first = true;
  for (auto& p : path.pts) {
    auto [u, v] = to_lattice(g, p);
    if (first || u < umin) umin = u;
    if (first || u > umax) umax = u;
    if (first || v < vmin) vmin = v;
    if (first || v > vmax) vmax = v;
    first = false;
  }
  fg.u0 = umin - 2;
  fg.v0 = vmin - 2;
  fg.nu = static_cast<int>(umax - umin + 5);
  fg.nv = static_cast<int>(vmax - vmin + 5);
  fg.cnt.assign(static_cast<std::size_t>(fg.nu) * fg.nv * fg.orientations(), 0);
  fg.sgn.assign(fg.cnt.size(), 0);
  fg.wind.assign(static_cast<std::size_t>(fg.nu) * fg.nv * fg.faces_per_cell(), 0);

  const bool sq = g.tiling == Tiling::Square;
  for (std::size_t i = 0; i < path.size(); ++i) {
    auto [u, v] = to_lattice(g, path.pts[i]);
    int d = path.dirs[i];
    i64 bu = u, bv = v;
    int o = 0, s = 0;
    if (sq) {
      switch (d) {
        case 0: o = 0; s = 0; break;
        case 6: o = 0; s = 0; bu = u - 1; break;
        case 3: o = 1; s = 1; break;
        case 9: o = 1; s = -1; bv = v - 1; break;
        default: throw MalformedSystem("non-square direction");
      }
    } else {
      switch (d) {
        case 0: o = 0; s = 0; break;
        case 6: o = 0; s = 0; bu = u - 1; break;
        case 2: o = 1; s = 1; break;
        case 8: o = 1; s = -1; bv = v - 1; break;
        case 4: o = 2; s = 1; bu = u - 1; break;
        case 10: o = 2; s = -1; bv = v - 1; break;
        default: throw MalformedSystem("non-triangular direction");
      }
    }
    auto k = fg.eidx(bu, bv, o);
    fg.cnt[k] += 1;
    fg.sgn[k] += s;
  }

  // Ray sweep to the right, one strip at a time.
  const i64 u1 = fg.u0 + fg.nu - 1;
  for (i64 y = fg.v0; y < fg.v0 + fg.nv - 1; ++y) {
    int w = 0;
    for (i64 x = u1 - 1; x >= fg.u0; --x) {
      if (sq) {
        w += fg.sgn[fg.eidx(x + 1, y, 1)];
        fg.wind[fg.fidx(x, y, 0)] = w;
      } else {
        w += fg.sgn[fg.eidx(x + 1, y, 1)];
        fg.wind[fg.fidx(x, y, 1)] = w;
        w += fg.sgn[fg.eidx(x, y, 2)];
        fg.wind[fg.fidx(x, y, 0)] = w;
      }
    }
  }
  return fg;
}

// Both faces adjacent to the edge of orientation o at base (u, v).
std::pair<int, int> adjacent_windings(const FaceGrid& fg, i64 u, i64 v, int o) {
  if (fg.g.tiling == Tiling::Square) {
    if (o == 0) return {fg.face(u, v - 1, 0), fg.face(u, v, 0)};
    return {fg.face(u - 1, v, 0), fg.face(u, v, 0)};
  }
  switch (o) {
    case 0: return {fg.face(u, v, 0), fg.face(u, v - 1, 1)};
    case 1: return {fg.face(u, v, 0), fg.face(u - 1, v, 1)};
    default: return {fg.face(u, v, 0), fg.face(u, v, 1)};
  }
}

std::pair<std::pair<i64, i64>, std::pair<i64, i64>> edge_ends(GridKind g, i64 u, i64 v, int o) {
  if (g.tiling == Tiling::Square) return {{u, v}, o == 0 ? std::pair{u + 1, v} : std::pair{u, v + 1}};
  switch (o) {
    case 0: return {{u, v}, {u + 1, v}};
    case 1: return {{u, v}, {u, v + 1}};
    default: return {{u + 1, v}, {u, v + 1}};
  }
}

}  // namespace

std::vector<std::pair<ExactPoint, int>> face_windings(const GridPath& closed, GridKind g, i64* scale_out) {
  FaceGrid fg = make_face_grid(closed, g);
  std::vector<std::pair<ExactPoint, int>> out;
  const bool sq = g.tiling == Tiling::Square;
  if (scale_out) *scale_out = sq ? 2 : 3;
  for (i64 y = fg.v0; y < fg.v0 + fg.nv - 1; ++y)
    for (i64 x = fg.u0; x < fg.u0 + fg.nu - 1; ++x) {
      if (sq) {
        out.push_back({from_lattice(g, 2 * x + 1, 2 * y + 1), fg.face(x, y, 0)});
        continue;
      }
      bool up_hex = fg.hex_centre(x, y) || fg.hex_centre(x + 1, y) || fg.hex_centre(x, y + 1);
      bool dn_hex = fg.hex_centre(x + 1, y) || fg.hex_centre(x + 1, y + 1) || fg.hex_centre(x, y + 1);
      if (!up_hex) out.push_back({from_lattice(g, 3 * x + 1, 3 * y + 1), fg.face(x, y, 0)});
      if (!dn_hex) out.push_back({from_lattice(g, 3 * x + 2, 3 * y + 2), fg.face(x, y, 1)});
      if (fg.hex_centre(x, y)) out.push_back({from_lattice(g, 3 * x, 3 * y), fg.face(x, y, 0)});
    }
  return out;
}

Tile build_tile(const SimpleLsys& s, int sign, int k) {
  Tile t;
  t.sign = sign;
  t.k = k;
  t.path = turtle(tile_word(s, sign, k), s.grid);
  if (!t.path.closed) throw std::domain_error("tile path does not close");
  for (auto& [c, w] : face_windings(t.path, s.grid, &t.face_scale))
    if (w != 0) t.faces.push_back(c);
  FaceGrid fg = make_face_grid(t.path, s.grid);
  for (i64 v = fg.v0; v < fg.v0 + fg.nv; ++v)
    for (i64 u = fg.u0; u < fg.u0 + fg.nu; ++u)
      for (int o = 0; o < fg.orientations(); ++o) {
        auto [a, b] = edge_ends(s.grid, u, v, o);
        if (fg.hex_centre(a.first, a.second) || fg.hex_centre(b.first, b.second)) continue;
        auto [w1, w2] = adjacent_windings(fg, u, v, o);
        if (w1 != 0 && w2 != 0)
          t.interior_edges.push_back({from_lattice(s.grid, a.first, a.second), from_lattice(s.grid, b.first, b.second)});
      }
  return t;
}

bool tile_fill_ok(const Tile& t) {
  std::vector<std::pair<ExactPoint, ExactPoint>> used;
  used.reserve(t.path.size());
  for (std::size_t i = 0; i < t.path.size(); ++i) used.push_back(t.path.edge(i).undirected());
  std::sort(used.begin(), used.end());
  for (auto e : t.interior_edges) {
    if (e.second < e.first) std::swap(e.first, e.second);
    auto [lo, hi] = std::equal_range(used.begin(), used.end(), e);
    if (hi - lo != 1) return false;
  }
  return true;
}

bool check_tiles(const SimpleLsys& s) {
  Tile tp, tm;
  try {
    tp = build_tile(s, +1, 1);
    tm = build_tile(s, -1, 1);
  } catch (const std::domain_error&) {
    return false;
  }
  if (!check_self_avoiding(tp.path) || !check_self_avoiding(tm.path)) return false;
  return tile_fill_ok(tp) && tile_fill_ok(tm);
}

std::string stage_name(Stage s) {
  switch (s) {
    case Stage::Pass: return "pass";
    case Stage::Turn: return "turn";
    case Stage::Dist: return "dist";
    case Stage::Obv: return "self-avoidance";
    case Stage::TilesSA: return "tiles-self-avoidance";
    case Stage::TilesFill: return "tiles-fill";
  }
  return "?";
}

Stage full_check(const SimpleLsys& s) {
  validate(s);
  if (!check_turn(s)) return Stage::Turn;
  if (!check_dist(s)) return Stage::Dist;
  if (!check_self_avoiding(turtle(s.production, s.grid))) return Stage::Obv;
  Tile tp, tm;
  try {
    tp = build_tile(s, +1, 1);
    tm = build_tile(s, -1, 1);
  } catch (const std::domain_error&) {
    return Stage::TilesSA;
  }
  if (!check_self_avoiding(tp.path) || !check_self_avoiding(tm.path)) return Stage::TilesSA;
  if (!tile_fill_ok(tp) || !tile_fill_ok(tm)) return Stage::TilesFill;
  return Stage::Pass;
}

}  // namespace gridcurve
