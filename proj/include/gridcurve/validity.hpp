#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "gridcurve/geometry.hpp"
#include "gridcurve/lsystem.hpp"

namespace gridcurve {

// pts[i] is the origin of edge i; pts.back() is the end point.
template <int N>
struct BasicPath {
  std::vector<int> dirs;
  std::vector<CycloPoint<N>> pts;
  bool closed = false;

  std::size_t size() const { return dirs.size(); }
  CycloPoint<N> start() const { return pts.front(); }
  CycloPoint<N> end() const { return pts.back(); }
  BasicEdge<N> edge(std::size_t i) const { return {pts[i], dirs[i]}; }

  void push(int dir) {
    dir = mod(dir, N);
    dirs.push_back(dir);
    pts.push_back(pts.back() + unit<N>(dir));
  }
};

using GridPath = BasicPath<12>;

// Turtle on a ring of order N: '+' and '-' turn by +/-units steps, letters in
// `drawing` draw a unit edge, everything else is ignored.
template <int N>
BasicPath<N> turtle_generic(const Word& w, int units, const std::string& drawing = "F",
                            CycloPoint<N> start = {}, int start_dir = 0) {
  BasicPath<N> p;
  p.pts.push_back(start);
  int d = start_dir;
  bool draw[256] = {};
  for (unsigned char c : drawing) draw[c] = true;
  for (unsigned char c : w) {
    if (draw[c])
      p.push(d);
    else if (c == '+')
      d += units;
    else if (c == '-')
      d -= units;
  }
  p.closed = !p.dirs.empty() && p.end() == p.start();
  return p;
}

// Turtle interpretation of a word over {F,+,-,0} on a searchable grid.
GridPath turtle(const Word& w, GridKind g, ExactPoint start = {}, int start_dir = 0);

// Directions admissible for the grid (throws MalformedSystem otherwise).
void check_directions(const GridPath& p, GridKind g);

// Edge-distinct and no crossing chords at any vertex. Closed paths pair the
// last incoming edge with the first outgoing one at the base point.
template <int N>
bool check_self_avoiding(const BasicPath<N>& path);

bool check_turn(const SimpleLsys& s);
bool check_dist(const SimpleLsys& s);

struct Tile {
  int sign = +1;
  int k = 1;
  GridPath path;
  i64 face_scale = 1;                  // 2 on the square grid, 3 on the triangular ones
  std::vector<ExactPoint> faces;       // interior face centres, scaled by face_scale
  std::vector<std::pair<ExactPoint, ExactPoint>> interior_edges;
};

Word tile_axiom(GridKind g, int sign);
Word tile_word(const SimpleLsys& s, int sign, int k);
// Throws std::domain_error if the tile path does not close.
Tile build_tile(const SimpleLsys& s, int sign, int k);
bool tile_fill_ok(const Tile& t);
bool check_tiles(const SimpleLsys& s);

enum class Stage { Pass, Turn, Dist, Obv, TilesSA, TilesFill };
std::string stage_name(Stage s);
Stage full_check(const SimpleLsys& s);

// Faces of a searchable grid within the path's bounding box, winding computed
// by an incremental ray sweep. Result: (scaled centre, winding).
std::vector<std::pair<ExactPoint, int>> face_windings(const GridPath& closed, GridKind g, i64* scale_out = nullptr);

// Lattice coordinates on the searchable grids: square u + v*i, others u + v*zeta^2.
std::pair<i64, i64> to_lattice(GridKind g, ExactPoint p);
ExactPoint from_lattice(GridKind g, i64 u, i64 v);

// ---------------------------------------------------------------------------

template <int N>
bool check_self_avoiding(const BasicPath<N>& path) {
  const std::size_t n = path.size();
  if (n == 0) return true;
  std::vector<std::pair<CycloPoint<N>, CycloPoint<N>>> edges;
  edges.reserve(n);
  for (std::size_t i = 0; i < n; ++i) edges.push_back(path.edge(i).undirected());
  std::sort(edges.begin(), edges.end());
  if (std::adjacent_find(edges.begin(), edges.end()) != edges.end()) return false;

  struct Visit {
    CycloPoint<N> v;
    Pass p;
  };
  std::vector<Visit> visits;
  visits.reserve(n + 1);
  for (std::size_t i = 0; i <= n; ++i) {
    Pass p;
    if (i > 0) p.in = mod(path.dirs[i - 1] + N / 2, N);
    if (i < n) p.out = path.dirs[i];
    if (path.closed) {
      if (i == 0) continue;
      if (i == n) p.out = path.dirs[0];
    }
    visits.push_back({path.pts[i], p});
  }
  std::sort(visits.begin(), visits.end(), [](const Visit& a, const Visit& b) { return a.v < b.v; });
  std::vector<Pass> group;
  for (std::size_t i = 0; i < visits.size();) {
    std::size_t j = i + 1;
    while (j < visits.size() && visits[j].v == visits[i].v) ++j;
    if (j - i > 1) {
      group.clear();
      for (std::size_t k = i; k < j; ++k) group.push_back(visits[k].p);
      if (!chords_noncrossing(group)) return false;
    }
    i = j;
  }
  return true;
}

}  // namespace gridcurve
