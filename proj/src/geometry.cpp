#include "gridcurve/geometry.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace gridcurve {

namespace {

struct GridInfo {
  GridKind kind;
  const char* name;
  const char* tag;
};

const std::vector<GridInfo>& grid_table() {
  static const std::vector<GridInfo> t = {
      {{Tiling::Triangular}, "(3^6)", "tri"},
      {{Tiling::Square}, "(4^4)", "square"},
      {{Tiling::Hexagonal}, "(6^3)", "hex"},
      {{Tiling::TriHexagonal}, "(3.6.3.6)", "trihex"},
      {{Tiling::ElongatedTri}, "(3^3.4^2)", "3^3.4^2"},
      {{Tiling::TruncatedSquare}, "(4.8.8)", "4.8.8"},
      {{Tiling::SnubSquare}, "(3.3.4.3.4)", "3.3.4.3.4"},
      {{Tiling::TruncatedTriHex}, "(4.6.12)", "4.6.12"},
      {{Tiling::SnubHexagonal, false}, "(3^4.6)", "3^4.6"},
      {{Tiling::SnubHexagonal, true}, "(3^4.6)*", "3^4.6*"},
      {{Tiling::TruncatedHex}, "(3.12.12)", "3.12.12"},
      {{Tiling::RhombiTriHex}, "(3.4.6.4)", "3.4.6.4"},
  };
  return t;
}

ExactPoint e(int k) { return unit<12>(k); }
const ExactPoint kSqrt3{0, 2, 0, -1};  // zeta + zeta^-1

PeriodicSet<12> make_set(GridKind g) {
  ExactPoint one = e(0);
  switch (g.tiling) {
    case Tiling::Square:
      return {e(0), e(3), {{}}};
    case Tiling::Triangular:
      return {e(0), e(2), {{}}};
    case Tiling::Hexagonal:
      // triangular lattice minus the hexagon centres (index-3 coset containing 2)
      return {e(0) + e(2), 3 * e(2), {{}, e(0)}};
    case Tiling::TriHexagonal:
      // hexagon to the left of the edge 0 -> 1 (centre at zeta^2)
      return {2 * e(0), 2 * e(2), {{}, e(0), e(0) + e(2)}};
    case Tiling::ElongatedTri:
      return {e(0), e(3) + e(2), {{}, e(3)}};
    case Tiling::SnubSquare:
      return {e(0) + e(11), e(3) + e(2), {{}, e(0), e(0) + e(3), e(3)}};
    case Tiling::TruncatedTriHex: {
      std::vector<ExactPoint> v{{}};
      for (int k = 0; k < 11; ++k) v.push_back(v.back() + e(k));
      ExactPoint s = 3 * one + kSqrt3;
      return {s * e(9), s * e(11), v};
    }
    case Tiling::TruncatedHex: {
      std::vector<ExactPoint> v{{}};
      for (int k = 0; k < 5; ++k) v.push_back(v.back() + e(k));
      ExactPoint s = 2 * one + kSqrt3;
      return {s * e(9), s * e(1), v};
    }
    case Tiling::RhombiTriHex: {
      std::vector<ExactPoint> v;
      for (int k = 0; k < 6; ++k) v.push_back(e(2 * k) - one);
      ExactPoint s = one + kSqrt3;
      return {s * e(1), s * e(3), v};
    }
    case Tiling::SnubHexagonal: {
      std::vector<ExactPoint> v;
      for (int k = 0; k < 6; ++k) v.push_back(e(2 * k) - one);
      ExactPoint t = 2 * one + (g.enantiomer ? e(10) : e(2));
      return {t, e(2) * t, v};
    }
    case Tiling::TruncatedSquare:
      break;
  }
  throw std::logic_error("no 12th-root vertex set for " + grid_name(g));
}

}  // namespace

std::string grid_name(GridKind g) {
  for (auto& i : grid_table())
    if (i.kind.tiling == g.tiling && (g.tiling != Tiling::SnubHexagonal || i.kind.enantiomer == g.enantiomer))
      return i.name;
  return "?";
}

std::string grid_tag(GridKind g) {
  for (auto& i : grid_table())
    if (i.kind.tiling == g.tiling && (g.tiling != Tiling::SnubHexagonal || i.kind.enantiomer == g.enantiomer))
      return i.tag;
  return "?";
}

std::optional<GridKind> parse_grid(std::string_view s) {
  std::string t(s);
  if (t == "triangular" || t == "3.3.3.3.3.3") t = "tri";
  if (t == "4.4.4.4") t = "square";
  if (t == "6.6.6") t = "hex";
  if (t == "tri-hex" || t == "tri-hexagonal") t = "trihex";
  if (t.size() > 2 && t.front() == '(' && t.back() == ')') t = t.substr(1, t.size() - 2);
  for (auto& i : grid_table()) {
    std::string name = i.name;
    std::string bare = name.substr(1, name.size() - 2);
    if (name.back() == '*') bare = name.substr(1, name.size() - 3) + "*";
    if (t == i.tag || t == bare || t == name) return i.kind;
  }
  return std::nullopt;
}

std::vector<GridKind> all_grids() {
  std::vector<GridKind> out;
  for (auto& i : grid_table()) out.push_back(i.kind);
  return out;
}

bool is_searchable(GridKind g) {
  return g.tiling == Tiling::Triangular || g.tiling == Tiling::Square || g.tiling == Tiling::TriHexagonal;
}

int ring_order(GridKind g) { return g.tiling == Tiling::TruncatedSquare ? 8 : 12; }

int turn_units(GridKind g) {
  switch (g.tiling) {
    case Tiling::Triangular:
      return 4;
    case Tiling::Square:
      return 3;
    case Tiling::TriHexagonal:
    case Tiling::Hexagonal:
      return 2;
    default:
      return 1;
  }
}

const PeriodicSet<12>& vertex_set(GridKind g) {
  static const std::map<std::pair<int, bool>, PeriodicSet<12>> sets = [] {
    std::map<std::pair<int, bool>, PeriodicSet<12>> m;
    for (auto& i : grid_table())
      if (i.kind.tiling != Tiling::TruncatedSquare)
        m.emplace(std::pair{static_cast<int>(i.kind.tiling), i.kind.enantiomer}, make_set(i.kind));
    return m;
  }();
  bool en = g.tiling == Tiling::SnubHexagonal && g.enantiomer;
  auto it = sets.find({static_cast<int>(g.tiling), en});
  if (it == sets.end()) throw std::logic_error("no 12th-root vertex set for " + grid_name(g));
  return it->second;
}

const PeriodicSet<8>& octagonal_vertex_set() {
  // squares axis-aligned, joined by diagonal edges
  static const PeriodicSet<8> s = {
      OctPoint{1, 1, 1, 0},    // 1 + eta + i
      OctPoint{1, 0, -1, -1},  // 1 - i - eta^3
      {OctPoint{}, OctPoint{1, 0, 0, 0}, OctPoint{1, 0, 1, 0}, OctPoint{0, 0, 1, 0}},
  };
  return s;
}

std::vector<int> admissible_directions(GridKind g) {
  int n = ring_order(g);
  std::set<int> dirs;
  if (n == 8) {
    auto& s = octagonal_vertex_set();
    for (auto& o : s.offsets)
      for (int k = 0; k < 8; ++k)
        if (s.contains(o + unit<8>(k))) dirs.insert(k);
  } else {
    auto& s = vertex_set(g);
    for (auto& o : s.offsets)
      for (int k = 0; k < 12; ++k)
        if (s.contains(o + unit<12>(k))) dirs.insert(k);
  }
  return {dirs.begin(), dirs.end()};
}

bool grid_member(GridKind g, ExactPoint p) {
  if (g.tiling == Tiling::TruncatedSquare) return false;
  return vertex_set(g).contains(p);
}

bool grid_member(GridKind g, OctPoint p) {
  if (g.tiling != Tiling::TruncatedSquare) return false;
  return octagonal_vertex_set().contains(p);
}

bool edge_member(GridKind g, const DirectedEdge& e) {
  return grid_member(g, e.origin) && grid_member(g, e.target());
}

bool edge_member(GridKind g, const BasicEdge<8>& e) {
  return grid_member(g, e.origin) && grid_member(g, e.target());
}

bool chords_noncrossing(std::span<const Pass> passes) {
  std::vector<std::pair<int, int>> chords;
  for (auto& p : passes)
    if (p.in >= 0 && p.out >= 0) chords.emplace_back(std::min(p.in, p.out), std::max(p.in, p.out));
  for (std::size_t i = 0; i < chords.size(); ++i)
    for (std::size_t j = i + 1; j < chords.size(); ++j) {
      auto [a, b] = chords[i];
      auto [c, d] = chords[j];
      bool c_in = a < c && c < b;
      bool d_in = a < d && d < b;
      if (c_in != d_in) return false;
    }
  return true;
}

}  // namespace gridcurve
