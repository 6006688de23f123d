#pragma once

#include <complex>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gridcurve/geometry.hpp"
#include "gridcurve/lsystem.hpp"
#include "gridcurve/validity.hpp"

namespace gridcurve {

struct NumerationSystem {
  ExactPoint base;
  std::vector<ExactPoint> digits;
  GridKind grid = kSquare;
};

// A run of consecutive edges congruent to the previous iterate.
struct Segment {
  std::size_t first = 0;  // edge index
  std::size_t length = 0;
  int rotation = 0;  // direction offset against the previous iterate
  ExactPoint offset;  // translation of its start point
};

struct Decomposition {
  int n = 0;
  std::vector<Segment> parts;
};

Tile tile_iterate(const SimpleLsys& s, int sign, int k);

// Splits iterate n into R runs; throws std::logic_error if a run is not
// congruent to iterate n-1.
Decomposition decompose(const SimpleLsys& s, int n);

// Lattice integer u + v*i (square) or u + v*w with w = exp(i*pi/3) (triangular), e.g. "2+i", "-w", "1-2w".
std::string format_lattice(GridKind g, ExactPoint p);

// Enclosed faces of the tile with sign `sign` as lattice digits, centred on
// the middle face. Square and triangular grids only.
std::vector<ExactPoint> extract_digits(const SimpleLsys& s, int sign);

// One representative per unit class of lattice integers with |B|^2 = R,
// sorted by argument.
std::vector<ExactPoint> find_bases(GridKind g, int R);
bool is_complete_residue_system(ExactPoint base, const std::vector<ExactPoint>& digits);
// First base from find_bases for which the digits form a complete residue system.
std::optional<NumerationSystem> numeration_system(const SimpleLsys& s, int sign);

struct Expansion {
  bool integral = false;
  std::vector<ExactPoint> digits;  // most significant first
};
Expansion digit_expansion(ExactPoint z, const NumerationSystem& ns, int max_steps = 64);

struct CloudPoint {
  std::complex<double> z;
  std::size_t leading = 0;  // index of the first fractional digit
};
std::vector<CloudPoint> fundamental_region_points(const NumerationSystem& ns, int depth);

// A congruent copy of a tile: p -> rotate(p, rotation) + offset.
struct TilePlacement {
  int rotation = 0;  // 30 degree steps
  ExactPoint offset;
  ExactPoint operator()(ExactPoint p) const { return rotate(p, rotation) + offset; }
};

// Lattice translating copies of the tile Θ+k so they cover every grid edge once.
std::pair<ExactPoint, ExactPoint> tiling_periods(const SimpleLsys& s, int k);
// Copies of the tile with sign `sign` whose lattice coefficients lie in
// [-range, range]. Translations only, except the tri-hex triangles Θ-, which sit
// like the triangles of the kagome grid with every second one half-turned.
std::vector<TilePlacement> tiling_copies(const SimpleLsys& s, int sign, int k, int range);
// Undirected edge multiplicities over tiling_copies.
std::map<std::pair<ExactPoint, ExactPoint>, int> tiling_edge_counts(const SimpleLsys& s, int k, int range,
                                                                    int sign = +1);
// Every grid edge with both ends within `radius` of the origin is covered exactly once.
bool tiling_covers_window(const SimpleLsys& s, int k, int radius, int sign = +1);

// Grid edges with both ends within `radius` of the origin.
std::vector<std::pair<ExactPoint, ExactPoint>> window_edges(GridKind g, int radius);

}  // namespace gridcurve
