#pragma once

#include <complex>
#include <cstddef>
#include <string>
#include <vector>

#include "gridcurve/geometry.hpp"
#include "gridcurve/lsystem.hpp"
#include "gridcurve/tiles.hpp"
#include "gridcurve/transforms.hpp"
#include "gridcurve/validity.hpp"

namespace gridcurve {

enum class ColorScheme {
  Single,  // every stroke in `ink`
  Parts,   // one colour per part of the self-similar decomposition (per copy for tilings)
  Origin,  // one colour per source edge a converted edge was rewritten from
};

struct RenderOptions {
  double e = 0.0;  // corner cut, in [0, 0.5]
  double stroke = 0.12;
  ColorScheme color = ColorScheme::Single;
  std::string ink = "#1b2a49";
  double margin = 0.5;     // around the bounding box, in grid units
  double pixels = 800.0;   // width/height of the longer side
};

using Point2 = std::complex<double>;

struct Stroke {
  Point2 a, b;
  int color = 0;
  bool bridge = false;  // joins two cut edges across a corner
};

// Straight pieces of a polyline with corners rounded off: at every turn a
// fraction e of both adjacent edges is replaced by a bridge. Collinear joints
// are left alone; zero-length pieces are dropped. `edge_color` (one per edge)
// colours pieces; a bridge takes the colour of the edge it leaves.
std::vector<Stroke> corner_cut(const std::vector<Point2>& pts, bool closed, double e,
                               const std::vector<int>& edge_color = {});

// Colour j of n, a fixed hue rotation, as "#rrggbb".
std::string palette(int j, int n);

std::string render_path(const GridPath& p, const RenderOptions& o, const std::vector<int>& edge_color = {});
std::string render_path(const BasicPath<8>& p, const RenderOptions& o, const std::vector<int>& edge_color = {});

// Iterate n; ColorScheme::Parts colours the R runs of decompose(s, n).
std::string render_curve(const SimpleLsys& s, int n, const RenderOptions& o);
std::string render_tile(const SimpleLsys& s, int sign, int k, const RenderOptions& o);
// ColorScheme::Origin colours edges by the source edge they came from.
std::string render_converted(const ConvertedPath& c, const RenderOptions& o);

// Copies of tile Θ(sign)k from tiling_copies(s, sign, k, range).
std::string render_tiling(const SimpleLsys& s, int sign, int k, int range, const RenderOptions& o);

// The copies of iterate n that start or end at a corner point of the tiling by
// tiles Θ+n, and the order of the rotation group of their union.
struct Carousel {
  int symmetry = 1;
  std::vector<GridPath> curves;
};
Carousel carousel(const SimpleLsys& s, int n);
std::string render_carousel(const SimpleLsys& s, int n, const RenderOptions& o);

// Points coloured by their leading fractional digit.
std::string render_cloud(const std::vector<CloudPoint>& pts, std::size_t digits, const RenderOptions& o);

}  // namespace gridcurve
