#include "gridcurve/render.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <map>
#include <set>
#include <sstream>

namespace gridcurve {

namespace {

std::string num(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  std::string s = buf;
  if (s == "-0.000000") s = "0.000000";
  return s;
}

bool collinear(Point2 u, Point2 v) {
  return std::abs(u.real() * v.imag() - u.imag() * v.real()) < 1e-9 && u.real() * v.real() + u.imag() * v.imag() > 0;
}

// Accumulates polylines and dots, then writes one document with y flipped.
class SvgDocument {
 public:
  explicit SvgDocument(const RenderOptions& o) : o_(o) {}

  void strokes(const std::vector<Stroke>& ss, const std::vector<std::string>& colors) {
    std::size_t i = 0;
    while (i < ss.size()) {
      // one <path> per run of equal colour, continuing while strokes join up
      const int c = ss[i].color;
      std::ostringstream d;
      bool open = false;
      Point2 pen;
      for (; i < ss.size() && ss[i].color == c; ++i) {
        if (!open || std::abs(ss[i].a - pen) > 1e-9) d << (open ? " M" : "M") << xy(ss[i].a);
        open = true;
        d << " L" << xy(ss[i].b);
        pen = ss[i].b;
        grow(ss[i].a);
        grow(ss[i].b);
      }
      body_ << "<path stroke=\"" << colors.at(static_cast<std::size_t>(c)) << "\" d=\"" << d.str() << "\"/>\n";
    }
  }

  void dot(Point2 p, double r, const std::string& color) {
    body_ << "<circle cx=\"" << num(p.real()) << "\" cy=\"" << num(-p.imag()) << "\" r=\"" << num(r)
          << "\" fill=\"" << color << "\"/>\n";
    grow(p);
  }

  std::string str() const {
    double x0 = lo_.real(), y0 = lo_.imag(), x1 = hi_.real(), y1 = hi_.imag();
    if (x0 > x1) x0 = x1 = y0 = y1 = 0;
    x0 -= o_.margin;
    y0 -= o_.margin;
    x1 += o_.margin;
    y1 += o_.margin;
    const double w = x1 - x0, h = y1 - y0, scale = o_.pixels / std::max(w, h);
    std::ostringstream out;
    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
        << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" << num(x0) << " " << num(-y1) << " " << num(w) << " "
        << num(h) << "\" width=\"" << num(w * scale) << "\" height=\"" << num(h * scale) << "\">\n"
        << "<g fill=\"none\" stroke-width=\"" << num(o_.stroke)
        << "\" stroke-linecap=\"round\" stroke-linejoin=\"round\">\n"
        << body_.str() << "</g>\n</svg>\n";
    return out.str();
  }

 private:
  static std::string xy(Point2 p) { return num(p.real()) + " " + num(-p.imag()); }

  void grow(Point2 p) {
    lo_ = {std::min(lo_.real(), p.real()), std::min(lo_.imag(), p.imag())};
    hi_ = {std::max(hi_.real(), p.real()), std::max(hi_.imag(), p.imag())};
  }

  const RenderOptions& o_;
  std::ostringstream body_;
  Point2 lo_{std::numeric_limits<double>::infinity(), std::numeric_limits<double>::infinity()};
  Point2 hi_{-std::numeric_limits<double>::infinity(), -std::numeric_limits<double>::infinity()};
};

template <int N>
std::vector<Point2> floats(const BasicPath<N>& p) {
  std::vector<Point2> out;
  out.reserve(p.pts.size());
  for (auto& q : p.pts) out.push_back(to_complex(q));
  return out;
}

std::vector<std::string> palette_list(int n) {
  std::vector<std::string> out;
  for (int j = 0; j < n; ++j) out.push_back(palette(j, n));
  return out;
}

std::string single(const std::vector<Point2>& pts, bool closed, const RenderOptions& o,
                   const std::vector<int>& edge_color) {
  SvgDocument doc(o);
  if (edge_color.empty()) {
    doc.strokes(corner_cut(pts, closed, o.e), {o.ink});
  } else {
    int n = *std::max_element(edge_color.begin(), edge_color.end()) + 1;
    doc.strokes(corner_cut(pts, closed, o.e, edge_color), palette_list(n));
  }
  return doc.str();
}

}  // namespace

std::vector<Stroke> corner_cut(const std::vector<Point2>& pts, bool closed, double e,
                               const std::vector<int>& edge_color) {
  if (e < 0 || e > 0.5) throw MalformedSystem("corner cut e must lie in [0, 0.5]");
  const std::size_t n = pts.size() < 2 ? 0 : pts.size() - 1;
  auto color = [&](std::size_t i) { return edge_color.empty() ? 0 : edge_color.at(i % n); };
  auto dir = [&](std::size_t i) { return pts[i + 1] - pts[i]; };
  // whether the joint at the start of edge i is cut
  auto cut_at = [&](std::size_t i) {
    if (e == 0) return false;
    if (i == 0) return closed && !collinear(dir(n - 1), dir(0));
    return !collinear(dir(i - 1), dir(i));
  };
  std::vector<Stroke> out;
  auto piece = [&](Point2 a, Point2 b, int c, bool bridge) {
    if (std::abs(b - a) > 1e-12) out.push_back({a, b, c, bridge});
  };
  for (std::size_t i = 0; i < n; ++i) {
    const Point2 a = pts[i], b = pts[i + 1];
    const bool cut_in = cut_at(i), cut_out = (i + 1 < n) ? cut_at(i + 1) : (closed && cut_at(0));
    piece(cut_in ? a + e * (b - a) : a, cut_out ? b - e * (b - a) : b, color(i), false);
    if (cut_out) {
      const std::size_t j = (i + 1) % n;
      piece(b - e * (b - a), pts[j] + e * dir(j), color(i), true);
    }
  }
  return out;
}

std::string palette(int j, int n) {
  // hue steps of 360/n at fixed saturation and lightness
  const double h = 360.0 * j / std::max(n, 1), s = 0.65, l = 0.45;
  const double c = (1 - std::abs(2 * l - 1)) * s;
  const double hp = h / 60.0;
  const double x = c * (1 - std::abs(std::fmod(hp, 2.0) - 1));
  double r = 0, g = 0, b = 0;
  switch (static_cast<int>(hp) % 6) {
    case 0: r = c, g = x; break;
    case 1: r = x, g = c; break;
    case 2: g = c, b = x; break;
    case 3: g = x, b = c; break;
    case 4: r = x, b = c; break;
    default: r = c, b = x; break;
  }
  const double m = l - c / 2;
  char buf[8];
  auto byte = [&](double v) { return static_cast<int>(std::lround((v + m) * 255)); };
  std::snprintf(buf, sizeof buf, "#%02x%02x%02x", byte(r), byte(g), byte(b));
  return buf;
}

std::string render_path(const GridPath& p, const RenderOptions& o, const std::vector<int>& edge_color) {
  return single(floats(p), p.closed, o, edge_color);
}

std::string render_path(const BasicPath<8>& p, const RenderOptions& o, const std::vector<int>& edge_color) {
  return single(floats(p), p.closed, o, edge_color);
}

std::string render_curve(const SimpleLsys& s, int n, const RenderOptions& o) {
  auto path = turtle(iterate(s, n), s.grid);
  std::vector<int> colors;
  if (o.color == ColorScheme::Parts && n >= 1) {
    auto d = decompose(s, n);
    colors.resize(path.size());
    for (std::size_t j = 0; j < d.parts.size(); ++j)
      for (std::size_t i = 0; i < d.parts[j].length; ++i) colors[d.parts[j].first + i] = static_cast<int>(j);
  }
  return render_path(path, o, colors);
}

std::string render_tile(const SimpleLsys& s, int sign, int k, const RenderOptions& o) {
  return render_path(build_tile(s, sign, k).path, o);
}

std::string render_converted(const ConvertedPath& c, const RenderOptions& o) {
  std::vector<int> colors;
  if (o.color == ColorScheme::Origin)
    for (auto x : c.origin) colors.push_back(static_cast<int>(x));
  return c.octagonal() ? render_path(c.oct, o, colors) : render_path(c.path, o, colors);
}

std::string render_tiling(const SimpleLsys& s, int sign, int k, int range, const RenderOptions& o) {
  auto tile = build_tile(s, sign, k).path;
  auto copies = tiling_copies(s, sign, k, range);
  SvgDocument doc(o);
  const bool multi = o.color != ColorScheme::Single;
  const int ncolors = multi ? 6 : 1;
  const auto colors = multi ? palette_list(ncolors) : std::vector<std::string>{o.ink};
  for (std::size_t i = 0; i < copies.size(); ++i) {
    std::vector<Point2> pts;
    for (auto& p : tile.pts) pts.push_back(to_complex(copies[i](p)));
    auto strokes = corner_cut(pts, true, o.e);
    for (auto& st : strokes) st.color = static_cast<int>(i % ncolors);
    doc.strokes(strokes, colors);
  }
  return doc.str();
}

Carousel carousel(const SimpleLsys& s, int n) {
  auto tile = build_tile(s, +1, n).path;
  const std::size_t side = turtle(iterate(s, n), s.grid).size();
  Carousel c;
  for (auto& copy : tiling_copies(s, +1, n, 1))
    for (std::size_t first = 0; first + side <= tile.size(); first += side) {
      ExactPoint a = copy(tile.pts[first]), b = copy(tile.pts[first + side]);
      if (!a.is_zero() && !b.is_zero()) continue;
      GridPath g;
      g.pts.push_back(a);
      for (std::size_t i = first; i < first + side; ++i) g.push(mod(tile.dirs[i] + copy.rotation, 12));
      c.curves.push_back(g);
    }
  std::set<std::pair<ExactPoint, ExactPoint>> edges;
  auto key = [](ExactPoint x, ExactPoint y) { return x < y ? std::pair{x, y} : std::pair{y, x}; };
  for (auto& g : c.curves)
    for (std::size_t i = 0; i < g.size(); ++i) edges.insert(key(g.pts[i], g.pts[i + 1]));
  for (int k : {6, 4, 3, 2}) {
    bool same = true;
    for (auto& [x, y] : edges)
      if (!edges.count(key(rotate(x, 12 / k), rotate(y, 12 / k)))) {
        same = false;
        break;
      }
    if (same) {
      c.symmetry = k;
      break;
    }
  }
  return c;
}

std::string render_carousel(const SimpleLsys& s, int n, const RenderOptions& o) {
  auto c = carousel(s, n);
  SvgDocument doc(o);
  const bool multi = o.color != ColorScheme::Single;
  const int ncolors = multi ? static_cast<int>(c.curves.size()) : 1;
  const auto colors = multi ? palette_list(ncolors) : std::vector<std::string>{o.ink};
  for (std::size_t i = 0; i < c.curves.size(); ++i) {
    auto strokes = corner_cut(floats(c.curves[i]), false, o.e);
    for (auto& st : strokes) st.color = multi ? static_cast<int>(i) : 0;
    doc.strokes(strokes, colors);
  }
  return doc.str();
}

std::string render_cloud(const std::vector<CloudPoint>& pts, std::size_t digits, const RenderOptions& o) {
  SvgDocument doc(o);
  const int n = static_cast<int>(std::max<std::size_t>(digits, 1));
  const auto colors = palette_list(n);
  for (auto& p : pts)
    doc.dot(p.z, o.stroke / 2, o.color == ColorScheme::Single ? o.ink : colors[p.leading % colors.size()]);
  return doc.str();
}

}  // namespace gridcurve
