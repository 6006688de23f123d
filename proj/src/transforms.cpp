#include "gridcurve/transforms.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>
#include <unordered_set>

namespace gridcurve {

CurveClass classify(const SimpleLsys& s) {
  int plus = 0, minus = 0, zero = 0;
  for (Tok t : tokenize(s.production, s.grid)) {
    if (t == Tok::Plus) ++plus;
    if (t == Tok::Minus) ++minus;
    if (t == Tok::Zero) ++zero;
  }
  CurveClass c;
  c.wiggly = zero == 0;
  c.balanced = s.grid.tiling == Tiling::Triangular && plus == minus && minus == zero;
  return c;
}

// ---------------------------------------------------------------------------
// Registry

namespace {

const Word kR7_5 = "F+F-F-F+F+F-F";
const Word kTerdragon = "F+F-F";
const Word kR7_1Tri = "F0F+F0F-F-F+F";
const Word kR13_15Tri = "F+F0F0F-F-F+F0F+F+F-F0F-F";
const Word kR9_1 = "F+F-F-F-F+F+F+F-F";
const Word kR5_1 = "F+F+F-F-F";
const Word kR7_1Hex = "F+F--F--F+F+F+F";
const Word kR13_1Hex = "F+F+F+F+F--F+F+F--F--F+F+F--F";

ScanPhase replace(std::vector<RewriteRule> rules) {
  ScanPhase p;
  p.rules = std::move(rules);
  return p;
}

ScanPhase drop_f() { return replace({{"F", ""}}); }

ScanPhase drop_leading_f() {
  ScanPhase p;
  p.drop_leading_f = true;
  return p;
}

ScanPhase drop_trailing_f() {
  ScanPhase p;
  p.drop_trailing_f = true;
  return p;
}

ScanPhase tracked(int modulus, std::map<char, int> delta, std::vector<RewriteRule> rules,
                  std::vector<ScanPhase::Conditional> conditional) {
  ScanPhase p;
  p.modulus = modulus;
  p.delta = std::move(delta);
  p.rules = std::move(rules);
  p.conditional = std::move(conditional);
  return p;
}

EdgeTransducer remap(int from, int to, std::vector<std::string> m) {
  return {EdgePass::DirectionMap, from, to, std::move(m)};
}

const std::vector<RewriteRule> kHexPC = {{"+F", "+F+F"}, {"-F", "-F-F"}};
const std::vector<std::string> kHoneycombToSquare = {"1", "2", "2", "3", "4", "4"};

// Cross replacement of hexagons on the tri-hex grid, by direction modulo 3.
ScanPhase cross_phase() {
  return tracked(3, {{'+', 1}, {'-', -1}}, {},
                 {{0, {"+", "++FF---F+++"}},
                  {1, {"+", "F+++F---F++"}},
                  {2, {"+", "--F+++F+"}},
                  {0, {"--", "-F---F---F+++"}},
                  {1, {"--", "---FF---F++"}},
                  {2, {"--", "-----FF+"}}});
}

std::vector<ConversionSpec> build_registry() {
  std::vector<ConversionSpec> r;
  auto add = [&](ConversionSpec s) -> ConversionSpec& { return r.emplace_back(std::move(s)); };
  const GridKind hex{Tiling::Hexagonal}, kagome{Tiling::TriHexagonal}, elong{Tiling::ElongatedTri},
      oct{Tiling::TruncatedSquare}, snubsq{Tiling::SnubSquare}, t4612{Tiling::TruncatedTriHex},
      snub{Tiling::SnubHexagonal, false}, snub_e{Tiling::SnubHexagonal, true}, t31212{Tiling::TruncatedHex},
      r3464{Tiling::RhombiTriHex};
  using SK = SourceKind;

  // from triangular wiggly curves
  add({"(6^3)-PC", SK::TriWiggly, hex, 2, "F", {replace(kHexPC)}, {}, Coverage::PC, true,
       {{kR7_5, 3}, {kR7_5, 2, +1}, {kTerdragon, 4, -1}}});
  add({"(3.6.3.6)-PC", SK::TriWiggly, kagome, 2, "F", {drop_f(), replace({{"+", "+F+"}, {"-", "-F-"}})}, {},
       Coverage::PC, false, {{kR7_5, 3}, {kR7_5, 2, +1}}});
  add({"(3^6)-PC", SK::TriWiggly, kTri, 2, "F", {drop_f(), replace({{"+", "++F"}, {"-", "-F-"}})}, {},
       Coverage::PC, false, {{kR7_5, 3}, {kR7_5, 2, -1}}});
  add({"(3.12.12)-PC", SK::TriWiggly, t31212, 1, "F",
       {drop_leading_f(), replace({{"+F", "X"}, {"-F", "Y"}}),
        replace({{"X", "F-F++++F-F-F++++F-"}, {"Y", "F+F----F+F+F----F+"}})},
       {}, Coverage::PC, true, {{kR7_5, 2}, {kR7_5, 2, +1}}});
  add({"(3.4.6.4)-PC", SK::TriWiggly, r3464, 1, "F",
       {drop_f(), replace({{"+", "p"}, {"-", "m"}}),
        replace({{"p", "++F+++F----F+++F+++F----F+"}, {"m", "--F---F++++F---F---F++++F-"}})},
       {}, Coverage::PC, false, {{kR7_5, 2}, {kR7_5, 2, +1}}});
  add({"(3.4.6.4)-PC alt", SK::TriWiggly, r3464, 1, "F",
       {drop_f(), replace({{"+", "p"}, {"-", "m"}}),
        replace({{"p", "+++F----F+++F+++F----F+++F"}, {"m", "+++F----F-F-F----F+++F"}})},
       {}, Coverage::PC, false, {{kR7_5, 2}, {kR7_5, 2, +1}}});
  add({"(4.6.12)-PC", SK::TriWiggly, t4612, 1, "F",
       {drop_f(), replace({{"+", "p"}, {"-", "m"}}), replace({{"p", "+F+F+F+F"}, {"m", "+F---F---F+F"}})}, {},
       Coverage::PC, false, {{kR7_5, 3}, {kR7_5, 2, +1}}});
  // enantiomer labels are relative: each pair lands on opposite enantiomers
  add({"(3^4.6)-PC", SK::TriWiggly, snub_e, 2, "F", {replace({{"+", "F++"}, {"-", "-F-"}})}, {}, Coverage::PC,
       false, {{kR7_5, 2}, {kR7_5, 2, +1}}});
  add({"(3^4.6)-PC other enantiomer", SK::TriWiggly, snub, 2, "F", {replace({{"+", "++F"}, {"-", "-F-"}})}, {},
       Coverage::PC, false, {{kR7_5, 2}, {kR7_5, 2, +1}}});
  add({"(3^4.6)-PC T", SK::TriWiggly, snub_e, 2, "T",
       {replace({{"+", "+T+"}, {"-", "-T-"}}), replace({{"F", "-T+"}})}, {}, Coverage::PC, false,
       {{kR7_5, 2}, {kR7_5, 2, +1}}});
  add({"(3^4.6)-PC T other enantiomer", SK::TriWiggly, snub, 2, "T",
       {replace({{"+", "+T+"}, {"-", "-T-"}}), replace({{"F", "+T-"}})}, {}, Coverage::PC, false,
       {{kR7_5, 2}, {kR7_5, 2, +1}}});
  add({"(4^4)-PC via (6^3)", SK::TriWiggly, kSquare, 2, "F", {replace(kHexPC)},
       {remap(6, 4, kHoneycombToSquare)}, Coverage::PC, true, {{kTerdragon, 2, +1}, {kR7_5, 2, +1}}});
  add({"(4^4)-PC via (6^3) less distorted", SK::TriWiggly, kSquare, 2, "F", {replace(kHexPC)},
       {remap(6, 4, {"1", "2", "", "3", "", "4"})}, Coverage::PC, true, {{kTerdragon, 2, +1}}});
  add({"(3^6)-PC via (4^4)", SK::TriWiggly, kTri, 2, "F", {replace(kHexPC)},
       {remap(6, 4, kHoneycombToSquare), {EdgePass::AlternateVerticals, 4, 6, {}}}, Coverage::PC, true,
       {{kTerdragon, 2, +1}, {kR7_5, 2, +1}}});
  add({"(3^3.4^2)-PC", SK::TriWiggly, elong, 2, "F", {replace(kHexPC)},
       {remap(6, 4, kHoneycombToSquare), {EdgePass::AlternateRows, 4, 6, {}}}, Coverage::PC, true,
       {{kR7_5, 2, +1}}});

  // from triangular balanced curves
  add({"(3^6)-PC balanced", SK::TriBalanced, kTri, 2, "F",
       {drop_f(), replace({{"+", "+F+"}, {"-", "-F-"}, {"0", "F0F"}})}, {}, Coverage::PC, false,
       {{kR7_1Tri, 3}, {kR7_1Tri, 2, +1}}});
  add({"(3.4.6.4)-PC balanced", SK::TriBalanced, r3464, 1, "F",
       {drop_trailing_f(), replace({{"+", "p"}, {"-", "m"}}),
        replace({{"Fp", "+F++F+"}, {"Fm", "--F--"}, {"F0", "+F-F-F+"}})},
       {},
       Coverage::PC, false, {{kR7_1Tri, 3}, {kR7_1Tri, 2, +1}}});
  add({"(4.6.12)-PC balanced", SK::TriBalanced, t4612, 1, "F",
       {replace({{"F+", "F+F+F+F+"}, {"F-", "F--F--"}, {"F0", "F+F+F--F--F+F+"}})}, {}, Coverage::PC, false,
       {{kR7_1Tri, 3}, {kR7_1Tri, 2, +1}}});
  const std::vector<RewriteRule> balanced_ec = {{"F+", "F+F+"}, {"F-", "F--"}, {"F0", "F+F--F+"}};
  add({"(3.6.3.6)-EC balanced", SK::TriBalanced, kagome, 2, "F", {replace(balanced_ec)}, {}, Coverage::EC, false,
       {{kR13_15Tri, 2, +1}, {kR13_15Tri, 2, -1}, {kR7_1Tri, 2, +1}}});
  add({"(4^4)-PC balanced", SK::TriBalanced, kSquare, 1, "F", {replace(balanced_ec), drop_f(), cross_phase()}, {},
       Coverage::PC, false, {{kR13_15Tri, 2, +1}, {kR13_15Tri, 2, -1}}});

  // from square curves
  add({"(4.8.8)-PC", SK::Square, oct, 1, "F", {replace(kHexPC)}, {}, Coverage::PC, true,
       {{kR9_1, 2}, {kR9_1, 2, +1}}})
      .ring = 8;
  // edge midpoints: half of each 90 degree turn on either side, first step at -45 degrees
  auto& midpoints = add({"(4^4)-PC", SK::Square, kSquare, 1, "F", {drop_f(), replace({{"+", "+F+"}, {"-", "-F-"}})},
                         {}, Coverage::PC, false, {{kR9_1, 2}, {kR9_1, 2, +1}}});
  midpoints.ring = 8;
  midpoints.start_dir = -1;
  add({"(3.3.4.3.4)-PC", SK::Square, snubsq, 1, "F", {drop_f(), replace({{"+", "++F+"}, {"-", "--F-"}})}, {},
       Coverage::PC, false, {{kR9_1, 2}, {kR9_1, 2, +1}}});
  auto& verticals = add({"(3^6)-PC square", SK::Square, kTri, 1, "F",
                         {drop_f(), replace({{"+", "+F+"}, {"-", "-F-"}})}, {{EdgePass::AlternateVerticals, 4, 6, {}}},
                         Coverage::PC, false, {{kR9_1, 2}, {kR9_1, 2, +1}}});
  verticals.ring = 8;
  verticals.start_dir = -1;
  add({"(3.6.3.6)-EC square", SK::Square, kagome, 3, "F", {}, {remap(4, 6, {"1", "65", "4", "32"})}, Coverage::EC,
       false, {{kR5_1, 3, +1}, {kR5_1, 3, -1}}});

  // from tri-hexagonal curves
  add({"(4.6.12)-PC tri-hex", SK::TriHex, t4612, 1, "F", {drop_f(), replace({{"+", "F+F+"}, {"--", "F--F--"}})},
       {}, Coverage::PC, false, {{kR7_1Hex, 3}, {kR7_1Hex, 2, +1}}});
  add({"(4.6.12)-PC tri-hex alt", SK::TriHex, t4612, 1, "F",
       {replace({{"+", "p"}, {"--", "m"}}),
        replace({{"p", "---F++F++F++F++F---"}, {"m", "---F++F-F-F++F---"}})},
       {}, Coverage::PC, false, {{kR7_1Hex, 3}, {kR7_1Hex, 2, +1}}});
  add({"(3.4.6.4)-PC tri-hex", SK::TriHex, r3464, 1, "F",
       {drop_f(), replace({{"+", "+F+"}, {"--", "--F--"}})}, {}, Coverage::PC, false,
       {{kR7_1Hex, 3}, {kR7_1Hex, 2, +1}}});
  add({"(3^4.6)-PC tri-hex", SK::TriHex, snub_e, 1, "F",
       {drop_f(), replace({{"+", "p"}, {"--", "m"}}), replace({{"p", "--F++++F++F--"}, {"m", "--FFF--"}})}, {},
       Coverage::PC, false, {{kR7_1Hex, 3}, {kR7_1Hex, 2, +1}}});
  add({"(3^4.6)-PC tri-hex alt", SK::TriHex, snub, 2, "F", {drop_f(), replace({{"+", "+F"}, {"--", "-F-"}})}, {},
       Coverage::PC, false, {{kR7_1Hex, 3}, {kR7_1Hex, 2, +1}}});
  add({"(3^4.6)-PC tri-hex alt other enantiomer", SK::TriHex, snub_e, 2, "F", {drop_f(), replace({{"+", "-F"}, {"--", "+F+"}})},
       {}, Coverage::PC, false, {{kR7_1Hex, 3}, {kR7_1Hex, 2, +1}}});
  add({"(4^4)-PC tri-hex", SK::TriHex, kSquare, 1, "F", {drop_f(), cross_phase()}, {}, Coverage::PC, false,
       {{kR7_1Hex, 2, +1}, {kR13_1Hex, 2, +1}}});
  add({"(4^4)-EC tri-hex", SK::TriHex, kSquare, 2, "F", {}, {remap(6, 4, {"21", "2", "3", "43", "4", "1"})},
       Coverage::EC, false, {{kR13_1Hex, 2, +1}}});
  add({"(4^4)-EC tri-hex less distorted", SK::TriHex, kSquare, 2, "F", {},
       {remap(6, 4, {"141", "2321", "2", "3", "4323", "414"})}, Coverage::EC, false, {{kR13_1Hex, 2, +1}}});
  add({"(4^4)-EC tri-hex least distorted", SK::TriHex, kSquare, 2, "F", {},
       {remap(6, 4, {"12321", "2343212", "3432", "34143", "4121434", "1214"})}, Coverage::EC, false,
       {{kR13_1Hex, 2, +1}}});
  add({"(3^6)-EC tri-hex", SK::TriHex, kTri, 2, "F", {}, {remap(6, 6, {"1", "", "3", "", "5", ""})}, Coverage::EC,
       false, {{kR7_1Hex, 2, -1}}});

  // edge-covering curves from triangular wiggly curves
  add({"(3.4.6.4)-EC method 1", SK::TriWiggly, r3464, 1, "F",
       {drop_f(), replace({{"+", "p"}, {"-", "m"}}),
        tracked(3, {{'p', 1}, {'m', -1}},
                {{"p", "---F++++F++++F---F---F++++F++++F---F"}, {"m", "---F++++F---F++F---F---F---F++++F++++F---F"}},
                {{0, {"p", "---F++++FH++++F---F---F++++FH++++F---F"}},
                 {2, {"m", "---FH++++F---F++F---F---F---F++++F++++F---F"}}}),
        replace({{"H", "---F++F++F++F++F++F-------"}})},
       {}, Coverage::EC, false, {{kTerdragon, 3, -1}}});
  add({"(3.4.6.4)-EC method 2", SK::TriWiggly, r3464, 1, "F",
       {drop_f(),
        tracked(3, {{'+', 1}, {'-', -1}}, {{"+", "++F++F"}, {"-", "---F---F++F"}},
                {{1, {"-", "---F---FTF"}}, {2, {"+", "TFTF"}}}),
        replace({{"T", "---F++++F++++F---"}})},
       {}, Coverage::EC, false, {{kTerdragon, 4, -1}}});
  add({"(3.6.3.6)-EC", SK::TriWiggly, kagome, 2, "F",
       {drop_f(), tracked(3, {{'+', 1}, {'-', -1}}, {{"+", "+F+F"}, {"-", "--F"}}, {{0, {"-", "+F--F--F+F"}}})}, {},
       Coverage::EC, false, {{kTerdragon, 4, +1}, {kTerdragon, 4, -1}}});
  return r;
}

}  // namespace

GridKind source_grid(SourceKind k) {
  switch (k) {
    case SourceKind::Square:
      return kSquare;
    case SourceKind::TriHex:
      return kTriHex;
    default:
      return kTri;
  }
}

bool source_accepts(SourceKind k, const SimpleLsys& s) {
  if (!(s.grid == source_grid(k))) return false;
  auto c = classify(s);
  if (k == SourceKind::TriWiggly) return c.wiggly;
  if (k == SourceKind::TriBalanced) return c.balanced;
  return true;
}

const std::vector<ConversionSpec>& registry() {
  static const std::vector<ConversionSpec> r = build_registry();
  return r;
}

const ConversionSpec& find_spec(const std::string& name) {
  for (auto& s : registry())
    if (s.name == name) return s;
  throw MalformedSystem("unknown conversion '" + name + "'");
}

// ---------------------------------------------------------------------------
// Conversion

namespace {

bool matches(const Word& w, std::size_t i, const std::string& pat) { return w.compare(i, pat.size(), pat) == 0; }

// A word with, for each symbol, the index of the source F it descends from.
struct Tracked {
  Word w;
  std::vector<std::size_t> src;
};

Tracked track(const Word& w) {
  Tracked t{w, {}};
  std::size_t f = 0;
  for (char c : w) {
    t.src.push_back(f == 0 ? 0 : f - 1);
    if (c == 'F') t.src.back() = f++;
  }
  return t;
}

Tracked run_phase(const Tracked& in, const ScanPhase& ph) {
  const Word& w = in.w;
  if (ph.drop_leading_f || ph.drop_trailing_f) {
    Tracked t = in;
    if (ph.drop_leading_f && !w.empty() && w.front() == 'F') {
      t.w.erase(0, 1);
      t.src.erase(t.src.begin());
    }
    if (ph.drop_trailing_f && !w.empty() && w.back() == 'F') {
      t.w.pop_back();
      t.src.pop_back();
    }
    return t;
  }
  auto longest_first = [](auto v, auto key) {
    std::stable_sort(v.begin(), v.end(), [&](auto& a, auto& b) { return key(a).size() > key(b).size(); });
    return v;
  };
  auto rules = longest_first(ph.rules, [](const RewriteRule& r) -> const std::string& { return r.from; });
  auto cond = longest_first(ph.conditional,
                            [](const ScanPhase::Conditional& c) -> const std::string& { return c.rule.from; });
  Tracked out;
  int d = 0;
  for (std::size_t i = 0; i < w.size();) {
    const RewriteRule* hit = nullptr;
    if (ph.modulus > 0)
      for (auto& c : cond)
        if (mod(d, ph.modulus) == c.residue && matches(w, i, c.rule.from)) {
          hit = &c.rule;
          break;
        }
    if (!hit)
      for (auto& r : rules)
        if (!r.from.empty() && matches(w, i, r.from)) {
          hit = &r;
          break;
        }
    std::size_t len = hit ? hit->from.size() : 1;
    // replacement symbols descend from the first F consumed, else the first symbol
    std::size_t origin = in.src[i];
    for (std::size_t j = i; j < i + len; ++j)
      if (w[j] == 'F') {
        origin = in.src[j];
        break;
      }
    if (hit) {
      out.w += hit->to;
      out.src.insert(out.src.end(), hit->to.size(), origin);
    } else {
      out.w.push_back(w[i]);
      out.src.push_back(origin);
    }
    if (ph.modulus > 0)
      for (std::size_t j = i; j < i + len; ++j)
        if (auto it = ph.delta.find(w[j]); it != ph.delta.end()) d += it->second;
    i += len;
  }
  return out;
}

Tracked rewrite_tracked(const Word& w, const ConversionSpec& spec) {
  Tracked t = track(w);
  for (auto& ph : spec.phases) t = run_phase(t, ph);
  return t;
}

GridPath from_dirs(const std::vector<int>& dirs) {
  GridPath p;
  p.pts.push_back({});
  for (int d : dirs) p.push(d);
  p.closed = !p.dirs.empty() && p.end() == p.start();
  return p;
}

// Rewrites the path's edges; `origin` (one entry per edge) follows along.
GridPath apply_edges(const GridPath& in, const EdgeTransducer& t, std::vector<std::size_t>& origin) {
  std::vector<int> out;
  std::vector<std::size_t> org;
  if (t.kind == EdgePass::DirectionMap) {
    const int step_in = 12 / t.from_dirs, step_out = 12 / t.to_dirs;
    if (static_cast<int>(t.map.size()) != t.from_dirs) throw std::logic_error("direction map has the wrong size");
    for (std::size_t i = 0; i < in.dirs.size(); ++i) {
      int d = in.dirs[i];
      if (d % step_in) throw MalformedSystem("edge direction outside the mapped set");
      for (char c : t.map[d / step_in]) {
        out.push_back((c - '1') * step_out);
        org.push_back(origin[i]);
      }
    }
    origin = std::move(org);
    return from_dirs(out);
  }
  // both row passes read a square-grid path and track the row of each vertex
  i64 row = 0;
  const bool triangular = t.kind == EdgePass::AlternateVerticals;
  for (int d : in.dirs) {
    switch (d) {
      case 0:
      case 6:
        out.push_back(d);
        break;
      case 3:
        if (triangular)
          out.push_back(row % 2 == 0 ? 2 : 4);
        else
          out.push_back(row % 2 == 0 ? 3 : 2);
        ++row;
        break;
      case 9:
        --row;
        if (triangular)
          out.push_back(row % 2 == 0 ? 8 : 10);
        else
          out.push_back(row % 2 == 0 ? 9 : 8);
        break;
      default:
        throw MalformedSystem("row pass needs a square-grid path");
    }
  }
  return from_dirs(out);
}

}  // namespace

Word rewrite(const Word& w, const ConversionSpec& spec) { return rewrite_tracked(w, spec).w; }

ConvertedPath convert(const Word& w, const ConversionSpec& spec) {
  Tracked x = rewrite_tracked(w, spec);
  ConvertedPath c;
  c.target = spec.target;
  for (std::size_t i = 0; i < x.w.size(); ++i)
    if (spec.drawing.find(x.w[i]) != std::string::npos) c.origin.push_back(x.src[i]);
  if (spec.ring == 8) {
    c.oct = turtle_generic<8>(x.w, spec.turn_units, spec.drawing, {}, spec.start_dir);
    if (c.octagonal()) return c;
    // axis-parallel steps only, carried over to the 12th-root ring
    std::vector<int> dirs;
    for (int d : c.oct.dirs) {
      if (d % 2) throw MalformedSystem(spec.name + ": diagonal step off the 12th-root ring");
      dirs.push_back(d / 2 * 3);
    }
    c.oct = {};
    c.path = from_dirs(dirs);
  } else {
    if (c.octagonal()) throw std::logic_error("(4.8.8) targets need the 8th-root ring");
    c.path = turtle_generic<12>(x.w, spec.turn_units, spec.drawing, {}, spec.start_dir);
  }
  for (auto& t : spec.edges) c.path = apply_edges(c.path, t, c.origin);
  return c;
}

namespace {

void require_source(const SimpleLsys& s, const ConversionSpec& spec) {
  validate(s);
  if (!source_accepts(spec.source, s))
    throw MalformedSystem(spec.name + " does not apply to " + s.production + " on " + grid_name(s.grid));
}

}  // namespace

ConvertedPath convert_curve(const SimpleLsys& s, int n, const ConversionSpec& spec) {
  require_source(s, spec);
  return convert(iterate(s, n), spec);
}

ConvertedPath convert_tile(const SimpleLsys& s, int sign, int k, const ConversionSpec& spec) {
  require_source(s, spec);
  Word axiom = tile_axiom(s.grid, sign);
  Word closing = axiom.substr(1, axiom.find('F', 1) - 1);
  Word w = tile_word(s, sign, k);
  return convert(spec.turn_first ? closing + w : w + closing, spec);
}

ConvertedPath convert_demo(const ConversionSpec& spec, const ConversionDemo& demo) {
  SimpleLsys s{source_grid(spec.source), demo.production};
  if (demo.tile_sign == 0) return convert_curve(s, demo.iterate, spec);
  return convert_tile(s, demo.tile_sign, demo.iterate, spec);
}

// ---------------------------------------------------------------------------
// Verification

namespace {

template <int N>
const PeriodicSet<N>& periodic_set(GridKind g);

template <>
const PeriodicSet<12>& periodic_set<12>(GridKind g) {
  return vertex_set(g);
}

template <>
const PeriodicSet<8>& periodic_set<8>(GridKind g) {
  if (g.tiling != Tiling::TruncatedSquare) throw std::logic_error("octagonal path on " + grid_name(g));
  return octagonal_vertex_set();
}

template <int N>
using PointSet = std::unordered_set<CycloPoint<N>, PointHash>;

// Rotates and translates the path onto the grid's vertex set.
template <int N>
std::optional<BasicPath<N>> place(const BasicPath<N>& p, const PeriodicSet<N>& s) {
  PointSet<N> distinct(p.pts.begin(), p.pts.end());
  for (int r = 0; r < N; ++r)
    for (auto& o : s.offsets) {
      auto f = [&](CycloPoint<N> x) { return rotate(x - p.start(), r) + o; };
      bool ok = std::all_of(distinct.begin(), distinct.end(), [&](auto& x) { return s.contains(f(x)); });
      if (!ok) continue;
      BasicPath<N> q;
      q.closed = p.closed;
      for (auto& x : p.pts) q.pts.push_back(f(x));
      for (int d : p.dirs) q.dirs.push_back(mod(d + r, N));
      return q;
    }
  return std::nullopt;
}

// Exact crossing-number test against a fixed loop (first == last).
template <int N>
class Winder {
 public:
  using Real = typename CycloPoint<N>::Real;
  explicit Winder(const std::vector<CycloPoint<N>>& loop, i64 scale) {
    for (auto& p : loop) xy_.push_back(cart2(scale * p));
  }
  std::optional<int> operator()(CycloPoint<N> q) const {
    auto [qx, qy] = cart2(q);
    int w = 0;
    for (std::size_t i = 1; i < xy_.size(); ++i) {
      auto [px, py] = xy_[i - 1];
      auto [nx, ny] = xy_[i];
      bool a = compare(py, qy) > 0, b = compare(ny, qy) > 0;
      if (a != b) {
        int s = ((nx - px) * (qy - py) - (ny - py) * (qx - px)).sign();
        if (s == 0) return std::nullopt;
        if (b && s > 0) ++w;
        if (a && s < 0) --w;
      } else if (compare(py, qy) == 0 && compare(ny, qy) == 0) {
        int s1 = compare(px, qx), s2 = compare(nx, qx);
        if (s1 == 0 || s2 == 0 || s1 != s2) return std::nullopt;
      }
    }
    return w;
  }

 private:
  std::vector<std::pair<Real, Real>> xy_;
};

// Grid vertices whose position lies in the path's bounding box.
template <int N>
std::vector<CycloPoint<N>> vertices_in_box(const PeriodicSet<N>& s, const std::vector<CycloPoint<N>>& pts) {
  double x0 = 1e300, x1 = -1e300, y0 = 1e300, y1 = -1e300;
  for (auto& p : pts) {
    auto c = to_complex(p);
    x0 = std::min(x0, c.real());
    x1 = std::max(x1, c.real());
    y0 = std::min(y0, c.imag());
    y1 = std::max(y1, c.imag());
  }
  auto a = to_complex(s.t1), b = to_complex(s.t2);
  double det = a.real() * b.imag() - a.imag() * b.real();
  double lo_i = 1e300, hi_i = -1e300, lo_j = 1e300, hi_j = -1e300;
  for (double x : {x0, x1})
    for (double y : {y0, y1}) {
      double i = (x * b.imag() - y * b.real()) / det;
      double j = (a.real() * y - a.imag() * x) / det;
      lo_i = std::min(lo_i, i);
      hi_i = std::max(hi_i, i);
      lo_j = std::min(lo_j, j);
      hi_j = std::max(hi_j, j);
    }
  double reach = 0;
  for (auto& o : s.offsets) reach = std::max(reach, std::abs(to_complex(o)));
  double pad = reach / std::min(std::abs(a), std::abs(b)) + 2;
  std::vector<CycloPoint<N>> out;
  const double eps = 1e-9;
  for (i64 i = static_cast<i64>(std::floor(lo_i - pad)); i <= static_cast<i64>(std::ceil(hi_i + pad)); ++i)
    for (i64 j = static_cast<i64>(std::floor(lo_j - pad)); j <= static_cast<i64>(std::ceil(hi_j + pad)); ++j)
      for (auto& o : s.offsets) {
        auto p = i * s.t1 + j * s.t2 + o;
        auto c = to_complex(p);
        if (c.real() >= x0 - eps && c.real() <= x1 + eps && c.imag() >= y0 - eps && c.imag() <= y1 + eps)
          out.push_back(p);
      }
  return out;
}

template <int N>
std::vector<CycloPoint<N>> neighbours(const PeriodicSet<N>& s, CycloPoint<N> v) {
  std::vector<CycloPoint<N>> out;
  for (int k = 0; k < N; ++k)
    if (auto w = v + unit<N>(k); s.contains(w)) out.push_back(w);
  return out;
}

template <int N>
std::string pc_impl(const BasicPath<N>& path, GridKind g) {
  auto& s = periodic_set<N>(g);
  auto placed = place(path, s);
  if (!placed) return "vertices off the grid";
  const auto& pts = placed->pts;
  PointSet<N> seen;
  std::size_t visits = pts.size() - (placed->closed ? 1 : 0);
  for (std::size_t i = 0; i < visits; ++i)
    if (!seen.insert(pts[i]).second) return "vertex " + std::to_string(i) + " visited twice";

  if (placed->closed) {
    Winder<N> wind(pts, 1);
    for (auto& q : vertices_in_box(s, pts)) {
      if (seen.count(q)) continue;
      auto w = wind(q);
      if (!w || *w != 0) return "enclosed vertex " + to_string(q) + " not visited";
    }
    return {};
  }
  for (auto& v : seen)
    for (auto& w : neighbours(s, v)) {
      if (seen.count(w)) continue;
      auto around = neighbours(s, w);
      if (std::all_of(around.begin(), around.end(), [&](auto& x) { return seen.count(x) > 0; }))
        return "vertex " + to_string(w) + " surrounded but not visited";
    }
  return {};
}

template <int N>
std::string ec_impl(const BasicPath<N>& path, GridKind g) {
  auto& s = periodic_set<N>(g);
  auto placed = place(path, s);
  if (!placed) return "vertices off the grid";
  using Edge = std::pair<CycloPoint<N>, CycloPoint<N>>;
  std::set<Edge> used;
  for (std::size_t i = 0; i < placed->size(); ++i)
    if (!used.insert(placed->edge(i).undirected()).second) return "edge " + std::to_string(i) + " traversed twice";
  auto covered = [&](CycloPoint<N> a, CycloPoint<N> b) { return used.count(a < b ? Edge{a, b} : Edge{b, a}) > 0; };

  if (placed->closed) {
    Winder<N> wind(placed->pts, 2);
    for (auto& v : vertices_in_box(s, placed->pts))
      for (int k = 0; k < N; ++k) {
        auto w = v + unit<N>(k);
        if (!(v < w) || !s.contains(w) || covered(v, w)) continue;
        auto wn = wind(2 * v + unit<N>(k));
        if (!wn || *wn != 0) return "enclosed edge at " + to_string(v) + " not traversed";
      }
    return {};
  }
  auto saturated_but = [&](CycloPoint<N> v, CycloPoint<N> skip) {
    for (auto& x : neighbours(s, v))
      if (x != skip && !covered(v, x)) return false;
    return true;
  };
  for (auto& [a, b] : used)
    for (auto v : {a, b})
      for (auto& w : neighbours(s, v))
        if (!covered(v, w) && saturated_but(v, w) && saturated_but(w, v))
          return "edge at " + to_string(v) + " surrounded but not traversed";
  return {};
}

}  // namespace

bool verify_pc(const GridPath& p, GridKind g) { return pc_impl(p, g).empty(); }
bool verify_pc(const BasicPath<8>& p, GridKind g) { return pc_impl(p, g).empty(); }
bool verify_ec(const GridPath& p, GridKind g) { return ec_impl(p, g).empty(); }
bool verify_ec(const BasicPath<8>& p, GridKind g) { return ec_impl(p, g).empty(); }

std::string coverage_failure(const ConvertedPath& c, Coverage mode) {
  if (c.octagonal()) return mode == Coverage::PC ? pc_impl(c.oct, c.target) : ec_impl(c.oct, c.target);
  return mode == Coverage::PC ? pc_impl(c.path, c.target) : ec_impl(c.path, c.target);
}

bool verify(const ConvertedPath& c, Coverage mode) { return coverage_failure(c, mode).empty(); }

// ---------------------------------------------------------------------------
// Products and divisions

SimpleLsys product(const SimpleLsys& a, const SimpleLsys& b) {
  if (!(a.grid == b.grid)) throw MalformedSystem("product of curves on different grids");
  Word w;
  for (char c : a.production) {
    if (c == 'F')
      w += b.production;
    else
      w.push_back(c);
  }
  return {a.grid, w};
}

namespace {

// Fresh letters for divisions; F stays reserved.
const std::string kLetters = "ABCDEGHIJKLMNOPQRSTUVWXYZ";

// Cuts w right after the parts[j]-th letter of `alphabet` in piece j.
std::vector<Word> cut(const Word& w, const std::string& alphabet, const std::vector<int>& parts) {
  std::vector<Word> pieces(parts.size());
  std::size_t j = 0;
  int seen = 0;
  for (char c : w) {
    pieces[j].push_back(c);
    if (alphabet.find(c) != std::string::npos && ++seen == parts[j] && j + 1 < parts.size()) {
      ++j;
      seen = 0;
    }
  }
  return pieces;
}

int count_letters(const Word& w, const std::string& alphabet) {
  return static_cast<int>(std::count_if(w.begin(), w.end(), [&](char c) { return alphabet.find(c) != std::string::npos; }));
}

void check_parts(const std::vector<int>& parts, int total) {
  int sum = 0;
  for (int p : parts) {
    if (p < 1) throw MalformedSystem("division parts must be positive");
    sum += p;
  }
  if (sum != total)
    throw MalformedSystem("division parts sum to " + std::to_string(sum) + ", expected " + std::to_string(total));
}

}  // namespace

bool has_cyclic_permutation(const MultiLsys& sys) {
  for (auto& [start, _] : sys.maps) {
    char c = start;
    for (std::size_t steps = 0; steps <= sys.maps.size(); ++steps) {
      auto it = sys.maps.find(c);
      if (it == sys.maps.end() || it->second.size() != 1) break;
      c = it->second[0];
      if (c == start) return true;
    }
  }
  return false;
}

DivisionScheme divide(const SimpleLsys& s, const std::vector<int>& parts) {
  validate(s);
  const int d = static_cast<int>(parts.size());
  if (d < 1 || d > static_cast<int>(kLetters.size())) throw MalformedSystem("unsupported division count");
  check_parts(parts, d * order(s));
  const std::string letters = kLetters.substr(0, d);
  Word w;
  for (char c : s.production) {
    if (c == 'F')
      w += letters;
    else
      w.push_back(c);
  }
  DivisionScheme out;
  out.parts = parts;
  out.system.axiom = letters;
  out.system.drawing = letters;
  out.system.phi_deg = as_multi(s).phi_deg;
  auto pieces = cut(w, letters, parts);
  for (int j = 0; j < d; ++j) out.system.maps[letters[j]] = pieces[j];
  if (has_cyclic_permutation(out.system)) throw MalformedSystem("division degenerates to a cyclic permutation");
  return out;
}

DivisionScheme divide(const SimpleLsys& s, int d) {
  if (d < 1) throw MalformedSystem("division count must be positive");
  return divide(s, std::vector<int>(d, order(s)));
}

MultiLsys divide_multi(const MultiLsys& sys, const std::map<char, std::string>& subst,
                       const std::map<char, std::vector<int>>& parts) {
  std::string alphabet;
  for (auto& [_, s] : subst) alphabet += s;
  auto substitute = [&](const Word& w) {
    Word out;
    for (char c : w) {
      auto it = subst.find(c);
      if (it != subst.end())
        out += it->second;
      else
        out.push_back(c);
    }
    return out;
  };

  MultiLsys out;
  out.axiom = substitute(sys.axiom);
  out.phi_deg = sys.phi_deg;
  out.drawing.clear();
  for (char c : sys.drawing) {
    auto it = subst.find(c);
    out.drawing += it != subst.end() ? it->second : std::string(1, c);
  }
  for (auto& [letter, prod] : sys.maps) {
    Word w = substitute(prod);
    auto it = subst.find(letter);
    if (it == subst.end()) {
      out.maps[letter] = w;
      continue;
    }
    const std::string& pieces_of = it->second;
    const int n = count_letters(w, alphabet);
    const int k = static_cast<int>(pieces_of.size());
    std::vector<int> p;
    if (auto pit = parts.find(letter); pit != parts.end()) {
      p = pit->second;
      if (static_cast<int>(p.size()) != k) throw MalformedSystem("one part per substituted letter required");
    } else {
      if (n % k) throw MalformedSystem("production of '" + std::string(1, letter) + "' does not split evenly");
      p.assign(k, n / k);
    }
    check_parts(p, n);
    auto pieces = cut(w, alphabet, p);
    for (int j = 0; j < k; ++j) out.maps[pieces_of[j]] = pieces[j];
  }
  if (has_cyclic_permutation(out)) throw MalformedSystem("division degenerates to a cyclic permutation");
  return out;
}

}  // namespace gridcurve
