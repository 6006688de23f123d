#pragma once

#include <map>
#include <string>
#include <vector>

#include "gridcurve/geometry.hpp"
#include "gridcurve/lsystem.hpp"
#include "gridcurve/validity.hpp"

namespace gridcurve {

struct CurveClass {
  bool wiggly = false;    // no 0 turn
  bool balanced = false;  // equal numbers of +, - and 0 (triangular grid only)
  friend bool operator==(const CurveClass&, const CurveClass&) = default;
};

CurveClass classify(const SimpleLsys& s);

// ---------------------------------------------------------------------------
// Conversions between grids

enum class SourceKind { TriWiggly, TriBalanced, Square, TriHex };
enum class Coverage { PC, EC };

struct RewriteRule {
  std::string from, to;
};

// One left-to-right scan; at each position the longest matching pattern wins
// and unmatched symbols are copied. With modulus > 0 a direction counter is
// advanced by `delta` for every consumed source symbol and the conditional
// rules take precedence when the counter (before the match) has their residue.
struct ScanPhase {
  std::vector<RewriteRule> rules;
  int modulus = 0;
  std::map<char, int> delta;
  struct Conditional {
    int residue;
    RewriteRule rule;
  };
  std::vector<Conditional> conditional;
  bool drop_leading_f = false;   // only removes an F in first position
  bool drop_trailing_f = false;  // only removes an F in last position
};

enum class EdgePass {
  DirectionMap,        // direction k of `from_dirs` -> digits of `to_dirs` directions (empty: contract)
  AlternateVerticals,  // square -> (3^6): verticals leave even rows at 60 degrees, odd rows at 120
  AlternateRows,       // square -> (3^3.4^2): verticals leaving odd rows lean to 60 degrees
};

struct EdgeTransducer {
  EdgePass kind = EdgePass::DirectionMap;
  int from_dirs = 6;
  int to_dirs = 4;
  std::vector<std::string> map;  // map[k-1] for direction k; digits '1'..
};

// A source the conversion is shown on: iterate `iterate` of the production,
// or the tile with sign tile_sign (+1/-1) of that iterate when tile_sign != 0.
struct ConversionDemo {
  Word production;
  int iterate = 2;
  int tile_sign = 0;
};

struct ConversionSpec {
  std::string name;
  SourceKind source = SourceKind::TriWiggly;
  GridKind target = kTri;
  int turn_units = 2;  // per '+' of the rewritten word, in steps of the ring
  std::string drawing = "F";
  std::vector<ScanPhase> phases;
  std::vector<EdgeTransducer> edges;
  Coverage mode = Coverage::PC;
  bool turn_first = false;  // cyclic tile words carry the closing turn in front
  std::vector<ConversionDemo> demos;
  int ring = 12;  // 8 for turtles in 45 degree steps
  int start_dir = 0;
};

GridKind source_grid(SourceKind k);
bool source_accepts(SourceKind k, const SimpleLsys& s);

const std::vector<ConversionSpec>& registry();
// Throws MalformedSystem for an unknown name.
const ConversionSpec& find_spec(const std::string& name);

// Result of a conversion: a path on the 12th-root ring, or on the 8th-root
// ring for the (4.8.8) target.
struct ConvertedPath {
  GridKind target = kTri;
  GridPath path;
  BasicPath<8> oct;
  std::vector<std::size_t> origin;  // per edge: index of the source edge it was rewritten from
  bool octagonal() const { return target.tiling == Tiling::TruncatedSquare; }
  std::size_t size() const { return octagonal() ? oct.size() : path.size(); }
};

// Applies the spec's scan phases to a word.
Word rewrite(const Word& w, const ConversionSpec& spec);
// Rewrites, turtles at the spec's angle and runs the edge transducers.
ConvertedPath convert(const Word& w, const ConversionSpec& spec);
// Iterate n of s; throws MalformedSystem if s is not of the spec's source class.
ConvertedPath convert_curve(const SimpleLsys& s, int n, const ConversionSpec& spec);
// The closed tile of iterate k, read as a cyclic word.
ConvertedPath convert_tile(const SimpleLsys& s, int sign, int k, const ConversionSpec& spec);
ConvertedPath convert_demo(const ConversionSpec& spec, const ConversionDemo& demo);

// PC: unit edges on grid vertices (after a rotation/reflection/translation
// placing the path on the grid), no vertex twice, and no unvisited vertex left
// inside: for closed paths every enclosed grid vertex, for open ones every
// vertex all of whose grid neighbours are visited.
// EC: likewise with grid edges, no edge twice, enclosed edges covered.
bool verify_pc(const GridPath& p, GridKind g);
bool verify_pc(const BasicPath<8>& p, GridKind g);
bool verify_ec(const GridPath& p, GridKind g);
bool verify_ec(const BasicPath<8>& p, GridKind g);
bool verify(const ConvertedPath& c, Coverage mode);
// Why verification fails; empty when it passes.
std::string coverage_failure(const ConvertedPath& c, Coverage mode);

// ---------------------------------------------------------------------------
// Products and divisions

// Production of `a` with the production of `b` substituted for every F.
SimpleLsys product(const SimpleLsys& a, const SimpleLsys& b);

// d letters A, B, ... replace every F; the word is cut right after the
// parts[j]-th letter of each piece, so symbols after a cut start the next piece.
struct DivisionScheme {
  std::vector<int> parts;
  MultiLsys system;  // axiom is the letters in order
};

DivisionScheme divide(const SimpleLsys& s, const std::vector<int>& parts);
DivisionScheme divide(const SimpleLsys& s, int d);

// Each letter X with a substitution gets subst[X] in place of X everywhere;
// the substituted production of X is cut into pieces with parts[X] letters
// (even split when parts has no entry).
MultiLsys divide_multi(const MultiLsys& sys, const std::map<char, std::string>& subst,
                       const std::map<char, std::vector<int>>& parts = {});

// Some letters only map to single letters in a closed cycle (including B -> B).
bool has_cyclic_permutation(const MultiLsys& sys);

}  // namespace gridcurve
