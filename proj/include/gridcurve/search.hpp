#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "gridcurve/geometry.hpp"
#include "gridcurve/lsystem.hpp"

namespace gridcurve {

using UndirectedEdge = std::pair<ExactPoint, ExactPoint>;

// Lexicographic minimum of the motif's sorted undirected edge list over the
// grid's rotations and the mirror, translated so the smallest point is 0.
struct ShapeKey {
  std::vector<UndirectedEdge> edges;
  friend auto operator<=>(const ShapeKey&, const ShapeKey&) = default;
};

ShapeKey shape_key(const SimpleLsys& s);

// Turn alphabet in enumeration order.
std::vector<Word> turn_alphabet(GridKind g);

// Calls visit for every candidate word of order R in enumeration order;
// visit returns false to stop early.
void enumerate(GridKind g, int R, const std::function<bool(const Word&)>& visit);
std::vector<Word> enumerate(GridKind g, int R);
// Number of candidate words before the leading-minus filter.
std::uint64_t candidate_count(GridKind g, int R);

std::string symmetry_letters(const SimpleLsys& s);
std::string similarity_letters(const SimpleLsys& newer, const SimpleLsys& older);

struct SearchReport {
  GridKind grid = kSquare;
  int order = 0;
  std::vector<CurveRecord> records;
  int shapes = 0;
  int curves = 0;
  std::uint64_t candidates = 0;  // words visited after the leading-minus filter
  double seconds = 0;
};

SearchReport run_search(GridKind g, int R, int jobs = 1);
std::pair<int, int> count_curves(GridKind g, int R, int jobs = 1);  // (curves, shapes)
std::vector<int> allowed_orders(GridKind g, int max);

// One record per line as key=value pairs.
std::string emit_structured(const SearchReport& report);

}  // namespace gridcurve
