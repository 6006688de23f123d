#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "gridcurve/geometry.hpp"

namespace gridcurve {

// Flat symbol sequence. On the tri-hexagonal grid "--" is stored as two '-'.
using Word = std::string;

struct MalformedSystem : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ParseError : std::runtime_error {
  int line;
  ParseError(int line_no, const std::string& msg)
      : std::runtime_error("line " + std::to_string(line_no) + ": " + msg), line(line_no) {}
};

// One non-constant letter F with production `production`.
struct SimpleLsys {
  GridKind grid = kSquare;
  Word production = "F";

  friend bool operator==(const SimpleLsys&, const SimpleLsys&) = default;
};

struct MultiLsys {
  Word axiom;
  std::map<char, Word> maps;
  std::string drawing = "F";  // letters that draw a unit edge
  int phi_deg = 90;           // turn angle of '+' and '-'

  friend bool operator==(const MultiLsys&, const MultiLsys&) = default;
};

struct Similarity {
  int target = 0;
  std::string letters;  // subset of "PMRZTX", in that order

  friend bool operator==(const Similarity&, const Similarity&) = default;
};

struct CurveRecord {
  Word production;
  int order = 0;
  int id = 0;
  std::string symmetry;  // subset of "dmrqz", in that order
  std::optional<Similarity> similarity;
  std::string extra;  // unrecognised trailing tokens, kept verbatim

  std::string ref() const { return "R" + std::to_string(order) + "-" + std::to_string(id); }
  friend bool operator==(const CurveRecord&, const CurveRecord&) = default;
};

// Turn tokens of a simple system's word. Tri-hex "--" is a single token.
enum class Tok : char { F = 'F', Plus = '+', Minus = '-', Zero = '0' };

std::vector<Tok> tokenize(const Word& w, GridKind g);
Word detokenize(const std::vector<Tok>& t, GridKind g);
// Signed turn of a token in units of 2*pi/ring_order(g).
int turn_value(Tok t, GridKind g);

// Throws MalformedSystem when the word uses symbols the grid does not admit
// or starts/ends with a turn.
void validate(const SimpleLsys& s);

int order(const SimpleLsys& s);
SimpleLsys reverse(const SimpleLsys& s);
SimpleLsys swap_signs(const SimpleLsys& s);

Word iterate(const MultiLsys& sys, int n);
// n-th iterate of F under F -> production.
Word iterate(const SimpleLsys& s, int n);
MultiLsys as_multi(const SimpleLsys& s);

// Letters '1'..'k' for the k directions reachable on the grid.
MultiLsys directed_edge_maps(const SimpleLsys& s);
// Letters are the turn tokens; on the tri-hex grid '-' stands for the "--" token.
MultiLsys turn_maps(const SimpleLsys& s);
// Turn tokens of a word (F removed), in turn-system letters.
std::string turn_sequence(const Word& w, GridKind g);

std::vector<CurveRecord> parse_listing(std::string_view text);
std::string emit_record(const CurveRecord& r);
std::string emit_listing(const std::vector<CurveRecord>& records);
// Collapse whitespace runs and trim each line; drop blank lines.
std::string normalize_listing(std::string_view text);

}  // namespace gridcurve
