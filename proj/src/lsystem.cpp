#include "gridcurve/lsystem.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

namespace gridcurve {

namespace {

constexpr std::size_t kMaxWord = std::size_t{1} << 28;

bool is_turn_char(char c) { return c == '+' || c == '-' || c == '0'; }

int direction_count(GridKind g) {
  int n = ring_order(g);
  return n / std::gcd(n, turn_units(g));
}

}  // namespace

std::vector<Tok> tokenize(const Word& w, GridKind g) {
  std::vector<Tok> out;
  out.reserve(w.size());
  bool trihex = g.tiling == Tiling::TriHexagonal;
  for (std::size_t i = 0; i < w.size(); ++i) {
    char c = w[i];
    switch (c) {
      case 'F':
        out.push_back(Tok::F);
        break;
      case '+':
        out.push_back(Tok::Plus);
        break;
      case '0':
        out.push_back(Tok::Zero);
        break;
      case '-':
        if (trihex) {
          if (i + 1 >= w.size() || w[i + 1] != '-') throw MalformedSystem("isolated '-' on the tri-hexagonal grid");
          ++i;
        }
        out.push_back(Tok::Minus);
        break;
      default:
        throw MalformedSystem(std::string("unexpected symbol '") + c + "'");
    }
  }
  return out;
}

Word detokenize(const std::vector<Tok>& t, GridKind g) {
  Word w;
  w.reserve(t.size() * 2);
  for (Tok k : t) {
    w.push_back(static_cast<char>(k));
    if (k == Tok::Minus && g.tiling == Tiling::TriHexagonal) w.push_back('-');
  }
  return w;
}

int turn_value(Tok t, GridKind g) {
  int u = turn_units(g);
  switch (t) {
    case Tok::Plus:
      return u;
    case Tok::Minus:
      return g.tiling == Tiling::TriHexagonal ? -2 * u : -u;
    default:
      return 0;
  }
}

void validate(const SimpleLsys& s) {
  auto t = tokenize(s.production, s.grid);
  if (t.empty()) throw MalformedSystem("empty production");
  if (t.front() != Tok::F || t.back() != Tok::F) throw MalformedSystem("production must start and end with F");
  bool zero_ok = s.grid.tiling == Tiling::Triangular;
  for (Tok k : t)
    if (k == Tok::Zero && !zero_ok) throw MalformedSystem("turn 0 not admissible on " + grid_name(s.grid));
  if (!is_searchable(s.grid)) throw MalformedSystem("simple systems live on the searchable grids");
}

int order(const SimpleLsys& s) {
  return static_cast<int>(std::count(s.production.begin(), s.production.end(), 'F'));
}

SimpleLsys reverse(const SimpleLsys& s) {
  auto t = tokenize(s.production, s.grid);
  std::reverse(t.begin(), t.end());
  return {s.grid, detokenize(t, s.grid)};
}

SimpleLsys swap_signs(const SimpleLsys& s) {
  auto t = tokenize(s.production, s.grid);
  for (Tok& k : t) {
    if (k == Tok::Plus)
      k = Tok::Minus;
    else if (k == Tok::Minus)
      k = Tok::Plus;
  }
  return {s.grid, detokenize(t, s.grid)};
}

Word iterate(const MultiLsys& sys, int n) {
  if (n < 0) throw MalformedSystem("negative iterate");
  Word w = sys.axiom;
  for (int i = 0; i < n; ++i) {
    Word next;
    for (char c : w) {
      auto it = sys.maps.find(c);
      if (it != sys.maps.end()) {
        next += it->second;
      } else if (is_turn_char(c) || sys.drawing.find(c) != std::string::npos) {
        next.push_back(c);
      } else {
        throw MalformedSystem(std::string("letter '") + c + "' has no production");
      }
      if (next.size() > kMaxWord) throw MalformedSystem("iterate too long");
    }
    w = std::move(next);
  }
  return w;
}

MultiLsys as_multi(const SimpleLsys& s) {
  MultiLsys m;
  m.axiom = "F";
  m.maps['F'] = s.production;
  m.drawing = "F";
  m.phi_deg = turn_units(s.grid) * 360 / ring_order(s.grid);
  return m;
}

Word iterate(const SimpleLsys& s, int n) { return iterate(as_multi(s), n); }

MultiLsys directed_edge_maps(const SimpleLsys& s) {
  int k = direction_count(s.grid);
  int u = turn_units(s.grid);
  int n = ring_order(s.grid);
  std::vector<int> dirs;
  int d = 0;
  for (Tok t : tokenize(s.production, s.grid)) {
    if (t == Tok::F)
      dirs.push_back(mod(d / u, k));
    else
      d += turn_value(t, s.grid);
  }
  MultiLsys m;
  m.axiom = "1";
  m.phi_deg = u * 360 / n;
  m.drawing.clear();
  for (int j = 0; j < k; ++j) {
    char letter = static_cast<char>('1' + j);
    m.drawing.push_back(letter);
    Word p;
    for (int x : dirs) p.push_back(static_cast<char>('1' + mod(x + j, k)));
    m.maps[letter] = p;
  }
  return m;
}

std::string turn_sequence(const Word& w, GridKind g) {
  std::string out;
  for (Tok t : tokenize(w, g))
    if (t != Tok::F) out.push_back(static_cast<char>(t));
  return out;
}

MultiLsys turn_maps(const SimpleLsys& s) {
  std::string turns = turn_sequence(s.production, s.grid);
  MultiLsys m;
  m.axiom = "+";
  m.drawing.clear();
  m.phi_deg = turn_units(s.grid) * 360 / ring_order(s.grid);
  std::string letters = s.grid.tiling == Tiling::Triangular ? "+-0" : "+-";
  for (char c : letters) m.maps[c] = turns + c;
  return m;
}

// ---------------------------------------------------------------------------
// Listing format

namespace {

std::vector<std::string> split_ws(std::string_view line) {
  std::vector<std::string> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    std::size_t j = i;
    while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
    if (j > i) out.emplace_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

bool all_digits(const std::string& s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
}

}  // namespace

std::vector<CurveRecord> parse_listing(std::string_view text) {
  std::vector<CurveRecord> out;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    std::string_view line = text.substr(pos, nl - pos);
    pos = nl + 1;
    ++line_no;
    auto tok = split_ws(line);
    if (tok.empty()) {
      if (nl == text.size()) break;
      continue;
    }
    if (tok[0].starts_with("//")) continue;
    std::size_t i = 0;
    // optional "NN:" line counter as in the no-duplicate listings
    if (tok[0].size() > 1 && tok[0].back() == ':' && all_digits(tok[0].substr(0, tok[0].size() - 1))) ++i;
    if (tok.size() < i + 4 || tok[i] != "F") throw ParseError(line_no, "expected 'F <production> R<order>-<id> #'");
    CurveRecord r;
    r.production = tok[i + 1];
    const std::string& ref = tok[i + 2];
    auto dash = ref.find('-');
    if (ref.size() < 4 || ref[0] != 'R' || dash == std::string::npos || !all_digits(ref.substr(1, dash - 1)) ||
        !all_digits(ref.substr(dash + 1)))
      throw ParseError(line_no, "bad curve id '" + ref + "'");
    r.order = std::stoi(ref.substr(1, dash - 1));
    r.id = std::stoi(ref.substr(dash + 1));
    if (tok[i + 3] != "#") throw ParseError(line_no, "expected '#' after id");
    if (static_cast<int>(std::count(r.production.begin(), r.production.end(), 'F')) != r.order)
      throw ParseError(line_no, "order does not match the number of F");
    i += 4;
    if (i + 1 < tok.size() && tok[i] == "#" && tok[i + 1].starts_with("symm-")) {
      r.symmetry = tok[i + 1].substr(5);
      i += 2;
    }
    if (i + 3 < tok.size() && tok[i] == "##" && tok[i + 1] == "same" && tok[i + 2] == "=" && all_digits(tok[i + 3])) {
      Similarity s;
      s.target = std::stoi(tok[i + 3]);
      i += 4;
      while (i < tok.size() && tok[i].size() == 1 && std::string("PMRZTX").find(tok[i][0]) != std::string::npos) {
        s.letters += tok[i];
        ++i;
      }
      r.similarity = s;
    }
    for (; i < tok.size(); ++i) {
      if (!r.extra.empty()) r.extra += ' ';
      r.extra += tok[i];
    }
    out.push_back(std::move(r));
    if (nl == text.size()) break;
  }
  return out;
}

std::string emit_record(const CurveRecord& r) {
  std::string s = "F " + r.production + "  " + r.ref() + "  #";
  if (!r.symmetry.empty()) s += " # symm-" + r.symmetry;
  if (r.similarity) {
    s += " ## same = " + std::to_string(r.similarity->target);
    for (char c : r.similarity->letters) {
      s += ' ';
      s += c;
    }
  }
  if (!r.extra.empty()) s += " " + r.extra;
  return s;
}

std::string emit_listing(const std::vector<CurveRecord>& records) {
  std::string out;
  for (auto& r : records) out += emit_record(r) + "\n";
  return out;
}

std::string normalize_listing(std::string_view text) {
  std::string out;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    auto tok = split_ws(text.substr(pos, nl - pos));
    pos = nl + 1;
    if (tok.empty()) continue;
    for (std::size_t i = 0; i < tok.size(); ++i) {
      if (i) out += ' ';
      out += tok[i];
    }
    out += '\n';
  }
  return out;
}

}  // namespace gridcurve
