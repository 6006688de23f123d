#include "gridcurve/search.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <chrono>
#include <map>
#include <set>
#include <sstream>
#include <thread>

#include "gridcurve/validity.hpp"

namespace gridcurve {

namespace {

std::vector<UndirectedEdge> edge_list(const GridPath& p) {
  std::vector<UndirectedEdge> out;
  out.reserve(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) out.push_back(p.edge(i).undirected());
  std::sort(out.begin(), out.end());
  return out;
}

template <class F>
std::vector<UndirectedEdge> map_edges(const std::vector<UndirectedEdge>& es, F f) {
  std::vector<UndirectedEdge> out;
  out.reserve(es.size());
  for (auto& [a, b] : es) {
    ExactPoint x = f(a), y = f(b);
    out.push_back(x < y ? UndirectedEdge{x, y} : UndirectedEdge{y, x});
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Translate so the smallest endpoint sits at the origin.
std::vector<UndirectedEdge> anchored(std::vector<UndirectedEdge> es) {
  if (es.empty()) return es;
  ExactPoint m = es.front().first;  // sorted, and first <= second in each pair
  for (auto& [a, b] : es) {
    a = a - m;
    b = b - m;
  }
  return es;
}

int rotation_step(GridKind g) { return g.tiling == Tiling::Square ? 3 : 2; }

struct Candidate {
  GridKind g;
  int n;                    // number of turn slots
  std::vector<Word> alpha;  // turn tokens
  std::vector<int> val;     // turn value per token
  std::array<std::pair<i64, i64>, 12> step{};

  Candidate(GridKind grid, int R) : g(grid), n(R - 1), alpha(turn_alphabet(grid)) {
    for (auto& t : alpha) val.push_back(turn_value(tokenize(t, g).front(), g));
    for (int d = 0; d < 12; ++d) {
      auto u = unit<12>(d);
      if (g.tiling == Tiling::Square) {
        if (d % 3 == 0) step[d] = to_lattice(g, u);
      } else if (d % 2 == 0) {
        step[d] = to_lattice(g, u);
      }
    }
  }

  std::size_t base() const { return alpha.size(); }

  bool leading_minus(const std::vector<int>& digits) const {
    for (int d : digits)
      if (val[d] != 0) return val[d] < 0;
    return false;
  }

  // Turn and distance screens on integer lattice coordinates.
  bool prefilter(const std::vector<int>& digits, int R) const {
    int sum = 0;
    for (int d : digits) sum += val[d];
    if (sum != 0) return false;
    i64 u = 1, v = 0;
    int dir = 0;
    for (int d : digits) {
      dir = mod(dir + val[d], 12);
      u += step[dir].first;
      v += step[dir].second;
    }
    i64 norm = g.tiling == Tiling::Square ? u * u + v * v : u * u + u * v + v * v;
    return norm == R;
  }

  Word word(const std::vector<int>& digits) const {
    Word w = "F";
    for (int d : digits) {
      w += alpha[d];
      w += 'F';
    }
    return w;
  }
};

// Odometer over all digit vectors with the given fixed prefix.
template <class F>
void for_each_suffix(const Candidate& c, std::vector<int> digits, int fixed, F&& f) {
  const int base = static_cast<int>(c.base());
  for (;;) {
    if (!f(digits)) return;
    int i = c.n - 1;
    while (i >= fixed && ++digits[i] == base) digits[i--] = 0;
    if (i < fixed) return;
  }
}

}  // namespace

ShapeKey shape_key(const SimpleLsys& s) {
  auto base = edge_list(turtle(s.production, s.grid));
  int step = rotation_step(s.grid);
  ShapeKey best;
  bool first = true;
  for (int m = 0; m < 2; ++m)
    for (int r = 0; r < 12; r += step) {
      auto es = anchored(map_edges(base, [&](ExactPoint p) { return rotate(m ? mirror_y(p) : p, r); }));
      if (first || es < best.edges) best.edges = std::move(es);
      first = false;
    }
  return best;
}

std::vector<Word> turn_alphabet(GridKind g) {
  switch (g.tiling) {
    case Tiling::Triangular:
      return {"0", "+", "-"};
    case Tiling::Square:
      return {"+", "-"};
    case Tiling::TriHexagonal:
      return {"+", "--"};
    default:
      throw MalformedSystem("no search on " + grid_name(g));
  }
}

std::uint64_t candidate_count(GridKind g, int R) {
  std::uint64_t n = 1;
  auto a = turn_alphabet(g).size();
  for (int i = 1; i < R; ++i) n *= a;
  return n;
}

void enumerate(GridKind g, int R, const std::function<bool(const Word&)>& visit) {
  if (R < 1) return;
  Candidate c(g, R);
  for_each_suffix(c, std::vector<int>(c.n, 0), 0, [&](const std::vector<int>& d) {
    if (c.leading_minus(d)) return true;
    return visit(c.word(d));
  });
}

std::vector<Word> enumerate(GridKind g, int R) {
  std::vector<Word> out;
  enumerate(g, R, [&](const Word& w) {
    out.push_back(w);
    return true;
  });
  return out;
}

std::string symmetry_letters(const SimpleLsys& s) {
  std::string out;
  if (swap_signs(reverse(s)).production == s.production) out += 'd';
  auto path = turtle(s.production, s.grid);
  auto es = edge_list(path);
  auto norm = anchored(es);
  ExactPoint c = path.start() + path.end();
  bool m = anchored(map_edges(es, [](ExactPoint p) { return mirror_y(p); })) == norm;
  bool r = map_edges(es, [&](ExactPoint p) { return c - p; }) == es;
  if (m) out += 'm';
  if (r) out += 'r';
  if (s.grid.tiling == Tiling::Square && m && r) {
    if (anchored(map_edges(es, [](ExactPoint p) { return rotate(p, 3); })) == norm) out += 'q';
    if (anchored(map_edges(es, [](ExactPoint p) { return rotate(mirror_y(p), 3); })) == norm) out += 'z';
  }
  return out;
}

std::string similarity_letters(const SimpleLsys& newer, const SimpleLsys& older) {
  auto old_edges = edge_list(turtle(older.production, older.grid));
  auto fwd = edge_list(turtle(newer.production, newer.grid));
  // the new curve traversed backwards, moved to start at 0 heading along +x
  auto path = turtle(newer.production, newer.grid);
  int back = mod(path.dirs.back() + 6, 12);
  auto rev = map_edges(fwd, [&](ExactPoint p) { return rotate(p - path.end(), -back); });
  auto flip = [](const std::vector<UndirectedEdge>& es) { return map_edges(es, [](ExactPoint p) { return conj(p); }); };
  std::string out;
  if (fwd == old_edges) out += 'P';
  if (flip(fwd) == old_edges) out += 'M';
  if (rev == old_edges) out += 'R';
  if (flip(rev) == old_edges) out += 'Z';
  if (reverse(newer).production == older.production) out += 'T';
  if (swap_signs(reverse(newer)).production == older.production) out += 'X';
  return out;
}

SearchReport run_search(GridKind g, int R, int jobs) {
  auto t0 = std::chrono::steady_clock::now();
  SearchReport rep;
  rep.grid = g;
  rep.order = R;
  if (!is_searchable(g)) throw MalformedSystem("no search on " + grid_name(g));
  if (R < 1) return rep;

  Candidate c(g, R);
  jobs = std::max(jobs, 1);
  int prefix = 0;
  std::uint64_t shards = 1;
  while (jobs > 1 && prefix < c.n && shards < static_cast<std::uint64_t>(8 * jobs)) {
    ++prefix;
    shards *= c.base();
  }

  std::vector<std::vector<Word>> found(shards);
  std::vector<std::uint64_t> visited(shards, 0);
  auto run_shard = [&](std::uint64_t s) {
    std::vector<int> digits(c.n, 0);
    std::uint64_t x = s;
    for (int i = prefix - 1; i >= 0; --i) {
      digits[i] = static_cast<int>(x % c.base());
      x /= c.base();
    }
    for_each_suffix(c, digits, prefix, [&](const std::vector<int>& d) {
      if (c.leading_minus(d)) return true;
      ++visited[s];
      if (!c.prefilter(d, R)) return true;
      Word w = c.word(d);
      if (full_check({g, w}) == Stage::Pass) found[s].push_back(std::move(w));
      return true;
    });
  };

  if (jobs == 1) {
    for (std::uint64_t s = 0; s < shards; ++s) run_shard(s);
  } else {
    std::atomic<std::uint64_t> next{0};
    std::vector<std::thread> pool;
    for (int j = 0; j < jobs; ++j)
      pool.emplace_back([&] {
        for (std::uint64_t s; (s = next++) < shards;) run_shard(s);
      });
    for (auto& t : pool) t.join();
  }

  std::map<ShapeKey, int> first_of_shape;
  std::map<int, const Word*> by_id;
  int id = 0;
  for (std::uint64_t s = 0; s < shards; ++s) {
    rep.candidates += visited[s];
    for (auto& w : found[s]) {
      CurveRecord r;
      r.production = w;
      r.order = R;
      r.id = ++id;
      SimpleLsys sys{g, w};
      r.symmetry = symmetry_letters(sys);
      auto key = shape_key(sys);
      auto [it, fresh] = first_of_shape.emplace(std::move(key), r.id);
      if (fresh) {
        ++rep.shapes;
      } else {
        r.similarity = Similarity{it->second, similarity_letters(sys, {g, *by_id.at(it->second)})};
      }
      by_id[r.id] = &w;
      rep.records.push_back(std::move(r));
    }
  }
  rep.curves = id;
  rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return rep;
}

std::pair<int, int> count_curves(GridKind g, int R, int jobs) {
  auto rep = run_search(g, R, jobs);
  return {rep.curves, rep.shapes};
}

std::vector<int> allowed_orders(GridKind g, int max) {
  std::set<int> out;
  for (int x = 0; x * x <= max; ++x)
    for (int y = 0; y <= x && x * x <= max; ++y) {
      int r;
      if (g.tiling == Tiling::Square)
        r = x * x + y * y;
      else if (g.tiling == Tiling::Triangular || g.tiling == Tiling::TriHexagonal)
        r = x * x + x * y + y * y;
      else
        throw MalformedSystem("no search on " + grid_name(g));
      if (r <= 1 || r > max) continue;
      if (g.tiling == Tiling::Square && r % 2 == 0) continue;
      if (g.tiling == Tiling::TriHexagonal && r % 6 != 1) continue;
      out.insert(r);
    }
  return {out.begin(), out.end()};
}

std::string emit_structured(const SearchReport& report) {
  std::ostringstream os;
  for (auto& r : report.records) {
    os << "grid=" << grid_tag(report.grid) << " order=" << r.order << " id=" << r.id << " production=" << r.production
       << " symmetry=" << r.symmetry;
    if (r.similarity)
      os << " same=" << r.similarity->target << " letters=" << r.similarity->letters;
    os << '\n';
  }
  return os.str();
}

}  // namespace gridcurve
