#include <gtest/gtest.h>

#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "gridcurve/search.hpp"
#include "gridcurve/validity.hpp"

using namespace gridcurve;

namespace {

std::string read_data(const std::string& name) {
  std::ifstream in(std::string(GRIDCURVE_DATA_DIR) + "/" + name);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

const CurveRecord& by_id(const SearchReport& r, int id) {
  for (auto& c : r.records)
    if (c.id == id) return c;
  throw std::out_of_range("no such id");
}

// Odometer over the turn alphabet, written independently of the search.
std::vector<Word> all_words(const std::vector<Word>& alphabet, int R) {
  std::vector<Word> out;
  std::vector<std::size_t> digit(static_cast<std::size_t>(R - 1), 0);
  for (;;) {
    Word w = "F";
    for (auto d : digit) w += alphabet[d] + "F";
    out.push_back(w);
    std::size_t i = digit.size();
    while (i > 0 && ++digit[i - 1] == alphabet.size()) digit[--i] = 0;
    if (i == 0) break;
  }
  return out;
}

}  // namespace

TEST(Enumerate, Examples) {
  auto sq = enumerate(kSquare, 5);
  ASSERT_EQ(sq.size(), 8u);
  EXPECT_EQ(sq.front(), "F+F+F+F+F");
  auto tri = enumerate(kTri, 3);
  EXPECT_EQ(tri.front(), "F0F0F");
  EXPECT_NE(std::find(tri.begin(), tri.end(), "F+F-F"), tri.end());
  EXPECT_EQ(candidate_count(kTriHex, 7), 64u);
}

// Words whose first non-straight turn is '-' are mirror images of earlier ones.
TEST(Enumerate, LexicographicWithoutLeadingMinus) {
  for (auto [g, alphabet] : std::vector<std::pair<GridKind, std::vector<Word>>>{
           {kSquare, {"+", "-"}}, {kTri, {"0", "+", "-"}}, {kTriHex, {"+", "--"}}}) {
    EXPECT_EQ(turn_alphabet(g), alphabet);
    for (int R = 2; R <= 7; ++R) {
      std::vector<Word> expect;
      for (auto& w : all_words(alphabet, R)) {
        auto first = w.find_first_not_of("F0");
        if (first == Word::npos || w[first] != '-') expect.push_back(w);
      }
      EXPECT_EQ(enumerate(g, R), expect) << R;
    }
  }
}

TEST(Enumerate, EarlyStop) {
  int seen = 0;
  enumerate(kTri, 9, [&](const Word&) { return ++seen < 10; });
  EXPECT_EQ(seen, 10);
}

TEST(AllowedOrders, Examples) {
  EXPECT_EQ(allowed_orders(kSquare, 30), (std::vector<int>{5, 9, 13, 17, 25, 29}));
  EXPECT_EQ(allowed_orders(kTri, 13), (std::vector<int>{3, 4, 7, 9, 12, 13}));
  EXPECT_EQ(allowed_orders(kTriHex, 20), (std::vector<int>{7, 13, 19}));
}

TEST(AllowedOrders, MatchNormForms) {
  std::set<int> sq, tri;
  for (int x = 0; x <= 20; ++x)
    for (int y = 0; y <= 20; ++y) {
      sq.insert(x * x + y * y);
      tri.insert(x * x + x * y + y * y);
    }
  for (int R = 2; R <= 100; ++R) {
    auto has = [R](const std::vector<int>& v) { return std::find(v.begin(), v.end(), R) != v.end(); };
    EXPECT_EQ(has(allowed_orders(kSquare, 100)), sq.count(R) && R % 2 == 1) << R;
    EXPECT_EQ(has(allowed_orders(kTri, 100)), tri.count(R) > 0) << R;
    EXPECT_EQ(has(allowed_orders(kTriHex, 100)), tri.count(R) && R % 6 == 1) << R;
  }
}

TEST(Search, ShapeCounts) {
  const std::map<int, int> tri{{3, 1}, {4, 1}, {7, 3}, {9, 5}, {12, 10}, {13, 15}, {16, 17}};
  const std::map<int, int> square{{5, 1}, {9, 1}, {13, 4}, {17, 6}, {25, 33}};
  const std::map<int, int> trihex{{7, 1}, {13, 3}, {19, 7}, {25, 10}};
  for (auto& [g, table] : std::vector<std::pair<GridKind, std::map<int, int>>>{{kTri, tri}, {kSquare, square}, {kTriHex, trihex}})
    for (auto [R, shapes] : table) {
      auto rep = run_search(g, R);
      EXPECT_EQ(rep.shapes, shapes) << R;
      int unannotated = 0;
      for (auto& c : rep.records) unannotated += !c.similarity;
      EXPECT_EQ(unannotated, rep.shapes) << R;
      EXPECT_EQ(rep.curves, static_cast<int>(rep.records.size()));
    }
}

TEST(Search, InadmissibleOrdersAreEmpty) {
  EXPECT_TRUE(run_search(kSquare, 7).records.empty());
  EXPECT_EQ(count_curves(kTri, 5), (std::pair<int, int>{0, 0}));
}

TEST(Search, GoldenSquareSeventeen) {
  auto rep = run_search(kSquare, 17);
  EXPECT_EQ(rep.curves, 13);
  EXPECT_EQ(normalize_listing(emit_listing(rep.records)), normalize_listing(read_data("square-17.txt")));
}

TEST(Search, GoldenTriHexThirteen) {
  auto rep = run_search(kTriHex, 13);
  EXPECT_EQ(rep.curves, 4);
  EXPECT_EQ(normalize_listing(emit_listing(rep.records)), normalize_listing(read_data("trihex-13.txt")));
}

// The published order-12 listing omits curves with a similarity annotation.
TEST(Search, GoldenTriangularTwelveWithoutDuplicates) {
  std::vector<CurveRecord> kept;
  for (auto& c : run_search(kTri, 12).records)
    if (!c.similarity) kept.push_back(c);
  EXPECT_EQ(kept, parse_listing(read_data("tri-12-no-same.txt")));
}

TEST(Search, RecordsPassFullCheck) {
  for (auto& c : run_search(kTri, 13).records) EXPECT_EQ(full_check({kTri, c.production}), Stage::Pass) << c.ref();
}

TEST(Search, DeterministicAcrossWorkerCounts) {
  for (auto [g, R] : std::vector<std::pair<GridKind, int>>{{kTri, 13}, {kSquare, 17}, {kTriHex, 19}}) {
    auto one = run_search(g, R, 1);
    for (int jobs : {2, 3, 5}) {
      auto many = run_search(g, R, jobs);
      EXPECT_EQ(many.records, one.records) << jobs;
      EXPECT_EQ(many.shapes, one.shapes);
      EXPECT_EQ(many.candidates, one.candidates);
    }
  }
}

TEST(Search, IdStability) {
  for (auto [g, R] : std::vector<std::pair<GridKind, int>>{{kTri, 13}, {kSquare, 25}, {kTriHex, 19}}) {
    auto rep = run_search(g, R);
    std::map<ShapeKey, int> first;
    int prev = 0;
    for (auto& c : rep.records) {
      EXPECT_GT(c.id, prev);
      prev = c.id;
      auto key = shape_key({g, c.production});
      auto [it, fresh] = first.emplace(key, c.id);
      EXPECT_EQ(fresh, !c.similarity) << c.ref();
      if (c.similarity) {
        EXPECT_LT(c.similarity->target, c.id);
        EXPECT_EQ(c.similarity->target, it->second) << c.ref();
      }
    }
  }
}

TEST(Symmetry, Examples) {
  auto rep = run_search(kSquare, 17);
  EXPECT_EQ(symmetry_letters({kSquare, by_id(rep, 1).production}), "dr");
  EXPECT_EQ(symmetry_letters({kSquare, by_id(rep, 4).production}), "r");
  EXPECT_EQ(symmetry_letters({kTri, "F+F-F"}), "dr");
}

TEST(Symmetry, LetterDMeansReverseSwapInvariant) {
  for (auto& c : run_search(kTri, 13).records) {
    SimpleLsys s{kTri, c.production};
    const bool d = c.symmetry.find('d') != std::string::npos;
    EXPECT_EQ(d, reverse(swap_signs(s)) == s) << c.ref();
  }
}

TEST(Similarity, Examples) {
  auto rep = run_search(kSquare, 17);
  auto s = [&](int id) { return SimpleLsys{kSquare, by_id(rep, id).production}; };
  EXPECT_EQ(similarity_letters(s(5), s(3)), "RX");
  EXPECT_EQ(similarity_letters(s(12), s(11)), "ZT");
  EXPECT_NE(similarity_letters(s(6), s(6)).find('P'), std::string::npos);
}

TEST(ShapeKey, InvariantUnderGridSymmetries) {
  for (auto& c : run_search(kTri, 13).records) {
    SimpleLsys s{kTri, c.production};
    EXPECT_EQ(shape_key(s), shape_key(swap_signs(s)));
    EXPECT_EQ(shape_key(s), shape_key(reverse(s)));
  }
}

TEST(Structured, OneLinePerRecord) {
  auto rep = run_search(kTriHex, 13);
  auto text = emit_structured(rep);
  EXPECT_EQ(std::count(text.begin(), text.end(), '\n'), 4);
  EXPECT_NE(text.find("id=4"), std::string::npos);
}
