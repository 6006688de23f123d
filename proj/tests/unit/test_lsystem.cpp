#include <gtest/gtest.h>

#include <fstream>
#include <random>
#include <sstream>

#include "gridcurve/lsystem.hpp"
#include "gridcurve/validity.hpp"

using namespace gridcurve;

namespace {

std::string read_data(const std::string& name) {
  std::ifstream in(std::string(GRIDCURVE_DATA_DIR) + "/" + name);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Independent substitution: one pass, letter by letter.
Word substitute(const Word& w, const std::map<char, Word>& maps) {
  Word out;
  for (char c : w) {
    auto it = maps.find(c);
    out += it == maps.end() ? std::string(1, c) : it->second;
  }
  return out;
}

Word random_production(std::mt19937& rng, GridKind g, int R) {
  std::vector<std::string> turns = g == kSquare ? std::vector<std::string>{"+", "-"}
                                   : g == kTri  ? std::vector<std::string>{"+", "-", "0"}
                                                : std::vector<std::string>{"+", "--"};
  std::uniform_int_distribution<std::size_t> pick(0, turns.size() - 1);
  Word w = "F";
  for (int i = 1; i < R; ++i) w += turns[pick(rng)] + "F";
  return w;
}

}  // namespace

TEST(Iterate, Examples) {
  MultiLsys lr{"L", {{'L', "L+R"}, {'R', "L-R"}}, "LR", 90};
  EXPECT_EQ(iterate(lr, 2), "L+R+L-R");
  EXPECT_EQ(iterate(lr, 0), "L");
  EXPECT_EQ(iterate(SimpleLsys{kTri, "F+F-F"}, 2), "F+F-F+F+F-F-F+F-F");
  EXPECT_EQ(iterate(SimpleLsys{kTri, "F+F-F"}, 0), "F");
}

TEST(Iterate, MissingProductionIsMalformed) {
  MultiLsys bad{"AB", {{'A', "AB"}}, "A", 90};
  EXPECT_THROW(iterate(bad, 1), MalformedSystem);
}

TEST(Iterate, AgreesWithNaiveSubstitution) {
  std::mt19937 rng(11);
  for (int t = 0; t < 50; ++t) {
    MultiLsys sys{"A", {{'A', "A+B"}, {'B', "-A0B"}}, "AB", 60};
    std::uniform_int_distribution<int> len(1, 4);
    for (auto& [c, w] : sys.maps) {
      w.clear();
      for (int i = 0, n = len(rng); i < n; ++i) w += "AB+-"[rng() % 4];
    }
    Word w = sys.axiom;
    for (int n = 0; n <= 4; ++n) {
      EXPECT_EQ(iterate(sys, n), w);
      w = substitute(w, sys.maps);
    }
  }
}

TEST(Iterate, SemigroupProperty) {
  std::mt19937 rng(12);
  for (int t = 0; t < 30; ++t) {
    SimpleLsys s{kTri, random_production(rng, kTri, 3)};
    for (int m = 0; m <= 2; ++m)
      for (int n = 0; n <= 2; ++n) {
        MultiLsys from_n{iterate(s, n), {{'F', s.production}}, "F", 120};
        EXPECT_EQ(iterate(from_n, m), iterate(s, m + n));
      }
  }
}

TEST(Order, Examples) {
  EXPECT_EQ(order({kTri, "F+F-F"}), 3);
  EXPECT_EQ(order({kSquare, "F+F+F-F-F"}), 5);
  EXPECT_EQ(order({kSquare, "F"}), 1);
  EXPECT_EQ(order({kTriHex, "F+F--F--F+F+F+F"}), 7);
}

TEST(ReverseSwap, Examples) {
  EXPECT_EQ(reverse({kTri, "F+F-F"}).production, "F-F+F");
  EXPECT_EQ(swap_signs({kTri, "F+F0F-F"}).production, "F-F0F+F");
  SimpleLsys r17_1{kSquare, "F+F+F-F+F-F-F-F+F-F+F+F+F-F+F-F-F"};
  EXPECT_EQ(reverse(swap_signs(r17_1)), r17_1);
  // tri-hex keeps "--" as one token
  EXPECT_EQ(reverse({kTriHex, "F+F--F--F+F+F+F"}).production, "F+F+F+F--F--F+F");
}

TEST(ReverseSwap, InvolutionsThatCommute) {
  std::mt19937 rng(13);
  for (auto g : {kTri, kSquare, kTriHex})
    for (int t = 0; t < 100; ++t) {
      SimpleLsys s{g, random_production(rng, g, 7)};
      EXPECT_EQ(reverse(reverse(s)), s);
      EXPECT_EQ(swap_signs(swap_signs(s)), s);
      EXPECT_EQ(reverse(swap_signs(s)), swap_signs(reverse(s)));
    }
}

TEST(Validate, RejectsBadWords) {
  EXPECT_THROW(validate({kTri, "+F"}), MalformedSystem);
  EXPECT_THROW(validate({kTri, "F+F-"}), MalformedSystem);
  EXPECT_THROW(validate({kSquare, "F0F"}), MalformedSystem);
  EXPECT_THROW(validate({kTriHex, "F-F"}), MalformedSystem);
  EXPECT_THROW(validate({kTri, "FxF"}), MalformedSystem);
  EXPECT_NO_THROW(validate({kTriHex, "F+F--F"}));
}

TEST(DirectedEdgeMaps, Examples) {
  auto crab = directed_edge_maps({kTri, "F+F0F-F"});
  EXPECT_EQ(crab.maps.at('1'), "1221");
  EXPECT_EQ(crab.maps.at('2'), "2332");
  EXPECT_EQ(crab.maps.at('3'), "3113");
  auto r5 = directed_edge_maps({kSquare, "F+F+F-F-F"});
  EXPECT_EQ(r5.maps.at('1'), "12321");
  EXPECT_EQ(r5.maps.at('2'), "23432");
  EXPECT_EQ(r5.maps.at('3'), "34143");
  EXPECT_EQ(r5.maps.at('4'), "41214");
  auto id = directed_edge_maps({kSquare, "F"});
  for (char c : {'1', '2', '3', '4'}) EXPECT_EQ(id.maps.at(c), std::string(1, c));
}

// Letter k of the direction system is a step in direction k-1 (in grid turns),
// for productions without net rotation.
TEST(DirectedEdgeMaps, DrawTheTurtleEdges) {
  std::mt19937 rng(14);
  for (auto g : {kTri, kSquare, kTriHex})
    for (int t = 0; t < 20;) {
      // tri-hex needs a multiple of three turns to cancel
      SimpleLsys s{g, random_production(rng, g, g == kTriHex ? 7 : 5)};
      if (!check_turn(s)) continue;
      ++t;
      auto sys = directed_edge_maps(s);
      const int step = g == kSquare ? 3 : g == kTri ? 4 : 2;
      const int count = 12 / step;
      for (int n = 0; n <= 3; ++n) {
        auto dirs = turtle(iterate(s, n), g).dirs;
        Word w = iterate(sys, n);
        ASSERT_EQ(w.size(), dirs.size());
        for (std::size_t i = 0; i < w.size(); ++i) EXPECT_EQ(((w[i] - '1') % count) * step, dirs[i]);
      }
    }
}

TEST(DirectedEdgeMaps, CommuteWithCyclicShift) {
  auto sys = directed_edge_maps({kTri, "F0F+F0F-F-F+F"});
  for (auto& [c, w] : sys.maps) {
    char next = c == '3' ? '1' : static_cast<char>(c + 1);
    Word shifted;
    for (char x : w) shifted += x == '3' ? '1' : static_cast<char>(x + 1);
    EXPECT_EQ(sys.maps.at(next), shifted);
  }
}

TEST(TurnMaps, Examples) {
  auto crab = turn_maps({kTri, "F+F0F-F"});
  EXPECT_EQ(crab.maps.at('+'), "+0-+");
  EXPECT_EQ(crab.maps.at('-'), "+0--");
  EXPECT_EQ(crab.maps.at('0'), "+0-0");
  auto r5 = turn_maps({kSquare, "F+F+F-F-F"});
  EXPECT_EQ(r5.maps.at('+'), "++--+");
  EXPECT_EQ(r5.maps.at('-'), "++---");
  auto id = turn_maps({kTri, "F"});
  for (char c : {'+', '-', '0'}) EXPECT_EQ(id.maps.at(c), std::string(1, c));
}

TEST(TurnMaps, ReproduceTheTurnSequence) {
  std::mt19937 rng(15);
  for (auto g : {kTri, kSquare, kTriHex})
    for (int t = 0; t < 20; ++t) {
      SimpleLsys s{g, random_production(rng, g, 5)};
      auto sys = turn_maps(s);
      for (int n = 1; n <= 3; ++n) {
        sys.axiom = "+";
        Word expect = iterate(sys, n);
        expect.pop_back();
        EXPECT_EQ(turn_sequence(iterate(s, n), g), expect) << s.production;
      }
    }
}

TEST(Listing, ParsesSimilarityAnnotation) {
  auto r = parse_listing("F F+F-F+F+F+F-F-F+F+F-F-F-F+F+F-F-F  R17-5  # ## same = 3 R X\n");
  ASSERT_EQ(r.size(), 1u);
  EXPECT_EQ(r[0].id, 5);
  EXPECT_EQ(r[0].order, 17);
  EXPECT_EQ(r[0].symmetry, "");
  ASSERT_TRUE(r[0].similarity);
  EXPECT_EQ(r[0].similarity->target, 3);
  EXPECT_EQ(r[0].similarity->letters, "RX");
}

TEST(Listing, RoundTripsPublishedBlocks) {
  for (auto name : {"trihex-13.txt", "square-17.txt"}) {
    auto text = read_data(name);
    ASSERT_FALSE(text.empty()) << name;
    EXPECT_EQ(normalize_listing(emit_listing(parse_listing(text))), normalize_listing(text)) << name;
  }
}

TEST(Listing, EmptyAndMalformed) {
  EXPECT_TRUE(parse_listing("").empty());
  try {
    parse_listing("F F+F-F  R3-1  #\nF F+F  R3-x  #\n");
    FAIL() << "expected a parse error";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line, 2);
  }
  EXPECT_THROW(parse_listing("F F+F-F  R4-1  #\n"), ParseError);  // order mismatch
}

TEST(Listing, SymmetryLetterDImpliesR) {
  for (auto& r : parse_listing(read_data("square-17.txt")))
    if (r.symmetry.find('d') != std::string::npos) EXPECT_NE(r.symmetry.find('r'), std::string::npos);
}
