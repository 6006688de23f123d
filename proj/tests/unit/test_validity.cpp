#include <gtest/gtest.h>

#include <cmath>
#include <complex>
#include <numbers>
#include <random>
#include <set>

#include "gridcurve/search.hpp"
#include "gridcurve/validity.hpp"

using namespace gridcurve;

namespace {

using C = std::complex<double>;

double turn_degrees(GridKind g) { return g == kSquare ? 90 : g == kTri ? 120 : 60; }

// Floating turtle, independent of the exact ring.
std::vector<C> float_walk(const Word& w, GridKind g) {
  std::vector<C> pts{0.0};
  double a = 0;
  for (char c : w) {
    if (c == 'F')
      pts.push_back(pts.back() + std::polar(1.0, a * std::numbers::pi / 180));
    else if (c == '+')
      a += turn_degrees(g);
    else if (c == '-')
      a -= turn_degrees(g);
  }
  return pts;
}

double net_turn(const Word& w, GridKind g) {
  double a = 0;
  for (char c : w) a += c == '+' ? turn_degrees(g) : c == '-' ? -turn_degrees(g) : 0;
  return a;
}

std::pair<long, long> rounded(C z) { return {std::lround(z.real() * 1000), std::lround(z.imag() * 1000)}; }

bool edges_distinct(const std::vector<C>& pts) {
  std::set<std::pair<std::pair<long, long>, std::pair<long, long>>> seen;
  for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
    auto a = rounded(pts[i]), b = rounded(pts[i + 1]);
    if (!seen.insert(a < b ? std::pair{a, b} : std::pair{b, a}).second) return false;
  }
  return true;
}

double shoelace(const std::vector<C>& pts) {
  double s = 0;
  for (std::size_t i = 0; i + 1 < pts.size(); ++i) s += pts[i].real() * pts[i + 1].imag() - pts[i + 1].real() * pts[i].imag();
  return std::abs(s) / 2;
}

}  // namespace

TEST(Turtle, MatchesFloatingWalk) {
  for (auto [g, w] : std::vector<std::pair<GridKind, Word>>{{kSquare, "F+F+F-F-F"},
                                                            {kTri, "F+F0F-F"},
                                                            {kTriHex, "F+F--F--F+F+F+F"},
                                                            {kSquare, "F-F-F+F+F-F"}}) {
    auto p = turtle(w, g);
    auto f = float_walk(w, g);
    ASSERT_EQ(p.pts.size(), f.size());
    for (std::size_t i = 0; i < f.size(); ++i) EXPECT_LT(std::abs(to_complex(p.pts[i]) - f[i]), 1e-9) << w;
  }
}

TEST(Turtle, ClosedFlag) {
  EXPECT_TRUE(turtle("F+F+F+F", kSquare).closed);
  EXPECT_FALSE(turtle("F+F+F", kSquare).closed);
  EXPECT_TRUE(turtle("F+F+F", kTri).closed);
  EXPECT_FALSE(turtle("", kTri).closed);
}

TEST(CheckTurn, Examples) {
  EXPECT_TRUE(check_turn({kSquare, "F+F+F-F-F"}));
  EXPECT_FALSE(check_turn({kTri, "F+F+F"}));
  EXPECT_TRUE(check_turn({kTriHex, "F+F+F--F"}));
  EXPECT_TRUE(check_turn({kTri, "F0F"}));
}

TEST(CheckTurn, AgreesWithNetAngle) {
  std::mt19937 rng(21);
  for (auto g : {kTri, kSquare, kTriHex}) {
    auto alphabet = turn_alphabet(g);
    for (int t = 0; t < 300; ++t) {
      Word w = "F";
      for (int i = 0; i < 6; ++i) w += alphabet[rng() % alphabet.size()] + "F";
      EXPECT_EQ(check_turn({g, w}), std::abs(net_turn(w, g)) < 1e-9) << w;
    }
  }
}

TEST(CheckDist, Examples) {
  EXPECT_FALSE(check_dist({kTri, "F0F"}));
  EXPECT_TRUE(check_dist({kTri, "F+F-F"}));
  EXPECT_TRUE(check_dist({kSquare, "F+F+F-F-F"}));
  EXPECT_FALSE(check_dist({kSquare, "F+F-F-F+F"}));
}

TEST(CheckDist, AgreesWithEndpointDistance) {
  std::mt19937 rng(22);
  for (auto g : {kTri, kSquare, kTriHex}) {
    auto alphabet = turn_alphabet(g);
    for (int t = 0; t < 300; ++t) {
      Word w = "F";
      const int R = 2 + static_cast<int>(rng() % 8);
      for (int i = 1; i < R; ++i) w += alphabet[rng() % alphabet.size()] + "F";
      const double d2 = std::norm(float_walk(w, g).back());
      EXPECT_EQ(check_dist({g, w}), std::abs(d2 - R) < 1e-9) << w;
    }
  }
}

TEST(SelfAvoiding, Examples) {
  EXPECT_TRUE(check_self_avoiding(turtle("F+F+F+F", kSquare)));
  EXPECT_FALSE(check_self_avoiding(turtle("F+F+F+F+F", kSquare)));  // reuses the first edge
  EXPECT_TRUE(check_self_avoiding(turtle("F", kTri)));
  // second visit of (1,0): west-south then north-east touches, west-east then north-south crosses
  EXPECT_TRUE(check_self_avoiding(turtle("F-F+F+FF+F+F+F", kSquare)));
  EXPECT_FALSE(check_self_avoiding(turtle("FF+F+F+FF", kSquare)));
  EXPECT_TRUE(check_self_avoiding(turtle("F+F+FF+F+F", kSquare)));  // 2x1 rectangle
}

TEST(SelfAvoiding, RepeatedEdgesAreRejected) {
  std::mt19937 rng(23);
  for (auto g : {kTri, kSquare, kTriHex}) {
    auto alphabet = turn_alphabet(g);
    for (int t = 0; t < 500; ++t) {
      Word w = "F";
      for (int i = 0; i < 10; ++i) w += alphabet[rng() % alphabet.size()] + "F";
      if (!edges_distinct(float_walk(w, g))) EXPECT_FALSE(check_self_avoiding(turtle(w, g))) << w;
    }
  }
}

TEST(BuildTile, FaceCountsMatchArea) {
  struct Case {
    SimpleLsys s;
    int sign;
    std::size_t faces;
    double face_area;
  };
  const double tri_face = std::sqrt(3.0) / 4;
  const Word r13_1 = run_search(kSquare, 13).records.at(0).production;
  const Word r7_1 = run_search(kTri, 7).records.at(0).production;
  for (auto& c : std::vector<Case>{{{kSquare, "F+F+F-F-F"}, +1, 5, 1},
                                   {{kSquare, r13_1}, +1, 13, 1},
                                   {{kSquare, r13_1}, -1, 13, 1},
                                   {{kTri, r7_1}, -1, 7, tri_face},
                                   {{kTri, "F+F-F"}, -1, 3, tri_face},
                                   {{kTri, "F+F-F"}, +1, 3, tri_face}}) {
    auto t = build_tile(c.s, c.sign, 1);
    ASSERT_TRUE(t.path.closed);
    const double area = shoelace(float_walk(tile_word(c.s, c.sign, 1), c.s.grid));
    EXPECT_NEAR(t.faces.size() * c.face_area, area, 1e-9) << c.s.production;
    EXPECT_EQ(t.faces.size(), c.faces) << c.s.production;
  }
}

TEST(BuildTile, ScalesWithOrderPerIterate) {
  SimpleLsys r5{kSquare, "F+F+F-F-F"};
  EXPECT_EQ(build_tile(r5, +1, 1).faces.size(), 5u);
  EXPECT_EQ(build_tile(r5, +1, 2).faces.size(), 25u);
  EXPECT_EQ(build_tile(r5, +1, 3).faces.size(), 125u);
}

TEST(FullCheck, Stages) {
  EXPECT_EQ(full_check({kTri, "F+F+F"}), Stage::Turn);
  EXPECT_EQ(full_check({kTri, "F+F-F+F-F"}), Stage::Dist);
  EXPECT_EQ(full_check({kTri, "F+F0F-F"}), Stage::Pass);
  EXPECT_EQ(full_check({kTri, "F+F-F"}), Stage::Pass);
  EXPECT_EQ(full_check({kSquare, "F+F+F-F-F"}), Stage::Pass);
  EXPECT_EQ(full_check({kTriHex, "F+F--F--F+F+F+F"}), Stage::Pass);
  EXPECT_EQ(stage_name(Stage::Pass), "pass");
  EXPECT_EQ(stage_name(Stage::Dist), "dist");
}

// Every order-5 square word; the passing ones must satisfy every necessary
// condition computed independently.
TEST(FullCheck, BruteForceSquareOrderFive) {
  int passing = 0;
  for (int mask = 0; mask < 16; ++mask) {
    Word w = "F";
    for (int i = 0; i < 4; ++i) w += std::string(mask >> i & 1 ? "+" : "-") + "F";
    SimpleLsys s{kSquare, w};
    if (full_check(s) != Stage::Pass) continue;
    ++passing;
    EXPECT_NEAR(net_turn(w, kSquare), 0, 1e-9);
    EXPECT_NEAR(std::norm(float_walk(w, kSquare).back()), 5, 1e-9);
    for (int n = 1; n <= 4; ++n) EXPECT_TRUE(edges_distinct(float_walk(iterate(s, n), kSquare))) << w;
  }
  // F+F+F-F-F and its mirror image
  EXPECT_EQ(passing, 2);
}

TEST(FullCheck, PassingCurvesStayEdgeDistinct) {
  for (auto g : {kTri, kTriHex})
    for (int R : allowed_orders(g, 13))
      for (auto& w : enumerate(g, R)) {
        SimpleLsys s{g, w};
        if (full_check(s) != Stage::Pass) continue;
        for (int n = 1; n <= 3; ++n) EXPECT_TRUE(edges_distinct(float_walk(iterate(s, n), g))) << w;
      }
}

TEST(FullCheck, SquareCurvesUseNoStraightSteps) {
  for (int R : allowed_orders(kSquare, 13))
    for (auto& w : enumerate(kSquare, R)) EXPECT_EQ(w.find('0'), Word::npos);
}
