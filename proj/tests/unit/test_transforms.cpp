#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "gridcurve/search.hpp"
#include "gridcurve/transforms.hpp"

using namespace gridcurve;

namespace {

bool has_rule(const ConversionSpec& s, const std::string& from, const std::string& to) {
  for (auto& ph : s.phases) {
    for (auto& r : ph.rules)
      if (r.from == from && r.to == to) return true;
    for (auto& c : ph.conditional)
      if (c.rule.from == from && c.rule.to == to) return true;
  }
  return false;
}

// Letters of a division system all draw; map them back to F.
Word flatten(Word w, const std::string& letters) {
  for (char& c : w)
    if (letters.find(c) != std::string::npos) c = 'F';
  return w;
}

Word repeat_f(const Word& w, int d) {
  Word out;
  for (char c : w) out += c == 'F' ? std::string(static_cast<std::size_t>(d), 'F') : std::string(1, c);
  return out;
}

std::vector<SimpleLsys> found(GridKind g, int R) {
  std::vector<SimpleLsys> out;
  for (auto& c : run_search(g, R).records) out.push_back({g, c.production});
  return out;
}

SimpleLsys found_id(GridKind g, int R, int id) {
  for (auto& c : run_search(g, R).records)
    if (c.id == id) return {g, c.production};
  throw std::out_of_range("no such curve");
}

}  // namespace

TEST(Classify, Examples) {
  EXPECT_EQ(classify({kTri, "F+F-F-F+F+F-F"}), (CurveClass{true, false}));
  EXPECT_EQ(classify({kTri, "F0F+F0F-F-F+F"}), (CurveClass{false, true}));
  EXPECT_EQ(classify({kTri, "F+F-F"}), (CurveClass{true, false}));
  EXPECT_EQ(classify({kTri, "F+F0F-F"}), (CurveClass{false, true}));
  EXPECT_EQ(classify({kTri, "F0F0F+F-F"}), (CurveClass{false, false}));
}

TEST(Classify, BalancedImpliesOrderOneModThree) {
  for (int R : allowed_orders(kTri, 13))
    for (auto& s : found(kTri, R))
      if (classify(s).balanced) EXPECT_EQ(order(s) % 3, 1) << s.production;
}

TEST(Registry, PublishedRuleTables) {
  EXPECT_GE(registry().size(), 25u);
  EXPECT_TRUE(has_rule(find_spec("(3.12.12)-PC"), "X", "F-F++++F-F-F++++F-"));
  EXPECT_TRUE(has_rule(find_spec("(3.4.6.4)-EC method 1"), "p", "---F++++F++++F---F---F++++F++++F---F"));
  auto& ec = find_spec("(4^4)-EC tri-hex");
  ASSERT_FALSE(ec.edges.empty());
  EXPECT_EQ(ec.edges[0].map, (std::vector<std::string>{"21", "2", "3", "43", "4", "1"}));
  EXPECT_THROW(find_spec("no such conversion"), MalformedSystem);
}

TEST(Registry, NamesAreUnique) {
  std::set<std::string> names;
  for (auto& s : registry()) EXPECT_TRUE(names.insert(s.name).second) << s.name;
}

TEST(Convert, RewriteExamples) {
  EXPECT_EQ(rewrite("F+F-F", find_spec("(3.6.3.6)-PC")), "+F+-F-");
}

TEST(Convert, SourceClassIsEnforced) {
  EXPECT_THROW(convert_curve({kTri, "F+F0F-F"}, 2, find_spec("(3.6.3.6)-PC")), MalformedSystem);
  EXPECT_THROW(convert_curve({kSquare, "F+F+F-F-F"}, 2, find_spec("(3.6.3.6)-PC")), MalformedSystem);
}

TEST(Convert, EveryDemoVerifies) {
  for (auto& spec : registry()) {
    ASSERT_FALSE(spec.demos.empty()) << spec.name;
    for (auto& demo : spec.demos) {
      auto c = convert_demo(spec, demo);
      EXPECT_GT(c.size(), 0u) << spec.name;
      EXPECT_EQ(coverage_failure(c, spec.mode), "") << spec.name << " " << demo.production;
      EXPECT_TRUE(verify(c, spec.mode)) << spec.name;
    }
  }
}

TEST(Convert, OriginsIndexSourceEdges) {
  for (auto& spec : registry())
    for (auto& demo : spec.demos) {
      auto c = convert_demo(spec, demo);
      ASSERT_EQ(c.origin.size(), c.size()) << spec.name;
      EXPECT_TRUE(std::is_sorted(c.origin.begin(), c.origin.end()) || demo.tile_sign != 0) << spec.name;
    }
}

TEST(Convert, PointCoveringOnSevenFive) {
  auto c = convert_curve(found_id(kTri, 7, 5), 3, find_spec("(3.6.3.6)-PC"));
  EXPECT_TRUE(verify(c, Coverage::PC));
}

TEST(Verify, NegativeAndTrivialCases) {
  EXPECT_TRUE(verify_pc(turtle("F", kSquare), kSquare));
  EXPECT_TRUE(verify_pc(turtle("F+F+F+F", kSquare), kSquare));
  EXPECT_FALSE(verify_pc(turtle("F+F+F+FF", kSquare), kSquare));      // origin visited twice
  EXPECT_FALSE(verify_pc(turtle("FF+FF+FF+FF", kSquare), kSquare));   // centre of the 2x2 block left out
  EXPECT_TRUE(verify_pc(turtle("FF+F+F-F-FF", kSquare), kSquare));   // snake through the same block
  EXPECT_TRUE(verify_ec(turtle("F+F+F+F", kSquare), kSquare));
  EXPECT_FALSE(verify_ec(turtle("FF+FF+FF+FF", kSquare), kSquare));   // inner cross uncovered
  EXPECT_FALSE(verify_ec(turtle("F+F+F+F+F", kSquare), kSquare));     // first edge twice
}

TEST(Verify, SquareCurvesAreEdgeCovering) {
  for (auto& s : found(kSquare, 13)) EXPECT_TRUE(verify_ec(turtle(iterate(s, 2), kSquare), kSquare)) << s.production;
}

TEST(Product, Examples) {
  EXPECT_EQ(product({kTri, "F+F-F"}, {kTri, "F+F0F-F"}).production, "F+F0F-F+F+F0F-F-F+F0F-F");
  EXPECT_EQ(product({kTri, "F+F0F-F"}, {kTri, "F+F-F"}).production, "F+F-F+F+F-F0F+F-F-F+F-F");
  EXPECT_EQ(product({kTri, "F+F0F-F"}, {kTri, "F"}).production, "F+F0F-F");
  EXPECT_EQ(product({kTri, "F"}, {kTri, "F+F0F-F"}).production, "F+F0F-F");
  EXPECT_THROW(product({kTri, "F+F-F"}, {kSquare, "F+F+F-F-F"}), MalformedSystem);
}

TEST(Product, OrderIsMultiplicative) {
  std::vector<SimpleLsys> small;
  for (int R : {3, 4, 7})
    for (auto& s : found(kTri, R)) small.push_back(s);
  for (auto& a : small)
    for (auto& b : small) EXPECT_EQ(order(product(a, b)), order(a) * order(b));
}

TEST(Product, SmallFactorsGiveOrderTwelveCurves) {
  std::vector<SimpleLsys> factors;
  for (int R : {3, 4})
    for (auto& s : found(kTri, R)) {
      factors.push_back(s);
      factors.push_back(swap_signs(s));
      factors.push_back(reverse(s));
    }
  std::set<ShapeKey> twelve;
  for (auto& s : found(kTri, 12)) twelve.insert(shape_key(s));
  std::set<ShapeKey> made;
  for (auto& a : factors)
    for (auto& b : factors) {
      if (order(a) == order(b)) continue;
      auto p = product(a, b);
      EXPECT_EQ(full_check(p), Stage::Pass) << p.production;
      EXPECT_TRUE(twelve.count(shape_key(p))) << p.production;
      made.insert(shape_key(p));
    }
  for (int id : {10, 17, 13, 25}) EXPECT_TRUE(made.count(shape_key(found_id(kTri, 12, id)))) << id;
  // terdragon times crab and crab times terdragon
  EXPECT_EQ(shape_key(product({kTri, "F+F-F"}, {kTri, "F+F0F-F"})), shape_key(found_id(kTri, 12, 10)));
  EXPECT_EQ(shape_key(product({kTri, "F+F0F-F"}, {kTri, "F+F-F"})), shape_key(found_id(kTri, 12, 17)));
}

TEST(Product, AlternationMatchesSwappedProduct) {
  MultiLsys fg{"F", {{'F', "G+G-G"}, {'G', "F-F+F"}}, "FG", 120};
  MultiLsys flip{"F", {{'F', "F-F+F"}, {'+', "-"}, {'-', "+"}}, "F", 120};
  SimpleLsys alt = product({kTri, "F+F-F"}, {kTri, "F-F+F"});
  for (int n = 0; n <= 3; ++n) {
    EXPECT_EQ(flatten(iterate(fg, 2 * n), "G"), iterate(alt, n));
    EXPECT_EQ(iterate(flip, 2 * n), iterate(alt, n));
  }
}

TEST(Divide, TerdragonFive) {
  auto d = divide({kTri, "F+F-F"}, 5);
  EXPECT_EQ(d.system.axiom, "ABCDE");
  EXPECT_EQ(d.system.maps.at('A'), "ABC");
  EXPECT_EQ(d.system.maps.at('B'), "DE+A");
  EXPECT_EQ(d.system.maps.at('C'), "BCD");
  EXPECT_EQ(d.system.maps.at('D'), "E-AB");
  EXPECT_EQ(d.system.maps.at('E'), "CDE");
}

TEST(Divide, TriHexUnevenSplit) {
  auto d = divide({kTriHex, "F+F--F--F+F+F+F"}, std::vector<int>{3, 11});
  EXPECT_EQ(d.system.maps.at('A'), "AB+A");
  EXPECT_EQ(d.system.maps.at('B'), "B--AB--AB+AB+AB+AB");
}

TEST(Divide, OnePartIsTheOriginal) {
  auto d = divide({kTri, "F+F0F-F"}, 1);
  EXPECT_EQ(d.system.axiom, "A");
  EXPECT_EQ(d.system.maps.at('A'), "A+A0A-A");
}

TEST(Divide, CyclicPermutationIsRejected) {
  // AB+AB-AB cut after the first letter gives A -> A
  EXPECT_THROW(divide({kTri, "F+F-F"}, std::vector<int>{1, 5}), MalformedSystem);
  EXPECT_TRUE(has_cyclic_permutation({"AB", {{'A', "B"}, {'B', "A"}}, "AB", 120}));
  EXPECT_FALSE(has_cyclic_permutation({"AB", {{'A', "AB"}, {'B', "A"}}, "AB", 120}));
  EXPECT_THROW(divide({kTri, "F+F-F"}, std::vector<int>{2, 3}), MalformedSystem);  // parts must sum to d*R
}

// Drawing the divided axiom retraces the curve with every edge split d ways.
TEST(Divide, ConcatenationInvariant) {
  std::vector<std::pair<SimpleLsys, std::vector<int>>> cases;
  for (int d = 2; d <= 5; ++d) cases.push_back({{kTri, "F+F-F"}, std::vector<int>(static_cast<std::size_t>(d), 3)});
  cases.push_back({{kTriHex, "F+F--F--F+F+F+F"}, {3, 11}});
  for (auto& s : found(kTri, 7)) cases.push_back({s, {7, 7}});
  for (auto& [s, parts] : cases) {
    auto d = divide(s, parts);
    const int pieces = static_cast<int>(parts.size());
    const std::string letters = d.system.axiom;
    for (int n = 0; n <= 3; ++n)
      EXPECT_EQ(flatten(iterate(d.system, n), letters), repeat_f(iterate(s, n), pieces)) << s.production << " " << n;
  }
}

TEST(DivideMulti, Gosper) {
  MultiLsys gosper{"L", {{'L', "L+R++R-L--LL-R+"}, {'R', "-L+RR++R+L--L-R"}}, "LR", 60};
  auto d = divide_multi(gosper, {{'L', "AB"}, {'R', "CD"}});
  EXPECT_EQ(d.maps.at('A'), "AB+CD++CD-A");
  EXPECT_EQ(d.maps.at('B'), "B--ABAB-CD+");
  EXPECT_EQ(d.maps.at('C'), "-AB+CDCD++C");
  EXPECT_EQ(d.maps.at('D'), "D+AB--AB-CD");
  for (int n = 0; n <= 3; ++n) {
    Word w = iterate(d, n), v = iterate(gosper, n);
    EXPECT_EQ(flatten(w, "ABCD"), repeat_f(flatten(v, "LR"), 2));
  }
}

TEST(DivideMulti, HilbertUneven) {
  MultiLsys hilbert{"L", {{'L', "+Rt-LtL-tR+"}, {'R', "-Lt+RtR+tL-"}}, "t", 90};
  auto d = divide_multi(hilbert, {{'L', "AB"}, {'R', "CD"}}, {{'L', {5, 3}}, {'R', {5, 3}}});
  EXPECT_EQ(d.maps.at('A'), "+CDt-ABtA");
  EXPECT_EQ(d.maps.at('B'), "B-tCD+");
  EXPECT_EQ(d.maps.at('C'), "-ABt+CDtC");
  EXPECT_EQ(d.maps.at('D'), "D+tAB-");
}

TEST(DivideMulti, IdentitySubstitution) {
  MultiLsys gosper{"L", {{'L', "L+R++R-L--LL-R+"}, {'R', "-L+RR++R+L--L-R"}}, "LR", 60};
  auto d = divide_multi(gosper, {});
  EXPECT_EQ(d.maps, gosper.maps);
}
