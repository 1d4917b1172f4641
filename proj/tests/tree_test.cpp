#include <gtest/gtest.h>

#include <algorithm>
#include <functional>

#include "ftloop/error.hpp"
#include "ftloop/tree.hpp"
#include "support/oracle.hpp"

namespace ftloop {
namespace {

std::vector<BasicEventDef> basics(std::initializer_list<const char*> ids) {
  std::vector<BasicEventDef> out;
  for (auto id : ids) out.push_back(BasicEventDef{id, EventKind::NonRepairable, std::nullopt});
  return out;
}

ErrorCode code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorCode::SyntaxError;
}

TEST(BuildTree, TwoGateLoop) {
  auto tree = build_tree(
      basics({"Aa", "Ab", "Ba", "Bb"}),
      {GateDef{"A", Expr::any_of({Expr::ref("Aa"), Expr::all_of({Expr::ref("Ab"), Expr::ref("B")})})},
       GateDef{"B", Expr::any_of({Expr::ref("Bb"), Expr::all_of({Expr::ref("Ba"), Expr::ref("A")})})}},
      {"A"});
  EXPECT_EQ(tree.gate_count(), 2u);
  EXPECT_EQ(tree.basic_count(), 4u);
  EXPECT_EQ(tree.gate_refs(0), std::vector<std::size_t>{1});
  EXPECT_EQ(tree.expanded_body(0).children[1].children[1].kind, Expr::Kind::Gate);
}

TEST(BuildTree, Errors) {
  EXPECT_EQ(code_of([] { build_tree(basics({"a"}), {GateDef{"G", Expr::ref("Zz")}}, {"G"}); }),
            ErrorCode::UnresolvedReference);
  EXPECT_EQ(code_of([] {
              build_tree(basics({}), {GateDef{"G", Expr::koon(4, {"G1", "G2", "G3"})}}, {"G"});
            }),
            ErrorCode::BadKooN);
  EXPECT_EQ(code_of([] { build_tree(basics({"a", "a"}), {GateDef{"G", Expr::ref("a")}}, {"G"}); }),
            ErrorCode::DuplicateId);
  EXPECT_EQ(code_of([] { build_tree(basics({"a"}), {GateDef{"a", Expr::ref("a")}}, {"a"}); }),
            ErrorCode::DuplicateId);
  EXPECT_EQ(code_of([] { build_tree(basics({"a"}), {GateDef{"G", Expr::ref("a")}}, {}); }),
            ErrorCode::EmptyTops);
  EXPECT_EQ(code_of([] { build_tree(basics({"a"}), {GateDef{"G", Expr::ref("a")}}, {"a"}); }),
            ErrorCode::UnresolvedReference);
  EXPECT_EQ(code_of([] {
              build_tree({BasicEventDef{"a", EventKind::NonRepairable, 1.5}},
                         {GateDef{"G", Expr::ref("a")}}, {"G"});
            }),
            ErrorCode::BadProbability);
  EXPECT_EQ(code_of([] {
              build_tree({BasicEventDef{"a", EventKind::NonRepairable, -0.1}},
                         {GateDef{"G", Expr::ref("a")}}, {"G"});
            }),
            ErrorCode::BadProbability);
}

TEST(BuildTree, SelfReferenceAndSingleChildAllowed) {
  auto tree = build_tree({}, {GateDef{"A", Expr::all_of({Expr::ref("A")})}}, {"A"});
  EXPECT_EQ(tree.gates()[0].body, Expr::gate("A"));
  EXPECT_EQ(tree.gate_refs(0), std::vector<std::size_t>{0});
}

TEST(BuildTree, AssignmentMustBeTotal) {
  auto tree = build_tree(basics({"a", "b"}), {GateDef{"G", Expr::ref("a")}}, {"G"});
  EXPECT_EQ(code_of([&] { tree.assignment({{"a", true}}); }), ErrorCode::BadAssignment);
  EXPECT_EQ(code_of([&] { tree.assignment({{"a", true}, {"b", false}, {"c", true}}); }),
            ErrorCode::UnknownBasic);
  auto a = tree.assignment({{"a", true}, {"b", false}});
  EXPECT_TRUE(a[0]);
  EXPECT_FALSE(a[1]);
}

TEST(ExpandKooN, TwoOfThree) {
  Expr expanded = expand_koon(Expr::koon(2, {"G1", "G2", "G3"}));
  Expr expected = Expr::any_of({Expr::all_of({Expr::ref("G1"), Expr::ref("G2")}),
                                Expr::all_of({Expr::ref("G1"), Expr::ref("G3")}),
                                Expr::all_of({Expr::ref("G2"), Expr::ref("G3")})});
  EXPECT_EQ(expanded, expected);
}

TEST(ExpandKooN, Extremes) {
  EXPECT_EQ(expand_koon(Expr::koon(1, {"a", "b"})), Expr::any_of({Expr::ref("a"), Expr::ref("b")}));
  EXPECT_EQ(expand_koon(Expr::koon(3, {"a", "b", "c"})),
            Expr::all_of({Expr::ref("a"), Expr::ref("b"), Expr::ref("c")}));
  EXPECT_EQ(expand_koon(Expr::koon(1, {"a"})), Expr::ref("a"));
}

bool contains_koon(const Expr& e) {
  if (e.kind == Expr::Kind::KooN) return true;
  return std::any_of(e.children.begin(), e.children.end(), contains_koon);
}

TEST(ExpandKooN, ThresholdEquivalenceExhaustive) {
  for (int n = 1; n <= 6; ++n) {
    std::vector<BasicEventDef> defs;
    std::vector<std::string> ids;
    for (int i = 0; i < n; ++i) {
      ids.push_back("x" + std::to_string(i));
      defs.push_back(BasicEventDef{ids.back(), EventKind::NonRepairable, std::nullopt});
    }
    for (int k = 1; k <= n; ++k) {
      auto tree = build_tree(defs, {GateDef{"G", Expr::koon(k, ids)}}, {"G"});
      const Expr& expanded = tree.expanded_body(0);
      ASSERT_FALSE(contains_koon(expanded));
      EXPECT_EQ(expand_koon(expanded), expanded) << "idempotence, k=" << k << " n=" << n;
      for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
        Assignment a(testing::bits_of(mask, static_cast<std::size_t>(n)));
        int count = __builtin_popcountll(mask);
        EXPECT_EQ(evaluate(expanded, a, StateVector(1)), count >= k)
            << "k=" << k << " n=" << n << " mask=" << mask;
      }
    }
  }
}

TEST(ExpandKooN, NestedInsideOtherOperators) {
  Expr e = Expr::all_of({Expr::ref("a"), Expr::koon(2, {"b", "c", "d"})});
  Expr expanded = expand_koon(e);
  EXPECT_FALSE(contains_koon(expanded));
  EXPECT_EQ(expand_koon(expanded), expanded);
}

}  // namespace
}  // namespace ftloop
