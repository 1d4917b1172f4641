#include <gtest/gtest.h>

#include <random>

#include "ftloop/dnf.hpp"
#include "ftloop/error.hpp"

namespace ftloop {
namespace {

constexpr Literal a = 0, b = 1, c = 2, d = 3, x = 9;

TEST(Normalize, Absorption) {
  EXPECT_EQ(normalize(Dnf({{a, b}, {a}})), Dnf({{a}}));
  EXPECT_EQ(normalize(Dnf({{a}, {b}, {a, b}})), Dnf({{a}, {b}}));
}

TEST(Normalize, Idempotence) {
  EXPECT_EQ(normalize(Dnf({{a, a, b}})), Dnf({{a, b}}));
  EXPECT_EQ(normalize(Dnf({{b, a}, {a, b}})), Dnf({{a, b}}));
}

TEST(Normalize, Constants) {
  EXPECT_TRUE(normalize(Dnf()).is_false());
  EXPECT_TRUE(normalize(Dnf({{a}, {}, {b, c}})).is_true());
}

TEST(Normalize, CapExceeded) {
  try {
    normalize(Dnf({{a}, {b}, {c}}), 2);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::CapExceeded);
  }
  EXPECT_THROW(conjoin(Dnf({{a}, {b}}), Dnf({{c}, {d}}), 3), Error);
}

TEST(Normalize, PreservesTruthTable) {
  std::mt19937 rng(3);
  for (int iter = 0; iter < 500; ++iter) {
    std::vector<Product> products(rng() % 8);
    for (auto& p : products) {
      std::size_t len = rng() % 4;
      for (std::size_t i = 0; i < len; ++i) p.push_back(rng() % 5);
    }
    Dnf raw(products);
    Dnf norm = normalize(raw);
    for (std::size_t mask = 0; mask < 32; ++mask) {
      auto truth = [&](Literal l) { return ((mask >> l) & 1U) != 0; };
      ASSERT_EQ(raw.evaluate(truth), norm.evaluate(truth));
    }
    for (std::size_t i = 0; i < norm.size(); ++i) {
      for (std::size_t j = 0; j < norm.size(); ++j) {
        if (i == j) continue;
        const auto& p = norm.products()[i];
        const auto& q = norm.products()[j];
        EXPECT_FALSE(std::includes(p.begin(), p.end(), q.begin(), q.end()));
      }
    }
    EXPECT_EQ(normalize(norm), norm);
  }
}

TEST(EliminateSelf, DropsSelfDependentProducts) {
  constexpr Literal e1 = 0, e2 = 1, e3 = 2, e4 = 3;
  Dnf system = normalize(Dnf({{e1}, {e2, x}, {e3, e4, x}}));
  EXPECT_EQ(eliminate_self(x, system), Dnf({{e1}}));
  EXPECT_TRUE(eliminate_self(x, Dnf({{x}})).is_false());
  EXPECT_EQ(eliminate_self(x, Dnf({{e1}})), Dnf({{e1}}));
}

TEST(EliminateSelf, IsLeastSolution) {
  // Kleene iteration of X = F(X) from FALSE on every valuation of the others.
  std::mt19937 rng(5);
  for (int iter = 0; iter < 300; ++iter) {
    std::vector<Product> products(1 + rng() % 5);
    for (auto& p : products) {
      std::size_t len = rng() % 3;
      for (std::size_t i = 0; i < len; ++i) p.push_back(rng() % 4);
      if (rng() % 2) p.push_back(x);
    }
    Dnf f = normalize(Dnf(products));
    Dnf least = eliminate_self(x, f);
    EXPECT_FALSE(least.contains_literal(x));
    for (std::size_t mask = 0; mask < 16; ++mask) {
      bool value = false;
      for (int step = 0; step < 3; ++step) {
        value = f.evaluate([&](Literal l) { return l == x ? value : ((mask >> l) & 1U) != 0; });
      }
      EXPECT_EQ(least.evaluate([&](Literal l) { return ((mask >> l) & 1U) != 0; }), value);
    }
  }
}

TEST(Substitute, ReplacesAndNormalizes) {
  // x & a | b  with x := c | a   ->   a | b
  Dnf f = normalize(Dnf({{a, x}, {b}}));
  EXPECT_EQ(substitute(f, x, Dnf({{c}, {a}})), Dnf({{a}, {b}}));
  // Substituting FALSE removes the products.
  EXPECT_EQ(substitute(f, x, Dnf()), Dnf({{b}}));
  // Substituting TRUE drops the literal.
  EXPECT_EQ(substitute(f, x, Dnf::constant(true)), Dnf({{a}, {b}}));
}

}  // namespace
}  // namespace ftloop
