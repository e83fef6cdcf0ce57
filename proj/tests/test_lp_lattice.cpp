#include <gtest/gtest.h>

#include <random>

#include "edgepoly/lattice.hpp"
#include "edgepoly/lp.hpp"

using namespace edgepoly;

namespace {

IntMatrix ints(std::initializer_list<std::initializer_list<long>> rows) {
  IntMatrix out;
  for (auto row : rows) {
    IntVector r;
    for (long v : row) r.emplace_back(v);
    out.push_back(std::move(r));
  }
  return out;
}

std::vector<Rational> rats(std::initializer_list<long> values) {
  std::vector<Rational> out;
  for (long v : values) out.emplace_back(v);
  return out;
}

}  // namespace

TEST(RationalLP, FeasibleAndInfeasible) {
  RationalLP lp(2);
  lp.add_row(rats({1, 1}), 1);
  EXPECT_TRUE(is_feasible(lp));
  lp.add_row(rats({1, -1}), 3);  // x - y = 3 forces y < 0
  EXPECT_FALSE(is_feasible(lp));
}

TEST(RationalLP, OptimumIsExact) {
  // minimize -x - y  s.t.  3x + y + s1 = 2,  x + 3y + s2 = 2
  RationalLP lp(4);
  lp.add_row(rats({3, 1, 1, 0}), 2);
  lp.add_row(rats({1, 3, 0, 1}), 2);
  lp.set_objective(rats({-1, -1, 0, 0}));
  const LpSolution s = solve(lp);
  ASSERT_EQ(s.status, LpStatus::Optimal);
  EXPECT_EQ(s.value, Rational(-1));
  EXPECT_EQ(s.point[0], Rational(1, 2));
  EXPECT_EQ(s.point[1], Rational(1, 2));
}

TEST(RationalLP, Unbounded) {
  RationalLP lp(2);
  lp.add_row(rats({1, -1}), 0);
  lp.set_objective(rats({-1, 0}));
  EXPECT_EQ(solve(lp).status, LpStatus::Unbounded);
}

TEST(RationalLP, RedundantAndDegenerateRows) {
  RationalLP lp(3);
  lp.add_row(rats({1, 1, 1}), 1);
  lp.add_row(rats({2, 2, 2}), 2);
  lp.add_row(rats({1, 0, 0}), 0);
  lp.set_objective(rats({0, 1, 0}));
  const LpSolution s = solve(lp);
  ASSERT_EQ(s.status, LpStatus::Optimal);
  EXPECT_EQ(s.value, 0);
  EXPECT_EQ(s.point[2], 1);
}

TEST(RationalLP, RandomFeasibilityMatchesPlantedPoint) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t n = 2 + rng() % 5, m = 1 + rng() % 3;
    std::vector<long> planted(n);
    for (auto& x : planted) x = static_cast<long>(rng() % 3);
    RationalLP lp(n);
    for (std::size_t r = 0; r < m; ++r) {
      std::vector<Rational> row(n);
      Rational rhs = 0;
      for (std::size_t c = 0; c < n; ++c) {
        row[c] = static_cast<long>(rng() % 7) - 3;
        rhs += row[c] * planted[c];
      }
      lp.add_row(row, rhs);
    }
    const LpSolution s = solve(lp);
    ASSERT_EQ(s.status, LpStatus::Optimal);
    for (std::size_t r = 0; r < m; ++r) {
      Rational lhs = 0;
      for (std::size_t c = 0; c < n; ++c) lhs += lp.rows()[r][c] * s.point[c];
      EXPECT_EQ(lhs, lp.rhs()[r]);
    }
    for (const auto& x : s.point) EXPECT_GE(x, 0);
  }
}

TEST(Lattice, HermiteNormalFormIsCanonical) {
  const auto a = hermite_normal_form(ints({{2, 4}, {1, 3}}), 2);
  const auto b = hermite_normal_form(ints({{1, 3}, {3, 7}, {0, 2}}), 2);
  EXPECT_EQ(a, b);
  EXPECT_EQ(a, ints({{1, 1}, {0, 2}}));
  EXPECT_TRUE(hermite_normal_form(ints({{0, 0}}), 2).empty());
}

TEST(Lattice, KernelAndSaturation) {
  const auto k = integer_kernel(ints({{1, 1, 1}}), 3);
  EXPECT_EQ(k.size(), 2u);
  for (const auto& v : k) EXPECT_EQ(v[0] + v[1] + v[2], 0);
  // 2e1 spans a line whose integer points are generated by e1.
  EXPECT_EQ(saturation(ints({{2, 0, 0}}), 3), ints({{1, 0, 0}}));
  EXPECT_TRUE(same_lattice(saturation(ints({{1, 1, 0}, {1, -1, 0}}), 3), ints({{1, 0, 0}, {0, 1, 0}}), 3));
  EXPECT_FALSE(same_lattice(ints({{1, 1, 0}, {1, -1, 0}}), ints({{1, 0, 0}, {0, 1, 0}}), 3));
}

TEST(Lattice, PrimitiveAndRank) {
  EXPECT_EQ(primitive(IntVector{4, -6, 0}), (IntVector{2, -3, 0}));
  EXPECT_EQ(primitive(IntVector{0, 0}), (IntVector{0, 0}));
  EXPECT_EQ(rational_rank(ints({{1, 2, 3}, {2, 4, 6}, {0, 1, 0}}), 3), 2u);
}

TEST(Lattice, RandomKernelIsOrthogonalAndSaturated) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t w = 2 + rng() % 4, r = 1 + rng() % 3;
    IntMatrix a(r, IntVector(w));
    for (auto& row : a)
      for (auto& x : row) x = static_cast<long>(rng() % 9) - 4;
    const auto k = integer_kernel(a, w);
    EXPECT_EQ(k.size() + rational_rank(a, w), w);
    for (const auto& v : k)
      for (const auto& row : a) {
        Integer dot = 0;
        for (std::size_t c = 0; c < w; ++c) dot += row[c] * v[c];
        EXPECT_EQ(dot, 0);
      }
    if (!k.empty()) EXPECT_TRUE(same_lattice(saturation(k, w), k, w));
  }
}
