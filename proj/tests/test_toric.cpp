#include <gtest/gtest.h>

#include "edgepoly/errors.hpp"
#include "edgepoly/toric.hpp"
#include "edgepoly/verify.hpp"
#include "fixtures.hpp"

using namespace edgepoly;
using namespace edgepoly::testing;

namespace {

// Buchberger completion from scratch: keeps adding reduced S-polynomials.
std::vector<Binomial> complete(std::vector<Binomial> basis, const MonomialOrder& order) {
  for (std::size_t a = 0; a < basis.size(); ++a) {
    for (std::size_t b = 0; b < a; ++b) {
      if (auto r = reduce(s_polynomial(basis[a], basis[b]), basis, order)) {
        Binomial n = *r;
        const Monomial common = Monomial::gcd(n.plus, n.minus);
        n = orient({n.plus / common, n.minus / common}, order);
        basis.push_back(n);
      }
    }
  }
  return basis;
}

}  // namespace

TEST(WalkBinomial, FourCycle) {
  const Graph g = k22();
  Walk w;
  w.edges = {*g.edge_index(1, 3), *g.edge_index(2, 3), *g.edge_index(2, 4), *g.edge_index(1, 4)};
  w.starts = {1, 3, 2, 4};
  const auto b = walk_binomial(g, w);
  ASSERT_TRUE(b);
  EXPECT_EQ(*b, binom(g, {{1, 3}, {2, 4}}, {{2, 3}, {1, 4}}));
}

TEST(WalkBinomial, TrivialAndInvalid) {
  const Graph g = make_graph(3, {{1, 2}, {2, 3}});
  Walk w;
  w.edges = {0, 1, 1, 0};
  w.starts = {1, 2, 3, 2};
  EXPECT_FALSE(walk_binomial(g, w));
  Walk odd;
  odd.edges = {0, 1, 1};
  odd.starts = {1, 2, 3};
  EXPECT_THROW(walk_binomial(g, odd), ContractError);
}

TEST(WalkBinomial, BowtieSixWalk) {
  const Graph g = make_graph(5, {{1, 2}, {2, 3}, {1, 3}, {3, 4}, {4, 5}, {3, 5}});
  Walk w;
  w.edges = {*g.edge_index(1, 2), *g.edge_index(2, 3), *g.edge_index(3, 4),
             *g.edge_index(4, 5), *g.edge_index(3, 5), *g.edge_index(1, 3)};
  w.starts = {1, 2, 3, 4, 5, 3};
  const auto b = walk_binomial(g, w);
  ASSERT_TRUE(b);
  EXPECT_EQ(b->plus.degree(), 3u);
  EXPECT_TRUE(kernel_check(*b, g));
}

TEST(Generators, Examples) {
  EXPECT_TRUE(generators(make_graph(3, {{1, 2}, {2, 3}})).empty());
  const Graph g = k22();
  EXPECT_EQ(generators(g), (std::vector<Binomial>{binom(g, {{1, 4}, {2, 3}}, {{1, 3}, {2, 4}})}));
  // Loop variables rank above non-loops, so x11 x22 is the leading side.
  const Graph h = two_loops();
  EXPECT_EQ(generators(h), (std::vector<Binomial>{binom(h, {{1, 1}, {2, 2}}, {{1, 2}, {1, 2}})}));
}

TEST(Generators, AllPassKernelCheck) {
  for (int d = 1; d <= 4; ++d)
    for (const Graph& g : enumerate_valid_graphs(d))
      for (const Binomial& b : generators(g)) {
        ASSERT_TRUE(kernel_check(b, g));
        EXPECT_TRUE(Monomial::gcd(b.plus, b.minus).is_one());
      }
}

TEST(LexOrder, Examples) {
  const Graph g = k22();
  EXPECT_EQ(lex_cmp(g, mono(g, {{1, 4}, {2, 3}}), mono(g, {{1, 3}, {2, 4}})),
            std::strong_ordering::greater);
  const Graph h = make_graph(2, {{1, 1}, {1, 2}});
  EXPECT_EQ(lex_cmp(h, mono(h, {{1, 1}}), mono(h, {{1, 2}})), std::strong_ordering::greater);
  EXPECT_EQ(lex_cmp(g, mono(g, {{1, 3}}), mono(g, {{1, 3}})), std::strong_ordering::equal);
}

TEST(GroebnerBasis, Examples) {
  const Graph g = k22();
  const GroebnerBasis gb = groebner_basis(g);
  ASSERT_EQ(gb.elements.size(), 1u);
  EXPECT_EQ(gb.elements[0], binom(g, {{1, 4}, {2, 3}}, {{1, 3}, {2, 4}}));
  EXPECT_EQ(groebner_basis(k23()).elements.size(), 3u);
  EXPECT_EQ(groebner_basis(k33()).elements.size(), 9u);

  const Graph h = two_loops();
  const GroebnerBasis s = groebner_basis(h);
  EXPECT_TRUE(s.simplex_case);
  ASSERT_EQ(s.elements.size(), 1u);
  EXPECT_EQ(s.elements[0], binom(h, {{1, 1}, {2, 2}}, {{1, 2}, {1, 2}}));
}

TEST(GroebnerBasis, Refusals) {
  EXPECT_THROW(groebner_basis(make_graph(3, {{1, 2}, {2, 3}})), ZeroIdealError);
  EXPECT_THROW(groebner_basis(make_graph(4, {{1, 2}, {2, 3}, {3, 4}, {1, 4}, {1, 3}})),
               UnsupportedError);
}

TEST(GroebnerBasis, MatchesBuchbergerCompletionOfGenerators) {
  for (int d = 2; d <= 5; ++d) {
    for (const Graph& g : enumerate_valid_graphs(d)) {
      const Classification c = classify(g);
      if (!is_simple_non_simplex(c)) continue;
      const GroebnerBasis gb = groebner_basis(g);
      const auto completed = complete(generators(g, gb.order), gb.order);
      // Same ideal: each side reduces to zero modulo the other.
      for (const Binomial& b : completed) ASSERT_FALSE(reduce(b, gb.elements, gb.order));
      for (const Binomial& b : gb.elements) ASSERT_FALSE(reduce(b, completed, gb.order));
    }
  }
}

TEST(Reduce, Examples) {
  const Graph g = k22();
  const auto basis = groebner_basis(g).elements;
  const auto order = default_order(g);
  EXPECT_FALSE(reduce(basis[0], basis, order));
  EXPECT_FALSE(reduce(binom(g, {{1, 3}, {2, 4}}, {{1, 4}, {2, 3}}), basis, order));
  const Binomial var = binom(g, {{1, 3}}, {{2, 4}});
  EXPECT_EQ(reduce(var, basis, order), var);
}

TEST(Buchberger, Examples) {
  const Graph g = k22();
  const auto order = default_order(g);
  EXPECT_TRUE(buchberger_verify(groebner_basis(g).elements, order));
  const Graph h = k23();
  EXPECT_TRUE(buchberger_verify(groebner_basis(h).elements, default_order(h)));
  EXPECT_FALSE(buchberger_verify({binom(g, {{1, 3}, {2, 4}}, {{1, 4}, {2, 3}})}, order));
}

TEST(Buchberger, DetectsIncompleteBasis) {
  const Graph h = k23();
  auto elements = groebner_basis(h).elements;
  elements.pop_back();
  EXPECT_FALSE(buchberger_verify(elements, default_order(h)));
}

TEST(KernelCheck, Examples) {
  const Graph g = k22();
  EXPECT_TRUE(kernel_check(binom(g, {{1, 3}, {2, 4}}, {{1, 4}, {2, 3}}), g));
  EXPECT_FALSE(kernel_check(binom(g, {{1, 3}}, {{2, 4}}), g));
  const Graph h = two_loops();
  EXPECT_TRUE(kernel_check(binom(h, {{1, 2}, {1, 2}}, {{1, 1}, {2, 2}}), h));
}

TEST(Monomial, Arithmetic) {
  const Graph g = k22();
  const Monomial a = mono(g, {{1, 3}, {1, 3}, {2, 4}});
  const Monomial b = mono(g, {{1, 3}, {1, 4}});
  EXPECT_EQ(Monomial::lcm(a, b), mono(g, {{1, 3}, {1, 3}, {2, 4}, {1, 4}}));
  EXPECT_EQ(Monomial::gcd(a, b), mono(g, {{1, 3}}));
  EXPECT_EQ(a / mono(g, {{1, 3}}), mono(g, {{1, 3}, {2, 4}}));
  EXPECT_FALSE(a.is_squarefree());
  EXPECT_EQ(a.degree(), 3u);
  EXPECT_THROW(b / a, ContractError);
}

TEST(Serialization, BinomialJsonAndString) {
  const Graph g = k22();
  const Binomial b = groebner_basis(g).elements[0];
  EXPECT_EQ(to_string(b, g), "x_{1,4}*x_{2,3} - x_{1,3}*x_{2,4}");
  const auto j = binomial_json(b, g);
  EXPECT_EQ(j["plus"][0][0], "1,4");
  EXPECT_EQ(j["minus"][1][1], 1);
}

TEST(ToricProperties, BasisIsLabelEquivariant) {
  std::mt19937_64 rng(17);
  for (int d = 3; d <= 5; ++d) {
    for (const Graph& g : enumerate_valid_graphs(d)) {
      if (!is_simple_non_simplex(classify(g))) continue;
      const Graph h = relabel(g, random_permutation(d, rng));
      EXPECT_EQ(groebner_basis(h).elements.size(), groebner_basis(g).elements.size());
      EXPECT_TRUE(buchberger_verify(groebner_basis(h).elements, groebner_basis(h).order));
    }
  }
}
