#include <gtest/gtest.h>

#include "edgepoly/errors.hpp"
#include "edgepoly/ehrhart.hpp"
#include "edgepoly/oracle.hpp"
#include "edgepoly/verify.hpp"
#include "fixtures.hpp"

using namespace edgepoly;
using namespace edgepoly::testing;

namespace {

UniPoly poly(std::initializer_list<std::pair<long, long>> coeffs) {
  std::vector<Rational> c;
  for (auto [n, d] : coeffs) c.emplace_back(n, d);
  for (auto& x : c) x.canonicalize();
  return UniPoly(c);
}

// Lagrange by direct evaluation, independent of ehrhart_interpolate.
Rational lagrange_at(const std::vector<std::pair<long, Integer>>& s, const Rational& x) {
  Rational total = 0;
  for (std::size_t a = 0; a < s.size(); ++a) {
    Rational term = s[a].second;
    for (std::size_t b = 0; b < s.size(); ++b)
      if (a != b) term *= (x - s[b].first) / Rational(s[a].first - s[b].first);
    total += term;
  }
  return total;
}

}  // namespace

TEST(UniPoly, Basics) {
  const UniPoly p = UniPoly::linear(1) * UniPoly::linear(1);
  EXPECT_EQ(p, poly({{1, 1}, {2, 1}, {1, 1}}));
  EXPECT_EQ(p.degree(), 2);
  EXPECT_EQ(p(Rational(3)), 16);
  EXPECT_EQ(UniPoly().degree(), -1);
  EXPECT_EQ(p + p * Rational(-1), UniPoly());
  EXPECT_EQ(to_string(p), "m^2 + 2*m + 1");
}

TEST(BinomialPoly, MatchesIntegerBinomials) {
  for (long shift = -2; shift <= 3; ++shift)
    for (long k = 0; k <= 4; ++k)
      for (long m = 0; m <= 6; ++m) {
        const long n = m + shift;
        Integer expected = 0;
        if (k == 0) expected = 1;
        else if (n >= k) mpz_bin_uiui(expected.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
        else if (n < 0) {
          // falling product of negatives
          Rational r = 1;
          for (long t = 0; t < k; ++t) {
            Rational f(n - t, t + 1);
            f.canonicalize();
            r *= f;
          }
          expected = r.get_num();
        }
        EXPECT_EQ(binomial_poly(shift, k)(Rational(m)), Rational(expected)) << shift << " " << k << " " << m;
      }
}

TEST(ClosedForm, Examples) {
  const auto sq = poly({{1, 1}, {2, 1}, {1, 1}});
  EXPECT_EQ(ehrhart_closed_form({SimpleFamily::Alpha, 2, 2, 0}), sq);
  EXPECT_EQ(ehrhart_closed_form({SimpleFamily::Beta, 1, 1, 0}), sq);
  EXPECT_EQ(ehrhart_closed_form({SimpleFamily::Gamma, 2, 0, 3}), poly({{1, 1}, {5, 2}, {3, 2}}));
}

TEST(ClosedForm, ValueAtZeroIsOne) {
  for (long p = 1; p <= 4; ++p)
    for (long q = 1; q <= 4; ++q) {
      EXPECT_EQ(ehrhart_closed_form({SimpleFamily::Alpha, p, q, 0})(0), 1);
      EXPECT_EQ(ehrhart_closed_form({SimpleFamily::Beta, p, q, 0})(0), 1);
      EXPECT_EQ(ehrhart_closed_form({SimpleFamily::Gamma, p, 0, p + q})(0), 1);
    }
}

TEST(NormalizedVolume, Examples) {
  EXPECT_EQ(normalized_volume({SimpleFamily::Alpha, 2, 3, 0}), 3);
  EXPECT_EQ(normalized_volume({SimpleFamily::Beta, 1, 1, 0}), 2);
  EXPECT_EQ(normalized_volume({SimpleFamily::Gamma, 2, 0, 3}), 3);
}

TEST(NormalizedVolume, IsFactorialTimesLeadingCoefficient) {
  for (long p = 1; p <= 4; ++p)
    for (long q = 1; q <= 4; ++q) {
      EXPECT_EQ(volume_from_polynomial(ehrhart_closed_form({SimpleFamily::Alpha, p, q, 0}), p + q - 2),
                normalized_volume({SimpleFamily::Alpha, p, q, 0}));
      EXPECT_EQ(volume_from_polynomial(ehrhart_closed_form({SimpleFamily::Beta, p, q, 0}), p + q),
                normalized_volume({SimpleFamily::Beta, p, q, 0}));
      EXPECT_EQ(volume_from_polynomial(ehrhart_closed_form({SimpleFamily::Gamma, p, 0, p + q}), p + q - 1),
                normalized_volume({SimpleFamily::Gamma, p, 0, p + q}));
    }
}

TEST(Interpolate, Examples) {
  const std::vector<std::pair<long, Integer>> a{{0, 1}, {1, 4}, {2, 9}};
  EXPECT_EQ(ehrhart_interpolate(a, 2), poly({{1, 1}, {2, 1}, {1, 1}}));
  const std::vector<std::pair<long, Integer>> b{{0, 1}, {1, 5}, {2, 12}};
  EXPECT_EQ(ehrhart_interpolate(b, 2), poly({{1, 1}, {5, 2}, {3, 2}}));
  const std::vector<std::pair<long, Integer>> c{{0, 1}, {1, 1}};
  EXPECT_EQ(ehrhart_interpolate(c, 0), poly({{1, 1}}));
}

TEST(Interpolate, Errors) {
  const std::vector<std::pair<long, Integer>> few{{0, 1}, {1, 4}};
  EXPECT_THROW(ehrhart_interpolate(few, 2), ContractError);
  const std::vector<std::pair<long, Integer>> bad{{0, 1}, {1, 1}, {2, 5}};
  EXPECT_THROW(ehrhart_interpolate(bad, 1), ContractError);
}

TEST(Interpolate, AgreesWithDirectLagrange) {
  std::mt19937_64 rng(2);
  for (int trial = 0; trial < 30; ++trial) {
    const int degree = static_cast<int>(rng() % 5);
    std::vector<std::pair<long, Integer>> s;
    for (long m = 0; m <= degree; ++m) s.emplace_back(m, Integer(static_cast<long>(rng() % 50)));
    const UniPoly p = ehrhart_interpolate(s, degree);
    for (long x = -3; x <= 8; ++x) EXPECT_EQ(p(Rational(x)), lagrange_at(s, Rational(x)));
    for (const auto& [m, v] : s) EXPECT_EQ(p(Rational(m)), Rational(v));
  }
}

TEST(SortedMonomials, Examples) {
  EXPECT_EQ(count_sorted_monomials(k22(), 1), 4);
  EXPECT_EQ(count_sorted_monomials(k22(), 2), 9);
  EXPECT_EQ(count_sorted_monomials(gamma3(), 1), 5);
  EXPECT_EQ(count_sorted_monomials(k22(), 0), 1);
  EXPECT_THROW(count_sorted_monomials(triangle(), 1), ContractError);
}

TEST(FamilyParams, FromClassification) {
  const auto a = family_params(classify(k23()), 5);
  EXPECT_EQ(a.family, SimpleFamily::Alpha);
  EXPECT_EQ(a.p, 2);
  EXPECT_EQ(a.q, 3);
  const auto y = family_params(classify(gamma3()), 3);
  EXPECT_EQ(y.family, SimpleFamily::Gamma);
  EXPECT_EQ(y.p, 2);
  EXPECT_EQ(y.d, 3);
  EXPECT_THROW(family_params(classify(g1()), 3), UnsupportedError);
}

TEST(EhrhartProperties, ThreeWayAgreementOnSimpleGraphs) {
  for (int d = 2; d <= 5; ++d) {
    for (const Graph& g : enumerate_valid_graphs(d)) {
      const Classification c = classify(g);
      if (!is_simple_non_simplex(c)) continue;
      const auto params = family_params(c, d);
      const UniPoly closed = ehrhart_closed_form(params);
      const auto points = edge_polytope(g).points;
      for (long m = 0; m <= 4; ++m) {
        const Integer lattice = count_lattice_points(points, m);
        ASSERT_EQ(closed(Rational(m)), Rational(lattice)) << graph_json(g).dump() << " m=" << m;
        ASSERT_EQ(count_sorted_monomials(g, m), lattice) << graph_json(g).dump() << " m=" << m;
      }
    }
  }
}

TEST(EhrhartProperties, SixVertexFamilies) {
  // alpha K_{3,3}, beta loop + K_{2,3}, gamma 3 loops + 3 free vertices
  const Graph beta = make_graph(6, {{1, 1}, {1, 2}, {1, 3}, {1, 4}, {1, 5}, {1, 6},
                                    {2, 4}, {2, 5}, {2, 6}, {3, 4}, {3, 5}, {3, 6}});
  const Graph gamma = make_graph(6, {{1, 1}, {2, 2}, {3, 3}, {1, 2}, {1, 3}, {2, 3},
                                     {1, 4}, {1, 5}, {1, 6}, {2, 4}, {2, 5}, {2, 6},
                                     {3, 4}, {3, 5}, {3, 6}});
  for (const Graph& g : {k33(), beta, gamma}) {
    const Classification c = classify(g);
    ASSERT_TRUE(is_simple_non_simplex(c)) << graph_json(g).dump();
    const UniPoly closed = ehrhart_closed_form(family_params(c, 6));
    const auto points = edge_polytope(g).points;
    for (long m = 0; m <= 3; ++m) {
      EXPECT_EQ(closed(Rational(m)), Rational(count_lattice_points(points, m)));
      EXPECT_EQ(count_sorted_monomials(g, m), count_lattice_points(points, m));
    }
  }
}
