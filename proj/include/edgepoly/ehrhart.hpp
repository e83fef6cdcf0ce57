#pragma once

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "edgepoly/graph.hpp"
#include "edgepoly/lp.hpp"
#include "edgepoly/polytope.hpp"
#include "json.hpp"

namespace edgepoly {

/// Univariate polynomial in m with exact rational coefficients; coeffs[k]
/// multiplies m^k. The zero polynomial has no coefficients.
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(std::vector<Rational> coeffs);
  static UniPoly constant(Rational c);
  /// The polynomial m + shift.
  static UniPoly linear(Rational shift);

  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  Rational leading() const;
  Rational operator()(const Rational& m) const;

  UniPoly operator+(const UniPoly& other) const;
  UniPoly operator*(const UniPoly& other) const;
  UniPoly operator*(const Rational& scale) const;

  friend bool operator==(const UniPoly&, const UniPoly&) = default;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

/// binom(m + shift, k) = (m+shift)(m+shift-1)...(m+shift-k+1) / k!.
UniPoly binomial_poly(long shift, long k);

std::string to_string(const UniPoly& p);
/// {"coeffs": ["num/den", ...], "degree": D}.
nlohmann::json unipoly_json(const UniPoly& p);

enum class SimpleFamily { Alpha, Beta, Gamma };

/// alpha: p = |V1|, q = |V2|. beta: p, q = sides of the loopless part.
/// gamma: p = number of loops, d = number of vertices.
struct FamilyParams {
  SimpleFamily family = SimpleFamily::Alpha;
  long p = 0;
  long q = 0;
  long d = 0;
};

/// Throws UnsupportedError unless c is SimpleAlpha, SimpleBeta or SimpleGamma.
FamilyParams family_params(const Classification& c, int num_vertices);

/// alpha: C(p+m-1,p-1) C(q+m-1,q-1); beta: C(p+m,p) C(q+m,q);
/// gamma: sum_{j=1..p} C(j+m-2,j-1) C(d-j+m,d-j).
UniPoly ehrhart_closed_form(const FamilyParams& params);

/// alpha: C(p+q-2,p-1); beta: C(p+q,p); gamma: sum_{j=1..p} C(d-1,j-1).
Integer normalized_volume(const FamilyParams& params);

/// dim! times the leading coefficient. Throws ContractError if the result
/// is not an integer or the degree does not match.
Integer volume_from_polynomial(const UniPoly& p, int dim);

/// Unique polynomial of degree <= degree through the samples (m, count).
/// Throws ContractError with fewer than degree + 1 distinct samples or if
/// the samples do not fit a polynomial of that degree.
UniPoly ehrhart_interpolate(std::span<const std::pair<long, Integer>> samples, int degree);

/// Number of products x_{i1 j1} ... x_{im jm} of edge variables with
/// i1 <= ... <= im <= j1 <= ... <= jm in the standard labeling. Requires an
/// alpha, beta or gamma graph.
Integer count_sorted_monomials(const Graph& g, long m);

}  // namespace edgepoly
