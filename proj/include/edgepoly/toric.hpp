#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "edgepoly/graph.hpp"
#include "edgepoly/polytope.hpp"
#include "json.hpp"

namespace edgepoly {

/// Exponent vector over the variables x_e, one per edge index of a graph.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::size_t num_vars) : exps_(num_vars, 0) {}

  std::size_t num_vars() const { return exps_.size(); }
  unsigned operator[](std::size_t var) const { return exps_[var]; }
  unsigned& operator[](std::size_t var) { return exps_[var]; }
  unsigned degree() const;
  bool is_one() const { return degree() == 0; }
  bool is_squarefree() const;

  bool divides(const Monomial& other) const;
  Monomial operator*(const Monomial& other) const;
  /// Exact quotient; requires divisor.divides(*this).
  Monomial operator/(const Monomial& divisor) const;
  static Monomial lcm(const Monomial& a, const Monomial& b);
  static Monomial gcd(const Monomial& a, const Monomial& b);

  friend bool operator==(const Monomial&, const Monomial&) = default;
  friend auto operator<=>(const Monomial&, const Monomial&) = default;

 private:
  std::vector<unsigned> exps_;
};

/// The polynomial plus - minus. Walk binomials and generators are kept with
/// no variable common to both sides; intermediate results of reduction may
/// share variables.
struct Binomial {
  Monomial plus;
  Monomial minus;
  friend bool operator==(const Binomial&, const Binomial&) = default;
  friend auto operator<=>(const Binomial&, const Binomial&) = default;
};

/// Lexicographic order on monomials induced by a total order on variables.
/// Vertices are first relabeled; then every loop variable exceeds every
/// non-loop one, non-loops compare as x_ij < x_kl iff i < k or (i == k and
/// j > l), and loops as x_ii < x_kk iff i < k.
class MonomialOrder {
 public:
  /// internal_label[v-1] is the label vertex v receives before comparison.
  MonomialOrder(const Graph& g, std::vector<Vertex> internal_label);

  std::strong_ordering compare(const Monomial& a, const Monomial& b) const;
  bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }
  /// Variables (edge indices) from largest to smallest.
  const std::vector<std::size_t>& descending() const { return descending_; }
  const std::vector<Vertex>& internal_label() const { return internal_label_; }

 private:
  std::vector<Vertex> internal_label_;
  std::vector<std::size_t> descending_;
};

/// Vertex relabeling that puts the graph in the arrangement the quadratic
/// basis is stated for: looped vertices first, then the bipartition blocks
/// in order (alpha: V1 then V2; beta: loop, V1, V2; gamma: loops then W).
/// Identity when the classification gives no arrangement.
std::vector<Vertex> standard_labeling(const Graph& g, const Classification& c);

/// Lex order under standard_labeling(g, classify(g)).
MonomialOrder default_order(const Graph& g);

/// lex comparison under default_order(g).
std::strong_ordering lex_cmp(const Graph& g, const Monomial& a, const Monomial& b);

/// f = prod of odd-position variables - prod of even-position variables,
/// common factors cancelled; nullopt for a trivial walk. Throws
/// ContractError for odd or non-closed walks.
std::optional<Binomial> walk_binomial(const Graph& g, const Walk& w);

/// Orients b so that plus is the larger side.
Binomial orient(Binomial b, const MonomialOrder& order);

/// Distinct nonzero walk binomials of all even closed walks up to length
/// 2|E|, oriented under `order`, sorted. Binomials whose two sides are
/// multiples of the two sides of a lower-degree one are dropped; the result
/// still generates the toric ideal.
std::vector<Binomial> generators(const Graph& g, const MonomialOrder& order);
std::vector<Binomial> generators(const Graph& g);

struct GroebnerBasis {
  MonomialOrder order;
  std::vector<Binomial> elements;  // initial monomial first
  bool simplex_case = false;
};

/// The explicit quadratic basis: the sorting binomials
///   x_ij x_kl - x_ik x_jl  (i <= j < k <= l),
///   x_il x_jk - x_ik x_jl  (i < j <= k < l)
/// in the standard labeling, restricted to variables of g (alpha/beta/gamma),
/// or taken over the looped vertices only (simplex with >= 2 loops).
/// Throws ZeroIdealError when the ideal is zero and UnsupportedError for
/// graphs whose edge polytope is not simple.
GroebnerBasis groebner_basis(const Graph& g);

/// Normal form of b modulo basis (elements oriented initial-first). Always
/// rewrites the larger reducible monomial, using the first basis element
/// whose initial divides it. nullopt when the remainder is zero.
std::optional<Binomial> reduce(const Binomial& b, const std::vector<Binomial>& basis,
                               const MonomialOrder& order);

/// S-polynomial of two initial-first binomials.
Binomial s_polynomial(const Binomial& f, const Binomial& g);

/// True iff every element is oriented initial-first under `order` and every
/// S-polynomial reduces to zero.
bool buchberger_verify(const std::vector<Binomial>& basis, const MonomialOrder& order);

/// Both sides have the same image t^a under x_ij -> t_i t_j.
bool kernel_check(const Binomial& b, const Graph& g);

/// "x_{i,j}^e * ..." with user labels; "1" for the empty monomial.
std::string to_string(const Monomial& m, const Graph& g);
std::string to_string(const Binomial& b, const Graph& g);

/// {"plus": [["i,j", exp], ...], "minus": [...]}.
nlohmann::json binomial_json(const Binomial& b, const Graph& g);
/// Order description echoed next to a basis.
nlohmann::json order_json(const MonomialOrder& order, const Graph& g);

}  // namespace edgepoly
