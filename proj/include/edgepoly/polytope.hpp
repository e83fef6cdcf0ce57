#pragma once

#include <string>
#include <variant>
#include <vector>

#include "edgepoly/graph.hpp"
#include "edgepoly/point.hpp"
#include "json.hpp"

namespace edgepoly {

/// rho({i,j}) = e_i + e_j; a loop {i,i} maps to 2 e_i.
LatticePoint rho(const Edge& e, int d);

/// The edge polytope conv(rho(E(G))) described combinatorially.
struct EdgePolytope {
  Graph source;
  std::vector<LatticePoint> points;  // indexed like source.edges()
  std::vector<bool> vertex_flags;
  int dim = 0;
  std::vector<int> component_dims;  // aligned with connected_components()

  std::size_t num_vertices() const;
};
EdgePolytope edge_polytope(const Graph& g);

/// rho(e) is a vertex unless e joins two looped vertices.
bool is_vertex(const Graph& g, const Edge& e);

/// Whether conv{rho(e), rho(f)} is an edge of the polytope, by the five-case
/// adjacency rule for edge polytopes. Throws ContractError if e == f, either
/// is not an edge of g, or either image is not a vertex.
bool is_polytope_edge(const Graph& g, const Edge& e, const Edge& f);

/// Number of polytope edges at the vertex rho(e).
int vertex_polytope_degree(const Graph& g, const Edge& e);

struct DimensionReport {
  int total = 0;
  std::vector<int> per_component;
};
/// |V| - r' - 1 where r' counts the components without an odd cycle.
DimensionReport polytope_dimension(const Graph& g);
int polytope_dim(const Graph& g);

/// Every component of the reduced graph has at most one cycle and every
/// cycle there is odd.
bool is_simplex(const Graph& g);

struct NotSimple {
  friend bool operator==(const NotSimple&, const NotSimple&) = default;
};
struct Simplex {
  bool smooth = false;
  friend bool operator==(const Simplex&, const Simplex&) = default;
};
/// Complete bipartite with both sides of size >= 2.
struct SimpleAlpha {
  VertexSet v1, v2;
  friend bool operator==(const SimpleAlpha&, const SimpleAlpha&) = default;
};
/// One loop, at a vertex joined to every other vertex; the loopless part is
/// complete bipartite on v1 and v2.
struct SimpleBeta {
  Vertex loop_vertex = 0;
  VertexSet v1, v2;
  friend bool operator==(const SimpleBeta&, const SimpleBeta&) = default;
};
/// At least two loops, loopless part w is edgeless and every looped vertex
/// is joined to all of w.
struct SimpleGamma {
  VertexSet loop_set, w;
  friend bool operator==(const SimpleGamma&, const SimpleGamma&) = default;
};

using Classification = std::variant<NotSimple, Simplex, SimpleAlpha, SimpleBeta, SimpleGamma>;

Classification classify(const Graph& g);

std::string tag_name(const Classification& c);
/// Simple but not a simplex (alpha, beta or gamma).
bool is_simple_non_simplex(const Classification& c);

/// {"tag", "witness", "dim", "num_vertices"}, vertices 1-based.
nlohmann::json classification_json(const Graph& g, const Classification& c);

}  // namespace edgepoly
