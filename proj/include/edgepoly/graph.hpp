#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

namespace edgepoly {

/// Vertices are labeled 1..d everywhere in the public API.
using Vertex = int;
using VertexSet = std::vector<Vertex>;

/// Unordered pair {i, j}, stored with i <= j. i == j encodes a loop.
struct Edge {
  Vertex i = 0;
  Vertex j = 0;

  Edge() = default;
  Edge(Vertex a, Vertex b) : i(a < b ? a : b), j(a < b ? b : a) {}

  bool is_loop() const { return i == j; }
  bool contains(Vertex v) const { return i == v || j == v; }
  /// The endpoint opposite to v; v itself for a loop.
  Vertex other(Vertex v) const { return i == v ? j : i; }

  auto operator<=>(const Edge&) const = default;
};

/// Finite simple graph with loops on vertices 1..d. Edges are kept sorted,
/// so edge indices are canonical for a given edge set.
///
/// Construction rejects out-of-range endpoints and duplicate edges. The
/// isolated-vertex and loop-closure invariants are checked separately by
/// validate_graph(), because derived graphs (the reduced graph, induced
/// subgraphs) legitimately break them.
class Graph {
 public:
  Graph() = default;
  Graph(int num_vertices, std::vector<Edge> edges);

  int num_vertices() const { return d_; }
  std::size_t num_edges() const { return edges_.size(); }
  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(std::size_t index) const { return edges_[index]; }

  bool has_edge(Vertex a, Vertex b) const;
  bool has_loop(Vertex v) const { return has_edge(v, v); }
  std::optional<std::size_t> edge_index(Vertex a, Vertex b) const;

  /// Loops contribute 2.
  int degree(Vertex v) const;
  /// Indices of the edges meeting v.
  const std::vector<std::size_t>& incident(Vertex v) const {
    return incident_[v - 1];
  }
  VertexSet loop_vertices() const;
  std::size_t num_loops() const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.d_ == b.d_ && a.edges_ == b.edges_;
  }

 private:
  int d_ = 0;
  std::vector<Edge> edges_;
  // d*d table of edge index + 1, 0 meaning absent.
  std::vector<std::size_t> index_;
  std::vector<std::vector<std::size_t>> incident_;
};

/// Throws InputError if a vertex is isolated or two looped vertices are not
/// joined by an edge.
void validate_graph(const Graph& g);

/// Parses either the JSON form {"d": n, "edges": [[i,j], ...]} or the text
/// form ("d n" followed by "i j" lines) and validates the result.
Graph parse_graph(std::string_view text);

/// Drops every non-loop edge whose endpoints both carry loops. The edge
/// polytope is unchanged; vertices may become isolated.
Graph reduced_graph(const Graph& g);

/// Components as sorted vertex sets, ordered by smallest member.
std::vector<VertexSet> connected_components(const Graph& g);

/// True iff the component is not bipartite; a loop is an odd cycle.
bool has_odd_cycle(const Graph& g, const VertexSet& component);

struct CycleCensus {
  bool at_most_one_cycle = true;
  bool all_cycles_odd = true;
};
CycleCensus cycle_census(const Graph& g, const VertexSet& component);

struct InducedSubgraph {
  Graph graph;                 // relabeled to 1..|w|
  std::vector<Vertex> parent;  // parent[k-1] is the original label of k
};
InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& w);

struct LooplessPart {
  VertexSet w;  // vertices without a loop
  InducedSubgraph induced;
};
LooplessPart loopless_part(const Graph& g);

struct Bipartition {
  VertexSet first;   // side containing the smallest vertex
  VertexSet second;
  friend bool operator==(const Bipartition&, const Bipartition&) = default;
};
/// The bipartition of a connected, loop-free, complete bipartite graph with
/// at least one edge; nullopt otherwise. Vertices are g's own labels.
std::optional<Bipartition> is_complete_bipartite(const Graph& g);

/// Closed walk (e_1, ..., e_q) with e_k = {u_k, u_{k+1}} and u_{q+1} = u_1.
struct Walk {
  std::vector<std::size_t> edges;
  std::vector<Vertex> starts;  // u_1 .. u_q

  std::size_t length() const { return edges.size(); }
  bool is_even() const { return edges.size() % 2 == 0; }
  friend bool operator==(const Walk&, const Walk&) = default;
};

/// Checks consecutive incidence and closure.
bool is_closed_walk(const Graph& g, const Walk& w);

/// Lexicographically least rotation/reflection, compared on the edge
/// sequence first and the start vertices second.
Walk canonical_walk(const Walk& w);

/// Even closed walks of length <= max_len, one per rotation/reflection
/// class. A walk may pass through any vertex at most twice; every primitive
/// even closed walk (even cycle, two odd cycles glued at a vertex or joined
/// by a path) has that property, so the output still generates the toric
/// ideal. Output is sorted.
std::vector<Walk> enumerate_even_closed_walks(const Graph& g,
                                              std::size_t max_len);

}  // namespace edgepoly
