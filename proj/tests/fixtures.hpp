#pragma once

#include <initializer_list>
#include <random>
#include <utility>
#include <vector>

#include "edgepoly/graph.hpp"
#include "edgepoly/toric.hpp"

namespace edgepoly::testing {

inline Graph make_graph(int d, std::initializer_list<std::pair<int, int>> edges) {
  std::vector<Edge> out;
  for (auto [i, j] : edges) out.emplace_back(i, j);
  return Graph(d, std::move(out));
}

inline Graph k22() { return make_graph(4, {{1, 3}, {1, 4}, {2, 3}, {2, 4}}); }
inline Graph k23() {
  return make_graph(5, {{1, 3}, {1, 4}, {1, 5}, {2, 3}, {2, 4}, {2, 5}});
}
inline Graph k33() {
  return make_graph(6, {{1, 4}, {1, 5}, {1, 6}, {2, 4}, {2, 5}, {2, 6}, {3, 4}, {3, 5}, {3, 6}});
}
inline Graph triangle() { return make_graph(3, {{1, 2}, {2, 3}, {1, 3}}); }
inline Graph g1() { return make_graph(3, {{1, 1}, {1, 2}, {2, 2}, {1, 3}}); }
inline Graph g2() { return make_graph(4, {{1, 1}, {1, 2}, {2, 2}, {3, 4}}); }
inline Graph two_loops() { return make_graph(2, {{1, 1}, {2, 2}, {1, 2}}); }
inline Graph gamma3() { return make_graph(3, {{1, 1}, {2, 2}, {1, 2}, {1, 3}, {2, 3}}); }
inline Graph beta3() { return make_graph(3, {{1, 1}, {1, 2}, {1, 3}, {2, 3}}); }

/// Product of the given edge variables of g (repeats allowed).
inline Monomial mono(const Graph& g, std::initializer_list<std::pair<int, int>> vars) {
  Monomial m(g.num_edges());
  for (auto [i, j] : vars) m[*g.edge_index(i, j)] += 1;
  return m;
}

inline Binomial binom(const Graph& g, std::initializer_list<std::pair<int, int>> plus,
                      std::initializer_list<std::pair<int, int>> minus) {
  return {mono(g, plus), mono(g, minus)};
}

/// Relabels vertices by perm (perm[v-1] is the new label of v).
inline Graph relabel(const Graph& g, const std::vector<int>& perm) {
  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) edges.emplace_back(perm[e.i - 1], perm[e.j - 1]);
  return Graph(g.num_vertices(), std::move(edges));
}

inline std::vector<int> random_permutation(int d, std::mt19937_64& rng) {
  std::vector<int> perm(static_cast<std::size_t>(d));
  for (int k = 0; k < d; ++k) perm[k] = k + 1;
  std::shuffle(perm.begin(), perm.end(), rng);
  return perm;
}

}  // namespace edgepoly::testing
