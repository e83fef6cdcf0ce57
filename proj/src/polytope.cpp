#include "edgepoly/polytope.hpp"

#include <algorithm>

#include "edgepoly/errors.hpp"

namespace edgepoly {

LatticePoint rho(const Edge& e, int d) {
  if (e.i < 1 || e.j > d) throw ContractError("rho: edge out of range");
  LatticePoint p{std::vector<int>(static_cast<std::size_t>(d), 0)};
  p.coords[e.i - 1] += 1;
  p.coords[e.j - 1] += 1;
  return p;
}

std::size_t EdgePolytope::num_vertices() const {
  return static_cast<std::size_t>(std::count(vertex_flags.begin(), vertex_flags.end(), true));
}

EdgePolytope edge_polytope(const Graph& g) {
  EdgePolytope p;
  p.source = g;
  for (const Edge& e : g.edges()) {
    p.points.push_back(rho(e, g.num_vertices()));
    p.vertex_flags.push_back(is_vertex(g, e));
  }
  DimensionReport dims = polytope_dimension(g);
  p.dim = dims.total;
  p.component_dims = std::move(dims.per_component);
  return p;
}

bool is_vertex(const Graph& g, const Edge& e) {
  return e.is_loop() || !(g.has_loop(e.i) && g.has_loop(e.j));
}

namespace {

void require_vertex_edge(const Graph& g, const Edge& e) {
  if (!g.has_edge(e.i, e.j)) throw ContractError("edge is not in the graph");
  if (!is_vertex(g, e)) {
    throw ContractError("rho({" + std::to_string(e.i) + "," + std::to_string(e.j) +
                        "}) is not a vertex of the edge polytope");
  }
}

}  // namespace

bool is_polytope_edge(const Graph& g, const Edge& e, const Edge& f) {
  if (e == f) throw ContractError("is_polytope_edge needs two distinct edges");
  require_vertex_edge(g, e);
  require_vertex_edge(g, f);

  if (e.is_loop() && f.is_loop()) return true;
  if (e.is_loop() || f.is_loop()) {
    const Edge& loop = e.is_loop() ? e : f;
    const Edge& other = e.is_loop() ? f : e;
    const Vertex k = loop.i;
    if (other.contains(k)) return true;
    return !g.has_edge(other.i, k) || !g.has_edge(other.j, k);
  }
  // Two proper edges.
  Vertex shared = 0;
  if (f.contains(e.i)) shared = e.i;
  else if (f.contains(e.j)) shared = e.j;
  if (shared != 0) {
    const Vertex i = e.other(shared);
    const Vertex k = f.other(shared);
    return !g.has_edge(i, k) || !g.has_loop(shared);
  }
  const VertexSet quad{e.i, e.j, f.i, f.j};
  const Graph sub = induced_subgraph(g, quad).graph;
  for (Vertex v = 1; v <= sub.num_vertices(); ++v)
    if (sub.degree(v) == 1) return true;
  return false;
}

int vertex_polytope_degree(const Graph& g, const Edge& e) {
  require_vertex_edge(g, e);
  int count = 0;
  for (const Edge& f : g.edges()) {
    if (f == e || !is_vertex(g, f)) continue;
    if (is_polytope_edge(g, e, f)) ++count;
  }
  return count;
}

DimensionReport polytope_dimension(const Graph& g) {
  DimensionReport report;
  int bipartite_components = 0;
  for (const VertexSet& comp : connected_components(g)) {
    const bool odd = has_odd_cycle(g, comp);
    if (!odd) ++bipartite_components;
    report.per_component.push_back(static_cast<int>(comp.size()) - (odd ? 1 : 2));
  }
  report.total = g.num_vertices() - bipartite_components - 1;
  return report;
}

int polytope_dim(const Graph& g) { return polytope_dimension(g).total; }

bool is_simplex(const Graph& g) {
  const Graph reduced = reduced_graph(g);
  for (const VertexSet& comp : connected_components(reduced)) {
    const CycleCensus census = cycle_census(reduced, comp);
    if (!census.at_most_one_cycle || !census.all_cycles_odd) return false;
  }
  return true;
}

namespace {

bool joined_to_all(const Graph& g, Vertex v, const VertexSet& targets) {
  return std::all_of(targets.begin(), targets.end(),
                     [&](Vertex t) { return g.has_edge(v, t); });
}

VertexSet lift(const VertexSet& local, const std::vector<Vertex>& parent) {
  VertexSet out;
  for (Vertex v : local) out.push_back(parent[v - 1]);
  std::sort(out.begin(), out.end());
  return out;
}

bool complete_looped(const Graph& g) {
  const auto d = static_cast<std::size_t>(g.num_vertices());
  return g.num_edges() == d * (d + 1) / 2;
}

}  // namespace

Classification classify(const Graph& g) {
  if (is_simplex(g)) {
    return Simplex{complete_looped(g) || g.num_loops() <= 1};
  }
  const LooplessPart part = loopless_part(g);
  if (part.w.empty()) return NotSimple{};
  const VertexSet loops = g.loop_vertices();
  const Graph& gprime = part.induced.graph;

  if (loops.empty()) {
    if (auto bip = is_complete_bipartite(g);
        bip && bip->first.size() >= 2 && bip->second.size() >= 2) {
      return SimpleAlpha{bip->first, bip->second};
    }
    return NotSimple{};
  }
  for (Vertex l : loops)
    if (!joined_to_all(g, l, part.w)) return NotSimple{};
  if (loops.size() == 1) {
    if (auto bip = is_complete_bipartite(gprime)) {
      return SimpleBeta{loops.front(), lift(bip->first, part.induced.parent),
                        lift(bip->second, part.induced.parent)};
    }
    return NotSimple{};
  }
  if (gprime.num_edges() == 0) return SimpleGamma{loops, part.w};
  return NotSimple{};
}

std::string tag_name(const Classification& c) {
  struct {
    std::string operator()(const NotSimple&) const { return "NotSimple"; }
    std::string operator()(const Simplex&) const { return "Simplex"; }
    std::string operator()(const SimpleAlpha&) const { return "SimpleAlpha"; }
    std::string operator()(const SimpleBeta&) const { return "SimpleBeta"; }
    std::string operator()(const SimpleGamma&) const { return "SimpleGamma"; }
  } visitor;
  return std::visit(visitor, c);
}

bool is_simple_non_simplex(const Classification& c) {
  return std::holds_alternative<SimpleAlpha>(c) || std::holds_alternative<SimpleBeta>(c) ||
         std::holds_alternative<SimpleGamma>(c);
}

nlohmann::json classification_json(const Graph& g, const Classification& c) {
  nlohmann::json witness = nlohmann::json::object();
  if (const auto* s = std::get_if<Simplex>(&c)) {
    witness["smooth"] = s->smooth;
  } else if (const auto* a = std::get_if<SimpleAlpha>(&c)) {
    witness["V1"] = a->v1;
    witness["V2"] = a->v2;
  } else if (const auto* b = std::get_if<SimpleBeta>(&c)) {
    witness["loop_vertex"] = b->loop_vertex;
    witness["V1"] = b->v1;
    witness["V2"] = b->v2;
  } else if (const auto* gm = std::get_if<SimpleGamma>(&c)) {
    witness["loop_set"] = gm->loop_set;
    witness["W"] = gm->w;
  }
  const EdgePolytope p = edge_polytope(g);
  return {{"tag", tag_name(c)},
          {"witness", witness},
          {"dim", p.dim},
          {"num_vertices", p.num_vertices()}};
}

}  // namespace edgepoly
