#include "edgepoly/graph.hpp"

#include <array>
#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <sstream>
#include <string>

#include "edgepoly/errors.hpp"
#include "json.hpp"

namespace edgepoly {

namespace {

std::string pair_str(Vertex i, Vertex j) {
  return "{" + std::to_string(i) + "," + std::to_string(j) + "}";
}

}  // namespace

Graph::Graph(int num_vertices, std::vector<Edge> edges)
    : d_(num_vertices), edges_(std::move(edges)) {
  if (d_ < 0) throw InputError("vertex count must be nonnegative");
  for (const Edge& e : edges_) {
    if (e.i < 1 || e.j > d_) {
      throw InputError("vertex index out of range 1.." + std::to_string(d_) +
                       " in edge " + pair_str(e.i, e.j));
    }
  }
  std::sort(edges_.begin(), edges_.end());
  auto dup = std::adjacent_find(edges_.begin(), edges_.end());
  if (dup != edges_.end()) {
    throw InputError("duplicate edge " + pair_str(dup->i, dup->j));
  }
  const auto n = static_cast<std::size_t>(d_);
  index_.assign(n * n, 0);
  incident_.assign(n, {});
  for (std::size_t k = 0; k < edges_.size(); ++k) {
    const Edge& e = edges_[k];
    index_[(e.i - 1) * n + (e.j - 1)] = k + 1;
    index_[(e.j - 1) * n + (e.i - 1)] = k + 1;
    incident_[e.i - 1].push_back(k);
    if (!e.is_loop()) incident_[e.j - 1].push_back(k);
  }
}

bool Graph::has_edge(Vertex a, Vertex b) const {
  return edge_index(a, b).has_value();
}

std::optional<std::size_t> Graph::edge_index(Vertex a, Vertex b) const {
  if (a < 1 || b < 1 || a > d_ || b > d_) return std::nullopt;
  std::size_t slot = index_[(a - 1) * static_cast<std::size_t>(d_) + (b - 1)];
  if (slot == 0) return std::nullopt;
  return slot - 1;
}

int Graph::degree(Vertex v) const {
  int deg = 0;
  for (std::size_t k : incident(v)) deg += edges_[k].is_loop() ? 2 : 1;
  return deg;
}

VertexSet Graph::loop_vertices() const {
  VertexSet out;
  for (const Edge& e : edges_)
    if (e.is_loop()) out.push_back(e.i);
  return out;
}

std::size_t Graph::num_loops() const {
  return static_cast<std::size_t>(std::count_if(
      edges_.begin(), edges_.end(), [](const Edge& e) { return e.is_loop(); }));
}

void validate_graph(const Graph& g) {
  if (g.num_vertices() < 1) throw InputError("graph needs at least one vertex");
  for (Vertex v = 1; v <= g.num_vertices(); ++v) {
    if (g.incident(v).empty()) {
      throw InputError("isolated vertex " + std::to_string(v));
    }
  }
  const VertexSet loops = g.loop_vertices();
  for (std::size_t a = 0; a < loops.size(); ++a) {
    for (std::size_t b = a + 1; b < loops.size(); ++b) {
      if (!g.has_edge(loops[a], loops[b])) {
        throw InputError("condition (*) violated: loops at " +
                         std::to_string(loops[a]) + " and " +
                         std::to_string(loops[b]) + " but edge " +
                         pair_str(loops[a], loops[b]) + " missing");
      }
    }
  }
}

namespace {

Graph parse_json_graph(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError(std::string("malformed JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("d") || !doc.contains("edges")) {
    throw InputError("graph JSON must be an object with \"d\" and \"edges\"");
  }
  if (!doc["d"].is_number_integer() || doc["d"].get<long long>() < 1) {
    throw InputError("\"d\" must be an integer >= 1");
  }
  const auto d = doc["d"].get<long long>();
  if (d > 1'000'000) throw InputError("\"d\" is unreasonably large");
  if (!doc["edges"].is_array()) throw InputError("\"edges\" must be an array");
  std::vector<Edge> edges;
  for (const auto& pair : doc["edges"]) {
    if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number_integer() ||
        !pair[1].is_number_integer()) {
      throw InputError("each edge must be a pair of integers");
    }
    const auto i = pair[0].get<long long>();
    const auto j = pair[1].get<long long>();
    if (i < 1 || j < 1 || i > d || j > d) {
      throw InputError("vertex index out of range 1.." + std::to_string(d) +
                       " in edge [" + std::to_string(i) + "," +
                       std::to_string(j) + "]");
    }
    edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(j));
  }
  return Graph(static_cast<int>(d), std::move(edges));
}

Graph parse_text_graph(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::optional<int> d;
  std::vector<Edge> edges;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string first;
    if (!(ls >> first)) continue;
    const auto fail = [&] {
      return InputError("cannot parse line " + std::to_string(line_no) +
                        ": \"" + line + "\"");
    };
    if (!d) {
      int value = 0;
      if (first != "d" || !(ls >> value) || value < 1) throw fail();
      d = value;
      continue;
    }
    long long i = 0, j = 0;
    try {
      std::size_t used = 0;
      i = std::stoll(first, &used);
      if (used != first.size()) throw fail();
    } catch (const std::logic_error&) {
      throw fail();
    }
    std::string rest;
    if (!(ls >> j) || (ls >> rest)) throw fail();
    if (i < 1 || j < 1 || i > *d || j > *d) {
      throw InputError("vertex index out of range 1.." + std::to_string(*d) +
                       " on line " + std::to_string(line_no));
    }
    edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(j));
  }
  if (!d) throw InputError("empty graph document");
  return Graph(*d, std::move(edges));
}

}  // namespace

Graph parse_graph(std::string_view text) {
  auto start = text.find_first_not_of(" \t\r\n");
  if (start == std::string_view::npos) throw InputError("empty graph document");
  Graph g = text[start] == '{' ? parse_json_graph(text) : parse_text_graph(text);
  validate_graph(g);
  return g;
}

Graph reduced_graph(const Graph& g) {
  std::vector<Edge> kept;
  for (const Edge& e : g.edges()) {
    if (!e.is_loop() && g.has_loop(e.i) && g.has_loop(e.j)) continue;
    kept.push_back(e);
  }
  return Graph(g.num_vertices(), std::move(kept));
}

std::vector<VertexSet> connected_components(const Graph& g) {
  const int d = g.num_vertices();
  std::vector<int> comp(d, -1);
  std::vector<VertexSet> out;
  for (Vertex s = 1; s <= d; ++s) {
    if (comp[s - 1] >= 0) continue;
    const int id = static_cast<int>(out.size());
    VertexSet members{s};
    comp[s - 1] = id;
    for (std::size_t head = 0; head < members.size(); ++head) {
      const Vertex v = members[head];
      for (std::size_t k : g.incident(v)) {
        const Vertex u = g.edge(k).other(v);
        if (comp[u - 1] < 0) {
          comp[u - 1] = id;
          members.push_back(u);
        }
      }
    }
    std::sort(members.begin(), members.end());
    out.push_back(std::move(members));
  }
  return out;
}

namespace {

std::size_t component_edge_count(const Graph& g, const VertexSet& component) {
  std::size_t count = 0;
  for (Vertex v : component)
    for (std::size_t k : g.incident(v))
      if (g.edge(k).i == v) ++count;  // count each edge at its smaller end
  return count;
}

}  // namespace

bool has_odd_cycle(const Graph& g, const VertexSet& component) {
  std::vector<int> color(g.num_vertices(), -1);
  for (Vertex s : component) {
    if (color[s - 1] >= 0) continue;
    color[s - 1] = 0;
    std::vector<Vertex> stack{s};
    while (!stack.empty()) {
      const Vertex v = stack.back();
      stack.pop_back();
      for (std::size_t k : g.incident(v)) {
        const Vertex u = g.edge(k).other(v);
        if (color[u - 1] < 0) {
          color[u - 1] = 1 - color[v - 1];
          stack.push_back(u);
        } else if (color[u - 1] == color[v - 1]) {
          return true;  // includes loops, where u == v
        }
      }
    }
  }
  return false;
}

CycleCensus cycle_census(const Graph& g, const VertexSet& component) {
  CycleCensus census;
  const std::size_t num_edges = component_edge_count(g, component);
  census.at_most_one_cycle = num_edges <= component.size();
  if (num_edges < component.size()) return census;  // a tree
  if (census.at_most_one_cycle) {
    census.all_cycles_odd = has_odd_cycle(g, component);
    return census;
  }
  // Several cycles: all are odd iff every block with a cycle is itself an
  // odd cycle. Loops are their own blocks. Tarjan's biconnected components
  // over the non-loop edges.
  const int d = g.num_vertices();
  std::vector<int> disc(d, -1), low(d, 0);
  std::vector<std::size_t> edge_stack;
  int timer = 0;
  bool all_odd = true;
  std::function<void(Vertex, std::optional<std::size_t>)> dfs =
      [&](Vertex v, std::optional<std::size_t> via) {
        disc[v - 1] = low[v - 1] = timer++;
        for (std::size_t k : g.incident(v)) {
          const Edge& e = g.edge(k);
          if (e.is_loop() || k == via) continue;
          const Vertex u = e.other(v);
          if (disc[u - 1] < 0) {
            edge_stack.push_back(k);
            dfs(u, k);
            low[v - 1] = std::min(low[v - 1], low[u - 1]);
            if (low[u - 1] >= disc[v - 1]) {
              std::set<Vertex> block_vertices;
              std::size_t block_edges = 0;
              while (true) {
                const std::size_t top = edge_stack.back();
                edge_stack.pop_back();
                ++block_edges;
                block_vertices.insert(g.edge(top).i);
                block_vertices.insert(g.edge(top).j);
                if (top == k) break;
              }
              if (block_edges > 1 &&
                  (block_edges != block_vertices.size() || block_edges % 2 == 0))
                all_odd = false;
            }
          } else if (disc[u - 1] < disc[v - 1]) {
            edge_stack.push_back(k);
            low[v - 1] = std::min(low[v - 1], disc[u - 1]);
          }
        }
      };
  dfs(component.front(), std::nullopt);
  census.all_cycles_odd = all_odd;
  return census;
}

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& w) {
  VertexSet sorted = w;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  std::vector<int> local(g.num_vertices() + 1, 0);
  for (std::size_t k = 0; k < sorted.size(); ++k) {
    if (sorted[k] < 1 || sorted[k] > g.num_vertices()) {
      throw ContractError("induced_subgraph: vertex out of range");
    }
    local[sorted[k]] = static_cast<int>(k) + 1;
  }
  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) {
    if (local[e.i] > 0 && local[e.j] > 0) edges.emplace_back(local[e.i], local[e.j]);
  }
  return {Graph(static_cast<int>(sorted.size()), std::move(edges)), sorted};
}

LooplessPart loopless_part(const Graph& g) {
  VertexSet w;
  for (Vertex v = 1; v <= g.num_vertices(); ++v)
    if (!g.has_loop(v)) w.push_back(v);
  InducedSubgraph induced = induced_subgraph(g, w);
  return {std::move(w), std::move(induced)};
}

std::optional<Bipartition> is_complete_bipartite(const Graph& g) {
  const int d = g.num_vertices();
  if (d < 2 || g.num_edges() == 0 || g.num_loops() > 0) return std::nullopt;
  std::vector<int> side(d, -1);
  side[0] = 0;
  std::vector<Vertex> queue{1};
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const Vertex v = queue[head];
    for (std::size_t k : g.incident(v)) {
      const Vertex u = g.edge(k).other(v);
      if (side[u - 1] < 0) {
        side[u - 1] = 1 - side[v - 1];
        queue.push_back(u);
      } else if (side[u - 1] == side[v - 1]) {
        return std::nullopt;
      }
    }
  }
  if (queue.size() != static_cast<std::size_t>(d)) return std::nullopt;
  Bipartition parts;
  for (Vertex v = 1; v <= d; ++v)
    (side[v - 1] == 0 ? parts.first : parts.second).push_back(v);
  if (g.num_edges() != parts.first.size() * parts.second.size()) return std::nullopt;
  return parts;
}

bool is_closed_walk(const Graph& g, const Walk& w) {
  if (w.edges.empty() || w.edges.size() != w.starts.size()) return false;
  const std::size_t q = w.edges.size();
  for (std::size_t k = 0; k < q; ++k) {
    if (w.edges[k] >= g.num_edges()) return false;
    const Edge& e = g.edge(w.edges[k]);
    const Vertex next = w.starts[(k + 1) % q];
    if (!e.contains(w.starts[k]) || e.other(w.starts[k]) != next) return false;
  }
  return true;
}

Walk canonical_walk(const Walk& w) {
  const std::size_t q = w.edges.size();
  Walk best = w;
  Walk reversed;
  reversed.edges.assign(w.edges.rbegin(), w.edges.rend());
  reversed.starts.resize(q);
  // Walking backwards from u_1: the k-th step leaves the end of e_{q-k+1}.
  for (std::size_t k = 0; k < q; ++k) reversed.starts[k] = w.starts[(q - k) % q];
  for (const Walk* base : std::array<const Walk*, 2>{&w, &reversed}) {
    for (std::size_t r = 0; r < q; ++r) {
      Walk cand;
      cand.edges.resize(q);
      cand.starts.resize(q);
      for (std::size_t k = 0; k < q; ++k) {
        cand.edges[k] = base->edges[(k + r) % q];
        cand.starts[k] = base->starts[(k + r) % q];
      }
      if (std::tie(cand.edges, cand.starts) < std::tie(best.edges, best.starts))
        best = std::move(cand);
    }
  }
  return best;
}

std::vector<Walk> enumerate_even_closed_walks(const Graph& g, std::size_t max_len) {
  std::set<std::pair<std::vector<std::size_t>, std::vector<Vertex>>> seen;
  std::vector<Walk> out;
  std::vector<int> visits(g.num_vertices() + 1, 0);
  Walk current;

  // Every walk is enumerated starting at its smallest edge index, in both
  // orientations; canonical_walk folds the remaining symmetry.
  std::function<void(std::size_t, Vertex, Vertex)> extend =
      [&](std::size_t min_edge, Vertex start, Vertex at) {
        const std::size_t len = current.edges.size();
        if (at == start && len % 2 == 0) {
          Walk canon = canonical_walk(current);
          if (seen.emplace(canon.edges, canon.starts).second) out.push_back(std::move(canon));
        }
        if (len >= max_len) return;
        if (visits[at] >= 2) return;
        for (std::size_t k : g.incident(at)) {
          if (k < min_edge) continue;
          const Vertex next = g.edge(k).other(at);
          ++visits[at];
          current.edges.push_back(k);
          current.starts.push_back(at);
          extend(min_edge, start, next);
          current.edges.pop_back();
          current.starts.pop_back();
          --visits[at];
        }
      };

  for (std::size_t k0 = 0; k0 < g.num_edges(); ++k0) {
    const Edge& e = g.edge(k0);
    for (Vertex from : {e.i, e.j}) {
      const Vertex to = e.other(from);
      ++visits[from];
      current.edges.assign(1, k0);
      current.starts.assign(1, from);
      extend(k0, from, to);
      --visits[from];
      if (e.is_loop()) break;
    }
  }
  std::sort(out.begin(), out.end(), [](const Walk& a, const Walk& b) {
    return std::tie(a.edges, a.starts) < std::tie(b.edges, b.starts);
  });
  return out;
}

}  // namespace edgepoly
