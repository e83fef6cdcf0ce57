#include "edgepoly/verify.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <random>
#include <thread>

#include "edgepoly/ehrhart.hpp"
#include "edgepoly/errors.hpp"
#include "edgepoly/oracle.hpp"
#include "edgepoly/polytope.hpp"
#include "edgepoly/toric.hpp"

namespace edgepoly {

namespace {

nlohmann::json edge_json(const Edge& e) { return nlohmann::json::array({e.i, e.j}); }

std::string rational_str(const Rational& r) {
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

CheckResult check_vertices(const Graph& g, const EdgePolytope& p, const HullSkeleton& s) {
  CheckResult r;
  r.name = "vertexhood";
  for (std::size_t k = 0; k < g.num_edges(); ++k) {
    if (p.vertex_flags[k] != s.is_vertex[k]) {
      r.pass = false;
      r.counterexample = {{"edge", edge_json(g.edge(k))},
                          {"combinatorial", static_cast<bool>(p.vertex_flags[k])},
                          {"oracle", static_cast<bool>(s.is_vertex[k])}};
      return r;
    }
  }
  r.detail["num_vertices"] = p.num_vertices();
  return r;
}

CheckResult check_edges(const Graph& g, const EdgePolytope& p, const HullSkeleton& s) {
  CheckResult r;
  r.name = "edgehood";
  std::size_t pairs = 0, edges = 0;
  for (std::size_t a = 0; a < g.num_edges(); ++a) {
    if (!p.vertex_flags[a] || !s.is_vertex[a]) continue;
    for (std::size_t b = a + 1; b < g.num_edges(); ++b) {
      if (!p.vertex_flags[b] || !s.is_vertex[b]) continue;
      ++pairs;
      const bool comb = is_polytope_edge(g, g.edge(a), g.edge(b));
      const auto& nb = s.neighbors[a];
      const bool oracle = std::binary_search(nb.begin(), nb.end(), b);
      if (comb) ++edges;
      if (comb != oracle) {
        r.pass = false;
        r.counterexample = {{"pair", {edge_json(g.edge(a)), edge_json(g.edge(b))}},
                            {"combinatorial", comb},
                            {"oracle", oracle}};
        return r;
      }
    }
  }
  r.detail = {{"vertex_pairs", pairs}, {"polytope_edges", edges}};
  return r;
}

CheckResult check_dimension(const EdgePolytope& p, const HullSkeleton& s) {
  CheckResult r;
  r.name = "dimension";
  r.detail = {{"combinatorial", p.dim}, {"oracle", s.dim}};
  if (p.dim != s.dim) {
    r.pass = false;
    r.counterexample = r.detail;
  }
  return r;
}

CheckResult check_simplicity(const Graph& g, const Classification& c, const EdgePolytope& p,
                             const HullSkeleton& s) {
  CheckResult r;
  r.name = "simplicity";
  const bool oracle_simplex = s.is_simplex();
  const bool oracle_simple = s.is_simple();
  const bool comb_simplex = std::holds_alternative<Simplex>(c);
  const bool comb_simple = is_simple_non_simplex(c);
  r.detail = {{"oracle_simplex", oracle_simplex},
              {"oracle_simple", oracle_simple},
              {"tag", tag_name(c)}};
  if (comb_simplex != oracle_simplex || comb_simplex != is_simplex(g)) {
    r.pass = false;
    r.counterexample = {{"kind", "simplex"}, {"combinatorial", comb_simplex}, {"oracle", oracle_simplex}};
    return r;
  }
  if (comb_simple != (oracle_simple && !oracle_simplex)) {
    r.pass = false;
    r.counterexample = {{"kind", "simple_non_simplex"},
                        {"combinatorial", comb_simple},
                        {"oracle", oracle_simple && !oracle_simplex}};
    return r;
  }
  if (comb_simple) {
    for (std::size_t k = 0; k < g.num_edges(); ++k) {
      if (!p.vertex_flags[k]) continue;
      const int degree = vertex_polytope_degree(g, g.edge(k));
      if (degree != p.dim) {
        r.pass = false;
        r.counterexample = {{"kind", "vertex_degree"}, {"edge", edge_json(g.edge(k))},
                            {"degree", degree}, {"dim", p.dim}};
        return r;
      }
    }
  }
  return r;
}

// Smoothness is judged against two lattices: Z^d within the span, and the
// lattice generated by the points. They agree on connected graphs, which
// covers every simple non-simplex case; the simplex criterion holds for the
// generated lattice only (two disjoint triangles are an empty simplex of
// normalized volume 2 with respect to Z^d).
CheckResult check_smoothness(std::span<const LatticePoint> points, const Classification& c,
                             const HullSkeleton& s) {
  CheckResult r;
  r.name = "smoothness";
  const bool simple = s.is_simple();
  const bool saturated = simple && oracle_is_smooth(points, s, SmoothLattice::Saturated);
  const bool generated = simple && oracle_is_smooth(points, s, SmoothLattice::Generated);
  const auto* simplex = std::get_if<Simplex>(&c);
  const bool expected = simplex ? simplex->smooth : is_simple_non_simplex(c);
  r.detail = {{"combinatorial_smooth", expected},
              {"oracle_smooth_saturated", saturated},
              {"oracle_smooth_generated", generated}};
  const bool ok = simplex ? expected == generated : expected == saturated && saturated == generated;
  if (!ok) {
    r.pass = false;
    r.counterexample = r.detail;
  }
  return r;
}

CheckResult check_groebner(const Graph& g, const Classification& c) {
  CheckResult r;
  r.name = "groebner";
  const bool zero_expected = std::holds_alternative<Simplex>(c) && g.num_loops() < 2;
  if (std::holds_alternative<NotSimple>(c)) {
    r.applicable = false;
    return r;
  }
  if (zero_expected) {
    // Simplex with at most one loop: the ideal must be zero, i.e. every even
    // closed walk is trivial.
    const std::vector<Binomial> gens = generators(g);
    r.detail = {{"ideal", "zero"}, {"generators", gens.size()}};
    if (!gens.empty()) {
      r.pass = false;
      r.counterexample = {{"generator", binomial_json(gens.front(), g)}};
    }
    return r;
  }
  const GroebnerBasis gb = groebner_basis(g);
  const std::vector<Binomial> gens = generators(g, gb.order);
  bool all_quadratic = true, all_squarefree = true;
  for (const Binomial& b : gb.elements) {
    if (!kernel_check(b, g)) {
      r.pass = false;
      r.counterexample = {{"kind", "kernel"}, {"binomial", binomial_json(b, g)}};
      return r;
    }
    all_quadratic = all_quadratic && b.plus.degree() == 2 && b.minus.degree() == 2;
    all_squarefree = all_squarefree && b.plus.is_squarefree();
  }
  r.detail = {{"basis_size", gb.elements.size()},
              {"generators", gens.size()},
              {"all_quadratic", all_quadratic},
              {"initials_squarefree", all_squarefree},
              {"simplex_case", gb.simplex_case}};
  if (gb.elements.empty() || !all_quadratic || (!gb.simplex_case && !all_squarefree)) {
    r.pass = false;
    r.counterexample = {{"kind", "shape"}};
    return r;
  }
  for (const Binomial& b : gens) {
    if (!kernel_check(b, g)) {
      r.pass = false;
      r.counterexample = {{"kind", "kernel"}, {"binomial", binomial_json(b, g)}};
      return r;
    }
  }
  for (std::size_t a = 0; a < gb.elements.size(); ++a) {
    if (!gb.order.less(gb.elements[a].minus, gb.elements[a].plus)) {
      r.pass = false;
      r.counterexample = {{"kind", "orientation"}, {"binomial", binomial_json(gb.elements[a], g)}};
      return r;
    }
    for (std::size_t b = a + 1; b < gb.elements.size(); ++b) {
      const Binomial s = s_polynomial(gb.elements[a], gb.elements[b]);
      if (auto rem = reduce(s, gb.elements, gb.order)) {
        r.pass = false;
        r.counterexample = {{"kind", "s_pair"},
                            {"pair", {binomial_json(gb.elements[a], g), binomial_json(gb.elements[b], g)}},
                            {"remainder", binomial_json(*rem, g)}};
        return r;
      }
    }
  }
  for (const Binomial& b : gens) {
    if (auto rem = reduce(b, gb.elements, gb.order)) {
      r.pass = false;
      r.counterexample = {{"kind", "generator_not_in_ideal"},
                          {"generator", binomial_json(b, g)},
                          {"remainder", binomial_json(*rem, g)}};
      return r;
    }
  }
  return r;
}

CheckResult check_ehrhart(const Graph& g, const Classification& c, std::span<const LatticePoint> points,
                          int dim, long m_max) {
  CheckResult r;
  r.name = "ehrhart";
  m_max = std::min(m_max, kOracleMaxDilation);
  const HalfSpaces h = hull_inequalities(points);
  std::vector<std::pair<long, Integer>> samples;
  nlohmann::json counts = nlohmann::json::array();
  for (long m = 0; m <= m_max; ++m) {
    samples.emplace_back(m, count_lattice_points(points, h, m));
    counts.push_back(samples.back().second.get_str());
  }
  r.detail["counts"] = counts;
  std::optional<UniPoly> interpolant;
  if (m_max >= dim) {
    try {
      interpolant = ehrhart_interpolate(samples, dim);
    } catch (const ContractError& e) {
      r.pass = false;
      r.counterexample = {{"kind", "interpolation"}, {"message", e.what()}};
      return r;
    }
    r.detail["interpolant"] = unipoly_json(*interpolant);
    if ((*interpolant)(0) != 1 || interpolant->degree() != dim) {
      r.pass = false;
      r.counterexample = {{"kind", "interpolant_shape"}};
      return r;
    }
    for (long m = 0; m <= std::max<long>(4, m_max); ++m) {
      if ((*interpolant)(Rational(m)).get_den() != 1) {
        r.pass = false;
        r.counterexample = {{"kind", "non_integer_value"}, {"m", m}};
        return r;
      }
    }
    r.detail["volume"] = volume_from_polynomial(*interpolant, dim).get_str();
  }
  if (!is_simple_non_simplex(c)) return r;

  const FamilyParams params = family_params(c, g.num_vertices());
  const UniPoly closed = ehrhart_closed_form(params);
  const Integer vol = normalized_volume(params);
  r.detail["closed_form"] = unipoly_json(closed);
  r.detail["closed_form_volume"] = vol.get_str();
  for (const auto& [m, count] : samples) {
    const Rational predicted = closed(Rational(m));
    const Integer sorted = count_sorted_monomials(g, m);
    if (predicted != Rational(count) || sorted != count) {
      r.pass = false;
      r.counterexample = {{"kind", "count"}, {"m", m}, {"oracle", count.get_str()},
                          {"closed_form", rational_str(predicted)}, {"sorted_monomials", sorted.get_str()}};
      return r;
    }
  }
  if (volume_from_polynomial(closed, dim) != vol || (interpolant && !(*interpolant == closed))) {
    r.pass = false;
    r.counterexample = {{"kind", "volume"}, {"formula", vol.get_str()}};
  }
  return r;
}

}  // namespace

bool VerifyReport::pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.pass; });
}

nlohmann::json VerifyReport::to_json() const {
  nlohmann::json out;
  out["graph"] = graph_summary;
  out["pass"] = pass();
  nlohmann::json list = nlohmann::json::array();
  for (const CheckResult& c : checks) {
    nlohmann::json entry = {{"name", c.name}, {"pass", c.pass}, {"applicable", c.applicable},
                            {"detail", c.detail}};
    if (!c.pass) entry["counterexample"] = c.counterexample;
    list.push_back(std::move(entry));
  }
  out["checks"] = list;
  return out;
}

nlohmann::json graph_json(const Graph& g) {
  nlohmann::json edges = nlohmann::json::array();
  for (const Edge& e : g.edges()) edges.push_back(edge_json(e));
  return {{"d", g.num_vertices()}, {"edges", edges}};
}

VerifyReport verify_graph(const Graph& g, const VerifyOptions& options) {
  if (static_cast<std::size_t>(g.num_vertices()) > kOracleMaxAmbientDim) {
    throw SizeError("verify limited to " + std::to_string(kOracleMaxAmbientDim) + " vertices");
  }
  const EdgePolytope p = edge_polytope(g);
  const HullSkeleton s = hull_skeleton(p.points);
  const Classification c = classify(g);

  VerifyReport report;
  report.graph_summary = graph_json(g);
  report.graph_summary["tag"] = tag_name(c);
  report.checks.push_back(check_vertices(g, p, s));
  report.checks.push_back(check_edges(g, p, s));
  report.checks.push_back(check_dimension(p, s));
  report.checks.push_back(check_simplicity(g, c, p, s));
  report.checks.push_back(check_smoothness(p.points, c, s));
  if (options.groebner) {
    report.checks.push_back(check_groebner(g, c));
  }
  if (options.ehrhart_m_max >= 0) {
    report.checks.push_back(check_ehrhart(g, c, p.points, p.dim, options.ehrhart_m_max));
  }
  return report;
}

std::vector<Graph> enumerate_valid_graphs(int d) {
  if (d < 1) return {};
  std::vector<Edge> all;
  for (Vertex i = 1; i <= d; ++i)
    for (Vertex j = i; j <= d; ++j) all.emplace_back(i, j);
  if (all.size() >= 63) throw SizeError("too many vertices to enumerate");
  std::vector<Graph> out;
  const std::uint64_t limit = std::uint64_t{1} << all.size();
  for (std::uint64_t mask = 1; mask < limit; ++mask) {
    std::vector<Edge> edges;
    std::vector<bool> touched(static_cast<std::size_t>(d), false), looped(static_cast<std::size_t>(d), false);
    for (std::size_t k = 0; k < all.size(); ++k) {
      if (!(mask >> k & 1)) continue;
      edges.push_back(all[k]);
      touched[all[k].i - 1] = touched[all[k].j - 1] = true;
      if (all[k].is_loop()) looped[all[k].i - 1] = true;
    }
    if (std::find(touched.begin(), touched.end(), false) != touched.end()) continue;
    Graph g(d, std::move(edges));
    bool closed = true;
    for (Vertex a = 1; a <= d && closed; ++a)
      for (Vertex b = a + 1; b <= d && closed; ++b)
        if (looped[a - 1] && looped[b - 1] && !g.has_edge(a, b)) closed = false;
    if (closed) out.push_back(std::move(g));
  }
  return out;
}

std::vector<Graph> sample_valid_graphs(int max_vertices, std::size_t count, std::uint64_t seed) {
  if (max_vertices < 1) throw InputError("max_vertices must be >= 1");
  std::mt19937_64 rng(seed);
  // Reductions by modulo keep the stream identical across standard libraries.
  const auto below = [&](std::uint64_t n) { return rng() % n; };
  std::vector<Graph> out;
  while (out.size() < count) {
    const int d = 1 + static_cast<int>(below(static_cast<std::uint64_t>(max_vertices)));
    std::vector<bool> looped(static_cast<std::size_t>(d));
    for (auto&& l : looped) l = below(4) == 0;
    std::vector<Edge> edges;
    for (Vertex i = 1; i <= d; ++i) {
      for (Vertex j = i; j <= d; ++j) {
        bool take;
        if (i == j) take = looped[i - 1];
        else if (looped[i - 1] && looped[j - 1]) take = true;
        else take = below(2) == 0;
        if (take) edges.emplace_back(i, j);
      }
    }
    Graph g(d, std::move(edges));
    bool isolated = false;
    for (Vertex v = 1; v <= d; ++v) isolated = isolated || g.incident(v).empty();
    if (!isolated) out.push_back(std::move(g));
  }
  return out;
}

FuzzSummary run_fuzz(const FuzzOptions& options) {
  std::vector<Graph> graphs;
  if (options.mode == FuzzMode::Exhaustive) {
    if (options.max_vertices > 6) throw SizeError("exhaustive fuzz is limited to 6 vertices");
    for (int d = 1; d <= options.max_vertices; ++d) {
      auto batch = enumerate_valid_graphs(d);
      graphs.insert(graphs.end(), std::make_move_iterator(batch.begin()),
                    std::make_move_iterator(batch.end()));
    }
  } else {
    if (options.max_vertices > static_cast<int>(kOracleMaxAmbientDim)) {
      throw SizeError("random fuzz is limited to " + std::to_string(kOracleMaxAmbientDim) + " vertices");
    }
    graphs = sample_valid_graphs(options.max_vertices, options.count, options.seed);
  }

  std::vector<std::optional<VerifyReport>> reports(graphs.size());
  std::size_t next = 0;
  std::mutex lock;
  const auto worker = [&] {
    while (true) {
      std::size_t k;
      {
        std::lock_guard guard(lock);
        if (next >= graphs.size()) return;
        k = next++;
      }
      reports[k] = verify_graph(graphs[k], options.verify);
    }
  };
  const unsigned jobs = std::max(1u, options.jobs);
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < jobs; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  FuzzSummary summary;
  std::map<std::string, std::size_t> by_tag;
  std::size_t passed = 0;
  nlohmann::json first_failure = nullptr;
  for (std::size_t k = 0; k < graphs.size(); ++k) {
    const VerifyReport& rep = *reports[k];
    ++by_tag[rep.graph_summary["tag"].get<std::string>()];
    if (rep.pass()) {
      ++passed;
    } else if (first_failure.is_null()) {
      first_failure = rep.to_json();
    }
  }
  summary.pass = passed == graphs.size();
  summary.json = {{"mode", options.mode == FuzzMode::Exhaustive ? "exhaustive" : "random"},
                  {"max_vertices", options.max_vertices},
                  {"graphs_checked", graphs.size()},
                  {"passed", passed},
                  {"failed", graphs.size() - passed},
                  {"by_tag", by_tag},
                  {"first_failure", first_failure},
                  {"pass", summary.pass}};
  if (options.mode == FuzzMode::Random) {
    summary.json["seed"] = options.seed;
    summary.json["count"] = options.count;
  }
  return summary;
}

}  // namespace edgepoly
