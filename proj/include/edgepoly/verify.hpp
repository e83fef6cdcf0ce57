#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "edgepoly/graph.hpp"
#include "json.hpp"

namespace edgepoly {

struct CheckResult {
  std::string name;
  bool pass = true;
  bool applicable = true;
  nlohmann::json detail = nlohmann::json::object();
  nlohmann::json counterexample;  // null on pass
};

/// Combinatorial predicates against the geometric oracle for one graph.
struct VerifyReport {
  nlohmann::json graph_summary;
  std::vector<CheckResult> checks;
  bool pass() const;
  nlohmann::json to_json() const;
};

struct VerifyOptions {
  /// Oracle lattice counts are taken for m = 0..ehrhart_m_max (at most 8).
  /// Negative skips the Ehrhart check.
  long ehrhart_m_max = 4;
  /// Gröbner checks (walk enumeration + Buchberger).
  bool groebner = true;
};

/// Runs every check: vertexhood, edgehood, dimension, simplicity,
/// smoothness, Gröbner, Ehrhart. Throws SizeError for d > 12.
VerifyReport verify_graph(const Graph& g, const VerifyOptions& options = {});

/// All labeled graphs on exactly d vertices satisfying the input invariants
/// (no isolated vertex, loop closure), in a fixed order.
std::vector<Graph> enumerate_valid_graphs(int d);

/// Deterministic sampler of valid graphs on 1..max_vertices vertices.
std::vector<Graph> sample_valid_graphs(int max_vertices, std::size_t count, std::uint64_t seed);

enum class FuzzMode { Exhaustive, Random };

struct FuzzOptions {
  FuzzMode mode = FuzzMode::Exhaustive;
  int max_vertices = 4;
  std::size_t count = 100;
  std::uint64_t seed = 0;
  unsigned jobs = 1;
  VerifyOptions verify;
};

struct FuzzSummary {
  nlohmann::json json;
  bool pass = true;
};

/// Verifies every enumerated or sampled graph. Throws SizeError when
/// exhaustive mode is asked for more than 6 vertices or random mode for more
/// than 12.
FuzzSummary run_fuzz(const FuzzOptions& options);

/// {"d": n, "edges": [[i,j],...]}.
nlohmann::json graph_json(const Graph& g);

}  // namespace edgepoly
