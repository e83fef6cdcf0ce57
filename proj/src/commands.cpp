#include "edgepoly/commands.hpp"

#include <sstream>

#include "edgepoly/ehrhart.hpp"
#include "edgepoly/errors.hpp"
#include "edgepoly/oracle.hpp"
#include "edgepoly/polytope.hpp"
#include "edgepoly/toric.hpp"

namespace edgepoly {

namespace {

CommandResult error_result(const char* kind, const std::exception& e, int code) {
  return {{{"error", kind}, {"message", e.what()}}, code};
}

// Maps the library's exception hierarchy onto the exit code contract.
template <typename F>
CommandResult guarded(F&& body) {
  try {
    return body();
  } catch (const SizeError& e) {
    return error_result("guardrail", e, kExitGuardrail);
  } catch (const InputError& e) {
    return error_result("input", e, kExitInputError);
  } catch (const nlohmann::json::exception& e) {
    return error_result("input", e, kExitInputError);
  }
}

}  // namespace

CommandResult cmd_classify(std::string_view input) {
  return guarded([&] {
    const Graph g = parse_graph(input);
    nlohmann::json out = classification_json(g, classify(g));
    out["graph"] = graph_json(g);
    return CommandResult{out, kExitOk};
  });
}

CommandResult cmd_groebner(std::string_view input) {
  return guarded([&] {
    const Graph g = parse_graph(input);
    const Classification c = classify(g);
    nlohmann::json out = {{"graph", graph_json(g)}, {"tag", tag_name(c)}};
    try {
      const GroebnerBasis gb = groebner_basis(g);
      nlohmann::json elements = nlohmann::json::array();
      nlohmann::json readable = nlohmann::json::array();
      for (const Binomial& b : gb.elements) {
        elements.push_back(binomial_json(b, g));
        readable.push_back(to_string(b, g));
      }
      out["status"] = "basis";
      out["order"] = order_json(gb.order, g);
      out["simplex_case"] = gb.simplex_case;
      out["size"] = gb.elements.size();
      out["basis"] = elements;
      out["basis_text"] = readable;
    } catch (const ZeroIdealError&) {
      out["status"] = "zero_ideal";
      out["message"] = "I_G = (0)";
    } catch (const UnsupportedError&) {
      out["status"] = "unsupported";
      out["message"] = "NotSimple: unsupported";
    }
    return CommandResult{out, kExitOk};
  });
}

CommandResult cmd_ehrhart(std::string_view input, long m_max) {
  return guarded([&] {
    if (m_max < 0) throw InputError("--m-max must be nonnegative");
    if (m_max > kOracleMaxDilation) {
      throw SizeError("--m-max is limited to " + std::to_string(kOracleMaxDilation));
    }
    const Graph g = parse_graph(input);
    if (static_cast<std::size_t>(g.num_vertices()) > kOracleMaxAmbientDim) {
      throw SizeError("lattice counting is limited to " + std::to_string(kOracleMaxAmbientDim) +
                      " vertices");
    }
    const Classification c = classify(g);
    const EdgePolytope p = edge_polytope(g);
    nlohmann::json out = {{"graph", graph_json(g)}, {"tag", tag_name(c)}, {"dim", p.dim}};

    const HalfSpaces h = hull_inequalities(p.points);
    std::vector<std::pair<long, Integer>> samples;
    nlohmann::json counts = nlohmann::json::array();
    for (long m = 0; m <= m_max; ++m) {
      samples.emplace_back(m, count_lattice_points(p.points, h, m));
      counts.push_back(samples.back().second.get_str());
    }
    out["counts"] = counts;

    bool agree = true;
    std::optional<UniPoly> interpolant;
    if (m_max >= p.dim) {
      interpolant = ehrhart_interpolate(samples, p.dim);
      out["interpolant"] = unipoly_json(*interpolant);
      out["interpolant_text"] = to_string(*interpolant);
      out["volume"] = volume_from_polynomial(*interpolant, p.dim).get_str();
    } else {
      out["interpolant"] = nullptr;
      out["interpolant_note"] = "need m_max >= dim samples";
    }
    if (is_simple_non_simplex(c)) {
      const FamilyParams params = family_params(c, g.num_vertices());
      const UniPoly closed = ehrhart_closed_form(params);
      const Integer vol = normalized_volume(params);
      out["closed_form"] = unipoly_json(closed);
      out["closed_form_text"] = to_string(closed);
      out["closed_form_volume"] = vol.get_str();
      for (const auto& [m, count] : samples) agree = agree && closed(Rational(m)) == Rational(count);
      if (interpolant) agree = agree && *interpolant == closed;
      if (!out.contains("volume")) out["volume"] = vol.get_str();
      agree = agree && out["volume"] == vol.get_str();
    } else {
      out["closed_form"] = nullptr;
    }
    out["agree"] = agree;
    return CommandResult{out, agree ? kExitOk : kExitVerificationFailed};
  });
}

CommandResult cmd_verify(std::string_view input, const VerifyOptions& options) {
  return guarded([&] {
    const Graph g = parse_graph(input);
    const VerifyReport report = verify_graph(g, options);
    return CommandResult{report.to_json(), report.pass() ? kExitOk : kExitVerificationFailed};
  });
}

CommandResult cmd_fuzz(const FuzzOptions& options) {
  return guarded([&] {
    if (options.max_vertices < 1) throw InputError("--max-vertices must be >= 1");
    const FuzzSummary summary = run_fuzz(options);
    return CommandResult{summary.json, summary.pass ? kExitOk : kExitVerificationFailed};
  });
}

std::string render_text(const nlohmann::json& result) {
  std::ostringstream out;
  if (!result.is_object()) {
    out << result.dump() << '\n';
    return out.str();
  }
  for (const auto& [key, value] : result.items()) {
    out << key << ": ";
    if (value.is_string()) {
      out << value.get<std::string>();
    } else if (value.is_array() && !value.empty() && value.front().is_string()) {
      for (std::size_t k = 0; k < value.size(); ++k) {
        out << (k ? "\n  " : "\n  ") << value[k].get<std::string>();
      }
    } else {
      out << value.dump();
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace edgepoly
