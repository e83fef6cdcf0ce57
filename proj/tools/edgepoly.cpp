// Command-line front end: edgepoly <classify|groebner|ehrhart|verify|fuzz>.

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "CLI11.hpp"
#include "edgepoly/commands.hpp"

namespace {

bool read_input(const std::string& path, std::string& text) {
  if (path == "-") {
    text.assign(std::istreambuf_iterator<char>(std::cin), {});
    return true;
  }
  std::ifstream in(path);
  if (!in) return false;
  std::ostringstream buf;
  buf << in.rdbuf();
  text = buf.str();
  return true;
}

}  // namespace

int main(int argc, char** argv) {
  using namespace edgepoly;

  CLI::App app{"Edge polytopes of graphs with loops"};
  app.require_subcommand(1);

  std::string format = "json";
  std::string output;
  app.add_option("--format", format, "json or text")->check(CLI::IsMember({"json", "text"}));
  app.add_option("--output", output, "write the result here instead of stdout");

  std::string input = "-";
  long m_max = 4;
  int max_vertices = 4;
  std::string mode = "exhaustive";
  std::size_t count = 100;
  std::uint64_t seed = 0;
  unsigned jobs = 1;

  auto* classify = app.add_subcommand("classify", "classify the edge polytope");
  auto* groebner = app.add_subcommand("groebner", "quadratic Groebner basis of the toric ideal");
  auto* ehrhart = app.add_subcommand("ehrhart", "lattice point counts and Ehrhart polynomial");
  auto* verify = app.add_subcommand("verify", "check every predicate against the oracles");
  auto* fuzz = app.add_subcommand("fuzz", "verify many small graphs");
  for (auto* sub : {classify, groebner, ehrhart, verify}) {
    sub->add_option("input", input, "graph file, or - for stdin");
    sub->fallthrough();
  }
  ehrhart->add_option("--m-max", m_max, "largest dilation counted (<= 8)");
  verify->add_option("--m-max", m_max, "largest dilation counted; negative skips Ehrhart");
  fuzz->add_option("--max-vertices", max_vertices);
  fuzz->add_option("--mode", mode)->check(CLI::IsMember({"exhaustive", "random"}));
  fuzz->add_option("--count", count);
  fuzz->add_option("--seed", seed);
  fuzz->add_option("--m-max", m_max);
  fuzz->add_option("--jobs", jobs);
  fuzz->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInputError;
  }

  CommandResult result;
  if (fuzz->parsed()) {
    FuzzOptions options;
    options.mode = mode == "random" ? FuzzMode::Random : FuzzMode::Exhaustive;
    options.max_vertices = max_vertices;
    options.count = count;
    options.seed = seed;
    options.jobs = jobs;
    options.verify.ehrhart_m_max = m_max;
    result = cmd_fuzz(options);
  } else {
    std::string text;
    if (!read_input(input, text)) {
      std::cerr << "cannot read " << input << '\n';
      std::cout << nlohmann::json{{"error", "input"}, {"message", "cannot read " + input}}.dump(2) << '\n';
      return kExitInputError;
    }
    if (classify->parsed()) {
      result = cmd_classify(text);
    } else if (groebner->parsed()) {
      result = cmd_groebner(text);
    } else if (ehrhart->parsed()) {
      result = cmd_ehrhart(text, m_max);
    } else {
      VerifyOptions options;
      options.ehrhart_m_max = m_max;
      result = cmd_verify(text, options);
    }
  }

  if (result.json.contains("error")) {
    std::cerr << "edgepoly: " << result.json["message"].get<std::string>() << '\n';
  }
  const std::string rendered = format == "text" ? render_text(result.json) : result.json.dump(2) + "\n";
  if (output.empty()) {
    std::cout << rendered;
  } else {
    std::ofstream out(output);
    if (!out) {
      std::cerr << "cannot write " << output << '\n';
      return kExitInputError;
    }
    out << rendered;
  }
  return result.exit_code;
}
