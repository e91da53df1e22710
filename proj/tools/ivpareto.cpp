// Command-line front end: solve, convert, generate, verify, refine, serve.
//
// Exit status: 0 success, 1 domain error or property violation, 2 usage or I/O error.

#include <cstdint>
#include <filesystem>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "ivpareto/error.hpp"
#include "ivpareto/generate.hpp"
#include "ivpareto/io.hpp"
#include "ivpareto/json_io.hpp"
#include "ivpareto/pareto.hpp"
#include "ivpareto/service.hpp"
#include "ivpareto/session.hpp"
#include "ivpareto/utility.hpp"
#include "ivpareto/verify.hpp"

namespace fs = std::filesystem;
using namespace ivpareto;

namespace {

struct Failure {
  int code;
  std::string message;
};

// Reading and parsing input files is an I/O concern: any failure exits 2.
Json load_json(const fs::path& path) {
  try {
    return Json::parse(read_file(path));
  } catch (const Error& e) {
    throw Failure{2, e.what()};
  } catch (const nlohmann::json::exception& e) {
    throw Failure{2, path.string() + ": malformed JSON: " + e.what()};
  }
}

Problem load_problem(const fs::path& path) {
  const Json doc = load_json(path);
  try {
    return problem_from_json(doc);
  } catch (const Error& e) {
    throw Failure{2, path.string() + ": " + e.what()};
  }
}

void write_output(const std::optional<fs::path>& path, const std::string& text) {
  if (!path) {
    std::cout << text;
    return;
  }
  try {
    write_file_atomic(*path, text);
  } catch (const Error& e) {
    throw Failure{2, e.what()};
  }
}

std::string format_number(double v) {
  std::ostringstream out;
  out << v;
  return out.str();
}

void print_table(const Problem& problem, const ParetoResult& result) {
  const auto& alts = problem.alternatives();
  std::cout << "Pareto set:";
  for (AltIndex x : result.pareto_set) std::cout << ' ' << alts[x];
  std::cout << '\n';
  if (result.witnesses.empty()) return;
  std::cout << "Eliminated:\n";
  for (const auto& [x, w] : result.witnesses) {
    std::cout << "  " << std::left << std::setw(8) << alts[x] << " by " << std::setw(8) << alts[w.dominator]
              << " margins";
    for (std::size_t j = 0; j < w.margins.size(); ++j) {
      std::cout << ' ' << problem.criteria()[j] << '=' << format_number(w.margins[j]);
    }
    std::cout << '\n';
  }
}

int cmd_solve(const fs::path& path, const std::optional<std::string>& mode, const std::string& format) {
  Problem problem = load_problem(path);
  if (mode && problem.kind() == StructureKind::Interval) {
    IntervalStructure s = problem.intervals();
    s.mode = parse_dominance_mode(*mode);
    problem = Problem(problem.alternatives(), problem.criteria(), std::move(s));
  }
  const ParetoResult result = solve(problem);
  if (format == "table") {
    print_table(problem, result);
  } else {
    std::cout << result_to_json(problem, result).dump(2) << '\n';
  }
  return 0;
}

int cmd_convert(const fs::path& in, const fs::path& out) {
  const Problem converted = vpr_to_interval_structure(load_problem(in));
  write_output(out, serialize_problem(converted) + "\n");
  return 0;
}

int cmd_generate(std::size_t n, std::size_t m, const std::string& variant, std::uint64_t seed,
                 const std::optional<fs::path>& out, const std::optional<fs::path>& hidden) {
  const StructureKind kind = variant == "point"      ? StructureKind::Point
                             : variant == "interval" ? StructureKind::Interval
                                                     : StructureKind::Relation;
  const GeneratedInstance inst = generate_instance(n, m, kind, seed);
  write_output(out, serialize_problem(inst.problem) + "\n");
  if (hidden) write_output(hidden, serialize_problem(inst.hidden_truth) + "\n");
  return 0;
}

int cmd_verify(const std::string& suite, std::size_t instances, std::uint64_t seed,
               const std::optional<fs::path>& report_path) {
  const VerifyReport report = run_suite(parse_suite(suite), instances, seed);
  if (report_path) write_output(report_path, report_to_json(report).dump(2) + "\n");
  std::cout << suite << ": " << report.instances << " instances, " << report.violations.size() << " violation(s)\n";
  for (std::size_t i = 0; i < report.violations.size() && i < 10; ++i) {
    std::cout << "  instance " << report.violations[i].instance << ": " << report.violations[i].detail << '\n';
  }
  return report.violations.empty() ? 0 : 1;
}

int cmd_refine(const fs::path& session_path, const fs::path& script_path, const std::optional<fs::path>& save) {
  const Json doc = load_json(session_path);
  Session session = [&] {
    try {
      // A bare problem file starts a fresh session.
      if (doc.is_object() && !doc.contains("base")) return Session::create("cli", problem_from_json(doc));
      return session_from_json(doc);
    } catch (const Error& e) {
      if (e.code() == ErrorCode::WrongVariant) throw;
      throw Failure{2, session_path.string() + ": " + e.what()};
    }
  }();
  Json script = load_json(script_path);
  if (script.is_object() && script.contains("events")) script = script["events"];
  if (!script.is_array()) throw Failure{2, script_path.string() + ": expected a JSON array of events"};

  Json steps = Json::array();
  int status = 0;
  for (const auto& item : script) {
    try {
      const RefinementEvent event = event_from_json(session.base(), item);
      steps.push_back(delta_to_json(session.base(), session.apply(event)));
    } catch (const Error& e) {
      const auto seq = item.is_object() && item.contains("sequence") ? item["sequence"].dump() : std::string("?");
      std::cerr << "event " << seq << " rejected: " << e.what() << '\n';
      status = 1;
      break;
    }
  }
  Json out{{"steps", std::move(steps)},
           {"result", result_to_json(session.base(), session.current())},
           {"history", history_to_json(session.base(), session.pareto_history())}};
  std::cout << out.dump(2) << '\n';
  if (save) {
    try {
      save_session(session, *save);
    } catch (const Error& e) {
      throw Failure{2, e.what()};
    }
  }
  return session.pareto_history().nesting_ok ? status : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Pareto sets under point, relation and interval information, with interval refinement dialogues"};
  app.require_subcommand(1);

  std::string problem_path;
  std::optional<std::string> mode;
  std::string format = "json";
  auto* solve_cmd = app.add_subcommand("solve", "Print the Pareto set, dominations and witnesses");
  solve_cmd->add_option("problem", problem_path, "Problem file")->required();
  solve_cmd->add_option("--mode", mode, "Interval dominance mode")->check(CLI::IsMember({"strict", "weak"}));
  solve_cmd->add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "table"}));

  std::string to = "intervals";
  std::string out_path;
  auto* convert_cmd = app.add_subcommand("convert", "Turn a relation structure into utility intervals");
  convert_cmd->add_option("problem", problem_path, "Relation problem file")->required();
  convert_cmd->add_option("--to", to, "Target structure")->check(CLI::IsMember({"intervals"}));
  convert_cmd->add_option("out", out_path, "Output problem file")->required();

  std::size_t alts = 0;
  std::size_t criteria = 0;
  std::string variant;
  std::uint64_t seed = 1;
  std::optional<std::string> gen_out;
  std::optional<std::string> hidden;
  auto* generate_cmd = app.add_subcommand("generate", "Write a seeded random problem");
  generate_cmd->add_option("--alts", alts, "Number of alternatives")->required()->check(CLI::PositiveNumber);
  generate_cmd->add_option("--criteria", criteria, "Number of criteria")->required()->check(CLI::PositiveNumber);
  generate_cmd->add_option("--variant", variant, "Structure kind")
      ->required()
      ->check(CLI::IsMember({"point", "interval", "relation"}));
  generate_cmd->add_option("--seed", seed, "Random seed");
  generate_cmd->add_option("--hidden-truth", hidden, "Also write the complete-information problem here");
  generate_cmd->add_option("-o,--out", gen_out, "Output file (default: stdout)");

  std::string suite;
  std::size_t instances = 1000;
  std::optional<std::string> report;
  auto* verify_cmd = app.add_subcommand("verify", "Run a randomized property suite");
  verify_cmd->add_option("--suite", suite, "Suite name")
      ->required()
      ->check(CLI::IsMember({"nesting", "refinement", "oracle", "eq14", "eq6"}));
  verify_cmd->add_option("--instances", instances, "Number of generated instances");
  verify_cmd->add_option("--seed", seed, "Random seed");
  verify_cmd->add_option("--report", report, "Write the JSON report here");

  std::string session_path;
  std::string script_path;
  std::optional<std::string> save_path;
  auto* refine_cmd = app.add_subcommand("refine", "Apply a scripted list of refinement events");
  refine_cmd->add_option("session", session_path, "Session file (or problem file)")->required();
  refine_cmd->add_option("--script", script_path, "JSON array of events")->required();
  refine_cmd->add_option("--save", save_path, "Write the refined session here");

  std::string host = "127.0.0.1";
  int port = 8080;
  std::string state_dir = "state";
  auto* serve_cmd = app.add_subcommand("serve", "Run the HTTP session service");
  serve_cmd->add_option("--port", port, "TCP port")->check(CLI::Range(1, 65535));
  serve_cmd->add_option("--host", host, "Bind address");
  serve_cmd->add_option("--state-dir", state_dir, "Directory holding one JSON file per session");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  auto opt_path = [](const std::optional<std::string>& s) -> std::optional<fs::path> {
    if (!s) return std::nullopt;
    return fs::path(*s);
  };

  try {
    if (*solve_cmd) return cmd_solve(problem_path, mode, format);
    if (*convert_cmd) return cmd_convert(problem_path, out_path);
    if (*generate_cmd) return cmd_generate(alts, criteria, variant, seed, opt_path(gen_out), opt_path(hidden));
    if (*verify_cmd) return cmd_verify(suite, instances, seed, opt_path(report));
    if (*refine_cmd) return cmd_refine(session_path, script_path, opt_path(save_path));
    if (*serve_cmd) return run_service(host, port, state_dir);
  } catch (const Failure& f) {
    std::cerr << "error: " << f.message << '\n';
    return f.code;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return e.code() == ErrorCode::IoError ? 2 : 1;
  }
  return 2;
}
