#include <CLI11.hpp>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "qpmlab/runner.hpp"

namespace fs = std::filesystem;

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw qpm::Error(qpm::Errc::SchemaError, "cannot read config file " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const fs::path& path, const std::string& content) {
  std::ofstream out(path);
  out << content;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Quasi-pseudometric laboratory: axiom checks, hypothesis checks, "
               "successor-selection solves and brute-force oracles"};

  std::string command, config_path, out_dir;
  bool quiet = false;
  std::optional<std::uint64_t> seed;
  std::optional<double> eps, grid_step;
  std::optional<int> max_iter;

  app.add_option("--command", command, "check-space | check-hypotheses | solve | oracle")
      ->required()
      ->check(CLI::IsMember({"check-space", "check-hypotheses", "solve", "oracle"}));
  app.add_option("--config", config_path, "scenario config JSON file")->required();
  app.add_option("--out", out_dir, "directory for report.json / trace.csv");
  app.add_option("--seed", seed, "override the config seed");
  app.add_option("--eps", eps, "override the convergence epsilon");
  app.add_option("--max-iter", max_iter, "override the iteration cap");
  app.add_option("--grid", grid_step, "override the enumeration grid step");
  app.add_flag("--quiet", quiet, "suppress the report on stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  qpm::RunResult result;
  try {
    qpm::ScenarioConfig cfg = qpm::parse_config(read_file(config_path));
    if (seed) cfg.seed = *seed;
    if (eps) {
      if (!(*eps > 0.0)) throw qpm::Error(qpm::Errc::SchemaError, "--eps must be > 0");
      cfg.eps = *eps;
    }
    if (max_iter) {
      if (*max_iter < 1) throw qpm::Error(qpm::Errc::SchemaError, "--max-iter must be >= 1");
      cfg.max_iter = *max_iter;
    }
    if (grid_step) {
      if (!(*grid_step > 0.0)) throw qpm::Error(qpm::Errc::SchemaError, "--grid must be > 0");
      cfg.grid = qpm::GridSpec{*grid_step};
    }
    result = qpm::run_command(*qpm::command_from_name(command), cfg);
  } catch (const qpm::Error& e) {
    std::cerr << e.what() << "\n";
    return 1;
  }

  if (!out_dir.empty()) {
    fs::create_directories(out_dir);
    write_file(fs::path(out_dir) / "report.json", result.report.dump(2) + "\n");
    if (result.trace_csv) write_file(fs::path(out_dir) / "trace.csv", *result.trace_csv);
  }
  if (!quiet) std::cout << result.report.dump(2) << "\n";
  return result.exit_code;
}
