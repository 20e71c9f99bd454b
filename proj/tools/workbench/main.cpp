#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "run.hpp"

namespace fs = std::filesystem;
using namespace cwb::wb;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ScenarioError(path, "cannot read file");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

fs::path scenario_dir() {
  if (const char* env = std::getenv("CWB_SCENARIO_DIR")) return env;
  return CWB_SCENARIO_DIR;
}

int list_examples() {
  const fs::path dir = scenario_dir();
  if (!fs::is_directory(dir)) {
    std::cerr << "scenario directory not found: " << dir.string() << "\n";
    return kScenarioError;
  }
  std::vector<fs::path> files;
  for (const auto& e : fs::directory_iterator(dir))
    if (e.path().extension() == ".json") files.push_back(e.path());
  std::sort(files.begin(), files.end());
  for (const auto& f : files) {
    std::string desc;
    try {
      desc = parse_scenario(slurp(f.string())).description;
    } catch (const std::exception& e) {
      desc = std::string("(invalid: ") + e.what() + ")";
    }
    std::cout << f.filename().string() << "  " << desc << "\n";
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact commutative-algebra workbench: run declarative scenarios and emit reports"};
  app.require_subcommand(1);

  std::string file, out, format;
  std::size_t depth = 0, horizon = 0;
  bool no_timings = false, parallel = false;

  auto* run_cmd = app.add_subcommand("run", "Run a scenario and emit its report");
  run_cmd->add_option("scenario", file, "Scenario file")->required();
  auto* out_opt = run_cmd->add_option("--out", out, "Write the report to this path");
  auto* fmt_opt = run_cmd->add_option("--format", format, "Report format")->check(CLI::IsMember({"json", "text"}));
  auto* depth_opt = run_cmd->add_option("--depth", depth, "Default depth for sequence operations");
  auto* horizon_opt = run_cmd->add_option("--horizon", horizon, "Default horizon for stabilization checks");
  run_cmd->add_flag("--no-timings", no_timings, "Omit wall-clock timings");
  run_cmd->add_flag("--parallel", parallel, "Run independent steps concurrently");

  auto* validate_cmd = app.add_subcommand("validate", "Check a scenario without running it");
  validate_cmd->add_option("scenario", file, "Scenario file")->required();

  auto* examples_cmd = app.add_subcommand("examples", "List the shipped scenarios");

  CLI11_PARSE(app, argc, argv);

  if (examples_cmd->parsed()) return list_examples();

  Scenario sc;
  try {
    sc = parse_scenario(slurp(file));
  } catch (const ScenarioError& e) {
    std::cerr << "scenario error: " << e.what() << "\n";
    return kScenarioError;
  } catch (const std::exception& e) {
    std::cerr << "scenario error: " << e.what() << "\n";
    return kScenarioError;
  }

  if (validate_cmd->parsed()) {
    std::cout << "ok: " << file << " (" << sc.pipeline.size() << " steps, " << sc.objects.size() << " objects, ring "
              << sc.ring.name() << ")\n";
    return kOk;
  }

  RunOptions ro;
  if (*depth_opt) ro.depth = depth;
  if (*horizon_opt) ro.horizon = horizon;
  ro.parallel = parallel;
  const Report rep = run(sc, ro);

  const std::string fmt = *fmt_opt ? format : sc.settings.format;
  const std::string text = emit(rep, fmt, EmitOptions{!no_timings});
  const std::optional<std::string> path = *out_opt ? std::optional<std::string>(out) : sc.settings.out;
  if (path) {
    std::ofstream o(*path, std::ios::binary);
    if (!o) {
      std::cerr << "cannot write " << *path << "\n";
      return kScenarioError;
    }
    o << text;
  } else {
    std::cout << text;
  }
  if (rep.exit_code != kOk && !rep.steps.empty() && rep.steps.back().error)
    std::cerr << "error: " << *rep.steps.back().error << "\n";
  return rep.exit_code;
}
