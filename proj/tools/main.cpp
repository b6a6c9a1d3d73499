#include "scenarios.hpp"

#include "photondual/json_io.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

namespace {

using photondual::cli::ScenarioOutcome;

std::vector<double> parse_grid(const std::string& grid) {
  try {
    std::vector<double> values;
    if (grid.find(',') == std::string::npos && grid.find('.') == std::string::npos) {
      const int count = std::stoi(grid);
      if (count < 1) throw std::invalid_argument("grid needs at least one point");
      for (int k = 0; k < count; ++k)
        values.push_back(count == 1 ? 1.0 : static_cast<double>(k) / (count - 1));
      return values;
    }
    std::stringstream stream(grid);
    std::string item;
    while (std::getline(stream, item, ',')) values.push_back(std::stod(item));
    return values;
  } catch (const std::logic_error&) {
    throw std::invalid_argument(
        "--grid expects a point count or comma-separated overlaps, got: " + grid);
  }
}

nlohmann::json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open file: " + path);
  nlohmann::json j;
  in >> j;
  return j;
}

void write_outputs(const ScenarioOutcome& outcome, const std::string& out_dir) {
  if (!outcome.files.empty()) std::filesystem::create_directories(out_dir);
  for (const auto& [name, contents] : outcome.files) {
    const std::filesystem::path path = std::filesystem::path(out_dir) / name;
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path.string());
    out << contents;
    std::clog << "wrote " << path.string() << '\n';
  }
  std::cout << outcome.report.dump(2) << std::endl;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "photondual: two-photon interference with partially distinguishable "
      "photons, postselective indistinguishability filters, and unitary "
      "searches"};

  std::string scenario;
  app.add_option("--scenario", scenario, "one of: hom, filter, schmidt, search")
      ->required()
      ->check(CLI::IsMember({"hom", "filter", "schmidt", "search"}));
  std::optional<double> alpha_opt, beta_opt;
  app.add_option("--alpha", alpha_opt, "amplitude of the same-label component");
  app.add_option("--beta", beta_opt, "amplitude of the orthogonal-label component");
  std::string grid = "21";
  app.add_option("--grid", grid,
                 "overlap grid: point count, or comma-separated values in [0,1]");
  std::optional<std::uint64_t> seed;
  app.add_option("--seed", seed, "override the search seed");
  bool oracle = false;
  app.add_flag("--oracle", oracle,
               "cross-check every evolution against the symbolic expansion");
  std::string out_dir = ".";
  app.add_option("--out-dir", out_dir, "directory for CSV output");
  std::string spec_path;
  app.add_option("--spec", spec_path,
                 "JSON file: a state for schmidt, a search spec for search");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    ScenarioOutcome outcome;
    if (scenario == "hom") {
      outcome = photondual::cli::run_hom(parse_grid(grid), oracle);
    } else if (scenario == "filter") {
      double beta = beta_opt.value_or(1.0);
      double alpha = alpha_opt.value_or(std::sqrt(std::max(0.0, 1.0 - beta * beta)));
      if (!beta_opt && alpha_opt)
        beta = std::sqrt(std::max(0.0, 1.0 - alpha * alpha));
      outcome = photondual::cli::run_filter(photondual::Complex(alpha, 0.0),
                                            photondual::Complex(beta, 0.0), oracle);
    } else if (scenario == "schmidt") {
      if (spec_path.empty()) {
        const double beta = beta_opt.value_or(1.0);
        const double alpha =
            alpha_opt.value_or(std::sqrt(std::max(0.0, 1.0 - beta * beta)));
        outcome = photondual::cli::run_schmidt(photondual::partially_distinguishable(
            3, photondual::Complex(alpha, 0.0), photondual::Complex(beta, 0.0)));
      } else {
        outcome =
            photondual::cli::run_schmidt(photondual::state_from_json(load_json_file(spec_path)));
      }
    } else {  // search
      photondual::SearchSpec spec;
      if (!spec_path.empty())
        spec = photondual::search_spec_from_json(load_json_file(spec_path));
      if (seed) spec.seed = *seed;
      outcome = photondual::cli::run_search_scenario(spec, std::clog);
    }
    write_outputs(outcome, out_dir);
    return outcome.passed ? 0 : 1;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "usage error: bad JSON input: " << e.what() << '\n';
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}
