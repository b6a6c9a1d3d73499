#pragma once

#include "photondual/fock.hpp"
#include "photondual/search.hpp"

#include <nlohmann/json.hpp>

#include <ostream>
#include <string>
#include <utility>
#include <vector>

namespace photondual::cli {

/// One scenario run: a JSON report for stdout, files keyed by name for the
/// output directory, and the overall verdict of the reference checks.
struct ScenarioOutcome {
  nlohmann::json report;
  std::vector<std::pair<std::string, std::string>> files;
  bool passed = true;
};

/// Beamsplitter dip over a grid of label overlaps. Emits hom_dip.csv
/// (header overlap,coincidence, 17 significant digits) and checks the
/// endpoints present in the grid: overlap 1 -> coincidence 0, overlap 0 ->
/// coincidence 1/2.
ScenarioOutcome run_hom(const std::vector<double>& overlap_grid, bool oracle);

/// Full filter pipeline for one (alpha, beta) input: postselection
/// probability against (1 - |beta|^2/2)/2, singlet weight and beamsplitter
/// coincidence of the conditional state, the classical 1/8 and staged 1/16
/// references, and the no-photon-in-port-2 check on the combined unitary.
ScenarioOutcome run_filter(Complex alpha, Complex beta, bool oracle);

/// Reports the symmetric/antisymmetric decomposition, Schmidt rank and
/// singlet weight of an N = 2 state.
ScenarioOutcome run_schmidt(const PureState& state);

/// Runs the unitary search, streaming per-restart residuals to `log`.
ScenarioOutcome run_search_scenario(const SearchSpec& spec, std::ostream& log);

/// 17-significant-digit decimal form, round-trip safe.
std::string format_double(double value);

}  // namespace photondual::cli
