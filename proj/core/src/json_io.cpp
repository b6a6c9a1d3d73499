#include "photondual/json_io.hpp"

#include <cmath>
#include <stdexcept>

namespace photondual {

using nlohmann::json;

namespace {

json matrix_part(const ComplexMatrix& m, bool imaginary) {
  json rows = json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c)
      row.push_back(imaginary ? m(r, c).imag() : m(r, c).real());
    rows.push_back(std::move(row));
  }
  return rows;
}

std::vector<int> ports_from_json(const json& j, int system_modes) {
  std::vector<int> ports;
  for (const auto& entry : j) {
    const int port = entry.get<int>();
    if (port < 1 || port > system_modes)
      throw std::invalid_argument("port out of range (ports are 1-based)");
    ports.push_back(port - 1);
  }
  return ports;
}

json ports_to_json(const std::vector<int>& ports) {
  json out = json::array();
  for (int p : ports) out.push_back(p + 1);
  return out;
}

}  // namespace

json state_to_json(const PureState& state) {
  json terms = json::array();
  for (const auto& [array, amplitude] : state.terms) {
    json occ = json::array();
    for (int s = 0; s < state.shape.system_modes; ++s) {
      json row = json::array();
      for (int l = 0; l < state.shape.label_modes; ++l) row.push_back(array.at(s, l));
      occ.push_back(std::move(row));
    }
    terms.push_back({{"occ", std::move(occ)},
                     {"re", amplitude.real()},
                     {"im", amplitude.imag()}});
  }
  return {{"shape", {state.shape.system_modes, state.shape.label_modes}},
          {"n", state.particles},
          {"terms", std::move(terms)}};
}

PureState state_from_json(const json& j) {
  PureState state;
  const auto shape = j.at("shape");
  if (!shape.is_array() || shape.size() != 2)
    throw std::invalid_argument("state JSON: shape must be [S, L]");
  state.shape = {shape[0].get<int>(), shape[1].get<int>()};
  state.particles = j.at("n").get<int>();
  for (const auto& term : j.at("terms")) {
    FockArray array =
        FockArray::from_grid(term.at("occ").get<std::vector<std::vector<int>>>());
    state.add_term(array,
                   Complex(term.at("re").get<double>(), term.at("im").get<double>()));
  }
  const double n = norm(state);
  if (std::abs(n - 1.0) > 1e-10) {
    state.is_normalized = false;
    state.stored_norm = n;
  }
  state.validate();
  return state;
}

json interferometer_to_json(const Interferometer& interferometer) {
  return {{"dim", interferometer.dim()},
          {"re", matrix_part(interferometer.matrix(), false)},
          {"im", matrix_part(interferometer.matrix(), true)}};
}

Interferometer interferometer_from_json(const json& j) {
  const int dim = j.at("dim").get<int>();
  const auto re = j.at("re").get<std::vector<std::vector<double>>>();
  const auto im = j.at("im").get<std::vector<std::vector<double>>>();
  if (static_cast<int>(re.size()) != dim || static_cast<int>(im.size()) != dim)
    throw std::invalid_argument("interferometer JSON: row count disagrees with dim");
  ComplexMatrix u(dim, dim);
  for (int r = 0; r < dim; ++r) {
    if (static_cast<int>(re[r].size()) != dim || static_cast<int>(im[r].size()) != dim)
      throw std::invalid_argument("interferometer JSON: column count disagrees with dim");
    for (int c = 0; c < dim; ++c) u(r, c) = Complex(re[r][c], im[r][c]);
  }
  return Interferometer(std::move(u));
}

json search_spec_to_json(const SearchSpec& spec) {
  return {{"S", spec.system_modes},
          {"input_ports", ports_to_json(spec.input_ports)},
          {"output_ports", ports_to_json(spec.output_ports)},
          {"objective", to_string(spec.objective)},
          {"restarts", spec.restarts},
          {"seed", spec.seed},
          {"max_iters", spec.max_iters},
          {"tolerance", spec.tolerance}};
}

SearchSpec search_spec_from_json(const json& j) {
  SearchSpec spec;
  if (j.contains("S")) spec.system_modes = j.at("S").get<int>();
  if (j.contains("input_ports"))
    spec.input_ports = ports_from_json(j.at("input_ports"), spec.system_modes);
  if (j.contains("output_ports"))
    spec.output_ports = ports_from_json(j.at("output_ports"), spec.system_modes);
  if (j.contains("objective"))
    spec.objective = objective_from_string(j.at("objective").get<std::string>());
  if (j.contains("restarts")) spec.restarts = j.at("restarts").get<int>();
  if (j.contains("seed")) spec.seed = j.at("seed").get<std::uint64_t>();
  if (j.contains("max_iters")) spec.max_iters = j.at("max_iters").get<int>();
  if (j.contains("tolerance")) spec.tolerance = j.at("tolerance").get<double>();
  spec.validate();
  return spec;
}

json search_result_to_json(const SearchResult& result, const SearchSpec& spec) {
  return {{"objective", to_string(spec.objective)},
          {"residual", result.residual},
          {"residual_min", result.residual_min()},
          {"residual_median", result.residual_median()},
          {"iterations", result.iterations},
          {"converged", result.converged},
          {"restart_residuals", result.restart_residuals},
          {"best_unitary", interferometer_to_json(Interferometer(result.best_unitary))}};
}

json decomposition_to_json(const DualityDecomposition& decomposition) {
  auto block_to_json = [](const std::map<std::pair<IndexPair, IndexPair>, Complex>& block) {
    json out = json::array();
    for (const auto& [key, amplitude] : block) {
      out.push_back({{"system", {key.first.first + 1, key.first.second + 1}},
                     {"label", {key.second.first + 1, key.second.second + 1}},
                     {"re", amplitude.real()},
                     {"im", amplitude.imag()}});
    }
    return out;
  };
  return {{"system_modes", decomposition.system_modes},
          {"label_modes", decomposition.label_modes},
          {"triplet", block_to_json(decomposition.triplet_block)},
          {"singlet", block_to_json(decomposition.singlet_block)},
          {"triplet_weight", decomposition.triplet_weight()},
          {"singlet_weight", decomposition.singlet_weight()},
          {"schmidt_coefficients", decomposition.schmidt_coefficients}};
}

}  // namespace photondual
