#include "photondual/search.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace photondual {

namespace {

constexpr double kPi = 3.14159265358979323846;

/// SplitMix64: counter-based, so restart streams are independent and
/// reproducible regardless of evaluation order.
struct SplitMix64 {
  std::uint64_t state;

  explicit SplitMix64(std::uint64_t seed) : state(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  double uniform() {  // [0, 1)
    return static_cast<double>(next() >> 11) * 0x1.0p-53;
  }
};

std::uint64_t mix_keys(std::uint64_t seed, std::uint64_t counter) {
  SplitMix64 g(seed ^ (counter * 0x9e3779b97f4a7c15ULL + 0x2545f4914f6cdd1dULL));
  return g.next();
}

}  // namespace

bool FamilyParams::is_degenerate(double tol) const {
  return std::abs(std::sin(2.0 * theta)) <= tol;
}

Interferometer family_unitary(const FamilyParams& params) {
  const double r = 1.0 / std::sqrt(2.0);
  const double ct = std::cos(params.theta);
  const double st = std::sin(params.theta);
  const Complex i(0.0, 1.0);
  auto phase = [](double a) { return std::exp(Complex(0.0, a)); };

  ComplexMatrix u(3, 3);
  u(0, 0) = -r * phase(params.zeta);
  u(0, 1) = -i * r * phase(params.zeta);
  u(0, 2) = Complex(0.0, 0.0);
  u(1, 0) = i * r * phase(-(params.phi + params.zeta)) * ct;
  u(1, 1) = r * phase(-(params.phi + params.zeta)) * ct;
  u(1, 2) = -phase(-params.xi) * st;
  u(2, 0) = i * r * phase(params.xi - params.zeta) * st;
  u(2, 1) = r * phase(params.xi - params.zeta) * st;
  u(2, 2) = phase(params.phi) * ct;
  return Interferometer(std::move(u));
}

Interferometer canonical_filter() {
  const double s = std::sqrt(2.0);
  const Complex i(0.0, 1.0);
  ComplexMatrix u(3, 3);
  u << Complex(s, 0), s * i, Complex(0, 0),
       i, Complex(1, 0), s * i,
       Complex(-1, 0), i, Complex(s, 0);
  return Interferometer(0.5 * u);
}

void SearchSpec::validate() const {
  if (system_modes < 2) throw std::invalid_argument("need at least two modes");
  if (input_ports.size() != output_ports.size())
    throw std::invalid_argument("input/output port lists must have equal length");
  if (input_ports.size() != 2)
    throw std::invalid_argument("search targets two-photon filters (two ports)");
  auto check = [this](const std::vector<int>& ports) {
    for (std::size_t i = 0; i < ports.size(); ++i) {
      if (ports[i] < 0 || ports[i] >= system_modes)
        throw std::invalid_argument("port index out of range");
      for (std::size_t j = 0; j < i; ++j)
        if (ports[i] == ports[j]) throw std::invalid_argument("repeated port");
    }
  };
  check(input_ports);
  check(output_ports);
  if (restarts < 1) throw std::invalid_argument("restarts must be >= 1");
  if (max_iters < 1) throw std::invalid_argument("max_iters must be >= 1");
  if (!(tolerance > 0.0)) throw std::invalid_argument("tolerance must be > 0");
}

double SearchResult::residual_min() const {
  return *std::min_element(restart_residuals.begin(), restart_residuals.end());
}

double SearchResult::residual_median() const {
  std::vector<double> sorted = restart_residuals;
  std::sort(sorted.begin(), sorted.end());
  const std::size_t n = sorted.size();
  if (n % 2 == 1) return sorted[n / 2];
  return 0.5 * (sorted[n / 2 - 1] + sorted[n / 2]);
}

PairAmplitudes postselected_pair_amplitudes(const ComplexMatrix& u,
                                            const std::vector<int>& input_ports,
                                            const std::vector<int>& output_ports) {
  const int p1 = input_ports.at(0), p2 = input_ports.at(1);
  const int o1 = output_ports.at(0), o2 = output_ports.at(1);
  const double s = std::sqrt(2.0);
  PairAmplitudes a;
  a.bunched_first = s * u(o1, p1) * u(o1, p2);
  a.coincident = u(o1, p1) * u(o2, p2) + u(o1, p2) * u(o2, p1);
  a.bunched_second = s * u(o2, p1) * u(o2, p2);
  return a;
}

double search_objective(const ComplexMatrix& u, const SearchSpec& spec) {
  const ComplexMatrix target = submatrix(u, spec.output_ports, spec.input_ports);
  double value = std::norm(determinant(target));
  if (spec.objective == SearchObjective::det_zero_plus_noncoincident) {
    const PairAmplitudes a =
        postselected_pair_amplitudes(u, spec.input_ports, spec.output_ports);
    const double bunched =
        std::norm(a.bunched_first) + std::norm(a.bunched_second);
    const double kept = bunched + std::norm(a.coincident);
    const double floor = kMinPostselectionProbability;
    value += (bunched + std::max(0.0, floor - kept)) / std::max(kept, floor);
  }
  return value;
}

ComplexMatrix unitary_from_parameters(const std::vector<double>& params,
                                      int system_modes) {
  const int n = system_modes;
  if (static_cast<int>(params.size()) != n * n)
    throw std::invalid_argument("expected S^2 parameters");

  // Hermitian generator H; the unitary is exp(iH).
  ComplexMatrix h = ComplexMatrix::Zero(n, n);
  std::size_t idx = 0;
  for (int k = 0; k < n; ++k) h(k, k) = Complex(params[idx++], 0.0);
  for (int r = 0; r < n; ++r) {
    for (int c = r + 1; c < n; ++c) {
      const double re = params[idx++];
      const double im = params[idx++];
      h(r, c) = Complex(re, im);
      h(c, r) = Complex(re, -im);
    }
  }

  Eigen::SelfAdjointEigenSolver<ComplexMatrix> eig(h);
  const auto& values = eig.eigenvalues();
  ComplexMatrix expd = ComplexMatrix::Zero(n, n);
  for (int k = 0; k < n; ++k) expd(k, k) = std::exp(Complex(0.0, values(k)));
  return eig.eigenvectors() * expd * eig.eigenvectors().adjoint();
}

namespace {

struct ObjectiveFn {
  const SearchSpec& spec;
  long long evaluations = 0;

  double operator()(const std::vector<double>& params) {
    ++evaluations;
    return search_objective(unitary_from_parameters(params, spec.system_modes), spec);
  }
};

/// Standard Nelder-Mead (reflection 1, expansion 2, contraction 1/2,
/// shrink 1/2) with deterministic tie handling.
std::pair<std::vector<double>, double> nelder_mead(
    ObjectiveFn& objective, const std::vector<double>& start, int max_iters,
    double f_stop) {
  const std::size_t dim = start.size();
  const double step = 0.35;

  std::vector<std::vector<double>> simplex(dim + 1, start);
  for (std::size_t k = 0; k < dim; ++k) simplex[k + 1][k] += step;
  std::vector<double> values(dim + 1);
  for (std::size_t k = 0; k <= dim; ++k) values[k] = objective(simplex[k]);

  std::vector<std::size_t> order(dim + 1);
  for (int iter = 0; iter < max_iters; ++iter) {
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });
    const std::size_t best = order.front(), worst = order.back();
    const std::size_t second_worst = order[dim - 1];
    if (values[best] <= f_stop) break;
    if (values[worst] - values[best] <= 1e-15 * (1.0 + std::abs(values[best]))) break;

    std::vector<double> centroid(dim, 0.0);
    for (std::size_t k = 0; k <= dim; ++k) {
      if (k == worst) continue;
      for (std::size_t d = 0; d < dim; ++d) centroid[d] += simplex[k][d];
    }
    for (double& c : centroid) c /= static_cast<double>(dim);

    auto blend = [&](double t) {
      std::vector<double> point(dim);
      for (std::size_t d = 0; d < dim; ++d)
        point[d] = centroid[d] + t * (centroid[d] - simplex[worst][d]);
      return point;
    };

    const std::vector<double> reflected = blend(1.0);
    const double f_reflected = objective(reflected);
    if (f_reflected < values[order[0]]) {
      const std::vector<double> expanded = blend(2.0);
      const double f_expanded = objective(expanded);
      if (f_expanded < f_reflected) {
        simplex[worst] = expanded;
        values[worst] = f_expanded;
      } else {
        simplex[worst] = reflected;
        values[worst] = f_reflected;
      }
      continue;
    }
    if (f_reflected < values[second_worst]) {
      simplex[worst] = reflected;
      values[worst] = f_reflected;
      continue;
    }
    const bool outside = f_reflected < values[worst];
    const std::vector<double> contracted = blend(outside ? 0.5 : -0.5);
    const double f_contracted = objective(contracted);
    if (f_contracted < (outside ? f_reflected : values[worst])) {
      simplex[worst] = contracted;
      values[worst] = f_contracted;
      continue;
    }
    for (std::size_t k = 0; k <= dim; ++k) {  // shrink towards the best vertex
      if (k == best) continue;
      for (std::size_t d = 0; d < dim; ++d)
        simplex[k][d] = simplex[best][d] + 0.5 * (simplex[k][d] - simplex[best][d]);
      values[k] = objective(simplex[k]);
    }
  }

  std::size_t best = 0;
  for (std::size_t k = 1; k <= dim; ++k)
    if (values[k] < values[best]) best = k;
  return {simplex[best], values[best]};
}

/// Central-difference gradient descent with Armijo backtracking.
std::pair<std::vector<double>, double> gradient_polish(
    ObjectiveFn& objective, std::vector<double> point, double value,
    int max_steps, double f_stop) {
  const std::size_t dim = point.size();
  const double h = 1e-6;
  for (int step = 0; step < max_steps; ++step) {
    if (value <= f_stop) break;
    std::vector<double> grad(dim, 0.0);
    double grad_norm_sq = 0.0;
    for (std::size_t d = 0; d < dim; ++d) {
      std::vector<double> plus = point, minus = point;
      plus[d] += h;
      minus[d] -= h;
      grad[d] = (objective(plus) - objective(minus)) / (2.0 * h);
      grad_norm_sq += grad[d] * grad[d];
    }
    if (grad_norm_sq <= 1e-30) break;

    double rate = 1.0;
    bool improved = false;
    for (int backtrack = 0; backtrack < 45; ++backtrack) {
      std::vector<double> candidate = point;
      for (std::size_t d = 0; d < dim; ++d) candidate[d] -= rate * grad[d];
      const double f_candidate = objective(candidate);
      if (f_candidate < value - 1e-4 * rate * grad_norm_sq) {
        point = std::move(candidate);
        value = f_candidate;
        improved = true;
        break;
      }
      rate *= 0.5;
    }
    if (!improved) break;
  }
  return {std::move(point), value};
}

}  // namespace

SearchResult search(const SearchSpec& spec, const RestartCallback& on_restart) {
  spec.validate();
  const int dim = spec.system_modes * spec.system_modes;

  SearchResult result;
  result.restart_residuals.reserve(spec.restarts);
  ObjectiveFn objective{spec};
  const double f_stop = spec.tolerance * 1e-4;

  std::vector<double> best_params;
  double best_value = std::numeric_limits<double>::infinity();
  for (int restart = 0; restart < spec.restarts; ++restart) {
    SplitMix64 rng(mix_keys(spec.seed, static_cast<std::uint64_t>(restart)));
    std::vector<double> start(dim);
    for (double& x : start) x = (2.0 * rng.uniform() - 1.0) * kPi;

    auto [coarse, coarse_value] = nelder_mead(objective, start, spec.max_iters, f_stop);
    auto [point, value] =
        gradient_polish(objective, std::move(coarse), coarse_value, 200, f_stop);
    result.restart_residuals.push_back(value);
    if (on_restart) on_restart(restart, value);
    if (value < best_value) {  // strict: ties keep the lowest restart index
      best_value = value;
      best_params = std::move(point);
    }
  }

  result.best_unitary = unitary_from_parameters(best_params, spec.system_modes);
  result.residual = best_value;
  result.iterations = objective.evaluations;
  result.converged = best_value <= spec.tolerance;
  return result;
}

std::string to_string(SearchObjective objective) {
  switch (objective) {
    case SearchObjective::det_zero:
      return "det_zero";
    case SearchObjective::det_zero_plus_noncoincident:
      return "det_zero_plus_noncoincident";
  }
  throw std::logic_error("unknown objective");
}

SearchObjective objective_from_string(const std::string& name) {
  if (name == "det_zero") return SearchObjective::det_zero;
  if (name == "det_zero_plus_noncoincident")
    return SearchObjective::det_zero_plus_noncoincident;
  throw std::invalid_argument("unknown objective: " + name);
}

}  // namespace photondual
