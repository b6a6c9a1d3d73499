#pragma once

#include "photondual/evolve.hpp"
#include "photondual/kernels.hpp"

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace photondual {

/// Angles of the continuous three-mode filter family. theta in {0, pi/2}
/// degenerates the filter: the postselected photons no longer spread over
/// both test ports.
struct FamilyParams {
  double theta = 0.0;
  double phi = 0.0;
  double xi = 0.0;
  double zeta = 0.0;

  bool is_degenerate(double tol = 1e-12) const;
};

/// The 3 x 3 filter-family unitary
///   1/sqrt(2) * [ -e^{i zeta},                -i e^{i zeta},               0
///                 i e^{-i(phi+zeta)} cos(t),  e^{-i(phi+zeta)} cos(t),  -sqrt(2) e^{-i xi} sin(t)
///                 i e^{i(xi-zeta)} sin(t),    e^{i(xi-zeta)} sin(t),     sqrt(2) e^{i phi} cos(t) ]
/// Unitary for every parameter choice; the (rows {1,2}, cols {0,1})
/// submatrix has identically vanishing determinant.
Interferometer family_unitary(const FamilyParams& params);

/// The reference three-mode filter
///   1/2 * [ sqrt(2)  sqrt(2) i  0
///           i        1          sqrt(2) i
///           -1       i          sqrt(2)  ]
/// (two balanced beamsplitters in sequence: ports (0,1) then (1,2)).
Interferometer canonical_filter();

enum class SearchObjective {
  det_zero,                    // |det of the target submatrix|^2
  det_zero_plus_noncoincident  // + bunched weight of the postselected pair
};

struct SearchSpec {
  int system_modes = 3;
  std::vector<int> input_ports = {0, 1};
  std::vector<int> output_ports = {1, 2};
  SearchObjective objective = SearchObjective::det_zero;
  int restarts = 32;
  std::uint64_t seed = 1;
  int max_iters = 2000;      // Nelder-Mead cap per restart
  double tolerance = 1e-12;  // objective value counted as converged

  void validate() const;
};

struct SearchResult {
  ComplexMatrix best_unitary;
  double residual = 0.0;
  long long iterations = 0;  // objective evaluations over the whole run
  bool converged = false;
  std::vector<double> restart_residuals;  // by restart index

  double residual_min() const;
  double residual_median() const;
};

/// Postselected two-photon amplitudes behind the joint objective, for the
/// indistinguishable pair sent into `input_ports`: both photons in the first
/// output port / one in each / both in the second. Closed forms in the
/// entries of u (cross-checked against the full measurement pipeline).
struct PairAmplitudes {
  Complex bunched_first;  // sqrt(2) u(o1,p1) u(o1,p2)
  Complex coincident;     // u(o1,p1) u(o2,p2) + u(o1,p2) u(o2,p1)
  Complex bunched_second; // sqrt(2) u(o2,p1) u(o2,p2)
};
PairAmplitudes postselected_pair_amplitudes(const ComplexMatrix& u,
                                            const std::vector<int>& input_ports,
                                            const std::vector<int>& output_ports);

/// Objective evaluated by `search`. det_zero is |det|^2 of the target
/// submatrix. The joint objective adds the noncoincident weight of the
/// postselected conditional state; configurations whose postselection
/// probability falls below kMinPostselectionProbability are penalized
/// towards weight 1 so that trivially-dark unitaries (which zero every
/// postselected amplitude at once) do not count as solutions.
double search_objective(const ComplexMatrix& u, const SearchSpec& spec);

inline constexpr double kMinPostselectionProbability = 1e-2;

/// Maps S^2 real parameters to a unitary via the exponential of a
/// skew-Hermitian matrix (diagonal phases + paired off-diagonal entries).
ComplexMatrix unitary_from_parameters(const std::vector<double>& params,
                                      int system_modes);

/// Called after each restart with (restart index, polished residual).
using RestartCallback = std::function<void(int, double)>;

/// Seeded multi-restart Nelder-Mead with a finite-difference gradient
/// polish. Deterministic: identical specs give bit-identical results.
/// Restart starting points are uniform in [-pi, pi]^(S^2), drawn from a
/// counter-based generator keyed on (seed, restart index). Non-convergence
/// is reported through `converged`, never an exception.
SearchResult search(const SearchSpec& spec, const RestartCallback& on_restart = {});

std::string to_string(SearchObjective objective);
SearchObjective objective_from_string(const std::string& name);

}  // namespace photondual
