#pragma once

#include "photondual/evolve.hpp"
#include "photondual/fock.hpp"

#include <optional>
#include <string>
#include <vector>

namespace photondual {

/// Photon counts per System output port. Detectors are photon-number
/// resolving and Label-blind, so a pattern ignores Label columns entirely.
struct SpatialPattern {
  std::vector<int> counts;

  explicit SpatialPattern(std::vector<int> c);
  int total() const;
};

struct PostselectionResult {
  double probability = 0.0;
  PureState conditional_state;  // normalized; empty when probability is 0
};

/// Probability that the per-port photon counts equal `pattern`: the summed
/// |amplitude|^2 over all Fock arrays whose row sums match.
double spatial_probability(const PureState& state, const SpatialPattern& pattern);

/// All spatial patterns for the state's photon number and port count, in
/// lexicographic order (completeness: their probabilities sum to 1).
std::vector<SpatialPattern> all_patterns(const PureState& state);

/// Keeps the Fock arrays with an empty row at `port`; the kept squared norm
/// is the postselection probability and the kept state is renormalized.
/// Zero surviving weight yields probability 0 and an empty state.
PostselectionResult postselect_vacuum(const PureState& state, int port);

/// Applies a balanced beamsplitter across the two (distinct) ports and
/// returns the probability of exactly one photon in each, all other ports
/// empty. Defined for N = 2 states.
double hom_coincidence(const PureState& state, int port_a, int port_b);

/// Coincidence vs label overlap: for each overlap c in [0, 1] builds the
/// two-photon input in ports 0 and 1 with label Gram overlap c, applies the
/// optional pre-interferometer, and runs the beamsplitter coincidence test
/// on (port_a, port_b).
std::vector<std::pair<double, double>> dip_curve(
    int system_modes, const std::optional<Interferometer>& interferometer,
    const std::vector<double>& overlap_grid, int port_a = 0, int port_b = 1);

/// CSV rendering of a dip curve: header `overlap,coincidence`, one row per
/// point, 17 significant digits (round-trip safe).
std::string dip_curve_csv(const std::vector<std::pair<double, double>>& curve);

/// Classical prediction: photons are independent balls routed port s -> t
/// with probability |u(t, s)|^2; interference is absent by construction.
/// With `postselect_vacuum_port`, probabilities are renormalized to the
/// trajectories that leave that port empty (the pattern must not use it).
double classical_prediction(const Interferometer& interferometer,
                            const std::vector<int>& input_ports,
                            const SpatialPattern& pattern,
                            std::optional<int> postselect_vacuum_port = std::nullopt);

/// Classical prediction for a cascade of stages with a required spatial
/// pattern after each stage: photons route independently through every
/// stage and the joint probability of matching all intermediate patterns is
/// returned. (A two-stage cascade with coincident patterns reproduces the
/// textbook "both transmit or both reflect" beamsplitter story.)
double classical_cascade(const std::vector<Interferometer>& stages,
                         const std::vector<int>& input_ports,
                         const std::vector<SpatialPattern>& stage_patterns);

}  // namespace photondual
