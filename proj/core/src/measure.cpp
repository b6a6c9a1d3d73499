#include "photondual/measure.hpp"

#include <cmath>
#include <cstdio>
#include <functional>
#include <stdexcept>

namespace photondual {

namespace {

bool matches_pattern(const FockArray& array, const SpatialPattern& pattern) {
  for (std::size_t s = 0; s < pattern.counts.size(); ++s)
    if (array.system_count(static_cast<int>(s)) != pattern.counts[s]) return false;
  return true;
}

void check_ports(int system_modes, const std::vector<int>& ports) {
  for (std::size_t i = 0; i < ports.size(); ++i) {
    if (ports[i] < 0 || ports[i] >= system_modes)
      throw std::invalid_argument("port index out of range");
  }
}

}  // namespace

SpatialPattern::SpatialPattern(std::vector<int> c) : counts(std::move(c)) {
  if (counts.empty()) throw std::invalid_argument("empty spatial pattern");
  for (int k : counts)
    if (k < 0) throw std::invalid_argument("negative photon count");
}

int SpatialPattern::total() const {
  int t = 0;
  for (int k : counts) t += k;
  return t;
}

double spatial_probability(const PureState& state, const SpatialPattern& pattern) {
  if (static_cast<int>(pattern.counts.size()) != state.shape.system_modes)
    throw std::invalid_argument("pattern length disagrees with system modes");
  if (pattern.total() != state.particles)
    throw std::invalid_argument("pattern photon number disagrees with state");
  double prob = 0.0;
  for (const auto& [array, amplitude] : state.terms)
    if (matches_pattern(array, pattern)) prob += std::norm(amplitude);
  return prob;
}

std::vector<SpatialPattern> all_patterns(const PureState& state) {
  std::vector<SpatialPattern> out;
  std::vector<int> counts(state.shape.system_modes, 0);
  std::function<void(int, int)> rec = [&](int port, int remaining) {
    if (port == state.shape.system_modes - 1) {
      counts[port] = remaining;
      out.push_back(SpatialPattern(counts));
      return;
    }
    for (int k = remaining; k >= 0; --k) {
      counts[port] = k;
      rec(port + 1, remaining - k);
    }
  };
  rec(0, state.particles);
  return out;
}

PostselectionResult postselect_vacuum(const PureState& state, int port) {
  check_ports(state.shape.system_modes, {port});
  PureState kept;
  kept.shape = state.shape;
  kept.particles = state.particles;
  double kept_sq = 0.0;
  for (const auto& [array, amplitude] : state.terms) {
    if (array.system_count(port) != 0) continue;
    kept.add_term(array, amplitude);
    kept_sq += std::norm(amplitude);
  }

  PostselectionResult result;
  result.probability = kept_sq;
  if (kept_sq <= 0.0) {
    kept.terms.clear();
    kept.is_normalized = false;
    kept.stored_norm = 0.0;
    result.conditional_state = std::move(kept);
    return result;
  }
  kept.is_normalized = false;
  kept.stored_norm = std::sqrt(kept_sq);
  result.conditional_state = normalize(kept);
  return result;
}

double hom_coincidence(const PureState& state, int port_a, int port_b) {
  if (state.particles != 2)
    throw std::invalid_argument("coincidence pattern is defined for N = 2");
  if (port_a == port_b) throw std::invalid_argument("ports must differ");
  check_ports(state.shape.system_modes, {port_a, port_b});

  const Interferometer bs =
      embed_beamsplitter(state.shape.system_modes, port_a, port_b);
  const PureState out = apply(bs, state);
  std::vector<int> counts(state.shape.system_modes, 0);
  counts[port_a] = 1;
  counts[port_b] = 1;
  return spatial_probability(out, SpatialPattern(counts));
}

std::vector<std::pair<double, double>> dip_curve(
    int system_modes, const std::optional<Interferometer>& interferometer,
    const std::vector<double>& overlap_grid, int port_a, int port_b) {
  std::vector<std::pair<double, double>> curve;
  curve.reserve(overlap_grid.size());
  for (double c : overlap_grid) {
    if (c < 0.0 || c > 1.0)
      throw std::invalid_argument("label overlap must lie in [0, 1]");
    ComplexMatrix gram(2, 2);
    gram << Complex(1.0, 0.0), Complex(c, 0.0), Complex(c, 0.0), Complex(1.0, 0.0);
    PureState state = from_label_overlap(system_modes, {0, 1}, LabelGram(gram));
    if (interferometer) state = apply(*interferometer, state);
    curve.emplace_back(c, hom_coincidence(state, port_a, port_b));
  }
  return curve;
}

std::string dip_curve_csv(const std::vector<std::pair<double, double>>& curve) {
  std::string csv = "overlap,coincidence\n";
  char row[80];
  for (const auto& [overlap, coincidence] : curve) {
    std::snprintf(row, sizeof(row), "%.17g,%.17g\n", overlap, coincidence);
    csv += row;
  }
  return csv;
}

namespace {

/// Sums prod_k |u(t_k, s_k)|^2 over independent routing assignments that are
/// accepted by `accept(final ports)`.
double classical_sum(const ComplexMatrix& u, const std::vector<int>& input_ports,
                     const std::function<bool(const std::vector<int>&)>& accept) {
  const int s_modes = static_cast<int>(u.rows());
  const int photons = static_cast<int>(input_ports.size());
  std::vector<int> at(photons, 0);
  double total = 0.0;
  std::function<void(int, double)> rec = [&](int k, double p) {
    if (k == photons) {
      if (accept(at)) total += p;
      return;
    }
    for (int t = 0; t < s_modes; ++t) {
      at[k] = t;
      rec(k + 1, p * std::norm(u(t, input_ports[k])));
    }
  };
  rec(0, 1.0);
  return total;
}

bool ports_match_pattern(const std::vector<int>& ports, const SpatialPattern& pattern) {
  std::vector<int> counts(pattern.counts.size(), 0);
  for (int t : ports) ++counts[t];
  return counts == pattern.counts;
}

}  // namespace

double classical_prediction(const Interferometer& interferometer,
                            const std::vector<int>& input_ports,
                            const SpatialPattern& pattern,
                            std::optional<int> postselect_vacuum_port) {
  if (static_cast<int>(pattern.counts.size()) != interferometer.dim())
    throw std::invalid_argument("pattern length disagrees with interferometer");
  check_ports(interferometer.dim(), input_ports);
  if (pattern.total() != static_cast<int>(input_ports.size()))
    throw std::invalid_argument("pattern photon number disagrees with inputs");

  const ComplexMatrix& u = interferometer.matrix();
  const double joint = classical_sum(u, input_ports, [&](const std::vector<int>& at) {
    return ports_match_pattern(at, pattern);
  });
  if (!postselect_vacuum_port) return joint;

  const int port = *postselect_vacuum_port;
  check_ports(interferometer.dim(), {port});
  if (pattern.counts[port] != 0)
    throw std::invalid_argument("pattern occupies the postselected port");
  const double survive = classical_sum(u, input_ports, [&](const std::vector<int>& at) {
    for (int t : at)
      if (t == port) return false;
    return true;
  });
  if (survive <= 0.0) return 0.0;
  return joint / survive;
}

double classical_cascade(const std::vector<Interferometer>& stages,
                         const std::vector<int>& input_ports,
                         const std::vector<SpatialPattern>& stage_patterns) {
  if (stages.empty()) throw std::invalid_argument("cascade needs at least one stage");
  if (stages.size() != stage_patterns.size())
    throw std::invalid_argument("one required pattern per stage");
  const int s_modes = stages.front().dim();
  for (const Interferometer& stage : stages)
    if (stage.dim() != s_modes)
      throw std::invalid_argument("cascade stages must share dimensions");
  check_ports(s_modes, input_ports);

  // Recurse stage by stage over the surviving port assignments.
  std::function<double(std::size_t, const std::vector<int>&)> advance =
      [&](std::size_t stage, const std::vector<int>& ports) -> double {
    if (stage == stages.size()) return 1.0;
    const ComplexMatrix& u = stages[stage].matrix();
    const int photons = static_cast<int>(ports.size());
    std::vector<int> at(photons, 0);
    double total = 0.0;
    std::function<void(int, double)> rec = [&](int k, double p) {
      if (k == photons) {
        if (ports_match_pattern(at, stage_patterns[stage]))
          total += p * advance(stage + 1, at);
        return;
      }
      for (int t = 0; t < s_modes; ++t) {
        at[k] = t;
        rec(k + 1, p * std::norm(u(t, ports[k])));
      }
    };
    rec(0, 1.0);
    return total;
  };
  return advance(0, input_ports);
}

}  // namespace photondual
