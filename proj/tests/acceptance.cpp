// Acceptance suite: runs every reference check at its stated tolerance and
// prints one pass/fail line per criterion. Exit code is the failure count.

#include "photondual/duality.hpp"
#include "photondual/evolve.hpp"
#include "photondual/fock.hpp"
#include "photondual/kernels.hpp"
#include "photondual/measure.hpp"
#include "photondual/search.hpp"

#include "test_support.hpp"

#include <cmath>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

using namespace photondual;
namespace pt = photondual::testing;

namespace {

constexpr double kPi = 3.14159265358979323846;

int failures = 0;

void criterion(int number, const std::string& description, bool ok) {
  std::printf("[%s] criterion %2d: %s\n", ok ? "PASS" : "FAIL", number,
              description.c_str());
  if (!ok) ++failures;
}

void info(const std::string& text) { std::printf("[info] %s\n", text.c_str()); }

PureState partially(double beta) {
  const double alpha = std::sqrt(1.0 - beta * beta);
  return partially_distinguishable(3, Complex(alpha, 0), Complex(beta, 0));
}

std::vector<double> beta_grid_11() {
  std::vector<double> grid;
  for (int k = 0; k <= 10; ++k) grid.push_back(k / 10.0);
  return grid;
}

/// Normalized reference for the filter's conditional output state:
/// (i |2:2> - sqrt(2) |2,3> - i |3:2>)/(2 sqrt(2)) on the System, tensored
/// with the label factor alpha |RR> + (beta/sqrt(2)) |RG-sym>, then scaled
/// to unit norm.
PureState frozen_conditional_state(double alpha, double beta) {
  const double c = 1.0 / (2.0 * std::sqrt(2.0));
  const double r = 1.0 / std::sqrt(2.0);
  const Complex i(0, 1);
  PureState state;
  state.shape = {3, 2};
  state.particles = 2;
  auto grid = [](std::vector<std::vector<int>> g) { return FockArray::from_grid(g); };
  state.add_term(grid({{0, 0}, {2, 0}, {0, 0}}), c * alpha * i);
  state.add_term(grid({{0, 0}, {1, 0}, {1, 0}}), c * alpha * -std::sqrt(2.0));
  state.add_term(grid({{0, 0}, {0, 0}, {2, 0}}), c * alpha * -i);
  state.add_term(grid({{0, 0}, {1, 1}, {0, 0}}), c * beta * i * r);
  state.add_term(grid({{0, 0}, {1, 0}, {0, 1}}), c * beta * -r);
  state.add_term(grid({{0, 0}, {0, 1}, {1, 0}}), c * beta * -r);
  state.add_term(grid({{0, 0}, {0, 0}, {1, 1}}), c * beta * -i * r);
  state.is_normalized = false;
  state.stored_norm = norm(state);
  return normalize(state);
}

double pipeline_coincidence(const Interferometer& member, double beta) {
  const PostselectionResult post =
      postselect_vacuum(apply(member, partially(beta)), 0);
  if (post.probability <= 0.0) return 1.0;
  return hom_coincidence(post.conditional_state, 1, 2);
}

void criterion_1_hom_endpoints() {
  const double bunched = hom_coincidence(fock_indistinguishable(2, {0, 1}), 0, 1);
  const double split = hom_coincidence(fock_distinguishable(2, {0, 1}), 0, 1);
  criterion(1,
            "beamsplitter coincidence: 0 for the indistinguishable pair, "
            "1/2 for the distinguishable pair",
            bunched <= 1e-12 && std::abs(split - 0.5) <= 1e-10);
}

void criterion_2_duality() {
  const DualityDecomposition d = decompose(fock_distinguishable(2, {0, 1}));
  const double r = 1.0 / std::sqrt(2.0);
  bool ok = d.triplet_block.size() == 1 && d.singlet_block.size() == 1;
  if (ok) {
    ok &= std::abs(d.triplet_block.begin()->second - Complex(r, 0)) <= 1e-12;
    ok &= std::abs(d.singlet_block.begin()->second - Complex(r, 0)) <= 1e-12;
  }
  ok &= schmidt_rank(fock_distinguishable(2, {0, 1})) == 2;
  ok &= schmidt_rank(fock_indistinguishable(2, {0, 1})) == 1;
  criterion(2,
            "distinguishable pair decomposes as (1/sqrt2, 1/sqrt2) over the "
            "sectors with Schmidt rank 2; indistinguishable pair has rank 1",
            ok);
}

void criterion_3_postselection_probability() {
  const Interferometer filter = canonical_filter();
  bool ok = true;
  for (double beta : beta_grid_11()) {
    const PostselectionResult post =
        postselect_vacuum(apply(filter, partially(beta)), 0);
    ok &= std::abs(post.probability - 0.5 * (1.0 - beta * beta / 2.0)) <= 1e-10;
  }
  const PostselectionResult indistinct =
      postselect_vacuum(apply(filter, partially(0.0)), 0);
  ok &= std::abs(indistinct.probability - 0.5) <= 1e-12;
  criterion(3,
            "filter postselection probability equals (1 - |beta|^2/2)/2 on an "
            "11-point beta grid, exactly 1/2 at beta = 0",
            ok);
}

void criterion_4_filter_output() {
  const Interferometer filter = canonical_filter();
  bool ok = true;
  double reference_coincidence = -1.0;
  for (double beta : beta_grid_11()) {
    const double alpha = std::sqrt(1.0 - beta * beta);
    const PostselectionResult post =
        postselect_vacuum(apply(filter, partially(beta)), 0);
    ok &= pt::max_difference_up_to_phase(frozen_conditional_state(alpha, beta),
                                         post.conditional_state) <= 1e-10;
    ok &= singlet_weight(post.conditional_state) <= 1e-12;
    const double coincidence = hom_coincidence(post.conditional_state, 1, 2);
    ok &= coincidence <= 1e-12;
    if (reference_coincidence < 0.0) reference_coincidence = coincidence;
    ok &= std::abs(coincidence - reference_coincidence) <= 1e-12;
  }
  criterion(4,
            "conditional state matches the reference output up to global "
            "phase; singlet weight and subsequent coincidence vanish for "
            "every beta",
            ok);
}

void criterion_5_classical_gap() {
  const Interferometer filter = canonical_filter();
  const SpatialPattern coincident({0, 1, 1});
  const double classical_filter_stage =
      classical_prediction(filter, {0, 1}, coincident);
  const double classical_with_test =
      classical_cascade({filter, embed_beamsplitter(3, 1, 2)}, {0, 1},
                        {coincident, coincident});
  const PostselectionResult post =
      postselect_vacuum(apply(filter, partially(1.0)), 0);
  const double quantum = hom_coincidence(post.conditional_state, 1, 2);
  criterion(5,
            "classical coincidence is 1/8 after the filter and 1/16 after the "
            "test splitter while the quantum pipeline gives none",
            std::abs(classical_filter_stage - 1.0 / 8.0) <= 1e-12 &&
                std::abs(classical_with_test - 1.0 / 16.0) <= 1e-12 &&
                quantum <= 1e-12);
}

void criterion_6_combined_unitary() {
  const Interferometer combined =
      compose(embed_beamsplitter(3, 1, 2), canonical_filter());
  const double r = 1.0 / std::sqrt(2.0);
  ComplexMatrix expected(3, 3);
  expected << Complex(r, 0), Complex(0, r), Complex(0, 0),
              Complex(0, 0), Complex(0, 0), Complex(0, 1),
              Complex(-r, 0), Complex(0, r), Complex(0, 0);
  bool ok = (combined.matrix() - expected).cwiseAbs().maxCoeff() <= 1e-12;
  for (double beta : beta_grid_11()) {
    const PureState out = apply(combined, partially(beta));
    double in_middle_port = 0.0;
    for (const SpatialPattern& pattern : all_patterns(out))
      if (pattern.counts[1] > 0)
        in_middle_port += spatial_probability(out, pattern);
    ok &= in_middle_port <= 1e-12;
  }
  criterion(6,
            "the composed filter+splitter matrix matches the reference "
            "entrywise and never sends a photon to the middle output port",
            ok);
}

void criterion_7_family_robustness() {
  std::mt19937_64 rng(20260810);
  std::uniform_real_distribution<double> angle(-kPi, kPi);
  bool ok = true;
  for (double theta : {kPi / 8, kPi / 4, 3 * kPi / 8}) {
    for (int trial = 0; trial < 3; ++trial) {
      const FamilyParams p{theta, angle(rng), angle(rng), angle(rng)};
      const Interferometer member = family_unitary(p);
      ok &= member.defect() <= 1e-12;
      ok &= std::abs(determinant(submatrix(member.matrix(), {1, 2}, {0, 1}))) <=
            1e-12;
      // Filter battery of criterion 4: singlet-free rank-1 output with the
      // reference postselection probability, label-blind statistics
      // independent of beta.
      const PureState reference =
          postselect_vacuum(apply(member, partially(0.0)), 0).conditional_state;
      for (double beta : {0.0, 0.5, 1.0}) {
        const PostselectionResult post =
            postselect_vacuum(apply(member, partially(beta)), 0);
        ok &= std::abs(post.probability - 0.5 * (1.0 - beta * beta / 2.0)) <= 1e-10;
        ok &= singlet_weight(post.conditional_state) <= 1e-12;
        ok &= schmidt_rank(post.conditional_state) == 1;
        for (const SpatialPattern& pattern : all_patterns(post.conditional_state))
          ok &= std::abs(spatial_probability(post.conditional_state, pattern) -
                         spatial_probability(reference, pattern)) <= 1e-12;
      }
    }
  }
  // Matched-phase members pass the full pipeline including the splitter test.
  for (int trial = 0; trial < 3; ++trial) {
    const double t = angle(rng), zeta = angle(rng);
    const FamilyParams matched{kPi / 4, t, kPi / 2 - t, zeta};
    for (double beta : {0.0, 1.0})
      ok &= pipeline_coincidence(family_unitary(matched), beta) <= 1e-12;
  }
  // Degenerate angles fail the beamsplitter test outright.
  for (double theta : {0.0, kPi / 2})
    ok &= pipeline_coincidence(family_unitary({theta, 0, 0, 0}), 1.0) > 0.1;
  criterion(7,
            "family members are unitary with vanishing target determinant and "
            "filter every input at interior theta; theta in {0, pi/2} fails "
            "the beamsplitter test",
            ok);

  const FamilyParams generic{kPi / 4, 0, 0, 0};
  info("7b: the family filters at every interior theta, but a fixed balanced "
       "test splitter still shows coincidence (1 - sin^2(2 theta) "
       "sin^2(xi + phi))/2 at generic phases, e.g. " +
       std::to_string(pipeline_coincidence(family_unitary(generic), 1.0)) +
       " at theta = pi/4, phi = xi = zeta = 0; the coincidence cancels "
       "exactly on the matched-phase subfamily theta = pi/4, "
       "xi + phi = +-pi/2 tested above");
}

void criterion_8_oracle_equivalence() {
  std::mt19937_64 rng(977112);
  bool ok = true;
  for (int trial = 0; trial < 100; ++trial) {
    const int s = 2 + static_cast<int>(rng() % 2);
    const int max_l = 6 / s;
    const int l = 1 + static_cast<int>(rng() % max_l);
    const int n = 1 + static_cast<int>(rng() % 3);
    const PureState state = pt::random_state(s, l, n, rng);
    const Interferometer u(pt::haar_unitary(s, rng));
    ok &= pt::max_amplitude_difference(apply(u, state), symbolic_apply(u, state)) <=
          1e-10;
  }
  for (int n = 1; n <= 6; ++n) {
    const ComplexMatrix m = pt::random_complex_matrix(n, rng);
    const Complex expected = pt::permanent_by_enumeration(m);
    ok &= std::abs(permanent(m) - expected) <= 1e-10 * std::abs(expected);
  }
  criterion(8,
            "100 random evolutions agree with the symbolic expansion and "
            "permanents up to 6x6 match the permutation sum",
            ok);
}

void criterion_9_search_witness() {
  SearchSpec witness;
  witness.system_modes = 3;
  witness.input_ports = {0, 1};
  witness.output_ports = {1, 2};
  witness.restarts = 32;
  witness.seed = 31415;
  const SearchResult found = search(witness);

  SearchSpec obstructed;
  obstructed.system_modes = 2;
  obstructed.input_ports = {0, 1};
  obstructed.output_ports = {0, 1};
  obstructed.restarts = 32;
  obstructed.seed = 31415;
  const SearchResult stuck = search(obstructed);

  criterion(9,
            "det-zero search reaches 1e-8 at three modes within 32 restarts "
            "but stays above 0.1 at two modes",
            found.residual <= 1e-8 && found.converged &&
                unitarity_defect(found.best_unitary) <= 1e-8 &&
                stuck.residual >= 0.1);
}

void criterion_10_joint_exploration() {
  bool ok = true;
  double worst_min = 1.0;
  for (int s : {3, 4}) {
    SearchSpec spec;
    spec.system_modes = s;
    spec.input_ports = {0, 1};
    spec.output_ports = {1, 2};
    spec.objective = SearchObjective::det_zero_plus_noncoincident;
    spec.restarts = 64;
    spec.seed = 27182;
    const SearchResult result = search(spec);
    ok &= result.residual_min() >= 1e-4;
    ok &= !result.converged;
    worst_min = std::min(worst_min, result.residual_min());
    std::printf("[info] joint objective S=%d: min %.3e median %.3e over 64 "
                "restarts\n",
                s, result.residual_min(), result.residual_median());
  }
  criterion(10,
            "joint det-zero + noncoincident objective never reaches 1e-4 over "
            "64 restarts at S in {3,4} (numerical evidence only, not a proof)",
            ok);
  info("10: the residual floor (" + std::to_string(worst_min) +
       ") is the pinned postselection-probability floor 1e-2: unitaries that "
       "zero the raw objective do so only by never routing photons into the "
       "postselected pair, and the conditional objective penalizes those "
       "dark configurations");
}

}  // namespace

int main() {
  criterion_1_hom_endpoints();
  criterion_2_duality();
  criterion_3_postselection_probability();
  criterion_4_filter_output();
  criterion_5_classical_gap();
  criterion_6_combined_unitary();
  criterion_7_family_robustness();
  criterion_8_oracle_equivalence();
  criterion_9_search_witness();
  criterion_10_joint_exploration();

  if (failures == 0)
    std::printf("acceptance: all criteria passed\n");
  else
    std::printf("acceptance: %d criterion(s) FAILED\n", failures);
  return failures;
}
