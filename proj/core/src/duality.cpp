#include "photondual/duality.hpp"

#include <Eigen/SVD>

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>

namespace photondual {

namespace {

const double kInvSqrt2 = 1.0 / std::sqrt(2.0);

void require_two_particles(const PureState& state) {
  if (state.particles != 2)
    throw std::invalid_argument("duality decomposition is defined for N = 2");
}

/// Occupied (system, label) cells of a two-photon array as a flat list of
/// combined single-particle indices m = s * L + l (repeated per occupation).
std::vector<int> occupied_single_particle_modes(const FockArray& array) {
  std::vector<int> modes;
  for (int s = 0; s < array.shape.system_modes; ++s)
    for (int l = 0; l < array.shape.label_modes; ++l)
      for (int k = 0; k < array.at(s, l); ++k)
        modes.push_back(s * array.shape.label_modes + l);
  return modes;
}

/// Components of sym(i,j) (or asym(i,j) when `antisymmetric`) over ordered
/// index pairs. Coefficients are real.
std::vector<std::pair<std::pair<int, int>, double>> pair_basis_components(
    IndexPair p, bool antisymmetric) {
  const auto [i, j] = p;
  if (i == j) return {{{i, i}, 1.0}};
  if (antisymmetric)
    return {{{i, j}, kInvSqrt2}, {{j, i}, -kInvSqrt2}};
  return {{{i, j}, kInvSqrt2}, {{j, i}, kInvSqrt2}};
}

std::vector<IndexPair> pair_basis(int dim, bool antisymmetric) {
  std::vector<IndexPair> basis;
  for (int i = 0; i < dim; ++i)
    for (int j = antisymmetric ? i + 1 : i; j < dim; ++j)
      basis.emplace_back(i, j);
  return basis;
}

/// Restricts a state to the label columns it actually occupies, renumbering
/// them in ascending order.
PureState compact_labels(const PureState& state) {
  std::set<int> occupied;
  for (const auto& [array, amplitude] : state.terms)
    for (int l = 0; l < state.shape.label_modes; ++l)
      if (array.label_count(l) > 0) occupied.insert(l);
  if (occupied.empty()) occupied.insert(0);

  std::vector<int> order(occupied.begin(), occupied.end());
  PureState out;
  out.shape = {state.shape.system_modes, static_cast<int>(order.size())};
  out.particles = state.particles;
  out.is_normalized = state.is_normalized;
  out.stored_norm = state.stored_norm;
  for (const auto& [array, amplitude] : state.terms) {
    FockArray compacted = FockArray::vacuum(out.shape);
    for (int s = 0; s < out.shape.system_modes; ++s)
      for (std::size_t l = 0; l < order.size(); ++l)
        compacted.at(s, static_cast<int>(l)) = array.at(s, order[l]);
    out.add_term(compacted, amplitude);
  }
  return out;
}

FirstQuantizedState first_quantize_impl(const PureState& state) {
  FirstQuantizedState fq;
  fq.system_modes = state.shape.system_modes;
  fq.label_modes = state.shape.label_modes;
  fq.single_particle_dim = fq.system_modes * fq.label_modes;
  fq.is_normalized = state.is_normalized;
  for (const auto& [array, amplitude] : state.terms) {
    const std::vector<int> modes = occupied_single_particle_modes(array);
    if (modes.size() != 2) throw std::logic_error("expected exactly two photons");
    if (modes[0] == modes[1]) {
      fq.terms[{modes[0], modes[0]}] += amplitude;
    } else {
      fq.terms[{modes[0], modes[1]}] += amplitude * kInvSqrt2;
      fq.terms[{modes[1], modes[0]}] += amplitude * kInvSqrt2;
    }
  }
  return fq;
}

}  // namespace

double DualityDecomposition::triplet_weight() const {
  double w = 0.0;
  for (const auto& [key, amplitude] : triplet_block) w += std::norm(amplitude);
  return w;
}

double DualityDecomposition::singlet_weight() const {
  double w = 0.0;
  for (const auto& [key, amplitude] : singlet_block) w += std::norm(amplitude);
  return w;
}

FirstQuantizedState first_quantize(const PureState& state) {
  require_two_particles(state);
  return first_quantize_impl(state);
}

DualityDecomposition decompose(const PureState& state) {
  require_two_particles(state);
  const PureState compact = compact_labels(state);
  const FirstQuantizedState fq = first_quantize_impl(compact);
  const int s_dim = compact.shape.system_modes;
  const int l_dim = compact.shape.label_modes;

  DualityDecomposition out;
  out.system_modes = s_dim;
  out.label_modes = l_dim;

  auto amplitude_of = [&fq](int a, int b) -> Complex {
    auto it = fq.terms.find({a, b});
    return it == fq.terms.end() ? Complex(0.0, 0.0) : it->second;
  };

  auto project = [&](bool antisymmetric,
                     std::map<std::pair<IndexPair, IndexPair>, Complex>& block) {
    for (const IndexPair& sys : pair_basis(s_dim, antisymmetric)) {
      for (const IndexPair& lab : pair_basis(l_dim, antisymmetric)) {
        Complex coeff(0.0, 0.0);
        for (const auto& [spair, sc] : pair_basis_components(sys, antisymmetric)) {
          for (const auto& [lpair, lc] : pair_basis_components(lab, antisymmetric)) {
            const int a = spair.first * l_dim + lpair.first;
            const int b = spair.second * l_dim + lpair.second;
            coeff += sc * lc * amplitude_of(a, b);
          }
        }
        if (std::abs(coeff) > kAmplitudePruneTol) block[{sys, lab}] = coeff;
      }
    }
  };
  project(false, out.triplet_block);
  project(true, out.singlet_block);

  // Schmidt coefficients: singular values of the block-diagonal
  // System-vs-Label coefficient matrix, i.e. the union over both sectors.
  auto block_singular_values = [](const std::map<std::pair<IndexPair, IndexPair>,
                                                 Complex>& block,
                                  const std::vector<IndexPair>& sys_basis,
                                  const std::vector<IndexPair>& lab_basis) {
    std::vector<double> values;
    if (block.empty() || sys_basis.empty() || lab_basis.empty()) return values;
    ComplexMatrix m = ComplexMatrix::Zero(sys_basis.size(), lab_basis.size());
    for (const auto& [key, amplitude] : block) {
      const auto srow = std::find(sys_basis.begin(), sys_basis.end(), key.first);
      const auto lcol = std::find(lab_basis.begin(), lab_basis.end(), key.second);
      m(srow - sys_basis.begin(), lcol - lab_basis.begin()) = amplitude;
    }
    Eigen::JacobiSVD<ComplexMatrix> svd(m);
    for (Eigen::Index k = 0; k < svd.singularValues().size(); ++k)
      values.push_back(svd.singularValues()(k));
    return values;
  };
  std::vector<double> sv = block_singular_values(
      out.triplet_block, pair_basis(s_dim, false), pair_basis(l_dim, false));
  const std::vector<double> sv_singlet = block_singular_values(
      out.singlet_block, pair_basis(s_dim, true), pair_basis(l_dim, true));
  sv.insert(sv.end(), sv_singlet.begin(), sv_singlet.end());
  std::sort(sv.begin(), sv.end(), std::greater<double>());
  out.schmidt_coefficients = std::move(sv);
  return out;
}

FirstQuantizedState reconstruct(const DualityDecomposition& decomposition) {
  FirstQuantizedState fq;
  fq.system_modes = decomposition.system_modes;
  fq.label_modes = decomposition.label_modes;
  fq.single_particle_dim = fq.system_modes * fq.label_modes;
  const int l_dim = decomposition.label_modes;

  auto accumulate = [&](const std::map<std::pair<IndexPair, IndexPair>, Complex>& block,
                        bool antisymmetric) {
    for (const auto& [key, amplitude] : block) {
      for (const auto& [spair, sc] : pair_basis_components(key.first, antisymmetric)) {
        for (const auto& [lpair, lc] : pair_basis_components(key.second, antisymmetric)) {
          const int a = spair.first * l_dim + lpair.first;
          const int b = spair.second * l_dim + lpair.second;
          fq.terms[{a, b}] += amplitude * sc * lc;
        }
      }
    }
  };
  accumulate(decomposition.triplet_block, false);
  accumulate(decomposition.singlet_block, true);
  return fq;
}

int schmidt_rank(const PureState& state, double tol) {
  const DualityDecomposition d = decompose(state);
  int rank = 0;
  for (double sv : d.schmidt_coefficients)
    if (sv > tol) ++rank;
  return rank;
}

double singlet_weight(const PureState& state) {
  return decompose(state).singlet_weight();
}

}  // namespace photondual
