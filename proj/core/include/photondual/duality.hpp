#pragma once

#include "photondual/fock.hpp"

#include <map>
#include <utility>
#include <vector>

namespace photondual {

/// Totally symmetric two-particle state over single-particle (system, label)
/// indices. Terms map ordered pairs of combined indices m = s * L + l to
/// amplitudes; exchange symmetry amplitude(a,b) == amplitude(b,a) holds by
/// construction.
struct FirstQuantizedState {
  int single_particle_dim = 0;  // S * L
  int system_modes = 0;
  int label_modes = 0;
  std::map<std::pair<int, int>, Complex> terms;

  bool is_normalized = true;
};

/// Unordered index pair (i <= j): a symmetric-basis element sym(i,j) of one
/// factor, or with i < j an antisymmetric-basis element asym(i,j).
using IndexPair = std::pair<int, int>;

/// N = 2 Schmidt data: amplitudes on (System irrep basis) x (Label irrep
/// basis) pairs for the symmetric (triplet-type) and antisymmetric
/// (singlet-type) sectors, plus the singular values of the System-vs-Label
/// coefficient matrix in non-increasing order.
struct DualityDecomposition {
  int system_modes = 0;
  int label_modes = 0;  // occupied labels only (at most 2 for N = 2)
  std::map<std::pair<IndexPair, IndexPair>, Complex> triplet_block;
  std::map<std::pair<IndexPair, IndexPair>, Complex> singlet_block;
  std::vector<double> schmidt_coefficients;

  double triplet_weight() const;
  double singlet_weight() const;
};

/// Maps each Fock array of an N = 2 state to its symmetrized two-particle
/// expansion (1/sqrt(2) symmetrization factors for distinct modes).
FirstQuantizedState first_quantize(const PureState& state);

/// Rewrites the first-quantized state in the product basis of symmetric and
/// antisymmetric irrep bases of the System and Label factors. The change of
/// basis is exact and invertible; Label columns never occupied by the state
/// are projected away first.
DualityDecomposition decompose(const PureState& state);

/// Reconstructs the first-quantized ordered-pair amplitudes from the blocks
/// (inverse of the decomposition; used to verify exactness).
FirstQuantizedState reconstruct(const DualityDecomposition& decomposition);

/// Number of singular values of the System-vs-Label coefficient matrix above
/// tol. Rank 1 means System and Label are uncorrelated.
int schmidt_rank(const PureState& state, double tol = 1e-8);

/// Squared norm of the antisymmetric (singlet) block, in [0, 1].
double singlet_weight(const PureState& state);

}  // namespace photondual
