#pragma once

#include "photondual/kernels.hpp"

#include <map>
#include <vector>

namespace photondual {

/// System modes are interferometer ports; Label modes span the orthonormal
/// basis of whatever internal degree of freedom distinguishes the photons.
struct ModeShape {
  int system_modes = 0;
  int label_modes = 0;

  auto operator<=>(const ModeShape&) const = default;
};

/// Occupation-number grid: rows are System modes, columns are Label modes.
/// Ordering is lexicographic over the flattened (row-major) grid, which
/// fixes a canonical term order for iteration and serialization.
struct FockArray {
  ModeShape shape;
  std::vector<int> occ;  // row-major, size S*L

  FockArray() = default;
  static FockArray vacuum(ModeShape shape);
  /// Builds from an S x L grid of occupation numbers.
  static FockArray from_grid(const std::vector<std::vector<int>>& grid);

  int at(int system_mode, int label_mode) const;
  int& at(int system_mode, int label_mode);

  /// Total photons in one System mode (row sum).
  int system_count(int system_mode) const;
  /// Total photons in one Label mode (column sum).
  int label_count(int label_mode) const;
  /// Total particle number N.
  int particles() const;

  auto operator<=>(const FockArray&) const = default;
};

/// Finite superposition of Fock arrays of one shape and particle number.
/// States produced by postselection are unnormalized: `is_normalized` is
/// cleared and `stored_norm` holds the Euclidean norm at construction.
struct PureState {
  ModeShape shape;
  int particles = 0;
  std::map<FockArray, Complex> terms;
  bool is_normalized = true;
  double stored_norm = 1.0;

  /// Inserts amplitude, accumulating into an existing term; exact-zero
  /// results (below kAmplitudePruneTol) are pruned so term counts stay
  /// canonical.
  void add_term(const FockArray& array, Complex amplitude);

  /// Throws when any key disagrees with the declared shape/particle number,
  /// an amplitude is non-finite, or a normalized state has norm far from 1.
  void validate() const;
};

/// Euclidean norm of the amplitude vector.
double norm(const PureState& state);

/// Divides by the norm and marks the state normalized.
/// Throws std::domain_error on a zero-norm state.
PureState normalize(const PureState& state);

/// k x k matrix of pairwise label-wavefunction overlaps. Must be Hermitian
/// with unit diagonal and positive semidefinite.
struct LabelGram {
  ComplexMatrix g;

  explicit LabelGram(ComplexMatrix gram);
};

/// One photon per listed System mode, all sharing a single label (L = 1).
/// Modes are 0-based and must be distinct.
PureState fock_indistinguishable(int system_modes, const std::vector<int>& modes);

/// One photon per listed System mode, photon i carrying orthogonal label i
/// (L = photon count).
PureState fock_distinguishable(int system_modes, const std::vector<int>& modes);

/// Two photons in System modes 0 and 1 (L = 2):
///   alpha * (both labeled 0)  +  beta * (second photon labeled 1).
/// Requires |alpha|^2 + |beta|^2 = 1 and system_modes >= 2.
PureState partially_distinguishable(int system_modes, Complex alpha, Complex beta);

/// Two photons in the listed distinct System modes with label wavefunctions
/// described by their Gram matrix. Labels are re-expressed in an orthonormal
/// basis (Cholesky factor, photon 0's label first), and the creation-operator
/// product is expanded into Fock terms. Only k = 2 photons are supported.
PureState from_label_overlap(int system_modes, const std::vector<int>& modes,
                             const LabelGram& gram);

}  // namespace photondual
