#pragma once

#include <Eigen/Dense>

#include <complex>
#include <cstdint>
#include <vector>

namespace photondual {

using Complex = std::complex<double>;

/// Dense complex matrix used for transfer matrices and their submatrices.
using ComplexMatrix = Eigen::MatrixXcd;

// Default comparison tolerances. A check passes when either the absolute or
// the relative bound holds, whichever is looser.
inline constexpr double kAbsTol = 1e-12;
inline constexpr double kRelTol = 1e-10;

// Amplitudes below this are treated as exact zeros and pruned from states.
inline constexpr double kAmplitudePruneTol = 1e-14;

bool approx_equal(Complex a, Complex b, double abs_tol = kAbsTol,
                  double rel_tol = kRelTol);

/// Integer partition (Young diagram): non-increasing positive row lengths.
struct Partition {
  std::vector<int> parts;

  explicit Partition(std::vector<int> p);

  /// Number of boxes, i.e. the particle count n the diagram addresses.
  int boxes() const;

  bool operator==(const Partition& other) const { return parts == other.parts; }
};

/// Throws std::invalid_argument when any entry is NaN or infinite.
void ensure_finite(const ComplexMatrix& m);

/// Throws std::invalid_argument for non-square input.
void ensure_square(const ComplexMatrix& m);

/// Permanent via Gray-code Ryser, O(2^n * n). Matches the permutation sum
/// sum_sigma prod_i m(i, sigma(i)). n = 0 returns 1; n > 20 is rejected.
Complex permanent(const ComplexMatrix& m);

/// Signed permutation sum, computed by partial-pivot LU. n = 0 returns 1.
Complex determinant(const ComplexMatrix& m);

/// Irreducible S_n character chi_lambda evaluated on a conjugacy class given
/// by its cycle type, via the Murnaghan-Nakayama rule. Both partitions must
/// have the same number of boxes. Characters are exact integers.
long long sn_character(const Partition& lambda, const Partition& cycle_type);

/// Immanant sum_sigma chi_lambda(sigma) prod_i m(i, sigma(i)).
/// lambda must have as many boxes as the matrix has rows; n <= 6.
Complex immanant(const ComplexMatrix& m, const Partition& lambda);

/// Rows/columns selected in the given order; indices are 0-based, must be in
/// range and duplicate-free.
ComplexMatrix submatrix(const ComplexMatrix& m, const std::vector<int>& rows,
                        const std::vector<int>& cols);

/// Max-norm of (m^dagger m - I); zero iff m is unitary to working precision.
double unitarity_defect(const ComplexMatrix& m);

}  // namespace photondual
