#pragma once

#include "photondual/fock.hpp"
#include "photondual/kernels.hpp"

namespace photondual {

/// A validated S x S unitary acting on System modes only (U tensor identity
/// on the Label space). The unitarity defect is checked at construction.
class Interferometer {
 public:
  explicit Interferometer(ComplexMatrix u);

  const ComplexMatrix& matrix() const { return u_; }
  int dim() const { return static_cast<int>(u_.rows()); }
  double defect() const { return defect_; }

 private:
  ComplexMatrix u_;
  double defect_ = 0.0;
};

/// Transforms each creation operator as a^dag_{s,l} -> sum_t a^dag_{t,l} U_{t,s},
/// leaving Label columns untouched. Output amplitudes are computed per Label
/// column from permanents of occupation-repeated submatrices of U, with the
/// standard 1/sqrt(n!) Fock normalization. The output is flagged unnormalized
/// only if the input was.
PureState apply(const Interferometer& interferometer, const PureState& state);

/// Ground-truth evaluation of the same transformation by expanding the
/// polynomial of transformed creation operators monomial by monomial
/// (exponential cost). Bounded to N <= 4 and S*L <= 8.
PureState symbolic_apply(const Interferometer& interferometer, const PureState& state);

/// Matrix product a*b: b is applied first, a second. Dimensions must agree;
/// the result is revalidated as unitary.
Interferometer compose(const Interferometer& a, const Interferometer& b);

/// S x S identity with the balanced-beamsplitter block
///   (1/sqrt(2)) [[1, i], [i, 1]]
/// on the two given (distinct, 0-based) ports. `reflection_phase` rotates the
/// off-diagonal block to (1/sqrt(2)) [[1, i e^{i phi}], [i e^{-i phi}, 1]] for
/// callers needing a different phase convention.
Interferometer embed_beamsplitter(int system_modes, int port_a, int port_b,
                                  double reflection_phase = 0.0);

}  // namespace photondual
