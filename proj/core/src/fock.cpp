#include "photondual/fock.hpp"

#include <Eigen/Cholesky>

#include <cmath>
#include <numeric>
#include <stdexcept>

namespace photondual {

namespace {

void check_shape(ModeShape shape) {
  if (shape.system_modes < 1 || shape.label_modes < 1)
    throw std::invalid_argument("mode counts must be >= 1");
}

void check_modes(int system_modes, const std::vector<int>& modes) {
  if (modes.empty()) throw std::invalid_argument("mode list must be non-empty");
  for (std::size_t i = 0; i < modes.size(); ++i) {
    if (modes[i] < 0 || modes[i] >= system_modes)
      throw std::invalid_argument("system mode index out of range");
    for (std::size_t j = 0; j < i; ++j)
      if (modes[i] == modes[j])
        throw std::invalid_argument("repeated system mode not supported here");
  }
}

}  // namespace

FockArray FockArray::vacuum(ModeShape shape) {
  check_shape(shape);
  FockArray a;
  a.shape = shape;
  a.occ.assign(static_cast<std::size_t>(shape.system_modes) * shape.label_modes, 0);
  return a;
}

FockArray FockArray::from_grid(const std::vector<std::vector<int>>& grid) {
  if (grid.empty() || grid.front().empty())
    throw std::invalid_argument("occupation grid must be non-empty");
  const int s = static_cast<int>(grid.size());
  const int l = static_cast<int>(grid.front().size());
  FockArray a = vacuum({s, l});
  for (int i = 0; i < s; ++i) {
    if (static_cast<int>(grid[i].size()) != l)
      throw std::invalid_argument("ragged occupation grid");
    for (int j = 0; j < l; ++j) {
      if (grid[i][j] < 0) throw std::invalid_argument("negative occupation");
      a.at(i, j) = grid[i][j];
    }
  }
  return a;
}

int FockArray::at(int system_mode, int label_mode) const {
  return occ[static_cast<std::size_t>(system_mode) * shape.label_modes + label_mode];
}

int& FockArray::at(int system_mode, int label_mode) {
  return occ[static_cast<std::size_t>(system_mode) * shape.label_modes + label_mode];
}

int FockArray::system_count(int system_mode) const {
  int total = 0;
  for (int l = 0; l < shape.label_modes; ++l) total += at(system_mode, l);
  return total;
}

int FockArray::label_count(int label_mode) const {
  int total = 0;
  for (int s = 0; s < shape.system_modes; ++s) total += at(s, label_mode);
  return total;
}

int FockArray::particles() const {
  return std::accumulate(occ.begin(), occ.end(), 0);
}

void PureState::add_term(const FockArray& array, Complex amplitude) {
  auto it = terms.find(array);
  if (it == terms.end()) {
    if (std::abs(amplitude) > kAmplitudePruneTol) terms.emplace(array, amplitude);
    return;
  }
  it->second += amplitude;
  if (std::abs(it->second) <= kAmplitudePruneTol) terms.erase(it);
}

void PureState::validate() const {
  check_shape(shape);
  for (const auto& [array, amplitude] : terms) {
    if (array.shape != shape)
      throw std::invalid_argument("term shape disagrees with state shape");
    if (array.particles() != particles)
      throw std::invalid_argument("term particle number disagrees with state");
    if (!std::isfinite(amplitude.real()) || !std::isfinite(amplitude.imag()))
      throw std::invalid_argument("non-finite amplitude");
  }
  if (is_normalized && std::abs(norm(*this) - 1.0) > 1e-10)
    throw std::invalid_argument("state flagged normalized but norm != 1");
}

double norm(const PureState& state) {
  double sq = 0.0;
  for (const auto& [array, amplitude] : state.terms) sq += std::norm(amplitude);
  return std::sqrt(sq);
}

PureState normalize(const PureState& state) {
  const double n = norm(state);
  if (n <= 0.0) throw std::domain_error("cannot normalize a zero-norm state");
  PureState out = state;
  for (auto& [array, amplitude] : out.terms) amplitude /= n;
  out.is_normalized = true;
  out.stored_norm = 1.0;
  return out;
}

LabelGram::LabelGram(ComplexMatrix gram) : g(std::move(gram)) {
  ensure_square(g);
  ensure_finite(g);
  const int k = static_cast<int>(g.rows());
  if (k < 1) throw std::invalid_argument("empty Gram matrix");
  for (int i = 0; i < k; ++i) {
    if (std::abs(g(i, i) - Complex(1.0, 0.0)) > 1e-10)
      throw std::invalid_argument("Gram diagonal must be 1");
    for (int j = 0; j < k; ++j)
      if (std::abs(g(i, j) - std::conj(g(j, i))) > 1e-10)
        throw std::invalid_argument("Gram matrix must be Hermitian");
  }
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> eig(g);
  if (eig.eigenvalues().minCoeff() < -1e-10)
    throw std::invalid_argument("Gram matrix must be positive semidefinite");
}

PureState fock_indistinguishable(int system_modes, const std::vector<int>& modes) {
  check_modes(system_modes, modes);
  FockArray array = FockArray::vacuum({system_modes, 1});
  for (int m : modes) array.at(m, 0) = 1;
  PureState state;
  state.shape = array.shape;
  state.particles = static_cast<int>(modes.size());
  state.add_term(array, Complex(1.0, 0.0));
  return state;
}

PureState fock_distinguishable(int system_modes, const std::vector<int>& modes) {
  check_modes(system_modes, modes);
  const int k = static_cast<int>(modes.size());
  FockArray array = FockArray::vacuum({system_modes, k});
  for (int i = 0; i < k; ++i) array.at(modes[i], i) = 1;
  PureState state;
  state.shape = array.shape;
  state.particles = k;
  state.add_term(array, Complex(1.0, 0.0));
  return state;
}

PureState partially_distinguishable(int system_modes, Complex alpha, Complex beta) {
  if (system_modes < 2) throw std::invalid_argument("need at least two system modes");
  if (std::abs(std::norm(alpha) + std::norm(beta) - 1.0) > 1e-10)
    throw std::invalid_argument("|alpha|^2 + |beta|^2 must equal 1");

  const ModeShape shape{system_modes, 2};
  PureState state;
  state.shape = shape;
  state.particles = 2;

  FockArray same = FockArray::vacuum(shape);
  same.at(0, 0) = 1;
  same.at(1, 0) = 1;
  state.add_term(same, alpha);

  FockArray other = FockArray::vacuum(shape);
  other.at(0, 0) = 1;
  other.at(1, 1) = 1;
  state.add_term(other, beta);
  return state;
}

PureState from_label_overlap(int system_modes, const std::vector<int>& modes,
                             const LabelGram& gram) {
  check_modes(system_modes, modes);
  const int k = static_cast<int>(modes.size());
  if (k != 2) throw std::invalid_argument("label-overlap ingestion supports exactly 2 photons");
  if (gram.g.rows() != k)
    throw std::invalid_argument("Gram size must match photon count");

  // Row i of the (conjugated) Cholesky factor holds photon i's label
  // coordinates in the orthonormal basis, photon 0's label first.
  Eigen::LLT<ComplexMatrix> llt(gram.g);
  ComplexMatrix coords;
  if (llt.info() == Eigen::Success) {
    coords = llt.matrixL().toDenseMatrix().conjugate();
  } else {
    // |c| = 1: labels coincide up to phase and the Gram is singular.
    const Complex c = gram.g(1, 0);
    coords = ComplexMatrix::Zero(2, 2);
    coords(0, 0) = Complex(1.0, 0.0);
    coords(1, 0) = std::conj(c);
    coords(1, 1) = std::sqrt(std::max(0.0, 1.0 - std::norm(c)));
  }

  const ModeShape shape{system_modes, k};
  PureState state;
  state.shape = shape;
  state.particles = k;
  // Expand a^dag_{m0,f0} a^dag_{m1,f1} over the orthonormal label basis.
  for (int l0 = 0; l0 < k; ++l0) {
    for (int l1 = 0; l1 < k; ++l1) {
      const Complex amp = coords(0, l0) * coords(1, l1);
      if (std::abs(amp) <= kAmplitudePruneTol) continue;
      FockArray array = FockArray::vacuum(shape);
      array.at(modes[0], l0) += 1;
      array.at(modes[1], l1) += 1;
      state.add_term(array, amp);
    }
  }
  state.validate();
  return state;
}

}  // namespace photondual
