#include "photondual/evolve.hpp"

#include <cmath>
#include <functional>
#include <stdexcept>

namespace photondual {

namespace {

constexpr double kUnitarityTol = 1e-10;

double factorial(int n) {
  double f = 1.0;
  for (int k = 2; k <= n; ++k) f *= k;
  return f;
}

/// All ways to place `photons` indistinguishable photons into `modes` bins.
std::vector<std::vector<int>> compositions(int photons, int modes) {
  std::vector<std::vector<int>> out;
  std::vector<int> current(modes, 0);
  std::function<void(int, int)> rec = [&](int mode, int remaining) {
    if (mode == modes - 1) {
      current[mode] = remaining;
      out.push_back(current);
      return;
    }
    for (int k = remaining; k >= 0; --k) {
      current[mode] = k;
      rec(mode + 1, remaining - k);
    }
  };
  if (modes > 0) rec(0, photons);
  return out;
}

/// Transition amplitude for one Label column: permanent of U with rows
/// repeated per output occupation and columns per input occupation, divided
/// by sqrt of the occupation factorials.
Complex column_amplitude(const ComplexMatrix& u, const std::vector<int>& in_occ,
                         const std::vector<int>& out_occ) {
  int photons = 0;
  for (int k : in_occ) photons += k;
  if (photons == 0) return Complex(1.0, 0.0);

  std::vector<int> rows, cols;
  rows.reserve(photons);
  cols.reserve(photons);
  for (std::size_t t = 0; t < out_occ.size(); ++t)
    for (int r = 0; r < out_occ[t]; ++r) rows.push_back(static_cast<int>(t));
  for (std::size_t s = 0; s < in_occ.size(); ++s)
    for (int r = 0; r < in_occ[s]; ++r) cols.push_back(static_cast<int>(s));

  ComplexMatrix repeated(photons, photons);
  for (int r = 0; r < photons; ++r)
    for (int c = 0; c < photons; ++c) repeated(r, c) = u(rows[r], cols[c]);

  double weight = 1.0;
  for (int k : in_occ) weight *= factorial(k);
  for (int k : out_occ) weight *= factorial(k);
  return permanent(repeated) / std::sqrt(weight);
}

}  // namespace

Interferometer::Interferometer(ComplexMatrix u) : u_(std::move(u)) {
  ensure_square(u_);
  ensure_finite(u_);
  if (u_.rows() < 1) throw std::invalid_argument("empty interferometer");
  defect_ = unitarity_defect(u_);
  if (defect_ > kUnitarityTol)
    throw std::invalid_argument("matrix is not unitary to working precision");
}

PureState apply(const Interferometer& interferometer, const PureState& state) {
  if (interferometer.dim() != state.shape.system_modes)
    throw std::invalid_argument("interferometer dimension disagrees with state");
  const ComplexMatrix& u = interferometer.matrix();
  const int s_modes = state.shape.system_modes;
  const int l_modes = state.shape.label_modes;

  PureState out;
  out.shape = state.shape;
  out.particles = state.particles;
  out.is_normalized = state.is_normalized;
  out.stored_norm = state.stored_norm;

  for (const auto& [array, amplitude] : state.terms) {
    // Work column by column; the interferometer never mixes Label columns.
    std::vector<std::vector<int>> in_cols(l_modes, std::vector<int>(s_modes, 0));
    for (int s = 0; s < s_modes; ++s)
      for (int l = 0; l < l_modes; ++l) in_cols[l][s] = array.at(s, l);

    std::vector<std::vector<std::pair<std::vector<int>, Complex>>> options(l_modes);
    for (int l = 0; l < l_modes; ++l) {
      const int photons = array.label_count(l);
      for (const auto& out_col : compositions(photons, s_modes)) {
        const Complex amp = column_amplitude(u, in_cols[l], out_col);
        if (std::abs(amp) > kAmplitudePruneTol) options[l].emplace_back(out_col, amp);
      }
    }

    // Cartesian product over Label columns, accumulated in fixed column order.
    FockArray target = FockArray::vacuum(state.shape);
    std::function<void(int, Complex)> combine = [&](int l, Complex acc) {
      if (l == l_modes) {
        out.add_term(target, amplitude * acc);
        return;
      }
      for (const auto& [out_col, amp] : options[l]) {
        for (int s = 0; s < s_modes; ++s) target.at(s, l) = out_col[s];
        combine(l + 1, acc * amp);
      }
    };
    combine(0, Complex(1.0, 0.0));
  }
  return out;
}

PureState symbolic_apply(const Interferometer& interferometer, const PureState& state) {
  if (interferometer.dim() != state.shape.system_modes)
    throw std::invalid_argument("interferometer dimension disagrees with state");
  if (state.particles > 4)
    throw std::invalid_argument("symbolic expansion bounded to N <= 4");
  if (state.shape.system_modes * state.shape.label_modes > 8)
    throw std::invalid_argument("symbolic expansion bounded to S*L <= 8");

  const ComplexMatrix& u = interferometer.matrix();
  const int s_modes = state.shape.system_modes;
  const int l_modes = state.shape.label_modes;

  PureState out;
  out.shape = state.shape;
  out.particles = state.particles;
  out.is_normalized = state.is_normalized;
  out.stored_norm = state.stored_norm;

  for (const auto& [array, amplitude] : state.terms) {
    // List the photons of this monomial as (mode, label) slots.
    std::vector<std::pair<int, int>> photons;
    double in_weight = 1.0;
    for (int s = 0; s < s_modes; ++s) {
      for (int l = 0; l < l_modes; ++l) {
        const int n = array.at(s, l);
        in_weight *= factorial(n);
        for (int k = 0; k < n; ++k) photons.emplace_back(s, l);
      }
    }

    // Expand prod_k (sum_t U_{t, s_k} a^dag_{t, l_k}) one photon at a time.
    std::map<FockArray, Complex> partial;
    partial.emplace(FockArray::vacuum(state.shape),
                    amplitude / std::sqrt(in_weight));
    for (const auto& [s, l] : photons) {
      std::map<FockArray, Complex> next;
      for (const auto& [arr, coeff] : partial) {
        for (int t = 0; t < s_modes; ++t) {
          const Complex c = coeff * u(t, s);
          FockArray grown = arr;
          grown.at(t, l) += 1;
          next[grown] += c;
        }
      }
      partial = std::move(next);
    }

    for (const auto& [arr, coeff] : partial) {
      double out_weight = 1.0;
      for (int v : arr.occ) out_weight *= factorial(v);
      out.add_term(arr, coeff * std::sqrt(out_weight));
    }
  }
  return out;
}

Interferometer compose(const Interferometer& a, const Interferometer& b) {
  if (a.dim() != b.dim())
    throw std::invalid_argument("cannot compose interferometers of different size");
  return Interferometer(a.matrix() * b.matrix());
}

Interferometer embed_beamsplitter(int system_modes, int port_a, int port_b,
                                  double reflection_phase) {
  if (port_a < 0 || port_a >= system_modes || port_b < 0 || port_b >= system_modes)
    throw std::invalid_argument("beamsplitter port out of range");
  if (port_a == port_b) throw std::invalid_argument("beamsplitter ports must differ");

  ComplexMatrix u = ComplexMatrix::Identity(system_modes, system_modes);
  const double r = 1.0 / std::sqrt(2.0);
  const Complex i(0.0, 1.0);
  u(port_a, port_a) = r;
  u(port_b, port_b) = r;
  u(port_a, port_b) = r * i * std::exp(Complex(0.0, reflection_phase));
  u(port_b, port_a) = r * i * std::exp(Complex(0.0, -reflection_phase));
  return Interferometer(std::move(u));
}

}  // namespace photondual
