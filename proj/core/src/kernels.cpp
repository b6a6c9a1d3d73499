#include "photondual/kernels.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <map>
#include <numeric>
#include <stdexcept>

namespace photondual {

bool approx_equal(Complex a, Complex b, double abs_tol, double rel_tol) {
  const double diff = std::abs(a - b);
  const double scale = std::max(std::abs(a), std::abs(b));
  return diff <= abs_tol || diff <= rel_tol * scale;
}

Partition::Partition(std::vector<int> p) : parts(std::move(p)) {
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (parts[i] < 1) throw std::invalid_argument("Partition parts must be >= 1");
    if (i > 0 && parts[i] > parts[i - 1])
      throw std::invalid_argument("Partition parts must be non-increasing");
  }
}

int Partition::boxes() const {
  return std::accumulate(parts.begin(), parts.end(), 0);
}

void ensure_finite(const ComplexMatrix& m) {
  if (!m.allFinite())
    throw std::invalid_argument("matrix has non-finite entries");
}

void ensure_square(const ComplexMatrix& m) {
  if (m.rows() != m.cols())
    throw std::invalid_argument("matrix must be square");
}

Complex permanent(const ComplexMatrix& m) {
  ensure_square(m);
  ensure_finite(m);
  const int n = static_cast<int>(m.rows());
  if (n == 0) return Complex(1.0, 0.0);
  if (n > 20) throw std::invalid_argument("permanent limited to n <= 20");

  // Ryser with Gray-code subset enumeration:
  //   per(A) = (-1)^n sum_{S != 0} (-1)^{|S|} prod_i sum_{j in S} a_ij
  std::vector<Complex> row_sums(n, Complex(0.0, 0.0));
  Complex total(0.0, 0.0);
  std::uint64_t prev_gray = 0;
  int popcount = 0;
  const std::uint64_t subsets = std::uint64_t(1) << n;
  for (std::uint64_t k = 1; k < subsets; ++k) {
    const std::uint64_t gray = k ^ (k >> 1);
    const std::uint64_t changed = gray ^ prev_gray;
    const int col = std::countr_zero(changed);
    const bool added = (gray & changed) != 0;
    if (added) {
      for (int i = 0; i < n; ++i) row_sums[i] += m(i, col);
      ++popcount;
    } else {
      for (int i = 0; i < n; ++i) row_sums[i] -= m(i, col);
      --popcount;
    }
    Complex prod(1.0, 0.0);
    for (int i = 0; i < n; ++i) prod *= row_sums[i];
    total += ((n - popcount) % 2 == 0) ? prod : -prod;
    prev_gray = gray;
  }
  return total;
}

Complex determinant(const ComplexMatrix& m) {
  ensure_square(m);
  ensure_finite(m);
  if (m.rows() == 0) return Complex(1.0, 0.0);
  return m.determinant();
}

namespace {

// First-column hook lengths ("beta numbers") of lambda padded to `rows` rows.
std::vector<int> beta_numbers(const std::vector<int>& parts, int rows) {
  std::vector<int> beta(rows, 0);
  for (int i = 0; i < rows; ++i) {
    const int part = i < static_cast<int>(parts.size()) ? parts[i] : 0;
    beta[i] = part + (rows - 1 - i);
  }
  return beta;
}

std::vector<int> partition_from_beta(std::vector<int> beta) {
  std::sort(beta.begin(), beta.end(), std::greater<int>());
  const int rows = static_cast<int>(beta.size());
  std::vector<int> parts;
  for (int i = 0; i < rows; ++i) {
    const int part = beta[i] - (rows - 1 - i);
    if (part > 0) parts.push_back(part);
  }
  return parts;
}

using CharMemo = std::map<std::pair<std::vector<int>, std::size_t>, long long>;

long long mn_character(const std::vector<int>& lambda,
                       const std::vector<int>& cycles, std::size_t cycle_index,
                       CharMemo& memo) {
  if (cycle_index == cycles.size()) return 1;  // empty diagram, empty class
  const auto key = std::make_pair(lambda, cycle_index);
  if (auto it = memo.find(key); it != memo.end()) return it->second;

  const int strip = cycles[cycle_index];
  const int rows = static_cast<int>(lambda.size());
  const std::vector<int> beta = beta_numbers(lambda, rows);
  long long total = 0;
  for (int i = 0; i < rows; ++i) {
    const int target = beta[i] - strip;
    if (target < 0) continue;
    if (std::find(beta.begin(), beta.end(), target) != beta.end()) continue;
    // Height of the removed border strip = occupied positions passed over.
    int height = 0;
    for (int j = 0; j < rows; ++j)
      if (beta[j] > target && beta[j] < beta[i]) ++height;
    std::vector<int> next_beta = beta;
    next_beta[i] = target;
    const long long sub =
        mn_character(partition_from_beta(std::move(next_beta)), cycles,
                     cycle_index + 1, memo);
    total += (height % 2 == 0) ? sub : -sub;
  }
  memo[key] = total;
  return total;
}

std::vector<int> cycle_type_of(const std::vector<int>& perm) {
  const int n = static_cast<int>(perm.size());
  std::vector<bool> seen(n, false);
  std::vector<int> cycles;
  for (int i = 0; i < n; ++i) {
    if (seen[i]) continue;
    int len = 0;
    for (int j = i; !seen[j]; j = perm[j]) {
      seen[j] = true;
      ++len;
    }
    cycles.push_back(len);
  }
  std::sort(cycles.begin(), cycles.end(), std::greater<int>());
  return cycles;
}

}  // namespace

long long sn_character(const Partition& lambda, const Partition& cycle_type) {
  if (lambda.boxes() != cycle_type.boxes())
    throw std::invalid_argument("partition and cycle type must have equal size");
  CharMemo memo;
  return mn_character(lambda.parts, cycle_type.parts, 0, memo);
}

Complex immanant(const ComplexMatrix& m, const Partition& lambda) {
  ensure_square(m);
  ensure_finite(m);
  const int n = static_cast<int>(m.rows());
  if (lambda.boxes() != n)
    throw std::invalid_argument("partition must have as many boxes as matrix rows");
  if (n > 6) throw std::invalid_argument("immanant limited to n <= 6");
  if (n == 0) return Complex(1.0, 0.0);

  std::map<std::vector<int>, long long> char_by_type;
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  Complex total(0.0, 0.0);
  do {
    const std::vector<int> type = cycle_type_of(perm);
    auto it = char_by_type.find(type);
    if (it == char_by_type.end()) {
      CharMemo memo;  // valid for one cycle type only: keys ignore the type
      const long long chi = mn_character(lambda.parts, type, 0, memo);
      it = char_by_type.emplace(type, chi).first;
    }
    if (it->second == 0) continue;
    Complex prod(1.0, 0.0);
    for (int i = 0; i < n; ++i) prod *= m(i, perm[i]);
    total += static_cast<double>(it->second) * prod;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

ComplexMatrix submatrix(const ComplexMatrix& m, const std::vector<int>& rows,
                        const std::vector<int>& cols) {
  auto check = [](const std::vector<int>& idx, Eigen::Index bound,
                  const char* what) {
    std::vector<int> sorted = idx;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      throw std::invalid_argument(std::string("repeated ") + what + " index");
    for (int i : idx)
      if (i < 0 || i >= bound)
        throw std::invalid_argument(std::string(what) + " index out of range");
  };
  check(rows, m.rows(), "row");
  check(cols, m.cols(), "column");

  ComplexMatrix out(rows.size(), cols.size());
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < cols.size(); ++c)
      out(r, c) = m(rows[r], cols[c]);
  return out;
}

double unitarity_defect(const ComplexMatrix& m) {
  ensure_square(m);
  ensure_finite(m);
  if (m.rows() == 0) return 0.0;
  const ComplexMatrix defect =
      m.adjoint() * m - ComplexMatrix::Identity(m.rows(), m.cols());
  return defect.cwiseAbs().maxCoeff();
}

}  // namespace photondual
