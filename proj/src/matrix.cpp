#include "polyreal/matrix.hpp"

#include <algorithm>

namespace polyreal {

MatrixQ::MatrixQ(std::initializer_list<std::initializer_list<Rational>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  entries_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw error("MatrixQ: ragged initializer");
    entries_.insert(entries_.end(), r.begin(), r.end());
  }
}

MatrixQ MatrixQ::identity(std::size_t n) {
  MatrixQ m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

std::vector<Rational> MatrixQ::row(std::size_t r) const {
  return std::vector<Rational>(entries_.begin() + r * cols_, entries_.begin() + (r + 1) * cols_);
}

std::vector<Rational> MatrixQ::col(std::size_t c) const {
  std::vector<Rational> out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out[r] = at(r, c);
  return out;
}

MatrixQ MatrixQ::transposed() const {
  MatrixQ t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
  return t;
}

MatrixQ MatrixQ::operator*(const MatrixQ& other) const {
  if (cols_ != other.rows_) throw error("MatrixQ::operator*: dimension mismatch");
  MatrixQ out(rows_, other.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Rational& a = at(i, k);
      if (a == 0) continue;
      for (std::size_t j = 0; j < other.cols_; ++j) out.at(i, j) += a * other.at(k, j);
    }
  return out;
}

std::vector<Rational> MatrixQ::operator*(const std::vector<Rational>& v) const {
  if (cols_ != v.size()) throw error("MatrixQ::operator*: dimension mismatch");
  std::vector<Rational> out(rows_, Rational(0));
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out[i] += at(i, j) * v[j];
  return out;
}

Rational det(const MatrixQ& m) {
  if (m.rows() != m.cols()) throw error("det: non-square matrix");
  const std::size_t n = m.rows();
  MatrixQ a = m;
  Rational result(1);
  for (std::size_t col = 0; col < n; ++col) {
    // Pivot with the largest numerator magnitude to keep intermediates small.
    std::size_t pivot = col;
    bool found = false;
    Integer best(0);
    for (std::size_t r = col; r < n; ++r) {
      if (a.at(r, col) != 0) {
        Integer mag = integer_abs(rat_num(a.at(r, col)));
        if (!found || mag > best) {
          best = mag;
          pivot = r;
          found = true;
        }
      }
    }
    if (!found) return Rational(0);
    if (pivot != col) {
      for (std::size_t c = col; c < n; ++c) std::swap(a.at(pivot, c), a.at(col, c));
      result = -result;
    }
    const Rational p = a.at(col, col);
    result *= p;
    for (std::size_t r = col + 1; r < n; ++r) {
      if (a.at(r, col) == 0) continue;
      const Rational f = a.at(r, col) / p;
      for (std::size_t c = col; c < n; ++c) a.at(r, c) -= f * a.at(col, c);
    }
  }
  return result;
}

std::vector<std::size_t> rref(MatrixQ& m) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t pivot = row;
    bool found = false;
    Integer best(0);
    for (std::size_t r = row; r < m.rows(); ++r) {
      if (m.at(r, col) != 0) {
        Integer mag = integer_abs(rat_num(m.at(r, col)));
        if (!found || mag > best) {
          best = mag;
          pivot = r;
          found = true;
        }
      }
    }
    if (!found) continue;
    if (pivot != row)
      for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m.at(pivot, c), m.at(row, c));
    const Rational p = m.at(row, col);
    for (std::size_t c = 0; c < m.cols(); ++c) m.at(row, c) /= p;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == row || m.at(r, col) == 0) continue;
      const Rational f = m.at(r, col);
      for (std::size_t c = 0; c < m.cols(); ++c) m.at(r, c) -= f * m.at(row, c);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

std::size_t rank(const MatrixQ& m) {
  MatrixQ a = m;
  return rref(a).size();
}

std::vector<std::vector<Rational>> null_space(const MatrixQ& m) {
  MatrixQ a = m;
  const std::vector<std::size_t> pivots = rref(a);
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t p : pivots) is_pivot[p] = true;

  std::vector<std::vector<Rational>> basis;
  for (std::size_t free_col = 0; free_col < m.cols(); ++free_col) {
    if (is_pivot[free_col]) continue;
    std::vector<Rational> v(m.cols(), Rational(0));
    v[free_col] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -a.at(i, free_col);
    basis.push_back(std::move(v));
  }
  return basis;
}

LinearSolution solve_linear(const MatrixQ& a, const std::vector<Rational>& b) {
  if (a.rows() != b.size()) throw error("solve_linear: dimension mismatch");
  MatrixQ aug(a.rows(), a.cols() + 1);
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) aug.at(r, c) = a.at(r, c);
    aug.at(r, a.cols()) = b[r];
  }
  std::vector<std::size_t> pivots = rref(aug);

  LinearSolution sol;
  if (!pivots.empty() && pivots.back() == a.cols()) {
    sol.kind = LinearSolution::Kind::inconsistent;
    return sol;
  }
  sol.particular.assign(a.cols(), Rational(0));
  for (std::size_t i = 0; i < pivots.size(); ++i) sol.particular[pivots[i]] = aug.at(i, a.cols());

  std::vector<bool> is_pivot(a.cols(), false);
  for (std::size_t p : pivots) is_pivot[p] = true;
  for (std::size_t free_col = 0; free_col < a.cols(); ++free_col) {
    if (is_pivot[free_col]) continue;
    std::vector<Rational> v(a.cols(), Rational(0));
    v[free_col] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -aug.at(i, free_col);
    sol.basis.push_back(std::move(v));
  }
  sol.kind = sol.basis.empty() ? LinearSolution::Kind::unique : LinearSolution::Kind::affine_family;
  return sol;
}

MatrixQ inverse(const MatrixQ& m) {
  if (m.rows() != m.cols()) throw error("inverse: non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return m;
  MatrixQ aug(n, 2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug.at(r, c) = m.at(r, c);
    aug.at(r, n + r) = 1;
  }
  std::vector<std::size_t> pivots = rref(aug);
  if (pivots.size() != n || pivots.back() != n - 1) throw error("inverse: singular matrix");
  MatrixQ inv(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) inv.at(r, c) = aug.at(r, n + c);
  return inv;
}

}  // namespace polyreal
