#include "arsobstruct/matrix.hpp"

#include <algorithm>

namespace arsob {

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

bool Matrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Rational& x) { return x == 0; });
}

Matrix Matrix::multiply(const Matrix& rhs, const Field& f) const {
  Matrix out(rows_, rhs.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Rational& a = at(i, k);
      if (a == 0) continue;
      for (std::size_t j = 0; j < rhs.cols_; ++j) {
        if (rhs.at(k, j) == 0) continue;
        out.at(i, j) = f.add(out.at(i, j), f.mul(a, rhs.at(k, j)));
      }
    }
  return out;
}

Matrix Matrix::add(const Matrix& rhs, const Field& f) const {
  Matrix out(rows_, cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out.at(i, j) = f.add(at(i, j), rhs.at(i, j));
  return out;
}

Matrix Matrix::transpose() const {
  Matrix out(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out.at(j, i) = at(i, j);
  return out;
}

Vec Matrix::apply(const Vec& v, const Field& f) const {
  Vec out(rows_, Rational(0));
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) {
      if (at(i, j) == 0 || v[j] == 0) continue;
      out[i] = f.add(out[i], f.mul(at(i, j), v[j]));
    }
  return out;
}

std::vector<std::size_t> rref(Matrix& m, const Field& f) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t sel = row;
    while (sel < m.rows() && m.at(sel, col) == 0) ++sel;
    if (sel == m.rows()) continue;
    if (sel != row)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m.at(sel, j), m.at(row, j));
    Rational inv = f.inv(m.at(row, col));
    for (std::size_t j = col; j < m.cols(); ++j) m.at(row, j) = f.mul(m.at(row, j), inv);
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == row || m.at(i, col) == 0) continue;
      Rational factor = m.at(i, col);
      for (std::size_t j = col; j < m.cols(); ++j)
        m.at(i, j) = f.sub(m.at(i, j), f.mul(factor, m.at(row, j)));
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

std::size_t rank(const Matrix& m, const Field& f) {
  Matrix copy = m;
  return rref(copy, f).size();
}

std::vector<Vec> kernel_basis(const Matrix& m, const Field& f) {
  Matrix r = m;
  std::vector<std::size_t> pivots = rref(r, f);
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t p : pivots) is_pivot[p] = true;
  std::vector<Vec> basis;
  for (std::size_t free_col = 0; free_col < m.cols(); ++free_col) {
    if (is_pivot[free_col]) continue;
    Vec v(m.cols(), Rational(0));
    v[free_col] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i)
      v[pivots[i]] = f.neg(r.at(i, free_col));
    basis.push_back(std::move(v));
  }
  return basis;
}

bool solve(const Matrix& m, const Vec& b, Vec& x, const Field& f) {
  // augmented elimination
  Matrix aug(m.rows(), m.cols() + 1);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, m.cols()) = b[i];
  }
  std::vector<std::size_t> pivots = rref(aug, f);
  if (!pivots.empty() && pivots.back() == m.cols()) return false;  // inconsistent
  x.assign(m.cols(), Rational(0));
  for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = aug.at(i, m.cols());
  return true;
}

std::vector<Vec> span_basis(const std::vector<Vec>& vectors, std::size_t n, const Field& f) {
  Matrix m(vectors.size(), n);
  for (std::size_t i = 0; i < vectors.size(); ++i)
    for (std::size_t j = 0; j < n; ++j) m.at(i, j) = vectors[i][j];
  std::vector<std::size_t> pivots = rref(m, f);
  std::vector<Vec> basis;
  for (std::size_t i = 0; i < pivots.size(); ++i) {
    Vec v(n);
    for (std::size_t j = 0; j < n; ++j) v[j] = m.at(i, j);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::size_t span_dim(const std::vector<Vec>& vectors, std::size_t n, const Field& f) {
  Matrix m(vectors.size(), n);
  for (std::size_t i = 0; i < vectors.size(); ++i)
    for (std::size_t j = 0; j < n; ++j) m.at(i, j) = vectors[i][j];
  return rank(m, f);
}

bool in_span(const std::vector<Vec>& spanning, const Vec& v, std::size_t n, const Field& f) {
  // v in span <=> appending v does not raise the rank
  Matrix m(spanning.size() + 1, n);
  for (std::size_t i = 0; i < spanning.size(); ++i)
    for (std::size_t j = 0; j < n; ++j) m.at(i, j) = spanning[i][j];
  for (std::size_t j = 0; j < n; ++j) m.at(spanning.size(), j) = v[j];
  Matrix without(spanning.size(), n);
  for (std::size_t i = 0; i < spanning.size(); ++i)
    for (std::size_t j = 0; j < n; ++j) without.at(i, j) = spanning[i][j];
  return rank(m, f) == rank(without, f);
}

}  // namespace arsob
