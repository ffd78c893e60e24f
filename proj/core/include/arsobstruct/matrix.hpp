#pragma once

#include <cstddef>
#include <vector>

#include "arsobstruct/field.hpp"

namespace arsob {

using Vec = std::vector<Rational>;

// Dense matrix over an exact field.  Linear maps use the column-vector
// convention: an (r x c) matrix sends k^c to k^r.
class Matrix {
public:
  Matrix() : rows_(0), cols_(0) {}
  Matrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols, Rational(0)) {}

  static Matrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  bool is_zero() const;
  bool operator==(const Matrix& other) const {
    return rows_ == other.rows_ && cols_ == other.cols_ && data_ == other.data_;
  }

  Matrix multiply(const Matrix& rhs, const Field& f) const;
  Matrix add(const Matrix& rhs, const Field& f) const;
  Matrix transpose() const;
  Vec apply(const Vec& v, const Field& f) const;

private:
  std::size_t rows_, cols_;
  std::vector<Rational> data_;
};

// In-place reduced row echelon form; returns pivot column indices.
std::vector<std::size_t> rref(Matrix& m, const Field& f);

std::size_t rank(const Matrix& m, const Field& f);

// Basis of the (right) null space { v : M v = 0 }, deterministic.
std::vector<Vec> kernel_basis(const Matrix& m, const Field& f);

// Solve M x = b; returns true and writes one solution into x if solvable.
bool solve(const Matrix& m, const Vec& b, Vec& x, const Field& f);

// --- subspace helpers (subspaces of k^n as lists of spanning vectors) ---

// Reduced row-echelon basis of the span; deterministic canonical form.
std::vector<Vec> span_basis(const std::vector<Vec>& vectors, std::size_t n, const Field& f);

std::size_t span_dim(const std::vector<Vec>& vectors, std::size_t n, const Field& f);

// Is v in the span of basis (arbitrary spanning set)?
bool in_span(const std::vector<Vec>& spanning, const Vec& v, std::size_t n, const Field& f);

}  // namespace arsob
