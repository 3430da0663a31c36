#pragma once

#include <cstddef>
#include <vector>

#include "purespin/scalar.hpp"

namespace purespin {

// Dense row-major matrix over Q(i).
class Matrix {
public:
  Matrix() : rows_(0), cols_(0) {}
  Matrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}

  static Matrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Scalar& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& at(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }

  Scalar* row(std::size_t r) { return data_.data() + r * cols_; }
  const Scalar* row(std::size_t r) const { return data_.data() + r * cols_; }

  bool is_zero() const;
  Matrix transpose() const;

  Matrix& operator+=(const Matrix& o);
  Matrix& operator-=(const Matrix& o);
  Matrix& operator*=(const Scalar& s);

  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(Matrix a, const Scalar& s) { return a *= s; }
  friend Matrix operator*(const Scalar& s, Matrix a) { return a *= s; }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }
  friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

private:
  std::size_t rows_, cols_;
  std::vector<Scalar> data_;
};

// Product kernels. mul() may run the inner loops on OpenMP threads for large
// operands; mul_serial() is the single-threaded reference kept for testing.
// Both produce identical (exact) results.
Matrix mul_serial(const Matrix& a, const Matrix& b);
Matrix mul(const Matrix& a, const Matrix& b);
inline Matrix operator*(const Matrix& a, const Matrix& b) { return mul(a, b); }

struct RrefResult {
  Matrix matrix;                    // same shape as the input, fully reduced
  std::vector<std::size_t> pivots;  // pivot column per nonzero row
  std::size_t rank = 0;
};

// Reduced row echelon form with deterministic pivoting: scan columns left to
// right, take the first row with a nonzero entry. rref() parallelizes the
// row elimination; rref_serial() is the reference implementation.
RrefResult rref_serial(const Matrix& m);
RrefResult rref(const Matrix& m);

}  // namespace purespin
