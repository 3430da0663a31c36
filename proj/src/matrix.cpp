#include "purespin/matrix.hpp"

#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace purespin {

namespace {

// Exact bignum ops are expensive enough that threading pays off well before
// the sizes classic float kernels would need.
constexpr std::size_t kParallelWork = 1u << 14;

}  // namespace

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Scalar(1);
  return m;
}

bool Matrix::is_zero() const {
  for (const auto& v : data_)
    if (!v.is_zero()) return false;
  return true;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
  return t;
}

Matrix& Matrix::operator+=(const Matrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_)
    throw std::invalid_argument("Matrix: shape mismatch in +");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
  return *this;
}

Matrix& Matrix::operator-=(const Matrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_)
    throw std::invalid_argument("Matrix: shape mismatch in -");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
  return *this;
}

Matrix& Matrix::operator*=(const Scalar& s) {
  for (auto& v : data_) v *= s;
  return *this;
}

namespace {

void mul_row(const Matrix& a, const Matrix& b, Matrix& out, std::size_t r) {
  for (std::size_t k = 0; k < a.cols(); ++k) {
    const Scalar& av = a.at(r, k);
    if (av.is_zero()) continue;
    const Scalar* brow = b.row(k);
    Scalar* orow = out.row(r);
    for (std::size_t c = 0; c < b.cols(); ++c) {
      if (brow[c].is_zero()) continue;
      orow[c] += av * brow[c];
    }
  }
}

}  // namespace

Matrix mul_serial(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows())
    throw std::invalid_argument("Matrix: shape mismatch in *");
  Matrix out(a.rows(), b.cols());
  for (std::size_t r = 0; r < a.rows(); ++r) mul_row(a, b, out, r);
  return out;
}

Matrix mul(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows())
    throw std::invalid_argument("Matrix: shape mismatch in *");
  Matrix out(a.rows(), b.cols());
  const std::size_t work = a.rows() * a.cols() * b.cols();
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) if (work >= kParallelWork)
#endif
  for (std::size_t r = 0; r < a.rows(); ++r) mul_row(a, b, out, r);
  (void)work;
  return out;
}

namespace {

RrefResult rref_impl(const Matrix& in, bool parallel) {
  RrefResult res;
  res.matrix = in;
  Matrix& m = res.matrix;
  const std::size_t rows = m.rows(), cols = m.cols();
  std::size_t r = 0;
  for (std::size_t col = 0; col < cols && r < rows; ++col) {
    // first nonzero entry at or below r: deterministic pivot choice, which is
    // what makes the reduced form canonical across runs and thread counts
    std::size_t p = rows;
    for (std::size_t q = r; q < rows; ++q) {
      if (!m.at(q, col).is_zero()) {
        p = q;
        break;
      }
    }
    if (p == rows) continue;
    if (p != r) {
      for (std::size_t c = 0; c < cols; ++c) std::swap(m.at(p, c), m.at(r, c));
    }
    const Scalar inv = m.at(r, col).inverse();
    for (std::size_t c = col; c < cols; ++c) {
      if (!m.at(r, c).is_zero()) m.at(r, c) *= inv;
    }
    const std::size_t work = rows * (cols - col);
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) \
    if (parallel && work >= kParallelWork)
#endif
    for (std::size_t q = 0; q < rows; ++q) {
      if (q == r) continue;
      const Scalar f = m.at(q, col);
      if (f.is_zero()) continue;
      Scalar* qrow = m.row(q);
      const Scalar* rrow = m.row(r);
      for (std::size_t c = col; c < cols; ++c) {
        if (rrow[c].is_zero()) continue;
        qrow[c] -= f * rrow[c];
      }
    }
    (void)work;
    res.pivots.push_back(col);
    ++r;
  }
  res.rank = r;
  return res;
}

}  // namespace

RrefResult rref_serial(const Matrix& m) { return rref_impl(m, false); }
RrefResult rref(const Matrix& m) { return rref_impl(m, true); }

}  // namespace purespin
