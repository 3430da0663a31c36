#include "purespin/subspace.hpp"

#include <algorithm>
#include <stdexcept>

namespace purespin {

Subspace Subspace::zero(std::size_t ambient) {
  return Subspace(ambient, Matrix(0, ambient));
}

Subspace Subspace::full(std::size_t ambient) {
  return Subspace(ambient, Matrix::identity(ambient));
}

Subspace Subspace::from_rows(const Matrix& rows) {
  RrefResult r = rref(rows);
  Matrix basis(r.rank, rows.cols());
  for (std::size_t i = 0; i < r.rank; ++i)
    for (std::size_t c = 0; c < rows.cols(); ++c)
      basis.at(i, c) = r.matrix.at(i, c);
  return Subspace(rows.cols(), std::move(basis));
}

Subspace Subspace::from_vectors(std::size_t ambient,
                                const std::vector<std::vector<Scalar>>& rows) {
  Matrix m(rows.size(), ambient);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != ambient)
      throw std::invalid_argument("Subspace: row length != ambient dimension");
    for (std::size_t c = 0; c < ambient; ++c) m.at(i, c) = rows[i][c];
  }
  return from_rows(m);
}

Subspace kernel_basis(const Matrix& m) {
  RrefResult r = rref(m);
  const std::size_t cols = m.cols();
  std::vector<bool> is_pivot(cols, false);
  for (std::size_t p : r.pivots) is_pivot[p] = true;

  Matrix vecs(cols - r.rank, cols);
  std::size_t row = 0;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    vecs.at(row, f) = Scalar(1);
    for (std::size_t i = 0; i < r.rank; ++i)
      vecs.at(row, r.pivots[i]) = -r.matrix.at(i, f);
    ++row;
  }
  return Subspace::from_rows(vecs);
}

Subspace subspace_sum(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim())
    throw std::invalid_argument("subspace_sum: ambient mismatch");
  const std::size_t d = a.ambient_dim();
  Matrix stacked(a.rank() + b.rank(), d);
  for (std::size_t i = 0; i < a.rank(); ++i)
    for (std::size_t c = 0; c < d; ++c) stacked.at(i, c) = a.basis().at(i, c);
  for (std::size_t i = 0; i < b.rank(); ++i)
    for (std::size_t c = 0; c < d; ++c)
      stacked.at(a.rank() + i, c) = b.basis().at(i, c);
  return Subspace::from_rows(stacked);
}

// Zassenhaus: reduce [A|A ; B|0]; rows whose left block vanished carry
// intersection vectors in the right block.
Subspace subspace_intersection(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim())
    throw std::invalid_argument("subspace_intersection: ambient mismatch");
  const std::size_t d = a.ambient_dim();
  Matrix work(a.rank() + b.rank(), 2 * d);
  for (std::size_t i = 0; i < a.rank(); ++i)
    for (std::size_t c = 0; c < d; ++c) {
      work.at(i, c) = a.basis().at(i, c);
      work.at(i, d + c) = a.basis().at(i, c);
    }
  for (std::size_t i = 0; i < b.rank(); ++i)
    for (std::size_t c = 0; c < d; ++c)
      work.at(a.rank() + i, c) = b.basis().at(i, c);

  RrefResult r = rref(work);
  std::vector<std::vector<Scalar>> inter;
  for (std::size_t i = 0; i < r.rank; ++i) {
    bool left_zero = true;
    for (std::size_t c = 0; c < d && left_zero; ++c)
      left_zero = r.matrix.at(i, c).is_zero();
    if (!left_zero) continue;
    std::vector<Scalar> v(d);
    for (std::size_t c = 0; c < d; ++c) v[c] = r.matrix.at(i, d + c);
    inter.push_back(std::move(v));
  }
  return Subspace::from_vectors(d, inter);
}

namespace {

// Reduce v against an RREF basis; true iff the remainder is zero.
bool reduces_to_zero(const Matrix& basis, std::vector<Scalar> v) {
  for (std::size_t i = 0; i < basis.rows(); ++i) {
    std::size_t p = 0;
    while (p < basis.cols() && basis.at(i, p).is_zero()) ++p;
    if (p == basis.cols()) continue;
    if (v[p].is_zero()) continue;
    const Scalar f = v[p];
    for (std::size_t c = p; c < basis.cols(); ++c) {
      if (basis.at(i, c).is_zero()) continue;
      v[c] -= f * basis.at(i, c);
    }
  }
  for (const auto& x : v)
    if (!x.is_zero()) return false;
  return true;
}

}  // namespace

bool contains_vector(const Subspace& a, std::span<const Scalar> v) {
  if (v.size() != a.ambient_dim())
    throw std::invalid_argument("contains_vector: length mismatch");
  return reduces_to_zero(a.basis(), std::vector<Scalar>(v.begin(), v.end()));
}

bool subspace_contains(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim())
    throw std::invalid_argument("subspace_contains: ambient mismatch");
  for (std::size_t i = 0; i < b.rank(); ++i) {
    std::vector<Scalar> v(b.ambient_dim());
    for (std::size_t c = 0; c < v.size(); ++c) v[c] = b.basis().at(i, c);
    if (!reduces_to_zero(a.basis(), std::move(v))) return false;
  }
  return true;
}

}  // namespace purespin
