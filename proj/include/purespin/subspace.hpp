#pragma once

#include <span>
#include <vector>

#include "purespin/matrix.hpp"

namespace purespin {

// Linear subspace of Q(i)^ambient, stored as the RREF of any spanning set
// with zero rows dropped. The representation is canonical: two subspaces are
// equal iff their basis matrices are identical, so operator== is syntactic.
class Subspace {
public:
  static Subspace zero(std::size_t ambient);
  static Subspace full(std::size_t ambient);
  // Canonicalizes: rows may be any spanning set.
  static Subspace from_rows(const Matrix& rows);
  static Subspace from_vectors(std::size_t ambient,
                               const std::vector<std::vector<Scalar>>& rows);

  std::size_t ambient_dim() const { return ambient_; }
  std::size_t rank() const { return basis_.rows(); }
  const Matrix& basis() const { return basis_; }

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
  }
  friend bool operator!=(const Subspace& a, const Subspace& b) {
    return !(a == b);
  }

private:
  Subspace(std::size_t ambient, Matrix basis)
      : ambient_(ambient), basis_(std::move(basis)) {}
  std::size_t ambient_;
  Matrix basis_;  // rank x ambient, RREF, no zero rows
};

// Right kernel {x : m x = 0}, returned canonical.
Subspace kernel_basis(const Matrix& m);

Subspace subspace_sum(const Subspace& a, const Subspace& b);
Subspace subspace_intersection(const Subspace& a, const Subspace& b);

// Whole-subspace and single-vector membership: does `a` contain it?
bool subspace_contains(const Subspace& a, const Subspace& b);
bool contains_vector(const Subspace& a, std::span<const Scalar> v);

}  // namespace purespin
