#pragma once

#include <span>
#include <utility>

#include "purespin/matrix.hpp"
#include "purespin/phase_vector.hpp"
#include "purespin/spinor.hpp"

namespace purespin {

// (e+t) . phi = contraction by e plus wedge by t. Generates the Clifford
// relation v u + u v = 2 <v,u> on operators.
Spinor clifford_action(const PhaseVector& v, const Spinor& phi);

// Dense endomorphism of the 2^n spinor space, columns and rows indexed by
// blade mask ascending.
class CliffordOp {
public:
  explicit CliffordOp(int n) : n_(n), m_(std::size_t(1) << n, std::size_t(1) << n) {}
  CliffordOp(int n, Matrix m) : n_(n), m_(std::move(m)) {}

  static CliffordOp identity_op(int n);

  int n() const { return n_; }
  std::size_t dim() const { return m_.rows(); }
  const Matrix& matrix() const { return m_; }
  Matrix& matrix() { return m_; }

  Spinor apply(const Spinor& phi) const;

  CliffordOp& operator+=(const CliffordOp& o);
  CliffordOp& operator-=(const CliffordOp& o);
  CliffordOp& operator*=(const Scalar& s);
  friend CliffordOp operator+(CliffordOp a, const CliffordOp& b) {
    return a += b;
  }
  friend CliffordOp operator-(CliffordOp a, const CliffordOp& b) {
    return a -= b;
  }
  friend CliffordOp operator*(CliffordOp a, const Scalar& s) { return a *= s; }
  friend CliffordOp operator*(const Scalar& s, CliffordOp a) { return a *= s; }
  friend CliffordOp operator*(const CliffordOp& a, const CliffordOp& b);

  friend bool operator==(const CliffordOp& a, const CliffordOp& b) {
    return a.n_ == b.n_ && a.m_ == b.m_;
  }
  friend bool operator!=(const CliffordOp& a, const CliffordOp& b) {
    return !(a == b);
  }

private:
  int n_;
  Matrix m_;
};

CliffordOp operator_of(const PhaseVector& v);

// Antisymmetrized product (1/p!) sum over permutations of signed products.
CliffordOp antisym_product(std::span<const PhaseVector> vs);

// Operator of the normalized volume element: the ordered product over i of
// (E_i T_i - T_i E_i). Squares to the identity and anticommutes with every
// operator_of(v).
CliffordOp pseudo_scalar(int n);

// (even-grade part, odd-grade part): the +1/-1 eigenspaces of pseudo_scalar.
std::pair<Spinor, Spinor> chirality_split(const Spinor& phi);

// Bilinear pairing: the top-blade coefficient of reverse(a) ^ b.
Scalar spinor_inner(const Spinor& a, const Spinor& b);

}  // namespace purespin
