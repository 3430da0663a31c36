#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "purespin/scalar.hpp"

namespace purespin {

inline constexpr int kMaxN = 12;

// Element of the exterior algebra on n dual generators t1..tn. A basis blade
// is encoded as a bitmask: bit i-1 set means ti is a factor, indices written
// ascending. Coefficients are sparse; zero coefficients are never stored.
class Spinor {
public:
  explicit Spinor(int n);

  static Spinor zero(int n) { return Spinor(n); }
  static Spinor unit(int n) { return blade(n, 0); }  // the scalar blade "1"
  static Spinor blade(int n, std::uint32_t mask, Scalar coeff = Scalar(1));

  int n() const { return n_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }

  // Coefficient of a blade (zero if absent).
  Scalar coeff(std::uint32_t mask) const;
  // Adds c to the blade's coefficient, erasing it when the sum vanishes.
  void add_term(std::uint32_t mask, const Scalar& c);

  const std::map<std::uint32_t, Scalar>& terms() const { return terms_; }

  Spinor operator-() const;
  Spinor& operator+=(const Spinor& o);
  Spinor& operator-=(const Spinor& o);
  Spinor& operator*=(const Scalar& s);

  friend Spinor operator+(Spinor a, const Spinor& b) { return a += b; }
  friend Spinor operator-(Spinor a, const Spinor& b) { return a -= b; }
  friend Spinor operator*(Spinor a, const Scalar& s) { return a *= s; }
  friend Spinor operator*(const Scalar& s, Spinor a) { return a *= s; }

  friend bool operator==(const Spinor& a, const Spinor& b) {
    return a.n_ == b.n_ && a.terms_ == b.terms_;
  }
  friend bool operator!=(const Spinor& a, const Spinor& b) { return !(a == b); }

  // Coordinates in the full 2^n blade basis, masks ascending.
  std::vector<Scalar> coords() const;
  static Spinor from_coords(int n, const std::vector<Scalar>& coords);

private:
  int n_;
  std::map<std::uint32_t, Scalar> terms_;
};

// Sign (+1/-1) of sorting the concatenation of two disjoint ascending index
// sets into one ascending sequence.
int merge_sign(std::uint32_t a, std::uint32_t b);

Spinor wedge(const Spinor& a, const Spinor& b);

// Contraction with the i-th primal basis vector (i in 1..n), the degree -1
// dual of wedging with ti.
Spinor interior(int i, const Spinor& a);

Spinor grade_project(const Spinor& a, int k);

// Grade k picks up (-1)^(k(k-1)/2): order reversal of the factors.
Spinor reverse(const Spinor& a);

// Decomposition by grade; components sum back to the original spinor.
struct GradedSpinor {
  int n;
  std::map<int, Spinor> components;  // grade -> homogeneous part, no zeros
};

GradedSpinor grade_decompose(const Spinor& a);

}  // namespace purespin
