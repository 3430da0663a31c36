#pragma once

#include <stdexcept>
#include <vector>

#include "purespin/scalar.hpp"

namespace purespin {

// Vector in the 2n-dimensional sum of the base space (e1..en) and its dual
// (t1..tn). Frame indexing is 1-based: a in 1..n is e_a, a in n+1..2n is
// t_{a-n}.
struct PhaseVector {
  int n = 0;
  std::vector<Scalar> e;      // n entries
  std::vector<Scalar> theta;  // n entries

  explicit PhaseVector(int n_) : n(n_), e(n_), theta(n_) {
    if (n_ < 1) throw std::invalid_argument("PhaseVector: n < 1");
  }

  bool is_zero() const {
    for (const auto& v : e)
      if (!v.is_zero()) return false;
    for (const auto& v : theta)
      if (!v.is_zero()) return false;
    return true;
  }

  // Coordinates in frame order: e1..en, t1..tn.
  std::vector<Scalar> coords() const {
    std::vector<Scalar> v(e);
    v.insert(v.end(), theta.begin(), theta.end());
    return v;
  }
  static PhaseVector from_coords(int n, const std::vector<Scalar>& c) {
    if (c.size() != std::size_t(2 * n))
      throw std::invalid_argument("PhaseVector: coordinate length != 2n");
    PhaseVector v(n);
    for (int i = 0; i < n; ++i) {
      v.e[i] = c[i];
      v.theta[i] = c[n + i];
    }
    return v;
  }

  PhaseVector operator-() const {
    PhaseVector r(n);
    for (int i = 0; i < n; ++i) {
      r.e[i] = -e[i];
      r.theta[i] = -theta[i];
    }
    return r;
  }
  PhaseVector& operator+=(const PhaseVector& o) {
    if (n != o.n) throw std::invalid_argument("PhaseVector: mixed n");
    for (int i = 0; i < n; ++i) {
      e[i] += o.e[i];
      theta[i] += o.theta[i];
    }
    return *this;
  }
  friend PhaseVector operator+(PhaseVector a, const PhaseVector& b) {
    return a += b;
  }
  PhaseVector& operator*=(const Scalar& s) {
    for (int i = 0; i < n; ++i) {
      e[i] *= s;
      theta[i] *= s;
    }
    return *this;
  }
  friend PhaseVector operator*(const Scalar& s, PhaseVector a) {
    return a *= s;
  }

  friend bool operator==(const PhaseVector& a, const PhaseVector& b) {
    return a.n == b.n && a.e == b.e && a.theta == b.theta;
  }
  friend bool operator!=(const PhaseVector& a, const PhaseVector& b) {
    return !(a == b);
  }
};

// The split pairing: <e+t, e'+t'> = (t(e') + t'(e)) / 2. Both e-e and t-t
// pairings vanish; <e_i, t^j> = delta/2.
inline Scalar metric(const PhaseVector& v, const PhaseVector& u) {
  if (v.n != u.n) throw std::invalid_argument("metric: mixed n");
  Scalar s(0);
  for (int i = 0; i < v.n; ++i) {
    s += v.theta[i] * u.e[i];
    s += u.theta[i] * v.e[i];
  }
  return s / Scalar(2);
}

// a in 1..2n
inline PhaseVector frame_vector(int n, int a) {
  if (a < 1 || a > 2 * n)
    throw std::invalid_argument("frame_vector: index out of range");
  PhaseVector v(n);
  if (a <= n)
    v.e[a - 1] = Scalar(1);
  else
    v.theta[a - n - 1] = Scalar(1);
  return v;
}

inline int frame_partner(int n, int a) { return a <= n ? a + n : a - n; }

// g_{ab} in the frame basis, 1-based.
inline Scalar frame_metric(int n, int a, int b) {
  if (frame_partner(n, a) == b) return Scalar(1) / Scalar(2);
  return Scalar(0);
}

// g^{ab}: blocks of 2*identity swapping the e and t sectors.
inline Scalar frame_metric_inv(int n, int a, int b) {
  if (frame_partner(n, a) == b) return Scalar(2);
  return Scalar(0);
}

}  // namespace purespin
