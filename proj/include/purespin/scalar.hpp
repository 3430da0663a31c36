#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <stdexcept>
#include <string>
#include <utility>

namespace purespin {

// Exact rational, GMP-backed. Always stored reduced with positive denominator
// (mpq canonicalization).
using Rational = boost::multiprecision::mpq_rational;

// Element of Q(i): the ground field for everything in this library. All
// arithmetic is exact; there is no floating point anywhere downstream.
class Scalar {
public:
  Scalar() = default;
  Scalar(int v) : re_(v) {}
  Scalar(long v) : re_(v) {}
  Scalar(Rational re) : re_(std::move(re)) {}
  Scalar(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}

  static Scalar i() { return Scalar(Rational(0), Rational(1)); }

  const Rational& re() const { return re_; }
  const Rational& im() const { return im_; }

  bool is_zero() const { return re_ == 0 && im_ == 0; }
  bool is_real() const { return im_ == 0; }
  bool is_one() const { return re_ == 1 && im_ == 0; }

  Scalar operator-() const { return Scalar(-re_, -im_); }

  Scalar& operator+=(const Scalar& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
  }
  Scalar& operator-=(const Scalar& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
  }
  Scalar& operator*=(const Scalar& o) {
    Rational r = re_ * o.re_ - im_ * o.im_;
    Rational i = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(r);
    im_ = std::move(i);
    return *this;
  }
  Scalar& operator/=(const Scalar& o) {
    if (o.is_zero()) throw std::domain_error("Scalar: division by zero");
    Rational d = o.re_ * o.re_ + o.im_ * o.im_;
    Rational r = (re_ * o.re_ + im_ * o.im_) / d;
    Rational i = (im_ * o.re_ - re_ * o.im_) / d;
    re_ = std::move(r);
    im_ = std::move(i);
    return *this;
  }

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

  friend bool operator==(const Scalar& a, const Scalar& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

  Scalar inverse() const { return Scalar(1) / *this; }

  // "3", "-1/2", or "(re,im)" when the imaginary part is nonzero.
  std::string str() const {
    if (im_ == 0) return re_.str();
    return "(" + re_.str() + "," + im_.str() + ")";
  }

private:
  Rational re_{0};
  Rational im_{0};
};

}  // namespace purespin
