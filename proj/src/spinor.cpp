#include "purespin/spinor.hpp"

#include <bit>
#include <stdexcept>

namespace purespin {

Spinor::Spinor(int n) : n_(n) {
  if (n < 1 || n > kMaxN)
    throw std::invalid_argument("Spinor: n out of range [1,12]");
}

Spinor Spinor::blade(int n, std::uint32_t mask, Scalar coeff) {
  Spinor s(n);
  if (mask >> n)
    throw std::invalid_argument("Spinor: blade index exceeds n");
  if (!coeff.is_zero()) s.terms_.emplace(mask, std::move(coeff));
  return s;
}

Scalar Spinor::coeff(std::uint32_t mask) const {
  auto it = terms_.find(mask);
  return it == terms_.end() ? Scalar(0) : it->second;
}

void Spinor::add_term(std::uint32_t mask, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(mask, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Spinor Spinor::operator-() const {
  Spinor r(n_);
  for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
  return r;
}

Spinor& Spinor::operator+=(const Spinor& o) {
  if (n_ != o.n_) throw std::invalid_argument("Spinor: mixed n in +");
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

Spinor& Spinor::operator-=(const Spinor& o) {
  if (n_ != o.n_) throw std::invalid_argument("Spinor: mixed n in -");
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

Spinor& Spinor::operator*=(const Scalar& s) {
  if (s.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, c] : terms_) c *= s;
  return *this;
}

std::vector<Scalar> Spinor::coords() const {
  std::vector<Scalar> v(std::size_t(1) << n_);
  for (const auto& [m, c] : terms_) v[m] = c;
  return v;
}

Spinor Spinor::from_coords(int n, const std::vector<Scalar>& coords) {
  if (coords.size() != (std::size_t(1) << n))
    throw std::invalid_argument("Spinor: coordinate length != 2^n");
  Spinor s(n);
  for (std::size_t m = 0; m < coords.size(); ++m)
    if (!coords[m].is_zero()) s.terms_.emplace(std::uint32_t(m), coords[m]);
  return s;
}

int merge_sign(std::uint32_t a, std::uint32_t b) {
  int swaps = 0;
  a >>= 1;
  while (a) {
    swaps += std::popcount(a & b);
    a >>= 1;
  }
  return (swaps & 1) ? -1 : 1;
}

Spinor wedge(const Spinor& a, const Spinor& b) {
  if (a.n() != b.n()) throw std::invalid_argument("wedge: mixed n");
  Spinor r(a.n());
  for (const auto& [ma, ca] : a.terms()) {
    for (const auto& [mb, cb] : b.terms()) {
      if (ma & mb) continue;
      Scalar c = ca * cb;
      if (merge_sign(ma, mb) < 0) c = -c;
      r.add_term(ma | mb, c);
    }
  }
  return r;
}

Spinor interior(int i, const Spinor& a) {
  if (i < 1 || i > a.n())
    throw std::invalid_argument("interior: index out of range");
  const std::uint32_t bit = std::uint32_t(1) << (i - 1);
  Spinor r(a.n());
  for (const auto& [m, c] : a.terms()) {
    if (!(m & bit)) continue;
    // sign: factors with smaller index pass in front of ti
    const int below = std::popcount(m & (bit - 1));
    r.add_term(m ^ bit, (below & 1) ? -c : c);
  }
  return r;
}

Spinor grade_project(const Spinor& a, int k) {
  Spinor r(a.n());
  for (const auto& [m, c] : a.terms())
    if (std::popcount(m) == k) r.add_term(m, c);
  return r;
}

Spinor reverse(const Spinor& a) {
  Spinor r(a.n());
  for (const auto& [m, c] : a.terms()) {
    const int k = std::popcount(m);
    const bool flip = (k % 4 == 2) || (k % 4 == 3);  // k(k-1)/2 odd
    r.add_term(m, flip ? -c : c);
  }
  return r;
}

GradedSpinor grade_decompose(const Spinor& a) {
  GradedSpinor g{a.n(), {}};
  for (const auto& [m, c] : a.terms()) {
    const int k = std::popcount(m);
    auto it = g.components.find(k);
    if (it == g.components.end())
      it = g.components.emplace(k, Spinor::zero(a.n())).first;
    it->second.add_term(m, c);
  }
  return g;
}

}  // namespace purespin
