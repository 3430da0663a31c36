#include "purespin/clifford.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>

namespace purespin {

Spinor clifford_action(const PhaseVector& v, const Spinor& phi) {
  if (v.n != phi.n())
    throw std::invalid_argument("clifford_action: mixed n");
  Spinor out(phi.n());
  for (int i = 0; i < v.n; ++i) {
    if (!v.e[i].is_zero()) out += v.e[i] * interior(i + 1, phi);
    if (!v.theta[i].is_zero())
      out += v.theta[i] * wedge(Spinor::blade(phi.n(), 1u << i), phi);
  }
  return out;
}

CliffordOp CliffordOp::identity_op(int n) {
  return CliffordOp(n, Matrix::identity(std::size_t(1) << n));
}

Spinor CliffordOp::apply(const Spinor& phi) const {
  if (n_ != phi.n()) throw std::invalid_argument("CliffordOp: mixed n");
  std::vector<Scalar> out(dim());
  for (const auto& [col, c] : phi.terms()) {
    for (std::size_t r = 0; r < dim(); ++r) {
      const Scalar& mv = m_.at(r, col);
      if (!mv.is_zero()) out[r] += mv * c;
    }
  }
  return Spinor::from_coords(n_, out);
}

CliffordOp& CliffordOp::operator+=(const CliffordOp& o) {
  if (n_ != o.n_) throw std::invalid_argument("CliffordOp: mixed n");
  m_ += o.m_;
  return *this;
}

CliffordOp& CliffordOp::operator-=(const CliffordOp& o) {
  if (n_ != o.n_) throw std::invalid_argument("CliffordOp: mixed n");
  m_ -= o.m_;
  return *this;
}

CliffordOp& CliffordOp::operator*=(const Scalar& s) {
  m_ *= s;
  return *this;
}

CliffordOp operator*(const CliffordOp& a, const CliffordOp& b) {
  if (a.n_ != b.n_) throw std::invalid_argument("CliffordOp: mixed n");
  return CliffordOp(a.n_, a.m_ * b.m_);
}

CliffordOp operator_of(const PhaseVector& v) {
  CliffordOp op(v.n);
  const std::size_t dim = op.dim();
  for (std::size_t col = 0; col < dim; ++col) {
    Spinor img = clifford_action(v, Spinor::blade(v.n, std::uint32_t(col)));
    for (const auto& [row, c] : img.terms()) op.matrix().at(row, col) = c;
  }
  return op;
}

CliffordOp antisym_product(std::span<const PhaseVector> vs) {
  if (vs.empty())
    throw std::invalid_argument("antisym_product: empty factor list");
  const int n = vs[0].n;
  for (const auto& v : vs)
    if (v.n != n) throw std::invalid_argument("antisym_product: mixed n");

  std::vector<CliffordOp> factors;
  factors.reserve(vs.size());
  for (const auto& v : vs) factors.push_back(operator_of(v));

  std::vector<int> perm(vs.size());
  std::iota(perm.begin(), perm.end(), 0);

  CliffordOp sum(n);
  long count = 0;
  do {
    int inv = 0;
    for (std::size_t i = 0; i < perm.size(); ++i)
      for (std::size_t j = i + 1; j < perm.size(); ++j)
        if (perm[i] > perm[j]) ++inv;
    CliffordOp prod = factors[perm[0]];
    for (std::size_t i = 1; i < perm.size(); ++i)
      prod = prod * factors[perm[i]];
    if (inv & 1)
      sum -= prod;
    else
      sum += prod;
    ++count;
  } while (std::next_permutation(perm.begin(), perm.end()));

  Scalar factorial(1);
  for (long i = 2; i <= long(vs.size()); ++i) factorial *= Scalar(i);
  (void)count;
  return sum * factorial.inverse();
}

CliffordOp pseudo_scalar(int n) {
  CliffordOp prod = CliffordOp::identity_op(n);
  for (int i = 1; i <= n; ++i) {
    CliffordOp ei = operator_of(frame_vector(n, i));
    CliffordOp ti = operator_of(frame_vector(n, n + i));
    prod = prod * (ei * ti - ti * ei);
  }
  return prod;
}

std::pair<Spinor, Spinor> chirality_split(const Spinor& phi) {
  Spinor even(phi.n()), odd(phi.n());
  for (const auto& [m, c] : phi.terms()) {
    if (std::popcount(m) & 1)
      odd.add_term(m, c);
    else
      even.add_term(m, c);
  }
  return {even, odd};
}

Scalar spinor_inner(const Spinor& a, const Spinor& b) {
  if (a.n() != b.n()) throw std::invalid_argument("spinor_inner: mixed n");
  const std::uint32_t full = (std::uint32_t(1) << a.n()) - 1;
  Scalar lambda(0);
  for (const auto& [ma, ca] : a.terms()) {
    const std::uint32_t mb = full ^ ma;
    const Scalar cb = b.coeff(mb);
    if (cb.is_zero()) continue;
    const int k = std::popcount(ma);
    Scalar term = ca * cb;
    if ((k % 4 == 2) || (k % 4 == 3)) term = -term;  // reverse sign
    if (merge_sign(ma, mb) < 0) term = -term;
    lambda += term;
  }
  return lambda;
}

}  // namespace purespin
