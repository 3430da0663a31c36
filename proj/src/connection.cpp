#include "purespin/connection.hpp"

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>

namespace purespin {
namespace {

void check_frame(int n, int a, const char* fn) {
  if (a < 1 || a > 2 * n)
    throw std::out_of_range(std::string(fn) + ": frame index out of range");
}

const Scalar kHalf = Scalar(Rational(1, 2));

// Trace and raised-index components used by the closed twistor forms and the
// gauge solver. Latin sums run over the base range 1..n.

// omega_{jk}^k
Scalar trace_low_up(const FrameConnection& c, int j) {
  Scalar s(0);
  for (int k = 1; k <= c.n(); ++k) s += c.omega(j, k, k + c.n());
  return Scalar(2) * s;
}

// omega^i_{ik}
Scalar trace_up_low(const FrameConnection& c, int k) {
  Scalar s(0);
  for (int i = 1; i <= c.n(); ++i) s += c.omega(i + c.n(), i, k);
  return Scalar(2) * s;
}

// omega^i_{ji}
Scalar trace_up_mid(const FrameConnection& c, int j) {
  Scalar s(0);
  for (int i = 1; i <= c.n(); ++i) s += c.omega(i + c.n(), j, i);
  return Scalar(2) * s;
}

// omega^{ji}_i
Scalar trace_upup(const FrameConnection& c, int j) {
  Scalar s(0);
  for (int i = 1; i <= c.n(); ++i) s += c.omega(j + c.n(), i + c.n(), i);
  return Scalar(4) * s;
}

// omega_{li}^i
Scalar trace_low_mixed(const FrameConnection& c, int l) {
  Scalar s(0);
  for (int i = 1; i <= c.n(); ++i) s += c.omega(l, i, i + c.n());
  return Scalar(2) * s;
}

std::uint32_t bit(int i) { return 1u << (i - 1); }

PhaseVector nabla_along(const FrameConnection& c, const PhaseVector& x,
                        const PhaseVector& v) {
  const auto xc = x.coords();
  PhaseVector out(c.n());
  for (int a = 1; a <= 2 * c.n(); ++a) {
    if (xc[std::size_t(a - 1)].is_zero()) continue;
    out += xc[std::size_t(a - 1)] * nabla_vector(c, a, v);
  }
  return out;
}

}  // namespace

FrameConnection::FrameConnection(int n) : n_(n) {
  if (n < 1 || n > kMaxN)
    throw std::invalid_argument("FrameConnection: n out of range");
  const std::size_t d = std::size_t(2 * n);
  omega_.assign(d * d * d, Scalar(0));
  A_.assign(d, Scalar(0));
}

std::size_t FrameConnection::idx(int a, int b, int c) const {
  const std::size_t d = std::size_t(2 * n_);
  return (std::size_t(a - 1) * d + std::size_t(b - 1)) * d +
         std::size_t(c - 1);
}

const Scalar& FrameConnection::omega(int a, int b, int c) const {
  check_frame(n_, a, "omega");
  check_frame(n_, b, "omega");
  check_frame(n_, c, "omega");
  return omega_[idx(a, b, c)];
}

void FrameConnection::set_omega(int a, int b, int c, const Scalar& v) {
  check_frame(n_, a, "set_omega");
  check_frame(n_, b, "set_omega");
  check_frame(n_, c, "set_omega");
  if (b == c) {
    if (!v.is_zero())
      throw std::invalid_argument("set_omega: repeated lower pair must vanish");
    return;
  }
  omega_[idx(a, b, c)] = v;
  omega_[idx(a, c, b)] = -v;
}

void FrameConnection::add_omega(int a, int b, int c, const Scalar& v) {
  set_omega(a, b, c, omega(a, b, c) + v);
}

const Scalar& FrameConnection::A(int a) const {
  check_frame(n_, a, "A");
  return A_[std::size_t(a - 1)];
}

void FrameConnection::set_A(int a, const Scalar& v) {
  check_frame(n_, a, "set_A");
  A_[std::size_t(a - 1)] = v;
}

Scalar FrameConnection::omega_ud(int a, int b, int c_up) const {
  return Scalar(2) * omega(a, b, frame_partner(n_, c_up));
}

Scalar FrameConnection::omega_uu(int a, int b_up, int c_up) const {
  return Scalar(4) *
         omega(a, frame_partner(n_, b_up), frame_partner(n_, c_up));
}

SpinorJet::SpinorJet(Spinor v, std::vector<Spinor> d)
    : value(std::move(v)), derivs(std::move(d)) {
  if (derivs.size() != std::size_t(2 * value.n()))
    throw std::invalid_argument("SpinorJet: need 2n derivative slots");
  for (const auto& s : derivs)
    if (s.n() != value.n()) throw std::invalid_argument("SpinorJet: mixed n");
}

SpinorJet SpinorJet::constant(const Spinor& v) {
  return SpinorJet(v, std::vector<Spinor>(std::size_t(2 * v.n()),
                                          Spinor(v.n())));
}

CurvatureData::CurvatureData(int n) : n_(n) {
  if (n < 1 || n > kMaxN)
    throw std::invalid_argument("CurvatureData: n out of range");
  const std::size_t d = std::size_t(2 * n);
  r_.assign(d * d * d * d, Scalar(0));
  f_.assign(d * d, Scalar(0));
}

namespace {
std::size_t idx4(int n, int a, int b, int c, int d) {
  const std::size_t m = std::size_t(2 * n);
  return ((std::size_t(a - 1) * m + std::size_t(b - 1)) * m +
          std::size_t(c - 1)) *
             m +
         std::size_t(d - 1);
}
}  // namespace

const Scalar& CurvatureData::riemann(int a, int b, int c, int d) const {
  check_frame(n_, a, "riemann");
  check_frame(n_, b, "riemann");
  check_frame(n_, c, "riemann");
  check_frame(n_, d, "riemann");
  return r_[idx4(n_, a, b, c, d)];
}

void CurvatureData::set_riemann(int a, int b, int c, int d, const Scalar& v) {
  check_frame(n_, a, "set_riemann");
  check_frame(n_, b, "set_riemann");
  check_frame(n_, c, "set_riemann");
  check_frame(n_, d, "set_riemann");
  if (a == b) {
    if (!v.is_zero())
      throw std::invalid_argument("set_riemann: repeated first pair");
    return;
  }
  r_[idx4(n_, a, b, c, d)] = v;
  r_[idx4(n_, b, a, c, d)] = -v;
}

const Scalar& CurvatureData::F(int a, int b) const {
  check_frame(n_, a, "F");
  check_frame(n_, b, "F");
  return f_[std::size_t(a - 1) * std::size_t(2 * n_) + std::size_t(b - 1)];
}

void CurvatureData::set_F(int a, int b, const Scalar& v) {
  check_frame(n_, a, "set_F");
  check_frame(n_, b, "set_F");
  if (a == b) {
    if (!v.is_zero()) throw std::invalid_argument("set_F: repeated pair");
    return;
  }
  f_[std::size_t(a - 1) * std::size_t(2 * n_) + std::size_t(b - 1)] = v;
  f_[std::size_t(b - 1) * std::size_t(2 * n_) + std::size_t(a - 1)] = -v;
}

Spinor omega_apply(const FrameConnection& c, int a, const Spinor& phi) {
  const int n = c.n();
  check_frame(n, a, "omega_apply");
  if (phi.n() != n) throw std::invalid_argument("omega_apply: mixed n");
  Spinor out = phi * c.A(a);
  const Scalar quarter = Scalar(Rational(-1, 4));
  for (int d = 1; d <= 2 * n; ++d) {
    Spinor ed_phi(n);
    bool have = false;
    for (int b = 1; b <= 2 * n; ++b) {
      const Scalar w = c.omega_uu(a, b, d);
      if (w.is_zero()) continue;
      if (!have) {
        ed_phi = clifford_action(frame_vector(n, d), phi);
        have = true;
        if (ed_phi.is_zero()) break;
      }
      out += clifford_action(frame_vector(n, b), ed_phi) * (quarter * w);
    }
  }
  return out;
}

CliffordOp omega_operator(const FrameConnection& c, int a) {
  const int n = c.n();
  CliffordOp op(n);
  const std::uint32_t dim = 1u << n;
  for (std::uint32_t s = 0; s < dim; ++s) {
    const Spinor img = omega_apply(c, a, Spinor::blade(n, s));
    for (const auto& [mask, coeff] : img.terms())
      op.matrix().at(mask, s) = coeff;
  }
  return op;
}

bool check_omega_relation(const FrameConnection& c) {
  const int n = c.n();
  const std::uint32_t dim = 1u << n;
  for (int a = 1; a <= 2 * n; ++a) {
    for (std::uint32_t s = 0; s < dim; ++s) {
      const Spinor phi = Spinor::blade(n, s);
      const Spinor om_phi = omega_apply(c, a, phi);
      for (int b = 1; b <= 2 * n; ++b) {
        const PhaseVector eb = frame_vector(n, b);
        Spinor lhs(n);
        for (int d = 1; d <= 2 * n; ++d) {
          const Scalar w = c.omega_ud(a, b, d);
          if (!w.is_zero())
            lhs += clifford_action(frame_vector(n, d), phi) * w;
        }
        const Spinor rhs = omega_apply(c, a, clifford_action(eb, phi)) -
                           clifford_action(eb, om_phi);
        if (lhs != rhs) return false;
      }
    }
  }
  return true;
}

Spinor covariant_derivative(const FrameConnection& c, const SpinorJet& j,
                            int a) {
  const int n = c.n();
  check_frame(n, a, "covariant_derivative");
  if (j.n() != n)
    throw std::invalid_argument("covariant_derivative: mixed n");
  return j.derivs[std::size_t(a - 1)] + omega_apply(c, a, j.value);
}

PhaseVector nabla_vector(const FrameConnection& c, int a,
                         const PhaseVector& v) {
  const int n = c.n();
  check_frame(n, a, "nabla_vector");
  if (v.n != n) throw std::invalid_argument("nabla_vector: mixed n");
  const auto coords = v.coords();
  std::vector<Scalar> out(std::size_t(2 * n));
  for (int b = 1; b <= 2 * n; ++b) {
    if (coords[std::size_t(b - 1)].is_zero()) continue;
    for (int d = 1; d <= 2 * n; ++d) {
      const Scalar w = c.omega_ud(a, b, d);
      if (!w.is_zero()) out[std::size_t(d - 1)] += coords[std::size_t(b - 1)] * w;
    }
  }
  return PhaseVector::from_coords(n, out);
}

FrameConnection scaling_transform(const FrameConnection& c,
                                  const std::vector<Scalar>& lambda_derivs) {
  const int n = c.n();
  if (lambda_derivs.size() != std::size_t(2 * n))
    throw std::invalid_argument("scaling_transform: need 2n derivatives");
  FrameConnection out = c;
  for (int a = 1; a <= 2 * n; ++a)
    out.set_A(a, c.A(a) + lambda_derivs[std::size_t(a - 1)]);
  return out;
}

SpinorJet scale_jet(const SpinorJet& j,
                    const std::vector<Scalar>& lambda_derivs) {
  if (lambda_derivs.size() != j.derivs.size())
    throw std::invalid_argument("scale_jet: need 2n derivatives");
  SpinorJet out = j;
  for (std::size_t a = 0; a < out.derivs.size(); ++a)
    out.derivs[a] -= j.value * lambda_derivs[a];
  return out;
}

bool leibniz_inner_check(const FrameConnection& c, const SpinorJet& j1,
                         const SpinorJet& j2) {
  const int n = c.n();
  if (j1.n() != n || j2.n() != n)
    throw std::invalid_argument("leibniz_inner_check: mixed n");
  for (int a = 1; a <= 2 * n; ++a) {
    const Scalar lhs = spinor_inner(j1.derivs[std::size_t(a - 1)], j2.value) +
                       spinor_inner(j1.value, j2.derivs[std::size_t(a - 1)]);
    const Scalar rhs = spinor_inner(covariant_derivative(c, j1, a), j2.value) +
                       spinor_inner(j1.value, covariant_derivative(c, j2, a));
    if (lhs != rhs) return false;
  }
  return true;
}

Spinor curvature_action(const CurvatureData& cd, int a, int b,
                        const Spinor& s) {
  const int n = cd.n();
  check_frame(n, a, "curvature_action");
  check_frame(n, b, "curvature_action");
  if (s.n() != n) throw std::invalid_argument("curvature_action: mixed n");
  Spinor out = s * cd.F(a, b);
  const Scalar quarter = Scalar(Rational(-1, 4));
  for (int d = 1; d <= 2 * n; ++d) {
    Spinor ed_s(n);
    bool have = false;
    for (int cc = 1; cc <= 2 * n; ++cc) {
      const Scalar r = cd.riemann(a, b, cc, d);
      if (r.is_zero()) continue;
      if (!have) {
        ed_s = clifford_action(frame_vector(n, d), s);
        have = true;
        if (ed_s.is_zero()) break;
      }
      out += clifford_action(frame_vector(n, cc), ed_s) * (quarter * r);
    }
  }
  return out;
}

Spinor dirac(const FrameConnection& c, const SpinorJet& j) {
  const int n = c.n();
  if (j.n() != n) throw std::invalid_argument("dirac: mixed n");
  Spinor out(n);
  for (int a = 1; a <= 2 * n; ++a)
    for (int b = 1; b <= 2 * n; ++b) {
      const Scalar g = frame_metric_inv(n, a, b);
      if (g.is_zero()) continue;
      out += clifford_action(frame_vector(n, a), covariant_derivative(c, j, b)) * g;
    }
  return out;
}

Spinor twistor_component(const FrameConnection& c, const SpinorJet& j,
                         int a) {
  const int n = c.n();
  check_frame(n, a, "twistor_component");
  const Scalar coef = Scalar(Rational(-1, 2 * n));
  return covariant_derivative(c, j, a) +
         clifford_action(frame_vector(n, a), dirac(c, j)) * coef;
}

std::pair<Spinor, Spinor> twistor_closed_form(const FrameConnection& c,
                                              int j) {
  const int n = c.n();
  if (j < 1 || j > n)
    throw std::out_of_range("twistor_closed_form: base index out of range");
  const Scalar inv_n = Scalar(Rational(1, n));

  // Component along e_j.
  Spinor tj(n);
  {
    const Scalar s0 =
        inv_n * (Scalar(n - 1) * (c.A(j) + kHalf * trace_low_up(c, j)) +
                 trace_up_low(c, j));
    tj += Spinor::unit(n) * s0;
    for (int l = 1; l <= n; ++l)
      for (int k = 1; k <= n; ++k) {
        if (l == k) continue;
        const Scalar bc =
            inv_n * (Scalar(n - 1) * c.omega(j, k, l) +
                     (c.omega(l, k, j) - c.omega(k, l, j)));
        if (!bc.is_zero())
          tj += wedge(Spinor::blade(n, bit(l)), Spinor::blade(n, bit(k))) * bc;
      }
  }

  // Component along t_j.
  Spinor tjn(n);
  {
    const Scalar a_up = Scalar(2) * c.A(j + n);
    const Scalar s0 = kHalf * (a_up - kHalf * trace_upup(c, j));
    tjn += Spinor::unit(n) * s0;

    for (int i = 1; i <= n; ++i)
      for (int k = 1; k <= n; ++k)
        for (int l = 1; l <= n; ++l) {
          if (i == k || i == l || k == l) continue;
          if (i == j || k == j || l == j) continue;
          const Scalar anti =
              (c.omega(i, k, l) - c.omega(i, l, k) + c.omega(k, l, i) -
               c.omega(k, i, l) + c.omega(l, i, k) - c.omega(l, k, i)) /
              Scalar(6);
          if (anti.is_zero()) continue;
          const Spinor blade4 =
              wedge(wedge(Spinor::blade(n, bit(j)), Spinor::blade(n, bit(i))),
                    wedge(Spinor::blade(n, bit(k)), Spinor::blade(n, bit(l))));
          tjn += blade4 * (inv_n * anti);
        }

    for (int l = 1; l <= n; ++l)
      for (int k = 1; k <= n; ++k) {
        if (l == k) continue;
        Scalar term = kHalf * (Scalar(2) * c.omega(j + n, k, l));
        if (k == j) {
          term += Scalar(Rational(1, 2 * n)) * c.A(l);
          term += Scalar(Rational(1, 4 * n)) * trace_low_mixed(c, l);
          term -= Scalar(Rational(1, 2 * n)) * trace_up_low(c, l);
        }
        if (l == j) {
          term -= Scalar(Rational(1, 2 * n)) * c.A(k);
          term -= Scalar(Rational(1, 4 * n)) * trace_low_mixed(c, k);
          term += Scalar(Rational(1, 2 * n)) * trace_up_low(c, k);
        }
        if (!term.is_zero())
          tjn +=
              wedge(Spinor::blade(n, bit(l)), Spinor::blade(n, bit(k))) * term;
      }
  }

  return {tj, tjn};
}

TwistorGauge twistor_gauge(const FrameConnection& c) {
  const int n = c.n();
  if (n < 2)
    throw std::invalid_argument("twistor_gauge: base dimension must be >= 2");
  TwistorGauge g;
  g.A.assign(std::size_t(2 * n), Scalar(0));
  for (int j = 1; j <= n; ++j) {
    g.A[std::size_t(j - 1)] = Scalar(Rational(1, n - 1)) * trace_up_mid(c, j) -
                              kHalf * trace_low_up(c, j);
    Scalar s(0);
    for (int i = 1; i <= n; ++i) s += c.omega(j + n, i + n, i);
    g.A[std::size_t(n + j - 1)] = s;
  }

  Report rep;
  rep.suite = "twistor-gauge";
  rep.n = n;

  if (n == 2 || n >= 4) {
    bool ok = true;
    std::string witness;
    for (int a = 1; a <= n && ok; ++a)
      for (int b = 1; b <= n && ok; ++b)
        for (int d = b + 1; d <= n && ok; ++d)
          if (!c.omega(a, b, d).is_zero()) {
            ok = false;
            witness = "omega(" + std::to_string(a) + "," + std::to_string(b) +
                      "," + std::to_string(d) + ") = " + c.omega(a, b, d).str();
          }
    rep.add("base-sector-vanishes", ok, witness);
  } else {
    bool ok = true;
    std::string witness;
    for (int a = 1; a <= n && ok; ++a)
      for (int b = 1; b <= n && ok; ++b)
        for (int d = b + 1; d <= n && ok; ++d) {
          // totally antisymmetric: the cyclic images must agree
          const Scalar lhs = c.omega(a, b, d);
          const Scalar mid = c.omega(b, d, a);
          const Scalar last = c.omega(d, a, b);
          if (lhs != mid || mid != last) {
            ok = false;
            witness = "omega(" + std::to_string(a) + "," + std::to_string(b) +
                      "," + std::to_string(d) + ") breaks the cycle";
          }
        }
    rep.add("base-sector-antisymmetric", ok, witness);
  }

  if (n >= 3) {
    bool ok = true;
    std::string witness;
    for (int i = 1; i <= n && ok; ++i)
      for (int b = 1; b <= n && ok; ++b)
        for (int d = b + 1; d <= n && ok; ++d) {
          if (i == b || i == d) continue;
          if (!c.omega(i + n, b, d).is_zero()) {
            ok = false;
            witness = "omega(" + std::to_string(i + n) + "," +
                      std::to_string(b) + "," + std::to_string(d) +
                      ") = " + c.omega(i + n, b, d).str();
          }
        }
    rep.add("mixed-offdiagonal-vanishes", ok, witness);

    ok = true;
    witness.clear();
    for (int k = 1; k <= n && ok; ++k) {
      int first = -1;
      for (int i = 1; i <= n && ok; ++i) {
        if (i == k) continue;
        if (first < 0) {
          first = i;
          continue;
        }
        if (c.omega(i + n, i, k) != c.omega(first + n, first, k)) {
          ok = false;
          witness = "omega(" + std::to_string(i + n) + "," + std::to_string(i) +
                    "," + std::to_string(k) + ") != omega(" +
                    std::to_string(first + n) + "," + std::to_string(first) +
                    "," + std::to_string(k) + ")";
        }
      }
    }
    rep.add("mixed-trace-uniform", ok, witness);
  }

  g.satisfiable = rep.all_ok();
  g.constraints = std::move(rep);
  return g;
}

PhaseVector lie_bracket(const FrameConnection& c, int a, int b) {
  const int n = c.n();
  check_frame(n, a, "lie_bracket");
  check_frame(n, b, "lie_bracket");
  std::vector<Scalar> out(std::size_t(2 * n));
  for (int d = 1; d <= 2 * n; ++d)
    out[std::size_t(d - 1)] = c.omega_ud(a, b, d) - c.omega_ud(b, a, d);
  return PhaseVector::from_coords(n, out);
}

namespace {

bool in_base_span(const PhaseVector& v, int k) {
  for (int m = k + 1; m <= v.n; ++m)
    if (!v.e[std::size_t(m - 1)].is_zero()) return false;
  for (int m = 1; m <= v.n; ++m)
    if (!v.theta[std::size_t(m - 1)].is_zero()) return false;
  return true;
}

void check_k(int n, int k, const char* fn) {
  if (k < 1 || k > n)
    throw std::invalid_argument(std::string(fn) + ": k out of range");
}

}  // namespace

EquivalencePair integrability_check(const FrameConnection& c, int k) {
  const int n = c.n();
  check_k(n, k, "integrability_check");
  EquivalencePair r;

  r.geometric = true;
  for (int a = 1; a <= k && r.geometric; ++a)
    for (int b = a + 1; b <= k && r.geometric; ++b)
      if (!in_base_span(lie_bracket(c, a, b), k)) r.geometric = false;

  r.spinorial = true;
  const std::uint32_t low = (1u << k) - 1u;
  for (std::uint32_t mask = 0; mask < (1u << n) && r.spinorial; ++mask) {
    if (mask & low) continue;
    const Spinor phi = Spinor::blade(n, mask);
    std::vector<Spinor> om;
    om.reserve(std::size_t(k));
    for (int a = 1; a <= k; ++a) om.push_back(omega_apply(c, a, phi));
    for (int a = 1; a <= k && r.spinorial; ++a)
      for (int b = a + 1; b <= k && r.spinorial; ++b)
        if (clifford_action(frame_vector(n, a), om[std::size_t(b - 1)]) !=
            clifford_action(frame_vector(n, b), om[std::size_t(a - 1)]))
          r.spinorial = false;
  }
  return r;
}

EquivalencePair totally_geodesic_check(const FrameConnection& c, int k) {
  const int n = c.n();
  check_k(n, k, "totally_geodesic_check");
  EquivalencePair r;

  r.geometric = true;
  for (int a = 1; a <= k && r.geometric; ++a)
    for (int b = 1; b <= k && r.geometric; ++b)
      if (!in_base_span(nabla_vector(c, a, frame_vector(n, b)), k))
        r.geometric = false;

  r.spinorial = true;
  const std::uint32_t low = (1u << k) - 1u;
  for (std::uint32_t mask = 0; mask < (1u << n) && r.spinorial; ++mask) {
    if (mask & low) continue;
    const Spinor phi = Spinor::blade(n, mask);
    for (int a = 1; a <= k && r.spinorial; ++a) {
      const Spinor img = omega_apply(c, a, phi);
      for (const auto& [m, coeff] : img.terms())
        if (m & low) {
          r.spinorial = false;
          break;
        }
    }
  }
  return r;
}

bool condition_geom_check(const FrameConnection& c, int trials,
                          std::uint64_t seed) {
  const int n = c.n();
  const auto probe = [&](const PhaseVector& x, const PhaseVector& y, int i,
                         int j, int k) {
    PhaseVector diff = nabla_along(c, x, frame_vector(n, i));
    diff += -nabla_along(c, y, frame_vector(n, j));
    return metric(diff, frame_vector(n, k)).is_zero();
  };

  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      for (int k = 1; k <= n; ++k) {
        if (k == i || k == j) continue;
        for (int a = 1; a <= 2 * n; ++a) {
          if (a == k + n) continue;
          const PhaseVector x = frame_vector(n, a);
          PhaseVector y(n);
          if (a == i + n) y = frame_vector(n, j + n);
          if (!probe(x, y, i, j, k)) return false;
        }
      }

  if (n < 2) return true;
  Rng rng(mix_seed(seed, 0xC0ED));
  for (int t = 0; t < trials; ++t) {
    const int k = rng.range(1, n);
    int i = rng.range(1, n);
    while (i == k) i = rng.range(1, n);
    int j = rng.range(1, n);
    while (j == k) j = rng.range(1, n);
    PhaseVector x = random_phase_vector(n, rng, true);
    PhaseVector y = random_phase_vector(n, rng, true);
    x.theta[std::size_t(k - 1)] = Scalar(0);
    y.theta[std::size_t(k - 1)] = Scalar(0);
    y.theta[std::size_t(j - 1)] = x.theta[std::size_t(i - 1)];
    if (!probe(x, y, i, j, k)) return false;
  }
  return true;
}

FrameConnection random_connection(int n, Rng& rng, bool with_gauge) {
  FrameConnection c(n);
  for (int a = 1; a <= 2 * n; ++a)
    for (int b = 1; b <= 2 * n; ++b)
      for (int d = b + 1; d <= 2 * n; ++d)
        if (rng.chance(2, 5)) c.set_omega(a, b, d, rng.small_nonzero_scalar());
  if (with_gauge)
    for (int a = 1; a <= 2 * n; ++a)
      if (rng.chance(1, 2)) c.set_A(a, rng.small_nonzero_scalar());
  return c;
}

FrameConnection random_connection_geodesic(int n, int k, Rng& rng) {
  check_k(n, k, "random_connection_geodesic");
  FrameConnection c = random_connection(n, rng);
  for (int a = 1; a <= k; ++a)
    for (int b = 1; b <= k; ++b) {
      for (int m = 1; m <= n; ++m)
        if (m != b) c.set_omega(a, b, m, Scalar(0));
      for (int m = k + n + 1; m <= 2 * n; ++m)
        c.set_omega(a, b, m, Scalar(0));
    }
  return c;
}

FrameConnection random_connection_integrable(int n, int k, Rng& rng) {
  check_k(n, k, "random_connection_integrable");
  FrameConnection c = random_connection_geodesic(n, k, rng);
  std::vector<int> slots;
  for (int m = k + 1; m <= n; ++m) slots.push_back(m);
  for (int m = k + n + 1; m <= 2 * n; ++m) slots.push_back(m);
  if (slots.empty()) return c;  // closure of a maximal span forces geodesic
  const int count = rng.range(1, 2 * k);
  for (int t = 0; t < count; ++t) {
    const int a = rng.range(1, k);
    const int b = rng.range(1, k);
    const int m = slots[std::size_t(rng.below(int(slots.size())))];
    const Scalar v = rng.small_nonzero_scalar();
    c.add_omega(a, b, m, v);
    if (a != b) c.add_omega(b, a, m, v);
  }
  return c;
}

CurvatureData random_curvature(int n, Rng& rng) {
  CurvatureData cd(n);
  for (int a = 1; a <= 2 * n; ++a)
    for (int b = a + 1; b <= 2 * n; ++b) {
      if (rng.chance(1, 2)) cd.set_F(a, b, rng.small_nonzero_scalar());
      for (int c = 1; c <= 2 * n; ++c)
        for (int d = 1; d <= 2 * n; ++d)
          if (rng.chance(1, 4))
            cd.set_riemann(a, b, c, d, rng.small_nonzero_scalar());
    }
  return cd;
}

}  // namespace purespin
