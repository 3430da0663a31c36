#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "purespin/clifford.hpp"
#include "purespin/report.hpp"
#include "purespin/rng.hpp"

namespace purespin {

// Connection coefficients in the null frame e1..en, t1..tn (frame index
// a in 1..2n, with a > n meaning t_{a-n}) plus an abelian gauge potential A.
// omega(a,b,c) carries all indices lowered and is antisymmetric in (b,c):
// metric compatibility.
class FrameConnection {
public:
  explicit FrameConnection(int n);

  int n() const { return n_; }

  const Scalar& omega(int a, int b, int c) const;  // 1-based
  // Sets omega(a,b,c) and its mirror omega(a,c,b) = -value. b == c with a
  // nonzero value is rejected.
  void set_omega(int a, int b, int c, const Scalar& v);
  void add_omega(int a, int b, int c, const Scalar& v);

  const Scalar& A(int a) const;
  void set_A(int a, const Scalar& v);

  // omega_{ab}^c: last index raised.
  Scalar omega_ud(int a, int b, int c_up) const;
  // omega_a^{bc}: last two indices raised.
  Scalar omega_uu(int a, int b_up, int c_up) const;

private:
  std::size_t idx(int a, int b, int c) const;
  int n_;
  std::vector<Scalar> omega_;
  std::vector<Scalar> A_;
};

// First-order data of a spinor field at a point: value and the 2n frame
// derivatives of its components.
struct SpinorJet {
  Spinor value;
  std::vector<Spinor> derivs;  // 2n entries, frame order

  explicit SpinorJet(int n) : value(n), derivs(std::size_t(2 * n), Spinor(n)) {}
  SpinorJet(Spinor v, std::vector<Spinor> d);
  static SpinorJet constant(const Spinor& v);
  int n() const { return value.n(); }
};

// Curvature input: riemann(a,b,c,d) = R_{ab}^{cd} (first pair lowered,
// second pair raised), antisymmetric in (a,b); F antisymmetric. Both are free
// data here.
class CurvatureData {
public:
  explicit CurvatureData(int n);
  int n() const { return n_; }
  const Scalar& riemann(int a, int b, int c, int d) const;
  void set_riemann(int a, int b, int c, int d, const Scalar& v);  // mirrors (b,a)
  const Scalar& F(int a, int b) const;
  void set_F(int a, int b, const Scalar& v);  // mirrors (b,a)

private:
  int n_;
  std::vector<Scalar> r_, f_;
};

// Omega_a = -(1/4) omega_a^{bc} e_b e_c + A_a, as a sparse application and as
// a dense operator.
Spinor omega_apply(const FrameConnection& c, int a, const Spinor& phi);
CliffordOp omega_operator(const FrameConnection& c, int a);

// omega_{ab}^c e_c == Omega_a e_b - e_b Omega_a for all a, b (the gauge part
// cancels).
bool check_omega_relation(const FrameConnection& c);

// Covariant derivative of a jet along frame direction a.
Spinor covariant_derivative(const FrameConnection& c, const SpinorJet& j,
                            int a);

// Derivative of a constant-component vector field: (nabla_a v)^c = v^b omega_{ab}^c.
PhaseVector nabla_vector(const FrameConnection& c, int a,
                         const PhaseVector& v);

// Gauge shift A -> A + dlambda.
FrameConnection scaling_transform(const FrameConnection& c,
                                  const std::vector<Scalar>& lambda_derivs);
// Jet of exp(-lambda) phi at a point where lambda = 0.
SpinorJet scale_jet(const SpinorJet& j, const std::vector<Scalar>& lambda_derivs);

// d_a(phi,psi) == (nabla_a phi, psi) + (phi, nabla_a psi) for all a. Holds
// exactly when the gauge potential does not see the pair.
bool leibniz_inner_check(const FrameConnection& c, const SpinorJet& j1,
                         const SpinorJet& j2);

// -(1/4) R_{ab}^{cd} e_c e_d . s + F_{ab} s.
Spinor curvature_action(const CurvatureData& cd, int a, int b,
                        const Spinor& s);

// g^{ab} e_a . nabla_b.
Spinor dirac(const FrameConnection& c, const SpinorJet& j);

// T_a = nabla_a - (1/2n) e_a . D.
Spinor twistor_component(const FrameConnection& c, const SpinorJet& j, int a);

// The closed-form twistor components of the constant unit spinor along e_j
// and t_j, evaluated directly from the displayed coefficient formulas.
std::pair<Spinor, Spinor> twistor_closed_form(const FrameConnection& c, int j);

// Gauge potential making the unit spinor a twistor, when one exists. The
// required A is forced by the vanishing of the scalar coefficients; the
// residual constraints on omega depend only on the dimension.
struct TwistorGauge {
  std::vector<Scalar> A;  // 2n entries
  bool satisfiable = false;
  Report constraints;
};
TwistorGauge twistor_gauge(const FrameConnection& c);

// [e_a, e_b] = (omega_{ab}^c - omega_{ba}^c) e_c.
PhaseVector lie_bracket(const FrameConnection& c, int a, int b);

// Distribution span{e_1..e_k}: bracket closure vs the spinor-level condition
// e_a . nabla_b phi symmetric over the annihilated subspace.
struct EquivalencePair {
  bool geometric = false;
  bool spinorial = false;
};
EquivalencePair integrability_check(const FrameConnection& c, int k);

// nabla_{e_a} e_b staying inside the span vs nabla phi staying annihilated.
EquivalencePair totally_geodesic_check(const FrameConnection& c, int k);

// Samples vector pairs constrained by the pairing and probes
// g(nabla_X e_i - nabla_Y e_j, e_k) = 0; deterministic frame probes plus
// seeded random samples. Returns false on the first nonzero value.
bool condition_geom_check(const FrameConnection& c, int trials,
                          std::uint64_t seed);

// Random generators used by the verification suites.
FrameConnection random_connection(int n, Rng& rng, bool with_gauge = true);
// Connection whose span{e_1..e_k} brackets close (geometric integrability
// holds by construction).
FrameConnection random_connection_integrable(int n, int k, Rng& rng);
// Connection with nabla_{e_a} e_b inside the span for a, b <= k.
FrameConnection random_connection_geodesic(int n, int k, Rng& rng);
CurvatureData random_curvature(int n, Rng& rng);

}  // namespace purespin
