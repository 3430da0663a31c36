#include <doctest.h>

#include <stdexcept>
#include <vector>

#include "purespin/connection.hpp"
#include "purespin/rng.hpp"

using purespin::CurvatureData;
using purespin::FrameConnection;
using purespin::PhaseVector;
using purespin::Rng;
using purespin::Scalar;
using purespin::Spinor;
using purespin::SpinorJet;

TEST_CASE("omega storage enforces the antisymmetric mirror") {
  FrameConnection c(2);
  c.set_omega(1, 1, 2, Scalar(3));
  CHECK(c.omega(1, 1, 2) == Scalar(3));
  CHECK(c.omega(1, 2, 1) == Scalar(-3));
  c.add_omega(1, 2, 1, Scalar(1));
  CHECK(c.omega(1, 2, 1) == Scalar(-2));
  CHECK(c.omega(1, 1, 2) == Scalar(2));
  CHECK_THROWS_AS(c.set_omega(1, 2, 2, Scalar(1)), std::invalid_argument);
  CHECK_NOTHROW(c.set_omega(1, 2, 2, Scalar(0)));
  CHECK_THROWS_AS(c.omega(0, 1, 1), std::out_of_range);
}

TEST_CASE("frame compatibility identity on random connections") {
  Rng rng(81);
  for (int n : {2, 3})
    for (int t = 0; t < 5; ++t) {
      const FrameConnection c = purespin::random_connection(n, rng);
      CHECK(purespin::check_omega_relation(c));
    }
}

TEST_CASE("lie bracket from the frame coefficients") {
  const int n = 3;
  FrameConnection c(n);
  c.set_omega(1, 2, 3, Scalar(1));
  const PhaseVector br = purespin::lie_bracket(c, 1, 2);
  CHECK(br.e[0].is_zero());
  CHECK(br.e[1].is_zero());
  CHECK(br.e[2].is_zero());
  CHECK(br.theta[0].is_zero());
  CHECK(br.theta[1].is_zero());
  CHECK(br.theta[2] == Scalar(2));
  // Antisymmetry of the bracket itself.
  CHECK(purespin::lie_bracket(c, 2, 1) == Scalar(-1) * br);
}

TEST_CASE("dirac operator hand values on a flat connection") {
  const int n = 2;
  const FrameConnection c(n);

  SpinorJet j1(n);
  j1.value = Spinor::unit(n);
  j1.derivs[0] = Spinor::blade(n, 0b01);  // direction e_1, derivative t1
  CHECK(purespin::dirac(c, j1).is_zero());

  SpinorJet j2(n);
  j2.derivs[0] = Spinor::blade(n, 0b10);  // direction e_1, derivative t2
  CHECK(purespin::dirac(c, j2) == Spinor::blade(n, 0b11, Scalar(2)));

  SpinorJet j3(n);
  j3.derivs[2] = Spinor::blade(n, 0b01);  // direction t_1, derivative t1
  CHECK(purespin::dirac(c, j3) == Spinor::blade(n, 0, Scalar(2)));
}

TEST_CASE("scaling transform leaves the covariant derivative fixed") {
  Rng rng(83);
  for (int n : {2, 3}) {
    const FrameConnection c = purespin::random_connection(n, rng);
    SpinorJet j(n);
    j.value = purespin::random_spinor(n, rng);
    for (auto& d : j.derivs) d = purespin::random_spinor(n, rng, true);
    std::vector<Scalar> lam(std::size_t(2 * n));
    for (auto& s : lam) s = rng.small_scalar();
    const FrameConnection cs = purespin::scaling_transform(c, lam);
    const SpinorJet js = purespin::scale_jet(j, lam);
    for (int a = 1; a <= 2 * n; ++a)
      CHECK(purespin::covariant_derivative(cs, js, a) ==
            purespin::covariant_derivative(c, j, a));
  }
}

TEST_CASE("pairing product rule sees exactly the gauge potential") {
  const int n = 2;
  FrameConnection c(n);
  const SpinorJet u1 = SpinorJet::constant(Spinor::unit(n));
  const SpinorJet u2 = SpinorJet::constant(Spinor::blade(n, 0b11));
  CHECK(purespin::leibniz_inner_check(c, u1, u2));
  c.set_A(1, Scalar(1));
  CHECK(!purespin::leibniz_inner_check(c, u1, u2));
  // A pair with vanishing inner product is blind to A.
  const SpinorJet u3 = SpinorJet::constant(Spinor::blade(n, 0b01));
  CHECK(purespin::leibniz_inner_check(c, u1, u3));
}

TEST_CASE("curvature action on hand data") {
  const int n = 2;
  CurvatureData cd(n);
  const Scalar v(4);
  cd.set_riemann(1, 2, 1, 2, v);
  CHECK(cd.riemann(2, 1, 1, 2) == Scalar(-4));
  CHECK(purespin::curvature_action(cd, 1, 2, Spinor::unit(n)).is_zero());
  // -(1/4) v e_1 e_2 . t12 = (v/4) 1
  CHECK(purespin::curvature_action(cd, 1, 2, Spinor::blade(n, 0b11)) ==
        Spinor::blade(n, 0, Scalar(1)));
  CurvatureData cf(n);
  cf.set_F(1, 2, Scalar(5));
  CHECK(purespin::curvature_action(cf, 1, 2, Spinor::unit(n)) ==
        Spinor::blade(n, 0, Scalar(5)));
  CHECK(cf.F(2, 1) == Scalar(-5));
}

TEST_CASE("constrained generators force their booleans") {
  Rng rng(87);
  for (int n : {2, 3})
    for (int k = 1; k <= n; ++k) {
      FrameConnection ci = purespin::random_connection_integrable(n, k, rng);
      const purespin::EquivalencePair pi = purespin::integrability_check(ci, k);
      CHECK(pi.geometric);
      CHECK(pi.spinorial);
      FrameConnection cg = purespin::random_connection_geodesic(n, k, rng);
      const purespin::EquivalencePair pg =
          purespin::totally_geodesic_check(cg, k);
      CHECK(pg.geometric);
      CHECK(pg.spinorial);
    }
}

TEST_CASE("sampling probe detects a base-sector slot") {
  const int n = 2;
  FrameConnection c(n);
  CHECK(purespin::condition_geom_check(c, 4, 1));
  c.set_omega(1, 1, 2, Scalar(1));
  CHECK(!purespin::condition_geom_check(c, 4, 1));
}
