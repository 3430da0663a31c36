#include <doctest.h>

#include "purespin/connection.hpp"
#include "purespin/rng.hpp"

using purespin::FrameConnection;
using purespin::Rational;
using purespin::Rng;
using purespin::Scalar;
using purespin::Spinor;
using purespin::SpinorJet;
using purespin::TwistorGauge;

TEST_CASE("closed-form components match the direct operator") {
  for (int n : {2, 3}) {
    Rng rng(100 + n);
    for (int t = 0; t < 10; ++t) {
      const FrameConnection c = purespin::random_connection(n, rng);
      const SpinorJet j = SpinorJet::constant(Spinor::unit(n));
      for (int k = 1; k <= n; ++k) {
        const auto [base, dual] = purespin::twistor_closed_form(c, k);
        CHECK(purespin::twistor_component(c, j, k) == base);
        CHECK(purespin::twistor_component(c, j, k + n) == dual);
      }
    }
  }
}

TEST_CASE("pure gauge potential spot values") {
  const Scalar alpha(Rational(3, 2));
  for (int n : {2, 3}) {
    FrameConnection c(n);
    c.set_A(1, alpha);
    const SpinorJet j = SpinorJet::constant(Spinor::unit(n));
    const Scalar frac = alpha * Scalar(Rational(n - 1, n));
    CHECK(purespin::twistor_component(c, j, 1) ==
          Spinor::blade(n, 0, frac));
    CHECK(purespin::twistor_component(c, j, 1 + n).is_zero());
    for (int k = 2; k <= n; ++k) {
      CHECK(purespin::twistor_component(c, j, k).is_zero());
      const std::uint32_t mask = 1u | (1u << (k - 1));
      CHECK(purespin::twistor_component(c, j, k + n) ==
            Spinor::blade(n, mask, alpha * Scalar(Rational(1, n))));
    }
  }
}

TEST_CASE("twistor operator is trace free") {
  Rng rng(131);
  for (int n : {2, 3}) {
    const FrameConnection c = purespin::random_connection(n, rng);
    SpinorJet j(n);
    j.value = purespin::random_spinor(n, rng);
    for (auto& d : j.derivs) d = purespin::random_spinor(n, rng, true);
    Spinor trace(n);
    for (int a = 1; a <= 2 * n; ++a) {
      const int p = purespin::frame_partner(n, a);
      trace += purespin::clifford_action(
                   purespin::frame_vector(n, p),
                   purespin::twistor_component(c, j, a)) *
               Scalar(2);
    }
    CHECK(trace.is_zero());
  }
}

static bool unit_twistor_vanishes(FrameConnection c,
                                  const std::vector<Scalar>& A) {
  const int n = c.n();
  for (int a = 1; a <= 2 * n; ++a) c.set_A(a, A[std::size_t(a - 1)]);
  const SpinorJet j = SpinorJet::constant(Spinor::unit(n));
  for (int a = 1; a <= 2 * n; ++a)
    if (!purespin::twistor_component(c, j, a).is_zero()) return false;
  return true;
}

TEST_CASE("gauge solver on the flat connection") {
  const FrameConnection c(2);
  const TwistorGauge g = purespin::twistor_gauge(c);
  REQUIRE(g.satisfiable);
  for (const auto& s : g.A) CHECK(s.is_zero());
  CHECK(unit_twistor_vanishes(c, g.A));
}

TEST_CASE("gauge solver accepts the antisymmetric profile in dimension six") {
  FrameConnection c(3);
  const Scalar v(Rational(2, 3));
  c.set_omega(1, 2, 3, v);
  c.set_omega(2, 3, 1, v);
  c.set_omega(3, 1, 2, v);
  const TwistorGauge g = purespin::twistor_gauge(c);
  REQUIRE(g.satisfiable);
  CHECK(g.constraints.all_ok());
  CHECK(unit_twistor_vanishes(c, g.A));
}

TEST_CASE("gauge solver rejects off-slot torsion") {
  FrameConnection c2(2);
  c2.set_omega(1, 1, 2, Scalar(1));
  const TwistorGauge g2 = purespin::twistor_gauge(c2);
  CHECK(!g2.satisfiable);
  CHECK(!unit_twistor_vanishes(c2, g2.A));

  FrameConnection c3(3);
  c3.set_omega(4, 2, 3, Scalar(1));
  const TwistorGauge g3 = purespin::twistor_gauge(c3);
  CHECK(!g3.satisfiable);
  CHECK(!unit_twistor_vanishes(c3, g3.A));
}
