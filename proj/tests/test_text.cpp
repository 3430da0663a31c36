#include <doctest.h>

#include "purespin/rng.hpp"
#include "purespin/text.hpp"

using purespin::ParseError;
using purespin::PhaseVector;
using purespin::Rational;
using purespin::Rng;
using purespin::Scalar;
using purespin::Spinor;

TEST_CASE("phase vector grammar") {
  const PhaseVector v = purespin::parse_phase_vector(3, "e1 - 2*t3");
  CHECK(v.e[0] == Scalar(1));
  CHECK(v.e[1].is_zero());
  CHECK(v.e[2].is_zero());
  CHECK(v.theta[0].is_zero());
  CHECK(v.theta[1].is_zero());
  CHECK(v.theta[2] == Scalar(-2));

  CHECK(purespin::parse_phase_vector(2, "0").is_zero());
  const PhaseVector w = purespin::parse_phase_vector(2, "e1 + e1 + 1/2*t2");
  CHECK(w.e[0] == Scalar(2));
  CHECK(w.theta[1] == Scalar(Rational(1, 2)));
}

TEST_CASE("spinor grammar") {
  const Spinor a = purespin::parse_spinor(3, "1 + t{12}");
  CHECK(a.coeff(0) == Scalar(1));
  CHECK(a.coeff(0b011) == Scalar(1));
  CHECK(a.term_count() == 2);

  const Spinor b = purespin::parse_spinor(2, "(0,1)*t2");
  CHECK(b.coeff(0b10) == Scalar::i());

  // Permuted indices carry the permutation sign.
  CHECK(purespin::parse_spinor(2, "t{21}") ==
        Spinor::blade(2, 0b11, Scalar(-1)));
  CHECK(purespin::parse_spinor(3, "t{312}") ==
        Spinor::blade(3, 0b111));

  // Wide indices use the bare token or the comma form.
  CHECK(purespin::parse_spinor(10, "t10") == Spinor::blade(10, 1u << 9));
  CHECK(purespin::parse_spinor(10, "t{2,10}") ==
        Spinor::blade(10, (1u << 1) | (1u << 9)));
}

TEST_CASE("printer emits canonical forms") {
  CHECK(purespin::print_spinor(Spinor::zero(2)) == "0");
  CHECK(purespin::print_spinor(Spinor::unit(2)) == "1");
  CHECK(purespin::print_spinor(Spinor::blade(2, 0b10)) == "t2");
  CHECK(purespin::print_spinor(Spinor::blade(2, 0b11, Scalar(-1))) ==
        "-t{12}");
  const Spinor mixed = Spinor::blade(2, 0, Scalar(2)) +
                       Spinor::blade(2, 0b01, Scalar(Rational(-1, 2)));
  CHECK(purespin::print_spinor(mixed) == "2 - 1/2*t1");
}

TEST_CASE("print and parse round-trip") {
  Rng rng(77);
  for (int n : {2, 3, 10}) {
    for (int t = 0; t < 10; ++t) {
      const Spinor s = purespin::random_spinor(n, rng);
      CHECK(purespin::parse_spinor(n, purespin::print_spinor(s)) == s);
      const PhaseVector v = purespin::random_phase_vector(n, rng);
      CHECK(purespin::parse_phase_vector(n, purespin::print_phase_vector(v)) ==
            v);
    }
  }
  CHECK(purespin::parse_scalar(purespin::print_scalar(Scalar(
            Rational(-7, 3), Rational(1, 2)))) ==
        Scalar(Rational(-7, 3), Rational(1, 2)));
}

TEST_CASE("errors carry positions") {
  try {
    purespin::parse_spinor(2, "t{12");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 1);
    CHECK(e.col() >= 1);
  }

  try {
    purespin::parse_spinor(2, "1 +\nt{99}");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
  }

  CHECK_THROWS_AS(purespin::parse_spinor(2, "t0"), ParseError);
  CHECK_THROWS_AS(purespin::parse_spinor(2, "t3"), ParseError);
  CHECK_THROWS_AS(purespin::parse_spinor(2, "t{11}"), ParseError);
  CHECK_THROWS_AS(purespin::parse_scalar("3/0"), ParseError);
  CHECK_THROWS_AS(purespin::parse_scalar(""), ParseError);
  CHECK_THROWS_AS(purespin::parse_phase_vector(2, "e1 + 5"), ParseError);
  CHECK_THROWS_AS(purespin::parse_phase_vector(2, "e{12}"), ParseError);
}
