#include <doctest.h>

#include "purespin/rng.hpp"
#include "purespin/spinor.hpp"

using purespin::Rng;
using purespin::Scalar;
using purespin::Spinor;

TEST_CASE("blade wedge signs") {
  const int n = 2;
  const Spinor t1 = Spinor::blade(n, 0b01);
  const Spinor t2 = Spinor::blade(n, 0b10);
  const Spinor t12 = Spinor::blade(n, 0b11);
  CHECK(purespin::wedge(t1, t2) == t12);
  CHECK(purespin::wedge(t2, t1) == Scalar(-1) * t12);
  CHECK(purespin::wedge(t1, t1).is_zero());
  CHECK(purespin::wedge(Spinor::unit(n), t2) == t2);
}

TEST_CASE("wedge is associative and graded-commutative") {
  Rng rng(11);
  const int n = 4;
  for (int t = 0; t < 10; ++t) {
    const Spinor a = purespin::random_spinor(n, rng);
    const Spinor b = purespin::random_spinor(n, rng);
    const Spinor c = purespin::random_spinor(n, rng);
    CHECK(purespin::wedge(purespin::wedge(a, b), c) ==
          purespin::wedge(a, purespin::wedge(b, c)));
  }
  // Homogeneous parts commute up to (-1)^{pq}.
  const Spinor x = Spinor::blade(n, 0b0011);
  const Spinor y = Spinor::blade(n, 0b1100);
  CHECK(purespin::wedge(x, y) == purespin::wedge(y, x));
  const Spinor p = Spinor::blade(n, 0b0001);
  const Spinor q = Spinor::blade(n, 0b0110);
  CHECK(purespin::wedge(p, q) == purespin::wedge(q, p));
  const Spinor r = Spinor::blade(n, 0b0010);
  CHECK(purespin::wedge(p, r) == Scalar(-1) * purespin::wedge(r, p));
}

TEST_CASE("interior contraction signs") {
  const int n = 2;
  const Spinor t12 = Spinor::blade(n, 0b11);
  CHECK(purespin::interior(1, t12) == Spinor::blade(n, 0b10));
  CHECK(purespin::interior(2, t12) == Scalar(-1) * Spinor::blade(n, 0b01));
  CHECK(purespin::interior(1, Spinor::unit(n)).is_zero());
}

TEST_CASE("interior is an anti-derivation against wedge") {
  Rng rng(17);
  const int n = 3;
  for (int t = 0; t < 12; ++t) {
    const Spinor a = purespin::random_spinor(n, rng);
    for (int i = 1; i <= n; ++i) {
      // i(i)^2 = 0
      CHECK(purespin::interior(i, purespin::interior(i, a)).is_zero());
    }
  }
}

TEST_CASE("reverse flips grades 2 and 3 mod 4") {
  const int n = 4;
  CHECK(purespin::reverse(Spinor::unit(n)) == Spinor::unit(n));
  CHECK(purespin::reverse(Spinor::blade(n, 0b0001)) ==
        Spinor::blade(n, 0b0001));
  CHECK(purespin::reverse(Spinor::blade(n, 0b0011)) ==
        Scalar(-1) * Spinor::blade(n, 0b0011));
  CHECK(purespin::reverse(Spinor::blade(n, 0b0111)) ==
        Scalar(-1) * Spinor::blade(n, 0b0111));
  CHECK(purespin::reverse(Spinor::blade(n, 0b1111)) ==
        Spinor::blade(n, 0b1111));
  Rng rng(3);
  const Spinor a = purespin::random_spinor(n, rng);
  CHECK(purespin::reverse(purespin::reverse(a)) == a);
}

TEST_CASE("grade decomposition sums back") {
  Rng rng(29);
  const int n = 4;
  const Spinor a = purespin::random_spinor(n, rng);
  const purespin::GradedSpinor g = purespin::grade_decompose(a);
  Spinor sum(n);
  for (const auto& [k, part] : g.components) {
    CHECK(part == purespin::grade_project(a, k));
    sum += part;
  }
  CHECK(sum == a);
}

TEST_CASE("coordinates round-trip") {
  Rng rng(41);
  const int n = 3;
  const Spinor a = purespin::random_spinor(n, rng);
  CHECK(Spinor::from_coords(n, a.coords()) == a);
  CHECK(a.coords().size() == 8);
}

TEST_CASE("sparse term bookkeeping") {
  Spinor s(2);
  s.add_term(0b01, Scalar(2));
  s.add_term(0b01, Scalar(-2));
  CHECK(s.is_zero());
  s.add_term(0b10, Scalar(1));
  CHECK(s.term_count() == 1);
  CHECK(s.coeff(0b10) == Scalar(1));
  CHECK(s.coeff(0b01).is_zero());
}
