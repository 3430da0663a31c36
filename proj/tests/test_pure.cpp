#include <doctest.h>

#include <stdexcept>
#include <vector>

#include "purespin/pure.hpp"
#include "purespin/rng.hpp"

using purespin::IsotropicSubspace;
using purespin::PhaseVector;
using purespin::Rng;
using purespin::Scalar;
using purespin::Spinor;
using purespin::SpinorSubspace;

TEST_CASE("annihilated chain at base dimension 3") {
  const int n = 3;
  auto F = [&](int a) { return purespin::frame_vector(n, a); };
  const IsotropicSubspace I1 = IsotropicSubspace::from_vectors(n, {F(1)});
  const IsotropicSubspace I2 =
      IsotropicSubspace::from_vectors(n, {F(1), F(5)});
  const IsotropicSubspace I3 =
      IsotropicSubspace::from_vectors(n, {F(1), F(5), F(6)});

  const Spinor one = Spinor::unit(n);
  const Spinor t2 = Spinor::blade(n, 0b010);
  const Spinor t3 = Spinor::blade(n, 0b100);
  const Spinor t23 = Spinor::blade(n, 0b110);

  CHECK(purespin::pure_subspace(I1) ==
        SpinorSubspace::from_spinors(n, {one, t2, t3, t23}));
  CHECK(purespin::pure_subspace(I2) ==
        SpinorSubspace::from_spinors(n, {t2, t23}));
  CHECK(purespin::pure_subspace(I3) ==
        SpinorSubspace::from_spinors(n, {t23}));
  CHECK(purespin::common_annihilator(purespin::pure_subspace(I2)) ==
        I2.space());
}

TEST_CASE("isotropy is validated at construction") {
  const int n = 2;
  auto F = [&](int a) { return purespin::frame_vector(n, a); };
  CHECK_THROWS_AS(IsotropicSubspace::from_vectors(n, {F(1), F(3)}),
                  std::invalid_argument);
  CHECK_NOTHROW(IsotropicSubspace::from_vectors(n, {F(1), F(4)}));
}

TEST_CASE("annihilator rejects the zero spinor") {
  CHECK_THROWS_AS(purespin::annihilator(Spinor::zero(2)),
                  std::invalid_argument);
}

TEST_CASE("random isotropic subspaces are isotropic and deterministic") {
  for (int n : {2, 3, 4}) {
    for (int k = 0; k <= n; ++k) {
      const IsotropicSubspace I = purespin::random_isotropic(n, k, 42);
      CHECK(I.dim() == std::size_t(k));
      for (std::size_t i = 0; i < I.dim(); ++i)
        for (std::size_t j = i; j < I.dim(); ++j)
          CHECK(purespin::metric(I.basis_vector(i), I.basis_vector(j))
                    .is_zero());
      CHECK(I == purespin::random_isotropic(n, k, 42));
      if (k > 0) {
        bool any_diff = false;
        for (std::uint64_t s = 43; s < 53 && !any_diff; ++s)
          any_diff = I != purespin::random_isotropic(n, k, s);
        CHECK(any_diff);
      }
    }
  }
}

TEST_CASE("duality laws hold on a nested hand pair") {
  const int n = 2;
  auto F = [&](int a) { return purespin::frame_vector(n, a); };
  const IsotropicSubspace I1 = IsotropicSubspace::from_vectors(n, {F(1)});
  const IsotropicSubspace I2 =
      IsotropicSubspace::from_vectors(n, {F(1), F(2)});
  const purespin::Report rep = purespin::theorem1_report(I1, I2);
  CHECK(rep.all_ok());
  bool saw_pass = false;
  for (const auto& c : rep.checks)
    if (c.status == purespin::Status::pass) saw_pass = true;
  CHECK(saw_pass);
}

TEST_CASE("purity filter rejects a non-annihilated subspace") {
  const int n = 2;
  const SpinorSubspace bad = SpinorSubspace::from_spinors(
      n, {Spinor::unit(n), Spinor::blade(n, 0b11)});
  CHECK(!purespin::necessary_purity_filter(bad).all_ok());

  const SpinorSubspace good =
      purespin::pure_subspace(purespin::random_isotropic(n, 1, 9));
  CHECK(purespin::necessary_purity_filter(good).all_ok());
}

TEST_CASE("wedge closure of annihilated spinors") {
  CHECK(purespin::wedge_closure_check(2));
  CHECK(purespin::wedge_closure_check(3));
}

TEST_CASE("metric rotations preserve the pairing") {
  Rng rng(71);
  for (int n : {2, 3}) {
    const purespin::Matrix rot = purespin::random_metric_rotation(n, rng);
    for (int t = 0; t < 6; ++t) {
      const PhaseVector x = purespin::random_phase_vector(n, rng);
      const PhaseVector y = purespin::random_phase_vector(n, rng);
      auto rotate = [&](const PhaseVector& v) {
        const std::vector<Scalar> c = v.coords();
        std::vector<Scalar> out(c.size(), Scalar(0));
        for (std::size_t r = 0; r < c.size(); ++r)
          for (std::size_t s = 0; s < c.size(); ++s)
            out[r] += rot.at(r, s) * c[s];
        return PhaseVector::from_coords(n, out);
      };
      CHECK(purespin::metric(rotate(x), rotate(y)) == purespin::metric(x, y));
    }
  }
}
