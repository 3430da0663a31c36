#include <doctest.h>

#include <vector>

#include "purespin/rng.hpp"
#include "purespin/subspace.hpp"

using purespin::Rng;
using purespin::Scalar;
using purespin::Subspace;

namespace {

std::vector<Scalar> vec(std::initializer_list<int> xs) {
  std::vector<Scalar> out;
  for (int x : xs) out.emplace_back(x);
  return out;
}

Subspace random_subspace(std::size_t ambient, std::size_t gens, Rng& rng) {
  std::vector<std::vector<Scalar>> rows;
  for (std::size_t i = 0; i < gens; ++i) {
    std::vector<Scalar> v(ambient);
    for (auto& x : v) x = rng.small_scalar();
    rows.push_back(std::move(v));
  }
  return Subspace::from_vectors(ambient, rows);
}

}  // namespace

TEST_CASE("canonical representation makes equality syntactic") {
  const Subspace a =
      Subspace::from_vectors(3, {vec({1, 0, 0}), vec({0, 1, 0})});
  const Subspace b =
      Subspace::from_vectors(3, {vec({1, 1, 0}), vec({2, 1, 0})});
  CHECK(a == b);
  CHECK(a.rank() == 2);
  CHECK(a != Subspace::full(3));
}

TEST_CASE("sum and intersection on a hand example") {
  const Subspace u =
      Subspace::from_vectors(3, {vec({1, 0, 0}), vec({0, 1, 0})});
  const Subspace w =
      Subspace::from_vectors(3, {vec({1, 1, 0}), vec({0, 0, 1})});
  CHECK(purespin::subspace_sum(u, w) == Subspace::full(3));
  CHECK(purespin::subspace_intersection(u, w) ==
        Subspace::from_vectors(3, {vec({1, 1, 0})}));
}

TEST_CASE("dimension formula for sums and intersections") {
  Rng rng(31);
  for (int t = 0; t < 8; ++t) {
    const Subspace u = random_subspace(6, 3, rng);
    const Subspace w = random_subspace(6, 3, rng);
    const Subspace s = purespin::subspace_sum(u, w);
    const Subspace m = purespin::subspace_intersection(u, w);
    CHECK(u.rank() + w.rank() == s.rank() + m.rank());
    CHECK(purespin::subspace_contains(s, u));
    CHECK(purespin::subspace_contains(u, m));
    for (std::size_t r = 0; r < m.rank(); ++r) {
      std::vector<Scalar> row(m.ambient_dim());
      for (std::size_t j = 0; j < row.size(); ++j)
        row[j] = m.basis().at(r, j);
      CHECK(purespin::contains_vector(u, row));
      CHECK(purespin::contains_vector(w, row));
    }
  }
}

TEST_CASE("membership answers match construction") {
  const Subspace u =
      Subspace::from_vectors(4, {vec({1, 2, 0, 0}), vec({0, 0, 1, 1})});
  CHECK(purespin::contains_vector(u, vec({2, 4, 3, 3})));
  CHECK(!purespin::contains_vector(u, vec({1, 0, 0, 0})));
  CHECK(purespin::contains_vector(u, vec({0, 0, 0, 0})));
  CHECK(purespin::subspace_contains(Subspace::full(4), u));
  CHECK(purespin::subspace_contains(u, Subspace::zero(4)));
}
