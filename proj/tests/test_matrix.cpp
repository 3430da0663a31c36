#include <doctest.h>

#include <cstddef>

#include "purespin/matrix.hpp"
#include "purespin/rng.hpp"
#include "purespin/subspace.hpp"

using purespin::Matrix;
using purespin::Rng;
using purespin::RrefResult;
using purespin::Scalar;

namespace {

Matrix random_matrix(std::size_t r, std::size_t c, Rng& rng) {
  Matrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m.at(i, j) = rng.small_scalar();
  return m;
}

}  // namespace

TEST_CASE("rref of a rank-one matrix") {
  Matrix m(2, 2);
  m.at(0, 0) = Scalar(2);
  m.at(0, 1) = Scalar(4);
  m.at(1, 0) = Scalar(1);
  m.at(1, 1) = Scalar(2);
  const RrefResult r = purespin::rref(m);
  CHECK(r.rank == 1);
  REQUIRE(r.pivots.size() == 1);
  CHECK(r.pivots[0] == 0);
  CHECK(r.matrix.at(0, 0) == Scalar(1));
  CHECK(r.matrix.at(0, 1) == Scalar(2));
  CHECK(r.matrix.at(1, 0).is_zero());
  CHECK(r.matrix.at(1, 1).is_zero());
}

TEST_CASE("rref is idempotent and parallel matches serial") {
  Rng rng(99);
  for (int t = 0; t < 4; ++t) {
    const Matrix m = random_matrix(7, 5, rng);
    const RrefResult a = purespin::rref(m);
    const RrefResult b = purespin::rref_serial(m);
    CHECK(a.matrix == b.matrix);
    CHECK(a.pivots == b.pivots);
    CHECK(a.rank == b.rank);
    const RrefResult again = purespin::rref(a.matrix);
    CHECK(again.matrix == a.matrix);
  }
}

TEST_CASE("parallel multiply matches serial across the work threshold") {
  Rng rng(7);
  const Matrix a = random_matrix(40, 30, rng);
  const Matrix b = random_matrix(30, 25, rng);
  CHECK(purespin::mul(a, b) == purespin::mul_serial(a, b));

  const Matrix big_a = random_matrix(140, 130, rng);
  const Matrix big_b = random_matrix(130, 135, rng);
  CHECK(purespin::mul(big_a, big_b) == purespin::mul_serial(big_a, big_b));
}

TEST_CASE("large rref crosses the parallel threshold consistently") {
  Rng rng(13);
  Matrix m(140, 130);
  for (std::size_t i = 0; i < 140; ++i)
    for (std::size_t j = 0; j < 130; ++j)
      m.at(i, j) = rng.chance(1, 4) ? rng.small_scalar() : Scalar(0);
  const RrefResult a = purespin::rref(m);
  const RrefResult b = purespin::rref_serial(m);
  CHECK(a.matrix == b.matrix);
  CHECK(a.rank == b.rank);
}

TEST_CASE("kernel basis multiplies back to zero") {
  Rng rng(21);
  const Matrix m = random_matrix(4, 7, rng);
  const purespin::Subspace kernel = purespin::kernel_basis(m);
  CHECK(kernel.rank() == 7 - purespin::rref(m).rank);
  for (std::size_t r = 0; r < kernel.rank(); ++r) {
    for (std::size_t i = 0; i < m.rows(); ++i) {
      Scalar sum(0);
      for (std::size_t j = 0; j < m.cols(); ++j)
        sum += m.at(i, j) * kernel.basis().at(r, j);
      CHECK(sum.is_zero());
    }
  }
}

TEST_CASE("matrix algebra basics") {
  const Matrix id = Matrix::identity(3);
  Rng rng(5);
  const Matrix m = random_matrix(3, 3, rng);
  CHECK(purespin::mul(id, m) == m);
  CHECK(purespin::mul(m, id) == m);
  CHECK(m.transpose().transpose() == m);
  CHECK((m - m).is_zero());
}
