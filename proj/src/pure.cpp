#include "purespin/pure.hpp"

#include <bit>
#include <stdexcept>
#include <string>

namespace purespin {

namespace {

PhaseVector row_to_phase_vector(int n, const Matrix& basis, std::size_t i) {
  std::vector<Scalar> c(2 * n);
  for (int j = 0; j < 2 * n; ++j) c[j] = basis.at(i, j);
  return PhaseVector::from_coords(n, c);
}

void check_isotropic(int n, const Subspace& s) {
  if (s.ambient_dim() != std::size_t(2 * n))
    throw std::invalid_argument("IsotropicSubspace: ambient must be 2n");
  std::vector<PhaseVector> basis;
  for (std::size_t i = 0; i < s.rank(); ++i)
    basis.push_back(row_to_phase_vector(n, s.basis(), i));
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = i; j < basis.size(); ++j)
      if (!metric(basis[i], basis[j]).is_zero())
        throw std::invalid_argument(
            "IsotropicSubspace: pairing of basis rows " + std::to_string(i) +
            "," + std::to_string(j) + " is nonzero");
  if (s.rank() > std::size_t(n))
    throw std::invalid_argument("IsotropicSubspace: dimension exceeds n");
}

}  // namespace

IsotropicSubspace::IsotropicSubspace(int n, Subspace space)
    : n_(n), space_(std::move(space)) {
  check_isotropic(n_, space_);
}

IsotropicSubspace IsotropicSubspace::from_vectors(
    int n, const std::vector<PhaseVector>& gens) {
  std::vector<std::vector<Scalar>> rows;
  for (const auto& v : gens) {
    if (v.n != n) throw std::invalid_argument("IsotropicSubspace: mixed n");
    rows.push_back(v.coords());
  }
  return IsotropicSubspace(n, Subspace::from_vectors(2 * n, rows));
}

IsotropicSubspace IsotropicSubspace::zero(int n) {
  return IsotropicSubspace(n, Subspace::zero(2 * n));
}

PhaseVector IsotropicSubspace::basis_vector(std::size_t i) const {
  return row_to_phase_vector(n_, space_.basis(), i);
}

SpinorSubspace::SpinorSubspace(int n, Subspace space)
    : n_(n), space_(std::move(space)) {
  if (space_.ambient_dim() != (std::size_t(1) << n))
    throw std::invalid_argument("SpinorSubspace: ambient must be 2^n");
}

SpinorSubspace SpinorSubspace::from_spinors(int n,
                                            const std::vector<Spinor>& gens) {
  std::vector<std::vector<Scalar>> rows;
  for (const auto& s : gens) {
    if (s.n() != n) throw std::invalid_argument("SpinorSubspace: mixed n");
    rows.push_back(s.coords());
  }
  return SpinorSubspace(n, Subspace::from_vectors(std::size_t(1) << n, rows));
}

Spinor SpinorSubspace::basis_spinor(std::size_t i) const {
  std::vector<Scalar> c(space_.ambient_dim());
  for (std::size_t j = 0; j < c.size(); ++j) c[j] = space_.basis().at(i, j);
  return Spinor::from_coords(n_, c);
}

IsotropicSubspace annihilator(const Spinor& a) {
  if (a.is_zero())
    throw std::invalid_argument("annihilator: zero spinor has no annihilator");
  const int n = a.n();
  const std::size_t dim = std::size_t(1) << n;
  // column per frame direction, rows indexed by blade
  Matrix m(dim, 2 * n);
  for (int fa = 1; fa <= 2 * n; ++fa) {
    Spinor img = clifford_action(frame_vector(n, fa), a);
    for (const auto& [row, c] : img.terms()) m.at(row, fa - 1) = c;
  }
  return IsotropicSubspace(n, kernel_basis(m));
}

SpinorSubspace pure_subspace(const IsotropicSubspace& I) {
  const int n = I.n();
  const std::size_t dim = std::size_t(1) << n;
  const std::size_t k = I.dim();
  if (k == 0) return SpinorSubspace(n, Subspace::full(dim));
  Matrix stacked(k * dim, dim);
  for (std::size_t j = 0; j < k; ++j) {
    const PhaseVector v = I.basis_vector(j);
    for (std::size_t col = 0; col < dim; ++col) {
      Spinor img = clifford_action(v, Spinor::blade(n, std::uint32_t(col)));
      for (const auto& [row, c] : img.terms())
        stacked.at(j * dim + row, col) = c;
    }
  }
  return SpinorSubspace(n, kernel_basis(stacked));
}

Subspace common_annihilator(const SpinorSubspace& S) {
  const int n = S.n();
  const std::size_t dim = std::size_t(1) << n;
  const std::size_t r = S.dim();
  if (r == 0) return Subspace::full(2 * n);
  Matrix m(r * dim, 2 * n);
  for (std::size_t i = 0; i < r; ++i) {
    const Spinor phi = S.basis_spinor(i);
    for (int fa = 1; fa <= 2 * n; ++fa) {
      Spinor img = clifford_action(frame_vector(n, fa), phi);
      for (const auto& [row, c] : img.terms())
        m.at(i * dim + row, fa - 1) = c;
    }
  }
  return kernel_basis(m);
}

bool is_pure(const Spinor& a) {
  return annihilator(a).dim() == std::size_t(a.n());
}

namespace {

bool is_power_of_two(std::size_t v) { return v && !(v & (v - 1)); }

// Chirality projections of a spinor subspace; the subspace is graded iff the
// two projected ranks add up to the original rank.
std::pair<Subspace, Subspace> chirality_projections(const SpinorSubspace& S) {
  std::vector<std::vector<Scalar>> even_rows, odd_rows;
  for (std::size_t i = 0; i < S.dim(); ++i) {
    auto [even, odd] = chirality_split(S.basis_spinor(i));
    even_rows.push_back(even.coords());
    odd_rows.push_back(odd.coords());
  }
  const std::size_t amb = S.space().ambient_dim();
  return {Subspace::from_vectors(amb, even_rows),
          Subspace::from_vectors(amb, odd_rows)};
}

std::string dim_witness(std::size_t got, std::size_t want) {
  return "dim " + std::to_string(got) + ", expected " + std::to_string(want);
}

}  // namespace

Report necessary_purity_filter(const SpinorSubspace& S) {
  Report r;
  r.suite = "purity_filter";
  r.n = S.n();
  r.add("dimension_power_of_two", S.dim() > 0 && is_power_of_two(S.dim()),
        "dim " + std::to_string(S.dim()));

  bool inner_ok = true;
  for (std::size_t i = 0; i < S.dim() && inner_ok; ++i)
    for (std::size_t j = i; j < S.dim() && inner_ok; ++j)
      inner_ok =
          spinor_inner(S.basis_spinor(i), S.basis_spinor(j)).is_zero();
  if (S.dim() == (std::size_t(1) << S.n())) {
    // the whole spinor space: the inner-product condition is about proper
    // pure subspaces, where some vector annihilates the basis
    r.add_skip("inner_products_vanish", "entire spinor space");
  } else {
    r.add("inner_products_vanish", inner_ok);
  }

  if (S.dim() == 1) {
    auto [even, odd] = chirality_split(S.basis_spinor(0));
    r.add("line_is_weyl", even.is_zero() || odd.is_zero());
    r.add_skip("chirality_halves", "dimension 1");
  } else {
    r.add_skip("line_is_weyl", "dimension != 1");
    auto [pe, po] = chirality_projections(S);
    const bool ok = pe.rank() == S.dim() / 2 && po.rank() == S.dim() / 2 &&
                    pe.rank() + po.rank() == S.dim();
    r.add("chirality_halves", ok,
          "halves " + std::to_string(pe.rank()) + "+" +
              std::to_string(po.rank()) + " of " + std::to_string(S.dim()));
  }
  return r;
}

namespace {

bool subspace_isotropic(int n, const Subspace& s) {
  std::vector<PhaseVector> basis;
  for (std::size_t i = 0; i < s.rank(); ++i)
    basis.push_back(row_to_phase_vector(n, s.basis(), i));
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = i; j < basis.size(); ++j)
      if (!metric(basis[i], basis[j]).is_zero()) return false;
  return true;
}

}  // namespace

Report theorem1_report(const IsotropicSubspace& I1,
                       const IsotropicSubspace& I2) {
  if (I1.n() != I2.n())
    throw std::invalid_argument("theorem1_report: mixed n");
  const int n = I1.n();
  Report r;
  r.suite = "theorem1";
  r.n = n;

  const SpinorSubspace L1 = pure_subspace(I1);
  const SpinorSubspace L2 = pure_subspace(I2);

  const std::size_t want1 = std::size_t(1) << (n - int(I1.dim()));
  const std::size_t want2 = std::size_t(1) << (n - int(I2.dim()));
  r.add("item1_dimension_law", L1.dim() == want1 && L2.dim() == want2,
        dim_witness(L1.dim(), want1) + "; " + dim_witness(L2.dim(), want2));

  r.add("item2_equality_iff",
        (L1.space() == L2.space()) == (I1.space() == I2.space()));

  const Subspace Iinter = subspace_intersection(I1.space(), I2.space());
  const SpinorSubspace Linter = pure_subspace(IsotropicSubspace(n, Iinter));
  const Subspace Lsum = subspace_sum(L1.space(), L2.space());
  r.add("item3_sum_within_meet_dual", subspace_contains(Linter.space(), Lsum));

  const Subspace Isum = subspace_sum(I1.space(), I2.space());
  const bool sum_isotropic =
      Isum.rank() <= std::size_t(n) && subspace_isotropic(n, Isum);
  const Subspace Lmeet = subspace_intersection(L1.space(), L2.space());
  if (sum_isotropic) {
    const SpinorSubspace Lofsum = pure_subspace(IsotropicSubspace(n, Isum));
    r.add("item4_sum_dual_is_meet", Lofsum.space() == Lmeet);
  } else {
    r.add_skip("item4_sum_dual_is_meet", "sum not isotropic");
  }

  r.add("item5_round_trip",
        common_annihilator(L1) == I1.space() &&
            common_annihilator(L2) == I2.space());

  const bool i21 = subspace_contains(I1.space(), I2.space());
  const bool l12 = subspace_contains(L2.space(), L1.space());
  const bool i12 = subspace_contains(I2.space(), I1.space());
  const bool l21 = subspace_contains(L1.space(), L2.space());
  r.add("item6_containment_reversal", i21 == l12 && i12 == l21,
        std::string("I2<=I1:") + (i21 ? "y" : "n") + " L1<=L2:" +
            (l12 ? "y" : "n") + " I1<=I2:" + (i12 ? "y" : "n") +
            " L2<=L1:" + (l21 ? "y" : "n"));

  auto inner_vanishes = [](const SpinorSubspace& L) {
    for (std::size_t i = 0; i < L.dim(); ++i)
      for (std::size_t j = i; j < L.dim(); ++j)
        if (!spinor_inner(L.basis_spinor(i), L.basis_spinor(j)).is_zero())
          return false;
    return true;
  };
  if (I1.dim() == 0 && I2.dim() == 0) {
    r.add_skip("item7_inner_vanishes", "both subspaces are {0}");
  } else {
    bool ok = true;
    if (I1.dim() > 0) ok = ok && inner_vanishes(L1);
    if (I2.dim() > 0) ok = ok && inner_vanishes(L2);
    r.add("item7_inner_vanishes", ok);
  }

  r.add("item8_meet_nontrivial_iff_sum_isotropic",
        (Lmeet.rank() > 0) == sum_isotropic,
        "meet dim " + std::to_string(Lmeet.rank()) +
            (sum_isotropic ? ", sum isotropic" : ", sum not isotropic"));

  auto halves_ok = [](const SpinorSubspace& L) {
    auto [pe, po] = chirality_projections(L);
    return pe.rank() == L.dim() / 2 && po.rank() == L.dim() / 2;
  };
  if (I1.dim() == std::size_t(n) && I2.dim() == std::size_t(n)) {
    r.add_skip("item9_chirality_halves", "both subspaces maximal");
  } else {
    bool ok = true;
    if (I1.dim() < std::size_t(n)) ok = ok && halves_ok(L1);
    if (I2.dim() < std::size_t(n)) ok = ok && halves_ok(L2);
    r.add("item9_chirality_halves", ok);
  }

  return r;
}

bool corollary_parity_check(const IsotropicSubspace& I1,
                            const IsotropicSubspace& I2) {
  const int n = I1.n();
  const Subspace Lmeet = subspace_intersection(pure_subspace(I1).space(),
                                               pure_subspace(I2).space());
  if (Lmeet.rank() % 2 == 0) return true;
  const Subspace Isum = subspace_sum(I1.space(), I2.space());
  return Lmeet.rank() == 1 && Isum.rank() == std::size_t(n) &&
         subspace_isotropic(n, Isum);
}

Matrix random_metric_rotation(int n, Rng& rng) {
  const std::size_t d = 2 * n;
  Matrix rot = Matrix::identity(d);
  const int moves = rng.range(4, 8);
  for (int m = 0; m < moves; ++m) {
    Matrix g = Matrix::identity(d);
    const int kind = n == 1 ? rng.below(2) + 2 : rng.below(4);
    switch (kind) {
      case 0: {  // x += B y, B antisymmetric
        const int p = rng.below(n), q = (p + 1 + rng.below(n - 1)) % n;
        const Scalar c(rng.small_nonzero_rational());
        g.at(p, n + q) = c;
        g.at(q, n + p) = -c;
        break;
      }
      case 1: {  // y += C x, C antisymmetric
        const int p = rng.below(n), q = (p + 1 + rng.below(n - 1)) % n;
        const Scalar c(rng.small_nonzero_rational());
        g.at(n + p, q) = c;
        g.at(n + q, p) = -c;
        break;
      }
      case 2: {  // GL shear on the base, inverse-transpose on the dual
        if (n == 1) {  // fall through to a scale when there is no pair
          const Scalar c(rng.small_nonzero_rational());
          g.at(0, 0) = c;
          g.at(n, n) = c.inverse();
          break;
        }
        const int p = rng.below(n), q = (p + 1 + rng.below(n - 1)) % n;
        const Scalar c(rng.small_nonzero_rational());
        g.at(p, q) = c;
        g.at(n + q, n + p) = -c;
        break;
      }
      default: {  // GL scale
        const int p = rng.below(n);
        const Scalar c(rng.small_nonzero_rational());
        g.at(p, p) = c;
        g.at(n + p, n + p) = c.inverse();
        break;
      }
    }
    rot = rot * g;
  }
  return rot;
}

IsotropicSubspace transform_span(int n, const Matrix& rot, int first,
                                 int count) {
  std::vector<std::vector<Scalar>> rows;
  for (int j = 0; j < count; ++j) {
    const std::size_t col = std::size_t(first - 1 + j);
    std::vector<Scalar> v(2 * n);
    for (std::size_t r = 0; r < std::size_t(2 * n); ++r)
      v[r] = rot.at(r, col);
    rows.push_back(std::move(v));
  }
  return IsotropicSubspace(n, Subspace::from_vectors(2 * n, rows));
}

IsotropicSubspace random_isotropic(int n, int k, std::uint64_t seed) {
  if (k < 0 || k > n)
    throw std::invalid_argument("random_isotropic: k out of range [0,n]");
  if (k == 0) return IsotropicSubspace::zero(n);
  Rng rng(mix_seed(seed, (std::uint64_t(n) << 8) | std::uint64_t(k)));
  const Matrix rot = random_metric_rotation(n, rng);
  return transform_span(n, rot, 1, k);
}

bool wedge_closure_check(int n, std::uint64_t seed, int trials) {
  for (int t = 0; t < trials; ++t) {
    Rng rng(mix_seed(seed, std::uint64_t(t)));
    const int k = rng.range(1, n);
    const IsotropicSubspace I = random_isotropic(n, k, rng.next());
    const SpinorSubspace L = pure_subspace(I);

    auto random_member = [&](const SpinorSubspace& S) {
      Spinor s(n);
      for (std::size_t i = 0; i < S.dim(); ++i)
        s += rng.small_scalar() * S.basis_spinor(i);
      return s;
    };
    const Spinor phi1 = random_member(L);
    const Spinor phi2 = random_member(L);

    PhaseVector v(n);
    for (std::size_t i = 0; i < I.dim(); ++i)
      v += rng.small_scalar() * I.basis_vector(i);
    // double the dual part of v = e + t
    PhaseVector w = v;
    for (int i = 0; i < n; ++i) w.theta[i] = w.theta[i] * Scalar(2);
    if (!clifford_action(w, wedge(phi1, phi2)).is_zero()) return false;

    // base-direction spans: wedges of annihilated spinors stay annihilated
    const int j = rng.range(1, n);
    std::vector<PhaseVector> gens;
    for (int i = 1; i <= j; ++i) gens.push_back(frame_vector(n, i));
    const SpinorSubspace Lb = pure_subspace(IsotropicSubspace::from_vectors(n, gens));
    const Spinor p1 = random_member(Lb);
    const Spinor p2 = random_member(Lb);
    if (!contains_vector(Lb.space(), wedge(p1, p2).coords())) return false;
  }
  return true;
}

}  // namespace purespin
