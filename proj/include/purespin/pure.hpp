#pragma once

#include <cstdint>
#include <vector>

#include "purespin/clifford.hpp"
#include "purespin/report.hpp"
#include "purespin/rng.hpp"
#include "purespin/subspace.hpp"

namespace purespin {

// Subspace of the 2n-dimensional phase space on which the pairing vanishes
// identically. Isotropy (and dim <= n, which it implies) is checked at
// construction; the basis is canonical RREF in frame coordinates e1..en,
// t1..tn.
class IsotropicSubspace {
public:
  IsotropicSubspace(int n, Subspace space);
  static IsotropicSubspace from_vectors(int n,
                                        const std::vector<PhaseVector>& gens);
  static IsotropicSubspace zero(int n);

  int n() const { return n_; }
  std::size_t dim() const { return space_.rank(); }
  const Subspace& space() const { return space_; }
  PhaseVector basis_vector(std::size_t i) const;

  friend bool operator==(const IsotropicSubspace& a,
                         const IsotropicSubspace& b) {
    return a.n_ == b.n_ && a.space_ == b.space_;
  }

private:
  int n_;
  Subspace space_;
};

// Subspace of the 2^n spinor space, canonical RREF in blade coordinates.
class SpinorSubspace {
public:
  SpinorSubspace(int n, Subspace space);
  static SpinorSubspace from_spinors(int n, const std::vector<Spinor>& gens);

  int n() const { return n_; }
  std::size_t dim() const { return space_.rank(); }
  const Subspace& space() const { return space_; }
  Spinor basis_spinor(std::size_t i) const;

  friend bool operator==(const SpinorSubspace& a, const SpinorSubspace& b) {
    return a.n_ == b.n_ && a.space_ == b.space_;
  }

private:
  int n_;
  Subspace space_;
};

// All phase vectors annihilating a (nonzero) spinor. Always isotropic.
IsotropicSubspace annihilator(const Spinor& a);

// All spinors annihilated by every vector of I; dimension 2^(n - dim I).
SpinorSubspace pure_subspace(const IsotropicSubspace& I);

// Vectors annihilating every spinor of S (ambient 2n; not isotropic for an
// arbitrary S, so returned as a plain Subspace).
Subspace common_annihilator(const SpinorSubspace& S);

// A spinor is pure when its annihilator has the maximal dimension n.
bool is_pure(const Spinor& a);

// The nine duality laws relating a pair of isotropic subspaces to their
// annihilated spinor subspaces. Items that have an unmet hypothesis (sum not
// isotropic, I = {0}, I maximal) are reported as skips.
Report theorem1_report(const IsotropicSubspace& I1, const IsotropicSubspace& I2);

// dim(L1 meet L2) odd forces dim = 1 with I1+I2 maximally isotropic.
bool corollary_parity_check(const IsotropicSubspace& I1,
                            const IsotropicSubspace& I2);

// Wedge products of annihilated spinors: (e + 2t).(phi1 ^ phi2) = 0 for
// e + t in I, and closure of the wedge inside the subspace annihilated by a
// set of pure base directions.
bool wedge_closure_check(int n, std::uint64_t seed = 0, int trials = 20);

// Necessary conditions for a subspace to arise as pure_subspace(I): power of
// two dimension, vanishing pairwise inner products, Weyl when a line, and a
// half/half chirality basis otherwise. Necessary only, not sufficient.
Report necessary_purity_filter(const SpinorSubspace& S);

// Metric-preserving 2n x 2n matrix: a random product of elementary isotropic
// rotations with small rational parameters (column-vector convention).
Matrix random_metric_rotation(int n, Rng& rng);

// Image of span{e_first .. e_{first+count-1}} under a metric rotation.
IsotropicSubspace transform_span(int n, const Matrix& rot, int first,
                                 int count);

// Seeded random isotropic subspace of dimension k: span{e1..ek} moved by a
// random metric rotation. Deterministic per (n, k, seed).
IsotropicSubspace random_isotropic(int n, int k, std::uint64_t seed);

}  // namespace purespin
