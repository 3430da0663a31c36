#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "purespin/report.hpp"

namespace purespin::suites {

// Golden values at base dimension 2: actions on the four blades, the four
// nonzero pairings, chirality assignments.
Report pairing_example();

// Golden annihilated subspaces at base dimension 3 for the nested chain
// span{e1} in span{e1,t2} in span{e1,t2,t3}.
Report subspace_example();

// Randomized sweep of the nine duality laws over isotropic pairs covering
// every dimension combination (k1,k2) in {0..n}^2 and three correlation
// kinds: independent, shared-rotation windows, nested.
Report theorem1(int n, std::uint64_t seed, int trials);

// dim pure_subspace(I) == 2^(n-k) over all n in 1..5, k in 0..n.
Report dimension_law(std::uint64_t seed);

// Algebra laws: anticommutator vs metric, operator consistency, pairing
// adjointness, wedge identity, volume element, chirality split, pairing
// symmetry sign.
Report clifford_laws(int n, std::uint64_t seed, int trials);

// Connection identities: frame compatibility, Leibniz rules, scaling
// covariance, curvature commutator, twistor trace and recombination.
Report connection_suite(int n, std::uint64_t seed, int trials);

// Closed-form twistor components of the constant unit spinor against the
// defining expression, for all frame directions.
Report twistor_oracle(int n, std::uint64_t seed, int trials);

// Gauge-potential existence table at dimensions 4, 6, 8: constructed
// satisfiable profiles, rejected violations with no-rescue sweeps, and the
// dimension-6 separation between twistor gauges and integrability.
Report gauge_profiles(std::uint64_t seed);

// Bracket closure of span{e_1..e_k} vs the spinor-level symmetry condition,
// with constructed-positive generators and the membership corollary.
Report integrability(int n, std::uint64_t seed, int trials);

// Totally geodesic condition vs the annihilated-derivative condition, plus
// the sampling probe against the slot-level pattern.
Report geodesic(int n, std::uint64_t seed, int trials);

// Chirality vs purity: random chiral spinors are pure through base dimension
// 3, annihilated lines are chiral, and 1 + top blade stops being pure from
// base dimension 3 on.
Report weyl_pure(int n, std::uint64_t seed, int trials);

struct CriterionResult {
  int index = 0;
  std::string label;
  bool pass = false;
  double seconds = 0.0;
  double budget = 0.0;  // seconds; 0 means no time bound
  std::string detail;
};

// The ten acceptance criteria, each with its pinned time budget.
std::vector<CriterionResult> run_acceptance(std::uint64_t seed);

// One-line rendering: "[PASS] criterion 3: ... (12.31s / budget 300s)".
std::string criterion_line(const CriterionResult& r);

}  // namespace purespin::suites
