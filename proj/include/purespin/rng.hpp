#pragma once

#include <cstdint>
#include <random>

#include "purespin/phase_vector.hpp"
#include "purespin/scalar.hpp"
#include "purespin/spinor.hpp"

namespace purespin {

// Reproducibility contract: every randomized routine in this library draws
// from std::mt19937_64 (bit-exact across platforms by the C++ standard),
// seeded through splitmix64 mixing, with bounded integers obtained by plain
// modulo reduction. std::uniform_int_distribution and friends are avoided on
// purpose: their outputs are implementation-defined.
std::uint64_t splitmix64(std::uint64_t x);

// Seed for an independent stream (per trial, per object) derived from a base
// seed and a stream index.
std::uint64_t mix_seed(std::uint64_t base, std::uint64_t stream);

class Rng {
public:
  explicit Rng(std::uint64_t seed) : gen_(splitmix64(seed)) {}

  std::uint64_t next() { return gen_(); }

  // Uniform-ish integer in [0, k): modulo reduction, documented above.
  int below(int k) { return int(next() % std::uint64_t(k)); }
  // Inclusive range.
  int range(int lo, int hi) { return lo + below(hi - lo + 1); }
  bool chance(int num, int den) { return below(den) < num; }

  // Small exact values keep coefficient growth in elimination manageable.
  Rational small_rational() {
    const int num = range(-3, 3);
    const int den = range(1, 2);
    return Rational(num) / den;
  }
  Rational small_nonzero_rational() {
    Rational r = small_rational();
    while (r == 0) r = small_rational();
    return r;
  }
  Scalar small_scalar() {
    if (chance(3, 10)) return Scalar(small_rational(), small_rational());
    return Scalar(small_rational());
  }
  Scalar small_nonzero_scalar() {
    Scalar s = small_scalar();
    while (s.is_zero()) s = small_scalar();
    return s;
  }

private:
  std::mt19937_64 gen_;
};

// Sparse spinor with a few small-coefficient blades; never the zero spinor
// unless allow_zero.
Spinor random_spinor(int n, Rng& rng, bool allow_zero = false);

// Nonzero chirality-homogeneous spinor; even = true picks even grades.
Spinor random_weyl_spinor(int n, Rng& rng, bool even);

PhaseVector random_phase_vector(int n, Rng& rng, bool allow_zero = false);

}  // namespace purespin
