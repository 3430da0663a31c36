#include "purespin/rng.hpp"

#include <bit>
#include <vector>

namespace purespin {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

std::uint64_t mix_seed(std::uint64_t base, std::uint64_t stream) {
  return splitmix64(splitmix64(base) ^ (stream * 0x9e3779b97f4a7c15ull + 1));
}

Spinor random_spinor(int n, Rng& rng, bool allow_zero) {
  const std::uint32_t dim = std::uint32_t(1) << n;
  Spinor s(n);
  const int terms = rng.range(1, int(dim) < 4 ? int(dim) : 4);
  for (int t = 0; t < terms; ++t)
    s.add_term(std::uint32_t(rng.below(int(dim))), rng.small_scalar());
  if (!allow_zero && s.is_zero())
    s.add_term(std::uint32_t(rng.below(int(dim))), rng.small_nonzero_scalar());
  return s;
}

Spinor random_weyl_spinor(int n, Rng& rng, bool even) {
  // collect masks of the wanted parity
  std::vector<std::uint32_t> masks;
  for (std::uint32_t m = 0; m < (std::uint32_t(1) << n); ++m)
    if ((std::popcount(m) & 1) == (even ? 0 : 1)) masks.push_back(m);
  Spinor s(n);
  const int terms = rng.range(1, int(masks.size()) < 3 ? int(masks.size()) : 3);
  for (int t = 0; t < terms; ++t)
    s.add_term(masks[rng.below(int(masks.size()))], rng.small_scalar());
  if (s.is_zero())
    s.add_term(masks[rng.below(int(masks.size()))],
               rng.small_nonzero_scalar());
  return s;
}

PhaseVector random_phase_vector(int n, Rng& rng, bool allow_zero) {
  PhaseVector v(n);
  for (int i = 0; i < n; ++i) {
    if (rng.chance(1, 2)) v.e[i] = rng.small_scalar();
    if (rng.chance(1, 2)) v.theta[i] = rng.small_scalar();
  }
  if (!allow_zero && v.is_zero()) {
    const int slot = rng.below(2 * n);
    if (slot < n)
      v.e[slot] = rng.small_nonzero_scalar();
    else
      v.theta[slot - n] = rng.small_nonzero_scalar();
  }
  return v;
}

}  // namespace purespin
