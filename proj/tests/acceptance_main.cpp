#include <cstdint>
#include <cstdio>
#include <cstdlib>

#include "purespin/suites.hpp"

int main(int argc, char** argv) {
  std::uint64_t seed = 20260818u;
  if (argc > 1) seed = std::strtoull(argv[1], nullptr, 10);

  const auto results = purespin::suites::run_acceptance(seed);
  bool ok = true;
  for (const auto& r : results) {
    std::puts(purespin::suites::criterion_line(r).c_str());
    ok = ok && r.pass;
  }
  std::printf("ACCEPTANCE: %s (%zu criteria, seed %llu)\n",
              ok ? "all criteria passed" : "FAILURES PRESENT", results.size(),
              static_cast<unsigned long long>(seed));
  return ok ? 0 : 1;
}
