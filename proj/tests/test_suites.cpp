#include <doctest.h>

#include <string>

#include "purespin/json_io.hpp"
#include "purespin/suites.hpp"

using purespin::Report;
namespace suites = purespin::suites;

namespace {

void require_all_ok(const Report& r) {
  for (const auto& c : r.checks) {
    CAPTURE(r.suite);
    CAPTURE(c.name);
    CAPTURE(c.witness);
    CHECK(c.status != purespin::Status::fail);
  }
}

}  // namespace

TEST_CASE("worked low-dimensional examples") {
  require_all_ok(suites::pairing_example());
  require_all_ok(suites::subspace_example());
}

TEST_CASE("structure theorem sweep smoke") {
  require_all_ok(suites::theorem1(2, 11, 20));
  require_all_ok(suites::dimension_law(3));
}

TEST_CASE("algebra law suite smoke") {
  require_all_ok(suites::clifford_laws(2, 5, 10));
  require_all_ok(suites::clifford_laws(1, 5, 6));
}

TEST_CASE("connection suite smoke") {
  require_all_ok(suites::connection_suite(2, 9, 5));
}

TEST_CASE("twistor oracle smoke") {
  require_all_ok(suites::twistor_oracle(2, 13, 5));
}

TEST_CASE("distribution suites smoke") {
  require_all_ok(suites::integrability(2, 21, 12));
  require_all_ok(suites::geodesic(2, 23, 12));
}

TEST_CASE("purity suite smoke") { require_all_ok(suites::weyl_pure(2, 31, 20)); }

TEST_CASE("suite reports are deterministic") {
  const std::string a = purespin::report_to_json(suites::theorem1(3, 7, 30));
  const std::string b = purespin::report_to_json(suites::theorem1(3, 7, 30));
  CHECK(a == b);
}
