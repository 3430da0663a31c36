#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "purespin/json_io.hpp"

using purespin::CurvatureData;
using purespin::FrameConnection;
using purespin::Rational;
using purespin::Report;
using purespin::Scalar;
using purespin::Spinor;
using purespin::SpinorJet;

namespace {

struct TempFile {
  std::string path;
  TempFile(const std::string& name, const std::string& body) : path(name) {
    std::ofstream out(path);
    out << body;
  }
  ~TempFile() { std::remove(path.c_str()); }
};

}  // namespace

TEST_CASE("connection files load with mirrors applied") {
  const TempFile f("io_conn_ok.json", R"json({
    "n": 2,
    "omega": [[1, 1, 2, "1/2", "0"], [3, 2, 1, "0", "-1"], [1, 2, 1, "-1/2", "0"]],
    "A": ["3", "0", "(0,1)", "-1/2"]
  })json");
  const FrameConnection c = purespin::load_connection(f.path);
  CHECK(c.n() == 2);
  CHECK(c.omega(1, 1, 2) == Scalar(Rational(1, 2)));
  CHECK(c.omega(1, 2, 1) == Scalar(Rational(-1, 2)));
  CHECK(c.omega(3, 2, 1) == Scalar(Rational(0), Rational(-1)));
  CHECK(c.omega(3, 1, 2) == Scalar(Rational(0), Rational(1)));
  CHECK(c.A(1) == Scalar(3));
  CHECK(c.A(2).is_zero());
  CHECK(c.A(3) == Scalar(Rational(0), Rational(1)));
  CHECK(c.A(4) == Scalar(Rational(-1, 2)));
}

TEST_CASE("connection files reject inconsistent data") {
  const TempFile dup("io_conn_dup.json",
                     R"json({"n": 2, "omega": [[1,1,2,"1","0"], [1,1,2,"2","0"]]})json");
  CHECK_THROWS_AS(purespin::load_connection(dup.path), std::runtime_error);

  const TempFile mirror(
      "io_conn_mirror.json",
      R"json({"n": 2, "omega": [[1,1,2,"1","0"], [1,2,1,"1","0"]]})json");
  CHECK_THROWS_AS(purespin::load_connection(mirror.path), std::runtime_error);

  const TempFile diag("io_conn_diag.json",
                      R"json({"n": 2, "omega": [[1,2,2,"1","0"]]})json");
  CHECK_THROWS_AS(purespin::load_connection(diag.path), std::runtime_error);

  const TempFile badn("io_conn_badn.json", R"json({"n": 0})json");
  CHECK_THROWS_AS(purespin::load_connection(badn.path), std::runtime_error);

  const TempFile shorta("io_conn_shorta.json", R"json({"n": 2, "A": ["1"]})json");
  CHECK_THROWS_AS(purespin::load_connection(shorta.path), std::runtime_error);

  const TempFile range("io_conn_range.json",
                       R"json({"n": 2, "omega": [[5,1,2,"1","0"]]})json");
  CHECK_THROWS_AS(purespin::load_connection(range.path), std::runtime_error);

  CHECK_THROWS_AS(purespin::load_connection("io_conn_missing.json"),
                  std::runtime_error);
}

TEST_CASE("curvature files load both blocks") {
  const TempFile f("io_curv_ok.json", R"json({
    "n": 2,
    "riemann": [[1, 2, 1, 2, "4", "0"]],
    "F": [[1, 2, "0", "5"]]
  })json");
  const CurvatureData cd = purespin::load_curvature(f.path);
  CHECK(cd.riemann(1, 2, 1, 2) == Scalar(4));
  CHECK(cd.riemann(2, 1, 1, 2) == Scalar(-4));
  CHECK(cd.F(1, 2) == Scalar(Rational(0), Rational(5)));
  CHECK(cd.F(2, 1) == Scalar(Rational(0), Rational(-5)));

  const TempFile diag("io_curv_diag.json",
                      R"json({"n": 2, "riemann": [[1,1,1,2,"1","0"]]})json");
  CHECK_THROWS_AS(purespin::load_curvature(diag.path), std::runtime_error);
}

TEST_CASE("jet files parse spinor expressions") {
  const TempFile f("io_jet_ok.json", R"json({
    "n": 2,
    "value": "1 + t{12}",
    "derivs": ["t1", "0", "2*t2", "(0,1)"]
  })json");
  const SpinorJet j = purespin::load_jet(f.path);
  CHECK(j.value == Spinor::unit(2) + Spinor::blade(2, 0b11));
  CHECK(j.derivs[0] == Spinor::blade(2, 0b01));
  CHECK(j.derivs[1].is_zero());
  CHECK(j.derivs[2] == Spinor::blade(2, 0b10, Scalar(2)));
  CHECK(j.derivs[3] ==
        Spinor::blade(2, 0, Scalar(Rational(0), Rational(1))));

  const TempFile shortd("io_jet_short.json",
                        R"json({"n": 2, "value": "1", "derivs": ["t1"]})json");
  CHECK_THROWS_AS(purespin::load_jet(shortd.path), std::runtime_error);

  const TempFile badval("io_jet_badval.json", R"json({"n": 2, "value": "t3"})json");
  CHECK_THROWS_AS(purespin::load_jet(badval.path), std::runtime_error);
}

TEST_CASE("report serialization schema and determinism") {
  Report r;
  r.suite = "demo";
  r.n = 3;
  r.seed = 42;
  r.add("alpha", true);
  r.add("beta", false, "saw 2, wanted 0");
  r.add_skip("gamma", "hypothesis unmet");

  const std::string j1 = purespin::report_to_json(r);
  const std::string j2 = purespin::report_to_json(r);
  CHECK(j1 == j2);

  const auto parsed = nlohmann::json::parse(j1);
  CHECK(parsed["suite"] == "demo");
  CHECK(parsed["n"] == 3);
  CHECK(parsed["seed"] == 42);
  REQUIRE(parsed["checks"].size() == 3);
  CHECK(parsed["checks"][0]["name"] == "alpha");
  CHECK(parsed["checks"][0]["status"] == "pass");
  CHECK(!parsed["checks"][0].contains("witness"));
  CHECK(parsed["checks"][1]["status"] == "fail");
  CHECK(parsed["checks"][1]["witness"] == "saw 2, wanted 0");
  CHECK(parsed["checks"][2]["status"] == "skip");
  CHECK(parsed["checks"][2]["witness"] == "hypothesis unmet");

  const std::string t = purespin::report_to_text(r);
  CHECK(t.find("suite demo n=3 seed=42") == 0);
  CHECK(t.find("PASS alpha") != std::string::npos);
  CHECK(t.find("FAIL beta :: saw 2, wanted 0") != std::string::npos);
  CHECK(t.find("SKIP gamma :: hypothesis unmet") != std::string::npos);
  CHECK(t.find("checks=3 failed=1 skipped=1") != std::string::npos);
}
