#include "purespin/json_io.hpp"

#include <array>
#include <fstream>
#include <map>
#include <stdexcept>

#include <json.hpp>

#include "purespin/text.hpp"

namespace purespin {
namespace {

using json = nlohmann::json;

json load_file(const std::string& path, const char* what) {
  std::ifstream in(path);
  if (!in)
    throw std::runtime_error(std::string(what) + ": cannot open " + path);
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw std::runtime_error(std::string(what) + ": " + path + ": " +
                             e.what());
  }
  if (!j.is_object())
    throw std::runtime_error(std::string(what) + ": top level must be an object");
  return j;
}

int read_n(const json& j, const char* what) {
  if (!j.contains("n") || !j["n"].is_number_integer())
    throw std::runtime_error(std::string(what) + ": missing integer \"n\"");
  const int n = j["n"].get<int>();
  if (n < 1 || n > kMaxN)
    throw std::runtime_error(std::string(what) + ": \"n\" out of range");
  return n;
}

int read_frame_index(const json& v, int n, const char* what) {
  if (!v.is_number_integer())
    throw std::runtime_error(std::string(what) + ": index must be an integer");
  const int a = v.get<int>();
  if (a < 1 || a > 2 * n)
    throw std::runtime_error(std::string(what) + ": index " +
                             std::to_string(a) + " out of range");
  return a;
}

Scalar read_scalar_pair(const json& re, const json& im, const char* what) {
  if (!re.is_string() || !im.is_string())
    throw std::runtime_error(std::string(what) +
                             ": components must be strings");
  Scalar sr, si;
  try {
    sr = parse_scalar(re.get<std::string>());
    si = parse_scalar(im.get<std::string>());
  } catch (const ParseError& e) {
    throw std::runtime_error(std::string(what) + ": " + e.what());
  }
  if (!sr.is_real() || !si.is_real())
    throw std::runtime_error(std::string(what) +
                             ": components must be rational");
  return Scalar(sr.re(), si.re());
}

}  // namespace

FrameConnection load_connection(const std::string& path) {
  const json j = load_file(path, "connection");
  const int n = read_n(j, "connection");
  FrameConnection c(n);

  if (j.contains("omega")) {
    if (!j["omega"].is_array())
      throw std::runtime_error("connection: \"omega\" must be an array");
    std::map<std::array<int, 3>, Scalar> seen;
    std::size_t k = 0;
    for (const auto& entry : j["omega"]) {
      const std::string where = "connection: omega[" + std::to_string(k++) + "]";
      if (!entry.is_array() || entry.size() != 5)
        throw std::runtime_error(where + ": expected [a, b, c, re, im]");
      const int a = read_frame_index(entry[0], n, where.c_str());
      const int b = read_frame_index(entry[1], n, where.c_str());
      const int d = read_frame_index(entry[2], n, where.c_str());
      const Scalar v = read_scalar_pair(entry[3], entry[4], where.c_str());
      if (b == d && !v.is_zero())
        throw std::runtime_error(where + ": repeated pair (b, c) must vanish");
      const auto same = seen.find({a, b, d});
      if (same != seen.end() && same->second != v)
        throw std::runtime_error(where + ": conflicting duplicate entry");
      const auto mirror = seen.find({a, d, b});
      if (mirror != seen.end() && mirror->second != -v)
        throw std::runtime_error(where + ": breaks antisymmetry in (b, c)");
      seen[{a, b, d}] = v;
      c.set_omega(a, b, d, v);
    }
  }

  if (j.contains("A")) {
    if (!j["A"].is_array() || j["A"].size() != std::size_t(2 * n))
      throw std::runtime_error("connection: \"A\" must hold 2n scalars");
    for (int a = 1; a <= 2 * n; ++a) {
      const auto& v = j["A"][std::size_t(a - 1)];
      if (!v.is_string())
        throw std::runtime_error("connection: A entries must be strings");
      try {
        c.set_A(a, parse_scalar(v.get<std::string>()));
      } catch (const ParseError& e) {
        throw std::runtime_error("connection: A[" + std::to_string(a - 1) +
                                 "]: " + e.what());
      }
    }
  }
  return c;
}

CurvatureData load_curvature(const std::string& path) {
  const json j = load_file(path, "curvature");
  const int n = read_n(j, "curvature");
  CurvatureData cd(n);

  if (j.contains("riemann")) {
    if (!j["riemann"].is_array())
      throw std::runtime_error("curvature: \"riemann\" must be an array");
    std::map<std::array<int, 4>, Scalar> seen;
    std::size_t k = 0;
    for (const auto& entry : j["riemann"]) {
      const std::string where =
          "curvature: riemann[" + std::to_string(k++) + "]";
      if (!entry.is_array() || entry.size() != 6)
        throw std::runtime_error(where + ": expected [a, b, c, d, re, im]");
      const int a = read_frame_index(entry[0], n, where.c_str());
      const int b = read_frame_index(entry[1], n, where.c_str());
      const int cc = read_frame_index(entry[2], n, where.c_str());
      const int d = read_frame_index(entry[3], n, where.c_str());
      const Scalar v = read_scalar_pair(entry[4], entry[5], where.c_str());
      if (a == b && !v.is_zero())
        throw std::runtime_error(where + ": repeated pair (a, b) must vanish");
      const auto same = seen.find({a, b, cc, d});
      if (same != seen.end() && same->second != v)
        throw std::runtime_error(where + ": conflicting duplicate entry");
      const auto mirror = seen.find({b, a, cc, d});
      if (mirror != seen.end() && mirror->second != -v)
        throw std::runtime_error(where + ": breaks antisymmetry in (a, b)");
      seen[{a, b, cc, d}] = v;
      cd.set_riemann(a, b, cc, d, v);
    }
  }

  if (j.contains("F")) {
    if (!j["F"].is_array())
      throw std::runtime_error("curvature: \"F\" must be an array");
    std::map<std::array<int, 2>, Scalar> seen;
    std::size_t k = 0;
    for (const auto& entry : j["F"]) {
      const std::string where = "curvature: F[" + std::to_string(k++) + "]";
      if (!entry.is_array() || entry.size() != 4)
        throw std::runtime_error(where + ": expected [a, b, re, im]");
      const int a = read_frame_index(entry[0], n, where.c_str());
      const int b = read_frame_index(entry[1], n, where.c_str());
      const Scalar v = read_scalar_pair(entry[2], entry[3], where.c_str());
      if (a == b && !v.is_zero())
        throw std::runtime_error(where + ": repeated pair (a, b) must vanish");
      const auto same = seen.find({a, b});
      if (same != seen.end() && same->second != v)
        throw std::runtime_error(where + ": conflicting duplicate entry");
      const auto mirror = seen.find({b, a});
      if (mirror != seen.end() && mirror->second != -v)
        throw std::runtime_error(where + ": breaks antisymmetry in (a, b)");
      seen[{a, b}] = v;
      cd.set_F(a, b, v);
    }
  }
  return cd;
}

SpinorJet load_jet(const std::string& path) {
  const json j = load_file(path, "jet");
  const int n = read_n(j, "jet");
  if (!j.contains("value") || !j["value"].is_string())
    throw std::runtime_error("jet: missing string \"value\"");
  Spinor value(n);
  try {
    value = parse_spinor(n, j["value"].get<std::string>());
  } catch (const ParseError& e) {
    throw std::runtime_error(std::string("jet: value: ") + e.what());
  }
  std::vector<Spinor> derivs(std::size_t(2 * n), Spinor(n));
  if (j.contains("derivs")) {
    if (!j["derivs"].is_array() || j["derivs"].size() != std::size_t(2 * n))
      throw std::runtime_error("jet: \"derivs\" must hold 2n spinors");
    for (int a = 0; a < 2 * n; ++a) {
      const auto& v = j["derivs"][std::size_t(a)];
      if (!v.is_string())
        throw std::runtime_error("jet: deriv entries must be strings");
      try {
        derivs[std::size_t(a)] = parse_spinor(n, v.get<std::string>());
      } catch (const ParseError& e) {
        throw std::runtime_error("jet: derivs[" + std::to_string(a) +
                                 "]: " + e.what());
      }
    }
  }
  return SpinorJet(std::move(value), std::move(derivs));
}

std::string report_to_json(const Report& r) {
  nlohmann::ordered_json j;
  j["suite"] = r.suite;
  j["n"] = r.n;
  j["seed"] = r.seed;
  auto checks = nlohmann::ordered_json::array();
  for (const auto& c : r.checks) {
    nlohmann::ordered_json e;
    e["name"] = c.name;
    e["status"] = status_name(c.status);
    if (!c.witness.empty()) e["witness"] = c.witness;
    checks.push_back(std::move(e));
  }
  j["checks"] = std::move(checks);
  return j.dump(2);
}

std::string report_to_text(const Report& r) {
  std::string out = "suite " + r.suite + " n=" + std::to_string(r.n) +
                    " seed=" + std::to_string(r.seed) + "\n";
  std::size_t skipped = 0;
  for (const auto& c : r.checks) {
    switch (c.status) {
      case Status::pass:
        out += "PASS " + c.name + "\n";
        break;
      case Status::fail:
        out += "FAIL " + c.name;
        if (!c.witness.empty()) out += " :: " + c.witness;
        out += "\n";
        break;
      case Status::skip:
        ++skipped;
        out += "SKIP " + c.name;
        if (!c.witness.empty()) out += " :: " + c.witness;
        out += "\n";
        break;
    }
  }
  out += "checks=" + std::to_string(r.checks.size()) +
         " failed=" + std::to_string(r.failures()) +
         " skipped=" + std::to_string(skipped) + "\n";
  return out;
}

}  // namespace purespin
