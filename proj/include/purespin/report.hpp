#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace purespin {

enum class Status { pass, fail, skip };

const char* status_name(Status s);

struct CheckResult {
  std::string name;
  Status status = Status::pass;
  std::string witness;  // empty unless there is something to show
};

// One suite run. Serialization (text and byte-stable JSON) lives in json_io.
struct Report {
  std::string suite;
  int n = 0;
  std::uint64_t seed = 0;
  std::vector<CheckResult> checks;

  void add(const std::string& name, bool ok, const std::string& witness = "");
  void add_skip(const std::string& name, const std::string& why = "");
  void append(const Report& other);  // splices other's checks onto this one

  bool all_ok() const;  // no check failed (skips are fine)
  std::size_t failures() const;
};

}  // namespace purespin
