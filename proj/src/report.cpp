#include "purespin/report.hpp"

namespace purespin {

const char* status_name(Status s) {
  switch (s) {
    case Status::pass:
      return "pass";
    case Status::fail:
      return "fail";
    case Status::skip:
      return "skip";
  }
  return "?";
}

void Report::add(const std::string& name, bool ok, const std::string& witness) {
  checks.push_back({name, ok ? Status::pass : Status::fail,
                    ok ? std::string() : witness});
}

void Report::add_skip(const std::string& name, const std::string& why) {
  checks.push_back({name, Status::skip, why});
}

void Report::append(const Report& other) {
  checks.insert(checks.end(), other.checks.begin(), other.checks.end());
}

bool Report::all_ok() const {
  for (const auto& c : checks)
    if (c.status == Status::fail) return false;
  return true;
}

std::size_t Report::failures() const {
  std::size_t k = 0;
  for (const auto& c : checks)
    if (c.status == Status::fail) ++k;
  return k;
}

}  // namespace purespin
