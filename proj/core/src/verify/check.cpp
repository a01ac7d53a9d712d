#include "crprime/verify/check.hpp"

#include <cstdio>
#include <exception>

namespace crprime {

const char* to_string(Status s) {
  switch (s) {
    case Status::Pass: return "pass";
    case Status::Fail: return "fail";
    case Status::Recorded: return "recorded";
  }
  return "fail";
}

const char* to_string(Provenance p) {
  switch (p) {
    case Provenance::Paper: return "paper";
    case Provenance::Trivial: return "trivial";
    case Provenance::Derived: return "derived";
  }
  return "derived";
}

CheckResult timed_check(const std::string& id, Provenance provenance, const std::string& anchor,
                        const std::function<void(CheckResult&)>& body) {
  CheckResult c;
  c.id = id;
  c.provenance = provenance;
  c.anchor = anchor;
  auto t0 = std::chrono::steady_clock::now();
  try {
    body(c);
  } catch (const std::exception& e) {
    c.status = Status::Fail;
    c.residual = "error";
    c.detail = e.what();
  }
  c.runtime_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return c;
}

std::string format_double(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6e", x);
  return buf;
}

}  // namespace crprime
