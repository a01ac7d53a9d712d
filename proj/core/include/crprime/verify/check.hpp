#pragma once

#include <chrono>
#include <functional>
#include <string>
#include <vector>

namespace crprime {

enum class Status { Pass, Fail, Recorded };
/// Where the expected value comes from.
enum class Provenance { Paper, Trivial, Derived };

const char* to_string(Status s);
const char* to_string(Provenance p);

struct CheckResult {
  std::string id;
  Status status = Status::Fail;
  std::string residual;  // "0" for an exact zero, otherwise an expression or a float
  Provenance provenance = Provenance::Derived;
  std::string anchor;    // human-readable description of the source statement
  std::string detail;    // closed forms and notes
  double runtime_s = 0;
};

using CheckList = std::vector<CheckResult>;

/// Runs `body`, which fills in everything but id, provenance, anchor and the
/// runtime. Exceptions turn into a failed check carrying the message.
CheckResult timed_check(const std::string& id, Provenance provenance, const std::string& anchor,
                        const std::function<void(CheckResult&)>& body);

/// Sets status and residual for an exact zero test of `expr`.
template <class E>
void expect_zero(CheckResult& c, const E& expr) {
  bool zero = expr.is_zero();
  c.status = zero ? Status::Pass : Status::Fail;
  c.residual = zero ? "0" : expr.to_string();
}

/// Sets status and residual for a control that must come out nonzero.
template <class E>
void expect_nonzero(CheckResult& c, const E& expr) {
  bool zero = expr.is_zero();
  c.status = zero ? Status::Fail : Status::Pass;
  c.residual = expr.to_string();
}

std::string format_double(double x);

}  // namespace crprime
