#pragma once

#include <string>

#include "crprime/verify/check.hpp"
#include "crprime_tools/config.hpp"

namespace crprime::tools {

inline constexpr const char* kReportSchema = "crprime.report";
inline constexpr int kReportSchemaVersion = 1;

struct Report {
  std::string suite;
  RunConfig config;
  CheckList checks;  // sorted by id

  int count(Status s) const;
  bool passed() const { return count(Status::Fail) == 0; }
};

/// Sorts by id and throws std::logic_error on duplicate ids.
void sort_checks(CheckList& checks);

std::string to_json(const Report& r);
/// Throws std::invalid_argument on malformed input or a schema mismatch.
Report report_from_json(const std::string& text);
std::string to_text(const Report& r);

}  // namespace crprime::tools
