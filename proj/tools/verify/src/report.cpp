#include "crprime_tools/report.hpp"

#include <json.hpp>

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace crprime::tools {

using nlohmann::ordered_json;

namespace {

Status status_from(const std::string& s) {
  if (s == "pass") return Status::Pass;
  if (s == "fail") return Status::Fail;
  if (s == "recorded") return Status::Recorded;
  throw std::invalid_argument("report: unknown status '" + s + "'");
}

Provenance provenance_from(const std::string& s) {
  if (s == "paper") return Provenance::Paper;
  if (s == "trivial") return Provenance::Trivial;
  if (s == "derived") return Provenance::Derived;
  throw std::invalid_argument("report: unknown provenance '" + s + "'");
}

}  // namespace

int Report::count(Status s) const {
  return static_cast<int>(std::count_if(checks.begin(), checks.end(), [s](const CheckResult& c) { return c.status == s; }));
}

void sort_checks(CheckList& checks) {
  std::stable_sort(checks.begin(), checks.end(), [](const CheckResult& a, const CheckResult& b) { return a.id < b.id; });
  for (std::size_t k = 1; k < checks.size(); ++k)
    if (checks[k].id == checks[k - 1].id) throw std::logic_error("duplicate check id " + checks[k].id);
}

std::string to_json(const Report& r) {
  ordered_json j;
  j["schema"] = kReportSchema;
  j["schema_version"] = kReportSchemaVersion;
  j["suite"] = r.suite;
  ordered_json cfg;
  cfg["order"] = r.config.order;
  cfg["tol"] = r.config.tol;
  cfg["grid"] = r.config.grid;
  cfg["seed"] = r.config.seed;
  cfg["golden"] = r.config.golden;
  cfg["green_power"] = r.config.green_power;
  cfg["perturb_weight4"] = r.config.perturb_weight4;
  cfg["timings"] = r.config.timings;
  j["config"] = cfg;
  j["summary"] = {{"pass", r.count(Status::Pass)},
                  {"fail", r.count(Status::Fail)},
                  {"recorded", r.count(Status::Recorded)}};
  j["checks"] = ordered_json::array();
  for (const auto& c : r.checks) {
    ordered_json e;
    e["id"] = c.id;
    e["status"] = to_string(c.status);
    e["residual"] = c.residual;
    e["provenance"] = to_string(c.provenance);
    e["anchor"] = c.anchor;
    e["detail"] = c.detail;
    if (r.config.timings) e["runtime_s"] = c.runtime_s;
    j["checks"].push_back(e);
  }
  return j.dump(2) + "\n";
}

Report report_from_json(const std::string& text) {
  Report r;
  try {
    auto j = ordered_json::parse(text);
    if (j.at("schema").get<std::string>() != kReportSchema) throw std::invalid_argument("report: wrong schema");
    if (j.at("schema_version").get<int>() != kReportSchemaVersion)
      throw std::invalid_argument("report: unsupported schema version");
    r.suite = j.at("suite").get<std::string>();
    const auto& cfg = j.at("config");
    r.config.order = cfg.at("order").get<int>();
    r.config.tol = cfg.at("tol").get<double>();
    r.config.grid = cfg.at("grid").get<int>();
    r.config.seed = cfg.at("seed").get<std::uint64_t>();
    r.config.golden = cfg.at("golden").get<std::string>();
    r.config.green_power = cfg.at("green_power").get<int>();
    r.config.perturb_weight4 = cfg.at("perturb_weight4").get<bool>();
    r.config.timings = cfg.at("timings").get<bool>();
    for (const auto& e : j.at("checks")) {
      CheckResult c;
      c.id = e.at("id").get<std::string>();
      c.status = status_from(e.at("status").get<std::string>());
      c.residual = e.at("residual").get<std::string>();
      c.provenance = provenance_from(e.at("provenance").get<std::string>());
      c.anchor = e.at("anchor").get<std::string>();
      c.detail = e.at("detail").get<std::string>();
      if (e.contains("runtime_s")) c.runtime_s = e.at("runtime_s").get<double>();
      r.checks.push_back(c);
    }
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("report: ") + e.what());
  }
  return r;
}

std::string to_text(const Report& r) {
  std::ostringstream out;
  constexpr std::size_t kMaxResidual = 120;
  for (const auto& c : r.checks) {
    std::string status = to_string(c.status);
    for (auto& ch : status) ch = static_cast<char>(std::toupper(static_cast<unsigned char>(ch)));
    std::string residual = c.residual;
    if (residual.size() > kMaxResidual) residual = residual.substr(0, kMaxResidual) + "...";
    out << status << std::string(10 - status.size(), ' ') << c.id << "  [" << to_string(c.provenance) << "] "
        << c.anchor << "\n          residual: " << residual;
    if (!c.detail.empty()) {
      std::string detail = c.detail.size() > 200 ? c.detail.substr(0, 200) + "..." : c.detail;
      out << "\n          " << detail;
    }
    if (r.config.timings) out << "\n          runtime: " << format_double(c.runtime_s) << " s";
    out << "\n";
  }
  out << "suite " << r.suite << ": " << r.count(Status::Pass) << " pass, " << r.count(Status::Fail) << " fail, "
      << r.count(Status::Recorded) << " recorded\n";
  return out.str();
}

}  // namespace crprime::tools
