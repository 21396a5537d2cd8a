#include "matgeg/report.hpp"

#include <iomanip>
#include <sstream>

namespace matgeg {

const char* status_name(Status s) {
  switch (s) {
    case Status::pass:
      return "pass";
    case Status::fail:
      return "fail";
    case Status::skipped:
      return "skipped";
  }
  return "?";
}

CheckRecord residual_check(std::string name, const DiffOp& residual) {
  CheckRecord r;
  r.name = std::move(name);
  if (residual.is_zero()) {
    r.status = Status::pass;
  } else {
    r.status = Status::fail;
    r.witness = to_json(residual);
    r.detail = "nonzero residual of order " + std::to_string(residual.order());
  }
  return r;
}

CheckRecord bool_check(std::string name, bool ok, json witness_on_fail, std::string detail) {
  CheckRecord r;
  r.name = std::move(name);
  r.status = ok ? Status::pass : Status::fail;
  if (!ok) r.witness = std::move(witness_on_fail);
  r.detail = std::move(detail);
  return r;
}

CheckRecord timed(const std::function<CheckRecord()>& fn, std::string name_on_error) {
  Stopwatch sw;
  CheckRecord r;
  try {
    r = fn();
  } catch (const std::exception& e) {
    r.name = std::move(name_on_error);
    r.status = Status::fail;
    r.witness = json{{"exception", e.what()}};
    r.detail = e.what();
  }
  r.elapsed = sw.seconds();
  return r;
}

bool Report::all_passed() const { return failures() == 0; }

std::size_t Report::failures() const {
  std::size_t n = 0;
  for (const auto& c : checks) n += !c.diagnostic && c.status == Status::fail;
  return n;
}

json Report::to_json(bool with_timing) const {
  json checks_json = json::array();
  for (const auto& c : checks) {
    json j{{"name", c.name}, {"status", status_name(c.status)}};
    if (c.diagnostic) j["diagnostic"] = true;
    if (c.witness) j["witness"] = *c.witness;
    if (!c.detail.empty()) j["detail"] = c.detail;
    if (with_timing) j["elapsed"] = c.elapsed;
    checks_json.push_back(std::move(j));
  }
  json out{{"schema", kReportSchema},
           {"engine", kEngineVersion},
           {"command", command},
           {"passed", all_passed()},
           {"checks", std::move(checks_json)}};
  if (!extra.empty()) out["result"] = extra;
  if (with_timing) out["elapsed"] = elapsed;
  return out;
}

std::string Report::to_text() const {
  std::ostringstream os;
  for (const auto& c : checks) {
    os << (c.status == Status::pass ? "PASS " : c.status == Status::fail ? "FAIL " : "SKIP ");
    if (c.diagnostic) os << "[diagnostic] ";
    os << c.name;
    if (!c.detail.empty()) os << "  (" << c.detail << ')';
    os << "  [" << std::fixed << std::setprecision(3) << c.elapsed << "s]\n";
  }
  std::size_t counted = 0;
  for (const auto& c : checks) counted += !c.diagnostic;
  os << counted - failures() << '/' << counted << " checks passed\n";
  return os.str();
}

}  // namespace matgeg
