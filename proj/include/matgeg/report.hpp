#pragma once

#include <chrono>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "matgeg/json_io.hpp"

namespace matgeg {

inline constexpr const char* kEngineVersion = "0.3.0";
inline constexpr int kReportSchema = 1;

enum class Status { pass, fail, skipped };
const char* status_name(Status s);

struct CheckRecord {
  std::string name;
  Status status = Status::skipped;
  std::optional<json> witness;  // residual or counterexample; always set on fail
  std::string detail;
  double elapsed = 0.0;  // seconds
  // Extra evidence outside the criterion itself; never affects pass/fail.
  bool diagnostic = false;

  bool passed() const { return status == Status::pass; }
};

// Marks pass when the residual is zero, else fail with the residual as witness.
CheckRecord residual_check(std::string name, const DiffOp& residual);
CheckRecord bool_check(std::string name, bool ok, json witness_on_fail, std::string detail = {});

// Runs fn and stamps the elapsed time; exceptions become a failed record.
CheckRecord timed(const std::function<CheckRecord()>& fn, std::string name_on_error = "check");

struct Report {
  std::string command;
  std::vector<CheckRecord> checks;
  json extra = json::object();  // command-specific payload
  double elapsed = 0.0;

  void add(CheckRecord r) { checks.push_back(std::move(r)); }
  void add(const std::vector<CheckRecord>& rs) { checks.insert(checks.end(), rs.begin(), rs.end()); }
  bool all_passed() const;
  std::size_t failures() const;

  // Timing fields are left out when with_timing is false, which makes the
  // output byte-identical across runs.
  json to_json(bool with_timing = true) const;
  std::string to_text() const;
};

class Stopwatch {
 public:
  Stopwatch() : t0_(std::chrono::steady_clock::now()) {}
  double seconds() const { return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0_).count(); }

 private:
  std::chrono::steady_clock::time_point t0_;
};

}  // namespace matgeg
