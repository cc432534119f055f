#pragma once

#include <nlohmann/json.hpp>

#include <chrono>
#include <string>

namespace qgroth {

enum class Status { Pass, Fail, Skipped };

std::string status_name(Status s);

/// Outcome of one identity check at one rank.
struct VerificationReport {
  std::string id;
  int n = 0;
  Status status = Status::Skipped;
  nlohmann::json counterexample;  // null unless status == Fail
  nlohmann::json detail;          // free-form notes; may be null
  double ms = 0.0;

  bool passed() const { return status == Status::Pass; }
  /// {"id","n","status","counterexample","ms","detail"}.
  nlohmann::json to_json() const;
};

/// Builds a report: pass when `counterexample` is null, fail otherwise.
VerificationReport make_report(std::string id, int n, nlohmann::json counterexample,
                               nlohmann::json detail = nullptr);

class Stopwatch {
 public:
  Stopwatch() : start_(std::chrono::steady_clock::now()) {}
  double ms() const {
    return std::chrono::duration<double, std::milli>(
               std::chrono::steady_clock::now() - start_)
        .count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

}  // namespace qgroth
