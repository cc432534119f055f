#include "qgroth/report.hpp"

namespace qgroth {

std::string status_name(Status s) {
  switch (s) {
    case Status::Pass: return "pass";
    case Status::Fail: return "fail";
    case Status::Skipped: return "skipped";
  }
  return "skipped";
}

nlohmann::json VerificationReport::to_json() const {
  return {{"id", id},
          {"n", n},
          {"status", status_name(status)},
          {"counterexample", counterexample},
          {"ms", ms},
          {"detail", detail}};
}

VerificationReport make_report(std::string id, int n, nlohmann::json counterexample,
                               nlohmann::json detail) {
  VerificationReport r;
  r.id = std::move(id);
  r.n = n;
  r.status = counterexample.is_null() ? Status::Pass : Status::Fail;
  r.counterexample = std::move(counterexample);
  r.detail = std::move(detail);
  return r;
}

}  // namespace qgroth
