#include "qkit/report.hpp"

#include <algorithm>

namespace qkit {

std::string_view to_string(Status s) {
  switch (s) {
    case Status::Ok: return "ok";
    case Status::Violated: return "violated";
    case Status::Witnessed: return "witnessed";
    case Status::NotFound: return "not-found";
  }
  return "unknown";
}

nlohmann::json CheckResult::to_json() const {
  nlohmann::json j{{"check", check}, {"instance", instance}, {"status", std::string(to_string(status))},
                   {"cases", cases}};
  if (!witness.is_null()) j["witness"] = witness;
  return j;
}

void Report::merge(const Report& other) {
  results_.insert(results_.end(), other.results_.begin(), other.results_.end());
}

bool Report::ok() const {
  return std::none_of(results_.begin(), results_.end(),
                      [](const CheckResult& r) { return r.status == Status::Violated; });
}

std::size_t Report::total_cases() const {
  std::size_t n = 0;
  for (const auto& r : results_) n += r.cases;
  return n;
}

const CheckResult* Report::find(std::string_view check) const {
  for (const auto& r : results_) {
    if (r.check == check) return &r;
  }
  return nullptr;
}

std::string Report::to_json_lines() const {
  std::string out;
  for (const auto& r : results_) {
    out += r.to_json().dump();
    out += '\n';
  }
  return out;
}

}  // namespace qkit
