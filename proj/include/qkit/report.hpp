#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

namespace qkit {

/// ok: the law held on every case. violated: a case failed (witness set).
/// witnessed / not-found: outcome of a search for a counterexample that the
/// theory allows but does not guarantee.
enum class Status { Ok, Violated, Witnessed, NotFound };

std::string_view to_string(Status s);

struct CheckResult {
  std::string check;
  std::string instance;
  Status status = Status::Ok;
  std::size_t cases = 0;
  nlohmann::json witness;

  nlohmann::json to_json() const;
};

/// Accumulates one law over many cases, keeping the first failing witness.
class Tally {
 public:
  Tally(std::string check, std::string instance)
      : result_{std::move(check), std::move(instance), Status::Ok, 0, nullptr} {}

  /// Returns `holds` so callers can short-circuit.
  bool expect(bool holds, const std::function<nlohmann::json()>& witness) {
    ++result_.cases;
    if (!holds && result_.status == Status::Ok) {
      result_.status = Status::Violated;
      result_.witness = witness();
    }
    return holds;
  }
  bool expect(bool holds) {
    return expect(holds, [] { return nlohmann::json(); });
  }

  bool ok() const { return result_.status == Status::Ok; }
  CheckResult result() const { return result_; }

 private:
  CheckResult result_;
};

class Report {
 public:
  void add(CheckResult r) { results_.push_back(std::move(r)); }
  void add(const Tally& t) { results_.push_back(t.result()); }
  void merge(const Report& other);

  const std::vector<CheckResult>& results() const { return results_; }
  /// No check has status violated.
  bool ok() const;
  std::size_t total_cases() const;
  const CheckResult* find(std::string_view check) const;

  /// One JSON object per line.
  std::string to_json_lines() const;

 private:
  std::vector<CheckResult> results_;
};

}  // namespace qkit
