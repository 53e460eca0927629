#pragma once

#include <string>
#include <vector>

namespace regrep {

// One machine-checked claim. `recorded` entries document an observation that
// is not required to hold (they never fail a run).
struct CheckResult {
  std::string lemma;
  std::string instance;
  bool passed = true;
  bool recorded = false;
  std::string detail;  // counterexample or measured values
};

class Ledger {
 public:
  void add(CheckResult result) { entries_.push_back(std::move(result)); }
  void add(std::string lemma, std::string instance, bool passed, std::string detail = {}) {
    entries_.push_back({std::move(lemma), std::move(instance), passed, false, std::move(detail)});
  }
  void record(std::string lemma, std::string instance, bool observed, std::string detail = {}) {
    entries_.push_back({std::move(lemma), std::move(instance), observed, true, std::move(detail)});
  }
  void append(const Ledger& other) { entries_.insert(entries_.end(), other.entries_.begin(), other.entries_.end()); }

  const std::vector<CheckResult>& entries() const { return entries_; }
  bool all_passed() const {
    for (const auto& e : entries_)
      if (!e.recorded && !e.passed) return false;
    return true;
  }
  bool all_passed(const std::string& lemma) const {
    bool any = false;
    for (const auto& e : entries_)
      if (e.lemma == lemma && !e.recorded) {
        any = true;
        if (!e.passed) return false;
      }
    return any;
  }

 private:
  std::vector<CheckResult> entries_;
};

}  // namespace regrep
