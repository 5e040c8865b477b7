#pragma once

// Check reports: one line per check, PASS/FAIL/SKIP, with a witness on failure.

#include <optional>
#include <string>
#include <vector>

namespace skh {

struct CheckResult {
  enum class Status { pass, fail, skip };
  std::string name;
  Status status = Status::pass;
  std::string detail;
  bool passed() const { return status != Status::fail; }
};

class Report {
 public:
  explicit Report(std::string title = {}) : title_(std::move(title)) {}

  void add(std::string name, bool passed, std::string detail = {});
  void skip(std::string name, std::string reason);
  void note(std::string text) { notes_.push_back(std::move(text)); }
  /// Appends the checks of `other`, prefixing their names.
  void merge(const Report& other, const std::string& prefix = {});

  const std::string& title() const { return title_; }
  const std::vector<CheckResult>& checks() const { return checks_; }
  const std::vector<std::string>& notes() const { return notes_; }
  bool passed() const;
  std::optional<CheckResult> first_failure() const;
  /// Lines "PASS name", "FAIL name: witness", "SKIP name: reason", "NOTE text".
  std::string to_text() const;

 private:
  std::string title_;
  std::vector<CheckResult> checks_;
  std::vector<std::string> notes_;
};

}  // namespace skh
