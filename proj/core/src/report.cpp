#include "skewhecke/report.hpp"

namespace skh {

void Report::add(std::string name, bool passed, std::string detail) {
  checks_.push_back({std::move(name), passed ? CheckResult::Status::pass : CheckResult::Status::fail, std::move(detail)});
}

void Report::skip(std::string name, std::string reason) {
  checks_.push_back({std::move(name), CheckResult::Status::skip, std::move(reason)});
}

void Report::merge(const Report& other, const std::string& prefix) {
  for (auto c : other.checks_) {
    c.name = prefix + c.name;
    checks_.push_back(std::move(c));
  }
  for (const auto& n : other.notes_) notes_.push_back(n);
}

bool Report::passed() const {
  for (const auto& c : checks_) {
    if (!c.passed()) return false;
  }
  return true;
}

std::optional<CheckResult> Report::first_failure() const {
  for (const auto& c : checks_) {
    if (!c.passed()) return c;
  }
  return std::nullopt;
}

std::string Report::to_text() const {
  std::string out;
  if (!title_.empty()) out += "# " + title_ + "\n";
  for (const auto& c : checks_) {
    switch (c.status) {
      case CheckResult::Status::pass:
        out += "PASS " + c.name;
        if (!c.detail.empty()) out += " (" + c.detail + ")";
        break;
      case CheckResult::Status::fail:
        out += "FAIL " + c.name + ": " + c.detail;
        break;
      case CheckResult::Status::skip:
        out += "SKIP " + c.name + ": " + c.detail;
        break;
    }
    out += "\n";
  }
  for (const auto& n : notes_) out += "NOTE " + n + "\n";
  return out;
}

}  // namespace skh
