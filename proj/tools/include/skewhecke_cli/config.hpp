#pragma once

// Job configuration: a line-oriented key = value document with [context],
// [cocycle] and [run] sections. See README for the schema.

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "skewhecke/cocycle.hpp"

namespace skh::cli {

class ConfigError : public std::runtime_error {
 public:
  ConfigError(int line, const std::string& what)
      : std::runtime_error("config:" + std::to_string(line) + ": " + what), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

struct CocycleSpec {
  std::string kind = "trivial";  // trivial | inner | coboundary | values
  std::string unit;              // coboundary: element literal
  std::vector<std::pair<std::string, std::string>> values;  // values: group element -> literal
  friend bool operator==(const CocycleSpec&, const CocycleSpec&) = default;
};

struct JobConfig {
  std::string field = "Q";
  std::string group;
  std::string subgroup = "trivial";
  std::string algebra = "ground";
  std::string action = "trivial";
  std::optional<int> degree_cap;
  std::optional<CocycleSpec> cocycle;
  std::vector<std::string> commands;
  /// Source line of each key, for diagnostics; not part of the value.
  std::map<std::string, int> lines;
  friend bool operator==(const JobConfig& a, const JobConfig& b) {
    return a.field == b.field && a.group == b.group && a.subgroup == b.subgroup && a.algebra == b.algebra &&
           a.action == b.action && a.degree_cap == b.degree_cap && a.cocycle == b.cocycle && a.commands == b.commands;
  }
};

/// Throws ConfigError with the line of the first problem.
JobConfig parse_config(std::string_view text);
JobConfig read_config_file(const std::string& path);
/// Canonical form; parse_config(print_config(c)) == c.
std::string print_config(const JobConfig& config);

struct Job {
  JobConfig config;
  ContextPtr ctx;
  std::optional<Cocycle> cocycle;
};

GroupPtr parse_group(std::string_view spec);
Subgroup parse_subgroup(const GroupPtr& group, std::string_view spec);

/// Builds and verifies the context; a flag value overrides the file's degree cap.
/// Failures are reported as ConfigError pointing at the responsible key.
Job build_job(const JobConfig& config, std::optional<int> degree_cap_override = std::nullopt);

}  // namespace skh::cli
