#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "skewhecke_cli/suites.hpp"

namespace skh::cli {

std::string dims_text(const ContextPtr& ctx);
/// φ ∗ ψ for two Hecke literals, printed canonically.
std::string mul_text(const ContextPtr& ctx, std::string_view phi, std::string_view psi);
std::string report_text(const std::string& suite, const Report& report, std::uint64_t seed);

struct CommandResult {
  std::string output;
  bool ok = true;
};
/// One [run] command: `dims`, `sc`, `verify <suite>` or `mul <φ> | <ψ>`.
CommandResult run_command(const Job& job, std::string_view command, std::uint64_t seed);

}  // namespace skh::cli
