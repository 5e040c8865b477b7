#pragma once

// Verification suites run by `skewhecke verify`. Each returns a Report; a suite
// that does not apply to the context returns a single SKIP line.

#include <cstdint>
#include <string>
#include <vector>

#include "skewhecke_cli/config.hpp"

namespace skh::cli {

struct SuiteOptions {
  std::uint64_t seed = 0;
  std::size_t samples = 100;
};

const std::vector<std::string>& suite_names();

Report assoc_suite(const ContextPtr& ctx, const SuiteOptions& options);
Report decomposition_suite(const ContextPtr& ctx);
Report special_cases_suite(const ContextPtr& ctx);
Report matrix_suite(const ContextPtr& ctx, const SuiteOptions& options);
Report relativise_suite(const ContextPtr& ctx);
Report corner_suite(const ContextPtr& ctx, const SuiteOptions& options);
Report stone_suite(const ContextPtr& ctx);
Report group_ops_suite(const ContextPtr& ctx, const SuiteOptions& options);
Report cocycle_suite(const ContextPtr& ctx, const Cocycle& chi, const SuiteOptions& options);
Report opposite_suite(const ContextPtr& ctx, const SuiteOptions& options);
Report graded_suite(const ContextPtr& ctx);
/// Fixed S3/S2 examples, independent of the configured context.
Report s3_fixtures_suite(const SuiteOptions& options);

/// Runs one named suite, or every suite for "all". Throws std::invalid_argument on unknown names.
Report run_suite(const std::string& name, const Job& job, const SuiteOptions& options);

}  // namespace skh::cli
