#pragma once

// Ready-made contexts over the rationals: the symmetric group examples used
// throughout the tests, the CLI's s3_fixtures suite and the benchmarks.

#include <string>
#include <vector>

#include "skewhecke/hecke.hpp"

namespace skh {

/// Subgroup generated by elements given by name, e.g. {"(1234)", "(13)"}.
Subgroup subgroup_by_names(const GroupPtr& group, const std::vector<std::string>& names);

/// Polynomial algebra on n variables whose enumeration reaches past `degree_cap`.
AlgebraPtr polynomial_for_cap(const Field& field, int variables, int degree_cap);

ContextPtr classical_fixture(const GroupPtr& group, const Subgroup& subgroup);
/// α_σ x_i = x_{σ(i)}.
ContextPtr polynomial_fixture(const GroupPtr& group, const Subgroup& subgroup, int degree_cap = 2);
/// Functions on G with left translation.
ContextPtr function_fixture(const GroupPtr& group, const Subgroup& subgroup);
/// Q[G] with conjugation.
ContextPtr conjugation_fixture(const GroupPtr& group, const Subgroup& subgroup);
/// Q[N] for a normal subgroup N, G acting by conjugation.
ContextPtr normal_subgroup_algebra_fixture(const GroupPtr& group, const Subgroup& subgroup, const Subgroup& normal);
/// Q[(Z/2)^3] with S3 permuting the factors.
ContextPtr cube_fixture(const Subgroup& subgroup);

struct NamedContext {
  std::string name;
  ContextPtr ctx;
};

/// (S3,S2), (S4,S3), (S4,D4) with group algebras, functions and polynomials.
std::vector<NamedContext> fixture_contexts(int degree_cap = 2);

}  // namespace skh
