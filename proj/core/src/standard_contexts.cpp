#include "skewhecke/standard_contexts.hpp"

#include <algorithm>
#include <stdexcept>

namespace skh {

Subgroup subgroup_by_names(const GroupPtr& group, const std::vector<std::string>& names) {
  std::vector<int> gens;
  for (const auto& n : names) {
    auto g = group->find(n);
    if (!g) throw std::invalid_argument("no element named '" + n + "' in " + group->label());
    gens.push_back(*g);
  }
  return subgroup_from_generators(group, gens);
}

AlgebraPtr polynomial_for_cap(const Field& field, int variables, int degree_cap) {
  return make_polynomial(field, variables, std::max(6, 3 * degree_cap));
}

ContextPtr classical_fixture(const GroupPtr& group, const Subgroup& subgroup) {
  return classical_context(group, subgroup, Field::rationals());
}

ContextPtr polynomial_fixture(const GroupPtr& group, const Subgroup& subgroup, int degree_cap) {
  auto a = polynomial_for_cap(Field::rationals(), static_cast<int>(group->permutation_degree()), degree_cap);
  HeckeContext::Options o;
  o.degree_cap = degree_cap;
  return HeckeContext::make(permute_variables(group, a), subgroup, o);
}

ContextPtr function_fixture(const GroupPtr& group, const Subgroup& subgroup) {
  return HeckeContext::make(left_translation(group, make_functions(Field::rationals(), group)), subgroup);
}

ContextPtr conjugation_fixture(const GroupPtr& group, const Subgroup& subgroup) {
  return HeckeContext::make(conjugation_action(group, make_group_algebra(Field::rationals(), group)), subgroup);
}

ContextPtr normal_subgroup_algebra_fixture(const GroupPtr& group, const Subgroup& subgroup, const Subgroup& normal) {
  auto n = subgroup_as_group(normal);
  auto table = conjugation_action(*group, n);
  auto a = make_group_algebra(Field::rationals(), n.group);
  return HeckeContext::make(automorphism_action(group, a, table, "conjugation on N"), subgroup);
}

ContextPtr cube_fixture(const Subgroup& subgroup) {
  const auto& s3 = subgroup.parent();
  auto cube = power_group(cyclic_group(2), 3);
  auto table = permute_factors_action(*cyclic_group(2), 3, *s3);
  auto a = make_group_algebra(Field::rationals(), cube);
  return HeckeContext::make(automorphism_action(s3, a, table, "permute factors"), subgroup);
}

std::vector<NamedContext> fixture_contexts(int degree_cap) {
  auto s3 = symmetric_group(3);
  auto s4 = symmetric_group(4);
  auto s2 = subgroup_by_names(s3, {"(12)"});
  auto s3in4 = subgroup_by_names(s4, {"(12)", "(23)"});
  auto d4 = subgroup_by_names(s4, {"(1234)", "(13)"});
  auto v4 = subgroup_by_names(s4, {"(12)(34)", "(13)(24)"});
  std::vector<NamedContext> out;
  out.push_back({"S3/S2 Q", classical_fixture(s3, s2)});
  out.push_back({"S3/S2 Q[S3] conjugation", conjugation_fixture(s3, s2)});
  out.push_back({"S3/S2 Q[(Z/2)^3]", cube_fixture(s2)});
  out.push_back({"S3/S2 functions", function_fixture(s3, s2)});
  out.push_back({"S3/S2 polynomials", polynomial_fixture(s3, s2, degree_cap)});
  out.push_back({"S4/S3 Q[V4]", normal_subgroup_algebra_fixture(s4, s3in4, v4)});
  out.push_back({"S4/S3 functions", function_fixture(s4, s3in4)});
  out.push_back({"S4/S3 polynomials", polynomial_fixture(s4, s3in4, degree_cap)});
  out.push_back({"S4/D4 Q[V4]", normal_subgroup_algebra_fixture(s4, d4, v4)});
  out.push_back({"S4/D4 functions", function_fixture(s4, d4)});
  out.push_back({"S4/D4 polynomials", polynomial_fixture(s4, d4, degree_cap)});
  return out;
}

}  // namespace skh
