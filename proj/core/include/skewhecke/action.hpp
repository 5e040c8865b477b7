#pragma once

// Group actions α : G -> Aut(A) given on basis labels. Images are cached.

#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "skewhecke/algebra.hpp"
#include "skewhecke/report.hpp"

namespace skh {

using LabelImage = std::function<Element(int g, const Label& label)>;

class GroupAction {
 public:
  GroupAction(GroupPtr group, AlgebraPtr algebra, LabelImage image, std::string name);

  const GroupPtr& group() const { return group_; }
  const AlgebraPtr& algebra() const { return algebra_; }
  const std::string& name() const { return name_; }

  Element apply_label(int g, const Label& label) const;
  Element apply(int g, const Element& a) const;

 private:
  GroupPtr group_;
  AlgebraPtr algebra_;
  LabelImage image_;
  std::string name_;
  mutable std::mutex mutex_;
  mutable std::map<std::pair<int, Label>, Element> cache_;
};

using ActionPtr = std::shared_ptr<const GroupAction>;

ActionPtr trivial_action(GroupPtr group, AlgebraPtr algebra);
/// α_σ x_i = x_{σ(i)} on a polynomial algebra; G must be a permutation group.
ActionPtr permute_variables(GroupPtr group, AlgebraPtr polynomials);
/// Polynomial action given by the images of x1..xn under every group element,
/// extended multiplicatively. Nothing is checked here; see verify_action.
ActionPtr action_on_generators(GroupPtr group, AlgebraPtr polynomials, std::vector<std::vector<Element>> images);
/// α_g δ_k = δ_{gk} on the functions on G.
ActionPtr left_translation(GroupPtr group, AlgebraPtr functions);
/// R-linear extension of group automorphisms θ_g of N to R[N].
ActionPtr automorphism_action(GroupPtr group, AlgebraPtr group_algebra, AutomorphismTable table, std::string name);
/// α_g a = g a g^-1 on R[G].
ActionPtr conjugation_action(GroupPtr group, AlgebraPtr group_algebra);
/// α1(g1) ⊗ α2(g2) on A1 ⊗ A2 for the product group.
ActionPtr tensor_action(const DirectProduct& product, ActionPtr first, ActionPtr second, AlgebraPtr tensor);
/// α^op_g = α_g on A^op.
ActionPtr opposite_action(const ActionPtr& alpha, AlgebraPtr opposite);
/// Restriction of α to a subgroup, acting through its embedding.
ActionPtr restrict_action(const ActionPtr& alpha, const SubgroupAsGroup& subgroup);

/// Checks α_1 = id, α_g α_k = α_{gk}, unit and product preservation and degree
/// preservation on labels up to `degree_cap` (all labels for finite algebras).
Report verify_action(const GroupAction& alpha, int degree_cap);

}  // namespace skh
