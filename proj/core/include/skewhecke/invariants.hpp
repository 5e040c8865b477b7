#pragma once

// Fixed subspaces A^S of a group action, computed exactly per degree as the
// nullspace of the stacked maps (α_s - id) over generators of S.

#include <map>
#include <mutex>
#include <optional>
#include <vector>

#include "skewhecke/action.hpp"
#include "skewhecke/linalg.hpp"

namespace skh {

/// The S-fixed part of one degree of A, in coordinates over that degree's labels.
struct InvariantSpace {
  int degree = 0;
  std::vector<Label> labels;
  std::map<Label, std::size_t> index;
  Subspace space{Field::rationals(), 0};
  std::vector<Element> basis;

  /// Dense vector of a homogeneous element over `labels`; throws if a label is foreign.
  Vector to_vector(const Element& e) const;
  /// Coordinates against `basis`; nullopt when e is not S-fixed.
  std::optional<Vector> coordinates(const Element& e) const;
};

InvariantSpace invariant_space(const GroupAction& alpha, const Subgroup& subgroup, int degree);

/// Basis of A^S in degrees 0..max_degree (whole basis for finite algebras).
/// Graded algebras require max_degree. When |S| is a unit the result is
/// cross-checked against the image of the averaging operator.
std::vector<Element> invariants_compute(const GroupAction& alpha, const Subgroup& subgroup,
                                        std::optional<int> max_degree = std::nullopt);

/// Span of (1/|S|) Σ_s α_s b over the labels of one degree. Throws NotAUnit if |S| is not a unit.
Subspace averaging_image(const GroupAction& alpha, const Subgroup& subgroup, int degree);

/// First s in S with α_s a != a.
std::optional<int> fixed_violation(const GroupAction& alpha, const Subgroup& subgroup, const Element& a);

/// Two-sided inverse in a finite algebra by exact linear solve, nullopt if none.
std::optional<Element> inverse_element(const Element& a);

/// A^S as a based algebra. Labels {d, i}: the i-th basis vector of the
/// degree-d invariant space, printed inv[i] (finite) or inv[d,i] (graded), 1-based.
class InvariantSubalgebra final : public BasedAlgebra {
 public:
  InvariantSubalgebra(ActionPtr alpha, Subgroup subgroup);

  const ActionPtr& action() const { return alpha_; }
  const AlgebraPtr& parent() const { return alpha_->algebra(); }
  const Subgroup& subgroup() const { return subgroup_; }
  const InvariantSpace& space(int degree) const;

  /// The parent element of an A^S element (or of a single label).
  Element embed(const Element& x) const;
  Element embed_label(const Label& label) const;
  /// Expresses an S-fixed parent element in A^S; throws if not fixed.
  Element restrict(const Element& a) const;

  bool finite() const override { return parent()->finite(); }
  std::vector<Label> basis() const override;
  bool graded() const override { return parent()->graded(); }
  int degree(const Label& label) const override { return label[0]; }
  std::vector<Label> basis_of_degree(int d) const override;
  Terms multiply(const Label& a, const Label& b) const override;
  Terms unit() const override;
  bool commutative() const override { return parent()->commutative(); }
  std::size_t label_arity() const override { return 2; }
  bool valid_label(const Label& label) const override;
  std::string format_label(const Label& label) const override;
  Label parse_label(std::string_view text) const override;

 private:
  ActionPtr alpha_;
  Subgroup subgroup_;
  mutable std::mutex mutex_;
  mutable std::map<int, std::unique_ptr<InvariantSpace>> spaces_;
};

std::shared_ptr<const InvariantSubalgebra> make_invariant_subalgebra(ActionPtr alpha, Subgroup subgroup);

/// The induced action of G/N on A^N.
ActionPtr quotient_invariant_action(const ActionPtr& alpha, const QuotientGroup& quotient,
                                    std::shared_ptr<const InvariantSubalgebra> invariants);

/// Rank of a list of elements over the union of their labels.
std::size_t element_rank(const std::vector<Element>& elements);
/// A basis (reduced echelon over the union of labels) of the span.
std::vector<Element> span_basis(const std::vector<Element>& elements);

}  // namespace skh
