#pragma once

// The skew group algebra A ⋊ G with (a g)(b k) = a α_g(b) gk, the idempotent
// e_H = (1/|H|) Σ_h 1 ⊗ h and corner bases e (A ⋊ G) e.

#include <stdexcept>

#include "skewhecke/action.hpp"

namespace skh {

/// Raised when the corner-ring model needs 1/|H| and |H| is not a unit.
class ModelUnavailable : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Labels are the A-label followed by the group element index.
class SkewGroupAlgebra final : public BasedAlgebra {
 public:
  explicit SkewGroupAlgebra(ActionPtr alpha);

  const ActionPtr& action() const { return alpha_; }
  const AlgebraPtr& coefficients() const { return alpha_->algebra(); }
  const GroupPtr& group() const { return alpha_->group(); }
  Label join(const Label& a, int g) const;
  std::pair<Label, int> split(const Label& label) const;

  bool finite() const override { return coefficients()->finite(); }
  std::vector<Label> basis() const override;
  bool graded() const override { return coefficients()->graded(); }
  int degree(const Label& label) const override { return coefficients()->degree(split(label).first); }
  std::vector<Label> basis_of_degree(int d) const override;
  Terms multiply(const Label& a, const Label& b) const override;
  Terms unit() const override;
  bool commutative() const override { return group()->order() == 1 && coefficients()->commutative(); }
  std::size_t label_arity() const override { return coefficients()->label_arity() + 1; }
  bool valid_label(const Label& label) const override;
  std::string format_label(const Label& label) const override;
  Label parse_label(std::string_view text) const override;

 private:
  ActionPtr alpha_;
};

using SkewPtr = std::shared_ptr<const SkewGroupAlgebra>;

SkewPtr make_skew_group(ActionPtr alpha);

/// a·g.
Element skew_element(const SkewPtr& skew, const Element& a, int g);
/// `coeff * label . g + ...`, "0" for zero.
std::string skew_to_string(const Element& x);

/// e_H, checked idempotent. Throws ModelUnavailable when |H| is not a unit.
Element hecke_idempotent(const SkewPtr& skew, const Subgroup& subgroup);

/// Reduced basis of e (A ⋊ G) e spanned by e·(b g)·e over labels b of degree <= cap.
std::vector<Element> corner_basis(const SkewPtr& skew, const Element& e, int degree_cap);

}  // namespace skh
