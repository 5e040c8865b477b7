#pragma once

// Independently built models of special skew Hecke algebras, each given as an
// algebra map out of H(G, H, A, α) that verify_algebra_map can check:
//   A = R, trivial action    -> classical Hecke algebra (double coset basis)
//   trivial action, finite A -> A ⊗ H_R(G, H)
//   H = G                    -> A^G
//   H = 1                    -> A ⋊ G
//   H normal                 -> A^H ⋊ G/H

#include "skewhecke/algebra_map.hpp"
#include "skewhecke/hecke.hpp"
#include "skewhecke/skew_group.hpp"

namespace skh {

/// H_R(G, H) on the double coset basis T_D with structure constants
/// c_{DE}^F = #{kH ⊆ D : k^-1 xH ⊆ E} for a fixed xH ⊆ F. Labels {orbit}.
class ClassicalHeckeAlgebra final : public BasedAlgebra {
 public:
  ClassicalHeckeAlgebra(Field field, const Subgroup& subgroup);
  std::size_t double_cosets() const { return names_.size(); }
  bool finite() const override { return true; }
  std::vector<Label> basis() const override;
  Terms multiply(const Label& a, const Label& b) const override;
  Terms unit() const override;
  bool commutative() const override;
  std::size_t label_arity() const override { return 1; }
  bool valid_label(const Label& label) const override;
  std::string format_label(const Label& label) const override;
  Label parse_label(std::string_view text) const override;

 private:
  std::vector<std::string> names_;
  std::vector<std::vector<std::vector<long>>> constants_;  // [a][b][c]
};

AlgebraPtr make_classical_hecke(Field field, const Subgroup& subgroup);

SparseVector element_coordinates(const Element& e);

using HeckeToAlgebra = AlgebraMap<HeckeElement, Element>;
using HeckeToHecke = AlgebraMap<HeckeElement, HeckeElement>;

/// Map out of ctx on its module basis, with convolution as the domain product.
HeckeToAlgebra hecke_to_algebra_map(std::string name, const ContextPtr& ctx, AlgebraPtr target,
                                    std::function<Element(const HeckeElement&)> f,
                                    std::optional<std::size_t> target_dimension);
HeckeToHecke hecke_to_hecke_map(std::string name, const ContextPtr& source, const ContextPtr& target,
                                std::function<HeckeElement(const HeckeElement&)> f, bool surjective, bool anti = false);

HeckeToAlgebra classical_model(const ContextPtr& ctx);
HeckeToAlgebra tensor_model(const ContextPtr& ctx);
HeckeToAlgebra invariant_model(const ContextPtr& ctx);
HeckeToAlgebra skew_group_model(const ContextPtr& ctx);
HeckeToAlgebra normal_subgroup_model(const ContextPtr& ctx);

/// True when α_g b = b for every g and every label up to the context's cap.
bool action_is_trivial(const HeckeContext& ctx);

}  // namespace skh
