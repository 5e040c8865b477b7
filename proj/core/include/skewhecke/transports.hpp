#pragma once

// Maps between skew Hecke algebras: quotients by a normal subgroup inside H,
// products, intermediate subgroups, conjugation of H, semidirect products
// from permutation actions on group algebras, and opposites.

#include "skewhecke/special_cases.hpp"

namespace skh {

struct HeckeTransport {
  ContextPtr source;
  ContextPtr target;
  std::function<HeckeElement(const HeckeElement&)> map;
  /// Surjectivity is checked against the target dimension when `onto` is set.
  HeckeToHecke algebra_map(std::string name, bool onto = true, bool anti = false) const;
};

/// (G, H, A, α) -> (G/N, H/N, A^N, α^N) for N normal in G and contained in H.
struct QuotientTransport : HeckeTransport {
  QuotientGroup quotient;
  std::shared_ptr<const InvariantSubalgebra> invariants;
  std::function<HeckeElement(const HeckeElement&)> inverse;
};
QuotientTransport quotient_transport(const ContextPtr& ctx, const Subgroup& normal);

/// Sums of pure tensors φ ⊗ ψ.
using HeckeTensor = std::vector<std::pair<HeckeElement, HeckeElement>>;

struct ProductTransport {
  ContextPtr first;
  ContextPtr second;
  ContextPtr target;
  DirectProduct product;
  std::function<HeckeElement(const HeckeTensor&)> map;
  AlgebraMap<HeckeTensor, HeckeElement> algebra_map() const;
};
/// H(G1, H1, A1) ⊗ H(G2, H2, A2) -> H(G1×G2, H1×H2, A1⊗A2).
ProductTransport product_transport(const ContextPtr& first, const ContextPtr& second);

/// H(K, H, A, α|K) -> H(G, H, A, α) by extension by zero, for H ≤ K ≤ G.
struct IntermediateEmbedding : HeckeTransport {
  SubgroupAsGroup intermediate;
};
IntermediateEmbedding intermediate_embed(const ContextPtr& ctx, const Subgroup& intermediate);

/// H(G, H, A, α) -> H(G, sHs^-1, A, α) by relabelling the matrix model kH -> ks^-1 (sHs^-1).
HeckeTransport conjugate_transport(const ContextPtr& ctx, int s);

/// H(K, H, R[N], θ) -> H_R(N ⋊ K, H) for α given by automorphisms of N.
struct SemidirectTransport : HeckeTransport {
  SemidirectProduct product;
};
/// Throws std::invalid_argument unless A is a group algebra permuted by α.
SemidirectTransport semidirect_transport(const ContextPtr& ctx);

/// The context (G, H, A^op, α^op).
ContextPtr opposite_context(const ContextPtr& ctx);
/// φ ↦ (gH ↦ α_g φ(g^-1 H)), an anti-isomorphism onto H(G, H, A^op, α^op).
HeckeTransport opposite_transport(const ContextPtr& ctx);

}  // namespace skh
