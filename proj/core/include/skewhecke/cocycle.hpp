#pragma once

// Twisting an action by a cocycle χ : G -> A^×, β_g a = χ(g) (α_g a) χ(g)^-1,
// and the transport Σ a_gH gH ↦ Σ a_gH χ(g)^-1 gH between the Hecke algebras.

#include "skewhecke/transports.hpp"

namespace skh {

/// χ(g) for every g in G, in element order.
using Cocycle = std::vector<Element>;

/// Checks (a) χ(gg') = χ(g) α_g χ(g'), (b) every χ(g) invertible,
/// (c) χ(h) = 1 for h in H, exhaustively, with witnesses.
Report cocycle_report(const ContextPtr& ctx, const Cocycle& chi);

Cocycle trivial_cocycle(const GroupAction& alpha);
/// χ(g) = u (α_g u)^-1; throws std::invalid_argument when u is not a unit.
Cocycle coboundary_from_unit(const GroupAction& alpha, const Element& u);
/// χ(g) = g in R[G], a cocycle for the trivial action on R[G].
Cocycle inner_cocycle(const GroupAction& alpha);

/// β for a cocycle with all values invertible.
ActionPtr twisted_action(const ActionPtr& alpha, const Cocycle& chi);

struct CocycleTransport : HeckeTransport {
  Cocycle chi;
  Report conditions;
};
/// Throws std::invalid_argument naming the first failed condition.
CocycleTransport cocycle_transport(const ContextPtr& ctx, const Cocycle& chi);

}  // namespace skh
