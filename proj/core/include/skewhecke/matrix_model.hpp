#pragma once

// The G-invariant matrix model: φ ↦ M with M_{gH,kH} = α_k φ(k^-1 gH), the
// corner model e_H (A ⋊ G) e_H, and the Stone map for functions on G.

#include <string>
#include <vector>

#include "skewhecke/hecke.hpp"
#include "skewhecke/skew_group.hpp"

namespace skh {

/// Coset-indexed square matrix with entries in A, row-major.
struct HeckeMatrix {
  ContextPtr ctx;
  std::size_t n = 0;
  std::vector<Element> entries;

  const Element& at(std::size_t row, std::size_t col) const { return entries[row * n + col]; }
  Element& at(std::size_t row, std::size_t col) { return entries[row * n + col]; }
  friend bool operator==(const HeckeMatrix& a, const HeckeMatrix& b) { return a.n == b.n && a.entries == b.entries; }
  HeckeMatrix& operator+=(const HeckeMatrix& other);
  std::string to_string() const;
};

HeckeMatrix zero_matrix(const ContextPtr& ctx);
HeckeMatrix to_matrix(const HeckeElement& phi);
/// First (s, gH, kH) with α_s M_{s^-1 gH, s^-1 kH} != M_{gH,kH}, as text.
std::optional<std::string> matrix_invariance_violation(const HeckeMatrix& m);
/// Column of H read back; throws std::invalid_argument with a witness unless M is G-invariant.
HeckeElement from_matrix(const HeckeMatrix& m);
/// (X ⋆ Y)_{sH,kH} = Σ_{gH} X_{gH,kH} · Y_{sH,gH}, the product to_matrix respects.
HeckeMatrix matrix_product(const HeckeMatrix& x, const HeckeMatrix& y);
/// Compares T(φ∗ψ) with T(φ) ⋆ T(ψ) entry by entry.
Report matrix_multiplicativity_check(const HeckeElement& phi, const HeckeElement& psi);
/// Dimension of the G-invariant matrices whose entries are homogeneous of degree d.
std::size_t invariant_matrix_dimension(const ContextPtr& ctx, int degree);
SparseVector matrix_coordinates(const HeckeMatrix& m);
/// diag(α_g a) over cosets gH, for a in A^H.
HeckeMatrix relativise(const ContextPtr& ctx, const Element& a);

/// Σ_g (1/|H|) φ(gH) · g. Throws ModelUnavailable when |H| is not a unit.
Element to_corner(const SkewPtr& skew, const HeckeElement& phi);
/// Inverse of to_corner; rejects elements outside the corner.
HeckeElement from_corner(const ContextPtr& ctx, const SkewPtr& skew, const Element& x);

using ScalarMatrix = std::vector<std::vector<Scalar>>;

/// True when A is the function algebra on G and α is left translation.
bool stone_applicable(const HeckeContext& ctx);
/// S_{kH,gH} = value at the identity of M_{gH,kH}; stone(φ∗ψ) = stone(φ)·stone(ψ).
ScalarMatrix stone_map(const HeckeElement& phi);
HeckeElement stone_inverse(const ContextPtr& ctx, const ScalarMatrix& m);
ScalarMatrix scalar_matrix_product(const ScalarMatrix& a, const ScalarMatrix& b);
/// Dimension n^2, unit, multiplicativity, bijectivity and matrix-unit relations.
Report stone_report(const ContextPtr& ctx);

}  // namespace skh
