#pragma once

// Skew Hecke algebras H(G, H, A, α): H-equivariant maps φ : G/H -> A,
// φ(h gH) = α_h φ(gH), with convolution
//   (φ ∗ ψ)(gH) = Σ_{kH} φ(kH) α_k ψ(k^-1 gH).
// Elements are stored by their values on one coset per H-orbit; each value
// lies in A^{H ∩ gHg^-1}.

#include <memory>
#include <optional>
#include <random>
#include <stdexcept>
#include <vector>

#include "skewhecke/action.hpp"
#include "skewhecke/coset_space.hpp"
#include "skewhecke/invariants.hpp"

namespace skh {

/// A value that is not fixed by its stabilizer; `witness` is the offending h.
class InvarianceError : public std::invalid_argument {
 public:
  InvarianceError(const std::string& what, int witness) : std::invalid_argument(what), witness_(witness) {}
  int witness() const { return witness_; }

 private:
  int witness_;
};

struct ModuleBasisEntry {
  int orbit;
  int degree;
  std::size_t index;  // position in the invariant space basis
  Element value;
};

class HeckeContext;
using ContextPtr = std::shared_ptr<const HeckeContext>;

class HeckeContext : public std::enable_shared_from_this<HeckeContext> {
 public:
  struct Options {
    int degree_cap = 2;
    std::optional<std::vector<int>> representatives;
    bool verify_action = true;
  };

  /// Throws std::invalid_argument when the action fails verification.
  static ContextPtr make(ActionPtr alpha, Subgroup subgroup, Options options);
  static ContextPtr make(ActionPtr alpha, Subgroup subgroup) { return make(std::move(alpha), std::move(subgroup), Options{}); }

  const ActionPtr& action() const { return alpha_; }
  const GroupPtr& group() const { return alpha_->group(); }
  const AlgebraPtr& algebra() const { return alpha_->algebra(); }
  const Field& field() const { return algebra()->field(); }
  const Subgroup& subgroup() const { return cosets_.subgroup(); }
  const CosetSpace& cosets() const { return cosets_; }
  int degree_cap() const { return cap_; }
  /// 0 for finite algebras, the degree cap otherwise.
  int max_degree() const { return algebra()->finite() ? 0 : cap_; }

  /// Degree-d part of A^{H ∩ gHg^-1} for the orbit's representative coset.
  const InvariantSpace& space(int orbit, int degree) const;
  /// Ordered by degree, orbit, then invariant basis index; degrees up to max_degree().
  const std::vector<ModuleBasisEntry>& module_basis() const { return basis_; }
  std::size_t dimension() const { return basis_.size(); }
  std::optional<std::size_t> basis_position(int degree, int orbit, std::size_t index) const;

  ContextPtr ptr() const { return shared_from_this(); }

 private:
  HeckeContext(ActionPtr alpha, CosetSpace cosets, int cap);
  ActionPtr alpha_;
  CosetSpace cosets_;
  int cap_;
  std::vector<ModuleBasisEntry> basis_;
  std::map<std::tuple<int, int, std::size_t>, std::size_t> positions_;
  std::vector<std::shared_ptr<const InvariantSubalgebra>> stabilizer_invariants_;
};

class HeckeElement {
 public:
  HeckeElement() = default;
  /// Unchecked; use hecke_from_values for validated construction.
  HeckeElement(ContextPtr context, std::vector<Element> values);

  const ContextPtr& context() const { return ctx_; }
  const std::vector<Element>& values() const { return values_; }
  const Element& value(int orbit) const { return values_[orbit]; }
  bool is_zero() const;

  HeckeElement& operator+=(const HeckeElement& other);
  HeckeElement& operator-=(const HeckeElement& other);
  HeckeElement& operator*=(const Scalar& s);
  friend HeckeElement operator+(HeckeElement a, const HeckeElement& b) { return a += b; }
  friend HeckeElement operator-(HeckeElement a, const HeckeElement& b) { return a -= b; }
  friend HeckeElement operator*(const Scalar& s, HeckeElement a) { return a *= s; }
  friend bool operator==(const HeckeElement& a, const HeckeElement& b);
  friend bool operator!=(const HeckeElement& a, const HeckeElement& b) { return !(a == b); }

  /// `[(g, value), ...]` with g the representative of each orbit's coset.
  std::string to_string() const;

 private:
  void check_context(const HeckeElement& other) const;
  ContextPtr ctx_;
  std::vector<Element> values_;
};

std::ostream& operator<<(std::ostream& os, const HeckeElement& x);

/// Values in orbit order; each must be fixed by its stabilizer (InvarianceError otherwise).
HeckeElement hecke_from_values(const ContextPtr& ctx, std::vector<Element> values);
HeckeElement hecke_zero(const ContextPtr& ctx);
/// Values on every coset, φ(h g_i H) = α_h φ(g_i H).
std::vector<Element> hecke_expand(const HeckeElement& phi);
/// Reads an assignment on all cosets back, rejecting it unless it is H-equivariant.
HeckeElement hecke_from_expanded(const ContextPtr& ctx, const std::vector<Element>& values);

HeckeElement convolve(const HeckeElement& phi, const HeckeElement& psi);
/// Convolution summing over the given coset representatives instead of the context's.
HeckeElement convolve_with_representatives(const HeckeElement& phi, const HeckeElement& psi,
                                           const std::vector<int>& representatives);
HeckeElement hecke_identity(const ContextPtr& ctx);
/// a ↦ δ_{H,a} for a in A^H.
HeckeElement embed_invariant(const ContextPtr& ctx, const Element& a);
/// ρ ↦ (gH ↦ ρ(gH)·1_A) for ρ in the classical algebra on the same (G, H).
HeckeElement embed_scalar_hecke(const ContextPtr& ctx, const HeckeElement& rho);
/// φ ↦ φ(H).
Element expectation(const HeckeElement& phi);

/// The classical Hecke algebra context (G, H, R, trivial).
ContextPtr classical_context(const GroupPtr& group, const Subgroup& subgroup, const Field& field);

/// Coordinates against invariant bases, keyed {degree, orbit, index}; any degree.
SparseVector hecke_coordinates(const HeckeElement& phi);
/// Dense coordinates over module_basis(); throws std::out_of_range past the cap.
Vector module_coordinates(const HeckeElement& phi);
HeckeElement module_basis_element(const ContextPtr& ctx, std::size_t i);
/// Bimodule decomposition read back from module coordinates.
HeckeElement from_module_coordinates(const ContextPtr& ctx, const Vector& coords);

/// Rows (i, j, k, c) with b_i ∗ b_j = Σ c b_k. For graded contexts only pairs
/// with deg b_i + deg b_j <= degree cap are listed.
std::vector<StructureRow> structure_constants(const ContextPtr& ctx);
/// Header listing the module basis, then `i\tj\tk\tcoeff` rows.
std::string structure_constants_text(const ContextPtr& ctx);

/// Common degree of all nonzero values; nullopt when inhomogeneous or zero.
std::optional<int> graded_degree(const HeckeElement& phi);

/// Random combination of module basis elements with coefficients in [lo, hi].
HeckeElement random_hecke(const ContextPtr& ctx, std::mt19937_64& rng, int lo = -3, int hi = 3);
Element random_element(const AlgebraPtr& algebra, const std::vector<Label>& labels, std::mt19937_64& rng, int lo = -3,
                       int hi = 3);

}  // namespace skh
