#pragma once

// Finite groups stored by full multiplication table. Element 0 is always the
// identity. Subgroups are sorted index sets referring to a parent group.

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace skh {

using Permutation = std::vector<int>;  // images of 0..n-1

class Group;
using GroupPtr = std::shared_ptr<const Group>;

class Group {
 public:
  /// Validates the table (identity at 0, associativity, inverses) and throws
  /// std::invalid_argument with a witness on failure. `table[a][b]` = a·b.
  static GroupPtr from_table(std::vector<std::vector<int>> table, std::vector<std::string> names = {},
                             std::string label = {});

  std::size_t order() const { return order_; }
  int identity() const { return 0; }
  int multiply(int a, int b) const { return table_[static_cast<std::size_t>(a) * order_ + b]; }
  int inverse(int a) const { return inverse_[a]; }
  int conjugate(int s, int g) const { return multiply(multiply(s, g), inverse(s)); }
  bool abelian() const;

  const std::string& name(int g) const { return names_[g]; }
  std::optional<int> find(std::string_view name) const;
  const std::string& label() const { return label_; }

  /// Permutation representation when the group was built from permutations.
  bool has_permutations() const { return !permutations_.empty(); }
  const Permutation& permutation(int g) const { return permutations_.at(g); }
  std::size_t permutation_degree() const { return permutations_.empty() ? 0 : permutations_[0].size(); }

  /// Build from a list of distinct permutations closed under composition.
  /// Composition is right-to-left: (στ)(i) = σ(τ(i)).
  static GroupPtr from_permutations(std::vector<Permutation> elements, std::string label);

 private:
  Group() = default;
  std::size_t order_ = 0;
  std::vector<int> table_;
  std::vector<int> inverse_;
  std::vector<std::string> names_;
  std::vector<Permutation> permutations_;
  std::string label_;
};

/// Cycle notation with 1-based points, e.g. "(12)(34)"; "id" for the identity.
std::string cycle_notation(const Permutation& p);
/// Parses cycle notation ("id", "(12)", "(1,2)(3,4)") of degree n.
Permutation parse_cycles(std::string_view text, std::size_t n);

GroupPtr symmetric_group(int n);
GroupPtr cyclic_group(int n);
/// Dihedral group of order 2n acting on the n-gon, as permutations.
GroupPtr dihedral_group(int n);

class Subgroup {
 public:
  Subgroup(GroupPtr parent, std::vector<int> elements);  // validates closure
  const GroupPtr& parent() const { return parent_; }
  const std::vector<int>& elements() const { return elements_; }
  std::size_t order() const { return elements_.size(); }
  bool contains(int g) const;
  friend bool operator==(const Subgroup& a, const Subgroup& b) {
    return a.parent_ == b.parent_ && a.elements_ == b.elements_;
  }

 private:
  GroupPtr parent_;
  std::vector<int> elements_;
};

Subgroup subgroup_from_generators(const GroupPtr& group, std::span<const int> generators);
Subgroup whole_group(const GroupPtr& group);
Subgroup trivial_subgroup(const GroupPtr& group);
bool is_subgroup_of(const Subgroup& inner, const Subgroup& outer);
bool is_normal(const Subgroup& subgroup);
/// s H s^-1.
Subgroup conjugate_subgroup(const Subgroup& subgroup, int s);

struct QuotientGroup {
  GroupPtr group;
  std::vector<int> projection;  // parent element -> quotient element
  std::vector<int> lift;        // quotient element -> minimal parent element of that coset
};
/// Throws std::invalid_argument when the subgroup is not normal.
QuotientGroup quotient_group(const Subgroup& normal);
/// Image of a subgroup containing N under the projection.
Subgroup image_in_quotient(const QuotientGroup& q, const Subgroup& subgroup);

struct SubgroupAsGroup {
  GroupPtr group;
  std::vector<int> to_parent;  // index in `group` -> index in parent
  std::optional<int> from_parent(int g) const;
};
SubgroupAsGroup subgroup_as_group(const Subgroup& subgroup);
/// Subgroup of `embedded.group` whose image is `subgroup` (which must lie inside).
Subgroup pull_back(const SubgroupAsGroup& embedded, const Subgroup& subgroup);

/// `action[k][n]` = θ_k(n) for a homomorphism K -> Aut(N).
using AutomorphismTable = std::vector<std::vector<int>>;

/// Throws with a witness unless `action` is a homomorphism into Aut(N).
void check_automorphism_action(const Group& normal, const Group& complement, const AutomorphismTable& action);

struct SemidirectProduct {
  GroupPtr group;                  // elements (n, k) with index k * |N| + n
  std::vector<int> embed_normal;   // n -> (n, 1)
  std::vector<int> embed_complement;  // k -> (1, k)
  std::vector<int> projection;     // (n, k) -> k
  int element(int n, int k) const { return k * static_cast<int>(embed_normal.size()) + n; }
};
/// N ⋊ K with (n, k)(n', k') = (n θ_k(n'), k k').
SemidirectProduct semidirect_product(const GroupPtr& normal, const GroupPtr& complement,
                                     const AutomorphismTable& action);

struct DirectProduct {
  GroupPtr group;  // (a, b) has index a * |B| + b
  std::vector<int> first;   // projections
  std::vector<int> second;
  int element(int a, int b) const { return a * static_cast<int>(right_order) + b; }
  std::size_t right_order = 0;
};
DirectProduct direct_product(const GroupPtr& left, const GroupPtr& right);

/// G^k as tuples, names "(a,b,c)".
GroupPtr power_group(const GroupPtr& base, int k);
/// S_k acting on G^k by permuting factors: θ_σ(g)_i = g_{σ^-1(i)}.
AutomorphismTable permute_factors_action(const Group& base, int k, const Group& symmetric);
/// Conjugation by G on a normal subgroup N (given as a group with its embedding).
AutomorphismTable conjugation_action(const Group& group, const SubgroupAsGroup& normal);

/// An isomorphism a -> b as an element map, found by backtracking on generators.
std::optional<std::vector<int>> find_isomorphism(const Group& a, const Group& b);

}  // namespace skh
