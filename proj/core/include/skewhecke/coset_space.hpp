#pragma once

// Left cosets gH of a subgroup, the left G-action on them, and the H-orbits
// (double cosets) with their stabilizers H ∩ gHg^-1.

#include <optional>
#include <vector>

#include "skewhecke/group.hpp"

namespace skh {

class CosetSpace {
 public:
  /// Cosets are ordered by their minimal element. `representatives`, when
  /// given, overrides the representative element of each coset (it must lie
  /// in that coset); by default the minimal element is used.
  explicit CosetSpace(Subgroup subgroup, std::optional<std::vector<int>> representatives = std::nullopt);

  const GroupPtr& group() const { return subgroup_.parent(); }
  const Subgroup& subgroup() const { return subgroup_; }

  std::size_t size() const { return cosets_.size(); }
  const std::vector<int>& coset(int c) const { return cosets_[c]; }
  int representative(int c) const { return reps_[c]; }
  const std::vector<int>& representatives() const { return reps_; }
  int coset_of(int g) const { return coset_of_[g]; }
  /// Coset of g·(rep c).
  int act(int g, int c) const { return act_[static_cast<std::size_t>(g) * cosets_.size() + c]; }

  /// H-orbits on cosets, ordered by their minimal coset index.
  std::size_t orbit_count() const { return orbits_.size(); }
  const std::vector<int>& orbit(int o) const { return orbits_[o]; }
  int orbit_of(int c) const { return orbit_of_[c]; }
  /// Minimal coset index in the orbit.
  int orbit_representative(int o) const { return orbits_[o].front(); }
  /// H ∩ gHg^-1 for g the representative of the orbit's representative coset.
  const Subgroup& stabilizer(int o) const { return stabilizers_[o]; }
  /// Some h in H with h·(orbit representative) = c.
  int transversal(int c) const { return transversal_[c]; }

 private:
  Subgroup subgroup_;
  std::vector<std::vector<int>> cosets_;
  std::vector<int> reps_;
  std::vector<int> coset_of_;
  std::vector<int> act_;
  std::vector<std::vector<int>> orbits_;
  std::vector<int> orbit_of_;
  std::vector<Subgroup> stabilizers_;
  std::vector<int> transversal_;
};

/// A small generating set, chosen greedily in element order.
std::vector<int> generators_of(const Subgroup& subgroup);

}  // namespace skh
