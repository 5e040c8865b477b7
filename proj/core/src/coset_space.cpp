#include "skewhecke/coset_space.hpp"

#include <algorithm>
#include <stdexcept>

namespace skh {

CosetSpace::CosetSpace(Subgroup subgroup, std::optional<std::vector<int>> representatives)
    : subgroup_(std::move(subgroup)) {
  const auto& g = *subgroup_.parent();
  const std::size_t n = g.order();
  coset_of_.assign(n, -1);
  for (std::size_t x = 0; x < n; ++x) {
    if (coset_of_[x] >= 0) continue;
    int c = static_cast<int>(cosets_.size());
    std::vector<int> members;
    for (int h : subgroup_.elements()) {
      int y = g.multiply(static_cast<int>(x), h);
      coset_of_[y] = c;
      members.push_back(y);
    }
    std::sort(members.begin(), members.end());
    cosets_.push_back(std::move(members));
    reps_.push_back(static_cast<int>(x));
  }
  if (representatives) {
    if (representatives->size() != cosets_.size()) throw std::invalid_argument("wrong number of coset representatives");
    for (std::size_t c = 0; c < cosets_.size(); ++c) {
      int r = (*representatives)[c];
      if (r < 0 || static_cast<std::size_t>(r) >= n || coset_of_[r] != static_cast<int>(c)) {
        throw std::invalid_argument("representative " + std::to_string(r) + " does not lie in coset " + std::to_string(c));
      }
    }
    reps_ = *representatives;
  }
  const std::size_t m = cosets_.size();
  act_.resize(n * m);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t c = 0; c < m; ++c) act_[x * m + c] = coset_of_[g.multiply(static_cast<int>(x), reps_[c])];
  }
  orbit_of_.assign(m, -1);
  transversal_.assign(m, -1);
  for (std::size_t c = 0; c < m; ++c) {
    if (orbit_of_[c] >= 0) continue;
    int o = static_cast<int>(orbits_.size());
    std::vector<int> members;
    for (int h : subgroup_.elements()) {
      int d = act(h, static_cast<int>(c));
      if (orbit_of_[d] < 0) {
        orbit_of_[d] = o;
        transversal_[d] = h;
        members.push_back(d);
      }
    }
    std::sort(members.begin(), members.end());
    orbits_.push_back(std::move(members));
    std::vector<int> stab;
    for (int h : subgroup_.elements()) {
      if (act(h, static_cast<int>(c)) == static_cast<int>(c)) stab.push_back(h);
    }
    stabilizers_.emplace_back(subgroup_.parent(), std::move(stab));
  }
}

std::vector<int> generators_of(const Subgroup& subgroup) {
  std::vector<int> gens;
  std::vector<bool> covered(subgroup.parent()->order(), false);
  covered[0] = true;
  for (int x : subgroup.elements()) {
    if (covered[x]) continue;
    gens.push_back(x);
    auto generated = subgroup_from_generators(subgroup.parent(), gens);
    for (int y : generated.elements()) covered[y] = true;
  }
  return gens;
}

}  // namespace skh
