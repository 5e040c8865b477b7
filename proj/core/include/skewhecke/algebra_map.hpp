#pragma once

// Generic verification of a linear map between algebras given on a domain
// basis: additivity, (anti-)multiplicativity, unit, injectivity by exact rank,
// surjectivity onto a target of stated dimension, and target containment.

#include <functional>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "skewhecke/linalg.hpp"
#include "skewhecke/report.hpp"

namespace skh {

template <class D, class C>
struct AlgebraMap {
  std::string name;
  Field field = Field::rationals();
  std::vector<D> domain_basis;
  std::function<C(const D&)> apply;
  std::function<D(const D&, const D&)> domain_multiply;
  std::function<D(const D&, const D&)> domain_add;
  D domain_unit;
  std::function<C(const C&, const C&)> codomain_multiply;
  std::function<C(const C&, const C&)> codomain_add;
  C codomain_unit;
  std::function<SparseVector(const C&)> codomain_coordinates;
  /// Optional: a description of why an image is outside the stated target.
  std::function<std::optional<std::string>(const C&)> target_violation;
  std::optional<std::size_t> target_dimension;
  /// f(xy) = f(y) f(x) instead of f(x) f(y).
  bool anti = false;
};

struct AlgebraMapReport {
  std::string name;
  bool additive = false;
  bool multiplicative = false;
  bool unital = false;
  bool injective = false;
  bool surjective = false;
  bool in_target = false;
  Report report;
  bool isomorphism() const { return additive && multiplicative && unital && injective && surjective && in_target; }
  bool embedding() const { return additive && multiplicative && unital && injective && in_target; }
};

/// Basis pairs are checked exhaustively up to `exhaustive_limit` pairs, then by
/// `samples` seeded random pairs.
template <class D, class C>
AlgebraMapReport verify_algebra_map(const AlgebraMap<D, C>& map, std::uint64_t seed = 0,
                                    std::size_t exhaustive_limit = 10000, std::size_t samples = 2000) {
  AlgebraMapReport out;
  out.name = map.name;
  out.report = Report("algebra map " + map.name);
  const std::size_t n = map.domain_basis.size();
  std::vector<C> images;
  images.reserve(n);
  for (const auto& b : map.domain_basis) images.push_back(map.apply(b));

  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  if (n * n <= exhaustive_limit) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) pairs.emplace_back(i, j);
    }
  } else if (n > 0) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::size_t> pick(0, n - 1);
    for (std::size_t s = 0; s < samples; ++s) pairs.emplace_back(pick(rng), pick(rng));
  }

  std::string witness;
  for (std::size_t s = 0; s < std::min<std::size_t>(pairs.size(), 50); ++s) {
    auto [i, j] = pairs[s];
    if (map.apply(map.domain_add(map.domain_basis[i], map.domain_basis[j])) != map.codomain_add(images[i], images[j])) {
      witness = "basis pair (" + std::to_string(i) + ", " + std::to_string(j) + ")";
      break;
    }
  }
  out.additive = witness.empty();
  out.report.add("additive", out.additive, witness);

  witness.clear();
  for (auto [i, j] : pairs) {
    C lhs = map.apply(map.domain_multiply(map.domain_basis[i], map.domain_basis[j]));
    C rhs = map.anti ? map.codomain_multiply(images[j], images[i]) : map.codomain_multiply(images[i], images[j]);
    if (lhs != rhs) {
      witness = "basis pair (" + std::to_string(i) + ", " + std::to_string(j) + ")";
      break;
    }
  }
  out.multiplicative = witness.empty();
  out.report.add(map.anti ? "anti-multiplicative" : "multiplicative", out.multiplicative,
                 witness.empty() ? std::to_string(pairs.size()) + " pairs" : witness);

  out.unital = map.apply(map.domain_unit) == map.codomain_unit;
  out.report.add("unit", out.unital, out.unital ? "" : "image of the unit differs");

  std::vector<SparseVector> coords;
  coords.reserve(n);
  for (const auto& img : images) coords.push_back(map.codomain_coordinates(img));
  const std::size_t r = sparse_rank(coords, map.field);
  out.injective = r == n;
  out.report.add("injective", out.injective, "rank " + std::to_string(r) + " of " + std::to_string(n));

  if (map.target_dimension) {
    out.surjective = r == *map.target_dimension;
    out.report.add("surjective", out.surjective, "rank " + std::to_string(r) + ", target dimension " +
                                                      std::to_string(*map.target_dimension));
  } else {
    out.report.skip("surjective", "no target dimension stated");
  }

  witness.clear();
  if (map.target_violation) {
    for (std::size_t i = 0; i < n; ++i) {
      if (auto bad = map.target_violation(images[i])) {
        witness = "image of basis " + std::to_string(i) + ": " + *bad;
        break;
      }
    }
  }
  out.in_target = witness.empty();
  out.report.add("image in target", out.in_target, witness);
  return out;
}

}  // namespace skh
