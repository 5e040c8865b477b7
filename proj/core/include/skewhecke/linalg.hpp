#pragma once

// Exact dense linear algebra over a Field: row reduction, rank, nullspaces,
// linear solves, and subspaces kept in reduced row echelon form.

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "skewhecke/scalar.hpp"

namespace skh {

using Vector = std::vector<Scalar>;

Vector zero_vector(const Field& field, std::size_t n);

struct EchelonForm {
  std::vector<Vector> rows;          // nonzero rows, reduced, leading entry 1
  std::vector<std::size_t> pivots;   // pivot column of each row, increasing
};

/// Reduced row echelon form of the given rows (each of length `cols`).
EchelonForm row_reduce(std::vector<Vector> rows, std::size_t cols, const Field& field);

std::size_t rank(const std::vector<Vector>& rows, std::size_t cols, const Field& field);

/// Basis of {x : M x = 0} for M given by rows, returned in reduced echelon form.
std::vector<Vector> nullspace(const std::vector<Vector>& rows, std::size_t cols, const Field& field);

/// Some x with M x = rhs, or nullopt when inconsistent.
std::optional<Vector> solve(const std::vector<Vector>& rows, std::size_t cols, const Vector& rhs,
                            const Field& field);

/// A subspace of F^n stored as a reduced echelon basis, so equality is structural
/// and coordinates are read off at pivot columns.
class Subspace {
 public:
  Subspace(Field field, std::size_t ambient_dimension);
  static Subspace span(Field field, std::size_t ambient_dimension, std::vector<Vector> vectors);

  const Field& field() const { return field_; }
  std::size_t dimension() const { return form_.rows.size(); }
  std::size_t ambient_dimension() const { return ambient_; }
  const std::vector<Vector>& basis() const { return form_.rows; }
  const std::vector<std::size_t>& pivots() const { return form_.pivots; }

  bool contains(const Vector& v) const;
  /// Coordinates of `v` against basis(); nullopt when v is outside the subspace.
  std::optional<Vector> coordinates(const Vector& v) const;

  friend bool operator==(const Subspace& a, const Subspace& b);

 private:
  Vector remainder(Vector v) const;

  Field field_;
  std::size_t ambient_;
  EchelonForm form_;
};

/// Sparse vectors keyed by integer coordinate tuples; used to compare images of
/// maps whose codomains have structured index sets.
using Coord = std::vector<std::int32_t>;
using SparseVector = std::map<Coord, Scalar>;

void add_to(SparseVector& target, const Coord& key, const Scalar& value);

std::size_t sparse_rank(std::span<const SparseVector> vectors, const Field& field);

}  // namespace skh
