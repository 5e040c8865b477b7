#include "skewhecke/linalg.hpp"

#include <stdexcept>

namespace skh {

Vector zero_vector(const Field& field, std::size_t n) { return Vector(n, field.zero()); }

EchelonForm row_reduce(std::vector<Vector> rows, std::size_t cols, const Field& /*field*/) {
  for (const auto& r : rows) {
    if (r.size() != cols) throw std::invalid_argument("row_reduce: ragged rows");
  }
  EchelonForm out;
  std::size_t next = 0;
  for (std::size_t col = 0; col < cols && next < rows.size(); ++col) {
    std::size_t pivot = next;
    while (pivot < rows.size() && rows[pivot][col].is_zero()) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[next], rows[pivot]);
    Scalar inv = rows[next][col].inverse();
    for (std::size_t c = col; c < cols; ++c) rows[next][c] *= inv;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == next || rows[r][col].is_zero()) continue;
      Scalar factor = rows[r][col];
      for (std::size_t c = col; c < cols; ++c) {
        if (!rows[next][c].is_zero()) rows[r][c] -= factor * rows[next][c];
      }
    }
    out.pivots.push_back(col);
    ++next;
  }
  rows.resize(next);
  out.rows = std::move(rows);
  return out;
}

std::size_t rank(const std::vector<Vector>& rows, std::size_t cols, const Field& field) {
  return row_reduce(rows, cols, field).rows.size();
}

std::vector<Vector> nullspace(const std::vector<Vector>& rows, std::size_t cols, const Field& field) {
  EchelonForm form = row_reduce(rows, cols, field);
  std::vector<bool> is_pivot(cols, false);
  for (auto p : form.pivots) is_pivot[p] = true;
  std::vector<Vector> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    Vector v = zero_vector(field, cols);
    v[free] = field.one();
    for (std::size_t i = 0; i < form.rows.size(); ++i) v[form.pivots[i]] = -form.rows[i][free];
    basis.push_back(std::move(v));
  }
  return row_reduce(std::move(basis), cols, field).rows;
}

std::optional<Vector> solve(const std::vector<Vector>& rows, std::size_t cols, const Vector& rhs,
                            const Field& field) {
  if (rhs.size() != rows.size()) throw std::invalid_argument("solve: rhs size mismatch");
  std::vector<Vector> augmented;
  augmented.reserve(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    Vector r = rows[i];
    r.push_back(rhs[i]);
    augmented.push_back(std::move(r));
  }
  EchelonForm form = row_reduce(std::move(augmented), cols + 1, field);
  Vector x = zero_vector(field, cols);
  for (std::size_t i = 0; i < form.rows.size(); ++i) {
    if (form.pivots[i] == cols) return std::nullopt;
    x[form.pivots[i]] = form.rows[i][cols];
  }
  return x;
}

Subspace::Subspace(Field field, std::size_t ambient_dimension) : field_(field), ambient_(ambient_dimension) {}

Subspace Subspace::span(Field field, std::size_t ambient_dimension, std::vector<Vector> vectors) {
  Subspace s(field, ambient_dimension);
  s.form_ = row_reduce(std::move(vectors), ambient_dimension, field);
  return s;
}

Vector Subspace::remainder(Vector v) const {
  if (v.size() != ambient_) throw std::invalid_argument("Subspace: vector has wrong length");
  for (std::size_t i = 0; i < form_.rows.size(); ++i) {
    Scalar c = v[form_.pivots[i]];
    if (c.is_zero()) continue;
    for (std::size_t col = 0; col < ambient_; ++col) {
      if (!form_.rows[i][col].is_zero()) v[col] -= c * form_.rows[i][col];
    }
  }
  return v;
}

bool Subspace::contains(const Vector& v) const {
  for (const auto& c : remainder(v)) {
    if (!c.is_zero()) return false;
  }
  return true;
}

std::optional<Vector> Subspace::coordinates(const Vector& v) const {
  if (!contains(v)) return std::nullopt;
  Vector coords;
  coords.reserve(form_.rows.size());
  for (auto p : form_.pivots) coords.push_back(v[p]);
  return coords;
}

bool operator==(const Subspace& a, const Subspace& b) {
  return a.ambient_ == b.ambient_ && a.field_ == b.field_ && a.form_.pivots == b.form_.pivots &&
         a.form_.rows == b.form_.rows;
}

void add_to(SparseVector& target, const Coord& key, const Scalar& value) {
  if (value.is_zero()) return;
  auto [it, inserted] = target.try_emplace(key, value);
  if (!inserted) {
    it->second += value;
    if (it->second.is_zero()) target.erase(it);
  }
}

std::size_t sparse_rank(std::span<const SparseVector> vectors, const Field& field) {
  std::map<Coord, std::size_t> columns;
  for (const auto& v : vectors) {
    for (const auto& [key, value] : v) columns.try_emplace(key, 0);
  }
  std::size_t index = 0;
  for (auto& [key, col] : columns) col = index++;
  std::vector<Vector> rows;
  rows.reserve(vectors.size());
  for (const auto& v : vectors) {
    Vector row = zero_vector(field, columns.size());
    for (const auto& [key, value] : v) row[columns.at(key)] = value;
    rows.push_back(std::move(row));
  }
  return rank(rows, columns.size(), field);
}

}  // namespace skh
