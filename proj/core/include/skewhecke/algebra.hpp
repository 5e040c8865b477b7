#pragma once

// Based algebras: an algebra over a Field with a distinguished basis, given by
// a product on basis labels. Elements are sparse label -> scalar maps.

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "skewhecke/group.hpp"
#include "skewhecke/scalar.hpp"

namespace skh {

using Label = std::vector<std::int32_t>;
using Terms = std::map<Label, Scalar>;

class BasedAlgebra;
using AlgebraPtr = std::shared_ptr<const BasedAlgebra>;

class BasedAlgebra : public std::enable_shared_from_this<BasedAlgebra> {
 public:
  BasedAlgebra(Field field, std::string name) : field_(field), name_(std::move(name)) {}
  virtual ~BasedAlgebra() = default;
  BasedAlgebra(const BasedAlgebra&) = delete;
  BasedAlgebra& operator=(const BasedAlgebra&) = delete;

  const Field& field() const { return field_; }
  const std::string& name() const { return name_; }

  /// True when basis() lists a finite basis.
  virtual bool finite() const = 0;
  virtual std::vector<Label> basis() const;
  std::size_t dimension() const { return basis().size(); }

  virtual bool graded() const { return false; }
  virtual int degree(const Label& /*label*/) const { return 0; }
  /// Basis labels of degree d. Finite ungraded algebras sit in degree 0.
  virtual std::vector<Label> basis_of_degree(int d) const;
  /// basis() for finite algebras, otherwise all labels of degree <= d.
  std::vector<Label> basis_up_to(int d) const;

  virtual Terms multiply(const Label& a, const Label& b) const = 0;
  virtual Terms unit() const = 0;
  virtual bool commutative() const = 0;

  virtual std::size_t label_arity() const = 0;
  virtual bool valid_label(const Label& label) const = 0;
  virtual std::string format_label(const Label& label) const = 0;
  /// Throws std::invalid_argument on unknown labels.
  virtual Label parse_label(std::string_view text) const = 0;

  AlgebraPtr ptr() const { return shared_from_this(); }

 private:
  Field field_;
  std::string name_;
};

class Element {
 public:
  Element() = default;
  explicit Element(AlgebraPtr algebra) : algebra_(std::move(algebra)) {}
  Element(AlgebraPtr algebra, Terms terms);

  static Element basis(const AlgebraPtr& algebra, const Label& label);
  static Element unit(const AlgebraPtr& algebra);
  static Element scalar(const AlgebraPtr& algebra, const Scalar& s);

  const AlgebraPtr& algebra() const { return algebra_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Scalar coefficient(const Label& label) const;
  void add_term(const Label& label, const Scalar& coeff);

  /// Degree when every term has the same degree; nullopt otherwise or for zero.
  std::optional<int> homogeneous_degree() const;
  Element homogeneous_part(int d) const;
  int max_degree() const;

  Element operator-() const;
  Element& operator+=(const Element& other);
  Element& operator-=(const Element& other);
  Element& operator*=(const Scalar& s);
  friend Element operator+(Element a, const Element& b) { return a += b; }
  friend Element operator-(Element a, const Element& b) { return a -= b; }
  friend Element operator*(const Element& a, const Element& b);
  friend Element operator*(const Scalar& s, Element a) { return a *= s; }
  friend Element operator*(Element a, const Scalar& s) { return a *= s; }

  /// Equal terms and the same algebra (a default-constructed zero matches any zero).
  friend bool operator==(const Element& a, const Element& b);
  friend bool operator!=(const Element& a, const Element& b) { return !(a == b); }

  /// `[(label, coeff), ...]`, `[]` for zero.
  std::string to_string() const;

 private:
  void check_algebra(const Element& other) const;

  AlgebraPtr algebra_;
  Terms terms_;
};

std::ostream& operator<<(std::ostream& os, const Element& e);

/// Accumulates coeff * terms into target, dropping zeros.
void add_scaled(Terms& target, const Terms& terms, const Scalar& coeff);

// ---- families -------------------------------------------------------------

/// The field itself; one basis label {} printed "1".
class GroundAlgebra final : public BasedAlgebra {
 public:
  explicit GroundAlgebra(Field field) : BasedAlgebra(field, "ground") {}
  bool finite() const override { return true; }
  std::vector<Label> basis() const override { return {Label{}}; }
  Terms multiply(const Label& a, const Label& b) const override;
  Terms unit() const override;
  bool commutative() const override { return true; }
  std::size_t label_arity() const override { return 0; }
  bool valid_label(const Label& label) const override { return label.empty(); }
  std::string format_label(const Label& label) const override;
  Label parse_label(std::string_view text) const override;
};

/// R[K]: basis the elements of K, labels {k}, printed by element name.
class GroupAlgebra final : public BasedAlgebra {
 public:
  GroupAlgebra(Field field, GroupPtr group);
  const GroupPtr& group() const { return group_; }
  bool finite() const override { return true; }
  std::vector<Label> basis() const override;
  Terms multiply(const Label& a, const Label& b) const override;
  Terms unit() const override;
  bool commutative() const override { return group_->abelian(); }
  std::size_t label_arity() const override { return 1; }
  bool valid_label(const Label& label) const override;
  std::string format_label(const Label& label) const override;
  Label parse_label(std::string_view text) const override;

 private:
  GroupPtr group_;
};

/// R-valued functions on G with pointwise product; basis delta[g].
class FunctionAlgebra final : public BasedAlgebra {
 public:
  FunctionAlgebra(Field field, GroupPtr group);
  const GroupPtr& group() const { return group_; }
  bool finite() const override { return true; }
  std::vector<Label> basis() const override;
  Terms multiply(const Label& a, const Label& b) const override;
  Terms unit() const override;
  bool commutative() const override { return true; }
  std::size_t label_arity() const override { return 1; }
  bool valid_label(const Label& label) const override;
  std::string format_label(const Label& label) const override;
  Label parse_label(std::string_view text) const override;

 private:
  GroupPtr group_;
};

/// R[x1..xn]; labels are exponent vectors. Arithmetic is unbounded, only basis
/// enumeration stops at `enumeration_cap`.
class PolynomialAlgebra final : public BasedAlgebra {
 public:
  PolynomialAlgebra(Field field, int variables, int enumeration_cap);
  int variables() const { return n_; }
  int enumeration_cap() const { return cap_; }
  bool finite() const override { return false; }
  bool graded() const override { return true; }
  int degree(const Label& label) const override;
  std::vector<Label> basis_of_degree(int d) const override;
  Terms multiply(const Label& a, const Label& b) const override;
  Terms unit() const override;
  bool commutative() const override { return true; }
  std::size_t label_arity() const override { return static_cast<std::size_t>(n_); }
  bool valid_label(const Label& label) const override;
  std::string format_label(const Label& label) const override;
  Label parse_label(std::string_view text) const override;

 private:
  int n_;
  int cap_;
};

/// M_n(R); labels {i, j} (0-based), printed E[i,j] (1-based).
class MatrixAlgebra final : public BasedAlgebra {
 public:
  MatrixAlgebra(Field field, int n);
  int size() const { return n_; }
  bool finite() const override { return true; }
  std::vector<Label> basis() const override;
  Terms multiply(const Label& a, const Label& b) const override;
  Terms unit() const override;
  bool commutative() const override { return n_ == 1; }
  std::size_t label_arity() const override { return 2; }
  bool valid_label(const Label& label) const override;
  std::string format_label(const Label& label) const override;
  Label parse_label(std::string_view text) const override;

 private:
  int n_;
};

/// A ⊗ B; labels are concatenations, printed "a ⊗ b". Graded when either
/// factor is, with degrees added.
class TensorAlgebra final : public BasedAlgebra {
 public:
  TensorAlgebra(AlgebraPtr left, AlgebraPtr right);
  const AlgebraPtr& left() const { return left_; }
  const AlgebraPtr& right() const { return right_; }
  Label join(const Label& a, const Label& b) const;
  std::pair<Label, Label> split(const Label& label) const;

  bool finite() const override { return left_->finite() && right_->finite(); }
  std::vector<Label> basis() const override;
  bool graded() const override { return left_->graded() || right_->graded(); }
  int degree(const Label& label) const override;
  std::vector<Label> basis_of_degree(int d) const override;
  Terms multiply(const Label& a, const Label& b) const override;
  Terms unit() const override;
  bool commutative() const override { return left_->commutative() && right_->commutative(); }
  std::size_t label_arity() const override { return left_->label_arity() + right_->label_arity(); }
  bool valid_label(const Label& label) const override;
  std::string format_label(const Label& label) const override;
  Label parse_label(std::string_view text) const override;

 private:
  AlgebraPtr left_;
  AlgebraPtr right_;
};

/// A^op: same basis, reversed product.
class OppositeAlgebra final : public BasedAlgebra {
 public:
  explicit OppositeAlgebra(AlgebraPtr base);
  const AlgebraPtr& base() const { return base_; }
  bool finite() const override { return base_->finite(); }
  std::vector<Label> basis() const override { return base_->basis(); }
  bool graded() const override { return base_->graded(); }
  int degree(const Label& label) const override { return base_->degree(label); }
  std::vector<Label> basis_of_degree(int d) const override { return base_->basis_of_degree(d); }
  Terms multiply(const Label& a, const Label& b) const override { return base_->multiply(b, a); }
  Terms unit() const override { return base_->unit(); }
  bool commutative() const override { return base_->commutative(); }
  std::size_t label_arity() const override { return base_->label_arity(); }
  bool valid_label(const Label& label) const override { return base_->valid_label(label); }
  std::string format_label(const Label& label) const override { return base_->format_label(label); }
  Label parse_label(std::string_view text) const override { return base_->parse_label(text); }

 private:
  AlgebraPtr base_;
};

AlgebraPtr make_ground(Field field);
AlgebraPtr make_group_algebra(Field field, GroupPtr group);
AlgebraPtr make_functions(Field field, GroupPtr group);
AlgebraPtr make_polynomial(Field field, int variables, int enumeration_cap);
AlgebraPtr make_matrix(Field field, int n);
AlgebraPtr make_tensor(AlgebraPtr left, AlgebraPtr right);
AlgebraPtr make_opposite(AlgebraPtr base);

/// x_i (1-based) in a polynomial algebra.
Element variable(const AlgebraPtr& polynomials, int i);
/// a ⊗ b in a TensorAlgebra.
Element tensor_elements(const AlgebraPtr& tensor, const Element& a, const Element& b);
/// The same terms read in another algebra with identical labels (e.g. A and A^op).
Element relabel_algebra(const Element& e, const AlgebraPtr& target);

/// Structure constants of a finite algebra as rows (i, j, k, c) over basis().
struct StructureRow {
  std::size_t i, j, k;
  Scalar coeff;
  friend bool operator==(const StructureRow&, const StructureRow&) = default;
};
std::vector<StructureRow> algebra_structure_constants(const BasedAlgebra& algebra, const std::vector<Label>& basis);

/// First failing associativity or unit witness over the given labels, if any.
std::optional<std::string> check_associative_unital(const BasedAlgebra& algebra, const std::vector<Label>& labels);

}  // namespace skh
