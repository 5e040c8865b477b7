#include "skewhecke/algebra.hpp"

#include <ostream>
#include <stdexcept>

namespace skh {

std::vector<Label> BasedAlgebra::basis() const {
  throw std::logic_error(name_ + " has no finite basis; enumerate by degree");
}

std::vector<Label> BasedAlgebra::basis_of_degree(int d) const {
  if (!finite()) throw std::logic_error(name_ + " must override basis_of_degree");
  if (d == 0) return basis();
  return {};
}

std::vector<Label> BasedAlgebra::basis_up_to(int d) const {
  if (finite()) return basis();
  std::vector<Label> out;
  for (int i = 0; i <= d; ++i) {
    auto part = basis_of_degree(i);
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

void add_scaled(Terms& target, const Terms& terms, const Scalar& coeff) {
  if (coeff.is_zero()) return;
  for (const auto& [label, c] : terms) {
    Scalar v = c * coeff;
    auto [it, inserted] = target.try_emplace(label, v);
    if (!inserted) {
      it->second += v;
      if (it->second.is_zero()) target.erase(it);
    } else if (v.is_zero()) {
      target.erase(it);
    }
  }
}

Element::Element(AlgebraPtr algebra, Terms terms) : algebra_(std::move(algebra)) {
  for (auto& [label, c] : terms) {
    if (!c.is_zero()) terms_.emplace(label, std::move(c));
  }
}

Element Element::basis(const AlgebraPtr& algebra, const Label& label) {
  Element e(algebra);
  e.terms_.emplace(label, algebra->field().one());
  return e;
}

Element Element::unit(const AlgebraPtr& algebra) { return Element(algebra, algebra->unit()); }

Element Element::scalar(const AlgebraPtr& algebra, const Scalar& s) {
  Element e = unit(algebra);
  e *= s;
  return e;
}

Scalar Element::coefficient(const Label& label) const {
  auto it = terms_.find(label);
  if (it != terms_.end()) return it->second;
  return algebra_ ? algebra_->field().zero() : Scalar();
}

void Element::add_term(const Label& label, const Scalar& coeff) {
  if (coeff.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(label, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

std::optional<int> Element::homogeneous_degree() const {
  if (terms_.empty()) return std::nullopt;
  int d = algebra_->degree(terms_.begin()->first);
  for (const auto& [label, c] : terms_) {
    if (algebra_->degree(label) != d) return std::nullopt;
  }
  return d;
}

Element Element::homogeneous_part(int d) const {
  Element out(algebra_);
  for (const auto& [label, c] : terms_) {
    if (algebra_->degree(label) == d) out.terms_.emplace(label, c);
  }
  return out;
}

int Element::max_degree() const {
  int d = 0;
  for (const auto& [label, c] : terms_) d = std::max(d, algebra_->degree(label));
  return d;
}

void Element::check_algebra(const Element& other) const {
  if (algebra_ && other.algebra_ && algebra_ != other.algebra_) {
    throw std::invalid_argument("algebra mismatch: " + algebra_->name() + " vs " + other.algebra_->name());
  }
}

Element Element::operator-() const {
  Element out = *this;
  for (auto& [label, c] : out.terms_) c = -c;
  return out;
}

Element& Element::operator+=(const Element& other) {
  check_algebra(other);
  if (!algebra_) algebra_ = other.algebra_;
  for (const auto& [label, c] : other.terms_) add_term(label, c);
  return *this;
}

Element& Element::operator-=(const Element& other) {
  check_algebra(other);
  if (!algebra_) algebra_ = other.algebra_;
  for (const auto& [label, c] : other.terms_) add_term(label, -c);
  return *this;
}

Element& Element::operator*=(const Scalar& s) {
  if (s.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [label, c] : terms_) c *= s;
  return *this;
}

Element operator*(const Element& a, const Element& b) {
  a.check_algebra(b);
  const AlgebraPtr& alg = a.algebra_ ? a.algebra_ : b.algebra_;
  Element out(alg);
  if (a.terms_.empty() || b.terms_.empty()) return out;
  for (const auto& [la, ca] : a.terms_) {
    for (const auto& [lb, cb] : b.terms_) add_scaled(out.terms_, alg->multiply(la, lb), ca * cb);
  }
  return out;
}

bool operator==(const Element& a, const Element& b) {
  if (a.algebra_ && b.algebra_ && a.algebra_ != b.algebra_) return false;
  return a.terms_ == b.terms_;
}

std::string Element::to_string() const {
  std::string out = "[";
  bool first = true;
  for (const auto& [label, c] : terms_) {
    if (!first) out += ", ";
    first = false;
    out += "(" + algebra_->format_label(label) + ", " + c.to_string() + ")";
  }
  return out + "]";
}

std::ostream& operator<<(std::ostream& os, const Element& e) { return os << e.to_string(); }

std::vector<StructureRow> algebra_structure_constants(const BasedAlgebra& algebra, const std::vector<Label>& basis) {
  std::map<Label, std::size_t> index;
  for (std::size_t i = 0; i < basis.size(); ++i) index.emplace(basis[i], i);
  std::vector<StructureRow> rows;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    for (std::size_t j = 0; j < basis.size(); ++j) {
      std::map<std::size_t, Scalar> out;
      for (const auto& [label, c] : algebra.multiply(basis[i], basis[j])) {
        auto it = index.find(label);
        if (it == index.end()) throw std::invalid_argument("product leaves the given basis");
        out.emplace(it->second, c);
      }
      for (const auto& [k, c] : out) rows.push_back({i, j, k, c});
    }
  }
  return rows;
}

std::optional<std::string> check_associative_unital(const BasedAlgebra& algebra, const std::vector<Label>& labels) {
  AlgebraPtr alg = algebra.ptr();
  Element one = Element::unit(alg);
  for (const auto& a : labels) {
    Element ea = Element::basis(alg, a);
    if (one * ea != ea || ea * one != ea) return "unit fails on " + algebra.format_label(a);
    for (const auto& b : labels) {
      Element ab = ea * Element::basis(alg, b);
      for (const auto& c : labels) {
        Element ec = Element::basis(alg, c);
        if (ab * ec != ea * (Element::basis(alg, b) * ec)) {
          return "associativity fails on (" + algebra.format_label(a) + ", " + algebra.format_label(b) + ", " +
                 algebra.format_label(c) + ")";
        }
      }
    }
  }
  return std::nullopt;
}

}  // namespace skh
