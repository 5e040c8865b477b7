#include "skewhecke/skew_group.hpp"

#include "skewhecke/invariants.hpp"

namespace skh {

SkewGroupAlgebra::SkewGroupAlgebra(ActionPtr alpha)
    : BasedAlgebra(alpha->algebra()->field(), alpha->algebra()->name() + " x| " + alpha->group()->label()),
      alpha_(std::move(alpha)) {}

Label SkewGroupAlgebra::join(const Label& a, int g) const {
  Label out = a;
  out.push_back(g);
  return out;
}

std::pair<Label, int> SkewGroupAlgebra::split(const Label& label) const {
  return {Label(label.begin(), label.end() - 1), label.back()};
}

std::vector<Label> SkewGroupAlgebra::basis() const {
  std::vector<Label> out;
  for (const auto& a : coefficients()->basis()) {
    for (std::size_t g = 0; g < group()->order(); ++g) out.push_back(join(a, static_cast<int>(g)));
  }
  return out;
}

std::vector<Label> SkewGroupAlgebra::basis_of_degree(int d) const {
  std::vector<Label> out;
  for (const auto& a : coefficients()->basis_of_degree(d)) {
    for (std::size_t g = 0; g < group()->order(); ++g) out.push_back(join(a, static_cast<int>(g)));
  }
  return out;
}

Terms SkewGroupAlgebra::multiply(const Label& x, const Label& y) const {
  auto [a, g] = split(x);
  auto [b, k] = split(y);
  const auto& A = coefficients();
  Element prod = Element::basis(A, a) * alpha_->apply_label(g, b);
  int gk = group()->multiply(g, k);
  Terms out;
  for (const auto& [label, c] : prod.terms()) out.emplace(join(label, gk), c);
  return out;
}

Terms SkewGroupAlgebra::unit() const {
  Terms out;
  for (const auto& [label, c] : coefficients()->unit()) out.emplace(join(label, 0), c);
  return out;
}

bool SkewGroupAlgebra::valid_label(const Label& label) const {
  if (label.empty()) return false;
  auto [a, g] = split(label);
  return g >= 0 && static_cast<std::size_t>(g) < group()->order() && coefficients()->valid_label(a);
}

std::string SkewGroupAlgebra::format_label(const Label& label) const {
  auto [a, g] = split(label);
  return coefficients()->format_label(a) + " . " + group()->name(g);
}

Label SkewGroupAlgebra::parse_label(std::string_view text) const {
  auto dot = text.rfind(" . ");
  if (dot == std::string_view::npos) throw std::invalid_argument("expected 'label . g', got '" + std::string(text) + "'");
  std::string_view gname = text.substr(dot + 3);
  while (!gname.empty() && gname.front() == ' ') gname.remove_prefix(1);
  while (!gname.empty() && gname.back() == ' ') gname.remove_suffix(1);
  auto g = group()->find(gname);
  if (!g) throw std::invalid_argument("unknown group element in '" + std::string(text) + "'");
  return join(coefficients()->parse_label(text.substr(0, dot)), *g);
}

SkewPtr make_skew_group(ActionPtr alpha) { return std::make_shared<SkewGroupAlgebra>(std::move(alpha)); }

Element skew_element(const SkewPtr& skew, const Element& a, int g) {
  Element out(skew);
  for (const auto& [label, c] : a.terms()) out.add_term(skew->join(label, g), c);
  return out;
}

std::string skew_to_string(const Element& x) {
  if (x.is_zero()) return "0";
  std::string out;
  for (const auto& [label, c] : x.terms()) {
    if (!out.empty()) out += " + ";
    out += c.to_string() + " * " + x.algebra()->format_label(label);
  }
  return out;
}

Element hecke_idempotent(const SkewPtr& skew, const Subgroup& subgroup) {
  const Field& field = skew->field();
  Scalar order = field.from_int(static_cast<std::int64_t>(subgroup.order()));
  if (order.is_zero()) {
    throw ModelUnavailable("corner-ring model unavailable: |H| = " + std::to_string(subgroup.order()) +
                           " is not a unit in " + field.to_string());
  }
  Scalar inv = order.inverse();
  Element e(skew);
  Element one = Element::unit(skew->coefficients());
  for (int h : subgroup.elements()) e += skew_element(skew, one, h) * inv;
  if (e * e != e) throw std::logic_error("e_H is not idempotent");
  return e;
}

std::vector<Element> corner_basis(const SkewPtr& skew, const Element& e, int degree_cap) {
  std::vector<Element> generators;
  for (const auto& label : skew->basis_up_to(degree_cap)) generators.push_back(e * Element::basis(skew, label) * e);
  return span_basis(generators);
}

}  // namespace skh
