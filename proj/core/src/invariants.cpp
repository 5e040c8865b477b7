#include "skewhecke/invariants.hpp"

#include <cctype>
#include <stdexcept>

#include "skewhecke/coset_space.hpp"

namespace skh {

Vector InvariantSpace::to_vector(const Element& e) const {
  Vector v = zero_vector(space.field(), labels.size());
  for (const auto& [label, c] : e.terms()) {
    auto it = index.find(label);
    if (it == index.end()) throw std::invalid_argument("element has a label outside degree " + std::to_string(degree));
    v[it->second] = c;
  }
  return v;
}

std::optional<Vector> InvariantSpace::coordinates(const Element& e) const {
  for (const auto& [label, c] : e.terms()) {
    if (!index.count(label)) return std::nullopt;
  }
  return space.coordinates(to_vector(e));
}

InvariantSpace invariant_space(const GroupAction& alpha, const Subgroup& subgroup, int degree) {
  const auto& a = alpha.algebra();
  const Field& field = a->field();
  InvariantSpace out;
  out.degree = degree;
  out.labels = a->basis_of_degree(degree);
  for (std::size_t i = 0; i < out.labels.size(); ++i) out.index.emplace(out.labels[i], i);
  const std::size_t n = out.labels.size();
  std::vector<Vector> rows;
  for (int s : generators_of(subgroup)) {
    std::vector<Vector> block(n, zero_vector(field, n));
    for (std::size_t j = 0; j < n; ++j) {
      Element img = alpha.apply_label(s, out.labels[j]);
      img.add_term(out.labels[j], -field.one());
      for (const auto& [label, c] : img.terms()) {
        auto it = out.index.find(label);
        if (it == out.index.end()) throw std::invalid_argument("action does not preserve degree " + std::to_string(degree));
        block[it->second][j] = c;
      }
    }
    for (auto& r : block) rows.push_back(std::move(r));
  }
  std::vector<Vector> null;
  if (rows.empty()) {
    for (std::size_t j = 0; j < n; ++j) {
      Vector v = zero_vector(field, n);
      v[j] = field.one();
      null.push_back(std::move(v));
    }
  } else {
    null = nullspace(rows, n, field);
  }
  out.space = Subspace::span(field, n, null);
  for (const auto& v : out.space.basis()) {
    Element e(a);
    for (std::size_t j = 0; j < n; ++j) e.add_term(out.labels[j], v[j]);
    out.basis.push_back(std::move(e));
  }
  return out;
}

Subspace averaging_image(const GroupAction& alpha, const Subgroup& subgroup, int degree) {
  const auto& a = alpha.algebra();
  const Field& field = a->field();
  Scalar inv = field.from_int(static_cast<std::int64_t>(subgroup.order())).inverse();
  auto labels = a->basis_of_degree(degree);
  std::map<Label, std::size_t> index;
  for (std::size_t i = 0; i < labels.size(); ++i) index.emplace(labels[i], i);
  std::vector<Vector> images;
  for (const auto& l : labels) {
    Vector v = zero_vector(field, labels.size());
    for (int s : subgroup.elements()) {
      auto image = alpha.apply_label(s, l);
      for (const auto& [label, c] : image.terms()) v[index.at(label)] += c * inv;
    }
    images.push_back(std::move(v));
  }
  return Subspace::span(field, labels.size(), std::move(images));
}

std::vector<Element> invariants_compute(const GroupAction& alpha, const Subgroup& subgroup, std::optional<int> max_degree) {
  const auto& a = alpha.algebra();
  if (!a->finite() && !max_degree) throw std::invalid_argument("invariants of a graded algebra need a degree bound");
  const int top = a->finite() ? 0 : *max_degree;
  const bool unit_order = !a->field().from_int(static_cast<std::int64_t>(subgroup.order())).is_zero();
  std::vector<Element> out;
  for (int d = 0; d <= top; ++d) {
    InvariantSpace space = invariant_space(alpha, subgroup, d);
    if (unit_order && !(averaging_image(alpha, subgroup, d) == space.space)) {
      throw std::logic_error("invariant nullspace and averaging image disagree in degree " + std::to_string(d));
    }
    out.insert(out.end(), space.basis.begin(), space.basis.end());
  }
  return out;
}

std::optional<int> fixed_violation(const GroupAction& alpha, const Subgroup& subgroup, const Element& a) {
  for (int s : subgroup.elements()) {
    if (alpha.apply(s, a) != a) return s;
  }
  return std::nullopt;
}

std::optional<Element> inverse_element(const Element& a) {
  const auto& alg = a.algebra();
  if (!alg->finite()) throw std::invalid_argument("inverse_element needs a finite algebra");
  const auto labels = alg->basis();
  std::map<Label, std::size_t> index;
  for (std::size_t i = 0; i < labels.size(); ++i) index.emplace(labels[i], i);
  const Field& field = alg->field();
  const std::size_t n = labels.size();
  // Columns: a * b_j.
  std::vector<Vector> rows(n, zero_vector(field, n));
  for (std::size_t j = 0; j < n; ++j) {
    Element col = a * Element::basis(alg, labels[j]);
    for (const auto& [label, c] : col.terms()) rows[index.at(label)][j] = c;
  }
  Vector rhs = zero_vector(field, n);
  for (const auto& [label, c] : alg->unit()) rhs[index.at(label)] = c;
  auto x = solve(rows, n, rhs, field);
  if (!x) return std::nullopt;
  Element inv(alg);
  for (std::size_t j = 0; j < n; ++j) inv.add_term(labels[j], (*x)[j]);
  if (inv * a != Element::unit(alg)) return std::nullopt;
  return inv;
}

InvariantSubalgebra::InvariantSubalgebra(ActionPtr alpha, Subgroup subgroup)
    : BasedAlgebra(alpha->algebra()->field(), alpha->algebra()->name() + "^S"), alpha_(std::move(alpha)),
      subgroup_(std::move(subgroup)) {
  if (subgroup_.parent() != alpha_->group()) throw std::invalid_argument("invariant subalgebra: subgroup of another group");
}

const InvariantSpace& InvariantSubalgebra::space(int degree) const {
  std::lock_guard lock(mutex_);
  auto it = spaces_.find(degree);
  if (it == spaces_.end()) {
    it = spaces_.emplace(degree, std::make_unique<InvariantSpace>(invariant_space(*alpha_, subgroup_, degree))).first;
  }
  return *it->second;
}

Element InvariantSubalgebra::embed_label(const Label& label) const { return space(label[0]).basis.at(label[1]); }

Element InvariantSubalgebra::embed(const Element& x) const {
  Element out(parent());
  for (const auto& [label, c] : x.terms()) out += c * embed_label(label);
  return out;
}

Element InvariantSubalgebra::restrict(const Element& a) const {
  Element out(ptr());
  std::map<int, Element> parts;
  for (const auto& [label, c] : a.terms()) {
    auto [it, inserted] = parts.try_emplace(parent()->degree(label), Element(parent()));
    it->second.add_term(label, c);
  }
  for (const auto& [d, part] : parts) {
    auto coords = space(d).coordinates(part);
    if (!coords) throw std::invalid_argument("element is not fixed by the subgroup: " + a.to_string());
    for (std::size_t i = 0; i < coords->size(); ++i) out.add_term({d, static_cast<std::int32_t>(i)}, (*coords)[i]);
  }
  return out;
}

std::vector<Label> InvariantSubalgebra::basis() const {
  if (!finite()) return BasedAlgebra::basis();
  return basis_of_degree(0);
}

std::vector<Label> InvariantSubalgebra::basis_of_degree(int d) const {
  if (finite() && d != 0) return {};
  std::vector<Label> out;
  for (std::size_t i = 0; i < space(d).basis.size(); ++i) out.push_back({d, static_cast<std::int32_t>(i)});
  return out;
}

Terms InvariantSubalgebra::multiply(const Label& a, const Label& b) const {
  return restrict(embed_label(a) * embed_label(b)).terms();
}

Terms InvariantSubalgebra::unit() const { return restrict(Element::unit(parent())).terms(); }

bool InvariantSubalgebra::valid_label(const Label& label) const {
  if (label.size() != 2 || label[0] < 0 || label[1] < 0) return false;
  if (finite() && label[0] != 0) return false;
  return static_cast<std::size_t>(label[1]) < space(label[0]).basis.size();
}

std::string InvariantSubalgebra::format_label(const Label& label) const {
  if (finite()) return "inv[" + std::to_string(label[1] + 1) + "]";
  return "inv[" + std::to_string(label[0]) + "," + std::to_string(label[1] + 1) + "]";
}

Label InvariantSubalgebra::parse_label(std::string_view text) const {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  if (!text.starts_with("inv[") || !text.ends_with("]")) throw std::invalid_argument("expected inv[...], got '" + std::string(text) + "'");
  std::string body(text.substr(4, text.size() - 5));
  Label out;
  try {
    if (auto comma = body.find(','); comma != std::string::npos) {
      out = {std::stoi(body.substr(0, comma)), std::stoi(body.substr(comma + 1)) - 1};
    } else {
      out = {0, std::stoi(body) - 1};
    }
  } catch (const std::exception&) {
    throw std::invalid_argument("bad invariant label '" + std::string(text) + "'");
  }
  if (!valid_label(out)) throw std::invalid_argument("invariant label out of range: '" + std::string(text) + "'");
  return out;
}

std::shared_ptr<const InvariantSubalgebra> make_invariant_subalgebra(ActionPtr alpha, Subgroup subgroup) {
  return std::make_shared<InvariantSubalgebra>(std::move(alpha), std::move(subgroup));
}

ActionPtr quotient_invariant_action(const ActionPtr& alpha, const QuotientGroup& quotient,
                                    std::shared_ptr<const InvariantSubalgebra> invariants) {
  if (invariants->action() != alpha) throw std::invalid_argument("invariants were built from another action");
  auto lift = quotient.lift;
  std::shared_ptr<const InvariantSubalgebra> inv = invariants;
  return std::make_shared<GroupAction>(
      quotient.group, invariants,
      [alpha, lift, inv](int s, const Label& l) { return inv->restrict(alpha->apply(lift[s], inv->embed_label(l))); },
      alpha->name() + "^N");
}

namespace {

std::pair<std::map<Label, std::size_t>, std::vector<Vector>> dense_rows(const std::vector<Element>& elements, const Field& field) {
  std::map<Label, std::size_t> columns;
  for (const auto& e : elements) {
    for (const auto& [label, c] : e.terms()) columns.try_emplace(label, 0);
  }
  std::size_t i = 0;
  for (auto& [label, col] : columns) col = i++;
  std::vector<Vector> rows;
  for (const auto& e : elements) {
    Vector v = zero_vector(field, columns.size());
    for (const auto& [label, c] : e.terms()) v[columns.at(label)] = c;
    rows.push_back(std::move(v));
  }
  return {std::move(columns), std::move(rows)};
}

}  // namespace

std::size_t element_rank(const std::vector<Element>& elements) {
  if (elements.empty()) return 0;
  const Field& field = elements.front().algebra()->field();
  auto [columns, rows] = dense_rows(elements, field);
  return rank(rows, columns.size(), field);
}

std::vector<Element> span_basis(const std::vector<Element>& elements) {
  if (elements.empty()) return {};
  const auto& alg = elements.front().algebra();
  auto [columns, rows] = dense_rows(elements, alg->field());
  std::vector<Label> labels(columns.size());
  for (const auto& [label, col] : columns) labels[col] = label;
  std::vector<Element> out;
  for (const auto& r : row_reduce(std::move(rows), labels.size(), alg->field()).rows) {
    Element e(alg);
    for (std::size_t j = 0; j < labels.size(); ++j) e.add_term(labels[j], r[j]);
    out.push_back(std::move(e));
  }
  return out;
}

}  // namespace skh
