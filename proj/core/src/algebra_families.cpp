#include <algorithm>
#include <cctype>
#include <functional>
#include <stdexcept>

#include "skewhecke/algebra.hpp"

namespace skh {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

int parse_int(std::string_view s, std::string_view context) {
  s = trim(s);
  if (s.empty()) throw std::invalid_argument("bad label '" + std::string(context) + "'");
  int v = 0;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) throw std::invalid_argument("bad label '" + std::string(context) + "'");
    v = v * 10 + (c - '0');
  }
  return v;
}

int group_label(const Group& group, std::string_view text, std::string_view context) {
  auto g = group.find(trim(text));
  if (!g) throw std::invalid_argument("unknown group element in label '" + std::string(context) + "'");
  return *g;
}

constexpr std::string_view kTensor = "⊗";

}  // namespace

Terms GroundAlgebra::multiply(const Label&, const Label&) const { return {{Label{}, field().one()}}; }

Terms GroundAlgebra::unit() const { return {{Label{}, field().one()}}; }

std::string GroundAlgebra::format_label(const Label&) const { return "1"; }

Label GroundAlgebra::parse_label(std::string_view text) const {
  if (trim(text) != "1") throw std::invalid_argument("ground algebra label must be 1, got '" + std::string(text) + "'");
  return {};
}

GroupAlgebra::GroupAlgebra(Field field, GroupPtr group)
    : BasedAlgebra(field, "R[" + group->label() + "]"), group_(std::move(group)) {}

std::vector<Label> GroupAlgebra::basis() const {
  std::vector<Label> out;
  for (std::size_t g = 0; g < group_->order(); ++g) out.push_back({static_cast<std::int32_t>(g)});
  return out;
}

Terms GroupAlgebra::multiply(const Label& a, const Label& b) const {
  return {{Label{group_->multiply(a[0], b[0])}, field().one()}};
}

Terms GroupAlgebra::unit() const { return {{Label{0}, field().one()}}; }

bool GroupAlgebra::valid_label(const Label& label) const {
  return label.size() == 1 && label[0] >= 0 && static_cast<std::size_t>(label[0]) < group_->order();
}

std::string GroupAlgebra::format_label(const Label& label) const { return group_->name(label[0]); }

Label GroupAlgebra::parse_label(std::string_view text) const { return {group_label(*group_, text, text)}; }

FunctionAlgebra::FunctionAlgebra(Field field, GroupPtr group)
    : BasedAlgebra(field, "Fun(" + group->label() + ")"), group_(std::move(group)) {}

std::vector<Label> FunctionAlgebra::basis() const {
  std::vector<Label> out;
  for (std::size_t g = 0; g < group_->order(); ++g) out.push_back({static_cast<std::int32_t>(g)});
  return out;
}

Terms FunctionAlgebra::multiply(const Label& a, const Label& b) const {
  if (a != b) return {};
  return {{a, field().one()}};
}

Terms FunctionAlgebra::unit() const {
  Terms t;
  for (std::size_t g = 0; g < group_->order(); ++g) t.emplace(Label{static_cast<std::int32_t>(g)}, field().one());
  return t;
}

bool FunctionAlgebra::valid_label(const Label& label) const {
  return label.size() == 1 && label[0] >= 0 && static_cast<std::size_t>(label[0]) < group_->order();
}

std::string FunctionAlgebra::format_label(const Label& label) const { return "delta[" + group_->name(label[0]) + "]"; }

Label FunctionAlgebra::parse_label(std::string_view text) const {
  auto t = trim(text);
  if (!t.starts_with("delta[") || !t.ends_with("]")) throw std::invalid_argument("expected delta[g], got '" + std::string(text) + "'");
  return {group_label(*group_, t.substr(6, t.size() - 7), text)};
}

PolynomialAlgebra::PolynomialAlgebra(Field field, int variables, int enumeration_cap)
    : BasedAlgebra(field, "R[x1..x" + std::to_string(variables) + "]"), n_(variables), cap_(enumeration_cap) {
  if (variables < 1) throw std::invalid_argument("polynomial algebra needs at least one variable");
  if (enumeration_cap < 0) throw std::invalid_argument("degree cap must be nonnegative");
}

int PolynomialAlgebra::degree(const Label& label) const {
  int d = 0;
  for (int e : label) d += e;
  return d;
}

std::vector<Label> PolynomialAlgebra::basis_of_degree(int d) const {
  if (d > cap_) {
    throw std::out_of_range("degree " + std::to_string(d) + " is beyond the enumeration cap " + std::to_string(cap_));
  }
  std::vector<Label> out;
  if (d < 0) return out;
  Label current(static_cast<std::size_t>(n_), 0);
  // x1^d first, then decreasing in lex order.
  std::function<void(int, int)> fill = [&](int var, int remaining) {
    if (var == n_ - 1) {
      current[var] = remaining;
      out.push_back(current);
      return;
    }
    for (int e = remaining; e >= 0; --e) {
      current[var] = e;
      fill(var + 1, remaining - e);
    }
  };
  fill(0, d);
  return out;
}

Terms PolynomialAlgebra::multiply(const Label& a, const Label& b) const {
  Label c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i] + b[i];
  return {{std::move(c), field().one()}};
}

Terms PolynomialAlgebra::unit() const { return {{Label(static_cast<std::size_t>(n_), 0), field().one()}}; }

bool PolynomialAlgebra::valid_label(const Label& label) const {
  return label.size() == static_cast<std::size_t>(n_) &&
         std::all_of(label.begin(), label.end(), [](std::int32_t e) { return e >= 0; });
}

std::string PolynomialAlgebra::format_label(const Label& label) const {
  std::string out;
  for (std::size_t i = 0; i < label.size(); ++i) {
    if (label[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += "x" + std::to_string(i + 1);
    if (label[i] > 1) out += "^" + std::to_string(label[i]);
  }
  return out.empty() ? "1" : out;
}

Label PolynomialAlgebra::parse_label(std::string_view text) const {
  Label out(static_cast<std::size_t>(n_), 0);
  auto t = trim(text);
  if (t == "1") return out;
  std::size_t start = 0;
  while (start <= t.size()) {
    auto star = t.find('*', start);
    auto factor = trim(t.substr(start, star == std::string_view::npos ? std::string_view::npos : star - start));
    if (factor.empty() || factor.front() != 'x') throw std::invalid_argument("bad monomial '" + std::string(text) + "'");
    factor.remove_prefix(1);
    int exponent = 1;
    if (auto caret = factor.find('^'); caret != std::string_view::npos) {
      exponent = parse_int(factor.substr(caret + 1), text);
      factor = factor.substr(0, caret);
    }
    int var = parse_int(factor, text);
    if (var < 1 || var > n_) throw std::invalid_argument("variable out of range in '" + std::string(text) + "'");
    out[var - 1] += exponent;
    if (star == std::string_view::npos) break;
    start = star + 1;
  }
  return out;
}

MatrixAlgebra::MatrixAlgebra(Field field, int n) : BasedAlgebra(field, "M" + std::to_string(n)), n_(n) {
  if (n < 1) throw std::invalid_argument("matrix algebra needs n >= 1");
}

std::vector<Label> MatrixAlgebra::basis() const {
  std::vector<Label> out;
  for (int i = 0; i < n_; ++i) {
    for (int j = 0; j < n_; ++j) out.push_back({i, j});
  }
  return out;
}

Terms MatrixAlgebra::multiply(const Label& a, const Label& b) const {
  if (a[1] != b[0]) return {};
  return {{Label{a[0], b[1]}, field().one()}};
}

Terms MatrixAlgebra::unit() const {
  Terms t;
  for (int i = 0; i < n_; ++i) t.emplace(Label{i, i}, field().one());
  return t;
}

bool MatrixAlgebra::valid_label(const Label& label) const {
  return label.size() == 2 && label[0] >= 0 && label[0] < n_ && label[1] >= 0 && label[1] < n_;
}

std::string MatrixAlgebra::format_label(const Label& label) const {
  return "E[" + std::to_string(label[0] + 1) + "," + std::to_string(label[1] + 1) + "]";
}

Label MatrixAlgebra::parse_label(std::string_view text) const {
  auto t = trim(text);
  auto comma = t.find(',');
  if (!t.starts_with("E[") || !t.ends_with("]") || comma == std::string_view::npos) {
    throw std::invalid_argument("expected E[i,j], got '" + std::string(text) + "'");
  }
  Label out{parse_int(t.substr(2, comma - 2), text) - 1, parse_int(t.substr(comma + 1, t.size() - comma - 2), text) - 1};
  if (!valid_label(out)) throw std::invalid_argument("matrix unit out of range: '" + std::string(text) + "'");
  return out;
}

TensorAlgebra::TensorAlgebra(AlgebraPtr left, AlgebraPtr right)
    : BasedAlgebra(left->field(), left->name() + " ⊗ " + right->name()), left_(std::move(left)), right_(std::move(right)) {
  if (!(left_->field() == right_->field())) throw std::invalid_argument("tensor product of algebras over different fields");
}

Label TensorAlgebra::join(const Label& a, const Label& b) const {
  Label out = a;
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

std::pair<Label, Label> TensorAlgebra::split(const Label& label) const {
  auto mid = label.begin() + static_cast<std::ptrdiff_t>(left_->label_arity());
  return {Label(label.begin(), mid), Label(mid, label.end())};
}

std::vector<Label> TensorAlgebra::basis() const {
  std::vector<Label> out;
  for (const auto& a : left_->basis()) {
    for (const auto& b : right_->basis()) out.push_back(join(a, b));
  }
  return out;
}

int TensorAlgebra::degree(const Label& label) const {
  auto [a, b] = split(label);
  return left_->degree(a) + right_->degree(b);
}

std::vector<Label> TensorAlgebra::basis_of_degree(int d) const {
  std::vector<Label> out;
  for (int i = 0; i <= d; ++i) {
    auto lefts = left_->basis_of_degree(i);
    if (lefts.empty()) continue;
    auto rights = right_->basis_of_degree(d - i);
    for (const auto& a : lefts) {
      for (const auto& b : rights) out.push_back(join(a, b));
    }
  }
  return out;
}

Terms TensorAlgebra::multiply(const Label& x, const Label& y) const {
  auto [a, b] = split(x);
  auto [c, e] = split(y);
  Terms out;
  Terms left = left_->multiply(a, c);
  Terms right = right_->multiply(b, e);
  for (const auto& [l, cl] : left) {
    for (const auto& [r, cr] : right) out.emplace(join(l, r), cl * cr);
  }
  return out;
}

Terms TensorAlgebra::unit() const {
  Terms out;
  for (const auto& [l, cl] : left_->unit()) {
    for (const auto& [r, cr] : right_->unit()) out.emplace(join(l, r), cl * cr);
  }
  return out;
}

bool TensorAlgebra::valid_label(const Label& label) const {
  if (label.size() != label_arity()) return false;
  auto [a, b] = split(label);
  return left_->valid_label(a) && right_->valid_label(b);
}

std::string TensorAlgebra::format_label(const Label& label) const {
  auto [a, b] = split(label);
  return left_->format_label(a) + " " + std::string(kTensor) + " " + right_->format_label(b);
}

Label TensorAlgebra::parse_label(std::string_view text) const {
  for (auto pos = text.find(kTensor); pos != std::string_view::npos; pos = text.find(kTensor, pos + 1)) {
    try {
      Label a = left_->parse_label(text.substr(0, pos));
      Label b = right_->parse_label(text.substr(pos + kTensor.size()));
      return join(a, b);
    } catch (const std::invalid_argument&) {
    }
  }
  throw std::invalid_argument("bad tensor label '" + std::string(text) + "'");
}

OppositeAlgebra::OppositeAlgebra(AlgebraPtr base) : BasedAlgebra(base->field(), base->name() + "^op"), base_(std::move(base)) {}

AlgebraPtr make_ground(Field field) { return std::make_shared<GroundAlgebra>(field); }
AlgebraPtr make_group_algebra(Field field, GroupPtr group) { return std::make_shared<GroupAlgebra>(field, std::move(group)); }
AlgebraPtr make_functions(Field field, GroupPtr group) { return std::make_shared<FunctionAlgebra>(field, std::move(group)); }
AlgebraPtr make_polynomial(Field field, int variables, int enumeration_cap) {
  return std::make_shared<PolynomialAlgebra>(field, variables, enumeration_cap);
}
AlgebraPtr make_matrix(Field field, int n) { return std::make_shared<MatrixAlgebra>(field, n); }
AlgebraPtr make_tensor(AlgebraPtr left, AlgebraPtr right) {
  return std::make_shared<TensorAlgebra>(std::move(left), std::move(right));
}
AlgebraPtr make_opposite(AlgebraPtr base) { return std::make_shared<OppositeAlgebra>(std::move(base)); }

Element variable(const AlgebraPtr& polynomials, int i) {
  const auto* poly = dynamic_cast<const PolynomialAlgebra*>(polynomials.get());
  if (!poly || i < 1 || i > poly->variables()) throw std::invalid_argument("variable: not a polynomial variable");
  Label l(static_cast<std::size_t>(poly->variables()), 0);
  l[i - 1] = 1;
  return Element::basis(polynomials, l);
}

Element tensor_elements(const AlgebraPtr& tensor, const Element& a, const Element& b) {
  const auto* t = dynamic_cast<const TensorAlgebra*>(tensor.get());
  if (!t) throw std::invalid_argument("tensor_elements: not a tensor algebra");
  Element out(tensor);
  for (const auto& [la, ca] : a.terms()) {
    for (const auto& [lb, cb] : b.terms()) out.add_term(t->join(la, lb), ca * cb);
  }
  return out;
}

Element relabel_algebra(const Element& e, const AlgebraPtr& target) { return Element(target, e.terms()); }

}  // namespace skh
