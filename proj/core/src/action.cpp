#include "skewhecke/action.hpp"

#include <stdexcept>

namespace skh {

GroupAction::GroupAction(GroupPtr group, AlgebraPtr algebra, LabelImage image, std::string name)
    : group_(std::move(group)), algebra_(std::move(algebra)), image_(std::move(image)), name_(std::move(name)) {}

Element GroupAction::apply_label(int g, const Label& label) const {
  auto key = std::make_pair(g, label);
  {
    std::lock_guard lock(mutex_);
    if (auto it = cache_.find(key); it != cache_.end()) return it->second;
  }
  Element image = image_(g, label);
  std::lock_guard lock(mutex_);
  return cache_.emplace(std::move(key), std::move(image)).first->second;
}

Element GroupAction::apply(int g, const Element& a) const {
  Element out(algebra_);
  if (g == 0) return Element(algebra_, a.terms());
  for (const auto& [label, c] : a.terms()) {
    Element img = apply_label(g, label);
    for (const auto& [l, d] : img.terms()) out.add_term(l, c * d);
  }
  return out;
}

ActionPtr trivial_action(GroupPtr group, AlgebraPtr algebra) {
  AlgebraPtr a = algebra;
  return std::make_shared<GroupAction>(
      std::move(group), std::move(algebra), [a](int, const Label& l) { return Element::basis(a, l); }, "trivial");
}

ActionPtr permute_variables(GroupPtr group, AlgebraPtr polynomials) {
  const auto* poly = dynamic_cast<const PolynomialAlgebra*>(polynomials.get());
  if (!poly) throw std::invalid_argument("permute_variables needs a polynomial algebra");
  if (!group->has_permutations() || group->permutation_degree() != static_cast<std::size_t>(poly->variables())) {
    throw std::invalid_argument("permute_variables needs a permutation group of degree " +
                                std::to_string(poly->variables()));
  }
  GroupPtr g = group;
  AlgebraPtr a = polynomials;
  return std::make_shared<GroupAction>(
      std::move(group), std::move(polynomials),
      [g, a](int s, const Label& l) {
        const auto& sigma = g->permutation(s);
        Label out(l.size(), 0);
        for (std::size_t i = 0; i < l.size(); ++i) out[sigma[i]] = l[i];
        return Element::basis(a, out);
      },
      "permute_variables");
}

ActionPtr action_on_generators(GroupPtr group, AlgebraPtr polynomials, std::vector<std::vector<Element>> images) {
  const auto* poly = dynamic_cast<const PolynomialAlgebra*>(polynomials.get());
  if (!poly) throw std::invalid_argument("action_on_generators needs a polynomial algebra");
  if (images.size() != group->order()) throw std::invalid_argument("need generator images for every group element");
  for (const auto& row : images) {
    if (row.size() != static_cast<std::size_t>(poly->variables())) throw std::invalid_argument("wrong number of generator images");
  }
  AlgebraPtr a = polynomials;
  auto table = std::make_shared<std::vector<std::vector<Element>>>(std::move(images));
  return std::make_shared<GroupAction>(
      std::move(group), std::move(polynomials),
      [a, table](int s, const Label& l) {
        Element out = Element::unit(a);
        for (std::size_t i = 0; i < l.size(); ++i) {
          for (int e = 0; e < l[i]; ++e) out = out * (*table)[s][i];
        }
        return out;
      },
      "on_generators");
}

ActionPtr left_translation(GroupPtr group, AlgebraPtr functions) {
  const auto* fun = dynamic_cast<const FunctionAlgebra*>(functions.get());
  if (!fun || fun->group()->order() != group->order()) {
    throw std::invalid_argument("left_translation needs the function algebra of the acting group");
  }
  GroupPtr g = group;
  AlgebraPtr a = functions;
  return std::make_shared<GroupAction>(
      std::move(group), std::move(functions),
      [g, a](int s, const Label& l) { return Element::basis(a, Label{g->multiply(s, l[0])}); }, "left_translation");
}

ActionPtr automorphism_action(GroupPtr group, AlgebraPtr group_algebra, AutomorphismTable table, std::string name) {
  const auto* ga = dynamic_cast<const GroupAlgebra*>(group_algebra.get());
  if (!ga) throw std::invalid_argument("automorphism action needs a group algebra");
  check_automorphism_action(*ga->group(), *group, table);
  AlgebraPtr a = group_algebra;
  auto t = std::make_shared<AutomorphismTable>(std::move(table));
  return std::make_shared<GroupAction>(
      std::move(group), std::move(group_algebra),
      [a, t](int s, const Label& l) { return Element::basis(a, Label{(*t)[s][l[0]]}); }, std::move(name));
}

ActionPtr conjugation_action(GroupPtr group, AlgebraPtr group_algebra) {
  const auto* ga = dynamic_cast<const GroupAlgebra*>(group_algebra.get());
  if (!ga || ga->group()->order() != group->order()) {
    throw std::invalid_argument("conjugation action needs the group algebra of the acting group");
  }
  AutomorphismTable table(group->order(), std::vector<int>(group->order()));
  for (std::size_t s = 0; s < group->order(); ++s) {
    for (std::size_t g = 0; g < group->order(); ++g) table[s][g] = group->conjugate(static_cast<int>(s), static_cast<int>(g));
  }
  return automorphism_action(std::move(group), std::move(group_algebra), std::move(table), "conjugation");
}

ActionPtr tensor_action(const DirectProduct& product, ActionPtr first, ActionPtr second, AlgebraPtr tensor) {
  const auto* t = dynamic_cast<const TensorAlgebra*>(tensor.get());
  if (!t || t->left() != first->algebra() || t->right() != second->algebra()) {
    throw std::invalid_argument("tensor_action needs the tensor of the two acted-on algebras");
  }
  AlgebraPtr a = tensor;
  auto proj1 = product.first;
  auto proj2 = product.second;
  return std::make_shared<GroupAction>(
      product.group, std::move(tensor),
      [a, t, proj1, proj2, first, second](int s, const Label& l) {
        auto [x, y] = t->split(l);
        return tensor_elements(a, first->apply_label(proj1[s], x), second->apply_label(proj2[s], y));
      },
      first->name() + " ⊗ " + second->name());
}

ActionPtr opposite_action(const ActionPtr& alpha, AlgebraPtr opposite) {
  const auto* op = dynamic_cast<const OppositeAlgebra*>(opposite.get());
  if (!op || op->base() != alpha->algebra()) throw std::invalid_argument("opposite_action needs A^op of the acted-on algebra");
  AlgebraPtr a = opposite;
  return std::make_shared<GroupAction>(
      alpha->group(), std::move(opposite),
      [a, alpha](int s, const Label& l) { return relabel_algebra(alpha->apply_label(s, l), a); }, alpha->name() + "^op");
}

ActionPtr restrict_action(const ActionPtr& alpha, const SubgroupAsGroup& subgroup) {
  auto to_parent = subgroup.to_parent;
  return std::make_shared<GroupAction>(
      subgroup.group, alpha->algebra(),
      [alpha, to_parent](int s, const Label& l) { return alpha->apply_label(to_parent[s], l); },
      alpha->name() + "|" + subgroup.group->label());
}

Report verify_action(const GroupAction& alpha, int degree_cap) {
  Report report("action " + alpha.name());
  const auto& g = *alpha.group();
  const auto& a = alpha.algebra();
  const auto labels = a->basis_up_to(degree_cap);
  auto fmt = [&](const Label& l) { return a->format_label(l); };

  std::string witness;
  for (const auto& l : labels) {
    if (alpha.apply_label(0, l) != Element::basis(a, l)) {
      witness = "alpha_id(" + fmt(l) + ") != " + fmt(l);
      break;
    }
  }
  report.add("identity", witness.empty(), witness);

  witness.clear();
  for (std::size_t s = 0; s < g.order() && witness.empty(); ++s) {
    for (std::size_t k = 0; k < g.order() && witness.empty(); ++k) {
      int sk = g.multiply(static_cast<int>(s), static_cast<int>(k));
      for (const auto& l : labels) {
        if (alpha.apply(static_cast<int>(s), alpha.apply_label(static_cast<int>(k), l)) != alpha.apply_label(sk, l)) {
          witness = "g=" + g.name(static_cast<int>(s)) + ", k=" + g.name(static_cast<int>(k)) + ", label " + fmt(l);
          break;
        }
      }
    }
  }
  report.add("composition", witness.empty(), witness);

  witness.clear();
  Element one = Element::unit(a);
  for (std::size_t s = 0; s < g.order(); ++s) {
    if (alpha.apply(static_cast<int>(s), one) != one) {
      witness = "g=" + g.name(static_cast<int>(s));
      break;
    }
  }
  report.add("unit", witness.empty(), witness);

  witness.clear();
  for (std::size_t s = 0; s < g.order() && witness.empty(); ++s) {
    for (const auto& x : labels) {
      if (!witness.empty()) break;
      for (const auto& y : labels) {
        if (a->degree(x) + a->degree(y) > degree_cap && a->graded()) continue;
        Element lhs = alpha.apply(static_cast<int>(s), Element::basis(a, x) * Element::basis(a, y));
        Element rhs = alpha.apply_label(static_cast<int>(s), x) * alpha.apply_label(static_cast<int>(s), y);
        if (lhs != rhs) {
          witness = "g=" + g.name(static_cast<int>(s)) + " on (" + fmt(x) + ", " + fmt(y) + ")";
          break;
        }
      }
    }
  }
  report.add("multiplicative", witness.empty(), witness);

  if (a->graded()) {
    witness.clear();
    for (std::size_t s = 0; s < g.order() && witness.empty(); ++s) {
      for (const auto& l : labels) {
        Element img = alpha.apply_label(static_cast<int>(s), l);
        auto d = img.homogeneous_degree();
        if (!img.is_zero() && (!d || *d != a->degree(l))) {
          witness = "g=" + g.name(static_cast<int>(s)) + " sends " + fmt(l) + " to " + img.to_string();
          break;
        }
      }
    }
    report.add("degree", witness.empty(), witness);
  }
  return report;
}

}  // namespace skh
