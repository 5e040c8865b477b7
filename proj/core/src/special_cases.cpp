#include "skewhecke/special_cases.hpp"

#include <stdexcept>

#include "skewhecke/coset_space.hpp"
#include "skewhecke/invariants.hpp"

namespace skh {

ClassicalHeckeAlgebra::ClassicalHeckeAlgebra(Field field, const Subgroup& subgroup)
    : BasedAlgebra(field, "H(" + subgroup.parent()->label() + ")") {
  CosetSpace cs(subgroup);
  const auto& g = *subgroup.parent();
  const std::size_t d = cs.orbit_count();
  for (std::size_t o = 0; o < d; ++o) names_.push_back(g.name(cs.representative(cs.orbit_representative(static_cast<int>(o)))));
  constants_.assign(d, std::vector<std::vector<long>>(d, std::vector<long>(d, 0)));
  for (std::size_t f = 0; f < d; ++f) {
    int x = cs.representative(cs.orbit_representative(static_cast<int>(f)));
    for (std::size_t m = 0; m < cs.size(); ++m) {
      int k = cs.representative(static_cast<int>(m));
      int a = cs.orbit_of(static_cast<int>(m));
      int b = cs.orbit_of(cs.coset_of(g.multiply(g.inverse(k), x)));
      ++constants_[a][b][f];
    }
  }
}

std::vector<Label> ClassicalHeckeAlgebra::basis() const {
  std::vector<Label> out;
  for (std::size_t o = 0; o < names_.size(); ++o) out.push_back({static_cast<std::int32_t>(o)});
  return out;
}

Terms ClassicalHeckeAlgebra::multiply(const Label& a, const Label& b) const {
  Terms out;
  for (std::size_t f = 0; f < names_.size(); ++f) {
    long c = constants_[a[0]][b[0]][f];
    if (c != 0) out.emplace(Label{static_cast<std::int32_t>(f)}, field().from_int(c));
  }
  return out;
}

Terms ClassicalHeckeAlgebra::unit() const { return {{Label{0}, field().one()}}; }

bool ClassicalHeckeAlgebra::commutative() const {
  for (std::size_t a = 0; a < names_.size(); ++a) {
    for (std::size_t b = 0; b < names_.size(); ++b) {
      if (constants_[a][b] != constants_[b][a]) return false;
    }
  }
  return true;
}

bool ClassicalHeckeAlgebra::valid_label(const Label& label) const {
  return label.size() == 1 && label[0] >= 0 && static_cast<std::size_t>(label[0]) < names_.size();
}

std::string ClassicalHeckeAlgebra::format_label(const Label& label) const { return "T[" + names_[label[0]] + "]"; }

Label ClassicalHeckeAlgebra::parse_label(std::string_view text) const {
  for (std::size_t o = 0; o < names_.size(); ++o) {
    if (text == "T[" + names_[o] + "]") return {static_cast<std::int32_t>(o)};
  }
  throw std::invalid_argument("unknown double coset label '" + std::string(text) + "'");
}

AlgebraPtr make_classical_hecke(Field field, const Subgroup& subgroup) {
  return std::make_shared<ClassicalHeckeAlgebra>(field, subgroup);
}

SparseVector element_coordinates(const Element& e) {
  SparseVector out;
  for (const auto& [label, c] : e.terms()) add_to(out, label, c);
  return out;
}

namespace {

std::vector<HeckeElement> module_elements(const ContextPtr& ctx) {
  std::vector<HeckeElement> out;
  for (std::size_t i = 0; i < ctx->dimension(); ++i) out.push_back(module_basis_element(ctx, i));
  return out;
}

}  // namespace

HeckeToAlgebra hecke_to_algebra_map(std::string name, const ContextPtr& ctx, AlgebraPtr target,
                                    std::function<Element(const HeckeElement&)> f,
                                    std::optional<std::size_t> target_dimension) {
  HeckeToAlgebra m;
  m.name = std::move(name);
  m.field = ctx->field();
  m.domain_basis = module_elements(ctx);
  m.apply = std::move(f);
  m.domain_multiply = [](const HeckeElement& a, const HeckeElement& b) { return convolve(a, b); };
  m.domain_add = [](const HeckeElement& a, const HeckeElement& b) { return a + b; };
  m.domain_unit = hecke_identity(ctx);
  m.codomain_multiply = [](const Element& a, const Element& b) { return a * b; };
  m.codomain_add = [](const Element& a, const Element& b) { return a + b; };
  m.codomain_unit = Element::unit(target);
  m.codomain_coordinates = element_coordinates;
  m.target_dimension = target_dimension;
  return m;
}

HeckeToHecke hecke_to_hecke_map(std::string name, const ContextPtr& source, const ContextPtr& target,
                                std::function<HeckeElement(const HeckeElement&)> f, bool surjective, bool anti) {
  HeckeToHecke m;
  m.name = std::move(name);
  m.field = source->field();
  m.domain_basis = module_elements(source);
  m.apply = std::move(f);
  m.domain_multiply = [](const HeckeElement& a, const HeckeElement& b) { return convolve(a, b); };
  m.domain_add = [](const HeckeElement& a, const HeckeElement& b) { return a + b; };
  m.domain_unit = hecke_identity(source);
  m.codomain_multiply = [](const HeckeElement& a, const HeckeElement& b) { return convolve(a, b); };
  m.codomain_add = [](const HeckeElement& a, const HeckeElement& b) { return a + b; };
  m.codomain_unit = hecke_identity(target);
  m.codomain_coordinates = hecke_coordinates;
  if (surjective) m.target_dimension = target->dimension();
  m.anti = anti;
  return m;
}

bool action_is_trivial(const HeckeContext& ctx) {
  const auto& a = ctx.algebra();
  for (std::size_t g = 0; g < ctx.group()->order(); ++g) {
    for (const auto& l : a->basis_up_to(ctx.max_degree())) {
      if (ctx.action()->apply_label(static_cast<int>(g), l) != Element::basis(a, l)) return false;
    }
  }
  return true;
}

HeckeToAlgebra classical_model(const ContextPtr& ctx) {
  if (!dynamic_cast<const GroundAlgebra*>(ctx->algebra().get())) throw std::invalid_argument("classical model needs A = R");
  auto target = make_classical_hecke(ctx->field(), ctx->subgroup());
  return hecke_to_algebra_map(
      "classical Hecke algebra", ctx, target,
      [target](const HeckeElement& phi) {
        Element out(target);
        for (std::size_t o = 0; o < phi.values().size(); ++o) {
          out.add_term(Label{static_cast<std::int32_t>(o)}, phi.value(static_cast<int>(o)).coefficient(Label{}));
        }
        return out;
      },
      target->dimension());
}

HeckeToAlgebra tensor_model(const ContextPtr& ctx) {
  if (!ctx->algebra()->finite() || !action_is_trivial(*ctx)) {
    throw std::invalid_argument("tensor model needs a finite algebra with the trivial action");
  }
  auto classical = make_classical_hecke(ctx->field(), ctx->subgroup());
  auto target = make_tensor(ctx->algebra(), classical);
  return hecke_to_algebra_map(
      "A ⊗ classical Hecke algebra", ctx, target,
      [target, classical](const HeckeElement& phi) {
        Element out(target);
        for (std::size_t o = 0; o < phi.values().size(); ++o) {
          out += tensor_elements(target, phi.value(static_cast<int>(o)),
                                 Element::basis(classical, Label{static_cast<std::int32_t>(o)}));
        }
        return out;
      },
      target->dimension());
}

HeckeToAlgebra invariant_model(const ContextPtr& ctx) {
  if (ctx->subgroup().order() != ctx->group()->order()) throw std::invalid_argument("invariant model needs H = G");
  auto target = make_invariant_subalgebra(ctx->action(), ctx->subgroup());
  return hecke_to_algebra_map(
      "A^G", ctx, target, [target](const HeckeElement& phi) { return target->restrict(phi.value(0)); },
      target->basis_up_to(ctx->max_degree()).size());
}

HeckeToAlgebra skew_group_model(const ContextPtr& ctx) {
  if (ctx->subgroup().order() != 1) throw std::invalid_argument("skew group model needs H = 1");
  auto target = make_skew_group(ctx->action());
  return hecke_to_algebra_map(
      "A x| G", ctx, target,
      [target](const HeckeElement& phi) {
        const auto& cs = phi.context()->cosets();
        auto values = hecke_expand(phi);
        Element out(target);
        for (std::size_t g = 0; g < phi.context()->group()->order(); ++g) {
          out += skew_element(target, values[cs.coset_of(static_cast<int>(g))], static_cast<int>(g));
        }
        return out;
      },
      target->basis_up_to(ctx->max_degree()).size());
}

HeckeToAlgebra normal_subgroup_model(const ContextPtr& ctx) {
  if (!is_normal(ctx->subgroup())) throw std::invalid_argument("normal subgroup model needs H normal in G");
  auto quotient = quotient_group(ctx->subgroup());
  auto invariants = make_invariant_subalgebra(ctx->action(), ctx->subgroup());
  auto target = make_skew_group(quotient_invariant_action(ctx->action(), quotient, invariants));
  auto projection = quotient.projection;
  return hecke_to_algebra_map(
      "A^H x| G/H", ctx, target,
      [target, invariants, projection](const HeckeElement& phi) {
        const auto& cs = phi.context()->cosets();
        auto values = hecke_expand(phi);
        Element out(target);
        for (std::size_t c = 0; c < cs.size(); ++c) {
          out += skew_element(target, invariants->restrict(values[c]), projection[cs.representative(static_cast<int>(c))]);
        }
        return out;
      },
      target->basis_up_to(ctx->max_degree()).size());
}

}  // namespace skh
