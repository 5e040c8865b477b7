#include "skewhecke/cocycle.hpp"

#include <stdexcept>

namespace skh {

namespace {

std::vector<Element> inverses_of(const Cocycle& chi) {
  std::vector<Element> out;
  for (std::size_t g = 0; g < chi.size(); ++g) {
    auto inv = inverse_element(chi[g]);
    if (!inv) throw std::invalid_argument("χ(" + std::to_string(g) + ") is not a unit");
    out.push_back(*inv);
  }
  return out;
}

}  // namespace

Report cocycle_report(const ContextPtr& ctx, const Cocycle& chi) {
  Report r("cocycle");
  const auto& g = *ctx->group();
  const auto& alpha = *ctx->action();
  if (chi.size() != g.order()) {
    r.add("size", false, std::to_string(chi.size()) + " values for a group of order " + std::to_string(g.order()));
    return r;
  }
  std::string witness;
  for (std::size_t a = 0; a < g.order() && witness.empty(); ++a) {
    for (std::size_t b = 0; b < g.order(); ++b) {
      int ab = g.multiply(static_cast<int>(a), static_cast<int>(b));
      if (chi[ab] != chi[a] * alpha.apply(static_cast<int>(a), chi[b])) {
        witness = "g=" + g.name(static_cast<int>(a)) + ", g'=" + g.name(static_cast<int>(b));
        break;
      }
    }
  }
  r.add("(a) cocycle identity", witness.empty(), witness);

  witness.clear();
  for (std::size_t a = 0; a < g.order(); ++a) {
    if (!inverse_element(chi[a])) {
      witness = "g=" + g.name(static_cast<int>(a));
      break;
    }
  }
  r.add("(b) values are units", witness.empty(), witness);

  witness.clear();
  auto one = Element::unit(ctx->algebra());
  for (int h : ctx->subgroup().elements()) {
    if (chi[h] != one) {
      witness = "h=" + g.name(h);
      break;
    }
  }
  r.add("(c) trivial on H", witness.empty(), witness);
  return r;
}

Cocycle trivial_cocycle(const GroupAction& alpha) {
  return Cocycle(alpha.group()->order(), Element::unit(alpha.algebra()));
}

Cocycle coboundary_from_unit(const GroupAction& alpha, const Element& u) {
  if (!inverse_element(u)) throw std::invalid_argument("u is not a unit");
  Cocycle out;
  for (std::size_t g = 0; g < alpha.group()->order(); ++g) {
    auto moved = inverse_element(alpha.apply(static_cast<int>(g), u));
    out.push_back(u * *moved);
  }
  return out;
}

Cocycle inner_cocycle(const GroupAction& alpha) {
  const auto* ga = dynamic_cast<const GroupAlgebra*>(alpha.algebra().get());
  if (!ga || ga->group()->order() != alpha.group()->order()) {
    throw std::invalid_argument("inner cocycle needs A = R[G]");
  }
  Cocycle out;
  for (std::size_t g = 0; g < alpha.group()->order(); ++g) {
    out.push_back(Element::basis(alpha.algebra(), Label{static_cast<std::int32_t>(g)}));
  }
  return out;
}

ActionPtr twisted_action(const ActionPtr& alpha, const Cocycle& chi) {
  auto inverses = inverses_of(chi);
  return std::make_shared<GroupAction>(
      alpha->group(), alpha->algebra(),
      [alpha, chi, inverses](int g, const Label& l) { return chi[g] * alpha->apply_label(g, l) * inverses[g]; },
      alpha->name() + " twisted");
}

CocycleTransport cocycle_transport(const ContextPtr& ctx, const Cocycle& chi) {
  CocycleTransport t;
  t.conditions = cocycle_report(ctx, chi);
  if (auto bad = t.conditions.first_failure()) {
    throw std::invalid_argument("cocycle condition " + bad->name + " fails: " + bad->detail);
  }
  t.chi = chi;
  t.source = ctx;
  HeckeContext::Options o;
  o.degree_cap = ctx->degree_cap();
  t.target = HeckeContext::make(twisted_action(ctx->action(), chi), ctx->subgroup(), o);
  auto inverses = inverses_of(chi);
  auto target = t.target;
  t.map = [target, inverses](const HeckeElement& phi) {
    const auto& cs = target->cosets();
    std::vector<Element> values;
    for (std::size_t o = 0; o < cs.orbit_count(); ++o) {
      int g = cs.representative(cs.orbit_representative(static_cast<int>(o)));
      values.push_back(phi.value(static_cast<int>(o)) * inverses[g]);
    }
    return hecke_from_values(target, std::move(values));
  };
  return t;
}

}  // namespace skh
