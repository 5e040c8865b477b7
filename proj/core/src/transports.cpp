#include "skewhecke/transports.hpp"

#include <algorithm>
#include <stdexcept>

#include "skewhecke/matrix_model.hpp"

namespace skh {

namespace {

HeckeContext::Options options_like(const ContextPtr& ctx, bool verify = true) {
  HeckeContext::Options o;
  o.degree_cap = ctx->degree_cap();
  o.verify_action = verify;
  return o;
}

// Target values at orbit representatives, from a function of the representative coset.
template <class F>
HeckeElement from_rep_values(const ContextPtr& target, F&& value_at) {
  const auto& cs = target->cosets();
  std::vector<Element> values;
  for (std::size_t o = 0; o < cs.orbit_count(); ++o) {
    values.push_back(value_at(cs.orbit_representative(static_cast<int>(o))));
  }
  return hecke_from_values(target, std::move(values));
}

}  // namespace

HeckeToHecke HeckeTransport::algebra_map(std::string name, bool onto, bool anti) const {
  return hecke_to_hecke_map(std::move(name), source, target, map, onto, anti);
}

QuotientTransport quotient_transport(const ContextPtr& ctx, const Subgroup& normal) {
  if (normal.parent() != ctx->group() || !is_normal(normal)) throw std::invalid_argument("N must be normal in G");
  if (!is_subgroup_of(normal, ctx->subgroup())) throw std::invalid_argument("N must lie in H");
  QuotientTransport t;
  t.source = ctx;
  t.quotient = quotient_group(normal);
  t.invariants = make_invariant_subalgebra(ctx->action(), normal);
  auto beta = quotient_invariant_action(ctx->action(), t.quotient, t.invariants);
  t.target = HeckeContext::make(beta, image_in_quotient(t.quotient, ctx->subgroup()), options_like(ctx));
  auto target = t.target;
  auto q = t.quotient;
  auto inv = t.invariants;
  t.map = [target, q, inv](const HeckeElement& phi) {
    const auto& src = phi.context()->cosets();
    auto values = hecke_expand(phi);
    return from_rep_values(target, [&](int c) {
      int g = q.lift[target->cosets().representative(c)];
      return inv->restrict(values[src.coset_of(g)]);
    });
  };
  t.inverse = [ctx, q, inv](const HeckeElement& psi) {
    const auto& tgt = psi.context()->cosets();
    auto values = hecke_expand(psi);
    return from_rep_values(ctx, [&](int c) {
      int g = ctx->cosets().representative(c);
      return inv->embed(values[tgt.coset_of(q.projection[g])]);
    });
  };
  return t;
}

AlgebraMap<HeckeTensor, HeckeElement> ProductTransport::algebra_map() const {
  AlgebraMap<HeckeTensor, HeckeElement> m;
  m.name = "product";
  m.field = target->field();
  const int cap = target->max_degree();
  for (const auto& a : first->module_basis()) {
    for (const auto& b : second->module_basis()) {
      if (a.degree + b.degree > cap) continue;
      auto pa = module_basis_element(first, first->basis_position(a.degree, a.orbit, a.index).value());
      auto pb = module_basis_element(second, second->basis_position(b.degree, b.orbit, b.index).value());
      m.domain_basis.push_back({{pa, pb}});
    }
  }
  m.apply = map;
  m.domain_multiply = [](const HeckeTensor& x, const HeckeTensor& y) {
    HeckeTensor out;
    for (const auto& [a, b] : x) {
      for (const auto& [c, d] : y) out.emplace_back(convolve(a, c), convolve(b, d));
    }
    return out;
  };
  m.domain_add = [](HeckeTensor x, const HeckeTensor& y) {
    x.insert(x.end(), y.begin(), y.end());
    return x;
  };
  m.domain_unit = {{hecke_identity(first), hecke_identity(second)}};
  m.codomain_multiply = [](const HeckeElement& a, const HeckeElement& b) { return convolve(a, b); };
  m.codomain_add = [](const HeckeElement& a, const HeckeElement& b) { return a + b; };
  m.codomain_unit = hecke_identity(target);
  m.codomain_coordinates = hecke_coordinates;
  m.target_dimension = target->dimension();
  return m;
}

ProductTransport product_transport(const ContextPtr& first, const ContextPtr& second) {
  ProductTransport t;
  t.first = first;
  t.second = second;
  t.product = direct_product(first->group(), second->group());
  auto tensor = make_tensor(first->algebra(), second->algebra());
  auto alpha = tensor_action(t.product, first->action(), second->action(), tensor);
  std::vector<int> h;
  for (int a : first->subgroup().elements()) {
    for (int b : second->subgroup().elements()) h.push_back(t.product.element(a, b));
  }
  std::sort(h.begin(), h.end());
  // Graded factors bound the target cap so every target degree splits into factor degrees.
  HeckeContext::Options o;
  o.degree_cap = first->degree_cap();
  if (first->algebra()->graded() && second->algebra()->graded()) {
    o.degree_cap = std::min(first->max_degree(), second->max_degree());
  } else if (second->algebra()->graded()) {
    o.degree_cap = second->max_degree();
  }
  t.target = HeckeContext::make(alpha, Subgroup(t.product.group, h), o);
  auto target = t.target;
  auto product = t.product;
  t.map = [target, product, tensor](const HeckeTensor& x) {
    HeckeElement out = hecke_zero(target);
    for (const auto& [a, b] : x) {
      const auto& ca = a.context()->cosets();
      const auto& cb = b.context()->cosets();
      auto va = hecke_expand(a);
      auto vb = hecke_expand(b);
      out += from_rep_values(target, [&](int c) {
        int g = target->cosets().representative(c);
        return tensor_elements(tensor, va[ca.coset_of(product.first[g])], vb[cb.coset_of(product.second[g])]);
      });
    }
    return out;
  };
  return t;
}

IntermediateEmbedding intermediate_embed(const ContextPtr& ctx, const Subgroup& intermediate) {
  if (!is_subgroup_of(ctx->subgroup(), intermediate)) throw std::invalid_argument("H must lie in K");
  IntermediateEmbedding t;
  t.intermediate = subgroup_as_group(intermediate);
  auto alpha = restrict_action(ctx->action(), t.intermediate);
  t.source = HeckeContext::make(alpha, pull_back(t.intermediate, ctx->subgroup()), options_like(ctx, false));
  t.target = ctx;
  auto source = t.source;
  auto k = t.intermediate;
  t.map = [ctx, k](const HeckeElement& phi) {
    const auto& small = phi.context()->cosets();
    auto values = hecke_expand(phi);
    return from_rep_values(ctx, [&](int c) {
      auto local = k.from_parent(ctx->cosets().representative(c));
      if (!local) return Element(ctx->algebra());
      return values[small.coset_of(*local)];
    });
  };
  return t;
}

HeckeTransport conjugate_transport(const ContextPtr& ctx, int s) {
  HeckeTransport t;
  t.source = ctx;
  t.target = HeckeContext::make(ctx->action(), conjugate_subgroup(ctx->subgroup(), s), options_like(ctx, false));
  const auto& g = *ctx->group();
  const auto& src = ctx->cosets();
  const auto& tgt = t.target->cosets();
  std::vector<int> tau(src.size());
  for (std::size_t c = 0; c < src.size(); ++c) {
    tau[c] = tgt.coset_of(g.multiply(src.representative(static_cast<int>(c)), g.inverse(s)));
  }
  for (std::size_t x = 0; x < g.order(); ++x) {
    for (std::size_t c = 0; c < src.size(); ++c) {
      if (tau[src.act(static_cast<int>(x), static_cast<int>(c))] != tgt.act(static_cast<int>(x), tau[c])) {
        throw std::logic_error("coset relabelling is not G-equivariant");
      }
    }
  }
  auto target = t.target;
  t.map = [target, tau](const HeckeElement& phi) {
    auto m = to_matrix(phi);
    HeckeMatrix out = zero_matrix(target);
    for (std::size_t r = 0; r < m.n; ++r) {
      for (std::size_t c = 0; c < m.n; ++c) out.at(tau[r], tau[c]) = m.at(r, c);
    }
    return from_matrix(out);
  };
  return t;
}

SemidirectTransport semidirect_transport(const ContextPtr& ctx) {
  const auto* ga = dynamic_cast<const GroupAlgebra*>(ctx->algebra().get());
  if (!ga) throw std::invalid_argument("semidirect transport needs A = R[N]");
  const auto& n = ga->group();
  const auto& k = ctx->group();
  AutomorphismTable theta(k->order(), std::vector<int>(n->order()));
  for (std::size_t g = 0; g < k->order(); ++g) {
    for (std::size_t x = 0; x < n->order(); ++x) {
      auto img = ctx->action()->apply_label(static_cast<int>(g), Label{static_cast<std::int32_t>(x)});
      if (img.terms().size() != 1 || img.terms().begin()->second != ctx->field().one()) {
        throw std::invalid_argument("α does not permute the group basis");
      }
      theta[g][x] = img.terms().begin()->first[0];
    }
  }
  check_automorphism_action(*n, *k, theta);
  SemidirectTransport t;
  t.source = ctx;
  t.product = semidirect_product(n, k, theta);
  std::vector<int> h;
  for (int x : ctx->subgroup().elements()) h.push_back(t.product.embed_complement[x]);
  std::sort(h.begin(), h.end());
  auto ground = make_ground(ctx->field());
  t.target = HeckeContext::make(trivial_action(t.product.group, ground), Subgroup(t.product.group, h),
                                options_like(ctx, false));
  auto target = t.target;
  const int order_n = static_cast<int>(n->order());
  t.map = [target, ground, order_n](const HeckeElement& phi) {
    const auto& src = phi.context()->cosets();
    auto values = hecke_expand(phi);
    return from_rep_values(target, [&](int c) {
      int x = target->cosets().representative(c);
      const auto& v = values[src.coset_of(x / order_n)];
      return Element::scalar(ground, v.coefficient(Label{x % order_n}));
    });
  };
  return t;
}

ContextPtr opposite_context(const ContextPtr& ctx) {
  auto op = make_opposite(ctx->algebra());
  return HeckeContext::make(opposite_action(ctx->action(), op), ctx->subgroup(), options_like(ctx, false));
}

HeckeTransport opposite_transport(const ContextPtr& ctx) {
  HeckeTransport t;
  t.source = ctx;
  t.target = opposite_context(ctx);
  auto target = t.target;
  t.map = [target](const HeckeElement& phi) {
    const auto& src = phi.context()->cosets();
    const auto& g = *phi.context()->group();
    const auto& alpha = *phi.context()->action();
    auto values = hecke_expand(phi);
    return from_rep_values(target, [&](int c) {
      int x = target->cosets().representative(c);
      return relabel_algebra(alpha.apply(x, values[src.coset_of(g.inverse(x))]), target->algebra());
    });
  };
  return t;
}

}  // namespace skh
