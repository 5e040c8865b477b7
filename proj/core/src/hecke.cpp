#include "skewhecke/hecke.hpp"

#include <ostream>

namespace skh {

HeckeContext::HeckeContext(ActionPtr alpha, CosetSpace cosets, int cap)
    : alpha_(std::move(alpha)), cosets_(std::move(cosets)), cap_(cap) {}

ContextPtr HeckeContext::make(ActionPtr alpha, Subgroup subgroup, Options options) {
  if (subgroup.parent() != alpha->group()) throw std::invalid_argument("subgroup is not a subgroup of the acting group");
  if (options.degree_cap < 0) throw std::invalid_argument("degree cap must be nonnegative");
  if (options.verify_action) {
    Report report = verify_action(*alpha, options.degree_cap);
    if (auto bad = report.first_failure()) {
      throw std::invalid_argument("action " + alpha->name() + " fails " + bad->name + ": " + bad->detail);
    }
  }
  CosetSpace cosets(std::move(subgroup), std::move(options.representatives));
  std::shared_ptr<HeckeContext> ctx(new HeckeContext(std::move(alpha), std::move(cosets), options.degree_cap));
  for (std::size_t o = 0; o < ctx->cosets_.orbit_count(); ++o) {
    ctx->stabilizer_invariants_.push_back(make_invariant_subalgebra(ctx->alpha_, ctx->cosets_.stabilizer(static_cast<int>(o))));
  }
  for (int d = 0; d <= ctx->max_degree(); ++d) {
    for (std::size_t o = 0; o < ctx->cosets_.orbit_count(); ++o) {
      const auto& sp = ctx->space(static_cast<int>(o), d);
      for (std::size_t i = 0; i < sp.basis.size(); ++i) {
        ctx->positions_.emplace(std::make_tuple(d, static_cast<int>(o), i), ctx->basis_.size());
        ctx->basis_.push_back({static_cast<int>(o), d, i, sp.basis[i]});
      }
    }
  }
  return ctx;
}

const InvariantSpace& HeckeContext::space(int orbit, int degree) const {
  return stabilizer_invariants_.at(orbit)->space(degree);
}

std::optional<std::size_t> HeckeContext::basis_position(int degree, int orbit, std::size_t index) const {
  auto it = positions_.find(std::make_tuple(degree, orbit, index));
  if (it == positions_.end()) return std::nullopt;
  return it->second;
}

HeckeElement::HeckeElement(ContextPtr context, std::vector<Element> values)
    : ctx_(std::move(context)), values_(std::move(values)) {
  if (values_.size() != ctx_->cosets().orbit_count()) throw std::invalid_argument("one value per double coset expected");
  for (auto& v : values_) {
    if (!v.algebra()) v = Element(ctx_->algebra());
    if (v.algebra() != ctx_->algebra()) throw std::invalid_argument("value lies in the wrong algebra");
  }
}

bool HeckeElement::is_zero() const {
  for (const auto& v : values_) {
    if (!v.is_zero()) return false;
  }
  return true;
}

void HeckeElement::check_context(const HeckeElement& other) const {
  if (ctx_ != other.ctx_) throw std::invalid_argument("Hecke elements from different contexts");
}

HeckeElement& HeckeElement::operator+=(const HeckeElement& other) {
  check_context(other);
  for (std::size_t o = 0; o < values_.size(); ++o) values_[o] += other.values_[o];
  return *this;
}

HeckeElement& HeckeElement::operator-=(const HeckeElement& other) {
  check_context(other);
  for (std::size_t o = 0; o < values_.size(); ++o) values_[o] -= other.values_[o];
  return *this;
}

HeckeElement& HeckeElement::operator*=(const Scalar& s) {
  for (auto& v : values_) v *= s;
  return *this;
}

bool operator==(const HeckeElement& a, const HeckeElement& b) { return a.ctx_ == b.ctx_ && a.values_ == b.values_; }

std::string HeckeElement::to_string() const {
  const auto& cs = ctx_->cosets();
  std::string out = "[";
  for (std::size_t o = 0; o < values_.size(); ++o) {
    if (o) out += ", ";
    out += "(" + ctx_->group()->name(cs.representative(cs.orbit_representative(static_cast<int>(o)))) + ", " +
           values_[o].to_string() + ")";
  }
  return out + "]";
}

std::ostream& operator<<(std::ostream& os, const HeckeElement& x) { return os << x.to_string(); }

HeckeElement hecke_from_values(const ContextPtr& ctx, std::vector<Element> values) {
  HeckeElement phi(ctx, std::move(values));
  const auto& cs = ctx->cosets();
  for (std::size_t o = 0; o < cs.orbit_count(); ++o) {
    if (auto h = fixed_violation(*ctx->action(), cs.stabilizer(static_cast<int>(o)), phi.value(static_cast<int>(o)))) {
      throw InvarianceError("value at " + ctx->group()->name(cs.representative(cs.orbit_representative(static_cast<int>(o)))) +
                                "H is not fixed by h = " + ctx->group()->name(*h),
                            *h);
    }
  }
  return phi;
}

HeckeElement hecke_zero(const ContextPtr& ctx) {
  return HeckeElement(ctx, std::vector<Element>(ctx->cosets().orbit_count(), Element(ctx->algebra())));
}

std::vector<Element> hecke_expand(const HeckeElement& phi) {
  const auto& ctx = *phi.context();
  const auto& cs = ctx.cosets();
  std::vector<Element> out;
  out.reserve(cs.size());
  for (std::size_t c = 0; c < cs.size(); ++c) {
    out.push_back(ctx.action()->apply(cs.transversal(static_cast<int>(c)), phi.value(cs.orbit_of(static_cast<int>(c)))));
  }
  return out;
}

HeckeElement hecke_from_expanded(const ContextPtr& ctx, const std::vector<Element>& values) {
  const auto& cs = ctx->cosets();
  if (values.size() != cs.size()) throw std::invalid_argument("one value per coset expected");
  std::vector<Element> reps;
  for (std::size_t o = 0; o < cs.orbit_count(); ++o) reps.push_back(values[cs.orbit_representative(static_cast<int>(o))]);
  HeckeElement phi = hecke_from_values(ctx, std::move(reps));
  auto expanded = hecke_expand(phi);
  for (std::size_t c = 0; c < cs.size(); ++c) {
    if (expanded[c] != values[c] && !(expanded[c].is_zero() && values[c].is_zero())) {
      throw InvarianceError("assignment is not H-equivariant at coset " + ctx->group()->name(cs.representative(static_cast<int>(c))) + "H",
                            cs.transversal(static_cast<int>(c)));
    }
  }
  return phi;
}

HeckeElement convolve_with_representatives(const HeckeElement& phi, const HeckeElement& psi,
                                           const std::vector<int>& representatives) {
  if (phi.context() != psi.context()) throw std::invalid_argument("convolve: different contexts");
  const ContextPtr& ctx = phi.context();
  const auto& cs = ctx->cosets();
  const auto& g = *ctx->group();
  const auto& alpha = *ctx->action();
  if (representatives.size() != cs.size()) throw std::invalid_argument("one representative per coset expected");
  for (std::size_t c = 0; c < cs.size(); ++c) {
    if (cs.coset_of(representatives[c]) != static_cast<int>(c)) throw std::invalid_argument("representative outside its coset");
  }
  auto fphi = hecke_expand(phi);
  auto fpsi = hecke_expand(psi);
  std::vector<Element> values;
  for (std::size_t o = 0; o < cs.orbit_count(); ++o) {
    int x = representatives[cs.orbit_representative(static_cast<int>(o))];
    Element acc(ctx->algebra());
    for (std::size_t m = 0; m < cs.size(); ++m) {
      if (fphi[m].is_zero()) continue;
      int k = representatives[m];
      int target = cs.coset_of(g.multiply(g.inverse(k), x));
      if (fpsi[target].is_zero()) continue;
      acc += fphi[m] * alpha.apply(k, fpsi[target]);
    }
    values.push_back(std::move(acc));
  }
  try {
    return hecke_from_values(ctx, std::move(values));
  } catch (const InvarianceError& e) {
    throw std::logic_error(std::string("convolution left the Hecke algebra: ") + e.what());
  }
}

HeckeElement convolve(const HeckeElement& phi, const HeckeElement& psi) {
  return convolve_with_representatives(phi, psi, phi.context()->cosets().representatives());
}

HeckeElement hecke_identity(const ContextPtr& ctx) {
  HeckeElement out = hecke_zero(ctx);
  std::vector<Element> values = out.values();
  values[0] = Element::unit(ctx->algebra());
  return HeckeElement(ctx, std::move(values));
}

HeckeElement embed_invariant(const ContextPtr& ctx, const Element& a) {
  if (auto h = fixed_violation(*ctx->action(), ctx->subgroup(), a)) {
    throw InvarianceError("element is not fixed by h = " + ctx->group()->name(*h), *h);
  }
  std::vector<Element> values(ctx->cosets().orbit_count(), Element(ctx->algebra()));
  values[0] = a;
  return HeckeElement(ctx, std::move(values));
}

HeckeElement embed_scalar_hecke(const ContextPtr& ctx, const HeckeElement& rho) {
  const auto& cctx = *rho.context();
  if (cctx.group() != ctx->group() || !(cctx.subgroup() == ctx->subgroup()) ||
      !dynamic_cast<const GroundAlgebra*>(cctx.algebra().get())) {
    throw std::invalid_argument("embed_scalar_hecke needs an element of the classical algebra on the same (G, H)");
  }
  std::vector<Element> values;
  for (const auto& v : rho.values()) values.push_back(Element::scalar(ctx->algebra(), v.coefficient(Label{})));
  return HeckeElement(ctx, std::move(values));
}

Element expectation(const HeckeElement& phi) { return phi.value(0); }

ContextPtr classical_context(const GroupPtr& group, const Subgroup& subgroup, const Field& field) {
  return HeckeContext::make(trivial_action(group, make_ground(field)), subgroup);
}

SparseVector hecke_coordinates(const HeckeElement& phi) {
  const auto& ctx = *phi.context();
  SparseVector out;
  for (std::size_t o = 0; o < phi.values().size(); ++o) {
    std::map<int, Element> parts;
    for (const auto& [label, c] : phi.value(static_cast<int>(o)).terms()) {
      auto [it, inserted] = parts.try_emplace(ctx.algebra()->degree(label), Element(ctx.algebra()));
      it->second.add_term(label, c);
    }
    for (const auto& [d, part] : parts) {
      auto coords = ctx.space(static_cast<int>(o), d).coordinates(part);
      if (!coords) throw std::logic_error("value outside its stabilizer invariants");
      for (std::size_t i = 0; i < coords->size(); ++i) {
        add_to(out, Coord{d, static_cast<std::int32_t>(o), static_cast<std::int32_t>(i)}, (*coords)[i]);
      }
    }
  }
  return out;
}

Vector module_coordinates(const HeckeElement& phi) {
  const auto& ctx = *phi.context();
  Vector out = zero_vector(ctx.field(), ctx.dimension());
  for (const auto& [key, c] : hecke_coordinates(phi)) {
    auto pos = ctx.basis_position(key[0], key[1], static_cast<std::size_t>(key[2]));
    if (!pos) throw std::out_of_range("element has components beyond the degree cap");
    out[*pos] = c;
  }
  return out;
}

HeckeElement module_basis_element(const ContextPtr& ctx, std::size_t i) {
  const auto& entry = ctx->module_basis().at(i);
  HeckeElement out = hecke_zero(ctx);
  std::vector<Element> values = out.values();
  values[entry.orbit] = entry.value;
  return HeckeElement(ctx, std::move(values));
}

HeckeElement from_module_coordinates(const ContextPtr& ctx, const Vector& coords) {
  if (coords.size() != ctx->dimension()) throw std::invalid_argument("coordinate vector has wrong length");
  std::vector<Element> values(ctx->cosets().orbit_count(), Element(ctx->algebra()));
  for (std::size_t i = 0; i < coords.size(); ++i) {
    const auto& entry = ctx->module_basis()[i];
    values[entry.orbit] += coords[i] * entry.value;
  }
  return HeckeElement(ctx, std::move(values));
}

std::vector<StructureRow> structure_constants(const ContextPtr& ctx) {
  const auto& basis = ctx->module_basis();
  std::vector<HeckeElement> elements;
  for (std::size_t i = 0; i < basis.size(); ++i) elements.push_back(module_basis_element(ctx, i));
  std::vector<StructureRow> rows;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    for (std::size_t j = 0; j < basis.size(); ++j) {
      if (basis[i].degree + basis[j].degree > ctx->max_degree()) continue;
      Vector coords = module_coordinates(convolve(elements[i], elements[j]));
      for (std::size_t k = 0; k < coords.size(); ++k) {
        if (!coords[k].is_zero()) rows.push_back({i, j, k, coords[k]});
      }
    }
  }
  return rows;
}

std::string structure_constants_text(const ContextPtr& ctx) {
  const auto& cs = ctx->cosets();
  std::string out = "# module basis: index\tcoset\tdegree\tvalue\n";
  const auto& basis = ctx->module_basis();
  for (std::size_t i = 0; i < basis.size(); ++i) {
    out += "# " + std::to_string(i) + "\t" + ctx->group()->name(cs.representative(cs.orbit_representative(basis[i].orbit))) +
           "H\t" + std::to_string(basis[i].degree) + "\t" + basis[i].value.to_string() + "\n";
  }
  out += "# i\tj\tk\tcoeff\n";
  for (const auto& r : structure_constants(ctx)) {
    out += std::to_string(r.i) + "\t" + std::to_string(r.j) + "\t" + std::to_string(r.k) + "\t" + r.coeff.to_string() + "\n";
  }
  return out;
}

std::optional<int> graded_degree(const HeckeElement& phi) {
  std::optional<int> degree;
  for (const auto& v : phi.values()) {
    if (v.is_zero()) continue;
    auto d = v.homogeneous_degree();
    if (!d || (degree && *degree != *d)) return std::nullopt;
    degree = d;
  }
  return degree;
}

HeckeElement random_hecke(const ContextPtr& ctx, std::mt19937_64& rng, int lo, int hi) {
  std::uniform_int_distribution<int> dist(lo, hi);
  Vector coords;
  for (std::size_t i = 0; i < ctx->dimension(); ++i) coords.push_back(ctx->field().from_int(dist(rng)));
  return from_module_coordinates(ctx, coords);
}

Element random_element(const AlgebraPtr& algebra, const std::vector<Label>& labels, std::mt19937_64& rng, int lo, int hi) {
  std::uniform_int_distribution<int> dist(lo, hi);
  Element out(algebra);
  for (const auto& l : labels) out.add_term(l, algebra->field().from_int(dist(rng)));
  return out;
}

}  // namespace skh
