#include "skewhecke_cli/suites.hpp"

#include <algorithm>
#include <random>
#include <set>

#include "skewhecke/matrix_model.hpp"
#include "skewhecke/standard_contexts.hpp"

namespace skh::cli {

namespace {

std::string pair_text(std::size_t i, std::size_t j) { return "basis pair (" + std::to_string(i) + ", " + std::to_string(j) + ")"; }

void merge_map(Report& r, const AlgebraMapReport& m) { r.merge(m.report, m.name + ": "); }

// A^H basis up to the context's degree cap (orbit 0 is the coset H itself).
std::vector<Element> subgroup_invariants(const ContextPtr& ctx) {
  std::vector<Element> out;
  for (int d = 0; d <= ctx->max_degree(); ++d) {
    const auto& sp = ctx->space(0, d);
    out.insert(out.end(), sp.basis.begin(), sp.basis.end());
  }
  return out;
}

std::vector<HeckeElement> module_elements(const ContextPtr& ctx) {
  std::vector<HeckeElement> out;
  for (std::size_t i = 0; i < ctx->dimension(); ++i) out.push_back(module_basis_element(ctx, i));
  return out;
}

// Distinct nontrivial normal closures of elements of H that stay inside H.
std::vector<Subgroup> normal_subgroups_inside(const Subgroup& h) {
  const auto& g = h.parent();
  std::vector<Subgroup> out;
  std::set<std::vector<int>> seen;
  for (int x : h.elements()) {
    if (x == 0) continue;
    std::vector<int> conjugates;
    for (std::size_t s = 0; s < g->order(); ++s) conjugates.push_back(g->conjugate(static_cast<int>(s), x));
    auto n = subgroup_from_generators(g, conjugates);
    if (is_subgroup_of(n, h) && seen.insert(n.elements()).second) out.push_back(n);
  }
  return out;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"assoc",    "decomposition", "matrix", "corner",     "stone",
                                                 "group_ops", "cocycle",      "opposite", "graded", "s3_fixtures"};
  return names;
}

Report assoc_suite(const ContextPtr& ctx, const SuiteOptions& options) {
  Report r("assoc");
  std::mt19937_64 rng(options.seed);
  const auto one = hecke_identity(ctx);
  std::string assoc, unit, distributive;
  for (std::size_t t = 0; t < options.samples; ++t) {
    auto x = random_hecke(ctx, rng);
    auto y = random_hecke(ctx, rng);
    auto z = random_hecke(ctx, rng);
    if (assoc.empty() && convolve(convolve(x, y), z) != convolve(x, convolve(y, z))) {
      assoc = "triple " + std::to_string(t) + ": x=" + x.to_string() + " y=" + y.to_string() + " z=" + z.to_string();
    }
    if (unit.empty() && (convolve(one, x) != x || convolve(x, one) != x)) unit = "x=" + x.to_string();
    if (distributive.empty() && convolve(x, y + z) != convolve(x, y) + convolve(x, z)) {
      distributive = "triple " + std::to_string(t);
    }
  }
  const std::string count = std::to_string(options.samples) + " random triples";
  r.add("associativity", assoc.empty(), assoc.empty() ? count : assoc);
  r.add("unit", unit.empty(), unit.empty() ? count : unit);
  r.add("distributivity", distributive.empty(), distributive.empty() ? count : distributive);
  return r;
}

Report decomposition_suite(const ContextPtr& ctx) {
  Report r("decomposition");
  const auto basis = module_elements(ctx);
  std::string witness;
  for (std::size_t i = 0; i < basis.size() && witness.empty(); ++i) {
    Vector expected = zero_vector(ctx->field(), basis.size());
    expected[i] = ctx->field().one();
    auto coords = module_coordinates(basis[i]);
    if (coords != expected) witness = "coordinates of basis " + std::to_string(i);
    else if (from_module_coordinates(ctx, coords) != basis[i]) witness = "round trip of basis " + std::to_string(i);
  }
  r.add("decomposition round trip", witness.empty(), witness.empty() ? std::to_string(basis.size()) + " basis elements" : witness);

  std::vector<SparseVector> coords;
  for (const auto& b : basis) coords.push_back(hecke_coordinates(b));
  const auto rk = sparse_rank(coords, ctx->field());
  r.add("decomposition bijective", rk == basis.size(), "rank " + std::to_string(rk) + " of " + std::to_string(basis.size()));

  const auto inv = subgroup_invariants(ctx);
  const auto& g = *ctx->group();
  const auto& cs = ctx->cosets();
  witness.clear();
  std::size_t checked = 0;
  for (std::size_t i = 0; i < basis.size() && witness.empty(); ++i) {
    for (std::size_t p = 0; p < inv.size() && witness.empty(); ++p) {
      auto left = convolve(embed_invariant(ctx, inv[p]), basis[i]);
      for (std::size_t q = 0; q < inv.size(); ++q) {
        auto both = convolve(left, embed_invariant(ctx, inv[q]));
        ++checked;
        for (std::size_t o = 0; o < cs.orbit_count(); ++o) {
          int rep = cs.representative(cs.orbit_representative(static_cast<int>(o)));
          Element expected = inv[p] * basis[i].value(static_cast<int>(o)) * ctx->action()->apply(rep, inv[q]);
          if (both.value(static_cast<int>(o)) != expected) {
            witness = "basis " + std::to_string(i) + ", a=" + inv[p].to_string() + ", a'=" + inv[q].to_string() + " at " +
                      g.name(rep) + "H";
            break;
          }
        }
        if (!witness.empty()) break;
      }
    }
  }
  r.add("bimodule law", witness.empty(), witness.empty() ? std::to_string(checked) + " triples" : witness);
  r.merge(special_cases_suite(ctx));
  return r;
}

Report special_cases_suite(const ContextPtr& ctx) {
  Report r("special cases");
  auto run = [&](const std::string& name, bool applies, auto&& build) {
    if (!applies) {
      r.skip(name, "not applicable");
      return;
    }
    auto m = verify_algebra_map(build());
    merge_map(r, m);
    r.add(name + " isomorphism", m.isomorphism());
  };
  const bool ground = dynamic_cast<const GroundAlgebra*>(ctx->algebra().get()) != nullptr;
  const auto& h = ctx->subgroup();
  run("classical Hecke algebra", ground, [&] { return classical_model(ctx); });
  run("A ⊗ classical Hecke algebra", ctx->algebra()->finite() && action_is_trivial(*ctx), [&] { return tensor_model(ctx); });
  run("A^G", h.order() == ctx->group()->order(), [&] { return invariant_model(ctx); });
  run("A x| G", h.order() == 1, [&] { return skew_group_model(ctx); });
  run("A^H x| G/H", is_normal(h), [&] { return normal_subgroup_model(ctx); });
  return r;
}

Report matrix_suite(const ContextPtr& ctx, const SuiteOptions& options) {
  Report r("matrix");
  const auto basis = module_elements(ctx);
  std::string witness;
  for (std::size_t i = 0; i < basis.size() && witness.empty(); ++i) {
    auto m = to_matrix(basis[i]);
    if (auto bad = matrix_invariance_violation(m)) witness = "basis " + std::to_string(i) + " not invariant: " + *bad;
    else if (from_matrix(m) != basis[i]) witness = "basis " + std::to_string(i) + " does not round trip";
  }
  r.add("matrix round trip and invariance", witness.empty(), witness);

  for (int d = 0; d <= ctx->max_degree(); ++d) {
    std::vector<SparseVector> images;
    for (std::size_t i = 0; i < basis.size(); ++i) {
      if (ctx->module_basis()[i].degree == d) images.push_back(matrix_coordinates(to_matrix(basis[i])));
    }
    const auto rk = sparse_rank(images, ctx->field());
    const auto full = invariant_matrix_dimension(ctx, d);
    r.add("image = invariant matrices in degree " + std::to_string(d), rk == images.size() && rk == full,
          "rank " + std::to_string(rk) + ", invariant dimension " + std::to_string(full));
  }

  std::mt19937_64 rng(options.seed);
  witness.clear();
  const std::size_t pairs = std::max<std::size_t>(20, options.samples / 5);
  for (std::size_t t = 0; t < pairs && witness.empty(); ++t) {
    auto x = random_hecke(ctx, rng);
    auto y = random_hecke(ctx, rng);
    auto check = matrix_multiplicativity_check(x, y);
    if (auto bad = check.first_failure()) witness = "pair " + std::to_string(t) + ": " + bad->detail;
  }
  r.add("T(φ∗ψ) = T(φ) ⋆ T(ψ)", witness.empty(), witness.empty() ? std::to_string(pairs) + " random pairs" : witness);
  r.merge(relativise_suite(ctx));
  return r;
}

Report relativise_suite(const ContextPtr& ctx) {
  Report r("relativise");
  const auto inv = subgroup_invariants(ctx);
  std::string witness;
  std::vector<SparseVector> images;
  for (std::size_t i = 0; i < inv.size(); ++i) {
    auto m = relativise(ctx, inv[i]);
    images.push_back(matrix_coordinates(m));
    if (witness.empty() && m != to_matrix(embed_invariant(ctx, inv[i]))) witness = "a=" + inv[i].to_string();
  }
  r.add("relativise = to_matrix ∘ embed_invariant", witness.empty(), witness);
  const auto rk = sparse_rank(images, ctx->field());
  r.add("relativise injective", rk == inv.size(), "rank " + std::to_string(rk) + " of " + std::to_string(inv.size()));
  witness.clear();
  for (std::size_t i = 0; i < inv.size() && witness.empty(); ++i) {
    for (std::size_t j = 0; j < inv.size(); ++j) {
      if (relativise(ctx, inv[i] * inv[j]) != matrix_product(relativise(ctx, inv[i]), relativise(ctx, inv[j]))) {
        witness = pair_text(i, j);
        break;
      }
    }
  }
  r.add("relativise multiplicative", witness.empty(), witness);
  return r;
}

Report corner_suite(const ContextPtr& ctx, const SuiteOptions& options) {
  Report r("corner");
  auto skew = make_skew_group(ctx->action());
  Element e;
  try {
    e = hecke_idempotent(skew, ctx->subgroup());
  } catch (const ModelUnavailable& ex) {
    r.skip("corner model", ex.what());
    return r;
  }
  r.add("e_H idempotent", e * e == e);
  const auto corner = corner_basis(skew, e, ctx->max_degree());
  r.add("dim corner = dim H", corner.size() == ctx->dimension(),
        std::to_string(corner.size()) + " vs " + std::to_string(ctx->dimension()));
  auto map = hecke_to_algebra_map(
      "corner", ctx, skew, [skew](const HeckeElement& phi) { return to_corner(skew, phi); }, corner.size());
  map.codomain_unit = e;
  map.target_violation = [e](const Element& x) -> std::optional<std::string> {
    if (e * x * e != x) return "outside e (A x| G) e";
    return std::nullopt;
  };
  auto m = verify_algebra_map(map, options.seed);
  merge_map(r, m);
  std::string witness;
  for (std::size_t i = 0; i < ctx->dimension(); ++i) {
    auto b = module_basis_element(ctx, i);
    if (from_corner(ctx, skew, to_corner(skew, b)) != b) {
      witness = "basis " + std::to_string(i);
      break;
    }
  }
  r.add("from_corner ∘ to_corner = id", witness.empty(), witness);
  return r;
}

Report stone_suite(const ContextPtr& ctx) {
  if (!stone_applicable(*ctx)) {
    Report r("stone");
    r.skip("stone", "needs the function algebra on G with left translation");
    return r;
  }
  return stone_report(ctx);
}

Report group_ops_suite(const ContextPtr& ctx, const SuiteOptions& options) {
  Report r("group_ops");
  const auto& g = ctx->group();
  const auto& h = ctx->subgroup();
  const auto gens = generators_of(whole_group(g));

  for (int s : gens) {
    auto t = conjugate_transport(ctx, s);
    auto m = verify_algebra_map(t.algebra_map("conjugate by " + g->name(s)), options.seed);
    merge_map(r, m);
  }

  auto normals = normal_subgroups_inside(h);
  if (normals.empty()) r.skip("quotient", "no nontrivial normal subgroup of G inside H");
  for (const auto& n : normals) {
    auto t = quotient_transport(ctx, n);
    auto m = verify_algebra_map(t.algebra_map("quotient by N of order " + std::to_string(n.order())), options.seed);
    merge_map(r, m);
    std::string witness;
    for (std::size_t i = 0; i < ctx->dimension(); ++i) {
      auto b = module_basis_element(ctx, i);
      if (t.inverse(t.map(b)) != b) {
        witness = "basis " + std::to_string(i);
        break;
      }
    }
    r.add("quotient by N of order " + std::to_string(n.order()) + ": inverse", witness.empty(), witness);
  }

  std::set<std::vector<int>> seen;
  for (int s : gens) {
    if (h.contains(s)) continue;
    std::vector<int> k_gens = h.elements();
    k_gens.push_back(s);
    auto k = subgroup_from_generators(g, k_gens);
    if (!seen.insert(k.elements()).second) continue;
    auto t = intermediate_embed(ctx, k);
    auto m = verify_algebra_map(t.algebra_map("extend by zero from K of order " + std::to_string(k.order()), false),
                                options.seed);
    merge_map(r, m);
    r.add("extend by zero from K of order " + std::to_string(k.order()) + " embedding", m.embedding());
  }

  auto z2 = cyclic_group(2);
  auto second = classical_context(z2, trivial_subgroup(z2), ctx->field());
  auto pt = product_transport(ctx, second);
  auto pm = verify_algebra_map(pt.algebra_map(), options.seed);
  merge_map(r, pm);

  try {
    auto st = semidirect_transport(ctx);
    auto m = verify_algebra_map(st.algebra_map("semidirect"), options.seed);
    merge_map(r, m);
    r.add("semidirect dimensions", st.source->dimension() == st.target->dimension(),
          std::to_string(st.source->dimension()) + " and " + std::to_string(st.target->dimension()));
  } catch (const std::invalid_argument& e) {
    r.skip("semidirect", e.what());
  }
  return r;
}

Report cocycle_suite(const ContextPtr& ctx, const Cocycle& chi, const SuiteOptions& options) {
  Report r("cocycle");
  auto conditions = cocycle_report(ctx, chi);
  r.merge(conditions);
  if (!conditions.passed()) return r;
  auto t = cocycle_transport(ctx, chi);
  auto m = verify_algebra_map(t.algebra_map("cocycle transport"), options.seed);
  merge_map(r, m);
  r.add("cocycle transport isomorphism", m.isomorphism());
  return r;
}

Report opposite_suite(const ContextPtr& ctx, const SuiteOptions& options) {
  Report r("opposite");
  auto t = opposite_transport(ctx);
  auto m = verify_algebra_map(t.algebra_map("opposite", true, true), options.seed);
  merge_map(r, m);

  std::mt19937_64 rng(options.seed);
  std::string witness;
  for (std::size_t s = 0; s < options.samples; ++s) {
    auto x = random_hecke(ctx, rng);
    auto y = random_hecke(ctx, rng);
    if (t.map(convolve(x, y)) != convolve(t.map(y), t.map(x))) {
      witness = "pair " + std::to_string(s);
      break;
    }
  }
  r.add("anti-multiplicative on random pairs", witness.empty(),
        witness.empty() ? std::to_string(options.samples) + " pairs" : witness);

  auto back = opposite_transport(t.target);
  witness.clear();
  for (std::size_t i = 0; i < ctx->dimension(); ++i) {
    auto b = module_basis_element(ctx, i);
    auto twice = back.map(t.map(b));
    std::vector<Element> values;
    for (const auto& v : twice.values()) values.push_back(relabel_algebra(v, ctx->algebra()));
    if (HeckeElement(ctx, values) != b) {
      witness = "basis " + std::to_string(i);
      break;
    }
  }
  r.add("involutive", witness.empty(), witness);
  return r;
}

Report graded_suite(const ContextPtr& ctx) {
  Report r("graded");
  if (!ctx->algebra()->graded()) {
    r.skip("graded", "algebra is not graded");
    return r;
  }
  const auto basis = module_elements(ctx);
  std::string witness;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    if (graded_degree(basis[i]) != ctx->module_basis()[i].degree) {
      witness = "basis " + std::to_string(i);
      break;
    }
  }
  r.add("module basis homogeneous", witness.empty(), witness);
  witness.clear();
  std::size_t nonzero = 0;
  for (std::size_t i = 0; i < basis.size() && witness.empty(); ++i) {
    for (std::size_t j = 0; j < basis.size(); ++j) {
      auto p = convolve(basis[i], basis[j]);
      if (p.is_zero()) continue;
      ++nonzero;
      if (graded_degree(p) != ctx->module_basis()[i].degree + ctx->module_basis()[j].degree) {
        witness = pair_text(i, j);
        break;
      }
    }
  }
  r.add("deg(φ∗ψ) = deg φ + deg ψ", witness.empty(),
        witness.empty() ? std::to_string(nonzero) + " nonzero products of " + std::to_string(basis.size() * basis.size()) : witness);
  return r;
}

Report s3_fixtures_suite(const SuiteOptions& options) {
  Report r("s3_fixtures");
  auto s3 = symmetric_group(3);
  auto s2 = subgroup_by_names(s3, {"(12)"});
  const int t12 = *s3->find("(12)");
  const int t23 = *s3->find("(23)");
  const int t13 = *s3->find("(13)");
  std::mt19937_64 rng(options.seed);
  std::uniform_int_distribution<int> coeff(-5, 5);

  auto classical = classical_fixture(s3, s2);
  const auto& cs = classical->cosets();
  r.add("double coset representatives id, (23)",
        cs.orbit_count() == 2 && cs.representative(cs.orbit_representative(1)) == t23);
  auto ground = classical->algebra();
  std::string witness;
  for (std::size_t t = 0; t < options.samples && witness.empty(); ++t) {
    int a = coeff(rng), b = coeff(rng), c = coeff(rng), d = coeff(rng);
    auto x = hecke_from_values(classical, {Element::scalar(ground, ground->field().from_int(a)),
                                           Element::scalar(ground, ground->field().from_int(b))});
    auto y = hecke_from_values(classical, {Element::scalar(ground, ground->field().from_int(c)),
                                           Element::scalar(ground, ground->field().from_int(d))});
    auto p = convolve(x, y);
    auto expected = hecke_from_values(classical, {Element::scalar(ground, ground->field().from_int(a * c + 2 * b * d)),
                                                  Element::scalar(ground, ground->field().from_int(a * d + b * c + b * d))});
    if (p != expected) witness = "(" + std::to_string(a) + "," + std::to_string(b) + ")(" + std::to_string(c) + "," + std::to_string(d) + ")";
  }
  r.add("classical product (rr' + 2ss', rs' + sr' + ss')", witness.empty(), witness);

  auto poly = polynomial_fixture(s3, s2, 2);
  const auto& alpha = *poly->action();
  witness.clear();
  for (std::size_t t = 0; t < options.samples && witness.empty(); ++t) {
    auto x = random_hecke(poly, rng);
    auto y = random_hecke(poly, rng);
    const auto &a = x.value(0), &b = x.value(1), &a2 = y.value(0), &b2 = y.value(1);
    Element cross = b * alpha.apply(t23, b2);
    Element first = a * a2 + cross + alpha.apply(t12, cross);
    Element second = a * b2 + b * alpha.apply(t23, a2) + alpha.apply(t12, b) * alpha.apply(t13, b2);
    auto p = convolve(x, y);
    if (p.value(0) != first || p.value(1) != second) witness = "pair " + std::to_string(t);
  }
  r.add("polynomial product closed form", witness.empty(),
        witness.empty() ? std::to_string(options.samples) + " random pairs" : witness);

  witness.clear();
  for (std::size_t t = 0; t < 10 && witness.empty(); ++t) {
    auto x = random_hecke(poly, rng);
    auto m = to_matrix(x);
    auto values = hecke_expand(x);
    const int reps[3] = {0, t23, t13};
    for (int i = 0; i < 3; ++i) {
      if (poly->cosets().representative(i) != reps[i]) witness = "coset order";
      if (m.at(i, 0) != values[i]) witness = "first column row " + std::to_string(i + 1);
      if (m.at(i, i) != alpha.apply(reps[i], x.value(0))) witness = "diagonal entry " + std::to_string(i + 1);
    }
    if (values[2] != alpha.apply(t12, values[1])) witness = "φ((13)H) = α_(12) φ((23)H)";
  }
  r.add("matrix first column and diagonal", witness.empty(), witness);

  auto skew = make_skew_group(poly->action());
  auto half = skew->field().from_ratio(1, 2);
  auto unit = Element::unit(poly->algebra());
  Element explicit_e = half * (skew_element(skew, unit, 0) + skew_element(skew, unit, t12));
  r.add("e_S2 = (1 ⊗ id + 1 ⊗ (12)) / 2", hecke_idempotent(skew, s2) == explicit_e);

  auto linear = polynomial_fixture(s3, s2, 1);
  r.add("dim with degree <= 1 is 3 + 4", linear->dimension() == 7, std::to_string(linear->dimension()));

  auto functions = function_fixture(s3, s2);
  auto stone = stone_report(functions);
  r.merge(stone, "stone: ");
  r.add("stone target size n = |G/H| = 3", functions->cosets().size() == 3 && functions->dimension() == 9,
        "dim " + std::to_string(functions->dimension()));
  r.note("Ind_{S2}^{S3} R is free of rank |S3/S2| = 3, so the target is M_3 (dimension 9); a rank-2 reading would give M_2 "
         "(dimension 4) and does not match");

  auto cube = cube_fixture(s2);
  auto sd = semidirect_transport(cube);
  r.add("wreath product order 48", sd.product.group->order() == 48);
  std::size_t orbit0 = 0, orbit1 = 0;
  for (const auto& e : cube->module_basis()) (e.orbit == 0 ? orbit0 : orbit1)++;
  r.add("dimension 6 + 8", orbit0 == 6 && orbit1 == 8 && sd.target->dimension() == 14,
        std::to_string(orbit0) + " + " + std::to_string(orbit1) + ", target " + std::to_string(sd.target->dimension()));
  auto m = verify_algebra_map(sd.algebra_map("semidirect"), options.seed);
  merge_map(r, m);
  return r;
}

Report run_suite(const std::string& name, const Job& job, const SuiteOptions& options) {
  const auto& ctx = job.ctx;
  if (name == "assoc") return assoc_suite(ctx, options);
  if (name == "decomposition") return decomposition_suite(ctx);
  if (name == "matrix") return matrix_suite(ctx, options);
  if (name == "corner") return corner_suite(ctx, options);
  if (name == "stone") return stone_suite(ctx);
  if (name == "group_ops") return group_ops_suite(ctx, options);
  if (name == "cocycle") {
    if (!job.cocycle) {
      Report r("cocycle");
      r.skip("cocycle", "no [cocycle] section");
      return r;
    }
    return cocycle_suite(ctx, *job.cocycle, options);
  }
  if (name == "opposite") return opposite_suite(ctx, options);
  if (name == "graded") return graded_suite(ctx);
  if (name == "s3_fixtures") return s3_fixtures_suite(options);
  if (name == "all") {
    Report r("all");
    for (const auto& n : suite_names()) r.merge(run_suite(n, job, options), n + ": ");
    return r;
  }
  throw std::invalid_argument("unknown suite '" + name + "'");
}

}  // namespace skh::cli
