// Prints one PASS/FAIL line per acceptance criterion; exits nonzero on any FAIL.

#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

#include "oracles.hpp"
#include "skewhecke/cocycle.hpp"
#include "skewhecke/matrix_model.hpp"
#include "skewhecke/standard_contexts.hpp"

using namespace skh;

namespace {

const Field Q = Field::rationals();

// Thrown by require() with the witness text.
struct Failure {
  std::string detail;
};

void require(bool ok, const std::string& detail) {
  if (!ok) throw Failure{detail};
}

void require_map(const AlgebraMapReport& m, bool iso = true) {
  bool ok = iso ? m.isomorphism() : m.embedding();
  if (!ok) {
    auto f = m.report.first_failure();
    throw Failure{m.name + ": " + (f ? f->name + " " + f->detail : "not onto")};
  }
}

std::vector<HeckeElement> module_elements(const ContextPtr& ctx) {
  std::vector<HeckeElement> out;
  for (std::size_t i = 0; i < ctx->dimension(); ++i) out.push_back(module_basis_element(ctx, i));
  return out;
}

std::vector<Element> subgroup_invariants(const ContextPtr& ctx) {
  std::vector<Element> out;
  for (int d = 0; d <= ctx->max_degree(); ++d) {
    const auto& b = ctx->space(0, d).basis;
    out.insert(out.end(), b.begin(), b.end());
  }
  return out;
}

bool is_ground(const ContextPtr& ctx) { return dynamic_cast<const GroundAlgebra*>(ctx->algebra().get()) != nullptr; }

struct S3 {
  GroupPtr g = symmetric_group(3);
  Subgroup s2 = subgroup_by_names(g, {"(12)"});
  int t12 = *g->find("(12)");
  int t23 = *g->find("(23)");
};

// 1. Classical product formula.
std::string classical_formula() {
  S3 s;
  auto ctx = classical_fixture(s.g, s.s2);
  require(ctx->dimension() == 2, "dimension " + std::to_string(ctx->dimension()));
  Scalar c[2][2][2];
  for (auto& a : c)
    for (auto& b : a)
      for (auto& x : b) x = Q.zero();
  for (const auto& r : structure_constants(ctx)) c[r.i][r.j][r.k] = r.coeff;
  auto oracle_c = oracle::classical_constants(*s.g, s.s2.elements());
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k) require(c[i][j][k] == oracle::to_scalar(oracle_c[i][j][k]), "indicator convolution disagrees");
  std::mt19937_64 rng(1);
  std::uniform_int_distribution<long> d(-9, 9);
  for (int t = 0; t < 200; ++t) {
    long r = d(rng), sv = d(rng), r2 = d(rng), s2 = d(rng);
    Scalar x[2] = {Q.from_int(r), Q.from_int(sv)}, y[2] = {Q.from_int(r2), Q.from_int(s2)};
    for (int k = 0; k < 2; ++k) {
      Scalar sum = Q.zero();
      for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) sum += x[i] * y[j] * c[i][j][k];
      Scalar expected = k == 0 ? Q.from_int(r * r2 + 2 * sv * s2) : Q.from_int(r * s2 + sv * r2 + sv * s2);
      require(sum == expected, "(" + std::to_string(r) + "," + std::to_string(sv) + ")(" + std::to_string(r2) + "," +
                                   std::to_string(s2) + ")");
    }
  }
  return "table (1, T) with T*T = 2 + T; 200 random products";
}

// 2. The S3/S2 polynomial product against its closed form.
std::string polynomial_formula() {
  S3 s;
  auto ctx = polynomial_fixture(s.g, s.s2, 2);
  std::mt19937_64 rng(2);
  for (int t = 0; t < 100; ++t) {
    auto x = random_hecke(ctx, rng), y = random_hecke(ctx, rng);
    auto [first, second] = oracle::s3_closed_form(x.value(0), x.value(1), y.value(0), y.value(1));
    auto p = convolve(x, y);
    require(p.value(0) == first && p.value(1) == second, "pair " + std::to_string(t) + ": " + x.to_string() + ", " + y.to_string());
  }
  return "100 random pairs, degree <= 2, coefficients in -3..3";
}

// 3. Bimodule decomposition.
std::string decomposition() {
  std::size_t contexts = 0, checks = 0;
  for (const auto& [name, ctx] : fixture_contexts(2)) {
    if (is_ground(ctx)) continue;
    ++contexts;
    const auto& g = *ctx->group();
    auto labels = ctx->algebra()->basis_up_to(ctx->max_degree());
    auto expected_dim = oracle::hecke_dimension(g, ctx->subgroup().elements(), labels, oracle::label_permutation(*ctx->action()));
    require(ctx->dimension() == expected_dim, name + ": dimension " + std::to_string(ctx->dimension()) + ", orbit count " +
                                                  std::to_string(expected_dim));
    auto basis = module_elements(ctx);
    std::vector<SparseVector> coords;
    for (std::size_t i = 0; i < basis.size(); ++i) {
      Vector unit = zero_vector(Q, basis.size());
      unit[i] = Q.one();
      require(module_coordinates(basis[i]) == unit, name + ": coordinates of basis " + std::to_string(i));
      require(from_module_coordinates(ctx, unit) == basis[i], name + ": inverse on basis " + std::to_string(i));
      coords.push_back(hecke_coordinates(basis[i]));
    }
    require(sparse_rank(coords, Q) == basis.size(), name + ": decomposition not injective");

    auto inv = subgroup_invariants(ctx);
    const auto& alpha = *ctx->action();
    const auto& cs = ctx->cosets();
    for (std::size_t i = 0; i < basis.size(); ++i) {
      for (const auto& a : inv) {
        auto left = convolve(embed_invariant(ctx, a), basis[i]);
        for (const auto& a2 : inv) {
          auto both = hecke_expand(convolve(left, embed_invariant(ctx, a2)));
          auto values = hecke_expand(basis[i]);
          for (std::size_t c = 0; c < cs.size(); ++c) {
            int rep = cs.representative(static_cast<int>(c));
            require(both[c] == a * values[c] * alpha.apply(rep, a2),
                    name + ": bimodule law at basis " + std::to_string(i) + ", coset of " + g.name(rep));
          }
          ++checks;
        }
      }
    }
  }
  return std::to_string(contexts) + " contexts, " + std::to_string(checks) + " bimodule triples";
}

// 4. Matrix model.
std::string matrix_model() {
  std::size_t contexts = 0;
  for (const auto& [name, ctx] : fixture_contexts(2)) {
    ++contexts;
    auto basis = module_elements(ctx);
    for (std::size_t i = 0; i < basis.size(); ++i) {
      auto m = to_matrix(basis[i]);
      auto bad = matrix_invariance_violation(m);
      require(!bad, name + ": basis " + std::to_string(i) + " not invariant at " + (bad ? *bad : ""));
      require(from_matrix(m) == basis[i], name + ": basis " + std::to_string(i) + " does not round trip");
    }
    std::optional<oracle::LabelPermutation> pi;
    if (!is_ground(ctx)) pi = oracle::label_permutation(*ctx->action());
    for (int d = 0; d <= ctx->max_degree(); ++d) {
      std::vector<SparseVector> images;
      for (std::size_t i = 0; i < basis.size(); ++i) {
        if (ctx->module_basis()[i].degree == d) images.push_back(matrix_coordinates(to_matrix(basis[i])));
      }
      std::size_t expected = pi ? oracle::invariant_matrix_dimension(*ctx->group(), ctx->subgroup().elements(),
                                                                     ctx->algebra()->basis_of_degree(d), *pi)
                                : oracle::double_cosets(*ctx->group(), ctx->subgroup().elements()).size();
      auto rk = sparse_rank(images, Q);
      require(rk == images.size() && rk == expected, name + ": degree " + std::to_string(d) + " rank " + std::to_string(rk) +
                                                         ", invariant matrices " + std::to_string(expected));
    }
    std::mt19937_64 rng(4);
    for (int t = 0; t < 20; ++t) {
      auto x = random_hecke(ctx, rng), y = random_hecke(ctx, rng);
      auto r = matrix_multiplicativity_check(x, y);
      if (!r.passed()) throw Failure{name + ": " + r.first_failure()->detail};
    }
  }
  return std::to_string(contexts) + " contexts incl. Q[S3] with conjugation; 20 random pairs each";
}

// 5. Corner ring.
std::string corner() {
  std::size_t contexts = 0;
  for (const auto& [name, ctx] : fixture_contexts(1)) {
    ++contexts;
    auto skew = make_skew_group(ctx->action());
    auto e = hecke_idempotent(skew, ctx->subgroup());
    require(e * e == e, name + ": e_H not idempotent");
    auto cb = corner_basis(skew, e, ctx->max_degree());
    require(cb.size() == ctx->dimension(), name + ": corner dimension " + std::to_string(cb.size()));
    auto map = hecke_to_algebra_map("corner " + name, ctx, skew, [skew](const HeckeElement& phi) { return to_corner(skew, phi); },
                                    cb.size());
    map.codomain_unit = e;
    map.target_violation = [e](const Element& x) -> std::optional<std::string> {
      if (e * x * e != x) return "outside the corner";
      return std::nullopt;
    };
    require_map(verify_algebra_map(map));
  }
  S3 s;
  auto f2 = Field::prime(2);
  HeckeContext::Options o;
  o.degree_cap = 1;
  auto ctx = HeckeContext::make(permute_variables(s.g, make_polynomial(f2, 3, 6)), s.s2, o);
  bool unavailable = false;
  try {
    to_corner(make_skew_group(ctx->action()), hecke_identity(ctx));
  } catch (const ModelUnavailable&) {
    unavailable = true;
  }
  require(unavailable, "GF(2), H = S2 was not reported unavailable");
  return std::to_string(contexts) + " contexts (degree <= 1); GF(2) with H = S2 reported unavailable";
}

// 6. Stone map.
std::string stone() {
  S3 s;
  auto ctx = function_fixture(s.g, s.s2);
  auto r = stone_report(ctx);
  if (auto f = r.first_failure()) throw Failure{f->name + ": " + f->detail};
  const std::size_t n = ctx->cosets().size();
  require(n == 3 && ctx->dimension() == 9, "n = " + std::to_string(n) + ", dimension " + std::to_string(ctx->dimension()));
  require(ctx->dimension() != 2 * 2, "dimension matches a rank-2 target");
  return "dimension 9 = 3^2, matrix-unit relations hold; a rank-2 target (dimension 4) is ruled out, n = |G/H| = 3";
}

// 7. Special cases.
std::string special_cases() {
  S3 s;
  require_map(verify_algebra_map(classical_model(classical_fixture(s.g, s.s2))));
  auto s4 = symmetric_group(4);
  require_map(verify_algebra_map(classical_model(classical_fixture(s4, subgroup_by_names(s4, {"(1234)", "(13)"})))));
  require_map(verify_algebra_map(invariant_model(conjugation_fixture(s.g, whole_group(s.g)))));
  require_map(verify_algebra_map(invariant_model(polynomial_fixture(s.g, whole_group(s.g), 2))));
  require_map(verify_algebra_map(skew_group_model(conjugation_fixture(s.g, trivial_subgroup(s.g)))));
  require_map(verify_algebra_map(skew_group_model(polynomial_fixture(s.g, trivial_subgroup(s.g), 1))));
  auto a3 = subgroup_by_names(s.g, {"(123)"});
  require_map(verify_algebra_map(normal_subgroup_model(conjugation_fixture(s.g, a3))));
  require_map(verify_algebra_map(normal_subgroup_model(polynomial_fixture(s.g, a3, 2))));
  require_map(verify_algebra_map(tensor_model(HeckeContext::make(trivial_action(s.g, make_matrix(Q, 2)), s.s2))));
  require_map(verify_algebra_map(tensor_model(HeckeContext::make(trivial_action(s.g, make_group_algebra(Q, s.g)), s.s2))));
  return "(a) classical, (c) A tensor H(G,H), (d) A^G, (e) A x| G, (f) A^{A3} x| Z/2";
}

// 8. Group operations.
std::string transports() {
  auto s4 = symmetric_group(4);
  auto d4 = subgroup_by_names(s4, {"(1234)", "(13)"});
  auto v4 = subgroup_by_names(s4, {"(12)(34)", "(13)(24)"});
  for (auto ctx : {polynomial_fixture(s4, d4, 2), function_fixture(s4, d4)}) {
    auto q = quotient_transport(ctx, v4);
    require(q.target->group()->order() == 6 && q.target->subgroup().order() == 2, "quotient is not (S3, S2)");
    require(find_isomorphism(*q.target->group(), *symmetric_group(3)).has_value(), "G/V4 is not S3");
    require_map(verify_algebra_map(q.algebra_map("quotient by V4")));
  }

  S3 s;
  auto z2 = cyclic_group(2);
  auto pt = product_transport(classical_fixture(s.g, s.s2), classical_fixture(z2, trivial_subgroup(z2)));
  std::vector<int> h;
  for (int x : s.s2.elements()) h.push_back(pt.product.element(x, 0));
  require(pt.target->dimension() == oracle::double_cosets(*pt.product.group, h).size() && pt.target->dimension() == 4,
          "product dimension " + std::to_string(pt.target->dimension()));
  require_map(verify_algebra_map(pt.algebra_map()));

  auto s2in4 = subgroup_by_names(s4, {"(12)"});
  auto s3in4 = subgroup_by_names(s4, {"(12)", "(23)"});
  auto ext = intermediate_embed(polynomial_fixture(s4, s2in4, 1), s3in4);
  require_map(verify_algebra_map(ext.algebra_map("extend by zero", false)), false);
  std::mt19937_64 rng(8);
  for (int t = 0; t < 20; ++t) {
    auto x = random_hecke(ext.source, rng), y = random_hecke(ext.source, rng);
    require(ext.map(convolve(x, y)) == convolve(ext.map(x), ext.map(y)), "extension by zero, pair " + std::to_string(t));
  }

  auto poly = polynomial_fixture(s.g, s.s2, 2);
  auto conj = conjugate_transport(poly, s.t23);
  require(conj.target->subgroup().elements() == std::vector<int>{0, *s.g->find("(13)")}, "sHs^-1 is not {id, (13)}");
  require_map(verify_algebra_map(conj.algebra_map("conjugate by (23)")));

  auto cube = cube_fixture(s.s2);
  auto sd = semidirect_transport(cube);
  require(sd.product.group->order() == 48, "wreath product order");
  std::size_t orbit0 = 0, orbit1 = 0;
  for (const auto& e : cube->module_basis()) (e.orbit == 0 ? orbit0 : orbit1)++;
  require(orbit0 == 6 && orbit1 == 8, "orbit decomposition count " + std::to_string(orbit0) + " + " + std::to_string(orbit1));
  std::vector<int> hs = {sd.product.element(0, 0), sd.product.element(0, s.t12)};
  require(oracle::double_cosets(*sd.product.group, hs).size() == 14 && sd.target->dimension() == 14, "target dimension");
  require(structure_constants(sd.source).size() > 0, "empty table");
  require_map(verify_algebra_map(sd.algebra_map("semidirect")));
  return "quotient (S4,D4)/V4 = (S3,S2); product with (Z/2,1); S2 <= S3 <= S4; s = (23); wreath dimension 6 + 8 = 14";
}

// 9. Cocycles.
std::string cocycles() {
  S3 s;
  auto ctx = function_fixture(s.g, s.s2);
  auto f = ctx->algebra();
  Element u(f);
  for (int g = 0; g < 6; ++g) {
    // Right cosets S2 g: {id, (12)}, {(23), (123)}, {(13), (132)} carry 1, 2, 3.
    int rep = std::min(g, s.g->multiply(s.t12, g));
    long value = rep == 0 ? 1 : (rep == s.t23 ? 2 : 3);
    u.add_term({g}, Q.from_int(value));
  }
  auto chi = coboundary_from_unit(*ctx->action(), u);
  auto report = cocycle_report(ctx, chi);
  if (auto bad = report.first_failure()) throw Failure{"coboundary: " + bad->name + " " + bad->detail};
  require_map(verify_algebra_map(cocycle_transport(ctx, chi).algebra_map("coboundary transport")));

  auto a = make_group_algebra(Q, s.g);
  auto trivial = HeckeContext::make(trivial_action(s.g, a), trivial_subgroup(s.g));
  auto inner = cocycle_transport(trivial, inner_cocycle(*trivial->action()));
  auto conj = conjugation_action(s.g, a);
  for (int g = 0; g < 6; ++g) {
    for (const auto& l : a->basis()) require(inner.target->action()->apply_label(g, l) == conj->apply_label(g, l), "twist is not conjugation");
  }
  require_map(verify_algebra_map(inner.algebra_map("Q[S3] x| S3 from the trivial action")));
  require_map(verify_algebra_map(tensor_model(trivial)));

  auto whole = HeckeContext::make(trivial_action(s.g, a), whole_group(s.g));
  auto bad = cocycle_report(whole, inner_cocycle(*whole->action()));
  auto failure = bad.first_failure();
  require(failure && failure->name == "(c) trivial on H" && failure->detail == "h=(12)", "violation of (c) not detected");
  require(whole->dimension() == 6 && conjugation_fixture(s.g, whole_group(s.g))->dimension() == 3,
          "violating fixture does not exhibit the dimension gap");
  return "coboundary automorphism; Q[S3] x| S3 = Q[S3] tensor Q[S3]; (c) violation caught at h=(12), dims 6 vs 3";
}

// 10. Grading.
std::string grading() {
  S3 s;
  auto ctx = polynomial_fixture(s.g, s.s2, 2);
  auto basis = module_elements(ctx);
  std::size_t nonzero = 0;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    require(graded_degree(basis[i]) == ctx->module_basis()[i].degree, "basis " + std::to_string(i) + " not homogeneous");
    for (std::size_t j = 0; j < basis.size(); ++j) {
      auto p = convolve(basis[i], basis[j]);
      if (p.is_zero()) continue;
      ++nonzero;
      require(graded_degree(p) == ctx->module_basis()[i].degree + ctx->module_basis()[j].degree,
              "pair (" + std::to_string(i) + ", " + std::to_string(j) + ")");
    }
  }
  return std::to_string(basis.size() * basis.size()) + " basis pairs, " + std::to_string(nonzero) + " nonzero";
}

// 11. Opposite transport.
std::string opposite() {
  S3 s;
  auto ctx = conjugation_fixture(s.g, s.s2);
  auto t = opposite_transport(ctx);
  std::mt19937_64 rng(11);
  for (int i = 0; i < 100; ++i) {
    auto x = random_hecke(ctx, rng), y = random_hecke(ctx, rng);
    require(t.map(convolve(x, y)) == convolve(t.map(y), t.map(x)), "pair " + std::to_string(i));
  }
  require_map(verify_algebra_map(t.algebra_map("opposite", true, true)));
  auto poly = polynomial_fixture(s.g, s.s2, 2);
  auto p = opposite_transport(poly);
  auto back = opposite_transport(p.target);
  for (std::size_t i = 0; i < poly->dimension(); ++i) {
    auto b = module_basis_element(poly, i);
    std::vector<Element> values;
    const auto round_trip = back.map(p.map(b));
    for (const auto& v : round_trip.values()) values.push_back(relabel_algebra(v, poly->algebra()));
    HeckeElement twice(poly, values);
    require(twice == b, "not involutive on basis " + std::to_string(i) + ": " + b.to_string() + " -> " + twice.to_string());
  }
  return "100 random pairs in Q[S3] with conjugation; involutive on polynomials";
}

// 12. Associativity and unit.
std::string associativity() {
  std::size_t contexts = 0;
  for (const auto& [name, ctx] : fixture_contexts(2)) {
    ++contexts;
    std::mt19937_64 rng(12);
    auto one = hecke_identity(ctx);
    for (int t = 0; t < 100; ++t) {
      auto x = random_hecke(ctx, rng), y = random_hecke(ctx, rng), z = random_hecke(ctx, rng);
      require(convolve(convolve(x, y), z) == convolve(x, convolve(y, z)), name + ": triple " + std::to_string(t));
      require(convolve(one, x) == x && convolve(x, one) == x, name + ": unit at triple " + std::to_string(t));
    }
  }
  return std::to_string(contexts) + " contexts, 100 triples each";
}

// 13. Relativisation.
std::string relativisation() {
  std::size_t contexts = 0;
  for (const auto& [name, ctx] : fixture_contexts(2)) {
    ++contexts;
    auto inv = subgroup_invariants(ctx);
    std::vector<SparseVector> images;
    for (std::size_t i = 0; i < inv.size(); ++i) {
      auto m = relativise(ctx, inv[i]);
      images.push_back(matrix_coordinates(m));
      require(m == to_matrix(embed_invariant(ctx, inv[i])), name + ": factorisation at " + inv[i].to_string());
      for (std::size_t j = 0; j < inv.size(); ++j) {
        require(relativise(ctx, inv[i] * inv[j]) == matrix_product(m, relativise(ctx, inv[j])),
                name + ": pair (" + std::to_string(i) + ", " + std::to_string(j) + ")");
      }
    }
    require(sparse_rank(images, Q) == inv.size(), name + ": not injective");
  }
  return std::to_string(contexts) + " contexts";
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<std::string()>>> criteria = {
      {"classical product formula", classical_formula},
      {"S3/S2 polynomial product closed form", polynomial_formula},
      {"bimodule decomposition", decomposition},
      {"G-invariant matrix model", matrix_model},
      {"corner ring", corner},
      {"Stone isomorphism", stone},
      {"special cases", special_cases},
      {"group operation transports", transports},
      {"cocycle transport", cocycles},
      {"grading", grading},
      {"opposite transport", opposite},
      {"associativity and unit", associativity},
      {"relativisation", relativisation},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    std::string status = "PASS", detail;
    try {
      detail = criteria[i].second();
    } catch (const Failure& f) {
      status = "FAIL";
      detail = f.detail;
    } catch (const std::exception& e) {
      status = "FAIL";
      detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (status == "FAIL") ++failures;
    std::ostringstream line;
    line.precision(2);
    line << std::fixed << status << " " << (i + 1) << " " << criteria[i].first << ": " << detail << " (" << secs << " s)";
    std::cout << line.str() << std::endl;
  }
  return failures == 0 ? 0 : 1;
}
