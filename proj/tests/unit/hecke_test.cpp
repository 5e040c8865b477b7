#include <random>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "skewhecke/literal.hpp"
#include "skewhecke/special_cases.hpp"
#include "skewhecke/standard_contexts.hpp"

using namespace skh;

namespace {

const Field Q = Field::rationals();

struct S3 {
  GroupPtr g = symmetric_group(3);
  Subgroup s2 = subgroup_by_names(g, {"(12)"});
  int t12 = *g->find("(12)");
  int t23 = *g->find("(23)");
  int t13 = *g->find("(13)");
};

Element scalar(const ContextPtr& ctx, long n) { return Element::scalar(ctx->algebra(), ctx->field().from_int(n)); }

HeckeElement pair(const ContextPtr& ctx, long r, long s) { return hecke_from_values(ctx, {scalar(ctx, r), scalar(ctx, s)}); }

}  // namespace

TEST(Hecke, ValuesAndExpansion) {
  S3 s;
  auto ctx = polynomial_fixture(s.g, s.s2, 2);
  auto p = ctx->algebra();
  auto a = variable(p, 1) + variable(p, 2);
  auto b = variable(p, 1) * variable(p, 3);
  auto phi = hecke_from_values(ctx, {a, b});
  auto values = hecke_expand(phi);
  ASSERT_EQ(values.size(), 3u);
  EXPECT_EQ(values[0], a);
  EXPECT_EQ(values[1], b);
  EXPECT_EQ(values[2], ctx->action()->apply(s.t12, b));
  EXPECT_EQ(values[2], variable(p, 2) * variable(p, 3));
  EXPECT_EQ(hecke_from_expanded(ctx, values), phi);
  auto broken = values;
  broken[2] = b;
  EXPECT_THROW(hecke_from_expanded(ctx, broken), InvarianceError);
}

TEST(Hecke, RejectsValueNotFixedByStabilizer) {
  S3 s;
  auto ctx = polynomial_fixture(s.g, s.s2, 2);
  try {
    hecke_from_values(ctx, {variable(ctx->algebra(), 1), Element(ctx->algebra())});
    FAIL() << "accepted x1 at the identity coset";
  } catch (const InvarianceError& e) {
    EXPECT_EQ(e.witness(), s.t12);
  }
  EXPECT_TRUE(hecke_from_values(ctx, {Element(ctx->algebra()), Element(ctx->algebra())}).is_zero());
  EXPECT_EQ(hecke_from_values(ctx, {Element(ctx->algebra()), Element(ctx->algebra())}), hecke_zero(ctx));
}

TEST(Hecke, ExpansionAtExtremeSubgroups) {
  S3 s;
  auto whole = conjugation_fixture(s.g, whole_group(s.g));
  auto unit = hecke_identity(whole);
  EXPECT_EQ(hecke_expand(unit).size(), 1u);
  auto trivial = conjugation_fixture(s.g, trivial_subgroup(s.g));
  EXPECT_EQ(trivial->cosets().orbit_count(), 6u);
  EXPECT_EQ(trivial->dimension(), 36u);
  std::mt19937_64 rng(1);
  auto phi = random_hecke(trivial, rng);
  EXPECT_EQ(hecke_expand(phi), phi.values());
}

TEST(Hecke, ClassicalProduct) {
  S3 s;
  auto ctx = classical_fixture(s.g, s.s2);
  for (long r = -2; r <= 2; ++r) {
    for (long t = -2; t <= 2; ++t) {
      long r2 = 3 - t, s2 = r + 1;
      EXPECT_EQ(convolve(pair(ctx, r, t), pair(ctx, r2, s2)), pair(ctx, r * r2 + 2 * t * s2, r * s2 + t * r2 + t * s2));
    }
  }
  EXPECT_EQ(convolve(pair(ctx, 0, 1), pair(ctx, 0, 1)), pair(ctx, 2, 1));
}

TEST(Hecke, PolynomialProductClosedForm) {
  S3 s;
  auto ctx = polynomial_fixture(s.g, s.s2, 2);
  std::mt19937_64 rng(5);
  for (int t = 0; t < 30; ++t) {
    auto x = random_hecke(ctx, rng);
    auto y = random_hecke(ctx, rng);
    auto [first, second] = oracle::s3_closed_form(x.value(0), x.value(1), y.value(0), y.value(1));
    auto p = convolve(x, y);
    EXPECT_EQ(p.value(0), first);
    EXPECT_EQ(p.value(1), second);
  }
  auto p = ctx->algebra();
  auto x1 = variable(p, 1);
  auto b = hecke_from_values(ctx, {Element(p), x1});
  auto sq = convolve(b, b);
  EXPECT_EQ(sq.value(0), x1 * x1 + variable(p, 2) * variable(p, 2));
  EXPECT_EQ(sq.value(1), variable(p, 2) * variable(p, 3));
}

TEST(Hecke, ConvolutionMatchesSumOverGroup) {
  for (const auto& [name, ctx] : fixture_contexts(1)) {
    std::mt19937_64 rng(17);
    for (int t = 0; t < 4; ++t) {
      auto x = random_hecke(ctx, rng);
      auto y = random_hecke(ctx, rng);
      EXPECT_EQ(oracle::lift_to_group(convolve(x, y)), oracle::convolution_on_group(x, y)) << name;
    }
  }
}

TEST(Hecke, RepresentativeIndependence) {
  S3 s;
  auto ctx = conjugation_fixture(s.g, s.s2);
  std::mt19937_64 rng(2);
  std::vector<std::vector<int>> choices;
  const auto& cs = ctx->cosets();
  for (int a : cs.coset(0)) {
    for (int b : cs.coset(1)) {
      for (int c : cs.coset(2)) choices.push_back({a, b, c});
    }
  }
  for (int t = 0; t < 10; ++t) {
    auto x = random_hecke(ctx, rng);
    auto y = random_hecke(ctx, rng);
    auto expected = convolve(x, y);
    for (const auto& reps : choices) EXPECT_EQ(convolve_with_representatives(x, y, reps), expected);
  }
  EXPECT_THROW(convolve_with_representatives(hecke_identity(ctx), hecke_identity(ctx), {0, s.t12, s.t13}),
               std::invalid_argument);
}

TEST(Hecke, IdentityAndContextMismatch) {
  S3 s;
  auto ctx = classical_fixture(s.g, s.s2);
  auto one = hecke_identity(ctx);
  EXPECT_EQ(one, pair(ctx, 1, 0));
  EXPECT_EQ(convolve(one, one), one);
  auto other = classical_fixture(s.g, s.s2);
  EXPECT_THROW(convolve(one, hecke_identity(other)), std::invalid_argument);

  auto whole = conjugation_fixture(s.g, whole_group(s.g));
  EXPECT_EQ(expectation(hecke_identity(whole)), Element::unit(whole->algebra()));
}

TEST(Hecke, EmbedInvariant) {
  S3 s;
  auto ctx = polynomial_fixture(s.g, s.s2, 2);
  auto p = ctx->algebra();
  auto a = variable(p, 1) + variable(p, 2);
  auto a2 = variable(p, 3);
  EXPECT_EQ(embed_invariant(ctx, Element::unit(p)), hecke_identity(ctx));
  auto ea = embed_invariant(ctx, a);
  EXPECT_EQ(ea.value(0), a);
  EXPECT_TRUE(ea.value(1).is_zero());
  EXPECT_EQ(convolve(ea, embed_invariant(ctx, a2)), embed_invariant(ctx, a * a2));
  EXPECT_THROW(embed_invariant(ctx, variable(p, 1)), InvarianceError);
  EXPECT_EQ(expectation(ea), a);

  // a ∗ φ ∗ a' has values a φ(g_i H) α_{g_i} a'.
  std::mt19937_64 rng(4);
  for (int t = 0; t < 10; ++t) {
    auto phi = random_hecke(ctx, rng);
    auto both = convolve(convolve(ea, phi), embed_invariant(ctx, a2));
    EXPECT_EQ(both.value(0), a * phi.value(0) * a2);
    EXPECT_EQ(both.value(1), a * phi.value(1) * ctx->action()->apply(s.t23, a2));
  }
}

TEST(Hecke, EmbedScalarHecke) {
  S3 s;
  auto ctx = polynomial_fixture(s.g, s.s2, 2);
  auto classical = classical_fixture(s.g, s.s2);
  auto one = Element::unit(ctx->algebra());
  EXPECT_EQ(embed_scalar_hecke(ctx, hecke_identity(classical)), hecke_identity(ctx));
  auto t = embed_scalar_hecke(ctx, pair(classical, 0, 1));
  EXPECT_EQ(t, hecke_from_values(ctx, {Element(ctx->algebra()), one}));
  EXPECT_EQ(convolve(t, t), hecke_from_values(ctx, {Q.from_int(2) * one, one}));
  std::mt19937_64 rng(9);
  for (int i = 0; i < 10; ++i) {
    auto x = random_hecke(classical, rng);
    auto y = random_hecke(classical, rng);
    EXPECT_EQ(embed_scalar_hecke(ctx, convolve(x, y)), convolve(embed_scalar_hecke(ctx, x), embed_scalar_hecke(ctx, y)));
  }
  EXPECT_THROW(embed_scalar_hecke(ctx, hecke_identity(ctx)), std::invalid_argument);
}

TEST(Hecke, ExpectationOfProduct) {
  S3 s;
  auto ctx = polynomial_fixture(s.g, s.s2, 2);
  std::mt19937_64 rng(6);
  const oracle::Perm t12 = {1, 0, 2}, t23 = {0, 2, 1};
  for (int t = 0; t < 10; ++t) {
    auto b = random_hecke(ctx, rng).value(1);
    auto b2 = random_hecke(ctx, rng).value(1);
    auto x = hecke_from_values(ctx, {Element(ctx->algebra()), b});
    auto y = hecke_from_values(ctx, {Element(ctx->algebra()), b2});
    auto cross = b * oracle::permute_polynomial(b2, t23);
    EXPECT_EQ(expectation(convolve(x, y)), cross + oracle::permute_polynomial(cross, t12));
  }
}

TEST(Hecke, DimensionsMatchOrbitCounts) {
  for (const auto& [name, ctx] : fixture_contexts(2)) {
    const auto& a = ctx->algebra();
    if (name.find("Q[") == std::string::npos && name.find("functions") == std::string::npos &&
        name.find("polynomials") == std::string::npos) {
      // A = Q: the dimension is the number of double cosets.
      EXPECT_EQ(ctx->dimension(), oracle::double_cosets(*ctx->group(), ctx->subgroup().elements()).size()) << name;
      continue;
    }
    auto labels = a->basis_up_to(ctx->max_degree());
    EXPECT_EQ(ctx->dimension(),
              oracle::hecke_dimension(*ctx->group(), ctx->subgroup().elements(), labels, oracle::label_permutation(*ctx->action())))
        << name;
  }
}

TEST(Hecke, DimensionSpecialisations) {
  S3 s;
  EXPECT_EQ(conjugation_fixture(s.g, trivial_subgroup(s.g))->dimension(), 36u);
  EXPECT_EQ(conjugation_fixture(s.g, whole_group(s.g))->dimension(), 3u);  // class sums
  EXPECT_EQ(function_fixture(s.g, whole_group(s.g))->dimension(), 1u);
  EXPECT_EQ(classical_fixture(s.g, s.s2)->dimension(), 2u);
  EXPECT_EQ(polynomial_fixture(s.g, s.s2, 1)->dimension(), 7u);
  EXPECT_EQ(polynomial_fixture(s.g, s.s2, 2)->dimension(), 17u);
}

TEST(Hecke, StructureConstantsClassical) {
  S3 s;
  auto ctx = classical_fixture(s.g, s.s2);
  auto rows = structure_constants(ctx);
  std::map<std::tuple<std::size_t, std::size_t, std::size_t>, Scalar> table;
  for (const auto& r : rows) table[{r.i, r.j, r.k}] = r.coeff;
  EXPECT_EQ(table.size(), 5u);
  EXPECT_EQ((table[std::make_tuple(0u, 0u, 0u)]), Q.one());
  EXPECT_EQ((table[std::make_tuple(0u, 1u, 1u)]), Q.one());
  EXPECT_EQ((table[std::make_tuple(1u, 0u, 1u)]), Q.one());
  EXPECT_EQ((table[std::make_tuple(1u, 1u, 0u)]), Q.from_int(2));
  EXPECT_EQ((table[std::make_tuple(1u, 1u, 1u)]), Q.one());
  auto text = structure_constants_text(ctx);
  EXPECT_NE(text.find("1\t1\t0\t2"), std::string::npos);
}

TEST(Hecke, StructureConstantsAgreeWithIndicatorConvolution) {
  auto s4 = symmetric_group(4);
  for (auto gens : std::vector<std::vector<std::string>>{{"(12)"}, {"(12)", "(23)"}, {"(1234)", "(13)"}}) {
    auto h = subgroup_by_names(s4, gens);
    auto ctx = classical_fixture(s4, h);
    auto c = oracle::classical_constants(*s4, h.elements());
    auto dcs = oracle::double_cosets(*s4, h.elements());
    ASSERT_EQ(ctx->dimension(), dcs.size());
    // Match library basis elements (indicators of orbits) to brute-force double cosets.
    std::vector<std::size_t> index(ctx->dimension());
    for (std::size_t i = 0; i < ctx->dimension(); ++i) {
      int rep = ctx->cosets().representative(ctx->cosets().orbit_representative(ctx->module_basis()[i].orbit));
      for (std::size_t d = 0; d < dcs.size(); ++d) {
        if (std::find(dcs[d].begin(), dcs[d].end(), rep) != dcs[d].end()) index[i] = d;
      }
    }
    std::vector<std::vector<std::vector<Scalar>>> table(
        dcs.size(), std::vector<std::vector<Scalar>>(dcs.size(), std::vector<Scalar>(dcs.size(), Q.zero())));
    for (const auto& r : structure_constants(ctx)) table[r.i][r.j][r.k] = r.coeff;
    for (std::size_t i = 0; i < dcs.size(); ++i) {
      for (std::size_t j = 0; j < dcs.size(); ++j) {
        for (std::size_t k = 0; k < dcs.size(); ++k) {
          EXPECT_EQ(table[i][j][k], oracle::to_scalar(c[index[i]][index[j]][index[k]]));
        }
      }
    }
  }
}

TEST(Hecke, StructureConstantsWholeGroupAreInvariantAlgebra) {
  S3 s;
  auto ctx = conjugation_fixture(s.g, whole_group(s.g));
  auto inv = make_invariant_subalgebra(ctx->action(), whole_group(s.g));
  EXPECT_EQ(structure_constants(ctx), algebra_structure_constants(*inv, inv->basis()));
}

TEST(Hecke, StructureConstantsReproduceProducts) {
  S3 s;
  auto ctx = conjugation_fixture(s.g, s.s2);
  const auto n = ctx->dimension();
  std::vector<std::vector<Vector>> prod(n, std::vector<Vector>(n, zero_vector(Q, n)));
  for (const auto& r : structure_constants(ctx)) prod[r.i][r.j][r.k] = r.coeff;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      EXPECT_EQ(from_module_coordinates(ctx, prod[i][j]),
                convolve(module_basis_element(ctx, i), module_basis_element(ctx, j)));
    }
  }
}

TEST(Hecke, GradedDegree) {
  S3 s;
  auto ctx = polynomial_fixture(s.g, s.s2, 2);
  auto p = ctx->algebra();
  EXPECT_EQ(graded_degree(hecke_from_values(ctx, {variable(p, 1) + variable(p, 2), variable(p, 3)})), 1);
  EXPECT_EQ(graded_degree(hecke_identity(ctx)), 0);
  EXPECT_EQ(graded_degree(hecke_from_values(ctx, {Element::unit(p), variable(p, 1)})), std::nullopt);
  EXPECT_EQ(graded_degree(hecke_zero(ctx)), std::nullopt);
  for (std::size_t i = 0; i < ctx->dimension(); ++i) {
    for (std::size_t j = 0; j < ctx->dimension(); ++j) {
      auto x = module_basis_element(ctx, i), y = module_basis_element(ctx, j);
      auto z = convolve(x, y);
      if (!z.is_zero()) EXPECT_EQ(graded_degree(z), *graded_degree(x) + *graded_degree(y));
    }
  }
}

TEST(Hecke, ModuleCoordinatesRoundTrip) {
  for (const auto& [name, ctx] : fixture_contexts(2)) {
    std::mt19937_64 rng(8);
    for (int t = 0; t < 5; ++t) {
      auto x = random_hecke(ctx, rng);
      EXPECT_EQ(from_module_coordinates(ctx, module_coordinates(x)), x) << name;
    }
  }
  S3 s;
  auto ctx = polynomial_fixture(s.g, s.s2, 1);
  auto p = ctx->algebra();
  auto high = hecke_from_values(ctx, {Element(p), variable(p, 1) * variable(p, 1)});
  EXPECT_THROW(module_coordinates(high), std::out_of_range);
  EXPECT_FALSE(hecke_coordinates(high).empty());
}

TEST(Hecke, Literals) {
  S3 s;
  auto ctx = polynomial_fixture(s.g, s.s2, 2);
  std::mt19937_64 rng(12);
  for (int t = 0; t < 10; ++t) {
    auto x = random_hecke(ctx, rng);
    EXPECT_EQ(parse_hecke(ctx, x.to_string()), x);
  }
  auto p = ctx->algebra();
  // Any element of the coset may be named; (13)S2 is in the orbit of (23)S2.
  auto via13 = parse_hecke(ctx, "[((13), [(x2, 1)])]");
  EXPECT_EQ(via13, hecke_from_values(ctx, {Element(p), variable(p, 1)}));
  EXPECT_THROW(parse_hecke(ctx, "[((23), 1), ((13), 1)]"), std::invalid_argument);
  EXPECT_THROW(parse_hecke(ctx, "[(id, [(x1, 1)])]"), std::invalid_argument);
}

TEST(Hecke, NormalSubgroupAndTrivialActionModels) {
  S3 s;
  auto a3 = subgroup_by_names(s.g, {"(123)"});
  auto normal = verify_algebra_map(normal_subgroup_model(conjugation_fixture(s.g, a3)));
  EXPECT_TRUE(normal.isomorphism()) << normal.report.to_text();
  auto triv = HeckeContext::make(trivial_action(s.g, make_matrix(Q, 2)), s.s2);
  auto tensor = verify_algebra_map(tensor_model(triv));
  EXPECT_TRUE(tensor.isomorphism()) << tensor.report.to_text();
  EXPECT_THROW(normal_subgroup_model(conjugation_fixture(s.g, s.s2)), std::invalid_argument);
}
