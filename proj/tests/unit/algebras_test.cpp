#include <gtest/gtest.h>

#include "oracles.hpp"
#include "skewhecke/invariants.hpp"
#include "skewhecke/literal.hpp"
#include "skewhecke/standard_contexts.hpp"

using namespace skh;

namespace {

const Field Q = Field::rationals();

Element g_elem(const AlgebraPtr& a, const GroupPtr& g, const char* name) { return Element::basis(a, {*g->find(name)}); }

}  // namespace

TEST(Algebras, GroupAlgebraZ2) {
  auto z2 = cyclic_group(2);
  auto a = make_group_algebra(Q, z2);
  EXPECT_EQ(a->dimension(), 2u);
  auto t = Element::basis(a, {1});
  EXPECT_EQ(t * t, Element::unit(a));
}

TEST(Algebras, GroupAlgebraS3) {
  auto s3 = symmetric_group(3);
  auto a = make_group_algebra(Q, s3);
  EXPECT_EQ(a->dimension(), 6u);
  EXPECT_FALSE(a->commutative());
  EXPECT_NE(g_elem(a, s3, "(12)") * g_elem(a, s3, "(23)"), g_elem(a, s3, "(23)") * g_elem(a, s3, "(12)"));
  EXPECT_FALSE(check_associative_unital(*a, a->basis()));
}

TEST(Algebras, GroupAlgebraCube) {
  auto a = make_group_algebra(Q, power_group(cyclic_group(2), 3));
  EXPECT_EQ(a->dimension(), 8u);
  EXPECT_TRUE(a->commutative());
}

TEST(Algebras, Functions) {
  auto s3 = symmetric_group(3);
  auto f = make_functions(Q, s3);
  EXPECT_EQ(f->dimension(), 6u);
  auto d12 = Element::basis(f, {*s3->find("(12)")});
  EXPECT_EQ(d12 * d12, d12);
  EXPECT_TRUE((d12 * Element::basis(f, {0})).is_zero());
  Element sum(f);
  for (const auto& l : f->basis()) sum += Element::basis(f, l);
  EXPECT_EQ(sum, Element::unit(f));
  for (const auto& l : f->basis()) EXPECT_EQ(sum * Element::basis(f, l), Element::basis(f, l));
  auto one = make_functions(Q, cyclic_group(1));
  EXPECT_EQ(one->dimension(), 1u);
  EXPECT_EQ(Element::basis(one, {0}), Element::unit(one));
}

TEST(Algebras, Polynomials) {
  auto p = make_polynomial(Q, 3, 4);
  auto x1 = variable(p, 1), x2 = variable(p, 2), x3 = variable(p, 3);
  EXPECT_EQ(x1 * x2, Element::basis(p, {1, 1, 0}));
  EXPECT_EQ(p->basis_of_degree(1).size(), 3u);
  EXPECT_EQ(p->basis_of_degree(2).size(), 6u);
  auto prod = (x1 + x2) * x3;
  EXPECT_EQ(prod, Element::basis(p, {1, 0, 1}) + Element::basis(p, {0, 1, 1}));
  EXPECT_EQ(prod.homogeneous_degree(), 2);
  EXPECT_EQ((x1 + Element::unit(p)).homogeneous_degree(), std::nullopt);
  EXPECT_THROW(p->basis_of_degree(5), std::out_of_range);
  EXPECT_EQ(p->basis_up_to(1).size(), 4u);
}

TEST(Algebras, Matrices) {
  auto m2 = make_matrix(Q, 2);
  auto e = [&](int i, int j) { return Element::basis(m2, {i, j}); };
  EXPECT_EQ(e(0, 1) * e(1, 0), e(0, 0));
  EXPECT_TRUE((e(0, 1) * e(0, 1)).is_zero());
  EXPECT_EQ(make_matrix(Q, 3)->dimension(), 9u);
  EXPECT_EQ(m2->format_label({0, 1}), "E[1,2]");
}

TEST(Algebras, TensorOfGroupAlgebrasIsGroupAlgebraOfProduct) {
  auto z2 = cyclic_group(2);
  auto t = make_tensor(make_group_algebra(Q, z2), make_group_algebra(Q, z2));
  auto prod = direct_product(z2, z2);
  auto g = make_group_algebra(Q, prod.group);
  EXPECT_EQ(t->dimension(), 4u);
  // Tensor label (a, b) corresponds to the product element a * |B| + b.
  std::vector<Label> tb, gb;
  for (int a = 0; a < 2; ++a) {
    for (int b = 0; b < 2; ++b) {
      tb.push_back({a, b});
      gb.push_back({prod.element(a, b)});
    }
  }
  EXPECT_EQ(algebra_structure_constants(*t, tb), algebra_structure_constants(*g, gb));
}

TEST(Algebras, TensorDimensionsAndUnit) {
  auto s3 = symmetric_group(3);
  auto a = make_group_algebra(Q, s3);
  auto b = make_matrix(Q, 2);
  auto t = make_tensor(a, b);
  EXPECT_EQ(t->dimension(), 24u);
  EXPECT_EQ(tensor_elements(t, Element::unit(a), Element::unit(b)), Element::unit(t));
  EXPECT_THROW(make_tensor(a, make_matrix(Field::prime(3), 2)), std::invalid_argument);
  EXPECT_FALSE(check_associative_unital(*t, t->basis()));
}

TEST(Algebras, Opposite) {
  auto s3 = symmetric_group(3);
  auto a = make_group_algebra(Q, s3);
  auto op = make_opposite(a);
  // Right-to-left composition: (12)(23) = (123), so the opposite gives (132).
  auto x = g_elem(op, s3, "(12)") * g_elem(op, s3, "(23)");
  EXPECT_EQ(x, g_elem(op, s3, "(132)"));
  EXPECT_EQ(g_elem(a, s3, "(12)") * g_elem(a, s3, "(23)"), g_elem(a, s3, "(123)"));
  auto opop = make_opposite(op);
  EXPECT_EQ(algebra_structure_constants(*opop, a->basis()), algebra_structure_constants(*a, a->basis()));
  auto p = make_polynomial(Q, 2, 3);
  auto pop = make_opposite(p);
  for (const auto& l : p->basis_up_to(1)) {
    for (const auto& r : p->basis_up_to(1)) EXPECT_EQ(pop->multiply(l, r), p->multiply(l, r));
  }
}

TEST(Algebras, ElementLiterals) {
  auto p = make_polynomial(Q, 3, 4);
  auto e = parse_element(p, "[(x1^2, 3), (x2*x3, -1/2)]");
  EXPECT_EQ(parse_element(p, e.to_string()), e);
  EXPECT_EQ(parse_element(p, "5"), Element::scalar(p, Q.from_int(5)));
  EXPECT_EQ(parse_element(p, "[]"), Element(p));
  EXPECT_THROW(parse_element(p, "[(x4, 1)]"), std::invalid_argument);
  auto s3 = symmetric_group(3);
  auto g = make_group_algebra(Q, s3);
  auto y = parse_element(g, "[((12), 1), ((123), 2)]");
  EXPECT_EQ(y, g_elem(g, s3, "(12)") + Q.from_int(2) * g_elem(g, s3, "(123)"));
}

TEST(Actions, PermutationAndTranslation) {
  auto s3 = symmetric_group(3);
  auto p = make_polynomial(Q, 3, 4);
  auto alpha = permute_variables(s3, p);
  int t12 = *s3->find("(12)");
  EXPECT_EQ(alpha->apply(t12, variable(p, 1)), variable(p, 2));
  EXPECT_TRUE(verify_action(*alpha, 3).passed());

  auto f = make_functions(Q, s3);
  auto lt = left_translation(s3, f);
  for (int g = 0; g < 6; ++g) {
    for (int k = 0; k < 6; ++k) EXPECT_EQ(lt->apply(g, Element::basis(f, {k})), Element::basis(f, {s3->multiply(g, k)}));
  }
  EXPECT_TRUE(verify_action(*lt, 0).passed());

  auto triv = trivial_action(s3, p);
  EXPECT_EQ(triv->apply(t12, variable(p, 1)), variable(p, 1));
  EXPECT_TRUE(verify_action(*triv, 2).passed());
}

TEST(Actions, VerificationCatchesBrokenMap) {
  auto z2 = cyclic_group(2);
  auto p = make_polynomial(Q, 1, 4);
  auto x = variable(p, 1);
  // The generator sends x1 to x1 + 1: degree is not preserved.
  auto alpha = action_on_generators(z2, p, {{x}, {x + Element::unit(p)}});
  auto report = verify_action(*alpha, 2);
  EXPECT_FALSE(report.passed());
  ASSERT_TRUE(report.first_failure());
  EXPECT_FALSE(report.first_failure()->detail.empty());
  EXPECT_THROW(HeckeContext::make(alpha, trivial_subgroup(z2)), std::invalid_argument);

  // Not a homomorphism: the generator of Z/2 acting by x1 -> 2 x1 squares to 4 x1.
  auto beta = action_on_generators(z2, p, {{x}, {Q.from_int(2) * x}});
  EXPECT_FALSE(verify_action(*beta, 2).passed());
}

TEST(Invariants, PolynomialsUnderS2) {
  auto s3 = symmetric_group(3);
  auto p = make_polynomial(Q, 3, 4);
  auto alpha = permute_variables(s3, p);
  auto s2 = subgroup_by_names(s3, {"(12)"});
  auto inv = invariants_compute(*alpha, s2, 1);
  ASSERT_EQ(inv.size(), 3u);
  std::vector<Element> expected = {Element::unit(p), variable(p, 1) + variable(p, 2), variable(p, 3)};
  EXPECT_EQ(element_rank(expected), 3u);
  auto both = inv;
  both.insert(both.end(), expected.begin(), expected.end());
  EXPECT_EQ(element_rank(both), 3u);
  EXPECT_THROW(invariants_compute(*alpha, s2), std::invalid_argument);
  EXPECT_EQ(fixed_violation(*alpha, s2, variable(p, 1)), *s3->find("(12)"));
  EXPECT_FALSE(fixed_violation(*alpha, s2, variable(p, 3)));
}

TEST(Invariants, FunctionsUnderWholeGroup) {
  auto s3 = symmetric_group(3);
  auto f = make_functions(Q, s3);
  auto inv = invariants_compute(*left_translation(s3, f), whole_group(s3));
  ASSERT_EQ(inv.size(), 1u);
  EXPECT_EQ(element_rank({inv[0], Element::unit(f)}), 1u);
}

TEST(Invariants, TrivialActionFixesEverything) {
  auto s3 = symmetric_group(3);
  auto a = make_group_algebra(Q, s3);
  EXPECT_EQ(invariants_compute(*trivial_action(s3, a), whole_group(s3)).size(), 6u);
}

TEST(Invariants, DimensionsMatchOrbitCounts) {
  auto s4 = symmetric_group(4);
  auto p = make_polynomial(Q, 4, 6);
  auto alpha = permute_variables(s4, p);
  auto pi = oracle::label_permutation(*alpha);
  for (auto gens : std::vector<std::vector<std::string>>{{"(12)"}, {"(12)", "(23)"}, {"(1234)", "(13)"}, {"(12)(34)"}}) {
    auto h = subgroup_by_names(s4, gens);
    for (int d = 0; d <= 3; ++d) {
      EXPECT_EQ(invariant_space(*alpha, h, d).basis.size(), oracle::orbit_count(p->basis_of_degree(d), h.elements(), pi));
    }
  }
  auto g = make_group_algebra(Q, s4);
  auto conj = conjugation_action(s4, g);
  auto cpi = oracle::label_permutation(*conj);
  for (auto gens : std::vector<std::vector<std::string>>{{"(12)"}, {"(1234)", "(13)"}, {"(12)", "(234)"}}) {
    auto h = subgroup_by_names(s4, gens);
    EXPECT_EQ(invariants_compute(*conj, h).size(), oracle::orbit_count(g->basis(), h.elements(), cpi));
  }
}

TEST(Invariants, PrimeCharacteristicWithoutAveraging) {
  // Over GF(2) the averaging operator is unavailable, the nullspace still works.
  auto s3 = symmetric_group(3);
  auto f2 = Field::prime(2);
  auto p = make_polynomial(f2, 3, 4);
  auto alpha = permute_variables(s3, p);
  auto s2 = subgroup_by_names(s3, {"(12)"});
  EXPECT_EQ(invariants_compute(*alpha, s2, 2).size(), 1u + 2u + 4u);
  EXPECT_THROW(averaging_image(*alpha, s2, 1), NotAUnit);
}

TEST(Invariants, InverseElements) {
  auto s3 = symmetric_group(3);
  auto a = make_group_algebra(Q, s3);
  auto g = g_elem(a, s3, "(123)");
  auto inv = inverse_element(g);
  ASSERT_TRUE(inv);
  EXPECT_EQ(*inv * g, Element::unit(a));
  auto t = g_elem(a, s3, "(12)");
  EXPECT_FALSE(inverse_element(Element::unit(a) + t));  // (1 + t) is a zero divisor
}
