#include <filesystem>

#include <gtest/gtest.h>

#include "skewhecke/literal.hpp"
#include "skewhecke_cli/commands.hpp"

using namespace skh;
using namespace skh::cli;

namespace {

std::string config_path(const std::string& name) { return std::string(SKEWHECKE_CONFIG_DIR) + "/" + name; }

Job job_from(const std::string& text, std::optional<int> cap = std::nullopt) { return build_job(parse_config(text), cap); }

const char* kClassical = R"(
[context]
field = Q
group = symmetric(3)
subgroup = generators[(12)]
)";

const char* kPolynomialLinear = R"(
[context]
group = symmetric(3)
subgroup = generators[ (12) ]
algebra = polynomial(3)
action = permute_variables
degree_cap = 1
)";

const char* kWholeGroupFunctions = R"(
[context]
group = symmetric(3)
subgroup = whole
algebra = functions
action = left_translation
)";

bool contains(const std::string& haystack, const std::string& needle) { return haystack.find(needle) != std::string::npos; }

}  // namespace

TEST(Config, RoundTripIsCanonical) {
  for (const auto& entry : std::filesystem::directory_iterator(SKEWHECKE_CONFIG_DIR)) {
    auto c = read_config_file(entry.path().string());
    auto printed = print_config(c);
    EXPECT_EQ(parse_config(printed), c) << entry.path();
    EXPECT_EQ(print_config(parse_config(printed)), printed) << entry.path();
  }
  auto c = parse_config(kPolynomialLinear);
  EXPECT_EQ(c.subgroup, "generators[(12)]");
  EXPECT_EQ(c.field, "Q");
  EXPECT_EQ(c.degree_cap, 1);
}

TEST(Config, DiagnosticsCarryLines) {
  try {
    parse_config("[context]\ngroup = symmetric(3)\nfoo = 1\n");
    FAIL();
  } catch (const ConfigError& e) {
    EXPECT_EQ(e.line(), 3);
    EXPECT_TRUE(contains(e.what(), "config:3:"));
  }
  EXPECT_THROW(parse_config("[context]\nfield = GF(6)\ngroup = cyclic(2)\n"), ConfigError);
  EXPECT_THROW(parse_config("[context]\nfield = Q\n"), ConfigError);
  EXPECT_THROW(parse_config("[nowhere]\n"), ConfigError);
  try {
    build_job(parse_config("[context]\ngroup = symmetric(3)\nsubgroup = generators[(14)]\n"));
    FAIL();
  } catch (const ConfigError& e) {
    EXPECT_EQ(e.line(), 3);
  }
  try {
    build_job(parse_config("[context]\ngroup = cyclic(2)\nalgebra = polynomial(1)\naction = permute_variables\n"));
    FAIL();
  } catch (const ConfigError& e) {
    EXPECT_EQ(e.line(), 4);
  }
}

TEST(Config, GroupSpecs) {
  EXPECT_EQ(parse_group("symmetric(4)")->order(), 24u);
  EXPECT_EQ(parse_group("cyclic(1)")->order(), 1u);
  EXPECT_EQ(parse_group("dihedral(4)")->order(), 8u);
  EXPECT_EQ(parse_group("power(cyclic(2),3)")->order(), 8u);
  EXPECT_EQ(parse_group("direct(symmetric(3),cyclic(2))")->order(), 12u);
  EXPECT_EQ(parse_group("wreath(cyclic(2),3)")->order(), 48u);
  EXPECT_EQ(parse_group("semidirect(power(cyclic(2),3),symmetric(3),permute_factors)")->order(), 48u);
  EXPECT_EQ(parse_group("table(0,1;1,0)")->order(), 2u);
  EXPECT_THROW(parse_group("table(0,1;0,1)"), std::invalid_argument);
  EXPECT_THROW(parse_group("semidirect(cyclic(2),symmetric(3),permute_factors)"), std::invalid_argument);
  EXPECT_THROW(parse_group("alternating(4)"), std::invalid_argument);
  auto s3 = parse_group("symmetric(3)");
  EXPECT_EQ(parse_subgroup(s3, "whole").order(), 6u);
  EXPECT_EQ(parse_subgroup(s3, "trivial").order(), 1u);
  EXPECT_EQ(parse_subgroup(s3, "generators[(123)]").order(), 3u);
}

TEST(Commands, Dims) {
  auto classical = dims_text(job_from(kClassical).ctx);
  EXPECT_TRUE(contains(classical, "double cosets = 2"));
  EXPECT_TRUE(contains(classical, "dim H = 2"));
  auto linear = dims_text(job_from(kPolynomialLinear).ctx);
  EXPECT_TRUE(contains(linear, "dim H (degree <= 1) = 7"));
  EXPECT_TRUE(contains(linear, "double coset H (23) H: stabilizer order 1"));
  auto whole = dims_text(job_from(kWholeGroupFunctions).ctx);
  EXPECT_TRUE(contains(whole, "dim H = 1"));
  auto group_algebra = R"(
[context]
group = symmetric(3)
subgroup = whole
algebra = group_algebra
action = conjugation
)";
  EXPECT_TRUE(contains(dims_text(job_from(group_algebra).ctx), "dim H = 3"));
}

TEST(Commands, DegreeCapOverride) {
  auto job = job_from(kPolynomialLinear, 2);
  EXPECT_EQ(job.ctx->degree_cap(), 2);
  EXPECT_EQ(job.ctx->dimension(), 17u);
}

TEST(Commands, Mul) {
  auto classical = job_from(kClassical);
  EXPECT_EQ(mul_text(classical.ctx, "[((23), 1)]", "[((23), 1)]"), "[(id, [(1, 2)]), ((23), [(1, 1)])]\n");
  auto poly = job_from(kPolynomialLinear, 2);
  auto out = mul_text(poly.ctx, "[((23), [(x1, 1)])]", "[((23), [(x1, 1)])]");
  auto expected = hecke_from_values(poly.ctx, {variable(poly.ctx->algebra(), 1) * variable(poly.ctx->algebra(), 1) +
                                                   variable(poly.ctx->algebra(), 2) * variable(poly.ctx->algebra(), 2),
                                               variable(poly.ctx->algebra(), 2) * variable(poly.ctx->algebra(), 3)});
  EXPECT_EQ(out, expected.to_string() + "\n");
  auto x = "[(id, [(x3, 2)]), ((23), [(x1*x2, -1)])]";
  EXPECT_EQ(mul_text(poly.ctx, "[(id, 1)]", x), parse_hecke(poly.ctx, x).to_string() + "\n");
  EXPECT_THROW(mul_text(poly.ctx, "[(id, [(x1, 1)])]", x), std::invalid_argument);
  auto r = run_command(poly, "mul [((23), [(x1, 1)])] | [((23), [(x1, 1)])]", 0);
  EXPECT_EQ(r.output, out);
}

TEST(Commands, StructureConstants) {
  auto text = run_command(job_from(kClassical), "sc", 0).output;
  EXPECT_TRUE(contains(text, "1\t1\t0\t2"));
  EXPECT_TRUE(contains(text, "1\t1\t1\t1"));
  auto stone = job_from(R"(
[context]
group = symmetric(3)
subgroup = generators[(12)]
algebra = functions
action = left_translation
)");
  EXPECT_EQ(stone.ctx->dimension(), 9u);
}

TEST(Verify, StoneSkippedWhenNotApplicable) {
  auto r = run_command(job_from(kPolynomialLinear), "verify stone", 0);
  EXPECT_TRUE(r.ok);
  EXPECT_TRUE(contains(r.output, "SKIP stone"));
  EXPECT_TRUE(contains(r.output, "0 failed"));
}

TEST(Verify, CocycleViolationFails) {
  auto job = build_job(read_config_file(config_path("s3_inner_violation.conf")));
  auto r = run_command(job, "verify cocycle", 0);
  EXPECT_FALSE(r.ok);
  EXPECT_TRUE(contains(r.output, "FAIL (c) trivial on H: h=(12)"));
}

TEST(Verify, DeterministicForFixedSeed) {
  auto job = build_job(read_config_file(config_path("s3_polynomial.conf")), 1);
  auto a = run_command(job, "verify assoc", 42).output;
  auto b = run_command(job, "verify assoc", 42).output;
  EXPECT_EQ(a, b);
  EXPECT_TRUE(contains(a, "seed=42"));
}

TEST(Verify, UnknownSuite) {
  EXPECT_THROW(run_command(job_from(kClassical), "verify nothing", 0), std::invalid_argument);
  EXPECT_THROW(run_command(job_from(kClassical), "frobnicate", 0), std::invalid_argument);
}
