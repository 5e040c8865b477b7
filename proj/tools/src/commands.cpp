#include "skewhecke_cli/commands.hpp"

#include <sstream>

#include "skewhecke/literal.hpp"

namespace skh::cli {

std::string dims_text(const ContextPtr& ctx) {
  std::ostringstream out;
  const auto& cs = ctx->cosets();
  const auto& a = ctx->algebra();
  out << "|G| = " << ctx->group()->order() << "\n";
  out << "|H| = " << ctx->subgroup().order() << "\n";
  out << "|G/H| = " << cs.size() << "\n";
  out << "double cosets = " << cs.orbit_count() << "\n";
  if (a->finite()) {
    out << "dim A = " << a->dimension() << "\n";
  } else {
    for (int d = 0; d <= ctx->max_degree(); ++d) out << "dim A_" << d << " = " << a->basis_of_degree(d).size() << "\n";
  }
  for (std::size_t o = 0; o < cs.orbit_count(); ++o) {
    int rep = cs.representative(cs.orbit_representative(static_cast<int>(o)));
    out << "double coset H " << ctx->group()->name(rep) << " H: stabilizer order " << cs.stabilizer(static_cast<int>(o)).order();
    std::size_t total = 0;
    for (int d = 0; d <= ctx->max_degree(); ++d) {
      std::size_t n = ctx->space(static_cast<int>(o), d).basis.size();
      total += n;
      if (!a->finite()) out << ", dim A^stab_" << d << " = " << n;
    }
    out << ", dim A^stab" << (a->finite() ? "" : " (degree <= " + std::to_string(ctx->max_degree()) + ")") << " = " << total
        << "\n";
  }
  out << "dim H" << (a->finite() ? "" : " (degree <= " + std::to_string(ctx->max_degree()) + ")") << " = " << ctx->dimension()
      << "\n";
  return out.str();
}

std::string mul_text(const ContextPtr& ctx, std::string_view phi, std::string_view psi) {
  return convolve(parse_hecke(ctx, phi), parse_hecke(ctx, psi)).to_string() + "\n";
}

std::string report_text(const std::string& suite, const Report& report, std::uint64_t seed) {
  std::ostringstream out;
  out << "# verify " << suite << " seed=" << seed << "\n";
  out << report.to_text();
  std::size_t pass = 0, fail = 0, skip = 0;
  for (const auto& c : report.checks()) {
    if (c.status == CheckResult::Status::pass) ++pass;
    if (c.status == CheckResult::Status::fail) ++fail;
    if (c.status == CheckResult::Status::skip) ++skip;
  }
  out << "# " << pass << " passed, " << fail << " failed, " << skip << " skipped\n";
  return out.str();
}

CommandResult run_command(const Job& job, std::string_view command, std::uint64_t seed) {
  std::string cmd = trim(command);
  auto space = cmd.find(' ');
  std::string head = cmd.substr(0, space);
  std::string rest = space == std::string::npos ? "" : trim(std::string_view(cmd).substr(space + 1));
  if (head == "dims") return {dims_text(job.ctx), true};
  if (head == "sc") return {structure_constants_text(job.ctx), true};
  if (head == "verify") {
    std::string suite = rest.empty() ? "all" : rest;
    SuiteOptions options;
    options.seed = seed;
    auto report = run_suite(suite, job, options);
    return {report_text(suite, report, seed), report.passed()};
  }
  if (head == "mul") {
    auto bar = rest.find('|');
    if (bar == std::string::npos) throw std::invalid_argument("mul expects '<φ> | <ψ>'");
    return {mul_text(job.ctx, rest.substr(0, bar), rest.substr(bar + 1)), true};
  }
  throw std::invalid_argument("unknown command '" + head + "'");
}

}  // namespace skh::cli
