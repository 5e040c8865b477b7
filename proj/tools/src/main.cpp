#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "skewhecke_cli/commands.hpp"

namespace {

int emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return 0;
  }
  std::ofstream f(out_path);
  if (!f) {
    std::cerr << "cannot write '" << out_path << "'\n";
    return 2;
  }
  f << text;
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations in skew Hecke algebras"};
  std::string config_path;
  std::uint64_t seed = 0;
  std::optional<int> degree_cap;
  std::string out_path;
  app.add_option("--config", config_path, "Job configuration file")->required()->check(CLI::ExistingFile);
  app.add_option("--seed", seed, "Seed for random sampling");
  app.add_option("--degree-cap", degree_cap, "Degree cap for graded algebras (default 2)")->check(CLI::NonNegativeNumber);
  app.add_option("--out", out_path, "Write output to this file");

  auto* dims = app.add_subcommand("dims", "Group, coset and dimension counts");
  auto* mul = app.add_subcommand("mul", "Convolution product of two literals");
  std::string phi, psi;
  mul->add_option("phi", phi)->required();
  mul->add_option("psi", psi)->required();
  auto* sc = app.add_subcommand("sc", "Structure constants on the module basis");
  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  std::string suite = "all";
  verify->add_option("suite", suite, "all | assoc | decomposition | matrix | corner | stone | group_ops | cocycle | opposite | graded | s3_fixtures");
  app.require_subcommand(0, 1);

  CLI11_PARSE(app, argc, argv);

  skh::cli::Job job;
  try {
    job = skh::cli::build_job(skh::cli::read_config_file(config_path), degree_cap);
  } catch (const std::exception& e) {
    std::cerr << config_path << ": " << e.what() << "\n";
    return 2;
  }

  try {
    std::string text;
    bool ok = true;
    if (*dims) {
      text = skh::cli::dims_text(job.ctx);
    } else if (*mul) {
      text = skh::cli::mul_text(job.ctx, phi, psi);
    } else if (*sc) {
      text = skh::structure_constants_text(job.ctx);
    } else if (*verify) {
      auto r = skh::cli::run_command(job, "verify " + suite, seed);
      text = r.output;
      ok = r.ok;
    } else {
      if (job.config.commands.empty()) {
        std::cerr << "no subcommand given and the config has no [run] commands\n";
        return 2;
      }
      for (const auto& c : job.config.commands) {
        auto r = skh::cli::run_command(job, c, seed);
        text += r.output;
        ok = ok && r.ok;
      }
    }
    int status = emit(text, out_path);
    if (status != 0) return status;
    return ok ? 0 : 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
