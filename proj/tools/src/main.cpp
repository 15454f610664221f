#include <iostream>

#include "CLI11.hpp"
#include "sdlab/cli/commands.hpp"

int main(int argc, char** argv) {
  using namespace sdlab::cli;
  CLI::App app{"sdlab: subdivision map verifiers and finite-field censuses"};
  app.require_subcommand(1);

  std::string out_path;
  std::uint64_t seed = 0;
  bool json = true;
  auto common = [&](CLI::App* sub) {
    sub->add_option("--out", out_path, "Report path (stdout if omitted)");
    sub->add_option("--seed", seed, "Seed for random centers");
    sub->add_flag("--json", json, "Emit JSON (the only format)");
  };

  RelationsOptions rel;
  auto* relations = app.add_subcommand("relations", "Check the face relations of sd and homotopy maps");
  common(relations);
  relations->add_option("--max-n", rel.max_n, "Largest simplex dimension")->capture_default_str();
  relations->add_flag("--corrupt-centers", rel.corrupt_centers, "Use a non-barycentric center (negative control)");

  HomotopyOptions hom;
  std::string convention = "auto";
  auto* homotopy = app.add_subcommand("homotopy", "Verify the telescoping of the chain homotopy");
  common(homotopy);
  homotopy->add_option("--max-s", hom.max_s, "Largest degree")->capture_default_str();
  homotopy->add_option("--convention", convention, "auto, or eps,lambda such as +1,-1")->capture_default_str();

  int shell_n = 4;
  auto* shell = app.add_subcommand("shell", "Homology of the shell complex");
  common(shell);
  shell->add_option("--n", shell_n, "Simplex dimension")->capture_default_str();

  std::string config;
  auto* census = app.add_subcommand("census", "Run a finite-field census from a config file");
  common(census);
  census->add_option("config", config, "Experiment config JSON")->required();

  DegreesOptions deg;
  auto* degrees = app.add_subcommand("degrees", "Degree and shape facts of the chart matrices");
  common(degrees);
  degrees->add_option("--n", deg.n, "Simplex dimension")->capture_default_str();
  degrees->add_option("--N", deg.N, "Center degree bound")->capture_default_str();
  degrees->add_option("--m", deg.m, "Number of base variables")->capture_default_str();
  degrees->add_flag("--inject-fault", deg.inject_fault, "Add a degree-2 T term (negative control)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? exit_pass : exit_usage;
  }

  const Output out{out_path, nullptr};
  try {
    if (*relations) return run_relations(rel, out);
    if (*homotopy) {
      hom.seed = seed;
      if (convention != "auto") hom.convention = parse_convention(convention);
      return run_homotopy(hom, out);
    }
    if (*shell) return run_shell(shell_n, out);
    if (*census) return run_census(config, out);
    if (*degrees) {
      deg.seed = seed;
      return run_degrees(deg, out);
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_usage;
  }
  return exit_usage;
}
