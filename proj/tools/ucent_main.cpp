// ucent: topology of universal centralizers from a root datum.

#include "ucent/cli.hpp"

#include <CLI11.hpp>

#include <iostream>

int main(int argc, char** argv) {
  CLI::App app{"Rational topology of the universal centralizer J_G from a root datum"};
  app.require_subcommand(1);

  ucent::RunOptions options;
  std::string spec;
  std::string levi;

  const char* descriptions[][2] = {
      {"info", "rank, |Z(G)| and |W|"},
      {"pi0", "component groups pi_0(Z(L_S)) of Levi centers"},
      {"count", "point-count polynomial |J_G(F_q)|"},
      {"epoly", "E-polynomial in uv"},
      {"poincare", "purity-predicted Poincare polynomial"},
      {"cgbetti", "rational Betti numbers of the boundary manifold C_G"},
      {"jgbetti", "rational Betti numbers of J_G by handle attachment"},
      {"check", "run every cross-module consistency check"},
  };
  for (const auto& [name, help] : descriptions) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("spec", spec, "group spec, e.g. A3:sc, A1xA2:adjoint, D4:lattice=[[...]]")->required();
    sub->add_option("--format", options.format, "table or json")->capture_default_str();
    sub->add_option("--max-rank", options.max_rank, "refuse data of larger rank")->capture_default_str();
    sub->add_flag("--slow", options.slow, "allow homology computations at rank >= 8");
    if (std::string(name) == "pi0") {
      sub->add_flag("--all", options.all, "all S subset Pi (default)");
      sub->add_option("--levi", levi, "1-based simple roots, e.g. 1,3");
    }
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : ucent::exit_usage;
  }
  if (!levi.empty()) options.levi = levi;

  const std::string command = app.get_subcommands().front()->get_name();
  const ucent::RunResult result = ucent::run(command, spec, options);
  std::cout << result.out;
  std::cerr << result.err;
  return result.exit_code;
}
