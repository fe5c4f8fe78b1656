#include <iostream>

#include <CLI11.hpp>

#include "flashcodes/commands.hpp"

int main(int argc, char** argv) {
  using flashcodes::ExperimentConfig;
  CLI::App app{"Rewriting codes for flash-like storage: simulation, bounds and oracles"};
  app.set_version_flag("--version", flashcodes::kVersion);
  app.require_subcommand(1);

  ExperimentConfig c;
  std::string output_path;

  auto common_nq = [&](CLI::App* sub) {
    sub->add_option("--n", c.n, "number of cells")->required();
    sub->add_option("--q", c.q, "levels per cell")->required();
  };

  auto* simulate = app.add_subcommand("simulate", "run a code on rewrite sequences");
  simulate->add_option("--code", c.code, "modular|baserep|split|trajectory|parametric|robust[:params]")->required();
  simulate->add_option("--graph", c.graph, "complete:L=..|hypercube:k=..,l=..|debruijn:k=..,l=..|tree:delta=..,L=..")
      ->required();
  simulate->add_option("--seq", c.seq, "random[:length=..,seed=..]|cyclic[:length=..]|list:v1,v2,..")
      ->capture_default_str();
  common_nq(simulate);
  simulate->add_option("--t-target", c.t_target, "trajectory write budget (default n(q-1))");
  simulate->add_option("--trials", c.trials)->capture_default_str();
  simulate->add_option("--seed", c.seed, "master seed")->capture_default_str();
  simulate->add_option("--out", c.format, "csv|json")->capture_default_str();
  simulate->add_option("-o,--output", output_path, "output file (default stdout)");

  auto* bounds = app.add_subcommand("bounds", "evaluate the closed-form bounds");
  bounds->add_option("--n", c.n)->required();
  bounds->add_option("--q", c.q)->required();
  bounds->add_option("--L", c.L)->required();
  bounds->add_option("--delta", c.delta, "maximum out-degree of the data graph");
  bounds->add_option("--epsilon", c.epsilon)->capture_default_str();
  bounds->add_option("--robust-c", c.robust_c, "constant for the robust regime check")->capture_default_str();
  bounds->add_option("-o,--output", output_path);

  auto* oracle = app.add_subcommand("oracle", "best worst-case t over all decode maps (tiny parameters)");
  common_nq(oracle);
  oracle->add_option("--L", c.L)->required();
  oracle->add_option("--max-maps", c.max_maps)->capture_default_str();
  oracle->add_option("-o,--output", output_path);

  auto* adversary = app.add_subcommand("adversary", "exact worst-case t of a deterministic code");
  adversary->add_option("--code", c.code)->required();
  adversary->add_option("--graph", c.graph)->required();
  common_nq(adversary);
  adversary->add_option("--t-target", c.t_target);
  adversary->add_option("--cap", c.cap, "maximum number of explored states")->capture_default_str();
  adversary->add_option("-o,--output", output_path);

  auto* example = app.add_subcommand("example-paper", "replay the n=16, q=4, L=56 split-code example");
  example->add_flag("--quiet", c.quiet, "print only PASS/FAIL");
  example->add_flag("--tamper-tie-break", c.tamper_tie_break)->group("");

  auto* robust = app.add_subcommand("robust-eval", "robust code against the balls-in-bins oracle");
  common_nq(robust);
  robust->add_option("--L", c.L)->required();
  robust->add_option("--seq", c.seq, "cyclic[:length=..]|random[:..]|list:..");
  robust->add_option("--trials", c.trials)->capture_default_str();
  robust->add_option("--seed", c.seed)->capture_default_str();
  robust->add_option("--out", c.format, "csv|json")->capture_default_str();
  robust->add_option("-o,--output", output_path);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }
  c.subcommand = app.get_subcommands().front()->get_name();
  if (c.subcommand == "robust-eval" && c.seq == "random") c.seq = "cyclic";
  c.output_path = output_path;
  return flashcodes::run_command(c, std::cout, std::cerr);
}
