#include <iostream>
#include <thread>

#include <CLI11.hpp>

#include "satake/cli.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Root data, Satake transforms and spherical Hecke rings"};
  app.require_subcommand(1);

  satake::RunConfig cfg;
  bool json = false, dot = false;
  std::string q_list;
  std::int64_t bound = 0;

  // Global flags, accepted before or after the subcommand.
  auto add_globals = [&](CLI::App* a) {
    a->add_option("--group", cfg.group, "preset name (GL2, SL3, Sp4, ...) or root-datum file");
    a->add_flag("--json", json, "JSON output");
    a->add_flag("--dot", dot, "DOT output (strata)");
    a->add_option("--bound", bound, "size bound")->check(CLI::NonNegativeNumber);
    a->add_option("--q", q_list, "comma-separated prime powers");
  };
  add_globals(&app);

  auto* dual = app.add_subcommand("dual-group", "dual and extended dual root data");
  dual->add_flag("--extended", cfg.extended, "also build the extended dual group");

  auto* strata = app.add_subcommand("strata", "strata of a partial affine flag variety");
  strata->add_option("--facet", cfg.facet, "iwahori, hyperspecial or a list like 0,2");
  strata->add_option("--stratifying", cfg.stratifying, "facet of the stratifying parahoric");

  auto* qanalog = app.add_subcommand("qanalog", "Lusztig q-analog of weight multiplicity");
  qanalog->add_option("--mu", cfg.mu)->required();
  qanalog->add_option("--lambda", cfg.lambda, "omit for every dominant lambda <= mu");

  auto* tensor = app.add_subcommand("tensor", "tensor product of V_mu(m) and V_lambda(n)");
  tensor->add_option("--mu", cfg.mu, "\"(1,0)\" or \"(1,0);m\"")->required();
  tensor->add_option("--lambda", cfg.lambda)->required();

  auto* hecke = app.add_subcommand("hecke", "spherical Hecke ring");
  hecke->add_option("action", cfg.action, "mult")->required();
  hecke->add_option("--mu", cfg.mu)->required();
  hecke->add_option("--lambda", cfg.lambda)->required();
  hecke->add_flag("--oracle", cfg.oracle, "compare with lattice counts (GL_n)");

  auto* conv = app.add_subcommand("convolve-ic", "convolution in K0 of intersection motives");
  conv->add_option("--ic", cfg.ic, "\"(1,0);n\", repeatable")->required();
  conv->add_flag("--trace", cfg.trace, "trace of Frobenius");

  auto* sat = app.add_subcommand("satake", "Satake transform of c_mu");
  sat->add_option("--mu", cfg.mu)->required();

  auto* verify = app.add_subcommand("verify", "run verification suites");
  verify->add_option("--suite", cfg.suite, "satake, characters, strata, duality or all");
  verify->add_option("--threads", cfg.threads, "worker threads (0 = hardware)");

  for (auto* sub : {dual, strata, qanalog, tensor, hecke, conv, sat, verify}) add_globals(sub);

  CLI11_PARSE(app, argc, argv);

  cfg.command = app.get_subcommands().front()->get_name();
  cfg.output = dot ? satake::OutputMode::Dot : json ? satake::OutputMode::Json : satake::OutputMode::Human;
  if (app.count("--bound") || app.get_subcommands().front()->count("--bound")) cfg.bound = bound;
  if (cfg.threads == 0) cfg.threads = std::max(1u, std::thread::hardware_concurrency());

  satake::RunResult res;
  try {
    if (!q_list.empty()) cfg.q = satake::parse_int_list(q_list);
    res = satake::run_command(cfg);
  } catch (const satake::SatakeError& e) {
    std::cerr << nlohmann::json{{"error", {{"code", e.code()}, {"message", e.what()}}}}.dump(2) << "\n";
    return 2;
  }
  (res.exit_code == 2 ? std::cerr : std::cout) << res.output;
  return res.exit_code;
}
