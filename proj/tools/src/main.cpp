#include <iostream>

#include "CLI11.hpp"
#include "bethe_cli/cli.hpp"

namespace {

using namespace bethe;
using namespace bethe::cli;

std::vector<int> parse_list(const std::string& text) { return MultiIndex::parse(text).entries(); }

int do_verify(const std::string& task, const VerifyParams& params, bool json) {
  std::vector<Report> reports;
  if (task == "all") {
    reports = run_verify_all(params, default_threads());
  } else {
    reports.push_back(run_verify(VerifyTask{task, params}));
  }
  if (json) {
    Json out = Json::array();
    for (const auto& r : reports) out.push_back(to_json(r));
    std::cout << (task == "all" ? out : out.front()).dump(2) << "\n";
  } else {
    for (const auto& r : reports) std::cout << summary_line(r) << "\n";
  }
  return exit_code(reports);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact generating-series algebra for nested Bethe vectors"};
  app.require_subcommand(1);
  bool json = false;
  app.add_flag("--json", json, "Machine-readable output");

  auto* verify = app.add_subcommand("verify", "Run a verification task or all of them");
  std::string task;
  std::optional<int> N;
  std::string bound;
  std::uint64_t seed = 1;
  std::string mode = "exact";
  verify->add_option("task", task, "Task name or 'all'")->required();
  verify->add_option("--N", N, "Rank parameter");
  verify->add_option("--bound", bound, "Bound such as 2,2");
  verify->add_option("--seed", seed, "Random seed");
  verify->add_option("--mode", mode, "exact or randomized")->check(CLI::IsMember({"exact", "randomized"}));
  verify->add_flag("--json", json, "Machine-readable output");

  auto* expand = app.add_subcommand("expand", "Expand or render an object");
  std::string what;
  ExpandParams ep;
  std::string index;
  expand->add_option("what", what, "string, dual-string, composed, series-coeff or tableaux")->required();
  expand->add_option("--N", ep.N);
  expand->add_option("--j", ep.j);
  expand->add_option("--i", ep.i);
  expand->add_option("--k", ep.k);
  expand->add_option("--index", index, "Comma-separated entries");
  expand->add_option("--which", ep.which, "current, string, dual-string, opaque-e, inverse or gl2-inverse");
  expand->add_option("--rows", ep.rows, "Rows bottom to top, e.g. 3,2,1|3|1,1");
  expand->add_flag("--assign", ep.assign, "Print the variable groups");
  expand->add_flag("--expand", ep.expand, "Expand composed currents");
  expand->add_flag("--json", json, "Machine-readable output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (verify->parsed()) {
      VerifyParams params;
      params.N = N;
      if (!bound.empty()) params.bound = MultiIndex::parse(bound);
      params.seed = seed;
      params.randomized = mode == "randomized";
      return do_verify(task, params, json);
    }
    if (!index.empty()) ep.index = parse_list(index);
    std::string out = run_expand(what, ep, json);
    std::cout << out;
    if (out.empty() || out.back() != '\n') std::cout << "\n";
    return 0;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
