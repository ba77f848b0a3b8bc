// isk: exact counting of independent sets and kernels of graphs with
// reduced ordered BDDs, plus seeded random-ensemble experiments.

#include <CLI11.hpp>

#include <iostream>
#include <map>
#include <string>

#include "isk/cli.hpp"
#include "isk/constraints.hpp"
#include "isk/csv.hpp"
#include "isk/experiment.hpp"
#include "isk/generators.hpp"
#include "isk/graph.hpp"
#include "isk/rng.hpp"

namespace {

struct GenArgs {
  int n = 0;
  int regular = -1;
  double avg_degree = -1.0;
  std::string strategy = "edge-addition";
  std::uint64_t seed = 1;
  std::string out;
};

struct CountArgs {
  std::string graph_path;
  std::string mode = "is";
};

struct ExperimentArgs {
  std::string sizes = "6:40:2";
  int samples = 1000;
  std::string mode = "is";
  int regular = -1;
  double avg_degree = -1.0;
  std::string strategy = "edge-addition";
  std::uint64_t seed = 1;
  int jobs = 1;
  std::string rate = "auto";
  std::string records_path = "records.csv";
  std::string summary_path = "summary.csv";
  std::string curve_path = "curve.csv";
};

struct CurveArgs {
  std::string records_path;
  std::string rate = "auto";
  std::string out = "curve.csv";
};

isk::EnsembleKind ensemble_from_flags(int regular, double avg_degree) {
  if ((regular >= 0) == (avg_degree >= 0))
    isk::fail(isk::Errc::bad_config,
              "give exactly one of --regular or --avg-degree");
  return regular >= 0 ? isk::EnsembleKind::regular(regular)
                      : isk::EnsembleKind::average_degree(avg_degree);
}

int cmd_gen(const GenArgs& args) {
  const isk::EnsembleKind ensemble =
      ensemble_from_flags(args.regular, args.avg_degree);
  const isk::Graph g = isk::generate(
      ensemble, args.n, args.seed, isk::strategy_from_name(args.strategy));
  isk::write_graph_file(args.out, g);

  std::map<int, int> histogram;
  for (const int d : g.degree_sequence()) ++histogram[d];
  std::cout << "n=" << g.num_vertices() << " m=" << g.num_edges()
            << " seed=" << args.seed << " rng=" << isk::kRngId << '\n';
  for (const auto& [degree, vertices] : histogram)
    std::cout << "degree " << degree << ": " << vertices << " vertices\n";
  return 0;
}

int cmd_count(const CountArgs& args) {
  const isk::Graph g = isk::read_graph_file(args.graph_path);
  const isk::Bdd f =
      isk::constraint_bdd(g, isk::mode_from_name(args.mode));
  std::cout << "count=" << f.count_solutions().get_str()
            << " nodes=" << f.node_count()
            << " accesses=" << f.store().access_count() << '\n';
  return 0;
}

int cmd_experiment(const ExperimentArgs& args) {
  isk::EnsembleConfig cfg;
  cfg.sizes = isk::parse_sizes(args.sizes);
  cfg.samples_per_size = args.samples;
  cfg.mode = isk::mode_from_name(args.mode);
  cfg.ensemble = ensemble_from_flags(args.regular, args.avg_degree);
  cfg.strategy = isk::strategy_from_name(args.strategy);
  cfg.master_seed = args.seed;
  cfg.rate = isk::rate_spec_from_string(args.rate);
  cfg.validate();

  const isk::ExperimentOutput out = isk::run_experiment(cfg, args.jobs);

  for (const auto& [key, value] : isk::experiment_meta(cfg, out.rate))
    std::cout << key << '=' << value << '\n';
  isk::write_text_file(args.records_path, out.records_csv);
  isk::write_text_file(args.summary_path, out.summary_csv);
  isk::write_text_file(args.curve_path, out.curve_csv);
  std::cout << "wrote " << args.records_path << ' ' << args.summary_path << ' '
            << args.curve_path << '\n';
  return 0;
}

int cmd_curve(const CurveArgs& args) {
  const isk::RecordsFile file = isk::read_records_csv_file(args.records_path);
  const std::string csv =
      isk::rederive_curve_csv(file, isk::rate_spec_from_string(args.rate));
  isk::write_text_file(args.out, csv);
  std::cout << "wrote " << args.out << '\n';
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact independent-set and kernel counting via BDDs"};
  app.require_subcommand(1);

  GenArgs gen;
  CLI::App* gen_cmd = app.add_subcommand("gen", "generate a random graph file");
  gen_cmd->add_option("--n", gen.n, "vertex count")->required();
  gen_cmd->add_option("--regular", gen.regular, "degree k (regular ensemble)");
  gen_cmd->add_option("--avg-degree", gen.avg_degree,
                      "average degree (fixed edge count ensemble)");
  gen_cmd->add_option("--strategy", gen.strategy,
                      "edge-addition | pairing (regular only)");
  gen_cmd->add_option("--seed", gen.seed, "RNG seed");
  gen_cmd->add_option("--out", gen.out, "output graph file")->required();

  CountArgs count;
  CLI::App* count_cmd =
      app.add_subcommand("count", "exactly count solutions of a graph file");
  count_cmd->add_option("--graph", count.graph_path, "graph file")->required();
  count_cmd->add_option("--mode", count.mode, "is | kernel")->required();

  ExperimentArgs exp;
  CLI::App* exp_cmd = app.add_subcommand(
      "experiment", "run a seeded ensemble and write records/summary/curve CSVs");
  exp_cmd->add_option("--sizes", exp.sizes, "sizes, e.g. 6:40:2 or 6,8,10");
  exp_cmd->add_option("--samples", exp.samples, "samples per size");
  exp_cmd->add_option("--mode", exp.mode, "is | kernel")->required();
  exp_cmd->add_option("--regular", exp.regular, "degree k (regular ensemble)");
  exp_cmd->add_option("--avg-degree", exp.avg_degree,
                      "average degree (fixed edge count ensemble)");
  exp_cmd->add_option("--strategy", exp.strategy, "edge-addition | pairing");
  exp_cmd->add_option("--seed", exp.seed, "master seed");
  exp_cmd->add_option("--jobs", exp.jobs, "worker threads (output-invariant)");
  exp_cmd->add_option("--rate", exp.rate, "reference rate: auto | self | value");
  exp_cmd->add_option("--records", exp.records_path, "records CSV path");
  exp_cmd->add_option("--summary", exp.summary_path, "summary CSV path");
  exp_cmd->add_option("--curve", exp.curve_path, "curve CSV path");

  CurveArgs curve;
  CLI::App* curve_cmd = app.add_subcommand(
      "curve", "re-derive a curve CSV from records under a different rate");
  curve_cmd->add_option("--records", curve.records_path, "records CSV")
      ->required();
  curve_cmd->add_option("--rate", curve.rate, "auto | self | value");
  curve_cmd->add_option("--out", curve.out, "output curve CSV");

  CLI11_PARSE(app, argc, argv);

  try {
    if (gen_cmd->parsed()) return cmd_gen(gen);
    if (count_cmd->parsed()) return cmd_count(count);
    if (exp_cmd->parsed()) return cmd_experiment(exp);
    if (curve_cmd->parsed()) return cmd_curve(curve);
  } catch (const isk::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
