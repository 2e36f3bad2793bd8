// xyv: command-line experiments for dummyless trap verification.
//
// Exit codes: 0 when every check in the report holds, 1 when one fails,
// 2 for usage, parse and size errors.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>

#include "xyv/error.hpp"
#include "xyv/experiments.hpp"
#include "xyv/pattern_io.hpp"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct Options {
  std::string graph, pattern, config, out, format = "json", mode = "correctness";
  std::uint64_t seed = 1;
  std::size_t samples = 100000, rows = 2, cols = 5, clients = 2, trials = 0;
};

void write_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream f(path);
  if (!f) throw std::runtime_error("cannot write " + path.string());
  f << text;
}

int emit(xyv::ExperimentReport rep, const Options& o) {
  if (o.format == "csv") {
    std::cout << rep.to_csv();
  } else {
    std::cout << rep.to_json().dump(2) << '\n';
  }
  if (!o.out.empty()) {
    const std::filesystem::path dir = o.out;
    std::filesystem::create_directories(dir);
    write_file(dir / (rep.name() + ".json"), rep.to_json().dump(2) + "\n");
    write_file(dir / (rep.name() + ".csv"), rep.to_csv());
    if (rep.name() == "optimize") {
      write_file(dir / "optimize_distribution.json", rep.metrics()["distribution"].dump(2) + "\n");
    }
  }
  for (const auto& c : rep.checks())
    if (!c.passed)
      std::cerr << "check failed: " << c.name << " = " << c.value << " (want " << c.relation << ' ' << c.threshold
                << ")\n";
  return rep.passed() ? kExitPass : kExitFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Dummyless trap-based verification experiments"};
  app.require_subcommand(1);
  app.set_version_flag("--version", xyv::version_string());
  Options o;
  app.add_option("--seed", o.seed, "Random seed")->capture_default_str();
  app.add_option("--out", o.out, "Directory for JSON and CSV reports");
  app.add_option("--format", o.format, "Report format on stdout")
      ->check(CLI::IsMember({"json", "csv"}))
      ->capture_default_str();

  auto* gens = app.add_subcommand("generators", "Dummyless stabilizer generators of a graph");
  gens->add_option("--graph", o.graph, "Graph JSON file")->required();

  auto* opt = app.add_subcommand("optimize", "Optimal test distribution by linear programming");
  opt->add_option("--graph", o.graph, "Graph JSON file")->required();

  auto* brick = app.add_subcommand("brickwork-rate", "Monte Carlo detection rate of the brickwork strategy");
  brick->add_option("--rows", o.rows)->capture_default_str();
  brick->add_option("--cols", o.cols)->capture_default_str();
  brick->add_option("--samples", o.samples, "Samples per error")->capture_default_str();

  auto* harm = app.add_subcommand("harmless", "Effect of E* on a pattern's output distribution");
  harm->add_option("--pattern", o.pattern, "Pattern JSON file")->required();
  harm->add_option("--graph", o.graph, "Graph JSON file; must match the pattern's graph");
  harm->add_option("--trials", o.trials, "Extra copies with random angles")->capture_default_str();

  auto* crsp = app.add_subcommand("crsp", "Collaborative remote state preparation checks");
  crsp->add_option("--clients", o.clients)->capture_default_str();
  crsp->add_option("--mode", o.mode)->check(CLI::IsMember({"correctness", "security"}))->capture_default_str();
  crsp->add_option("--samples", o.samples, "Sampled strategies or angle draws when not exhaustive");

  auto* run = app.add_subcommand("run", "Run the protocol from a configuration file");
  run->add_option("--config", o.config, "Run configuration JSON")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitPass : kExitUsage;
  }

  try {
    if (gens->parsed()) return emit(xyv::experiment_generators(xyv::load_graph(o.graph)), o);
    if (opt->parsed()) return emit(xyv::experiment_optimize(xyv::load_graph(o.graph)), o);
    if (brick->parsed()) return emit(xyv::experiment_brickwork_rate(o.rows, o.cols, o.samples, o.seed), o);
    if (harm->parsed()) {
      const auto p = xyv::load_pattern(o.pattern);
      if (!o.graph.empty()) {
        const auto g = xyv::load_graph(o.graph);
        if (g.num_vertices() != p.graph.num_vertices() || g.edges() != p.graph.edges())
          throw xyv::ParseError("graph file does not match the pattern's graph");
      }
      return emit(xyv::experiment_harmless(p, o.trials, o.seed), o);
    }
    if (crsp->parsed()) {
      const auto mode = o.mode == "security" ? xyv::CrspMode::Security : xyv::CrspMode::Correctness;
      const std::size_t samples = crsp->count("--samples") ? o.samples : 16;
      return emit(xyv::experiment_crsp(o.clients, mode, samples, o.seed), o);
    }
    if (run->parsed()) {
      const std::filesystem::path cfg = o.config;
      const auto seed = app.count("--seed") ? std::optional<std::uint64_t>(o.seed) : std::nullopt;
      return emit(xyv::experiment_run(xyv::load_json_file(cfg), cfg.parent_path(), seed), o);
    }
  } catch (const xyv::ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const xyv::SizeCapExceeded& e) {
    std::cerr << "size cap: " << e.what() << '\n';
    return kExitUsage;
  } catch (const xyv::BudgetExceeded& e) {
    std::cerr << "budget exceeded: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid input: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
