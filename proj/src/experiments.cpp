#include "xyv/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <memory>

#include "xyv/crsp.hpp"
#include "xyv/error.hpp"
#include "xyv/optimizer.hpp"
#include "xyv/pattern_io.hpp"
#include "xyv/protocol.hpp"
#include "xyv/stabilizer.hpp"
#include "xyv/traps.hpp"

namespace xyv {

namespace {

constexpr double kExactTolerance = 1e-9;
constexpr double kLpTolerance = 1e-7;
constexpr std::size_t kRandomPanel = 1000;
constexpr std::uint64_t kPanelStream = 0xb41c;

OrderedJson labels_of(const OpenGraph& g, VertexSet s) {
  OrderedJson arr = OrderedJson::array();
  for (Vertex v : s) arr.push_back(g.label(v));
  return arr;
}

OrderedJson graph_params(const OpenGraph& g) {
  OrderedJson p;
  p["vertices"] = g.num_vertices();
  p["edges"] = g.edges().size();
  p["odd_vertices"] = labels_of(g, g.odd_vertices());
  return p;
}

}  // namespace

ExperimentReport experiment_generators(const OpenGraph& g) {
  ExperimentReport rep("generators", 0);
  rep.params() = graph_params(g);
  const StabilizerSet set = dummyless_generators(g);
  const std::size_t n = g.num_vertices();
  OrderedJson gens = OrderedJson::array();
  for (const auto& p : set.generators) gens.push_back(p.to_string());
  const std::size_t rank = gf2_rank(set.generators);
  rep.metrics()["generators"] = gens;
  rep.metrics()["count"] = set.generators.size();
  rep.metrics()["rank"] = rank;
  rep.metrics()["z_free"] = set.all_z_free();
  rep.metrics()["pairwise_commute"] = set.pairwise_commute();
  rep.check("count", static_cast<double>(set.generators.size()), "==", static_cast<double>(n - 1));
  rep.check("rank", static_cast<double>(rank), "==", static_cast<double>(n - 1));
  rep.check("z_free", set.all_z_free(), "==", 1);
  rep.check("pairwise_commute", set.pairwise_commute(), "==", 1);

  const PauliOp s0 = s0_operator(g);
  rep.metrics()["s0"] = s0.to_string();
  if (s0 == PauliOp::identity(n)) {
    // Every degree is even: S_0 is the identity and adds nothing.
    rep.metrics()["s0_applicable"] = false;
  } else {
    auto with = set.generators;
    with.push_back(s0);
    const bool commutes = std::all_of(set.generators.begin(), set.generators.end(),
                                      [&](const PauliOp& p) { return p.commutes_with(s0); });
    rep.metrics()["s0_applicable"] = true;
    rep.metrics()["rank_with_s0"] = gf2_rank(with);
    rep.metrics()["s0_commutes"] = commutes;
    rep.check("rank_with_s0", static_cast<double>(gf2_rank(with)), "==", static_cast<double>(n));
    rep.check("s0_commutes", commutes, "==", 1);
  }
  return rep;
}

ExperimentReport experiment_optimize(const OpenGraph& g) {
  ExperimentReport rep("optimize", 0);
  rep.params() = graph_params(g);
  const LpInstance inst = build_lp_instance(g);
  const LpSolution sol = solve_lp(inst);
  std::size_t support = 0;
  for (double w : sol.weights) support += w > 0;
  rep.metrics()["tests"] = inst.tests.size();
  rep.metrics()["errors"] = inst.errors.size();
  rep.metrics()["epsilon"] = sol.epsilon;
  rep.metrics()["duality_gap"] = sol.duality_gap;
  rep.metrics()["max_violation"] = sol.max_violation;
  rep.metrics()["support"] = support;
  OrderedJson dist;
  dist["epsilon"] = sol.epsilon;
  dist["distribution"] = distribution_to_json(g, solution_distribution(inst, sol));
  rep.metrics()["distribution"] = dist;
  rep.check("epsilon", sol.epsilon, ">", 0.0);
  rep.check("max_violation", sol.max_violation, "<=", kLpTolerance);
  rep.check("duality_gap", sol.duality_gap, "<=", kLpTolerance);
  return rep;
}

ExperimentReport experiment_brickwork_rate(std::size_t rows, std::size_t cols, std::size_t samples,
                                           std::uint64_t seed) {
  if (samples == 0) throw std::invalid_argument("samples must be positive");
  const OpenGraph g = graphs::brickwork(rows, cols);
  const TestDistribution d = strategy_brickwork(g);
  const std::size_t n = g.num_vertices();
  const VertexSet star = g.odd_vertices();

  // Canonical panel: singles, then pairs in lexicographic order, then random
  // supports from a fixed stream.
  std::vector<ErrorOp> panel;
  for (Vertex a = 0; a < n; ++a) panel.push_back(ErrorOp{VertexSet{a}});
  for (Vertex a = 0; a < n; ++a)
    for (Vertex b = a + 1; b < n; ++b)
      if (VertexSet{a, b} != star) panel.push_back(ErrorOp{VertexSet{a, b}});
  Rng rng(derive_seed(seed, kPanelStream));
  const VertexSet all = g.vertices();
  while (panel.size() < n + n * (n - 1) / 2 + kRandomPanel) {
    const VertexSet s = VertexSet(rng.next()) & all;
    if (!s.empty() && s != star) panel.push_back(ErrorOp{s});
  }

  const auto mode = DetectionMode::monte_carlo(samples, seed);
  const DetectionReport r = detection_rate(d, panel, mode);
  const double star_rate = detection_rate(d, {ErrorOp{star}}, DetectionMode::monte_carlo(samples, ~seed)).rates[0];
  double mean = 0;
  for (double x : r.rates) mean += x / static_cast<double>(r.rates.size());

  ExperimentReport rep("brickwork-rate", seed);
  rep.params()["rows"] = rows;
  rep.params()["cols"] = cols;
  rep.params()["samples"] = samples;
  rep.metrics()["panel_size"] = panel.size();
  rep.metrics()["min_rate"] = r.min;
  rep.metrics()["argmin"] = labels_of(g, panel[r.argmin].support);
  rep.metrics()["mean_rate"] = mean;
  rep.metrics()["estar_rate"] = star_rate;
  rep.check("min_rate", r.min, ">=", 1.0 / 14 - 0.01);
  rep.check("estar_rate", star_rate, "<=", 0.001);
  return rep;
}

ExperimentReport experiment_harmless(const MeasurementPattern& p, std::size_t trials, std::uint64_t seed) {
  ExperimentReport rep("harmless", seed);
  const OpenGraph& g = p.graph;
  const std::size_t n = g.num_vertices();
  rep.params() = graph_params(g);
  rep.params()["trials"] = trials;
  const PauliOp estar = PauliOp::z_on(n, g.odd_vertices());
  const double tv = deviation_effect(p, estar);
  double worst = tv;
  Rng rng(seed);
  for (std::size_t t = 0; t < trials; ++t) {
    MeasurementPattern q = p;
    for (auto& a : q.angles) a = Angle8(rng.uniform(8));
    worst = std::max(worst, deviation_effect(q, estar));
  }
  rep.metrics()["tv_estar"] = tv;
  rep.metrics()["tv_estar_max"] = worst;
  if (!g.odd_vertices().empty()) {
    const Vertex v = *g.odd_vertices().begin();
    rep.metrics()["contrast_vertex"] = g.label(v);
    rep.metrics()["tv_single_odd"] = deviation_effect(p, PauliOp::z_on(n, VertexSet{v}));
  }
  rep.check("tv_estar_max", worst, "<=", kExactTolerance);
  return rep;
}

ExperimentReport experiment_crsp(std::size_t n, CrspMode mode, std::size_t samples, std::uint64_t seed) {
  if (n < 2 || n > 9) throw std::invalid_argument("crsp supports 2 to 9 clients");
  ExperimentReport rep(mode == CrspMode::Correctness ? "crsp-correctness" : "crsp-security", seed);
  rep.params()["clients"] = n;
  rep.params()["samples"] = samples;

  if (mode == CrspMode::Correctness) {
    // 8^n angle choices, 2^(n-1) outcomes and a correction bit per theta.
    const bool exhaustive = n <= 5;
    double min_fid = 1.0;
    std::size_t branches = 0;
    for (int k = 0; k < 8; ++k) {
      const Angle8 theta(k);
      const Statevector target = Statevector::plus(theta, n - 1);
      auto program = [&](Chooser& c) {
        const auto run = crsp_honest_run(n, theta, c);
        const double norm = run.state.norm();
        min_fid = std::min(min_fid, run.state.fidelity(target) / (norm * norm));
      };
      if (exhaustive) {
        enumerate_branches(program, [&](double) { ++branches; });
      } else {
        for (std::size_t s = 0; s < std::max<std::size_t>(samples, 1); ++s) {
          EnumerateOptions opts;
          opts.coins = CoinMode::Sample;
          opts.seed = derive_seed(seed, 8 * s + static_cast<std::size_t>(k));
          enumerate_branches(program, [&](double) { ++branches; }, opts);
        }
      }
    }
    rep.params()["exhaustive"] = exhaustive;
    rep.metrics()["branches"] = branches;
    rep.metrics()["min_fidelity"] = min_fid;
    rep.check("min_fidelity", min_fid, ">=", 1.0 - kExactTolerance);
    return rep;
  }

  Rng rng(seed);
  std::vector<Angle8> adv(n);
  for (auto& a : adv) a = Angle8(rng.uniform(8));
  double max_tv = 0.0;
  std::size_t experiments = 0;
  const bool all_strategies = n <= 3;
  for (std::size_t h = 0; h < n; ++h) {
    if (all_strategies) {
      const std::uint64_t count = std::uint64_t{1} << (8 * (n - 1));
      for (std::uint64_t idx = 0; idx < count; ++idx) {
        for (int k = 0; k < 8; ++k) {
          const auto r = crsp_security_experiment(n, h, Angle8(k), adv, deterministic_t_strategy(n, idx));
          max_tv = std::max(max_tv, r.tv);
          ++experiments;
        }
      }
    } else {
      for (std::size_t s = 0; s < samples; ++s) {
        const auto r = crsp_security_experiment(n, h, Angle8(rng.uniform(8)), adv,
                                                deterministic_t_strategy(n, rng.next()));
        max_tv = std::max(max_tv, r.tv);
        ++experiments;
      }
    }
    const auto r = crsp_security_experiment(n, h, Angle8(rng.uniform(8)), adv, random_t_strategy(n));
    max_tv = std::max(max_tv, r.tv);
    ++experiments;
  }
  rep.params()["all_strategies"] = all_strategies;
  rep.metrics()["experiments"] = experiments;
  rep.metrics()["max_tv"] = max_tv;
  rep.check("max_tv", max_tv, "<=", kExactTolerance);
  return rep;
}

namespace {

bool is_count(const Json& v) { return v.is_number_unsigned() || (v.is_number_integer() && v.get<std::int64_t>() >= 0); }

const Json& field(const Json& j, const char* key) {
  auto it = j.find(key);
  if (it == j.end()) throw ParseError(std::string("run config: missing field '") + key + "'");
  return *it;
}

std::size_t count_field(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (!is_count(v)) throw ParseError(std::string("run config: '") + key + "' must be a nonnegative integer");
  return v.get<std::size_t>();
}

Json load_or_inline(const Json& ref, const std::filesystem::path& base) {
  if (ref.is_string()) {
    std::filesystem::path p = ref.get<std::string>();
    if (p.is_relative()) p = base / p;
    return load_json_file(p);
  }
  return ref;
}

TestDistribution scheme_from_config(const Json& ref, const OpenGraph& g, const std::filesystem::path& base,
                                    std::string& name) {
  if (ref.is_string()) {
    name = ref.get<std::string>();
    if (name == "general") return strategy_general(g);
    if (name == "even") return strategy_even(g);
    if (name == "odd") return strategy_odd_chains(g);
    if (name == "brickwork") return strategy_brickwork(g);
    if (name == "optimal") {
      const LpInstance inst = build_lp_instance(g);
      return solution_distribution(inst, solve_lp(inst));
    }
  } else {
    name = "inline";
  }
  Json j = load_or_inline(ref, base);
  if (j.is_object() && j.contains("distribution")) j = j["distribution"];
  return distribution_from_json(g, j);
}

std::unique_ptr<ServerStrategy> server_from_config(const Json& j, const OpenGraph& g, std::string& name) {
  const std::size_t n = g.num_vertices();
  if (j.is_null() || (j.is_string() && j == "none") || (j.is_string() && j == "honest")) {
    name = "honest";
    return std::make_unique<HonestServer>();
  }
  if (j.is_string() && j == "flip-all") {
    name = "flip-all";
    return std::make_unique<FlipAllServer>();
  }
  if (j.is_string() && j == "harmless") {
    name = "harmless";
    return std::make_unique<FixedZServer>(n, g.odd_vertices());
  }
  if (j.is_object() && j.contains("fixed-z")) {
    name = "fixed-z";
    return std::make_unique<FixedZServer>(n, vertex_set_from_json(g, j["fixed-z"]));
  }
  if (j.is_object() && j.contains("abort")) {
    name = "abort";
    if (!is_count(j["abort"])) throw ParseError("run config: 'abort' must be a round index");
    return std::make_unique<AbortingServer>(j["abort"].get<std::size_t>());
  }
  throw ParseError("run config: unknown adversary " + j.dump());
}

void apply_inputs(MeasurementPattern& p, const Json& inputs, std::vector<Vertex>* vs = nullptr,
                  std::vector<int>* bits = nullptr) {
  if (!inputs.is_object()) throw ParseError("run config: 'inputs' must map input labels to bits");
  for (const auto& [key, val] : inputs.items()) {
    const Vertex v = vertex_ref(p.graph, key);
    if (!p.graph.inputs().contains(v)) throw ParseError("run config: '" + key + "' is not an input vertex");
    if (!val.is_number_integer() || (val != 0 && val != 1)) throw ParseError("run config: input bits must be 0 or 1");
    const int b = val.get<int>();
    if (vs) {
      vs->push_back(v);
      bits->push_back(b);
    } else {
      p.input_bits[v] = b;
    }
  }
}

}  // namespace

ExperimentReport experiment_run(const Json& config, const std::filesystem::path& base_dir,
                                std::optional<std::uint64_t> seed_override) {
  try {
    if (!config.is_object()) throw ParseError("run config must be a JSON object");
    MeasurementPattern pattern = pattern_from_json(load_or_inline(field(config, "pattern"), base_dir));
    const OpenGraph& g = pattern.graph;

    ProtocolParams params;
    params.N = count_field(config, "N");
    params.d = count_field(config, "d");
    if (config.contains("c")) params.c = config["c"].get<double>();
    params.seed = config.contains("seed") ? config["seed"].get<std::uint64_t>() : 0;
    if (seed_override) params.seed = *seed_override;

    std::string scheme_name;
    const TestDistribution scheme = scheme_from_config(field(config, "scheme"), g, base_dir, scheme_name);
    if (!scheme.all_valid(g)) throw ParseError("run config: scheme has an invalid hole set");

    double epsilon = -1.0;
    const Json& wj = field(config, "w");
    if (wj.is_string() && wj == "auto") {
      if (config.contains("epsilon")) {
        epsilon = config["epsilon"].get<double>();
      } else {
        epsilon = detection_rate(scheme, all_errors(g)).min;
      }
      params.w = max_failures(params.c, params.s(), epsilon);
    } else if (is_count(wj)) {
      params.w = wj.get<std::size_t>();
    } else {
      throw ParseError("run config: 'w' must be a nonnegative integer or \"auto\"");
    }
    params.validate();

    std::optional<NoiseModel> noise;
    if (config.contains("noise") && !config["noise"].is_null()) {
      const double q = field(config["noise"], "q").get<double>();
      if (!(q >= 0.0 && q <= 1.0)) throw ParseError("run config: noise q must lie in [0, 1]");
      noise = NoiseModel{q};
    }
    std::string adversary;
    auto server = server_from_config(config.contains("adversary") ? config["adversary"] : Json(), g, adversary);
    if (config.contains("inputs")) apply_inputs(pattern, config["inputs"]);

    ExperimentReport rep("run", params.seed);
    rep.params()["N"] = params.N;
    rep.params()["d"] = params.d;
    rep.params()["w"] = params.w;
    rep.params()["c"] = params.c;
    if (epsilon >= 0) rep.params()["epsilon"] = epsilon;
    rep.params()["scheme"] = scheme_name;
    rep.params()["adversary"] = adversary;
    rep.params()["noise_q"] = noise ? noise->q : 0.0;

    RunOutcome out;
    if (config.contains("clients")) {
      const Json& cj = config["clients"];
      if (!cj.is_array()) throw ParseError("run config: 'clients' must be an array");
      std::vector<QsmpcClient> clients;
      for (const auto& c : cj) {
        QsmpcClient qc;
        if (c.contains("inputs")) apply_inputs(pattern, c["inputs"], &qc.inputs, &qc.bits);
        if (c.contains("fixed_angle")) qc.fixed_angle = Angle8(c["fixed_angle"].get<int>());
        clients.push_back(std::move(qc));
      }
      QsmpcOptions opts;
      if (config.contains("correction")) opts.apply_correction = config["correction"].get<bool>();
      const QsmpcOutcome q = run_qsmpc(params, pattern, scheme, clients, *server, opts, noise);
      out = q.run;
      rep.params()["clients"] = clients.size();
      rep.metrics()["crsp_sessions"] = q.crsp_sessions;
    } else {
      out = run_trappified_protocol(params, pattern, scheme, *server, noise);
    }

    rep.metrics()["verdict"] = out.accepted ? "accept" : "reject";
    rep.metrics()["aborted"] = out.aborted;
    rep.metrics()["output"] = out.output;
    rep.metrics()["failed_tests"] = out.failed_tests;
    OrderedJson rounds = OrderedJson::array();
    for (const auto& r : out.rounds) {
      OrderedJson o;
      o["index"] = r.index;
      o["type"] = r.test ? "test" : "computation";
      if (r.test) {
        o["tau"] = r.tau;
        o["holes"] = labels_of(g, g.vertices() - r.traps);
      } else {
        o["outputs"] = r.outputs;
      }
      o["afflicted"] = r.afflicted;
      rounds.push_back(std::move(o));
    }
    rep.metrics()["per_round"] = rounds;

    if (config.contains("expect")) {
      const Json& e = config["expect"];
      if (e.contains("verdict")) {
        const std::string want = e["verdict"].get<std::string>();
        if (want != "accept" && want != "reject") throw ParseError("run config: expected verdict must be accept or reject");
        rep.check("verdict_matches", out.accepted == (want == "accept"), "==", 1);
      }
      if (e.contains("output")) {
        rep.check("output_matches", out.output == e["output"].get<std::vector<int>>(), "==", 1);
      }
    }
    return rep;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("run config: ") + e.what());
  }
}

}  // namespace xyv
