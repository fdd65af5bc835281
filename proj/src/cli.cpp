#include "lemon/cli.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "lemon/batch.hpp"
#include "lemon/detect.hpp"
#include "lemon/io.hpp"
#include "lemon/planted.hpp"
#include "lemon/record.hpp"
#include "lemon/seeding.hpp"
#include "lemon/sparse_recovery.hpp"

namespace lemon {

namespace {

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(s);
  while (std::getline(in, item, sep))
    if (!item.empty()) out.push_back(item);
  return out;
}

int to_int(const std::string& s) {
  std::size_t used = 0;
  int v = 0;
  try {
    v = std::stoi(s, &used);
  } catch (const std::exception&) {
    throw UsageError("not an integer: '" + s + "'");
  }
  if (used != s.size()) throw UsageError("not an integer: '" + s + "'");
  return v;
}

double to_real(const std::string& s) {
  std::size_t used = 0;
  double v = 0;
  try {
    v = std::stod(s, &used);
  } catch (const std::exception&) {
    throw UsageError("not a number: '" + s + "'");
  }
  if (used != s.size()) throw UsageError("not a number: '" + s + "'");
  return v;
}

// "a..b", "a,b,c" or "a".
std::vector<int> parse_int_range(const std::string& s) {
  std::vector<int> out;
  if (const auto dots = s.find(".."); dots != std::string::npos) {
    const int lo = to_int(s.substr(0, dots));
    const int hi = to_int(s.substr(dots + 2));
    if (lo > hi) throw UsageError("empty range: " + s);
    for (int v = lo; v <= hi; ++v) out.push_back(v);
  } else {
    for (const auto& item : split(s, ',')) out.push_back(to_int(item));
  }
  if (out.empty()) throw UsageError("empty list: '" + s + "'");
  return out;
}

struct ParamFlags {
  std::string preset = "real";
  std::string mode = "auto";
  std::optional<int> walk_steps, dimension, expansion_step, avg_size, spread_steps, size_min, size_max, max_iterations;
  std::optional<double> alpha;
  bool degree_normalized = false;

  void attach(CLI::App& app, bool with_walk_and_dimension) {
    app.add_option("--preset", preset, "Parameter preset: real or synthetic")->check(CLI::IsMember({"real", "synthetic"}));
    app.add_option("--mode", mode, "Community size selection: auto or gt")->check(CLI::IsMember({"auto", "gt"}));
    if (with_walk_and_dimension) {
      app.add_option("--walk-steps", walk_steps, "Random-walk steps k");
      app.add_option("--dimension", dimension, "Local spectral dimension l");
    }
    app.add_option("--expansion-step", expansion_step, "Seed growth per iteration");
    app.add_option("--alpha", alpha, "Sample size factor");
    app.add_option("--avg-comm-size", avg_size, "Average community size (taken from ground truth if omitted)");
    app.add_option("--max-walk-spread-steps", spread_steps, "Cap on walk-spread steps while sampling");
    app.add_option("--min-comm-size", size_min, "Smallest community size considered");
    app.add_option("--max-comm-size", size_max, "Largest community size considered");
    app.add_option("--max-iterations", max_iterations, "Cap on expansion iterations");
    app.add_flag("--degree-normalized", degree_normalized, "Start the walk from a degree-weighted distribution");
  }

  LemonParams build() const {
    LemonParams p = preset == "synthetic" ? LemonParams::synthetic_preset() : LemonParams::real_preset();
    p.mode = parse_size_mode(mode);
    if (walk_steps) p.walk_steps = *walk_steps;
    if (dimension) p.dimension = *dimension;
    if ((walk_steps || dimension) && !p.combo_sweep.empty()) p.combo_sweep.clear();
    if (expansion_step) p.expansion_step = *expansion_step;
    if (alpha) p.alpha = *alpha;
    if (avg_size) p.avg_community_size = *avg_size;
    if (spread_steps) p.sampler.max_steps = *spread_steps;
    if (size_min) p.size_min = *size_min;
    if (size_max) p.size_max = *size_max;
    if (max_iterations) p.max_iterations = *max_iterations;
    if (degree_normalized) p.degree_normalized_p0 = true;
    // The synthetic combo sweep scores against ground truth, which auto mode must not peek at.
    if (p.mode == SizeMode::automatic) p.combo_sweep.clear();
    p.validate();
    return p;
  }

  DatasetKind kind() const { return preset == "synthetic" ? DatasetKind::synthetic : DatasetKind::real; }
};

struct SeedFlags {
  std::string strategy = "random";
  std::optional<int> count;
  double ratio = 0.08;
  bool enlarge = false;
  std::uint64_t rng_seed = 1;

  void attach(CLI::App& app) {
    app.add_option("--seed-strategy", strategy,
                   "high_degree, low_degree, triangle, random or inward_ratio");
    app.add_option("--seed-count", count, "Number of seeds (default depends on the dataset kind)");
    app.add_option("--seed-ratio", ratio, "Seed fraction of the community for synthetic data");
    app.add_flag("--enlarge-seeds", enlarge, "Add short paths between seeds before detection");
    app.add_option("--rng-seed", rng_seed, "Seed for all randomness");
  }

  BatchOptions batch_options(DatasetKind kind) const {
    BatchOptions o;
    o.strategy = parse_seed_strategy(strategy);
    o.kind = kind;
    o.seed_count = count;
    o.seed_ratio = ratio;
    o.enlarge_seeds = enlarge;
    return o;
  }
};

struct InputFlags {
  std::string graph;
  std::string truth;
  std::string planted;
  int graphs = 20;
  int cases = 120;

  void attach(CLI::App& app) {
    app.add_option("--graph", graph, "Edge list file");
    app.add_option("--ground-truth", truth, "Community file");
    app.add_option("--planted", planted, "Generate planted graphs instead of reading files (figure1)")
        ->check(CLI::IsMember({"figure1"}));
    app.add_option("--graphs", graphs, "Planted graphs to generate (one case each)");
    app.add_option("--cases", cases, "Cases drawn from a file-based ground truth");
  }
};

void emit(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw DataError("cannot write " + path);
  f << text;
}

std::ofstream open_out(const std::string& path) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw DataError("cannot write " + path);
  return f;
}

std::vector<std::vector<std::int64_t>> read_communities_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open " + path);
  return read_community_lines(in);
}

// Runs one batch on the chosen input, either files or planted graphs.
struct BatchRunner {
  const InputFlags& input;
  BatchOptions options;
  std::uint64_t rng_seed;
  std::size_t community_index;
  std::optional<Dataset> data;

  void load() {
    if (!input.planted.empty()) {
      if (!input.graph.empty()) throw UsageError("--planted and --graph are exclusive");
      return;
    }
    if (input.graph.empty() || input.truth.empty())
      throw UsageError("need --graph and --ground-truth, or --planted");
    data = load_dataset(input.graph, input.truth);
  }

  BatchReport run(const LemonParams& params) const {
    if (data) return run_batch(data->graph, *data->truth, params, options, input.cases, rng_seed);
    return run_planted_batch(PlantedSpec::figure1(rng_seed), input.graphs, params, options, community_index,
                             rng_seed);
  }

  IdMap ids() const {
    if (data) return data->ids;
    const auto spec = PlantedSpec::figure1(rng_seed);
    int n = spec.extra_vertices;
    for (const auto& g : spec.groups) n += g.size;
    for (const auto& o : spec.overlaps) n -= o.shared;
    return IdMap::identity(n);
  }
};

int run_detect(const InputFlags& input, const ParamFlags& pf, const SeedFlags& sf, const std::string& seeds_arg,
               std::size_t community_index, const std::string& out_path, std::ostream& out) {
  if (input.graph.empty()) throw UsageError("--graph is required");
  std::optional<std::string> truth_path;
  if (!input.truth.empty()) truth_path = input.truth;
  Dataset ds = load_dataset(input.graph, truth_path);

  LemonParams params = pf.build();
  const std::vector<Vertex>* community = nullptr;
  if (ds.truth) {
    if (community_index >= ds.truth->communities.size())
      throw UsageError("--community-index out of range (" + std::to_string(ds.truth->communities.size()) +
                       " communities)");
    community = &ds.truth->communities[community_index];
    if (params.avg_community_size <= 0)
      params.avg_community_size = static_cast<int>(std::lround(ds.truth->average_size()));
  }

  SeedSet seeds;
  if (!seeds_arg.empty()) {
    std::vector<Vertex> vs;
    for (const auto& item : split(seeds_arg, ',')) {
      const auto id = static_cast<std::int64_t>(to_int(item));
      const auto v = ds.ids.find(id);
      if (!v) throw DataError("seed " + item + " not in graph");
      vs.push_back(*v);
    }
    seeds = make_seed_set(std::move(vs), SeedStrategy::user, sf.rng_seed);
  } else {
    if (!community) throw UsageError("need --seeds or --ground-truth");
    const int size = static_cast<int>(community->size());
    const int count = sf.count.value_or(seed_count_policy(pf.kind(), size, sf.ratio));
    seeds = select_seeds(ds.graph, *community, parse_seed_strategy(sf.strategy), count, sf.rng_seed);
  }
  if (sf.enlarge) seeds = enlarge_seed_set(ds.graph, seeds);

  std::optional<std::span<const Vertex>> truth_span;
  if (community) truth_span = std::span<const Vertex>(*community);
  const auto result = detect(ds.graph, seeds, params, truth_span);
  emit(serialize_detection(result, ds.ids), out_path, out);
  return 0;
}

int run_gen(const std::string& preset, const std::vector<std::string>& groups,
            const std::vector<std::string>& overlaps, double background, int extra, std::uint64_t rng_seed,
            const std::string& graph_out, const std::string& truth_out, std::ostream& out) {
  PlantedSpec spec;
  if (!preset.empty()) {
    if (!groups.empty() || !overlaps.empty()) throw UsageError("--preset excludes --group and --overlap");
    spec = PlantedSpec::figure1(rng_seed);
  } else {
    if (groups.empty()) throw UsageError("need --preset or at least one --group SIZE:P");
    for (const auto& g : groups) {
      const auto parts = split(g, ':');
      if (parts.size() != 2) throw UsageError("--group expects SIZE:P, got '" + g + "'");
      spec.groups.push_back({to_int(parts[0]), to_real(parts[1])});
    }
    for (const auto& o : overlaps) {
      const auto parts = split(o, ':');
      if (parts.size() != 3) throw UsageError("--overlap expects A:B:SHARED, got '" + o + "'");
      spec.overlaps.push_back({to_int(parts[0]), to_int(parts[1]), to_int(parts[2])});
    }
    spec.background_p = background;
    spec.extra_vertices = extra;
    spec.rng_seed = rng_seed;
  }
  const auto planted = generate_planted(spec);
  const auto ids = IdMap::identity(planted.graph.size());
  {
    auto f = open_out(graph_out);
    write_edge_list(f, planted.graph, ids);
  }
  {
    auto f = open_out(truth_out);
    write_communities(f, planted.truth.communities, ids);
  }
  out << "vertices " << planted.graph.size() << " edges " << planted.graph.edge_count() << " communities "
      << planted.truth.communities.size() << '\n';
  return 0;
}

int run_eval(const std::string& detected_path, const std::string& truth_path, const std::string& out_path,
             std::ostream& out) {
  const auto detected_lines = read_communities_file(detected_path);
  const auto truth_lines = read_communities_file(truth_path);
  std::vector<std::int64_t> all;
  for (const auto* lines : {&detected_lines, &truth_lines})
    for (const auto& line : *lines) all.insert(all.end(), line.begin(), line.end());
  const auto ids = IdMap::from_ids(std::move(all));
  auto detected = map_communities(detected_lines, ids);
  auto truth = map_communities(truth_lines, ids);
  std::erase_if(truth, [](const auto& c) { return c.empty(); });
  if (truth.empty()) throw DataError("no communities in " + truth_path);
  emit(serialize_eval(best_match_scores(detected, truth)), out_path, out);
  return 0;
}

}  // namespace

int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Local community detection by seed-set expansion", "lemon"};
  app.require_subcommand(1);

  InputFlags input;
  ParamFlags detect_params, batch_params, sweep_params;
  SeedFlags detect_seeds, batch_seeds, sweep_seeds;
  std::string out_path;
  std::size_t community_index = 0;

  auto* detect_cmd = app.add_subcommand("detect", "Detect one community around a seed set");
  std::string seeds_arg;
  detect_cmd->add_option("--graph", input.graph, "Edge list file")->required();
  detect_cmd->add_option("--ground-truth", input.truth, "Community file");
  detect_cmd->add_option("--seeds", seeds_arg, "Comma-separated seed ids");
  detect_cmd->add_option("--community-index", community_index, "Ground-truth community to seed from and score against");
  detect_cmd->add_option("--out", out_path, "Write the run record here instead of stdout");
  detect_params.attach(*detect_cmd, true);
  detect_seeds.attach(*detect_cmd);

  auto* batch_cmd = app.add_subcommand("batch", "Run many seeded detections and summarize F1");
  input.attach(*batch_cmd);
  batch_cmd->add_option("--community-index", community_index, "Planted community to seed from");
  batch_cmd->add_option("--out", out_path, "Write the run record here instead of stdout");
  int threads = 0;
  batch_cmd->add_option("--threads", threads, "Worker threads (default LEMON_THREADS or all cores)");
  batch_params.attach(*batch_cmd, true);
  batch_seeds.attach(*batch_cmd);

  auto* gen_cmd = app.add_subcommand("gen", "Generate a planted-community graph");
  std::string gen_preset, graph_out, truth_out;
  std::vector<std::string> gen_groups, gen_overlaps;
  double background = 0.0;
  int extra = 0;
  std::uint64_t gen_seed = 1;
  gen_cmd->add_option("--preset", gen_preset, "Named spec (figure1)")->check(CLI::IsMember({"figure1"}));
  gen_cmd->add_option("--group", gen_groups, "Group SIZE:P (repeatable)");
  gen_cmd->add_option("--overlap", gen_overlaps, "Overlap A:B:SHARED between group indices (repeatable)");
  gen_cmd->add_option("--background", background, "Edge probability outside groups");
  gen_cmd->add_option("--extra", extra, "Vertices outside every group");
  gen_cmd->add_option("--rng-seed", gen_seed, "Generator seed");
  gen_cmd->add_option("--graph-out", graph_out, "Edge list output")->required();
  gen_cmd->add_option("--truth-out", truth_out, "Community output")->required();

  auto* sweep_cmd = app.add_subcommand("sweep-params", "Mean F1 over a grid of walk steps and dimensions");
  std::string dims_arg = "3", steps_arg = "3";
  input.attach(*sweep_cmd);
  sweep_cmd->add_option("--dims", dims_arg, "Dimensions: a..b, a,b,c or a");
  sweep_cmd->add_option("--walk-steps", steps_arg, "Walk steps: a..b, a,b,c or a");
  sweep_cmd->add_option("--community-index", community_index, "Planted community to seed from");
  sweep_cmd->add_option("--out", out_path, "Write the run record here instead of stdout");
  sweep_cmd->add_option("--threads", threads, "Worker threads");
  sweep_params.attach(*sweep_cmd, false);
  sweep_seeds.attach(*sweep_cmd);

  auto* eval_cmd = app.add_subcommand("eval", "Score detected communities against ground truth");
  std::string detected_path, eval_truth;
  eval_cmd->add_option("--detected", detected_path, "Detected communities, one per line")->required();
  eval_cmd->add_option("--ground-truth", eval_truth, "Ground-truth communities")->required();
  eval_cmd->add_option("--out", out_path, "Write the run record here instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return 1;
  }

  try {
    if (*detect_cmd)
      return run_detect(input, detect_params, detect_seeds, seeds_arg, community_index, out_path, out);

    if (*batch_cmd || *sweep_cmd) {
      const bool sweep_mode = static_cast<bool>(*sweep_cmd);
      const auto& pf = sweep_mode ? sweep_params : batch_params;
      const auto& sf = sweep_mode ? sweep_seeds : batch_seeds;
      BatchRunner runner{input, sf.batch_options(pf.kind()), sf.rng_seed, community_index, std::nullopt};
      runner.options.threads = threads;
      runner.load();
      const LemonParams params = pf.build();
      if (!sweep_mode) {
        emit(serialize_batch(runner.run(params), runner.ids()), out_path, out);
        return 0;
      }
      const auto rows = param_sweep(params, parse_int_range(steps_arg), parse_int_range(dims_arg),
                                    [&](const LemonParams& p) { return runner.run(p); });
      const int cases = runner.data ? input.cases : input.graphs;
      emit(serialize_param_sweep(rows, params, cases, sf.rng_seed), out_path, out);
      return 0;
    }

    if (*gen_cmd)
      return run_gen(gen_preset, gen_groups, gen_overlaps, background, extra, gen_seed, graph_out, truth_out, out);

    if (*eval_cmd) return run_eval(detected_path, eval_truth, out_path, out);
  } catch (const DataError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const LpInfeasible& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
  return 1;
}

}  // namespace lemon
