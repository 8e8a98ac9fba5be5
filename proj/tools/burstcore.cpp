// burstcore CLI: ingest temporal edge lists, mine bursting communities,
// score them, generate synthetic instances, and benchmark the miners.
//
// Subcommands: stats | mdc | pomdc | metrics | gen | bench.
// All results are machine-readable (JSON or CSV); diagnostics go to stderr.
// Exit codes: 0 success, 2 usage/input error, 3 internal error.

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "burstcore/core_mining.hpp"
#include "burstcore/density.hpp"
#include "burstcore/errors.hpp"
#include "burstcore/generator.hpp"
#include "burstcore/json_io.hpp"
#include "burstcore/metrics.hpp"
#include "burstcore/pareto.hpp"
#include "burstcore/temporal_graph.hpp"

namespace {

// ---------------------------------------------------------------------------
// Logging: leveled stderr messages controlled by BURSTCORE_LOG.
// ---------------------------------------------------------------------------

enum class LogLevel { kError = 0, kInfo = 1, kDebug = 2 };

LogLevel log_level() {
  static const LogLevel level = [] {
    const char* raw = std::getenv("BURSTCORE_LOG");
    if (raw == nullptr) return LogLevel::kError;
    const std::string value(raw);
    if (value == "debug") return LogLevel::kDebug;
    if (value == "info") return LogLevel::kInfo;
    return LogLevel::kError;  // "error" and anything unrecognized
  }();
  return level;
}

void log_info(const std::string& msg) {
  if (log_level() >= LogLevel::kInfo) std::cerr << "[info] " << msg << "\n";
}

void log_debug(const std::string& msg) {
  if (log_level() >= LogLevel::kDebug) std::cerr << "[debug] " << msg << "\n";
}

// ---------------------------------------------------------------------------
// Small shared plumbing.
// ---------------------------------------------------------------------------

double elapsed_ms(std::chrono::steady_clock::time_point start) {
  const auto end = std::chrono::steady_clock::now();
  return std::chrono::duration<double, std::milli>(end - start).count();
}

// Writes text to a file, or to stdout when the path is "-".
void write_text(const std::string& path, const std::string& text) {
  if (path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw burstcore::ArgumentError("cannot open output file: " + path);
  out << text;
  if (!out.flush()) {
    throw burstcore::ArgumentError("failed writing output file: " + path);
  }
}

burstcore::TemporalGraph load_input(const std::string& input,
                                    const std::string& bucket_width) {
  const auto spec = burstcore::BucketSpec::parse(bucket_width);
  const auto start = std::chrono::steady_clock::now();
  auto g = burstcore::load_graph(input, spec);
  std::ostringstream msg;
  msg << "loaded " << input << ": n=" << g.n << " horizon=" << g.horizon
      << " temporal_edges=" << g.m << " (" << elapsed_ms(start) << " ms)";
  log_info(msg.str());
  return g;
}

// Reads a community file: one node label per line, '#' comments and blank
// lines ignored. Returns de-duplicated member ids.
std::vector<burstcore::NodeId> read_community(
    const burstcore::TemporalGraph& g, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw burstcore::ArgumentError("cannot open community file: " + path);
  std::vector<burstcore::NodeId> members;
  std::string line;
  while (std::getline(in, line)) {
    if (const auto hash = line.find('#'); hash != std::string::npos) {
      line.erase(hash);
    }
    std::istringstream tokens(line);
    std::string label;
    while (tokens >> label) members.push_back(g.id_of(label));
  }
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  return members;
}

burstcore::MdcResult run_mdc_algo(const burstcore::TemporalGraph& g,
                                  const std::string& algo,
                                  burstcore::Timestamp l,
                                  burstcore::Density delta, int threads) {
  if (algo == "baseline") return burstcore::mdc_baseline(g, l, delta);
  if (algo == "dp") return burstcore::mdc(g, l, delta, threads);
  return burstcore::mdc_plus(g, l, delta);
}

double median_of(std::vector<double> samples) {
  std::sort(samples.begin(), samples.end());
  const std::size_t mid = samples.size() / 2;
  if (samples.size() % 2 == 1) return samples[mid];
  return (samples[mid - 1] + samples[mid]) / 2.0;
}

// ---------------------------------------------------------------------------
// Subcommand bodies. Each returns the process exit code.
// ---------------------------------------------------------------------------

struct CommonOpts {
  std::string input;
  std::string bucket_width = "raw";
  std::string output = "-";
};

void add_common(CLI::App* cmd, CommonOpts* opts, bool needs_input = true) {
  auto* in = cmd->add_option("--input", opts->input,
                             "temporal edge-list file (\"u v t\" per line)");
  if (needs_input) in->required();
  cmd->add_option("--bucket-width", opts->bucket_width,
                  "timestamp bucketing: \"raw\" or a positive integer width");
  cmd->add_option("--output", opts->output, "result path (\"-\" = stdout)");
}

int cmd_stats(const CommonOpts& opts) {
  const auto g = load_input(opts.input, opts.bucket_width);
  write_text(opts.output, burstcore::stats_json(g));
  return 0;
}

int cmd_mdc(const CommonOpts& opts, burstcore::Timestamp l,
            const std::string& delta_text, const std::string& algo,
            int threads) {
  const auto delta = burstcore::parse_density(delta_text);
  const auto g = load_input(opts.input, opts.bucket_width);
  const auto start = std::chrono::steady_clock::now();
  const auto result = run_mdc_algo(g, algo, l, delta, threads);
  std::ostringstream msg;
  msg << "mdc --algo " << algo << ": " << result.nodes.size() << " nodes ("
      << elapsed_ms(start) << " ms)";
  log_info(msg.str());
  write_text(opts.output, burstcore::mdc_json(g, result));
  return 0;
}

int cmd_pomdc(const CommonOpts& opts, bool no_prune, int threads) {
  const auto g = load_input(opts.input, opts.bucket_width);
  const auto start = std::chrono::steady_clock::now();
  const auto frontier = no_prune ? burstcore::pomdc_baseline(g, threads)
                                 : burstcore::pomdc(g, threads);
  std::ostringstream msg;
  msg << "pomdc" << (no_prune ? " --no-prune" : "") << ": "
      << frontier.size() << " frontier points (" << elapsed_ms(start)
      << " ms)";
  log_info(msg.str());
  write_text(opts.output, burstcore::frontier_json(g, frontier));
  return 0;
}

int cmd_metrics(const CommonOpts& opts, const std::string& community_path) {
  const auto g = load_input(opts.input, opts.bucket_width);
  const auto members = read_community(g, community_path);
  const auto report = burstcore::score_community(g, members);
  write_text(opts.output, burstcore::metrics_json(report));
  return 0;
}

struct GenOpts {
  std::string output;
  std::string members_file;
  int n = 1000;
  burstcore::Timestamp horizon = 50;
  double background = 0.001;
  int clique_size = 0;
  std::string clique_window;
  double clique_prob = 1.0;
  std::uint64_t seed = 1;
};

int cmd_gen(const GenOpts& opts) {
  burstcore::GenConfig config;
  config.n = opts.n;
  config.horizon = opts.horizon;
  config.background_prob = opts.background;
  config.seed = opts.seed;
  if (opts.clique_size > 0) {
    burstcore::PlantedClique clique;
    clique.size = opts.clique_size;
    clique.presence_prob = opts.clique_prob;
    if (opts.clique_window.empty()) {
      clique.t_begin = 1;
      clique.t_end = opts.horizon;
    } else {
      const auto colon = opts.clique_window.find(':');
      std::size_t used_a = 0;
      std::size_t used_b = 0;
      try {
        if (colon == std::string::npos) throw std::invalid_argument("");
        clique.t_begin =
            std::stoi(opts.clique_window.substr(0, colon), &used_a);
        clique.t_end = std::stoi(opts.clique_window.substr(colon + 1), &used_b);
        if (used_a != colon || used_b != opts.clique_window.size() - colon - 1) {
          throw std::invalid_argument("");
        }
      } catch (const std::exception&) {
        throw burstcore::ArgumentError("invalid clique window '" +
                                       opts.clique_window +
                                       "' (expected BEGIN:END)");
      }
    }
    config.clique = clique;
  }
  const auto result = burstcore::generate(config);
  {
    std::ofstream out(opts.output);
    if (!out) {
      throw burstcore::ArgumentError("cannot open output file: " + opts.output);
    }
    burstcore::write_generated(result, out);
  }
  const std::string members_path =
      opts.members_file.empty() ? opts.output + ".members" : opts.members_file;
  {
    std::ofstream out(members_path);
    if (!out) {
      throw burstcore::ArgumentError("cannot open output file: " +
                                     members_path);
    }
    burstcore::write_members(result, out);
  }
  std::ostringstream msg;
  msg << "generated " << opts.output << ": " << result.edges.size()
      << " temporal edges, " << result.clique_members.size()
      << " planted members";
  log_info(msg.str());
  return 0;
}

int cmd_bench(const CommonOpts& opts, burstcore::Timestamp l,
              const std::string& delta_text, int reps, int threads) {
  const auto delta = burstcore::parse_density(delta_text);
  const auto g = load_input(opts.input, opts.bucket_width);

  const std::vector<std::string> algos = {"baseline", "dp", "incremental"};
  std::ostringstream csv;
  csv << "instance,algo,median_ms,nodes_out\n";
  double baseline_ms = 0.0;
  double incremental_ms = 0.0;
  for (const auto& algo : algos) {
    std::vector<double> samples;
    std::size_t nodes_out = 0;
    for (int rep = 0; rep < reps; ++rep) {
      const auto start = std::chrono::steady_clock::now();
      const auto result = run_mdc_algo(g, algo, l, delta, threads);
      samples.push_back(elapsed_ms(start));
      nodes_out = result.nodes.size();
      std::ostringstream msg;
      msg << "bench " << algo << " rep " << rep + 1 << ": " << samples.back()
          << " ms";
      log_debug(msg.str());
    }
    const double med = median_of(samples);
    if (algo == "baseline") baseline_ms = med;
    if (algo == "incremental") incremental_ms = med;
    csv << opts.input << "," << algo << "," << med << "," << nodes_out << "\n";
  }
  write_text(opts.output, csv.str());
  if (incremental_ms > 0.0) {
    std::ostringstream line;
    line << "speedup baseline/incremental: " << baseline_ms / incremental_ms
         << "x";
    std::cerr << line.str() << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"burstcore: bursting-community mining in temporal graphs"};
  app.require_subcommand(1);

  CommonOpts stats_opts;
  auto* stats = app.add_subcommand("stats", "summarize a temporal graph");
  add_common(stats, &stats_opts);

  CommonOpts mdc_opts;
  burstcore::Timestamp mdc_l = 2;
  std::string mdc_delta;
  std::string mdc_algo = "incremental";
  int mdc_threads = 1;
  auto* mdc = app.add_subcommand("mdc", "mine one (l,delta)-maximal dense core");
  add_common(mdc, &mdc_opts);
  mdc->add_option("--l", mdc_l, "minimum window length (>= 2)")->required();
  mdc->add_option("--delta", mdc_delta, "density threshold (\"p/q\" or decimal)")
      ->required();
  mdc->add_option("--algo", mdc_algo, "mining algorithm")
      ->check(CLI::IsMember({"baseline", "dp", "incremental"}))
      ->capture_default_str();
  mdc->add_option("--threads", mdc_threads, "worker cap for parallel phases")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();

  CommonOpts pomdc_opts;
  bool pomdc_no_prune = false;
  int pomdc_threads = 1;
  auto* pomdc =
      app.add_subcommand("pomdc", "enumerate the Pareto-optimal frontier");
  add_common(pomdc, &pomdc_opts);
  pomdc->add_flag("--no-prune", pomdc_no_prune,
                  "disable candidate pruning between frontier points");
  pomdc->add_option("--threads", pomdc_threads, "worker cap for cache priming")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();

  CommonOpts metrics_opts;
  std::string community_path;
  auto* metrics =
      app.add_subcommand("metrics", "score a community (AD / AS metrics)");
  add_common(metrics, &metrics_opts);
  metrics
      ->add_option("--community", community_path,
                   "file with one member label per line")
      ->required();

  GenOpts gen_opts;
  auto* gen = app.add_subcommand("gen", "generate a synthetic temporal graph");
  gen->add_option("--output", gen_opts.output, "edge-list file to write")
      ->required();
  gen->add_option("--n", gen_opts.n, "node count")->capture_default_str();
  gen->add_option("--horizon", gen_opts.horizon, "number of snapshots")
      ->capture_default_str();
  gen->add_option("--background", gen_opts.background,
                  "per-snapshot background edge probability")
      ->capture_default_str();
  gen->add_option("--clique-size", gen_opts.clique_size,
                  "planted clique size (0 = none)")
      ->capture_default_str();
  gen->add_option("--clique-window", gen_opts.clique_window,
                  "planted window as BEGIN:END (default: whole horizon)");
  gen->add_option("--clique-prob", gen_opts.clique_prob,
                  "per-snapshot clique presence probability")
      ->capture_default_str();
  gen->add_option("--seed", gen_opts.seed, "RNG seed")->capture_default_str();
  gen->add_option("--members-file", gen_opts.members_file,
                  "sidecar path for planted members (default OUTPUT.members)");

  CommonOpts bench_opts;
  burstcore::Timestamp bench_l = 2;
  std::string bench_delta;
  int bench_reps = 3;
  int bench_threads = 1;
  auto* bench =
      app.add_subcommand("bench", "compare mining algorithms on one instance");
  add_common(bench, &bench_opts);
  bench->add_option("--l", bench_l, "minimum window length (>= 2)")->required();
  bench
      ->add_option("--delta", bench_delta,
                   "density threshold (\"p/q\" or decimal)")
      ->required();
  bench->add_option("--reps", bench_reps, "repetitions per algorithm (>= 3)")
      ->check(CLI::Range(3, 1000))
      ->capture_default_str();
  bench->add_option("--threads", bench_threads, "worker cap for parallel phases")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);  // prints help, exits 0
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (*stats) return cmd_stats(stats_opts);
    if (*mdc) return cmd_mdc(mdc_opts, mdc_l, mdc_delta, mdc_algo, mdc_threads);
    if (*pomdc) return cmd_pomdc(pomdc_opts, pomdc_no_prune, pomdc_threads);
    if (*metrics) return cmd_metrics(metrics_opts, community_path);
    if (*gen) return cmd_gen(gen_opts);
    if (*bench)
      return cmd_bench(bench_opts, bench_l, bench_delta, bench_reps,
                       bench_threads);
    std::cerr << "error: no subcommand selected\n";
    return 2;
  } catch (const burstcore::ArgumentError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const burstcore::FormatError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const burstcore::InternalError& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  }
}
