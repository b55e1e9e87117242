#include "hotspot/cli.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <random>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "hotspot/io.hpp"
#include "hotspot/oracle.hpp"
#include "hotspot/query_engine.hpp"

namespace hotspot {

namespace {

using ordered_json = nlohmann::ordered_json;

std::string fmt17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

struct QueryRecord {
  Window window;  // effective (clamped) window
  Witness witness;
};

void write_record(const QueryRecord& rec, const std::string& format, std::ostream& out) {
  if (format == "tsv") {
    out << fmt17(rec.window.start) << '\t' << fmt17(rec.window.end) << '\t'
        << fmt17(rec.witness.score) << '\t' << fmt17(rec.witness.interval.start) << '\t'
        << fmt17(rec.witness.interval.end) << '\t' << fmt17(rec.witness.square.anchor_x) << '\t'
        << fmt17(rec.witness.square.anchor_y) << '\t' << fmt17(rec.witness.square.side) << '\n';
    return;
  }
  ordered_json j;
  j["window"] = {rec.window.start, rec.window.end};
  j["score"] = rec.witness.score;
  j["interval"] = {rec.witness.interval.start, rec.witness.interval.end};
  j["square"] = {{"x", rec.witness.square.anchor_x},
                 {"y", rec.witness.square.anchor_y},
                 {"side", rec.witness.square.side}};
  out << j.dump() << '\n';
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open file: " + path);
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  return text;
}

int run_query(const std::string& input, double side, bool whole, std::vector<double> window,
              const std::string& queries_path, const std::string& format, std::ostream& out) {
  Trajectory traj = load_trajectory(input);
  HotspotIndex index(std::move(traj), side);
  const Trajectory& t = index.trajectory();

  std::vector<Window> windows;
  if (whole) {
    windows.push_back(Window{t.time_begin(), t.time_end()});
  } else if (!window.empty()) {
    windows.push_back(Window{window[0], window[1]});
  } else {
    windows = parse_query_batch(slurp(queries_path));
  }

  for (const Window& w : windows) {
    if (w.start > w.end) {
      throw std::runtime_error("query window start after end: " + fmt17(w.start) + " > " +
                               fmt17(w.end));
    }
    Window effective{t.clamp_time(w.start), t.clamp_time(w.end)};
    Witness wit = index.query(effective.start, effective.end);
    write_record(QueryRecord{effective, wit}, format, out);
  }
  return 0;
}

int run_oracle(const std::string& input, double side, std::vector<double> window,
               std::size_t samples, std::ostream& out) {
  Trajectory traj = load_trajectory(input);
  Window effective{traj.clamp_time(window[0]), traj.clamp_time(window[1])};
  Witness anchored = oracle_vertex_anchored_opt(traj, side, effective);
  double sampled = oracle_sampled_opt(traj, side, effective, samples);
  ordered_json j;
  j["window"] = {effective.start, effective.end};
  j["vertex_anchored"] = anchored.score;
  j["sampled"] = sampled;
  j["samples"] = samples;
  out << j.dump() << '\n';
  return 0;
}

int run_gen(std::size_t n, std::uint64_t seed, const std::string& out_path,
            const GenParams& params) {
  Trajectory traj = generate(n, seed, params);
  std::ofstream f(out_path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open output file: " + out_path);
  serialize_trajectory(traj, f);
  if (!f.good()) throw std::runtime_error("write failed: " + out_path);
  return 0;
}

int run_bench(std::size_t n, std::size_t queries, double side, std::uint64_t seed,
              std::ostream& out) {
  using clock = std::chrono::steady_clock;
  Trajectory traj = generate(n, seed);

  auto t0 = clock::now();
  HotspotIndex index(std::move(traj), side);
  auto t1 = clock::now();
  double build_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();

  const Trajectory& t = index.trajectory();
  std::mt19937_64 rng(seed + 1);
  std::uniform_real_distribution<double> time_dist(t.time_begin(), t.time_end());
  std::uniform_real_distribution<double> u01(0.0, 1.0);

  std::vector<double> latencies_us(queries);
  std::vector<std::size_t> depth_histogram;
  for (std::size_t q = 0; q < queries; ++q) {
    // alternate full-scale and log-scaled short windows
    double a = time_dist(rng), b;
    if (q % 2 == 0) {
      b = time_dist(rng);
    } else {
      b = std::min(a + t.total_duration() * std::exp(std::log(1e-6) * u01(rng)), t.time_end());
    }
    if (a > b) std::swap(a, b);
    QueryStats stats;
    auto q0 = clock::now();
    Witness wit = index.query(a, b, &stats);
    auto q1 = clock::now();
    latencies_us[q] = std::chrono::duration<double, std::micro>(q1 - q0).count();
    (void)wit;
    if (depth_histogram.size() <= static_cast<std::size_t>(stats.depth)) {
      depth_histogram.resize(stats.depth + 1, 0);
    }
    ++depth_histogram[stats.depth];
  }
  std::sort(latencies_us.begin(), latencies_us.end());
  auto percentile = [&](double p) {
    std::size_t i = static_cast<std::size_t>(p * (latencies_us.size() - 1));
    return latencies_us[i];
  };

  out << "vertices: " << n << '\n';
  out << "queries: " << queries << '\n';
  out << "build_ms: " << build_ms << '\n';
  out << "query_median_us: " << percentile(0.5) << '\n';
  out << "query_p99_us: " << percentile(0.99) << '\n';
  out << "recursion_depth_histogram:" << '\n';
  for (std::size_t d = 0; d < depth_histogram.size(); ++d) {
    if (depth_histogram[d] > 0) out << "  depth " << d << ": " << depth_histogram[d] << '\n';
  }
  return 0;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"time-windowed trajectory hotspot queries"};
  app.require_subcommand(1);

  std::string input, queries_path, out_path, format = "json";
  std::vector<double> window;
  double side = 0.0;
  bool whole = false;
  std::size_t n = 0, nqueries = 0, samples = 200;
  std::uint64_t seed = 0;
  GenParams gen_params;

  CLI::App* query = app.add_subcommand("query", "answer hotspot queries over a trajectory");
  query->add_option("--input", input, "trajectory CSV file")->required();
  query->add_option("--side", side, "square side length")->required()
      ->check(CLI::PositiveNumber);
  auto* opt_window = query->add_option("--window", window, "query window start and end")
                         ->expected(2);
  auto* opt_queries = query->add_option("--queries", queries_path, "file of x y query pairs");
  auto* opt_whole = query->add_flag("--whole", whole, "query the whole trajectory span");
  opt_window->excludes(opt_queries)->excludes(opt_whole);
  opt_queries->excludes(opt_whole);
  query->add_option("--format", format, "output format")
      ->check(CLI::IsMember({"json", "tsv"}));

  CLI::App* oracle = app.add_subcommand("oracle", "brute-force reference values for a window");
  oracle->add_option("--input", input, "trajectory CSV file")->required();
  oracle->add_option("--side", side, "square side length")->required()
      ->check(CLI::PositiveNumber);
  oracle->add_option("--window", window, "query window start and end")->required()->expected(2);
  oracle->add_option("--samples", samples, "start samples per edge")
      ->check(CLI::PositiveNumber);

  CLI::App* gen = app.add_subcommand("gen", "generate a synthetic trajectory");
  gen->add_option("--n", n, "number of vertices")->required()->check(CLI::PositiveNumber);
  gen->add_option("--seed", seed, "random seed")->required();
  gen->add_option("--out", out_path, "output CSV file")->required();
  gen->add_option("--box", gen_params.box_size, "walk bounding box size");
  gen->add_option("--dwell-fraction", gen_params.dwell_fraction, "probability of dwell segments")
      ->check(CLI::Range(0.0, 1.0));
  gen->add_option("--dwell-radius", gen_params.dwell_radius, "jitter radius while dwelling");

  CLI::App* bench = app.add_subcommand("bench", "build/query timing report");
  bench->add_option("--n", n, "number of vertices")->required()->check(CLI::PositiveNumber);
  bench->add_option("--queries", nqueries, "number of random query windows")->required()
      ->check(CLI::PositiveNumber);
  bench->add_option("--side", side, "square side length")->required()
      ->check(CLI::PositiveNumber);
  bench->add_option("--seed", seed, "random seed")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << '\n';
    return 1;
  }

  try {
    if (query->parsed()) {
      if (window.empty() && queries_path.empty() && !whole) {
        err << "one of --window, --queries or --whole is required\n";
        return 1;
      }
      return run_query(input, side, whole, window, queries_path, format, out);
    }
    if (oracle->parsed()) return run_oracle(input, side, window, samples, out);
    if (gen->parsed()) return run_gen(n, seed, out_path, gen_params);
    if (bench->parsed()) return run_bench(n, nqueries, side, seed, out);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
  return 1;
}

}  // namespace hotspot
