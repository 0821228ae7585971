// lsqt: build, inspect and benchmark low-stretch quasi-tree scenes.
//
//   lsqt build --input graph.txt --layout force --seed 1 --tree lst --out scene.json
//   lsqt stats --input graph.txt [--tree comb --grid 8x8] [--json]
//   lsqt bench --sizes 1000,10000,100000 --seed 1
//   lsqt validate scene.json
//
// Exit codes: 0 ok, 1 other failure, 2 parse error, 3 validation error,
// 4 size-limit refusal.

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "lsqt/bundles.hpp"
#include "lsqt/errors.hpp"
#include "lsqt/graph.hpp"
#include "lsqt/parallel.hpp"
#include "lsqt/pipeline.hpp"
#include "lsqt/scene.hpp"

namespace {

using namespace lsqt;

enum ExitCode { kOk = 0, kFailure = 1, kParse = 2, kValidation = 3, kSizeLimit = 4 };

struct InputSpec {
  std::string path;
  std::string grid;  // "RxC"
  std::size_t rows = 0, cols = 0;
};

struct LoadedGraph {
  Graph graph;
  std::string name;
  std::optional<ParseStats> parse_stats;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::pair<std::size_t, std::size_t> parse_grid(const std::string& spec) {
  auto x = spec.find_first_of("xX");
  if (x == std::string::npos) throw std::invalid_argument("grid must look like RxC");
  std::size_t rows = std::stoul(spec.substr(0, x));
  std::size_t cols = std::stoul(spec.substr(x + 1));
  if (rows == 0 || cols == 0) throw std::invalid_argument("grid dimensions must be positive");
  return {rows, cols};
}

LoadedGraph load_input(InputSpec& in) {
  if (!in.grid.empty()) {
    auto [r, c] = parse_grid(in.grid);
    in.rows = r;
    in.cols = c;
    return {grid_graph(r, c), "grid-" + in.grid, std::nullopt};
  }
  if (in.path.empty()) throw std::invalid_argument("one of --input or --grid is required");
  std::string text = read_file(in.path);
  std::string name = std::filesystem::path(in.path).stem().string();
  auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') return {graph_from_scene_json(text), name, std::nullopt};
  ParseStats ps;
  Graph g = parse_edge_list(text, &ps);
  return {std::move(g), name, ps};
}

void add_input_options(CLI::App* cmd, InputSpec& in) {
  cmd->add_option("--input,-i", in.path, "Edge list (or scene JSON) to read");
  cmd->add_option("--grid", in.grid, "Use a generated RxC grid instead of a file");
  cmd->add_option("--rows", in.rows, "Grid rows of the input (for --tree comb)");
  cmd->add_option("--cols", in.cols, "Grid columns of the input (for --tree comb)");
}

std::string fmt_seconds(double s) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(4) << s;
  return os.str();
}

// ---------------------------------------------------------------- build

struct BuildArgs {
  InputSpec input;
  std::string layout = "force";
  std::string tree = "lst";
  std::uint64_t seed = 0;
  std::optional<std::uint64_t> layout_seed;
  std::string out;
  int repeats = 5;
  int iterations = 300;
  double radius_step = 100.0;
  bool timings_in_scene = false;
  std::string dataset;
};

int cmd_build(BuildArgs& a) {
  LoadedGraph in = load_input(a.input);
  PipelineOptions opts;
  opts.tree = parse_tree_kind(a.tree);
  opts.layout = parse_layout_kind(a.layout);
  opts.seed = a.seed;
  opts.layout_seed = a.layout_seed;
  opts.force.iterations = a.iterations;
  opts.radius_step = a.radius_step;
  opts.grid_rows = a.input.rows;
  opts.grid_cols = a.input.cols;

  PipelineResult r = run_pipeline_timed(in.graph, opts, a.repeats);
  SceneMeta meta{a.dataset.empty() ? in.name : a.dataset, std::string(to_string(opts.tree)), a.seed,
                 std::nullopt};
  if (a.timings_in_scene) meta.timings = r.timings;
  Scene scene = make_scene(r, meta);
  validate_scene(scene);
  std::string text = write_scene(scene);

  std::ostream* report = &std::cout;
  if (a.out == "-") {
    std::cout << text;
    report = &std::cerr;
  } else {
    std::ofstream out(a.out, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + a.out);
    out << text;
  }
  *report << "n=" << scene.n << " m=" << scene.backbone.size() + scene.remainder.size()
          << " backbone=" << scene.backbone.size() << " remainder=" << scene.remainder.size()
          << " bundles=" << scene.bundle_count << "\n"
          << "lst_seconds=" << fmt_seconds(r.timings.lst_seconds)
          << " bundle_seconds=" << fmt_seconds(r.timings.bundle_seconds)
          << " layout_seconds=" << fmt_seconds(r.timings.layout_seconds)
          << " total_seconds=" << fmt_seconds(r.timings.total_seconds) << " (mean of " << a.repeats
          << " runs, compute only)\n";
  return kOk;
}

// ---------------------------------------------------------------- stats

struct StatsArgs {
  InputSpec input;
  std::string tree = "lst";
  std::uint64_t seed = 0;
  bool json = false;
  bool optimal = false;
};

int cmd_stats(StatsArgs& a) {
  LoadedGraph in = load_input(a.input);
  const Graph& g = in.graph;
  PipelineOptions opts;
  opts.tree = parse_tree_kind(a.tree);
  opts.seed = a.seed;
  opts.grid_rows = a.input.rows;
  opts.grid_cols = a.input.cols;
  opts.run_layout = false;

  PipelineResult r = run_pipeline(g, opts);
  StretchReport sr = stretch_report(*r.tree);
  BundleStats bs = bundle_stats(*r.bundles);
  std::optional<StretchReport> best;
  if (a.optimal) best = brute_force_best_tree(g).second;

  nlohmann::json doc;
  doc["dataset"] = in.name;
  doc["tree"] = a.tree;
  doc["n"] = g.num_vertices();
  doc["m"] = g.num_edges();
  doc["components"] = r.tree->roots().size();
  doc["tree_edges"] = r.tree->tree_edges().size();
  doc["remainder_edges"] = sr.remainder_count;
  doc["stretch"] = {{"average", sr.average.str()},
                    {"average_value", sr.average.value()},
                    {"max", sr.max},
                    {"total", sr.total}};
  if (best) doc["optimal_average"] = {{"average", best->average.str()}, {"average_value", best->average.value()}};
  nlohmann::json hist = nlohmann::json::object();
  for (auto [size, count] : bs.size_histogram) hist[std::to_string(size)] = count;
  doc["bundles"] = {{"bundle_count", bs.bundle_count},
                    {"max_bundle_size", bs.max_bundle_size},
                    {"bundled_segment_fraction", bs.bundled_segment_fraction},
                    {"total_segments", bs.total_segments},
                    {"size_histogram", hist}};
  if (in.parse_stats) {
    doc["raw"] = {{"vertices", g.num_vertices()},
                  {"edge_lines", in.parse_stats->lines_with_edges},
                  {"self_loops_dropped", in.parse_stats->self_loops_dropped},
                  {"duplicates_collapsed", in.parse_stats->duplicates_collapsed}};
  }

  if (a.json) {
    std::cout << doc.dump(2) << "\n";
    return kOk;
  }
  std::cout << "dataset          " << in.name << "\n"
            << "tree             " << a.tree << "\n"
            << "n                " << g.num_vertices() << "\n"
            << "m                " << g.num_edges() << "\n";
  if (in.parse_stats)
    std::cout << "raw edge lines   " << in.parse_stats->lines_with_edges << " (self-loops dropped "
              << in.parse_stats->self_loops_dropped << ", duplicates collapsed "
              << in.parse_stats->duplicates_collapsed << ")\n";
  std::cout << "components       " << r.tree->roots().size() << "\n"
            << "remainder edges  " << sr.remainder_count << "\n"
            << "average stretch  " << sr.average.str() << " (" << std::setprecision(6) << sr.average.value()
            << ")\n"
            << "max stretch      " << sr.max << "\n";
  if (best)
    std::cout << "optimal average  " << best->average.str() << " (" << best->average.value() << ")\n";
  std::cout << "bundles          " << bs.bundle_count << "\n"
            << "max bundle size  " << bs.max_bundle_size << "\n"
            << "bundled fraction " << bs.bundled_segment_fraction << "\n"
            << "size histogram  ";
  for (auto [size, count] : bs.size_histogram) std::cout << " " << size << ":" << count;
  std::cout << "\n";
  return kOk;
}

// ---------------------------------------------------------------- bench

struct BenchArgs {
  std::vector<std::size_t> sizes{1000, 10000, 100000};
  std::uint64_t seed = 0;
  double density = 100736.0 / 7066.0;
  int repeats = 3;
  std::string kind = "er";
  std::string layout = "force";
  bool wiki_scale = false;
};

int cmd_bench(BenchArgs& a) {
  struct Row {
    std::size_t n, m;
    TimingBreakdown t;
  };
  std::vector<Row> rows;
  auto run = [&](std::size_t n, std::size_t m, const Graph& g) {
    PipelineOptions opts;
    opts.seed = a.seed;
    opts.layout = parse_layout_kind(a.layout);
    auto r = run_pipeline_timed(g, opts, a.repeats);
    rows.push_back({n, m, r.timings});
  };

  for (std::size_t m : a.sizes) {
    if (a.kind == "grid") {
      // Square-ish grid with roughly m edges: m ~ 2k^2.
      auto k = static_cast<std::size_t>(std::max(2.0, std::round(std::sqrt(m / 2.0))));
      Graph g = grid_graph(k, k);
      run(g.num_vertices(), g.num_edges(), g);
    } else {
      auto n = static_cast<std::size_t>(std::max(2.0, std::round(m / a.density)));
      Graph g = random_connected_graph(n, m, a.seed + m);
      run(n, m, g);
    }
  }
  if (a.wiki_scale) run(7066, 100736, random_connected_graph(7066, 100736, a.seed));

  std::cout << std::left << std::setw(10) << "n" << std::setw(10) << "m" << std::setw(12) << "lst_s"
            << std::setw(12) << "bundle_s" << std::setw(12) << "layout_s" << std::setw(12) << "total_s"
            << "\n";
  for (const Row& r : rows)
    std::cout << std::setw(10) << r.n << std::setw(10) << r.m << std::setw(12) << fmt_seconds(r.t.lst_seconds)
              << std::setw(12) << fmt_seconds(r.t.bundle_seconds) << std::setw(12)
              << fmt_seconds(r.t.layout_seconds) << std::setw(12) << fmt_seconds(r.t.total_seconds) << "\n";

  // Near-linearity of the tree + bundle phases: per doubling of m the time
  // should grow by less than 3x.
  for (std::size_t i = 1; i < a.sizes.size() && i < rows.size(); ++i) {
    const Row& lo = rows[i - 1];
    const Row& hi = rows[i];
    double t_lo = lo.t.lst_seconds + lo.t.bundle_seconds;
    double t_hi = hi.t.lst_seconds + hi.t.bundle_seconds;
    if (t_lo <= 0 || hi.m <= lo.m) continue;
    double per_doubling = std::pow(t_hi / t_lo, std::log(2.0) / std::log(double(hi.m) / double(lo.m)));
    std::cout << "scaling m " << lo.m << " -> " << hi.m << ": x" << std::setprecision(3) << t_hi / t_lo
              << " lst+bundle, x" << per_doubling << " per doubling "
              << (per_doubling < 3.0 ? "(near-linear)" : "(SUPERLINEAR)") << "\n";
  }
  return kOk;
}

// ---------------------------------------------------------------- validate

int cmd_validate(const std::string& path) {
  Scene s = read_scene(read_file(path));
  validate_scene(s);
  std::cout << "ok: n=" << s.n << " backbone=" << s.backbone.size() << " remainder=" << s.remainder.size()
            << " bundles=" << s.bundle_count << "\n";
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  lsqt::apply_thread_cap_from_env();
  CLI::App app{"Low-stretch quasi-tree bundling and layout"};
  app.require_subcommand(1);

  BuildArgs build;
  auto* b = app.add_subcommand("build", "Run the pipeline and write a scene file");
  add_input_options(b, build.input);
  b->add_option("--layout", build.layout, "force | radial")->check(CLI::IsMember({"force", "radial"}));
  b->add_option("--tree", build.tree, "lst | bfs | comb")->check(CLI::IsMember({"lst", "bfs", "comb"}));
  b->add_option("--seed", build.seed, "Random seed");
  b->add_option("--layout-seed", build.layout_seed, "Force layout seed (defaults to --seed)");
  b->add_option("--out,-o", build.out, "Scene output path ('-' for stdout)")->required();
  b->add_option("--repeats", build.repeats, "Timed runs to average (after one warm-up)")
      ->check(CLI::PositiveNumber);
  b->add_option("--iterations", build.iterations, "Force layout iterations")->check(CLI::PositiveNumber);
  b->add_option("--radius-step", build.radius_step, "Ring spacing of the radial layout");
  b->add_option("--dataset", build.dataset, "Dataset name recorded in the scene");
  b->add_flag("--timings-in-scene", build.timings_in_scene,
              "Embed timings in the scene (makes output run-dependent)");

  StatsArgs stats;
  auto* s = app.add_subcommand("stats", "Print stretch and bundle statistics");
  add_input_options(s, stats.input);
  s->add_option("--tree", stats.tree, "lst | bfs | comb")->check(CLI::IsMember({"lst", "bfs", "comb"}));
  s->add_option("--seed", stats.seed, "Random seed");
  s->add_flag("--json", stats.json, "Emit JSON");
  s->add_flag("--optimal", stats.optimal, "Also report the exhaustive-search optimum (small graphs only)");

  BenchArgs bench;
  auto* be = app.add_subcommand("bench", "Time the pipeline on generated graphs");
  be->add_option("--sizes", bench.sizes, "Edge counts to generate")->delimiter(',');
  be->add_option("--seed", bench.seed, "Random seed");
  be->add_option("--density", bench.density, "Edges per vertex for random graphs");
  be->add_option("--repeats", bench.repeats, "Timed runs per size")->check(CLI::PositiveNumber);
  be->add_option("--kind", bench.kind, "er | grid")->check(CLI::IsMember({"er", "grid"}));
  be->add_option("--layout", bench.layout, "force | radial")->check(CLI::IsMember({"force", "radial"}));
  be->add_flag("--wiki-scale", bench.wiki_scale, "Add a row with n=7066, m=100736");

  std::string scene_path;
  auto* v = app.add_subcommand("validate", "Check a scene file for internal consistency");
  v->add_option("scene", scene_path, "Scene JSON")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  try {
    if (*b) return cmd_build(build);
    if (*s) return cmd_stats(stats);
    if (*be) return cmd_bench(bench);
    if (*v) return cmd_validate(scene_path);
  } catch (const lsqt::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kParse;
  } catch (const lsqt::ValidationError& e) {
    std::cerr << "validation error: " << e.what() << "\n";
    return kValidation;
  } catch (const lsqt::SizeLimitError& e) {
    std::cerr << "size limit: " << e.what() << "\n";
    return kSizeLimit;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return kValidation;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFailure;
  }
  return kFailure;
}
