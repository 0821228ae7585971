#include "lsqt/pipeline.hpp"

#include <chrono>
#include <random>
#include <stdexcept>
#include <unordered_set>

namespace lsqt {

std::string_view to_string(TreeKind kind) {
  switch (kind) {
    case TreeKind::lst: return "lst";
    case TreeKind::bfs: return "bfs";
    case TreeKind::comb: return "comb";
  }
  return "lst";
}

TreeKind parse_tree_kind(std::string_view s) {
  if (s == "lst") return TreeKind::lst;
  if (s == "bfs") return TreeKind::bfs;
  if (s == "comb") return TreeKind::comb;
  throw std::invalid_argument("unknown tree kind: " + std::string(s));
}

SpanningTree build_tree(const Graph& g, const PipelineOptions& opts) {
  switch (opts.tree) {
    case TreeKind::lst: return build_lst(g, opts.seed);
    case TreeKind::bfs: return build_bfs_tree(g, 0);
    case TreeKind::comb: return build_comb_tree(g, opts.grid_rows, opts.grid_cols);
  }
  throw std::invalid_argument("unknown tree kind");
}

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

}  // namespace

PipelineResult run_pipeline(const Graph& g, const PipelineOptions& opts) {
  PipelineResult r;

  auto t0 = Clock::now();
  r.tree = std::make_unique<SpanningTree>(build_tree(g, opts));
  r.timings.lst_seconds = seconds_since(t0);

  auto t1 = Clock::now();
  RoutingTree rt = preprocess(*r.tree);
  r.segmentation = segment_all(rt);
  r.bundles = std::make_unique<BundleIndex>(build_bundles(r.segmentation, *r.tree));
  r.timings.bundle_seconds = seconds_since(t1);

  auto t2 = Clock::now();
  if (opts.run_layout) {
    r.layout = opts.layout == LayoutKind::force_directed ? layout_force(*r.tree, opts.force, opts.layout_seed.value_or(opts.seed))
                                                         : layout_radial(*r.tree, opts.radius_step);
  }
  r.timings.layout_seconds = seconds_since(t2);
  r.timings.total_seconds = r.timings.lst_seconds + r.timings.bundle_seconds + r.timings.layout_seconds;
  return r;
}

PipelineResult run_pipeline_timed(const Graph& g, const PipelineOptions& opts, int repeats) {
  if (repeats < 1) throw std::invalid_argument("repeats must be at least 1");
  run_pipeline(g, opts);  // warm-up, discarded
  TimingBreakdown sum;
  PipelineResult last;
  for (int i = 0; i < repeats; ++i) {
    last = run_pipeline(g, opts);
    sum.lst_seconds += last.timings.lst_seconds;
    sum.bundle_seconds += last.timings.bundle_seconds;
    sum.layout_seconds += last.timings.layout_seconds;
    sum.total_seconds += last.timings.total_seconds;
  }
  const double k = repeats;
  last.timings = {sum.lst_seconds / k, sum.bundle_seconds / k, sum.layout_seconds / k,
                  sum.total_seconds / k};
  return last;
}

Scene make_scene(const PipelineResult& r, const SceneMeta& meta) {
  return make_scene(*r.tree, r.segmentation, *r.bundles, r.layout, meta);
}

Graph random_connected_graph(std::size_t n, std::size_t m, std::uint64_t seed) {
  if (n == 0) throw std::invalid_argument("graph needs at least one vertex");
  const std::uint64_t max_edges = static_cast<std::uint64_t>(n) * (n - 1) / 2;
  if (m + 1 < n || m > max_edges) throw std::invalid_argument("edge count cannot give a connected simple graph");

  // A random recursive tree guarantees connectivity; the rest of the edges
  // are uniform over the unused pairs.
  std::mt19937_64 rng(seed);
  std::vector<VertexId> perm(n);
  for (VertexId i = 0; i < n; ++i) perm[i] = i;
  for (std::size_t i = n; i > 1; --i) std::swap(perm[i - 1], perm[rng() % i]);

  std::unordered_set<std::uint64_t> used;
  used.reserve(2 * m);
  std::vector<Edge> edges;
  edges.reserve(m);
  auto add = [&](VertexId a, VertexId b) {
    Edge e = Edge::canonical(a, b);
    if (used.insert(static_cast<std::uint64_t>(e.u) << 32 | e.v).second) edges.push_back(e);
  };
  for (std::size_t i = 1; i < n; ++i) add(perm[i], perm[rng() % i]);
  while (edges.size() < m) {
    auto a = static_cast<VertexId>(rng() % n);
    auto b = static_cast<VertexId>(rng() % n);
    if (a != b) add(a, b);
  }
  return Graph(n, edges);
}

Graph random_tree(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<VertexId> perm(n);
  for (VertexId i = 0; i < n; ++i) perm[i] = i;
  for (std::size_t i = n; i > 1; --i) std::swap(perm[i - 1], perm[rng() % i]);
  std::vector<Edge> edges;
  edges.reserve(n ? n - 1 : 0);
  for (std::size_t i = 1; i < n; ++i) edges.push_back(Edge::canonical(perm[i], perm[rng() % i]));
  return Graph(n, edges);
}

}  // namespace lsqt
