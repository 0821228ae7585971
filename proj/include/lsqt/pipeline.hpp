#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string_view>

#include "lsqt/bundles.hpp"
#include "lsqt/graph.hpp"
#include "lsqt/layout.hpp"
#include "lsqt/routing.hpp"
#include "lsqt/scene.hpp"
#include "lsqt/spanning_tree.hpp"

namespace lsqt {

enum class TreeKind { lst, bfs, comb };

std::string_view to_string(TreeKind kind);
TreeKind parse_tree_kind(std::string_view s);

struct PipelineOptions {
  TreeKind tree = TreeKind::lst;
  LayoutKind layout = LayoutKind::force_directed;
  std::uint64_t seed = 0;
  /// Seed for the force layout only; falls back to `seed`.
  std::optional<std::uint64_t> layout_seed;
  ForceParams force;
  double radius_step = 100.0;
  /// Grid shape, required only for TreeKind::comb.
  std::size_t grid_rows = 0;
  std::size_t grid_cols = 0;
  bool run_layout = true;
};

/// Output of one pipeline run. Held behind stable addresses because the
/// segmentation and bundle index refer back to the tree.
struct PipelineResult {
  std::unique_ptr<SpanningTree> tree;
  Segmentation segmentation;
  std::unique_ptr<BundleIndex> bundles;
  LayoutResult layout;
  TimingBreakdown timings;
};

SpanningTree build_tree(const Graph& g, const PipelineOptions& opts);

/// Tree, then routing + bundling, then layout; each phase timed with a
/// monotonic clock. `g` must outlive the result.
PipelineResult run_pipeline(const Graph& g, const PipelineOptions& opts);

/// One discarded warm-up run followed by `repeats` timed runs; returns the
/// last result with timings averaged over the timed runs.
PipelineResult run_pipeline_timed(const Graph& g, const PipelineOptions& opts, int repeats);

Scene make_scene(const PipelineResult& r, const SceneMeta& meta);

/// Random connected simple graph with n vertices and m edges: a random
/// recursive tree plus m - (n - 1) further edges drawn uniformly. Throws
/// std::invalid_argument if m < n - 1 or m exceeds n(n-1)/2.
Graph random_connected_graph(std::size_t n, std::size_t m, std::uint64_t seed);

/// Random recursive tree: vertices in shuffled order, each attached to a
/// uniformly chosen earlier one.
Graph random_tree(std::size_t n, std::uint64_t seed);

}  // namespace lsqt
