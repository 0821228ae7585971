#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lsqt/bundles.hpp"
#include "lsqt/graph.hpp"
#include "lsqt/layout.hpp"
#include "lsqt/routing.hpp"
#include "lsqt/spanning_tree.hpp"

namespace lsqt {

inline constexpr std::string_view kToolVersion = "lsqt 1.0.0";

struct TimingBreakdown {
  double lst_seconds = 0.0;
  double bundle_seconds = 0.0;
  double layout_seconds = 0.0;
  double total_seconds = 0.0;
};

/// Everything the viewer needs, in one self-contained record.
///
/// Remainder-indexed arrays (paths, lca) follow `remainder`; backbone-indexed
/// arrays (members, sizes) follow `backbone`. Bundle members are indexes
/// into `remainder`.
struct Scene {
  // graph
  std::size_t n = 0;
  std::vector<std::string> labels;
  std::vector<Edge> backbone;
  std::vector<Edge> remainder;
  // tree
  std::vector<VertexId> roots;
  std::vector<VertexId> parent;
  // segmentation
  std::vector<std::vector<VertexId>> paths;
  std::vector<VertexId> lca;
  // bundles
  std::vector<std::vector<std::uint32_t>> members;
  std::size_t bundle_count = 0;
  // layout
  LayoutKind layout_kind = LayoutKind::force_directed;
  std::uint64_t layout_seed = 0;
  int layout_iterations = 0;
  double ideal_length = 0.0;
  double radius_step = 0.0;
  std::vector<double> x;
  std::vector<double> y;
  // meta
  std::string dataset;
  std::string tree_kind;
  std::uint64_t seed = 0;
  std::string tool_version{kToolVersion};
  std::optional<TimingBreakdown> timings;

  friend bool operator==(const Scene&, const Scene&) = default;
};

struct SceneMeta {
  std::string dataset;
  std::string tree_kind;
  std::uint64_t seed = 0;
  std::optional<TimingBreakdown> timings;
};

/// Positions and timings are rounded to 6 significant digits so the
/// serialized form is stable under write -> read -> write.
Scene make_scene(const SpanningTree& t, const Segmentation& seg, const BundleIndex& idx,
                 const LayoutResult& layout, const SceneMeta& meta);

/// Canonical JSON text: sorted keys, compact, trailing newline.
std::string write_scene(const Scene& scene);

/// Throws ParseError for malformed JSON and ValidationError for a document
/// that does not have the scene shape. Does not run validate_scene().
Scene read_scene(std::string_view json_text);

/// Full internal-consistency check. Throws ValidationError on the first problem.
void validate_scene(const Scene& scene);

/// The graph described by a scene's graph block.
Graph graph_from_scene(const Scene& scene);

/// Reads only the `graph` block of a scene document.
Graph graph_from_scene_json(std::string_view json_text);

double round_significant(double value, int digits = 6);

}  // namespace lsqt
