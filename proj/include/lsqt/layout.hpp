#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "lsqt/parallel.hpp"
#include "lsqt/routing.hpp"
#include "lsqt/spanning_tree.hpp"

namespace lsqt {

struct Point {
  double x = 0.0;
  double y = 0.0;

  friend bool operator==(const Point&, const Point&) = default;
};

enum class LayoutKind { force_directed, radial_tree };

std::string_view to_string(LayoutKind kind);
/// Accepts "force"/"force_directed" and "radial"/"radial_tree".
LayoutKind parse_layout_kind(std::string_view s);

struct ForceParams {
  int iterations = 300;
  /// Spring rest length, canvas units.
  double ideal_length = 30.0;
  /// Above this many vertices repulsion uses a Barnes-Hut quadtree.
  std::size_t barnes_hut_threshold = 2000;
  double barnes_hut_theta = 0.8;
};

struct LayoutResult {
  std::vector<Point> positions;
  LayoutKind kind = LayoutKind::force_directed;
  std::uint64_t seed = 0;
  int iterations = 0;
  double ideal_length = 0.0;
  double radius_step = 0.0;
};

/// Fruchterman-Reingold simulation with tree edges as the only springs and
/// repulsion between all vertex pairs. Fixed iteration budget with linear
/// cooling. The result depends only on (tree, params, seed), never on the
/// worker count or `exec`.
LayoutResult layout_force(const SpanningTree& t, const ForceParams& params, std::uint64_t seed,
                          Execution exec = Execution::parallel);

/// Reingold-Tilford tidy layout of the rooted tree mapped to polar
/// coordinates: the tidy x coordinate becomes the angle, depth * r0 the
/// radius. Components of a forest are placed side by side along the x axis.
LayoutResult layout_radial(const SpanningTree& t, double r0);

/// Tidy (Reingold-Tilford) x coordinate per vertex with unit sibling
/// separation; each component's leftmost extent starts at 0.
std::vector<double> tidy_tree_x(const SpanningTree& t);

struct EdgeSpline {
  EdgeId edge;
  /// Positions of the routed vertex walk u, ..., lca, ..., v.
  std::vector<Point> control_points;
};

std::vector<EdgeSpline> splines(const Segmentation& seg, const LayoutResult& layout);

}  // namespace lsqt
