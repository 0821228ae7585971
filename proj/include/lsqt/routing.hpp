#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "lsqt/graph.hpp"
#include "lsqt/parallel.hpp"
#include "lsqt/spanning_tree.hpp"

namespace lsqt {

/// Query handle over a rooted spanning tree.
///
/// The tree arrays are shared and read-only; the marking scratch belongs to
/// this handle. Queries mutate the scratch, so they are non-const and a
/// handle must not be used from two threads at once. Copying is disabled:
/// call clone() to get an independent handle for another worker.
class RoutingTree {
 public:
  explicit RoutingTree(const SpanningTree& t);

  RoutingTree(const RoutingTree&) = delete;
  RoutingTree& operator=(const RoutingTree&) = delete;
  RoutingTree(RoutingTree&&) noexcept = default;
  RoutingTree& operator=(RoutingTree&&) noexcept = default;

  RoutingTree clone() const { return RoutingTree(*tree_); }

  const SpanningTree& tree() const noexcept { return *tree_; }
  std::size_t num_vertices() const noexcept { return mark_.size(); }

  /// Lowest common ancestor. Climbs one step at a time alternately from u
  /// and v, stamping each visited vertex; the first vertex found already
  /// stamped is the answer. Cost is proportional to the u-v path length.
  /// Throws std::invalid_argument if u and v lie in different components.
  VertexId lca(VertexId u, VertexId v);

  /// Tree path u, ..., lca, ..., v appended to `out`. Returns the lca.
  VertexId path(VertexId u, VertexId v, std::vector<VertexId>& out);

  /// Tree edge joining adjacent vertices a and b.
  EdgeId edge_between(VertexId a, VertexId b) const {
    return tree_->parent(a) == b ? tree_->parent_edge(a) : tree_->parent_edge(b);
  }

 private:
  std::uint32_t next_epoch();

  const SpanningTree* tree_;
  std::vector<std::uint32_t> mark_;
  std::uint32_t epoch_ = 0;
};

/// Roots-and-wraps step: O(n) scratch set-up over an already rooted tree.
inline RoutingTree preprocess(const SpanningTree& t) { return RoutingTree(t); }

/// One directed tree edge along a routed path.
struct Segment {
  VertexId from;
  VertexId to;
  EdgeId tree_edge;

  friend bool operator==(const Segment&, const Segment&) = default;
};

/// Routing of a single remainder edge (u, v): u climbs to the lca, then
/// descends to v.
struct SegmentationEntry {
  EdgeId edge;
  VertexId lca;
  std::vector<VertexId> path;
  std::vector<Segment> segments;
};

/// Throws std::invalid_argument if `e` is a tree edge.
SegmentationEntry segment_edge(RoutingTree& rt, EdgeId e);

/// Segment paths of every remainder edge, stored flat. Entries are ordered
/// by ascending remainder EdgeId.
class Segmentation {
 public:
  std::size_t size() const noexcept { return edges_.size(); }
  bool empty() const noexcept { return edges_.empty(); }

  EdgeId edge(std::size_t i) const { return edges_[i]; }
  const std::vector<EdgeId>& edges() const noexcept { return edges_; }
  VertexId lca(std::size_t i) const { return lca_[i]; }

  /// Vertex walk u, ..., v of entry i.
  std::span<const VertexId> path(std::size_t i) const {
    return {vertices_.data() + offsets_[i], vertices_.data() + offsets_[i + 1]};
  }
  /// Tree edge id of every segment of entry i, in path order.
  std::span<const EdgeId> tree_edges(std::size_t i) const {
    return {segment_edges_.data() + offsets_[i] - i, segment_edges_.data() + offsets_[i + 1] - i - 1};
  }
  std::size_t segment_count(std::size_t i) const { return offsets_[i + 1] - offsets_[i] - 1; }
  std::vector<Segment> segments(std::size_t i) const;

  std::size_t total_segments() const noexcept { return segment_edges_.size(); }

  /// Entry index of a remainder edge, if present.
  std::optional<std::size_t> find(EdgeId e) const;

  const std::vector<VertexId>& flat_vertices() const noexcept { return vertices_; }
  const std::vector<std::size_t>& flat_offsets() const noexcept { return offsets_; }

  friend bool operator==(const Segmentation&, const Segmentation&) = default;

 private:
  friend Segmentation segment_all(RoutingTree&, Execution);

  std::vector<EdgeId> edges_;
  std::vector<VertexId> lca_;
  std::vector<std::size_t> offsets_{0};
  std::vector<VertexId> vertices_;
  std::vector<EdgeId> segment_edges_;
};

/// Routes every remainder edge of the tree's graph. Total work is
/// proportional to the sum of remainder-edge stretches. The parallel path
/// gives each worker its own clone of `rt`.
Segmentation segment_all(RoutingTree& rt, Execution exec = Execution::parallel);

}  // namespace lsqt
