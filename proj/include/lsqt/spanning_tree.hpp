#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "lsqt/graph.hpp"
#include "lsqt/parallel.hpp"

namespace lsqt {

/// Exact non-negative fraction, always stored in lowest terms.
class Rational {
 public:
  Rational() = default;
  Rational(std::uint64_t num, std::uint64_t den);

  std::uint64_t num() const noexcept { return num_; }
  std::uint64_t den() const noexcept { return den_; }
  double value() const noexcept { return static_cast<double>(num_) / static_cast<double>(den_); }
  /// "a/b", or "a" when the denominator is 1.
  std::string str() const;

  friend bool operator==(const Rational&, const Rational&) = default;
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

 private:
  std::uint64_t num_ = 0;
  std::uint64_t den_ = 1;
};

/// Spanning tree (or forest, one tree per component) of a Graph, in rooted form.
///
/// Each component is rooted at its smallest vertex id. The tree keeps a
/// pointer to its graph; the graph must outlive it.
class SpanningTree {
 public:
  /// Validates that `tree_edges` forms a spanning forest of `g` (acyclic,
  /// one tree per connected component) and roots it. Throws
  /// std::invalid_argument otherwise.
  static SpanningTree from_edges(const Graph& g, std::vector<EdgeId> tree_edges);

  const Graph& graph() const noexcept { return *graph_; }

  /// Tree edge ids, ascending.
  const std::vector<EdgeId>& tree_edges() const noexcept { return tree_edges_; }
  bool is_tree_edge(EdgeId e) const { return in_tree_[e] != 0; }
  /// E \ E_T, ascending.
  std::vector<EdgeId> remainder_edges() const;
  std::size_t num_remainder_edges() const noexcept {
    return graph_->num_edges() - tree_edges_.size();
  }

  /// Root of the first component (the one holding vertex 0).
  VertexId root() const noexcept { return roots_.front(); }
  const std::vector<VertexId>& roots() const noexcept { return roots_; }

  VertexId parent(VertexId v) const { return parent_[v]; }
  std::uint32_t depth(VertexId v) const { return depth_[v]; }
  /// Tree edge joining v to its parent; kNoEdge for a root.
  EdgeId parent_edge(VertexId v) const { return parent_edge_[v]; }
  std::uint32_t component(VertexId v) const { return component_[v]; }

  std::span<const VertexId> parents() const noexcept { return parent_; }
  std::span<const std::uint32_t> depths() const noexcept { return depth_; }
  std::span<const EdgeId> parent_edges() const noexcept { return parent_edge_; }
  std::span<const std::uint32_t> components() const noexcept { return component_; }

  /// Children of v in ascending id order.
  std::span<const VertexId> children(VertexId v) const {
    return {child_.data() + child_offset_[v], child_.data() + child_offset_[v + 1]};
  }

 private:
  const Graph* graph_ = nullptr;
  std::vector<EdgeId> tree_edges_;
  std::vector<std::uint8_t> in_tree_;
  std::vector<VertexId> roots_;
  std::vector<VertexId> parent_;
  std::vector<std::uint32_t> depth_;
  std::vector<EdgeId> parent_edge_;
  std::vector<std::uint32_t> component_;
  std::vector<std::size_t> child_offset_;
  std::vector<VertexId> child_;
};

/// Low-stretch spanning tree by iterative cluster-and-contract coarsening
/// (ball-growing clusters, BFS tree per cluster, contraction to a multigraph).
/// Deterministic for a fixed (g, seed). Disconnected graphs yield a forest.
SpanningTree build_lst(const Graph& g, std::uint64_t seed);

/// BFS tree from `root`, neighbors visited in ascending id order. Components
/// not containing `root` are spanned by BFS from their smallest vertex.
SpanningTree build_bfs_tree(const Graph& g, VertexId root);

/// The comb tree of a rows x cols grid: the whole first column plus every
/// row. Throws std::invalid_argument if `g` is not grid_graph(rows, cols).
SpanningTree build_comb_tree(const Graph& g, std::size_t rows, std::size_t cols);

struct StretchReport {
  /// Tree-path length per edge, indexed by EdgeId.
  std::vector<std::uint32_t> per_edge;
  std::uint64_t total = 0;
  Rational average;
  std::uint32_t max = 0;
  std::size_t remainder_count = 0;
};

/// Stretch of every edge and the average over all m edges. Edge stretch is
/// computed within the edge's own component.
StretchReport stretch_report(const SpanningTree& t, Execution exec = Execution::parallel);

inline constexpr std::size_t kBruteForceEdgeLimit = 20;

/// Exhaustive search over all spanning trees for minimum average stretch.
/// Ties go to the lexicographically smallest edge list. Throws
/// SizeLimitError above kBruteForceEdgeLimit edges and std::invalid_argument
/// for a disconnected graph.
std::pair<SpanningTree, StretchReport> brute_force_best_tree(const Graph& g);

}  // namespace lsqt
