#pragma once

#include <compare>
#include <cstdint>
#include <istream>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace lsqt {

using VertexId = std::uint32_t;
using EdgeId = std::uint32_t;

inline constexpr EdgeId kNoEdge = static_cast<EdgeId>(-1);

/// Undirected edge in canonical form (u < v).
struct Edge {
  VertexId u = 0;
  VertexId v = 0;

  static Edge canonical(VertexId a, VertexId b) { return a < b ? Edge{a, b} : Edge{b, a}; }

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Counts observed while reading an edge list, before and after canonicalization.
struct ParseStats {
  std::size_t lines_with_edges = 0;
  std::size_t self_loops_dropped = 0;
  std::size_t duplicates_collapsed = 0;
};

/// Immutable simple undirected graph.
///
/// Edges are kept sorted lexicographically, so an EdgeId orders the same way
/// as the edge itself. Adjacency is stored CSR-style with neighbors ascending.
class Graph {
 public:
  Graph() = default;

  /// Builds from arbitrary endpoint pairs. Self-loops are dropped and
  /// duplicates collapsed. Every endpoint must be < n.
  Graph(std::size_t n, std::span<const Edge> edges, std::vector<std::string> labels = {});

  std::size_t num_vertices() const noexcept { return n_; }
  std::size_t num_edges() const noexcept { return edges_.size(); }

  const std::vector<Edge>& edges() const noexcept { return edges_; }
  const Edge& edge(EdgeId e) const { return edges_[e]; }

  std::span<const VertexId> neighbors(VertexId v) const {
    return {adj_.data() + offsets_[v], adj_.data() + offsets_[v + 1]};
  }
  /// Edge ids parallel to neighbors(v).
  std::span<const EdgeId> incident_edges(VertexId v) const {
    return {adj_edge_.data() + offsets_[v], adj_edge_.data() + offsets_[v + 1]};
  }
  std::size_t degree(VertexId v) const { return offsets_[v + 1] - offsets_[v]; }

  std::optional<EdgeId> find_edge(VertexId a, VertexId b) const;

  /// Display labels, one per vertex. Defaults to the decimal vertex id.
  const std::vector<std::string>& labels() const noexcept { return labels_; }

 private:
  std::size_t n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::size_t> offsets_{0};
  std::vector<VertexId> adj_;
  std::vector<EdgeId> adj_edge_;
  std::vector<std::string> labels_;
};

/// Whitespace-separated pairs of labels, one edge per line; `#` starts a comment.
/// Labels are mapped to dense ids in order of first appearance.
Graph parse_edge_list(std::istream& in, ParseStats* stats = nullptr);
Graph parse_edge_list(std::string_view text, ParseStats* stats = nullptr);

/// Inverse of parse_edge_list: one "label label" line per canonical edge,
/// plus self-loop lines where needed so that parsing the text back gives
/// every vertex its original id (isolated vertices included).
std::string to_edge_list(const Graph& g);

/// Maximal connected vertex sets, each sorted, ordered by smallest member.
std::vector<std::vector<VertexId>> connected_components(const Graph& g);

/// Per-vertex component index matching the order of connected_components().
std::vector<std::uint32_t> component_ids(const Graph& g);

/// rows x cols 4-neighbor grid, row-major ids.
Graph grid_graph(std::size_t rows, std::size_t cols);

}  // namespace lsqt
