#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "lsqt/graph.hpp"
#include "lsqt/routing.hpp"
#include "lsqt/spanning_tree.hpp"

namespace lsqt {

/// Bundle membership keyed by tree edge.
///
/// Every segment of a routed remainder edge coincides with one tree edge; the
/// remainder edges passing through a tree edge are its members. A tree edge
/// with two or more members is a bundle. Built from topology alone and
/// immutable afterwards.
class BundleIndex {
 public:
  const SpanningTree& tree() const noexcept { return *tree_; }

  /// Remainder edges routed through `tree_edge`, ascending.
  std::span<const EdgeId> members(EdgeId tree_edge) const {
    return {members_.data() + member_offsets_[tree_edge],
            members_.data() + member_offsets_[tree_edge + 1]};
  }
  std::size_t member_count(EdgeId tree_edge) const {
    return member_offsets_[tree_edge + 1] - member_offsets_[tree_edge];
  }
  bool is_bundle(EdgeId tree_edge) const { return member_count(tree_edge) >= 2; }

  /// Tree edges traversed by a remainder edge, in path order. Empty for tree edges.
  std::span<const EdgeId> route(EdgeId remainder_edge) const {
    return {route_.data() + route_offsets_[remainder_edge],
            route_.data() + route_offsets_[remainder_edge + 1]};
  }

  /// Tree edges that form bundles, ascending.
  const std::vector<EdgeId>& bundles() const noexcept { return bundles_; }
  std::size_t total_segments() const noexcept { return route_.size(); }

  /// FNV-1a over both directions of the index. Equal indexes hash equal.
  std::uint64_t structural_hash() const;

  friend bool operator==(const BundleIndex& a, const BundleIndex& b) {
    return a.member_offsets_ == b.member_offsets_ && a.members_ == b.members_ &&
           a.route_offsets_ == b.route_offsets_ && a.route_ == b.route_;
  }

 private:
  friend BundleIndex build_bundles(const Segmentation&, const SpanningTree&);

  const SpanningTree* tree_ = nullptr;
  std::vector<std::size_t> member_offsets_;
  std::vector<EdgeId> members_;
  std::vector<std::size_t> route_offsets_;
  std::vector<EdgeId> route_;
  std::vector<EdgeId> bundles_;
};

BundleIndex build_bundles(const Segmentation& seg, const SpanningTree& t);

/// Member remainder edges of tree edge `t`, ascending. Throws
/// std::invalid_argument if `t` is not a tree edge.
std::vector<Edge> edges_of_bundle(const BundleIndex& idx, const Edge& t);

/// Tree edges along remainder edge `e`'s route, path order. Throws
/// std::invalid_argument if `e` is not a remainder edge.
std::vector<Edge> bundles_of_edge(const BundleIndex& idx, const Edge& e);

struct BundleStats {
  std::size_t bundle_count = 0;
  std::size_t max_bundle_size = 0;
  /// member count -> number of tree edges with that many members (>= 1)
  std::map<std::size_t, std::size_t> size_histogram;
  /// share of all segments that sit in a bundle
  double bundled_segment_fraction = 0.0;
  std::size_t total_segments = 0;
};

BundleStats bundle_stats(const BundleIndex& idx);

}  // namespace lsqt
