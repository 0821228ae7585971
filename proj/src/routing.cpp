#include "lsqt/routing.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace lsqt {

RoutingTree::RoutingTree(const SpanningTree& t)
    : tree_(&t), mark_(t.graph().num_vertices(), 0) {}

std::uint32_t RoutingTree::next_epoch() {
  if (epoch_ == std::numeric_limits<std::uint32_t>::max()) {
    std::fill(mark_.begin(), mark_.end(), 0);
    epoch_ = 0;
  }
  return ++epoch_;
}

VertexId RoutingTree::lca(VertexId u, VertexId v) {
  const SpanningTree& t = *tree_;
  if (u >= mark_.size() || v >= mark_.size()) throw std::out_of_range("vertex out of range");
  if (t.component(u) != t.component(v))
    throw std::invalid_argument("lca query across components");

  const std::uint32_t stamp = next_epoch();
  mark_[u] = stamp;
  if (mark_[v] == stamp) return v;
  mark_[v] = stamp;

  VertexId a = u, b = v;
  while (true) {
    // A climber parked at its root stays put while the other keeps going.
    if (VertexId p = t.parent(a); p != a) {
      a = p;
      if (mark_[a] == stamp) return a;
      mark_[a] = stamp;
    }
    if (VertexId p = t.parent(b); p != b) {
      b = p;
      if (mark_[b] == stamp) return b;
      mark_[b] = stamp;
    }
  }
}

VertexId RoutingTree::path(VertexId u, VertexId v, std::vector<VertexId>& out) {
  const VertexId l = lca(u, v);
  for (VertexId x = u; x != l; x = tree_->parent(x)) out.push_back(x);
  out.push_back(l);
  const std::size_t mark = out.size();
  for (VertexId x = v; x != l; x = tree_->parent(x)) out.push_back(x);
  std::reverse(out.begin() + static_cast<std::ptrdiff_t>(mark), out.end());
  return l;
}

SegmentationEntry segment_edge(RoutingTree& rt, EdgeId e) {
  const SpanningTree& t = rt.tree();
  if (e >= t.graph().num_edges()) throw std::out_of_range("edge id out of range");
  if (t.is_tree_edge(e)) throw std::invalid_argument("tree edges are not segmented");
  const Edge& edge = t.graph().edge(e);

  SegmentationEntry entry{e, 0, {}, {}};
  entry.lca = rt.path(edge.u, edge.v, entry.path);
  entry.segments.reserve(entry.path.size() - 1);
  for (std::size_t i = 0; i + 1 < entry.path.size(); ++i) {
    VertexId a = entry.path[i], b = entry.path[i + 1];
    entry.segments.push_back({a, b, rt.edge_between(a, b)});
  }
  return entry;
}

std::vector<Segment> Segmentation::segments(std::size_t i) const {
  auto p = path(i);
  auto te = tree_edges(i);
  std::vector<Segment> out;
  out.reserve(te.size());
  for (std::size_t k = 0; k < te.size(); ++k) out.push_back({p[k], p[k + 1], te[k]});
  return out;
}

std::optional<std::size_t> Segmentation::find(EdgeId e) const {
  auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
  if (it == edges_.end() || *it != e) return std::nullopt;
  return static_cast<std::size_t>(it - edges_.begin());
}

namespace {

/// Writes the u..v walk of a remainder edge into preallocated slots.
void fill_path(const SpanningTree& t, VertexId u, VertexId v, VertexId l,
               VertexId* verts, EdgeId* segs) {
  std::size_t len = t.depth(u) + t.depth(v) - 2 * t.depth(l);
  std::size_t i = 0;
  for (VertexId x = u; x != l; x = t.parent(x), ++i) {
    verts[i] = x;
    segs[i] = t.parent_edge(x);
  }
  verts[i] = l;
  std::size_t j = len;
  for (VertexId x = v; x != l; x = t.parent(x), --j) {
    verts[j] = x;
    segs[j - 1] = t.parent_edge(x);
  }
}

}  // namespace

Segmentation segment_all(RoutingTree& rt, Execution exec) {
  const SpanningTree& t = rt.tree();
  const Graph& g = t.graph();
  Segmentation seg;
  seg.edges_ = t.remainder_edges();
  const std::size_t k = seg.edges_.size();
  seg.lca_.resize(k);
  seg.offsets_.assign(k + 1, 0);

  if (exec == Execution::serial) {
    std::vector<VertexId> walk;
    for (std::size_t i = 0; i < k; ++i) {
      const Edge& e = g.edge(seg.edges_[i]);
      walk.clear();
      seg.lca_[i] = rt.path(e.u, e.v, walk);
      for (std::size_t s = 0; s + 1 < walk.size(); ++s)
        seg.segment_edges_.push_back(rt.edge_between(walk[s], walk[s + 1]));
      seg.vertices_.insert(seg.vertices_.end(), walk.begin(), walk.end());
      seg.offsets_[i + 1] = seg.vertices_.size();
    }
    return seg;
  }

  const auto count = static_cast<std::ptrdiff_t>(k);
  // Pass 1: lca and path length per entry.
#pragma omp parallel
  {
    RoutingTree local = rt.clone();
#pragma omp for schedule(dynamic, 512)
    for (std::ptrdiff_t i = 0; i < count; ++i) {
      const Edge& e = g.edge(seg.edges_[i]);
      VertexId l = local.lca(e.u, e.v);
      seg.lca_[i] = l;
      seg.offsets_[i + 1] = t.depth(e.u) + t.depth(e.v) - 2 * t.depth(l) + 1;
    }
  }
  for (std::size_t i = 0; i < k; ++i) seg.offsets_[i + 1] += seg.offsets_[i];
  seg.vertices_.resize(seg.offsets_[k]);
  seg.segment_edges_.resize(seg.offsets_[k] - k);

  // Pass 2: walk each path into its slot.
#pragma omp parallel for schedule(dynamic, 512)
  for (std::ptrdiff_t i = 0; i < count; ++i) {
    const Edge& e = g.edge(seg.edges_[i]);
    auto off = seg.offsets_[i];
    fill_path(t, e.u, e.v, seg.lca_[i], seg.vertices_.data() + off,
              seg.segment_edges_.data() + off - static_cast<std::size_t>(i));
  }
  return seg;
}

}  // namespace lsqt
