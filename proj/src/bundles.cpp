#include "lsqt/bundles.hpp"

#include <algorithm>
#include <stdexcept>

namespace lsqt {

BundleIndex build_bundles(const Segmentation& seg, const SpanningTree& t) {
  const Graph& g = t.graph();
  const std::size_t m = g.num_edges();
  BundleIndex idx;
  idx.tree_ = &t;

  idx.member_offsets_.assign(m + 1, 0);
  for (std::size_t i = 0; i < seg.size(); ++i)
    for (EdgeId te : seg.tree_edges(i)) ++idx.member_offsets_[te + 1];
  for (std::size_t e = 0; e < m; ++e) idx.member_offsets_[e + 1] += idx.member_offsets_[e];

  // Entries are in ascending edge order, so appending keeps members sorted.
  idx.members_.resize(idx.member_offsets_[m]);
  std::vector<std::size_t> fill(idx.member_offsets_.begin(), idx.member_offsets_.end() - 1);
  for (std::size_t i = 0; i < seg.size(); ++i)
    for (EdgeId te : seg.tree_edges(i)) idx.members_[fill[te]++] = seg.edge(i);

  idx.route_offsets_.assign(m + 1, 0);
  for (std::size_t i = 0; i < seg.size(); ++i) idx.route_offsets_[seg.edge(i) + 1] = seg.segment_count(i);
  for (std::size_t e = 0; e < m; ++e) idx.route_offsets_[e + 1] += idx.route_offsets_[e];
  idx.route_.resize(idx.route_offsets_[m]);
  for (std::size_t i = 0; i < seg.size(); ++i) {
    auto te = seg.tree_edges(i);
    std::copy(te.begin(), te.end(), idx.route_.begin() + static_cast<std::ptrdiff_t>(idx.route_offsets_[seg.edge(i)]));
  }

  for (EdgeId te : t.tree_edges())
    if (idx.member_count(te) >= 2) idx.bundles_.push_back(te);
  return idx;
}

std::uint64_t BundleIndex::structural_hash() const {
  std::uint64_t h = 14695981039346656037ull;
  auto mix = [&h](std::uint64_t x) {
    for (int i = 0; i < 8; ++i) {
      h ^= (x >> (8 * i)) & 0xff;
      h *= 1099511628211ull;
    }
  };
  for (auto x : member_offsets_) mix(x);
  for (auto x : members_) mix(x);
  for (auto x : route_offsets_) mix(x);
  for (auto x : route_) mix(x);
  return h;
}

std::vector<Edge> edges_of_bundle(const BundleIndex& idx, const Edge& t) {
  const Graph& g = idx.tree().graph();
  auto id = g.find_edge(t.u, t.v);
  if (!id || !idx.tree().is_tree_edge(*id)) throw std::invalid_argument("not a tree edge");
  std::vector<Edge> out;
  for (EdgeId e : idx.members(*id)) out.push_back(g.edge(e));
  return out;
}

std::vector<Edge> bundles_of_edge(const BundleIndex& idx, const Edge& e) {
  const Graph& g = idx.tree().graph();
  auto id = g.find_edge(e.u, e.v);
  if (!id || idx.tree().is_tree_edge(*id)) throw std::invalid_argument("not a remainder edge");
  std::vector<Edge> out;
  for (EdgeId te : idx.route(*id)) out.push_back(g.edge(te));
  return out;
}

BundleStats bundle_stats(const BundleIndex& idx) {
  BundleStats s;
  s.total_segments = idx.total_segments();
  std::size_t bundled = 0;
  for (EdgeId te : idx.tree().tree_edges()) {
    std::size_t k = idx.member_count(te);
    if (k == 0) continue;
    ++s.size_histogram[k];
    if (k >= 2) {
      ++s.bundle_count;
      bundled += k;
      s.max_bundle_size = std::max(s.max_bundle_size, k);
    }
  }
  if (s.total_segments > 0)
    s.bundled_segment_fraction = static_cast<double>(bundled) / static_cast<double>(s.total_segments);
  return s;
}

}  // namespace lsqt
