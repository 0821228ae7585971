#include "lsqt/spanning_tree.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <stdexcept>

#include "lsqt/errors.hpp"
#include "union_find.hpp"

namespace lsqt {

Rational::Rational(std::uint64_t num, std::uint64_t den) : num_(num), den_(den) {
  if (den == 0) throw std::invalid_argument("zero denominator");
  auto g = std::gcd(num_, den_);
  num_ /= g;
  den_ /= g;
}

std::string Rational::str() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

__extension__ typedef unsigned __int128 Wide;

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  auto lhs = static_cast<Wide>(a.num_) * b.den_;
  auto rhs = static_cast<Wide>(b.num_) * a.den_;
  return lhs <=> rhs;
}

SpanningTree SpanningTree::from_edges(const Graph& g, std::vector<EdgeId> tree_edges) {
  const std::size_t n = g.num_vertices();
  std::sort(tree_edges.begin(), tree_edges.end());
  tree_edges.erase(std::unique(tree_edges.begin(), tree_edges.end()), tree_edges.end());

  detail::UnionFind uf(n);
  for (EdgeId id : tree_edges) {
    if (id >= g.num_edges()) throw std::invalid_argument("tree edge id out of range");
    const Edge& e = g.edge(id);
    if (!uf.unite(e.u, e.v)) throw std::invalid_argument("tree edges contain a cycle");
  }
  const std::size_t components = connected_components(g).size();
  if (tree_edges.size() != n - components)
    throw std::invalid_argument("tree edges do not span every component");

  SpanningTree t;
  t.graph_ = &g;
  t.in_tree_.assign(g.num_edges(), 0);
  for (EdgeId id : tree_edges) t.in_tree_[id] = 1;
  t.tree_edges_ = std::move(tree_edges);

  constexpr auto kUnset = static_cast<std::uint32_t>(-1);
  t.parent_.assign(n, 0);
  t.depth_.assign(n, 0);
  t.parent_edge_.assign(n, kNoEdge);
  t.component_.assign(n, kUnset);

  std::vector<VertexId> queue;
  queue.reserve(n);
  for (VertexId s = 0; s < n; ++s) {
    if (t.component_[s] != kUnset) continue;
    auto comp = static_cast<std::uint32_t>(t.roots_.size());
    t.roots_.push_back(s);
    t.parent_[s] = s;
    t.component_[s] = comp;
    queue.clear();
    queue.push_back(s);
    for (std::size_t head = 0; head < queue.size(); ++head) {
      VertexId x = queue[head];
      auto nb = g.neighbors(x);
      auto ids = g.incident_edges(x);
      for (std::size_t i = 0; i < nb.size(); ++i) {
        VertexId y = nb[i];
        if (!t.in_tree_[ids[i]] || t.component_[y] != kUnset) continue;
        t.component_[y] = comp;
        t.parent_[y] = x;
        t.depth_[y] = t.depth_[x] + 1;
        t.parent_edge_[y] = ids[i];
        queue.push_back(y);
      }
    }
  }
  if (t.roots_.empty()) t.roots_.push_back(0);

  t.child_offset_.assign(n + 1, 0);
  for (VertexId v = 0; v < n; ++v)
    if (t.parent_[v] != v) ++t.child_offset_[t.parent_[v] + 1];
  std::partial_sum(t.child_offset_.begin(), t.child_offset_.end(), t.child_offset_.begin());
  t.child_.resize(n - t.roots_.size());
  std::vector<std::size_t> fill(t.child_offset_.begin(), t.child_offset_.end() - 1);
  for (VertexId v = 0; v < n; ++v)
    if (t.parent_[v] != v) t.child_[fill[t.parent_[v]]++] = v;
  return t;
}

std::vector<EdgeId> SpanningTree::remainder_edges() const {
  std::vector<EdgeId> out;
  out.reserve(num_remainder_edges());
  for (EdgeId id = 0; id < in_tree_.size(); ++id)
    if (!in_tree_[id]) out.push_back(id);
  return out;
}

SpanningTree build_bfs_tree(const Graph& g, VertexId root) {
  const std::size_t n = g.num_vertices();
  if (root >= n) throw std::out_of_range("BFS root out of range");
  std::vector<std::uint8_t> seen(n, 0);
  std::vector<EdgeId> tree;
  tree.reserve(n);
  std::vector<VertexId> queue;
  queue.reserve(n);

  auto bfs = [&](VertexId s) {
    seen[s] = 1;
    queue.clear();
    queue.push_back(s);
    for (std::size_t head = 0; head < queue.size(); ++head) {
      VertexId x = queue[head];
      auto nb = g.neighbors(x);
      auto ids = g.incident_edges(x);
      for (std::size_t i = 0; i < nb.size(); ++i) {
        if (seen[nb[i]]) continue;
        seen[nb[i]] = 1;
        tree.push_back(ids[i]);
        queue.push_back(nb[i]);
      }
    }
  };
  bfs(root);
  for (VertexId s = 0; s < n; ++s)
    if (!seen[s]) bfs(s);
  return SpanningTree::from_edges(g, std::move(tree));
}

SpanningTree build_comb_tree(const Graph& g, std::size_t rows, std::size_t cols) {
  if (rows == 0 || cols == 0 || g.num_vertices() != rows * cols ||
      g.edges() != grid_graph(rows, cols).edges())
    throw std::invalid_argument("graph is not a " + std::to_string(rows) + "x" +
                                std::to_string(cols) + " grid");
  std::vector<EdgeId> tree;
  tree.reserve(rows * cols - 1);
  auto id = [cols](std::size_t r, std::size_t c) { return static_cast<VertexId>(r * cols + c); };
  for (std::size_t r = 0; r < rows; ++r) {
    if (r + 1 < rows) tree.push_back(*g.find_edge(id(r, 0), id(r + 1, 0)));
    for (std::size_t c = 0; c + 1 < cols; ++c) tree.push_back(*g.find_edge(id(r, c), id(r, c + 1)));
  }
  return SpanningTree::from_edges(g, std::move(tree));
}

std::pair<SpanningTree, StretchReport> brute_force_best_tree(const Graph& g) {
  const std::size_t n = g.num_vertices();
  const std::size_t m = g.num_edges();
  if (m > kBruteForceEdgeLimit)
    throw SizeLimitError("exhaustive tree search is limited to " +
                         std::to_string(kBruteForceEdgeLimit) + " edges, graph has " +
                         std::to_string(m));
  if (n == 0 || connected_components(g).size() != 1)
    throw std::invalid_argument("exhaustive tree search requires a connected graph");

  const std::size_t k = n - 1;
  std::optional<std::pair<SpanningTree, StretchReport>> best;

  // Index combinations in lexicographic order; with edges sorted this is
  // also lexicographic order of the edge lists, so the first strict
  // improvement wins ties.
  std::vector<EdgeId> pick(k);
  std::iota(pick.begin(), pick.end(), EdgeId{0});
  while (true) {
    detail::UnionFind uf(n);
    bool acyclic = true;
    for (EdgeId id : pick) {
      if (!uf.unite(g.edge(id).u, g.edge(id).v)) {
        acyclic = false;
        break;
      }
    }
    if (acyclic) {
      auto t = SpanningTree::from_edges(g, pick);
      auto rep = stretch_report(t, Execution::serial);
      if (!best || rep.average < best->second.average) best.emplace(std::move(t), std::move(rep));
    }

    std::size_t i = k;
    while (i > 0 && pick[i - 1] == m - k + (i - 1)) --i;
    if (i == 0) break;
    ++pick[i - 1];
    for (std::size_t j = i; j < k; ++j) pick[j] = pick[j - 1] + 1;
  }
  return std::move(*best);
}

}  // namespace lsqt
