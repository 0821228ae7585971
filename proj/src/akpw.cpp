// Low-stretch spanning tree by iterative coarsening.
//
// Each level partitions the current multigraph into low-diameter clusters by
// BFS ball growing, keeps a BFS tree of every cluster, then contracts each
// cluster to a single meta-vertex. Parallel edges survive contraction with
// multiplicity. The loop ends when no inter-cluster edges remain, i.e. one
// meta-vertex per connected component.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

#include "lsqt/spanning_tree.hpp"

namespace lsqt {
namespace {

constexpr auto kUnclustered = static_cast<std::uint32_t>(-1);

struct MetaEdge {
  std::uint32_t a;
  std::uint32_t b;
  EdgeId original;
};

/// Multigraph adjacency. Each list is sorted by (neighbor, original edge), so
/// the first entry for a neighbor carries the smallest underlying edge.
struct MetaAdjacency {
  std::vector<std::size_t> offsets;
  std::vector<std::uint32_t> neighbor;
  std::vector<EdgeId> original;

  MetaAdjacency(std::size_t n, const std::vector<MetaEdge>& edges) : offsets(n + 1, 0) {
    for (const auto& e : edges) {
      ++offsets[e.a + 1];
      ++offsets[e.b + 1];
    }
    for (std::size_t i = 0; i < n; ++i) offsets[i + 1] += offsets[i];
    std::vector<std::pair<std::uint32_t, EdgeId>> slots(2 * edges.size());
    std::vector<std::size_t> fill(offsets.begin(), offsets.end() - 1);
    for (const auto& e : edges) {
      slots[fill[e.a]++] = {e.b, e.original};
      slots[fill[e.b]++] = {e.a, e.original};
    }
    for (std::size_t v = 0; v < n; ++v)
      std::sort(slots.begin() + static_cast<std::ptrdiff_t>(offsets[v]),
                slots.begin() + static_cast<std::ptrdiff_t>(offsets[v + 1]));
    neighbor.resize(slots.size());
    original.resize(slots.size());
    for (std::size_t i = 0; i < slots.size(); ++i) std::tie(neighbor[i], original[i]) = slots[i];
  }
};

/// Ball radius cap: ceil(exp(sqrt(ln n * ln ln n))), at least 1.
std::uint32_t radius_cap(std::size_t n) {
  if (n < 3) return 1;
  double ln = std::log(static_cast<double>(n));
  double lnln = std::log(ln);
  if (lnln <= 0) return 1;
  return std::max<std::uint32_t>(1, static_cast<std::uint32_t>(std::ceil(std::exp(std::sqrt(ln * lnln)))));
}

/// Fisher-Yates over mt19937_64; spelled out so the permutation does not
/// depend on the standard library's shuffle.
std::vector<std::uint32_t> shuffled_order(std::size_t n, std::mt19937_64& rng) {
  std::vector<std::uint32_t> order(n);
  for (std::uint32_t i = 0; i < n; ++i) order[i] = i;
  for (std::size_t i = n; i > 1; --i) {
    auto j = static_cast<std::size_t>(rng() % i);
    std::swap(order[i - 1], order[j]);
  }
  return order;
}

}  // namespace

SpanningTree build_lst(const Graph& g, std::uint64_t seed) {
  const std::uint32_t rho = radius_cap(g.num_vertices());
  std::mt19937_64 rng(seed);

  std::vector<MetaEdge> edges;
  edges.reserve(g.num_edges());
  for (EdgeId id = 0; id < g.num_edges(); ++id) edges.push_back({g.edge(id).u, g.edge(id).v, id});

  std::vector<EdgeId> tree;
  tree.reserve(g.num_vertices());
  std::size_t level_n = g.num_vertices();

  std::vector<std::uint32_t> cluster;
  // absorbed[v] == c once v counts as inside cluster c's ball
  std::vector<std::uint32_t> absorbed;
  std::vector<std::uint32_t> frontier, next;

  while (!edges.empty()) {
    MetaAdjacency adj(level_n, edges);
    const double beta = 2.0 * std::log(static_cast<double>(std::max<std::size_t>(level_n, 2)));

    cluster.assign(level_n, kUnclustered);
    absorbed.assign(level_n, kUnclustered);
    std::uint32_t clusters = 0;

    for (std::uint32_t s : shuffled_order(level_n, rng)) {
      if (cluster[s] != kUnclustered) continue;
      const std::uint32_t c = clusters++;
      cluster[s] = c;
      absorbed[s] = c;

      std::uint64_t inside = 0;
      std::uint64_t cut = 0;
      for (auto i = adj.offsets[s]; i < adj.offsets[s + 1]; ++i)
        if (cluster[adj.neighbor[i]] == kUnclustered) ++cut;

      frontier.assign(1, s);
      std::uint32_t radius = 0;
      while (cut > 0 && radius < rho &&
             static_cast<double>(cut) * beta > static_cast<double>(inside + 1)) {
        next.clear();
        for (std::uint32_t x : frontier) {
          for (auto i = adj.offsets[x]; i < adj.offsets[x + 1]; ++i) {
            std::uint32_t y = adj.neighbor[i];
            if (cluster[y] != kUnclustered) continue;
            cluster[y] = c;
            tree.push_back(adj.original[i]);
            next.push_back(y);
          }
        }
        // Absorb the new layer one vertex at a time so an edge between two
        // new vertices moves from the cut to the inside exactly once.
        for (std::uint32_t y : next) {
          for (auto i = adj.offsets[y]; i < adj.offsets[y + 1]; ++i) {
            std::uint32_t z = adj.neighbor[i];
            if (absorbed[z] == c) {
              ++inside;
              --cut;
            } else if (cluster[z] == kUnclustered || cluster[z] == c) {
              ++cut;
            }
          }
          absorbed[y] = c;
        }
        frontier.swap(next);
        ++radius;
      }
    }

    std::vector<MetaEdge> contracted;
    contracted.reserve(edges.size());
    for (const auto& e : edges) {
      std::uint32_t ca = cluster[e.a], cb = cluster[e.b];
      if (ca != cb) contracted.push_back({ca, cb, e.original});
    }
    edges.swap(contracted);
    level_n = clusters;
  }

  return SpanningTree::from_edges(g, std::move(tree));
}

}  // namespace lsqt
