#include <algorithm>
#include <chrono>
#include <numeric>
#include <random>

#include "doctest.h"
#include "lsqt/pipeline.hpp"
#include "lsqt/routing.hpp"
#include "oracles.hpp"

using namespace lsqt;

namespace {

SpanningTree tree_of(const Graph& g) { return build_bfs_tree(g, 0); }

void check_entry(const SpanningTree& t, const Segmentation& seg, std::size_t i) {
  const Edge& e = t.graph().edge(seg.edge(i));
  auto path = seg.path(i);
  auto segs = seg.segments(i);
  REQUIRE(!segs.empty());
  CHECK(segs.front().from == e.u);
  CHECK(segs.back().to == e.v);
  for (std::size_t j = 0; j + 1 < segs.size(); ++j) CHECK(segs[j].to == segs[j + 1].from);
  for (std::size_t j = 0; j < segs.size(); ++j) {
    CHECK(path[j] == segs[j].from);
    CHECK(t.is_tree_edge(segs[j].tree_edge));
    CHECK(t.graph().edge(segs[j].tree_edge) == Edge::canonical(segs[j].from, segs[j].to));
    CHECK(seg.tree_edges(i)[j] == segs[j].tree_edge);
  }
  VertexId l = seg.lca(i);
  CHECK(seg.segment_count(i) == t.depth(e.u) + t.depth(e.v) - 2 * t.depth(l));
  CHECK(path.size() == segs.size() + 1);
}

}  // namespace

TEST_CASE("preprocess examples") {
  Graph path = parse_edge_list("0 1\n1 2\n");
  auto t = tree_of(path);
  auto rt = preprocess(t);
  CHECK(rt.num_vertices() == 3);
  CHECK(t.depth(0) == 0);
  CHECK(t.depth(1) == 1);
  CHECK(t.depth(2) == 2);

  Graph star = parse_edge_list("0 1\n0 2\n0 3\n0 4\n");
  auto ts = tree_of(star);
  for (VertexId v = 1; v <= 4; ++v) CHECK(ts.depth(v) == 1);

  // 7-vertex tree with an uneven shape; depths against BFS from the root.
  Graph seven = parse_edge_list("0 1\n0 2\n1 3\n1 4\n4 5\n2 6\n");
  auto t7 = tree_of(seven);
  auto dist = oracle::tree_bfs(oracle::tree_adjacency(t7), t7.root());
  int sum = 0;
  for (VertexId v = 0; v < 7; ++v) {
    CHECK(static_cast<int>(t7.depth(v)) == dist[v]);
    sum += dist[v];
  }
  CHECK(sum == 11);
  CHECK(t7.depth(t7.root()) == 0);
}

TEST_CASE("lca examples and errors") {
  Graph g = random_tree(200, 3);
  auto t = tree_of(g);
  auto rt = preprocess(t);
  for (VertexId v = 0; v < 200; ++v) {
    CHECK(rt.lca(v, v) == v);
    CHECK(rt.lca(t.root(), v) == t.root());
    CHECK(rt.lca(v, t.root()) == t.root());
  }
  CHECK_THROWS_AS(rt.lca(0, 200), std::out_of_range);
  std::vector<Edge> two{{0, 1}, {2, 3}};
  Graph split(4, two);
  auto ts = tree_of(split);
  auto rs = preprocess(ts);
  CHECK_THROWS_AS(rs.lca(0, 3), std::invalid_argument);
  CHECK(rs.lca(2, 3) == 2);
}

TEST_CASE("lca matches ancestor-set oracle") {
  std::mt19937_64 rng(99);
  for (std::size_t n : {10, 100, 10000}) {
    for (std::uint64_t shape = 0; shape < 2; ++shape) {
      Graph g = random_tree(n, shape * 31 + n);
      // A BFS tree keeps the random tree's shape; a path-heavy tree makes
      // the climbs long and uneven.
      auto t = shape == 0 ? tree_of(g) : build_bfs_tree(g, static_cast<VertexId>(rng() % n));
      auto rt = preprocess(t);
      for (int q = 0; q < 10000; ++q) {
        auto u = static_cast<VertexId>(rng() % n), v = static_cast<VertexId>(rng() % n);
        REQUIRE(rt.lca(u, v) == oracle::lca_by_ancestor_set(t, u, v));
      }
    }
  }
}

TEST_CASE("lca scratch isolation") {
  Graph g = random_tree(3000, 5);
  auto t = tree_of(g);
  auto rt = preprocess(t);
  auto fresh = rt.clone();
  std::mt19937_64 rng(1);
  std::vector<std::pair<VertexId, VertexId>> qs;
  for (int i = 0; i < 2000; ++i)
    qs.emplace_back(static_cast<VertexId>(rng() % 3000), static_cast<VertexId>(rng() % 3000));
  std::vector<VertexId> first, again, shuffled(qs.size());
  for (auto [u, v] : qs) first.push_back(rt.lca(u, v));
  for (auto [u, v] : qs) again.push_back(rt.lca(u, v));
  CHECK(first == again);
  std::vector<std::size_t> order(qs.size());
  std::iota(order.begin(), order.end(), 0);
  std::shuffle(order.begin(), order.end(), rng);
  for (auto i : order) shuffled[i] = fresh.lca(qs[i].first, qs[i].second);
  CHECK(first == shuffled);
  // Repeated identical queries hit the same stamps.
  for (int i = 0; i < 5; ++i) CHECK(rt.lca(qs[0].first, qs[0].second) == first[0]);
}

TEST_CASE("segment examples") {
  Graph k3 = parse_edge_list("0 1\n1 2\n0 2\n");
  auto t3 = SpanningTree::from_edges(k3, {*k3.find_edge(0, 1), *k3.find_edge(1, 2)});
  auto rt3 = preprocess(t3);
  auto s3 = segment_edge(rt3, *k3.find_edge(0, 2));
  CHECK(s3.lca == 0);
  CHECK(s3.segments == std::vector<Segment>{{0, 1, *k3.find_edge(0, 1)}, {1, 2, *k3.find_edge(1, 2)}});
  CHECK_THROWS_AS(segment_edge(rt3, *k3.find_edge(0, 1)), std::invalid_argument);

  Graph c4 = parse_edge_list("0 1\n1 2\n2 3\n3 0\n");
  auto t4 = SpanningTree::from_edges(c4, {*c4.find_edge(0, 1), *c4.find_edge(1, 2), *c4.find_edge(2, 3)});
  auto rt4 = preprocess(t4);
  auto s4 = segment_edge(rt4, *c4.find_edge(0, 3));
  CHECK(s4.path == std::vector<VertexId>{0, 1, 2, 3});
  CHECK(s4.segments.size() == 3);

  Graph grid = grid_graph(8, 8);
  auto comb = build_comb_tree(grid, 8, 8);
  auto rtc = preprocess(comb);
  CHECK(segment_edge(rtc, *grid.find_edge(7, 15)).segments.size() == 15);
}

TEST_CASE("segment_all examples") {
  Graph tree = parse_edge_list("0 1\n1 2\n2 3\n");
  auto tt = tree_of(tree);
  auto rtt = preprocess(tt);
  CHECK(segment_all(rtt).empty());

  Graph k3 = parse_edge_list("0 1\n1 2\n0 2\n");
  auto t3 = tree_of(k3);
  auto rt3 = preprocess(t3);
  auto seg = segment_all(rt3);
  REQUIRE(seg.size() == 1);
  CHECK(seg.segment_count(0) == 2);
  CHECK(seg.find(*k3.find_edge(1, 2)) == std::optional<std::size_t>{0});
  CHECK_FALSE(seg.find(*k3.find_edge(0, 1)).has_value());

  Graph email = random_connected_graph(1133, 5451, 1);
  auto te = build_lst(email, 1);
  auto rte = preprocess(te);
  CHECK(segment_all(rte).size() == 4319);
}

TEST_CASE("segmentation invariants, serial == parallel") {
  std::vector<Graph> graphs{grid_graph(12, 12), random_connected_graph(2000, 10000, 6)};
  std::vector<Edge> forest{{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {5, 3}, {5, 6}};
  graphs.emplace_back(8, forest);
  for (const Graph& g : graphs) {
    auto t = build_lst(g, 4);
    auto rt = preprocess(t);
    auto serial = segment_all(rt, Execution::serial);
    auto par = segment_all(rt, Execution::parallel);
    CHECK(serial == par);
    CHECK(serial.edges() == t.remainder_edges());
    auto rep = stretch_report(t);
    std::size_t total = 0;
    for (std::size_t i = 0; i < serial.size(); ++i) {
      check_entry(t, serial, i);
      CHECK(serial.segment_count(i) == rep.per_edge[serial.edge(i)]);
      total += serial.segment_count(i);
      auto single = segment_edge(rt, serial.edge(i));
      CHECK(single.segments == serial.segments(i));
      CHECK(single.lca == serial.lca(i));
    }
    CHECK(total == serial.total_segments());
  }
}

TEST_CASE("segment_all time tracks total stretch") {
  // Same n and remainder count; the second tree has much larger stretch.
  // Per-segment cost should stay within 3x between the two.
  Graph g = grid_graph(60, 60);
  auto low = build_lst(g, 1);
  auto high = build_comb_tree(g, 60, 60);
  auto per_segment = [](const SpanningTree& t) {
    auto rt = preprocess(t);
    double best = 1e30;
    std::size_t segs = 0;
    for (int r = 0; r < 5; ++r) {
      auto start = std::chrono::steady_clock::now();
      auto seg = segment_all(rt, Execution::serial);
      best = std::min(best, std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count());
      segs = seg.total_segments();
    }
    return best / static_cast<double>(segs);
  };
  const double a = per_segment(low), b = per_segment(high);
  CAPTURE(a);
  CAPTURE(b);
  CHECK(std::max(a, b) / std::min(a, b) < 3.0);
}
