#include <random>

#include "doctest.h"
#include "lsqt/errors.hpp"
#include "lsqt/pipeline.hpp"
#include "lsqt/routing.hpp"
#include "lsqt/spanning_tree.hpp"
#include "oracles.hpp"

using namespace lsqt;

namespace {

std::vector<Edge> tree_edge_list(const SpanningTree& t) {
  std::vector<Edge> out;
  for (EdgeId id : t.tree_edges()) out.push_back(t.graph().edge(id));
  return out;
}

void check_tree_shape(const SpanningTree& t) {
  const Graph& g = t.graph();
  REQUIRE(oracle::is_spanning_forest(g, t.tree_edges()));
  std::size_t tree = 0, rem = 0;
  for (EdgeId id = 0; id < g.num_edges(); ++id) (t.is_tree_edge(id) ? tree : rem)++;
  CHECK(tree == t.tree_edges().size());
  CHECK(rem == t.num_remainder_edges());
  CHECK(t.remainder_edges().size() == rem);
  for (EdgeId id : t.remainder_edges()) CHECK_FALSE(t.is_tree_edge(id));
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    if (t.parent(v) == v) {
      CHECK(t.depth(v) == 0);
      CHECK(t.parent_edge(v) == kNoEdge);
    } else {
      CHECK(t.depth(v) == t.depth(t.parent(v)) + 1);
      CHECK(g.edge(t.parent_edge(v)) == Edge::canonical(v, t.parent(v)));
    }
  }
}

}  // namespace

TEST_CASE("rational") {
  Rational r(6, 4);
  CHECK(r.num() == 3);
  CHECK(r.den() == 2);
  CHECK(r.str() == "3/2");
  CHECK(Rational(8, 4).str() == "2");
  CHECK(Rational(4, 3) < Rational(3, 2));
  CHECK(Rational(2, 4) == Rational(1, 2));
  CHECK_THROWS_AS(Rational(1, 0), std::invalid_argument);
}

TEST_CASE("bfs tree examples") {
  Graph path = parse_edge_list("0 1\n1 2\n");
  auto t = build_bfs_tree(path, 0);
  CHECK(std::vector<VertexId>(t.parents().begin(), t.parents().end()) == std::vector<VertexId>{0, 0, 1});

  Graph c4 = parse_edge_list("0 1\n1 2\n2 3\n3 0\n");
  CHECK(tree_edge_list(build_bfs_tree(c4, 0)) == std::vector<Edge>{{0, 1}, {0, 3}, {1, 2}});

  Graph grid = grid_graph(8, 8);
  auto bfs = build_bfs_tree(grid, 0);
  auto depth = oracle::tree_bfs(oracle::tree_adjacency(bfs), 0);
  for (VertexId v = 0; v < 64; ++v) CHECK(depth[v] == static_cast<int>(v / 8 + v % 8));
  CHECK_THROWS_AS(build_bfs_tree(grid, 64), std::out_of_range);
}

TEST_CASE("comb tree examples") {
  Graph g2 = grid_graph(2, 2);
  CHECK(tree_edge_list(build_comb_tree(g2, 2, 2)) == std::vector<Edge>{{0, 1}, {0, 2}, {2, 3}});

  Graph g = grid_graph(8, 8);
  auto comb = build_comb_tree(g, 8, 8);
  CHECK(comb.tree_edges().size() == 63);
  CHECK(comb.num_remainder_edges() == 49);
  auto rep = stretch_report(comb);
  CHECK(rep.per_edge[*g.find_edge(7, 15)] == 15);
  CHECK(oracle::stretch_by_bfs(comb)[*g.find_edge(7, 15)] == 15);

  CHECK_THROWS_AS(build_comb_tree(g, 4, 16), std::invalid_argument);
  CHECK_THROWS_AS(build_comb_tree(parse_edge_list("0 1\n1 2\n0 2\n"), 1, 3), std::invalid_argument);
  CHECK(build_comb_tree(parse_edge_list("0 1\n"), 1, 2).tree_edges().size() == 1);
}

TEST_CASE("comb average on k x k grids is (k+1)/2") {
  // Frozen from an independent networkx computation.
  for (std::size_t k : {4, 8, 16, 32}) {
    Graph g = grid_graph(k, k);
    CHECK(stretch_report(build_comb_tree(g, k, k)).average == Rational(k + 1, 2));
  }
}

TEST_CASE("stretch examples") {
  Graph tree = parse_edge_list("0 1\n1 2\n1 3\n3 4\n");
  auto r = stretch_report(build_lst(tree, 1));
  CHECK(r.average == Rational(1, 1));
  CHECK(r.max == 1);
  CHECK(r.remainder_count == 0);

  Graph k3 = parse_edge_list("0 1\n1 2\n0 2\n");
  auto t3 = SpanningTree::from_edges(k3, {*k3.find_edge(0, 1), *k3.find_edge(1, 2)});
  auto r3 = stretch_report(t3);
  CHECK(r3.per_edge[*k3.find_edge(0, 2)] == 2);
  CHECK(r3.average == Rational(4, 3));
  CHECK(r3.total == 4);

  Graph c4 = parse_edge_list("0 1\n1 2\n2 3\n3 0\n");
  auto t4 = SpanningTree::from_edges(c4, {*c4.find_edge(0, 1), *c4.find_edge(1, 2), *c4.find_edge(2, 3)});
  auto r4 = stretch_report(t4);
  CHECK(r4.per_edge[*c4.find_edge(0, 3)] == 3);
  CHECK(r4.average == Rational(6, 4));
  CHECK(r4.max == 3);
}

TEST_CASE("from_edges rejects non-trees") {
  Graph k3 = parse_edge_list("0 1\n1 2\n0 2\n");
  CHECK_THROWS_AS(SpanningTree::from_edges(k3, {0, 1, 2}), std::invalid_argument);
  CHECK_THROWS_AS(SpanningTree::from_edges(k3, {0}), std::invalid_argument);
  CHECK_THROWS_AS(SpanningTree::from_edges(k3, {0, 7}), std::invalid_argument);
}

TEST_CASE("brute force examples") {
  Graph k3 = parse_edge_list("0 1\n1 2\n0 2\n");
  CHECK(brute_force_best_tree(k3).second.average == Rational(4, 3));
  Graph c4 = parse_edge_list("0 1\n1 2\n2 3\n3 0\n");
  CHECK(brute_force_best_tree(c4).second.average == Rational(3, 2));

  // Frozen from full enumeration with networkx: optimum 5/3, lexicographically
  // first optimal tree below.
  Graph g = grid_graph(3, 3);
  auto [best, rep] = brute_force_best_tree(g);
  CHECK(rep.average == Rational(5, 3));
  CHECK(tree_edge_list(best) ==
        std::vector<Edge>{{0, 1}, {1, 2}, {1, 4}, {3, 4}, {3, 6}, {4, 5}, {4, 7}, {5, 8}});
  CHECK(stretch_report(build_lst(g, 0)).average <= Rational(10, 3));

  CHECK_THROWS_AS(brute_force_best_tree(grid_graph(4, 4)), SizeLimitError);
  std::vector<Edge> split{{0, 1}, {2, 3}};
  CHECK_THROWS_AS(brute_force_best_tree(Graph(4, split)), std::invalid_argument);
}

TEST_CASE("lst examples") {
  Graph k3 = parse_edge_list("0 1\n1 2\n0 2\n");
  CHECK(build_lst(k3, 9).tree_edges().size() == 2);
  Graph tree = parse_edge_list("a b\nb c\nb d\nd e\ne f\n");
  CHECK(build_lst(tree, 3).num_remainder_edges() == 0);
  Graph g = grid_graph(8, 8);
  for (std::uint64_t seed : {0, 1, 2})
    CHECK(stretch_report(build_lst(g, seed)).average < stretch_report(build_comb_tree(g, 8, 8)).average);
}

TEST_CASE("every constructor yields a valid spanning forest") {
  std::mt19937_64 rng(11);
  std::vector<Graph> graphs{grid_graph(9, 7), grid_graph(1, 12), parse_edge_list("0 1\n")};
  for (int i = 0; i < 20; ++i) {
    std::size_t n = 5 + rng() % 60;
    graphs.push_back(oracle::small_connected(rng, n, n + rng() % (3 * n)));
  }
  graphs.push_back(random_connected_graph(500, 2500, 4));
  std::vector<Edge> forest{{0, 1}, {1, 2}, {0, 2}, {3, 4}, {5, 6}, {6, 7}, {5, 7}, {7, 8}};
  graphs.emplace_back(10, forest);

  for (const Graph& g : graphs) {
    CAPTURE(g.num_vertices());
    check_tree_shape(build_lst(g, 5));
    check_tree_shape(build_bfs_tree(g, 0));
  }
  check_tree_shape(build_comb_tree(graphs[0], 9, 7));
  CHECK(build_lst(graphs.back(), 5).roots() == std::vector<VertexId>{0, 3, 5, 9});
}

TEST_CASE("stretch agrees with BFS-in-tree oracle") {
  std::mt19937_64 rng(23);
  std::vector<Graph> graphs{grid_graph(20, 20), random_connected_graph(800, 4000, 2)};
  for (int i = 0; i < 8; ++i) graphs.push_back(oracle::small_connected(rng, 100, 300));
  for (const Graph& g : graphs) {
    auto t = build_lst(g, 17);
    auto rep = stretch_report(t);
    auto rt = preprocess(t);
    auto adj = oracle::tree_adjacency(t);
    std::uint64_t total = 0;
    for (auto s : rep.per_edge) total += s;
    CHECK(total == rep.total);
    CHECK(rep.average == Rational(total, g.num_edges()));
    for (int q = 0; q < 500; ++q) {
      EdgeId id = static_cast<EdgeId>(rng() % g.num_edges());
      const Edge& e = g.edge(id);
      VertexId l = rt.lca(e.u, e.v);
      auto via_lca = t.depth(e.u) + t.depth(e.v) - 2 * t.depth(l);
      auto via_bfs = oracle::tree_bfs(adj, e.u)[e.v];
      REQUIRE(rep.per_edge[id] == via_lca);
      REQUIRE(static_cast<int>(via_lca) == via_bfs);
      if (t.is_tree_edge(id)) REQUIRE(rep.per_edge[id] == 1);
    }
  }
}

TEST_CASE("stretch: serial and parallel agree") {
  Graph g = random_connected_graph(3000, 15000, 8);
  auto t = build_lst(g, 2);
  auto a = stretch_report(t, Execution::serial);
  auto b = stretch_report(t, Execution::parallel);
  CHECK(a.per_edge == b.per_edge);
  CHECK(a.average == b.average);
  CHECK(a.max == b.max);
}

TEST_CASE("build_lst is deterministic per seed") {
  Graph g = random_connected_graph(2000, 9000, 3);
  for (std::uint64_t seed : {0, 7, 12345}) {
    auto a = build_lst(g, seed);
    auto b = build_lst(g, seed);
    CHECK(a.tree_edges() == b.tree_edges());
    CHECK(std::vector<VertexId>(a.parents().begin(), a.parents().end()) ==
          std::vector<VertexId>(b.parents().begin(), b.parents().end()));
  }
}

TEST_CASE("grid: LST/comb ratio falls with k") {
  // build_lst is randomized, so the property is checked on its expected
  // stretch, estimated over a fixed block of seeds.
  constexpr int kSeeds = 32;
  double prev = 1.0;
  for (std::size_t k : {4, 8, 16, 32}) {
    Graph g = grid_graph(k, k);
    const double comb = stretch_report(build_comb_tree(g, k, k)).average.value();
    double mean = 0.0;
    for (int s = 0; s < kSeeds; ++s) mean += stretch_report(build_lst(g, s)).average.value();
    const double ratio = mean / kSeeds / comb;
    CAPTURE(k);
    CAPTURE(ratio);
    CHECK(ratio < prev);
    prev = ratio;
  }
}
