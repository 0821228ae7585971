#include <algorithm>

#include "lsqt/routing.hpp"
#include "lsqt/spanning_tree.hpp"

namespace lsqt {

StretchReport stretch_report(const SpanningTree& t, Execution exec) {
  const Graph& g = t.graph();
  const std::size_t m = g.num_edges();
  StretchReport rep;
  rep.per_edge.assign(m, 1);
  rep.remainder_count = t.num_remainder_edges();

  RoutingTree rt(t);
  auto stretch_of = [&t, &g](RoutingTree& router, EdgeId id) -> std::uint32_t {
    if (t.is_tree_edge(id)) return 1;
    const Edge& e = g.edge(id);
    VertexId l = router.lca(e.u, e.v);
    return t.depth(e.u) + t.depth(e.v) - 2 * t.depth(l);
  };

  std::uint64_t total = 0;
  std::uint32_t max = 0;
  if (exec == Execution::serial) {
    for (EdgeId id = 0; id < m; ++id) {
      rep.per_edge[id] = stretch_of(rt, id);
      total += rep.per_edge[id];
      max = std::max(max, rep.per_edge[id]);
    }
  } else {
    const auto count = static_cast<std::ptrdiff_t>(m);
#pragma omp parallel reduction(+ : total) reduction(max : max)
    {
      RoutingTree local = rt.clone();
#pragma omp for schedule(dynamic, 1024)
      for (std::ptrdiff_t i = 0; i < count; ++i) {
        auto id = static_cast<EdgeId>(i);
        rep.per_edge[id] = stretch_of(local, id);
        total += rep.per_edge[id];
        max = std::max(max, rep.per_edge[id]);
      }
    }
  }

  rep.total = total;
  rep.max = max;
  // An edgeless graph has nothing to stretch; report the neutral average 1.
  rep.average = m == 0 ? Rational(1, 1) : Rational(total, m);
  return rep;
}

}  // namespace lsqt
