#include "lsqt/scene.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <map>
#include <set>

#include "json.hpp"
#include "lsqt/errors.hpp"
#include "union_find.hpp"

namespace lsqt {

using nlohmann::json;

double round_significant(double value, int digits) {
  if (!std::isfinite(value) || value == 0.0) return value;
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", digits, value);
  return std::strtod(buf, nullptr);
}

Scene make_scene(const SpanningTree& t, const Segmentation& seg, const BundleIndex& idx,
                 const LayoutResult& layout, const SceneMeta& meta) {
  const Graph& g = t.graph();
  Scene s;
  s.n = g.num_vertices();
  s.labels = g.labels();

  std::vector<std::uint32_t> remainder_index(g.num_edges(), 0);
  for (EdgeId id = 0; id < g.num_edges(); ++id) {
    if (t.is_tree_edge(id)) {
      s.backbone.push_back(g.edge(id));
    } else {
      remainder_index[id] = static_cast<std::uint32_t>(s.remainder.size());
      s.remainder.push_back(g.edge(id));
    }
  }

  s.roots = t.roots();
  s.parent.assign(t.parents().begin(), t.parents().end());

  s.paths.reserve(seg.size());
  s.lca.reserve(seg.size());
  for (std::size_t i = 0; i < seg.size(); ++i) {
    auto p = seg.path(i);
    s.paths.emplace_back(p.begin(), p.end());
    s.lca.push_back(seg.lca(i));
  }

  for (EdgeId te : t.tree_edges()) {
    std::vector<std::uint32_t> m;
    for (EdgeId e : idx.members(te)) m.push_back(remainder_index[e]);
    s.members.push_back(std::move(m));
  }
  s.bundle_count = idx.bundles().size();

  s.layout_kind = layout.kind;
  s.layout_seed = layout.seed;
  s.layout_iterations = layout.iterations;
  s.ideal_length = round_significant(layout.ideal_length);
  s.radius_step = round_significant(layout.radius_step);
  s.x.reserve(layout.positions.size());
  s.y.reserve(layout.positions.size());
  for (const Point& p : layout.positions) {
    s.x.push_back(round_significant(p.x));
    s.y.push_back(round_significant(p.y));
  }

  s.dataset = meta.dataset;
  s.tree_kind = meta.tree_kind;
  s.seed = meta.seed;
  if (meta.timings) {
    TimingBreakdown tb = *meta.timings;
    tb.lst_seconds = round_significant(tb.lst_seconds);
    tb.bundle_seconds = round_significant(tb.bundle_seconds);
    tb.layout_seconds = round_significant(tb.layout_seconds);
    tb.total_seconds = round_significant(tb.total_seconds);
    s.timings = tb;
  }
  return s;
}

namespace {

json edge_array(const std::vector<Edge>& edges) {
  json a = json::array();
  for (const Edge& e : edges) a.push_back({e.u, e.v});
  return a;
}

std::vector<Edge> read_edges(const json& a) {
  std::vector<Edge> out;
  out.reserve(a.size());
  for (const auto& pair : a) {
    if (!pair.is_array() || pair.size() != 2) throw ValidationError("edge entries must be [u, v] pairs");
    out.push_back({pair[0].get<VertexId>(), pair[1].get<VertexId>()});
  }
  return out;
}

}  // namespace

std::string write_scene(const Scene& s) {
  json doc;
  doc["graph"] = {{"n", s.n},
                  {"labels", s.labels},
                  {"backbone", edge_array(s.backbone)},
                  {"remainder", edge_array(s.remainder)}};
  doc["tree"] = {{"roots", s.roots}, {"parent", s.parent}};
  doc["segmentation"] = {{"paths", s.paths}, {"lca", s.lca}};

  std::vector<std::size_t> sizes;
  sizes.reserve(s.members.size());
  for (const auto& m : s.members) sizes.push_back(m.size());
  doc["bundles"] = {{"members", s.members}, {"sizes", sizes}, {"bundle_count", s.bundle_count}};

  doc["layout"] = {{"kind", std::string(to_string(s.layout_kind))},
                   {"seed", s.layout_seed},
                   {"iterations", s.layout_iterations},
                   {"ideal_length", s.ideal_length},
                   {"radius_step", s.radius_step},
                   {"x", s.x},
                   {"y", s.y}};

  json meta = {{"dataset", s.dataset},
               {"tree", s.tree_kind},
               {"seed", s.seed},
               {"tool_version", s.tool_version}};
  if (s.timings) {
    meta["timings"] = {{"lst_seconds", s.timings->lst_seconds},
                       {"bundle_seconds", s.timings->bundle_seconds},
                       {"layout_seconds", s.timings->layout_seconds},
                       {"total_seconds", s.timings->total_seconds}};
  }
  doc["meta"] = std::move(meta);
  return doc.dump() + "\n";
}

Scene read_scene(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("scene is not valid JSON: ") + e.what());
  }
  try {
    Scene s;
    const json& g = doc.at("graph");
    s.n = g.at("n").get<std::size_t>();
    s.labels = g.at("labels").get<std::vector<std::string>>();
    s.backbone = read_edges(g.at("backbone"));
    s.remainder = read_edges(g.at("remainder"));

    const json& t = doc.at("tree");
    s.roots = t.at("roots").get<std::vector<VertexId>>();
    s.parent = t.at("parent").get<std::vector<VertexId>>();

    const json& sg = doc.at("segmentation");
    s.paths = sg.at("paths").get<std::vector<std::vector<VertexId>>>();
    s.lca = sg.at("lca").get<std::vector<VertexId>>();

    const json& b = doc.at("bundles");
    s.members = b.at("members").get<std::vector<std::vector<std::uint32_t>>>();
    s.bundle_count = b.at("bundle_count").get<std::size_t>();
    auto sizes = b.at("sizes").get<std::vector<std::size_t>>();
    if (sizes.size() != s.members.size()) throw ValidationError("bundle sizes do not match members");
    for (std::size_t i = 0; i < sizes.size(); ++i)
      if (sizes[i] != s.members[i].size()) throw ValidationError("bundle size disagrees with member list");

    const json& l = doc.at("layout");
    try {
      s.layout_kind = parse_layout_kind(l.at("kind").get<std::string>());
    } catch (const std::invalid_argument& e) {
      throw ValidationError(e.what());
    }
    s.layout_seed = l.at("seed").get<std::uint64_t>();
    s.layout_iterations = l.at("iterations").get<int>();
    s.ideal_length = l.at("ideal_length").get<double>();
    s.radius_step = l.at("radius_step").get<double>();
    s.x = l.at("x").get<std::vector<double>>();
    s.y = l.at("y").get<std::vector<double>>();

    const json& m = doc.at("meta");
    s.dataset = m.at("dataset").get<std::string>();
    s.tree_kind = m.at("tree").get<std::string>();
    s.seed = m.at("seed").get<std::uint64_t>();
    s.tool_version = m.at("tool_version").get<std::string>();
    if (m.contains("timings")) {
      const json& tm = m["timings"];
      s.timings = TimingBreakdown{tm.at("lst_seconds").get<double>(), tm.at("bundle_seconds").get<double>(),
                                  tm.at("layout_seconds").get<double>(), tm.at("total_seconds").get<double>()};
    }
    return s;
  } catch (const json::exception& e) {
    throw ValidationError(std::string("malformed scene: ") + e.what());
  }
}

void validate_scene(const Scene& s) {
  auto fail = [](const std::string& what) { throw ValidationError(what); };
  const std::size_t n = s.n;
  if (s.labels.size() != n) fail("label count differs from n");

  std::set<Edge> all;
  for (const auto* list : {&s.backbone, &s.remainder}) {
    for (const Edge& e : *list) {
      if (e.u >= n || e.v >= n) fail("edge endpoint out of range");
      if (e.u >= e.v) fail("edge not in canonical u < v form");
      if (!all.insert(e).second) fail("edge listed twice");
    }
  }

  // Backbone must be a spanning forest of the whole edge set.
  detail::UnionFind backbone_uf(n), graph_uf(n);
  for (const Edge& e : s.backbone)
    if (!backbone_uf.unite(e.u, e.v)) fail("backbone contains a cycle");
  std::size_t comps = n;
  for (const Edge& e : all)
    if (graph_uf.unite(e.u, e.v)) --comps;
  if (s.backbone.size() != n - comps) fail("backbone does not span every component");

  // Parent array agrees with the backbone.
  if (s.parent.size() != n) fail("parent array length differs from n");
  std::set<Edge> backbone_set(s.backbone.begin(), s.backbone.end());
  std::size_t root_count = 0;
  for (VertexId v = 0; v < n; ++v) {
    VertexId p = s.parent[v];
    if (p >= n) fail("parent id out of range");
    if (p == v) {
      ++root_count;
      continue;
    }
    if (!backbone_set.count(Edge::canonical(v, p))) fail("parent link is not a backbone edge");
  }
  if (root_count != comps || s.roots.size() != comps) fail("root count differs from component count");
  for (VertexId r : s.roots)
    if (r >= n || s.parent[r] != r) fail("listed root is not a root");

  std::vector<std::uint32_t> depth(n, 0);
  {
    std::vector<std::vector<VertexId>> children(n);
    for (VertexId v = 0; v < n; ++v)
      if (s.parent[v] != v) children[s.parent[v]].push_back(v);
    std::vector<std::uint8_t> seen(n, 0);
    std::vector<VertexId> stack(s.roots.begin(), s.roots.end());
    std::size_t reached = 0;
    while (!stack.empty()) {
      VertexId x = stack.back();
      stack.pop_back();
      if (seen[x]) fail("parent pointers revisit a vertex");
      seen[x] = 1;
      ++reached;
      for (VertexId c : children[x]) {
        depth[c] = depth[x] + 1;
        stack.push_back(c);
      }
    }
    if (reached != n) fail("parent pointers contain a cycle");
  }

  // Each path climbs from u to its lca then descends to v.
  if (s.paths.size() != s.remainder.size() || s.lca.size() != s.remainder.size())
    fail("segmentation length differs from remainder edge count");
  std::map<Edge, std::size_t> backbone_pos;
  for (std::size_t i = 0; i < s.backbone.size(); ++i) backbone_pos[s.backbone[i]] = i;
  std::vector<std::vector<std::uint32_t>> recount(s.backbone.size());
  for (std::size_t i = 0; i < s.paths.size(); ++i) {
    const auto& p = s.paths[i];
    const Edge& e = s.remainder[i];
    if (p.size() < 3) fail("remainder path shorter than two segments");
    if (p.front() != e.u || p.back() != e.v) fail("path endpoints differ from its edge");
    for (VertexId v : p)
      if (v >= n) fail("path vertex out of range");
    VertexId l = s.lca[i];
    auto top = std::find(p.begin(), p.end(), l);
    if (top == p.end()) fail("lca not on its path");
    if (top != p.begin() && top + 1 != p.end() && *(top - 1) == *(top + 1))
      fail("path turns back on itself at its lca");
    for (auto it = p.begin(); it + 1 != p.end(); ++it) {
      bool upward = it < top;
      VertexId from = *it, to = *(it + 1);
      if (upward ? s.parent[from] != to || from == to : s.parent[to] != from || from == to)
        fail("path step is not a tree edge in the expected direction");
      recount[backbone_pos.at(Edge::canonical(from, to))].push_back(static_cast<std::uint32_t>(i));
    }
    if (depth[e.u] + depth[e.v] - 2 * depth[l] + 1 != p.size()) fail("path length disagrees with depths");
  }

  if (s.members != recount) fail("bundle members disagree with segmentation");
  std::size_t bundles = 0;
  for (const auto& m : s.members) bundles += m.size() >= 2;
  if (bundles != s.bundle_count) fail("bundle_count disagrees with member lists");

  if (s.x.size() != n || s.y.size() != n) fail("position arrays length differs from n");
  for (std::size_t v = 0; v < n; ++v)
    if (!std::isfinite(s.x[v]) || !std::isfinite(s.y[v])) fail("non-finite position");
}

Graph graph_from_scene(const Scene& s) {
  std::vector<Edge> edges(s.backbone);
  edges.insert(edges.end(), s.remainder.begin(), s.remainder.end());
  try {
    return Graph(s.n, edges, s.labels);
  } catch (const std::invalid_argument& e) {
    throw ValidationError(e.what());
  }
}

Graph graph_from_scene_json(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("scene is not valid JSON: ") + e.what());
  }
  try {
    const json& g = doc.at("graph");
    Scene s;
    s.n = g.at("n").get<std::size_t>();
    s.labels = g.at("labels").get<std::vector<std::string>>();
    s.backbone = read_edges(g.at("backbone"));
    s.remainder = read_edges(g.at("remainder"));
    Graph out = graph_from_scene(s);
    if (out.num_edges() == 0) throw EmptyGraphError("scene graph block has no edges");
    return out;
  } catch (const json::exception& e) {
    throw ValidationError(std::string("malformed graph block: ") + e.what());
  }
}

}  // namespace lsqt
