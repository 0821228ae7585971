#include "lsqt/graph.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

#include "lsqt/errors.hpp"

namespace lsqt {

Graph::Graph(std::size_t n, std::span<const Edge> edges, std::vector<std::string> labels)
    : n_(n), labels_(std::move(labels)) {
  edges_.reserve(edges.size());
  for (const Edge& e : edges) {
    if (e.u >= n || e.v >= n) throw std::invalid_argument("edge endpoint out of range");
    if (e.u == e.v) continue;
    edges_.push_back(Edge::canonical(e.u, e.v));
  }
  std::sort(edges_.begin(), edges_.end());
  edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());

  if (labels_.empty()) {
    labels_.reserve(n_);
    for (std::size_t v = 0; v < n_; ++v) labels_.push_back(std::to_string(v));
  } else if (labels_.size() != n_) {
    throw std::invalid_argument("label table size does not match vertex count");
  }

  offsets_.assign(n_ + 1, 0);
  for (const Edge& e : edges_) {
    ++offsets_[e.u + 1];
    ++offsets_[e.v + 1];
  }
  std::partial_sum(offsets_.begin(), offsets_.end(), offsets_.begin());
  adj_.resize(2 * edges_.size());
  adj_edge_.resize(2 * edges_.size());
  std::vector<std::size_t> fill(offsets_.begin(), offsets_.end() - 1);
  // Lower neighbors first, then higher ones. Edges are sorted, so each pass
  // appends in ascending neighbor order and every list ends up sorted.
  for (EdgeId id = 0; id < edges_.size(); ++id) {
    const Edge& e = edges_[id];
    adj_[fill[e.v]] = e.u;
    adj_edge_[fill[e.v]++] = id;
  }
  for (EdgeId id = 0; id < edges_.size(); ++id) {
    const Edge& e = edges_[id];
    adj_[fill[e.u]] = e.v;
    adj_edge_[fill[e.u]++] = id;
  }
}

std::optional<EdgeId> Graph::find_edge(VertexId a, VertexId b) const {
  if (a >= n_ || b >= n_) return std::nullopt;
  auto nb = neighbors(a);
  auto it = std::lower_bound(nb.begin(), nb.end(), b);
  if (it == nb.end() || *it != b) return std::nullopt;
  return incident_edges(a)[static_cast<std::size_t>(it - nb.begin())];
}

Graph parse_edge_list(std::istream& in, ParseStats* stats) {
  std::unordered_map<std::string, VertexId> ids;
  std::vector<std::string> labels;
  std::vector<Edge> raw;
  ParseStats local;

  auto intern = [&](const std::string& label) {
    auto [it, inserted] = ids.try_emplace(label, static_cast<VertexId>(labels.size()));
    if (inserted) labels.push_back(label);
    return it->second;
  };

  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream tokens(line);
    std::string a, b, extra;
    if (!(tokens >> a)) continue;
    if (!(tokens >> b)) throw ParseError("expected two vertex labels, found one", lineno);
    if (tokens >> extra) throw ParseError("expected two vertex labels, found more", lineno);
    ++local.lines_with_edges;
    VertexId u = intern(a);
    VertexId v = intern(b);
    if (u == v) {
      ++local.self_loops_dropped;
      continue;
    }
    raw.push_back(Edge::canonical(u, v));
  }

  const std::size_t n = labels.size();
  Graph g(n, raw, std::move(labels));
  if (g.num_edges() == 0) throw EmptyGraphError("edge list contains no edges");
  local.duplicates_collapsed = raw.size() - g.num_edges();
  if (stats) *stats = local;
  return g;
}

Graph parse_edge_list(std::string_view text, ParseStats* stats) {
  std::istringstream in{std::string(text)};
  return parse_edge_list(in, stats);
}

std::string to_edge_list(const Graph& g) {
  std::string out;
  auto line = [&](VertexId a, VertexId b) {
    out += g.labels()[a];
    out += ' ';
    out += g.labels()[b];
    out += '\n';
  };
  // The parser numbers labels by first appearance. Any vertex that the edge
  // order would introduce too early, or never, is pinned first with a
  // self-loop line, which the parser drops after registering the label.
  VertexId next = 0;
  auto pin_below = [&](VertexId x) {
    for (; next < x; ++next) line(next, next);
  };
  for (const Edge& e : g.edges()) {
    if (e.v >= next) {
      if (e.u >= next) {
        pin_below(e.u);
        if (e.v == e.u + 1) {
          next = e.v;  // this line introduces u then v in order
        } else {
          line(e.u, e.u);
          ++next;
        }
      }
      pin_below(e.v);
    }
    line(e.u, e.v);
    next = std::max<VertexId>(next, e.v + 1);
  }
  for (; next < g.num_vertices(); ++next) line(next, next);
  return out;
}

std::vector<std::uint32_t> component_ids(const Graph& g) {
  constexpr auto kUnset = static_cast<std::uint32_t>(-1);
  std::vector<std::uint32_t> comp(g.num_vertices(), kUnset);
  std::vector<VertexId> stack;
  std::uint32_t next = 0;
  for (VertexId s = 0; s < g.num_vertices(); ++s) {
    if (comp[s] != kUnset) continue;
    comp[s] = next;
    stack.push_back(s);
    while (!stack.empty()) {
      VertexId x = stack.back();
      stack.pop_back();
      for (VertexId y : g.neighbors(x)) {
        if (comp[y] == kUnset) {
          comp[y] = next;
          stack.push_back(y);
        }
      }
    }
    ++next;
  }
  return comp;
}

std::vector<std::vector<VertexId>> connected_components(const Graph& g) {
  auto comp = component_ids(g);
  std::uint32_t count = 0;
  for (auto c : comp) count = std::max(count, c + 1);
  std::vector<std::vector<VertexId>> out(count);
  for (VertexId v = 0; v < g.num_vertices(); ++v) out[comp[v]].push_back(v);
  return out;
}

Graph grid_graph(std::size_t rows, std::size_t cols) {
  if (rows == 0 || cols == 0) throw std::invalid_argument("grid dimensions must be positive");
  std::vector<Edge> edges;
  edges.reserve(rows * (cols - 1) + cols * (rows - 1));
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) {
      auto id = static_cast<VertexId>(r * cols + c);
      if (c + 1 < cols) edges.push_back({id, id + 1});
      if (r + 1 < rows) edges.push_back({id, static_cast<VertexId>(id + cols)});
    }
  }
  return Graph(rows * cols, edges);
}

}  // namespace lsqt
