#include <algorithm>
#include <array>
#include <cmath>
#include <memory>
#include <random>
#include <stdexcept>

#include "lsqt/layout.hpp"

namespace lsqt {

std::string_view to_string(LayoutKind kind) {
  return kind == LayoutKind::force_directed ? "force_directed" : "radial_tree";
}

LayoutKind parse_layout_kind(std::string_view s) {
  if (s == "force" || s == "force_directed") return LayoutKind::force_directed;
  if (s == "radial" || s == "radial_tree") return LayoutKind::radial_tree;
  throw std::invalid_argument("unknown layout kind: " + std::string(s));
}

namespace {

double unit_uniform(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

/// Repulsion k^2/d pushing `p` away from a mass at `q` of weight `w`.
inline void add_repulsion(Point p, Point q, double w, double k2, std::size_t salt, Point& disp) {
  double dx = p.x - q.x, dy = p.y - q.y;
  double d2 = dx * dx + dy * dy;
  if (d2 < 1e-18) {
    // Coincident points: nudge in a direction fixed by the pair.
    double a = static_cast<double>(salt % 360) * (3.14159265358979323846 / 180.0);
    dx = 1e-3 * std::cos(a);
    dy = 1e-3 * std::sin(a);
    d2 = 1e-6;
  }
  double f = w * k2 / d2;  // (k^2 / d) along the unit vector dx/d
  disp.x += dx * f;
  disp.y += dy * f;
}

/// Point-region quadtree holding centre of mass per cell. Nodes are flat;
/// each covers a contiguous range of a permuted index array.
class QuadTree {
 public:
  explicit QuadTree(const std::vector<Point>& pts) : pts_(pts), order_(pts.size()) {
    for (std::uint32_t i = 0; i < order_.size(); ++i) order_[i] = i;
    double minx = pts[0].x, maxx = pts[0].x, miny = pts[0].y, maxy = pts[0].y;
    for (const auto& p : pts) {
      minx = std::min(minx, p.x);
      maxx = std::max(maxx, p.x);
      miny = std::min(miny, p.y);
      maxy = std::max(maxy, p.y);
    }
    double half = std::max({maxx - minx, maxy - miny, 1e-6}) * 0.5 + 1e-9;
    nodes_.reserve(pts.size());
    build(0, static_cast<std::uint32_t>(pts.size()), {(minx + maxx) * 0.5, (miny + maxy) * 0.5}, half, 0);
  }

  void accumulate(std::uint32_t self, double theta2, double k2, Point& disp) const {
    const Point p = pts_[self];
    // Depth is capped at kMaxDepth, so at most 3 * kMaxDepth + 1 pending cells.
    std::array<std::uint32_t, 3 * kMaxDepth + 4> stack;
    std::size_t top = 0;
    stack[top++] = 0;
    while (top > 0) {
      const Node& nd = nodes_[stack[--top]];
      if (nd.leaf) {
        for (std::uint32_t i = nd.begin; i < nd.end; ++i) {
          std::uint32_t j = order_[i];
          if (j != self) add_repulsion(p, pts_[j], 1.0, k2, self * 31u + j, disp);
        }
        continue;
      }
      double dx = p.x - nd.com.x, dy = p.y - nd.com.y;
      if (nd.width * nd.width < theta2 * (dx * dx + dy * dy)) {
        add_repulsion(p, nd.com, static_cast<double>(nd.end - nd.begin), k2, self, disp);
        continue;
      }
      for (int c = 3; c >= 0; --c)
        if (nd.child[c] != kNone) stack[top++] = nd.child[c];
    }
  }

 private:
  static constexpr std::uint32_t kNone = static_cast<std::uint32_t>(-1);
  static constexpr std::uint32_t kLeafCapacity = 4;
  static constexpr int kMaxDepth = 40;

  struct Node {
    Point com;
    double width = 0;
    std::uint32_t begin = 0, end = 0;
    std::array<std::uint32_t, 4> child{kNone, kNone, kNone, kNone};
    bool leaf = true;
  };

  std::uint32_t build(std::uint32_t begin, std::uint32_t end, Point center, double half, int depth) {
    auto id = static_cast<std::uint32_t>(nodes_.size());
    nodes_.emplace_back();
    nodes_[id].begin = begin;
    nodes_[id].end = end;
    nodes_[id].width = 2 * half;

    if (end - begin <= kLeafCapacity || depth >= kMaxDepth) {
      double sx = 0, sy = 0;
      for (std::uint32_t i = begin; i < end; ++i) {
        sx += pts_[order_[i]].x;
        sy += pts_[order_[i]].y;
      }
      nodes_[id].com = {sx / (end - begin), sy / (end - begin)};
      return id;
    }

    auto first = order_.begin() + begin, last = order_.begin() + end;
    auto lower = [&](std::uint32_t j) { return pts_[j].y < center.y; };
    auto left = [&](std::uint32_t j) { return pts_[j].x < center.x; };
    auto mid = std::partition(first, last, lower);
    std::array<decltype(first), 5> cut{first, std::partition(first, mid, left), mid,
                                       std::partition(mid, last, left), last};

    double sx = 0, sy = 0;
    const double h = half * 0.5;
    for (int q = 0; q < 4; ++q) {
      auto b = static_cast<std::uint32_t>(cut[q] - order_.begin());
      auto e = static_cast<std::uint32_t>(cut[q + 1] - order_.begin());
      if (b == e) continue;
      Point c{center.x + ((q & 1) ? h : -h), center.y + ((q & 2) ? h : -h)};
      std::uint32_t ch = build(b, e, c, h, depth + 1);
      nodes_[id].child[q] = ch;
      sx += nodes_[ch].com.x * (e - b);
      sy += nodes_[ch].com.y * (e - b);
    }
    nodes_[id].leaf = false;
    nodes_[id].com = {sx / (end - begin), sy / (end - begin)};
    return id;
  }

  const std::vector<Point>& pts_;
  std::vector<std::uint32_t> order_;
  std::vector<Node> nodes_;
};

}  // namespace

LayoutResult layout_force(const SpanningTree& t, const ForceParams& params, std::uint64_t seed,
                          Execution exec) {
  const std::size_t n = t.graph().num_vertices();
  LayoutResult out;
  out.kind = LayoutKind::force_directed;
  out.seed = seed;
  out.iterations = params.iterations;
  out.ideal_length = params.ideal_length;
  if (n == 0) return out;

  const double k = params.ideal_length;
  const double k2 = k * k;
  const double side = k * std::sqrt(static_cast<double>(n));
  std::mt19937_64 rng(seed);
  std::vector<Point> pos(n);
  for (auto& p : pos) {
    p.x = unit_uniform(rng) * side;
    p.y = unit_uniform(rng) * side;
  }
  if (n == 1) {
    out.positions = pos;
    return out;
  }

  const double t0 = 0.1 * side + k;
  const bool use_tree = n > params.barnes_hut_threshold;
  const double theta2 = params.barnes_hut_theta * params.barnes_hut_theta;
  const auto count = static_cast<std::ptrdiff_t>(n);
  std::vector<Point> disp(n);

  auto vertex_force = [&](std::size_t v, const QuadTree* qt) {
    Point d{};
    if (qt) {
      qt->accumulate(static_cast<std::uint32_t>(v), theta2, k2, d);
    } else {
      for (std::size_t w = 0; w < n; ++w)
        if (w != v) add_repulsion(pos[v], pos[w], 1.0, k2, v * 31u + w, d);
    }
    // Springs: parent and children.
    auto pull = [&](VertexId w) {
      double dx = pos[v].x - pos[w].x, dy = pos[v].y - pos[w].y;
      double dist = std::sqrt(dx * dx + dy * dy);
      double f = dist / k;  // (d^2 / k) along the unit vector dx/d
      d.x -= dx * f;
      d.y -= dy * f;
    };
    auto vid = static_cast<VertexId>(v);
    if (t.parent(vid) != vid) pull(t.parent(vid));
    for (VertexId c : t.children(vid)) pull(c);
    disp[v] = d;
  };

  for (int it = 0; it < params.iterations; ++it) {
    const double temp = t0 * (1.0 - static_cast<double>(it) / params.iterations);
    std::unique_ptr<QuadTree> qt;
    if (use_tree) qt = std::make_unique<QuadTree>(pos);

    if (exec == Execution::serial) {
      for (std::size_t v = 0; v < n; ++v) vertex_force(v, qt.get());
    } else {
#pragma omp parallel for schedule(dynamic, 64)
      for (std::ptrdiff_t v = 0; v < count; ++v) vertex_force(static_cast<std::size_t>(v), qt.get());
    }

    for (std::size_t v = 0; v < n; ++v) {
      double len = std::sqrt(disp[v].x * disp[v].x + disp[v].y * disp[v].y);
      if (len <= 0) continue;
      double step = std::min(len, temp) / len;
      pos[v].x += disp[v].x * step;
      pos[v].y += disp[v].y * step;
    }
  }
  out.positions = std::move(pos);
  return out;
}

std::vector<EdgeSpline> splines(const Segmentation& seg, const LayoutResult& layout) {
  std::vector<EdgeSpline> out;
  out.reserve(seg.size());
  for (std::size_t i = 0; i < seg.size(); ++i) {
    EdgeSpline s{seg.edge(i), {}};
    auto walk = seg.path(i);
    s.control_points.reserve(walk.size());
    for (VertexId v : walk) s.control_points.push_back(layout.positions.at(v));
    out.push_back(std::move(s));
  }
  return out;
}

}  // namespace lsqt
