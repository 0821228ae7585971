// Tidy tree drawing in the Reingold-Tilford family, using Walker's
// contour-threading with the linear-time apportion step. Both walks are
// iterative so path-like trees of any depth are safe.

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "lsqt/layout.hpp"

namespace lsqt {
namespace {

constexpr VertexId kNil = static_cast<VertexId>(-1);
constexpr double kSeparation = 1.0;

class TidyLayout {
 public:
  explicit TidyLayout(const SpanningTree& t) : t_(t) {
    const std::size_t n = t.graph().num_vertices();
    prelim_.assign(n, 0.0);
    mod_.assign(n, 0.0);
    shift_.assign(n, 0.0);
    change_.assign(n, 0.0);
    thread_.assign(n, kNil);
    ancestor_.resize(n);
    number_.assign(n, 0);
    left_sibling_.assign(n, kNil);
    default_ancestor_.assign(n, kNil);
    for (VertexId v = 0; v < n; ++v) {
      ancestor_[v] = v;
      auto ch = t.children(v);
      for (std::size_t i = 0; i < ch.size(); ++i) {
        number_[ch[i]] = static_cast<std::uint32_t>(i);
        left_sibling_[ch[i]] = i ? ch[i - 1] : kNil;
      }
      if (!ch.empty()) default_ancestor_[v] = ch.front();
    }
  }

  /// Relative x per vertex for the tree rooted at `root`, written into `x`.
  void run(VertexId root, std::vector<double>& x) {
    first_walk_all(root);
    second_walk_all(root, x);
  }

 private:
  bool is_leaf(VertexId v) const { return t_.children(v).empty(); }
  VertexId leftmost_child(VertexId v) const { return t_.children(v).front(); }
  VertexId rightmost_child(VertexId v) const { return t_.children(v).back(); }
  VertexId leftmost_sibling(VertexId v) const {
    VertexId p = t_.parent(v);
    return p == v ? v : t_.children(p).front();
  }
  VertexId next_left(VertexId v) const { return is_leaf(v) ? thread_[v] : leftmost_child(v); }
  VertexId next_right(VertexId v) const { return is_leaf(v) ? thread_[v] : rightmost_child(v); }

  void first_walk_body(VertexId v) {
    const VertexId ls = left_sibling_[v];
    if (is_leaf(v)) {
      prelim_[v] = ls == kNil ? 0.0 : prelim_[ls] + kSeparation;
      return;
    }
    execute_shifts(v);
    double mid = 0.5 * (prelim_[leftmost_child(v)] + prelim_[rightmost_child(v)]);
    if (ls != kNil) {
      prelim_[v] = prelim_[ls] + kSeparation;
      mod_[v] = prelim_[v] - mid;
    } else {
      prelim_[v] = mid;
    }
  }

  // Post-order: a vertex's body runs after all its children, and each child
  // is apportioned against its left siblings as soon as its subtree is done.
  void first_walk_all(VertexId root) {
    std::vector<std::pair<VertexId, std::size_t>> stack{{root, 0}};
    while (!stack.empty()) {
      auto& [v, next] = stack.back();
      auto ch = t_.children(v);
      if (next < ch.size()) {
        VertexId c = ch[next++];
        stack.emplace_back(c, 0);
        continue;
      }
      VertexId done = v;
      stack.pop_back();
      first_walk_body(done);
      if (VertexId p = t_.parent(done); p != done)
        default_ancestor_[p] = apportion(done, default_ancestor_[p]);
    }
  }

  VertexId apportion(VertexId v, VertexId default_ancestor) {
    const VertexId w = left_sibling_[v];
    if (w == kNil) return default_ancestor;
    VertexId vip = v, vop = v, vim = w, vom = leftmost_sibling(vip);
    double sip = mod_[vip], sop = mod_[vop], sim = mod_[vim], som = mod_[vom];
    while (next_right(vim) != kNil && next_left(vip) != kNil) {
      vim = next_right(vim);
      vip = next_left(vip);
      vom = next_left(vom);
      vop = next_right(vop);
      ancestor_[vop] = v;
      double shift = (prelim_[vim] + sim) - (prelim_[vip] + sip) + kSeparation;
      if (shift > 0) {
        move_subtree(ancestor_of(vim, v, default_ancestor), v, shift);
        sip += shift;
        sop += shift;
      }
      sim += mod_[vim];
      sip += mod_[vip];
      som += mod_[vom];
      sop += mod_[vop];
    }
    if (next_right(vim) != kNil && next_right(vop) == kNil) {
      thread_[vop] = next_right(vim);
      mod_[vop] += sim - sop;
    }
    if (next_left(vip) != kNil && next_left(vom) == kNil) {
      thread_[vom] = next_left(vip);
      mod_[vom] += sip - som;
      default_ancestor = v;
    }
    return default_ancestor;
  }

  VertexId ancestor_of(VertexId vim, VertexId v, VertexId default_ancestor) const {
    VertexId a = ancestor_[vim];
    return t_.parent(a) == t_.parent(v) && a != t_.parent(v) ? a : default_ancestor;
  }

  void move_subtree(VertexId wm, VertexId wp, double shift) {
    double subtrees = static_cast<double>(number_[wp]) - static_cast<double>(number_[wm]);
    change_[wp] -= shift / subtrees;
    shift_[wp] += shift;
    change_[wm] += shift / subtrees;
    prelim_[wp] += shift;
    mod_[wp] += shift;
  }

  void execute_shifts(VertexId v) {
    double shift = 0.0, change = 0.0;
    auto ch = t_.children(v);
    for (auto it = ch.rbegin(); it != ch.rend(); ++it) {
      VertexId w = *it;
      prelim_[w] += shift;
      mod_[w] += shift;
      change += change_[w];
      shift += shift_[w] + change;
    }
  }

  void second_walk_all(VertexId root, std::vector<double>& x) {
    std::vector<std::pair<VertexId, double>> stack{{root, 0.0}};
    while (!stack.empty()) {
      auto [v, m] = stack.back();
      stack.pop_back();
      x[v] = prelim_[v] + m;
      for (VertexId c : t_.children(v)) stack.emplace_back(c, m + mod_[v]);
    }
  }

  const SpanningTree& t_;
  std::vector<double> prelim_, mod_, shift_, change_;
  std::vector<VertexId> thread_, ancestor_, left_sibling_, default_ancestor_;
  std::vector<std::uint32_t> number_;
};

}  // namespace

std::vector<double> tidy_tree_x(const SpanningTree& t) {
  std::vector<double> x(t.graph().num_vertices(), 0.0);
  TidyLayout tidy(t);
  for (VertexId root : t.roots()) {
    if (root >= x.size()) continue;
    tidy.run(root, x);
  }
  // Shift every component so its leftmost vertex sits at 0.
  std::vector<double> min_x(t.roots().size(), 0.0);
  std::vector<bool> seen(t.roots().size(), false);
  for (VertexId v = 0; v < x.size(); ++v) {
    auto c = t.component(v);
    if (!seen[c] || x[v] < min_x[c]) min_x[c] = x[v];
    seen[c] = true;
  }
  for (VertexId v = 0; v < x.size(); ++v) x[v] -= min_x[t.component(v)];
  return x;
}

LayoutResult layout_radial(const SpanningTree& t, double r0) {
  if (!(r0 > 0)) throw std::invalid_argument("radius step must be positive");
  const std::size_t n = t.graph().num_vertices();
  LayoutResult out;
  out.kind = LayoutKind::radial_tree;
  out.radius_step = r0;
  out.positions.assign(n, Point{});
  if (n == 0) return out;

  const auto x = tidy_tree_x(t);
  const std::size_t comps = t.roots().size();
  std::vector<double> span(comps, 0.0);
  std::vector<std::uint32_t> max_depth(comps, 0);
  for (VertexId v = 0; v < n; ++v) {
    auto c = t.component(v);
    span[c] = std::max(span[c], x[v]);
    max_depth[c] = std::max(max_depth[c], t.depth(v));
  }

  // Components sit side by side along the x axis, one ring step apart.
  std::vector<double> center(comps, 0.0);
  for (std::size_t c = 1; c < comps; ++c)
    center[c] = center[c - 1] + (max_depth[c - 1] + max_depth[c] + 1) * r0;

  for (VertexId v = 0; v < n; ++v) {
    auto c = t.component(v);
    double angle = 2.0 * std::numbers::pi * x[v] / (span[c] + kSeparation);
    double radius = t.depth(v) * r0;
    out.positions[v] = {center[c] + radius * std::cos(angle), radius * std::sin(angle)};
  }
  return out;
}

}  // namespace lsqt
