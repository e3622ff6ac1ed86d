#include "gemkit/colored_graph.hpp"

#include <algorithm>
#include <queue>
#include <sstream>

#include "gemkit/errors.hpp"

namespace gemkit {

std::vector<Color> ColorSet::colors() const {
  std::vector<Color> out;
  for (std::uint32_t m = mask_; m != 0; m &= m - 1) out.push_back(std::countr_zero(m));
  return out;
}

std::string ColorSet::to_string() const {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (Color c : colors()) {
    if (!first) os << ',';
    os << c;
    first = false;
  }
  os << '}';
  return os.str();
}

ColoredGraph::ColoredGraph(int n_colors, std::vector<std::vector<Vertex>> matchings)
    : n_colors_(n_colors) {
  if (n_colors < 1 || n_colors > kMaxColors)
    throw ParseError("number of colors must lie in [1," + std::to_string(kMaxColors) + "], got " +
                     std::to_string(n_colors));
  if (static_cast<int>(matchings.size()) != n_colors)
    throw ParseError("expected " + std::to_string(n_colors) + " matchings, got " +
                     std::to_string(matchings.size()));
  order_ = static_cast<int>(matchings.front().size());
  if (order_ == 0 || order_ % 2 != 0)
    throw ParseError("order must be a positive even integer, got " + std::to_string(order_));
  adj_.reserve(static_cast<std::size_t>(n_colors) * order_);
  for (int c = 0; c < n_colors; ++c) {
    const auto& m = matchings[c];
    if (static_cast<int>(m.size()) != order_)
      throw ParseError("matching of color " + std::to_string(c) + " has wrong length");
    for (int v = 0; v < order_; ++v) {
      const Vertex w = m[v];
      if (w < 0 || w >= order_)
        throw ParseError("color " + std::to_string(c) + ": vertex index out of range at " + std::to_string(v));
      if (w == v) throw ParseError("color " + std::to_string(c) + ": loop at vertex " + std::to_string(v));
      if (m[w] != v)
        throw ParseError("color " + std::to_string(c) + ": not an involution at vertex " + std::to_string(v));
      adj_.push_back(w);
    }
  }
}

ColoredGraph ColoredGraph::standard(int n_colors) {
  return ColoredGraph(n_colors, std::vector<std::vector<Vertex>>(n_colors, {1, 0}));
}

std::vector<std::vector<Vertex>> ColoredGraph::matchings() const {
  std::vector<std::vector<Vertex>> out;
  for (int c = 0; c < n_colors_; ++c) {
    auto m = matching(c);
    out.emplace_back(m.begin(), m.end());
  }
  return out;
}

bool ColoredGraph::is_connected() const {
  std::vector<char> seen(order_, 0);
  std::vector<Vertex> stack{0};
  seen[0] = 1;
  int reached = 1;
  while (!stack.empty()) {
    const Vertex v = stack.back();
    stack.pop_back();
    for (int c = 0; c < n_colors_; ++c) {
      const Vertex w = neighbor(v, c);
      if (!seen[w]) {
        seen[w] = 1;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  return reached == order_;
}

ColoredGraph ColoredGraph::relabeled(std::span<const Vertex> perm) const {
  if (static_cast<int>(perm.size()) != order_) throw PreconditionError("relabel: permutation has wrong size");
  std::vector<std::vector<Vertex>> m(n_colors_, std::vector<Vertex>(order_));
  for (int c = 0; c < n_colors_; ++c)
    for (int v = 0; v < order_; ++v) m[c][perm[v]] = perm[neighbor(v, c)];
  return ColoredGraph(n_colors_, std::move(m));
}

ColoredGraph ColoredGraph::recolored(std::span<const Color> perm) const {
  if (static_cast<int>(perm.size()) != n_colors_) throw PreconditionError("recolor: permutation has wrong size");
  std::vector<std::vector<Vertex>> m(n_colors_);
  for (int c = 0; c < n_colors_; ++c) {
    auto src = matching(c);
    m[perm[c]].assign(src.begin(), src.end());
  }
  return ColoredGraph(n_colors_, std::move(m));
}

ColoredGraph disjoint_union(const ColoredGraph& a, const ColoredGraph& b) {
  if (a.n_colors() != b.n_colors()) throw PreconditionError("disjoint_union: color counts differ");
  std::vector<std::vector<Vertex>> m(a.n_colors());
  for (int c = 0; c < a.n_colors(); ++c) {
    for (Vertex v = 0; v < a.order(); ++v) m[c].push_back(a.neighbor(v, c));
    for (Vertex v = 0; v < b.order(); ++v) m[c].push_back(b.neighbor(v, c) + a.order());
  }
  return ColoredGraph(a.n_colors(), std::move(m));
}

Bipartition bipartition(const ColoredGraph& g) {
  require_connected(g, "bipartition");
  const int p = g.order();
  std::vector<int> side(p, -1);
  std::vector<Vertex> parent(p, -1);
  std::queue<Vertex> queue;
  side[0] = 0;
  queue.push(0);
  while (!queue.empty()) {
    const Vertex v = queue.front();
    queue.pop();
    for (Color c = 0; c < g.n_colors(); ++c) {
      const Vertex w = g.neighbor(v, c);
      if (side[w] < 0) {
        side[w] = 1 - side[v];
        parent[w] = v;
        queue.push(w);
      } else if (side[w] == side[v]) {
        // Odd cycle: lca -> v, edge v-w, w -> just below lca.
        auto path_to_root = [&](Vertex x) {
          std::vector<Vertex> path;
          for (; x >= 0; x = parent[x]) path.push_back(x);
          return path;
        };
        auto pv = path_to_root(v);
        auto pw = path_to_root(w);
        while (pv.size() > 1 && pw.size() > 1 && pv[pv.size() - 2] == pw[pw.size() - 2]) {
          pv.pop_back();
          pw.pop_back();
        }
        pw.pop_back();
        Bipartition out;
        out.odd_cycle.assign(pv.rbegin(), pv.rend());
        out.odd_cycle.insert(out.odd_cycle.end(), pw.begin(), pw.end());
        return out;
      }
    }
  }
  return Bipartition{true, std::move(side), {}};
}

bool is_bipartite(const ColoredGraph& g) { return bipartition(g).bipartite; }

void require_connected(const ColoredGraph& g, const char* operation) {
  if (!g.is_connected()) throw PreconditionError(std::string(operation) + ": input graph is disconnected");
}

void require_color(const ColoredGraph& g, Color c) {
  if (c < 0 || c >= g.n_colors())
    throw PreconditionError("color " + std::to_string(c) + " out of range for a " + std::to_string(g.n_colors()) +
                            "-colored graph");
}

}  // namespace gemkit
