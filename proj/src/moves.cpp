#include "gemkit/moves.hpp"

#include <map>

#include "gemkit/errors.hpp"
#include "gemkit/recognition.hpp"
#include "gemkit/residues.hpp"

namespace gemkit {

namespace {

// Old label -> new label after deleting the vertices flagged in `removed`.
std::vector<Vertex> compacting_map(const std::vector<char>& removed) {
  std::vector<Vertex> out(removed.size(), -1);
  Vertex next = 0;
  for (std::size_t v = 0; v < removed.size(); ++v)
    if (!removed[v]) out[v] = next++;
  return out;
}

// Colors joining x and y, or nullopt when {x, y} fails the dipole conditions.
std::optional<ColorSet> dipole_colors(const ColoredGraph& g, Vertex x, Vertex y, const ComponentLabels* labels) {
  if (x == y || x < 0 || y < 0 || x >= g.order() || y >= g.order()) return std::nullopt;
  ColorSet colors;
  for (Color c = 0; c < g.n_colors(); ++c)
    if (g.neighbor(x, c) == y) colors = colors.with(c);
  if (colors.size() == 0 || colors == g.colors()) return std::nullopt;
  const ColorSet rest = colors.complement(g.n_colors());
  if (labels) {
    if (labels->component[x] == labels->component[y]) return std::nullopt;
  } else {
    const auto own = label_components(g, rest);
    if (own.component[x] == own.component[y]) return std::nullopt;
  }
  return colors;
}

class PropernessOracle {
 public:
  explicit PropernessOracle(const ColoredGraph& g) : g_(g) {}

  SphereStatus status(ColorSet key, int component, Vertex v) {
    const auto k = std::make_pair(key.mask(), component);
    if (auto it = cache_.find(k); it != cache_.end()) return it->second;
    const SphereStatus s = key.size() <= 2 ? SphereStatus::kCertifiedSphere
                                           : recognize_sphere(residue_of(g_, key, v).subgraph).status;
    cache_.emplace(k, s);
    return s;
  }

  Properness properness(const ResidueTable& table, const Dipole& d) {
    const ColorSet rest = d.colors.complement(g_.n_colors());
    const SphereStatus a = status(rest, table.component(rest, d.x), d.x);
    if (a == SphereStatus::kCertifiedSphere) return Properness::kProper;
    const SphereStatus b = status(rest, table.component(rest, d.y), d.y);
    if (b == SphereStatus::kCertifiedSphere) return Properness::kProper;
    if (a == SphereStatus::kCertifiedNonsphere && b == SphereStatus::kCertifiedNonsphere) return Properness::kImproper;
    return Properness::kUnknown;
  }

 private:
  const ColoredGraph& g_;
  std::map<std::pair<std::uint32_t, int>, SphereStatus> cache_;
};

// Dipoles in (x, y) order; with `first_proper`, stops at the first proper one
// and leaves the properness of earlier entries evaluated.
std::vector<Dipole> scan_dipoles(const ColoredGraph& g, bool first_proper) {
  std::vector<Dipole> out;
  if (g.order() <= 2) return out;
  const ResidueTable table(g);
  PropernessOracle oracle(g);
  for (Vertex x = 0; x < g.order(); ++x) {
    ColorSet seen;
    for (Color c = 0; c < g.n_colors(); ++c) {
      const Vertex y = g.neighbor(x, c);
      if (y <= x || seen.contains(c)) continue;
      ColorSet colors;
      for (Color d = 0; d < g.n_colors(); ++d)
        if (g.neighbor(x, d) == y) colors = colors.with(d);
      seen = ColorSet(seen.mask() | colors.mask());
      if (colors == g.colors()) continue;
      const ColorSet rest = colors.complement(g.n_colors());
      if (table.component(rest, x) == table.component(rest, y)) continue;
      Dipole dip{x, y, colors, Properness::kUnknown};
      dip.properness = oracle.properness(table, dip);
      out.push_back(dip);
      if (first_proper && dip.properness == Properness::kProper) return out;
    }
  }
  return out;
}

}  // namespace

ColoredGraph connected_sum(const ColoredGraph& g1, const ColoredGraph& g2, Vertex v1, Vertex v2) {
  if (g1.n_colors() != g2.n_colors()) throw PreconditionError("connected sum of graphs with different color counts");
  require_connected(g1, "connected_sum");
  require_connected(g2, "connected_sum");
  if (v1 < 0 || v1 >= g1.order() || v2 < 0 || v2 >= g2.order())
    throw PreconditionError("connected sum vertex out of range");
  const auto b1 = bipartition(g1);
  const auto b2 = bipartition(g2);
  if (b1.bipartite && b2.bipartite && b1.side[v1] == b2.side[v2])
    throw PreconditionError("connected sum of bipartite graphs needs vertices from opposite classes");
  const int p1 = g1.order(), p2 = g2.order();
  auto map1 = [&](Vertex v) { return v < v1 ? v : v - 1; };
  auto map2 = [&](Vertex v) { return p1 - 1 + (v < v2 ? v : v - 1); };
  std::vector<std::vector<Vertex>> m(g1.n_colors(), std::vector<Vertex>(p1 + p2 - 2));
  for (Color c = 0; c < g1.n_colors(); ++c) {
    for (Vertex v = 0; v < p1; ++v)
      if (v != v1 && g1.neighbor(v, c) != v1) m[c][map1(v)] = map1(g1.neighbor(v, c));
    for (Vertex v = 0; v < p2; ++v)
      if (v != v2 && g2.neighbor(v, c) != v2) m[c][map2(v)] = map2(g2.neighbor(v, c));
    const Vertex u1 = map1(g1.neighbor(v1, c));
    const Vertex u2 = map2(g2.neighbor(v2, c));
    m[c][u1] = u2;
    m[c][u2] = u1;
  }
  return ColoredGraph(g1.n_colors(), std::move(m));
}

ColoredGraph connected_sum(const ColoredGraph& g1, const ColoredGraph& g2) {
  require_connected(g1, "connected_sum");
  require_connected(g2, "connected_sum");
  const auto b1 = bipartition(g1);
  const auto b2 = bipartition(g2);
  Vertex v2 = 0;
  if (b1.bipartite && b2.bipartite)
    while (b2.side[v2] == b1.side[0]) ++v2;
  return connected_sum(g1, g2, 0, v2);
}

const char* to_string(Properness p) {
  switch (p) {
    case Properness::kProper: return "proper";
    case Properness::kUnknown: return "unknown";
    case Properness::kImproper: return "improper";
  }
  return "?";
}

std::vector<Dipole> find_dipoles(const ColoredGraph& g) {
  require_connected(g, "find_dipoles");
  return scan_dipoles(g, false);
}

std::optional<Dipole> dipole_at(const ColoredGraph& g, Vertex x, Vertex y) {
  require_connected(g, "dipole_at");
  if (x > y) std::swap(x, y);
  const auto colors = dipole_colors(g, x, y, nullptr);
  if (!colors) return std::nullopt;
  const ResidueTable table(g);
  PropernessOracle oracle(g);
  Dipole d{x, y, *colors, Properness::kUnknown};
  d.properness = oracle.properness(table, d);
  return d;
}

ColoredGraph eliminate_dipole(const ColoredGraph& g, Vertex x, Vertex y) {
  if (g.order() <= 2) throw PreconditionError("no dipole can be eliminated from an order-2 graph");
  const auto colors = dipole_colors(g, x, y, nullptr);
  if (!colors)
    throw PreconditionError("vertices " + std::to_string(x) + ", " + std::to_string(y) + " do not form a dipole");
  std::vector<char> removed(g.order(), 0);
  removed[x] = removed[y] = 1;
  const auto map = compacting_map(removed);
  std::vector<std::vector<Vertex>> m(g.n_colors(), std::vector<Vertex>(g.order() - 2));
  for (Color c = 0; c < g.n_colors(); ++c) {
    for (Vertex v = 0; v < g.order(); ++v) {
      if (removed[v]) continue;
      Vertex w = g.neighbor(v, c);
      if (w == x) w = g.neighbor(y, c);
      else if (w == y) w = g.neighbor(x, c);
      m[c][map[v]] = map[w];
    }
  }
  return ColoredGraph(g.n_colors(), std::move(m));
}

ColoredGraph add_dipole(const ColoredGraph& g, ColorSet colors, const std::vector<Vertex>& attach) {
  const int n_colors = g.n_colors();
  if (colors.size() == 0 || !colors.subset_of(g.colors()) || colors == g.colors())
    throw PreconditionError("dipole colors must be a nonempty proper subset of the colors");
  if (static_cast<int>(attach.size()) != n_colors) throw PreconditionError("add_dipole needs one attachment per color");
  const int p = g.order();
  const Vertex x = p, y = p + 1;
  auto m = g.matchings();
  for (Color c = 0; c < n_colors; ++c) {
    m[c].resize(p + 2);
    if (colors.contains(c)) {
      m[c][x] = y;
      m[c][y] = x;
      continue;
    }
    const Vertex a = attach[c];
    if (a < 0 || a >= p) throw PreconditionError("dipole attachment vertex out of range");
    const Vertex b = g.neighbor(a, c);
    m[c][x] = a;
    m[c][a] = x;
    m[c][y] = b;
    m[c][b] = y;
  }
  ColoredGraph out(n_colors, std::move(m));
  if (!dipole_colors(out, x, y, nullptr)) throw PreconditionError("inserted vertices do not form a dipole");
  return out;
}

ColoredGraph add_dipole(const ColoredGraph& g, ColorSet colors, Vertex a) {
  return add_dipole(g, colors, std::vector<Vertex>(g.n_colors(), a));
}

Reduction reduce(const ColoredGraph& g) {
  require_connected(g, "reduce");
  Reduction r{g, {}, 0};
  for (;;) {
    const auto dipoles = scan_dipoles(r.graph, true);
    if (dipoles.empty() || dipoles.back().properness != Properness::kProper) {
      for (const auto& d : dipoles)
        if (d.properness != Properness::kProper) ++r.unknown_skipped;
      return r;
    }
    const Dipole d = dipoles.back();
    r.graph = eliminate_dipole(r.graph, d.x, d.y);
    r.eliminated.push_back(d);
  }
}

}  // namespace gemkit
