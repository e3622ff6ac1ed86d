#include "gemkit/residues.hpp"

#include <numeric>

#include "gemkit/errors.hpp"

namespace gemkit {

namespace {

void check_key(const ColoredGraph& g, ColorSet key) {
  if (!key.subset_of(g.colors()))
    throw PreconditionError("residue key " + key.to_string() + " has colors out of range for a " +
                            std::to_string(g.n_colors()) + "-colored graph");
}

}  // namespace

ComponentLabels label_components(const ColoredGraph& g, ColorSet colors) {
  check_key(g, colors);
  const auto cols = colors.colors();
  ComponentLabels out;
  out.component.assign(g.order(), -1);
  std::vector<Vertex> stack;
  for (Vertex s = 0; s < g.order(); ++s) {
    if (out.component[s] >= 0) continue;
    const int id = out.count++;
    out.component[s] = id;
    stack.push_back(s);
    while (!stack.empty()) {
      const Vertex v = stack.back();
      stack.pop_back();
      for (Color c : cols) {
        const Vertex w = g.neighbor(v, c);
        if (out.component[w] < 0) {
          out.component[w] = id;
          stack.push_back(w);
        }
      }
    }
  }
  return out;
}

int residue_count(const ColoredGraph& g, ColorSet key) { return label_components(g, key).count; }

namespace {

Residue build_residue(const ColoredGraph& g, ColorSet key, std::vector<Vertex> vertices) {
  std::vector<int> index(g.order(), -1);
  for (int i = 0; i < static_cast<int>(vertices.size()); ++i) index[vertices[i]] = i;
  const auto cols = key.colors();
  std::vector<std::vector<Vertex>> m(cols.size(), std::vector<Vertex>(vertices.size()));
  for (std::size_t k = 0; k < cols.size(); ++k)
    for (std::size_t i = 0; i < vertices.size(); ++i) m[k][i] = index[g.neighbor(vertices[i], cols[k])];
  const int n_colors = static_cast<int>(m.size());
  return Residue{key, std::move(vertices), ColoredGraph(n_colors, std::move(m))};
}

}  // namespace

std::vector<Residue> extract_residues(const ColoredGraph& g, ColorSet key) {
  if (key.empty()) throw PreconditionError("residue key must be nonempty");
  const auto labels = label_components(g, key);
  std::vector<std::vector<Vertex>> groups(labels.count);
  for (Vertex v = 0; v < g.order(); ++v) groups[labels.component[v]].push_back(v);
  std::vector<Residue> out;
  out.reserve(groups.size());
  for (auto& grp : groups) out.push_back(build_residue(g, key, std::move(grp)));
  return out;
}

Residue residue_of(const ColoredGraph& g, ColorSet key, Vertex v) {
  if (key.empty()) throw PreconditionError("residue key must be nonempty");
  const auto labels = label_components(g, key);
  std::vector<Vertex> vs;
  for (Vertex w = 0; w < g.order(); ++w)
    if (labels.component[w] == labels.component[v]) vs.push_back(w);
  return build_residue(g, key, std::move(vs));
}

ResidueTable::ResidueTable(const ColoredGraph& g)
    : n_colors_(g.n_colors()), order_(g.order()), table_(std::size_t{1} << g.n_colors()) {
  for (std::uint32_t mask = 0; mask < table_.size(); ++mask) table_[mask] = label_components(g, ColorSet(mask));
}

}  // namespace gemkit
