#pragma once

#include <vector>

#include "gemkit/colored_graph.hpp"

namespace gemkit {

// Component labeling of the spanning subgraph restricted to a color subset.
struct ComponentLabels {
  std::vector<int> component;  // component index per vertex, numbered by first vertex
  int count = 0;
};

ComponentLabels label_components(const ColoredGraph& g, ColorSet colors);

// A connected component of the spanning subgraph on `key`.
struct Residue {
  ColorSet key;
  std::vector<Vertex> vertices;  // increasing
  // The component as a |key|-colored graph: vertex i is vertices[i], color k
  // is the k-th smallest color of key.
  ColoredGraph subgraph;
};

// Number of {key}-residues. Throws PreconditionError for colors out of range.
int residue_count(const ColoredGraph& g, ColorSet key);

// Residues ordered by their smallest vertex.
std::vector<Residue> extract_residues(const ColoredGraph& g, ColorSet key);

// The residue on `key` containing v.
Residue residue_of(const ColoredGraph& g, ColorSet key, Vertex v);

// Component labelings for every color subset, computed once. Most analyses
// query many residue counts of the same graph.
class ResidueTable {
 public:
  explicit ResidueTable(const ColoredGraph& g);

  int count(ColorSet key) const { return table_[key.mask()].count; }
  int component(ColorSet key, Vertex v) const { return table_[key.mask()].component[v]; }
  const ComponentLabels& labels(ColorSet key) const { return table_[key.mask()]; }
  int n_colors() const { return n_colors_; }
  int order() const { return order_; }

 private:
  int n_colors_;
  int order_;
  std::vector<ComponentLabels> table_;
};

}  // namespace gemkit
