#pragma once

#include <optional>
#include <vector>

#include "gemkit/colored_graph.hpp"

namespace gemkit {

// Graph connected sum: delete v1 from g1 and v2 from g2, then join the two
// hanging c-colored edges for every color c. Vertices of g1 - v1 keep their
// relative order and come first. When both inputs are bipartite, v1 and v2
// must lie in opposite classes (class of vertex 0 is 0 in each graph).
ColoredGraph connected_sum(const ColoredGraph& g1, const ColoredGraph& g2, Vertex v1, Vertex v2);
// v1 = 0; v2 = the first vertex of g2 in the class opposite to v1 (or 0 when
// either input is non-bipartite).
ColoredGraph connected_sum(const ColoredGraph& g1, const ColoredGraph& g2);

enum class Properness { kProper, kUnknown, kImproper };
const char* to_string(Properness p);

// Vertices x < y joined by exactly the colors in `colors` and lying in
// distinct residues on the complementary colors.
struct Dipole {
  Vertex x = 0;
  Vertex y = 0;
  ColorSet colors;
  Properness properness = Properness::kUnknown;

  friend bool operator==(const Dipole&, const Dipole&) = default;
};

// All dipoles, ordered by (x, y). Empty for order 2. Properness: proper when
// one of the two touched complementary residues is a certified sphere,
// improper when both are certified non-spheres, unknown otherwise.
std::vector<Dipole> find_dipoles(const ColoredGraph& g);

// The dipole on {x, y}, if any (properness evaluated).
std::optional<Dipole> dipole_at(const ColoredGraph& g, Vertex x, Vertex y);

// Removes x and y and joins pi_c(x) with pi_c(y) for every color c outside
// the dipole. Remaining vertices keep their relative order. Throws
// PreconditionError when {x, y} is not a dipole (in particular at order 2).
ColoredGraph eliminate_dipole(const ColoredGraph& g, Vertex x, Vertex y);

// Inserts a dipole on new vertices x = p, y = p+1 joined by `colors`; for
// each color c outside `colors` the c-edge {a_c, pi_c(a_c)} is split into
// {x, a_c} and {y, pi_c(a_c)}. attach[c] gives a_c (entries for colors in
// `colors` are ignored). Throws PreconditionError if the inserted pair is
// not a dipole of the result.
ColoredGraph add_dipole(const ColoredGraph& g, ColorSet colors, const std::vector<Vertex>& attach);
// a_c = a for every c outside `colors`; the new dipole is always proper.
ColoredGraph add_dipole(const ColoredGraph& g, ColorSet colors, Vertex a);

struct Reduction {
  ColoredGraph graph;
  std::vector<Dipole> eliminated;  // in application order, labels of the graph at that step
  int unknown_skipped = 0;         // dipoles left because properness was not certified
};

// Greedy proper-dipole elimination (first proper dipole in (x, y) order)
// until none remains.
Reduction reduce(const ColoredGraph& g);

}  // namespace gemkit
