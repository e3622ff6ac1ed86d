#pragma once

#include <string>
#include <vector>

#include "gemkit/colored_graph.hpp"
#include "gemkit/genus.hpp"
#include "gemkit/homology.hpp"

namespace gemkit {

enum class WitnessKind { kGeneral, kSpecial };
const char* to_string(WitnessKind k);

// Residue-count form of the handle hypotheses (g_{a-hat b-hat} counts the
// edges of K joining the a- and b-labelled vertices).
//   general: g_{i-hat k-hat} = g_{j-hat k-hat} = 1, i < j.
//   special: additionally g_{r-hat apex-hat} = 1 for the remaining pair {r, apex}.
// The apex plays the role of color 4: it is 4 in the boundary case, and the
// larger color outside {i, j, k} (other than r for special) in the closed case.
struct HypothesisWitness {
  WitnessKind kind = WitnessKind::kGeneral;
  Color i = 0, j = 1, k = 2;
  Color r = 3;
  Color apex = 4;
  bool boundary_case = false;

  // (i, j, r, k, apex)
  CyclicPermutation eps() const;
  std::string to_string() const;
  friend bool operator==(const HypothesisWitness&, const HypothesisWitness&) = default;
};

// Crystallization with singular colors empty or {4}. Every general (set, k)
// combination and every special partition (first admissible k), in a fixed
// scan order; special witnesses are listed after the general ones.
std::vector<HypothesisWitness> find_hypothesis_witnesses(const ColoredGraph& g, ColorSet singular_colors);

struct LinkSummary {
  int undotted = 0;
  int dotted = 0;
  std::string target;  // "S³", "#_t(S²×S¹)", "∂M⁴" or "#_t(S²×S¹) # ∂M⁴"
};

struct HandleProfile {
  int h0 = 1, h1 = 0, h2 = 0, h3 = 0, h4 = 0;
  int s = 0;  // 3-handles
  int t = 0;  // t_{i,j,k}
  LinkSummary link;
  std::string boundary_h1;  // H_1 of the apex-hat residue in the boundary case
};

// beta_2 is taken from the homology report (Euler relation) after checking
// that g_{j-hat k-hat} = 1 certifies pi_1 = 1. Throws PreconditionError for an
// invalid witness.
HandleProfile handle_profile(const ColoredGraph& g, const HypothesisWitness& w, const HomologyReport& h);

struct SubgenusTarget {
  CyclicPermutation eps{std::vector<Color>{0, 1, 2, 3, 4}};
  HalfInteger rho0;  // rho_{eps_0-hat}
  int t = 0;         // t_{s,j,k}
  int beta2 = 0;
};

// eps = (s, j, r, k, apex); checks rho_{eps_0-hat} = beta2 + t_{s,j,k} and the
// identity g_{eps2 eps4} = g_{eps2 eps3 eps4} + g_{eps1 eps2 eps4} - 1 + rho_{eps_0-hat}.
// Throws PreconditionError unless g_{j-hat k-hat} = 1, ConsistencyError when a
// check fails.
SubgenusTarget subgenus_target(const ColoredGraph& g, Color j, Color k, Color s, Color apex, const HomologyReport& h);

struct CollapseTrace {
  CyclicPermutation eps{std::vector<Color>{0, 1, 2, 3, 4}};
  int triangles = 0;             // {eps2, eps4}-cycles
  int edges = 0;                 // {eps2, eps3, eps4}-residues
  std::vector<int> schedule;     // collapsed triangles, in order
  int remaining_triangles = 0;
  int h = 0;                     // remaining {eps0, eps1}-edges
  std::vector<int> r;            // triangles per remaining edge, ascending edge index
  HalfInteger rho0;
};

// Collapses triangles through free {eps0, eps1}-edges in ascending index
// order while more than one edge remains. Throws ConsistencyError when the
// counting identities fail.
CollapseTrace collapse_2skeleton(const ColoredGraph& g, const HypothesisWitness& w);

}  // namespace gemkit
