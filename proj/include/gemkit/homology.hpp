#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gemkit/colored_graph.hpp"
#include "gemkit/genus.hpp"
#include "gemkit/smith.hpp"

namespace gemkit {

// Simplex counts of the dual pseudocomplex K(G): k-simplices correspond to
// residues on n-k colors (k = 0..n).
struct ChainComplexSummary {
  int dimension = 0;
  std::vector<int> simplex_counts;
  int euler_characteristic = 0;
};

ChainComplexSummary chain_complex_summary(const ColoredGraph& g);

// Alternating sum of simplex counts of K(G).
int euler_characteristic(const ColoredGraph& g);

// chi of the represented singular 4-manifold from a 5-colored graph:
//   chi = 2 - 2 rho_eps + sum_i rho_{eps_i-hat}.
struct EulerViaGenus {
  int chi = 0;
  bool contracted = true;  // false flags a non-crystallization input
};
EulerViaGenus euler_via_genus(const ColoredGraph& g, const CyclicPermutation& eps);

// Integral homology H_0..H_n of |K(G)| from Smith normal forms of the
// boundary matrices (faces ordered by color label).
std::vector<AbelianGroup> simplicial_homology(const ColoredGraph& g);

// H_1(|K(G)|) as the abelianized edge-path group of the 2-skeleton:
// generators are the edges off a spanning tree of the 1-skeleton, relators
// are triangle boundaries.
AbelianGroup h1_edge_path(const ColoredGraph& g);

// Group presentation read off a colored graph for a pair of colors i, j.
// Generators: components of the spanning subgraph missing i and j.
// Relators: one word per {i,j}-colored cycle. Tree relators: generators
// lying on a spanning tree of the i/j-labelled subcomplex, set to 1.
enum class PresentationFlavor { kCompactManifold, kSingularManifold };

using Word = std::vector<int>;  // letters +-(generator + 1)

struct Presentation {
  Color i = 0;
  Color j = 1;
  PresentationFlavor flavor = PresentationFlavor::kCompactManifold;
  int n_generators = 0;
  std::vector<Word> relators;
  std::vector<int> tree_generators;

  // `gens: x0 x1 ...` then one relator per line as signed generator indices
  // (`+0 -3 +2`); tree relators appear as single-letter words, "1" is empty.
  std::string to_text() const;
};

// Throws PreconditionError when the flavor's requirement on singular colors
// fails: compact-manifold needs i, j non-singular; singular-manifold needs
// every singular color in {i, j}.
Presentation pi1_presentation(const ColoredGraph& g, Color i, Color j, PresentationFlavor flavor,
                              ColorSet singular_colors = {});

Word free_reduce(const Word& w);
AbelianGroup abelianization(const Presentation& p);

struct TietzeResult {
  bool trivial = false;  // reached the empty presentation
  int moves = 0;
  int remaining_generators = 0;
  int remaining_relators = 0;
};

// Bounded Tietze simplification: kill tree generators, drop empty and
// duplicate relators, eliminate generators occurring exactly once in some
// relator.
TietzeResult tietze_simplify(const Presentation& p, int max_moves = 10000);

// Fundamental group summary for one flavor. `rank_lower_bound` is the
// minimal generator count of the abelianization, replaced by an exact 0
// when Tietze simplification certifies the trivial group.
struct Pi1Summary {
  bool available = false;  // false when no admissible color pair exists
  Color i = 0;
  Color j = 0;
  AbelianGroup abelianization;
  bool certified_trivial = false;
  int rank_lower_bound = 0;
  int tietze_moves = 0;
};

Pi1Summary pi1_summary(const ColoredGraph& g, PresentationFlavor flavor, ColorSet singular_colors);

struct HomologyReport {
  int n_colors = 0;
  ColorSet singular_colors;
  int chi = 0;                          // chi(|K(G)|) by simplex counts
  std::optional<int> chi_via_genus;     // 5-colored graphs, value common to every eps
  Pi1Summary pi1_compact;               // M
  Pi1Summary pi1_singular;              // M-hat
  AbelianGroup h1_edge_path;            // H_1(M-hat), oracle (B)
  std::vector<AbelianGroup> simplicial; // H_k(M-hat)
  int beta1_compact = 0;                // beta_1(M)
  int beta1_singular = 0;               // beta_1(M-hat)
  std::optional<int> beta2;             // beta_2(M) from chi = 2 - b1(M^) + b2(M) - b1(M)
  bool outside_scope = false;           // two or more singular colors
  bool simply_connected() const { return pi1_compact.available && pi1_compact.certified_trivial; }
};

// Throws ConsistencyError when the two H_1 computations of M-hat disagree,
// when chi_via_genus depends on eps, or when beta_2 from the Euler relation
// disagrees with the simplicial Betti number.
HomologyReport homology(const ColoredGraph& g, ColorSet singular_colors);

// beta_2 = sum_i rho_{eps_i-hat} - 2 rho_eps for a simply-connected 4-manifold
// crystallization; checks eps-independence and beta_2 <= rho_{eps_i-hat}.
// Throws PreconditionError unless the homology report certifies pi_1 = 1.
int beta2_via_genus(const ColoredGraph& g, const HomologyReport& homology);

}  // namespace gemkit
