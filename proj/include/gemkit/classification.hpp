#pragma once

#include <optional>
#include <vector>

#include "gemkit/colored_graph.hpp"
#include "gemkit/genus.hpp"
#include "gemkit/homology.hpp"

namespace gemkit {

// Simple-connectivity status of the represented compact manifold M.
enum class Pi1Status { kCertifiedTrivial, kUnknown, kNontrivial };
const char* to_string(Pi1Status s);

// Certified trivial when Tietze reaches the empty presentation, nontrivial
// when the abelianization is nonzero, unknown otherwise (including when no
// admissible color pair exists).
Pi1Status pi1_status(const HomologyReport& h);

struct TValue {
  ColorSet colors;  // three colors
  int t = 0;        // g_colors - 1
};

// All ten 3-subsets of a 5-colored graph, in increasing mask order.
std::vector<TValue> t_values(const ColoredGraph& g);
int t_value(const ColoredGraph& g, ColorSet triple);

struct WitnessList {
  std::vector<CyclicPermutation> witnesses;
  bool conditional = false;  // simple connectivity was not certified
};

// Permutations eps with g_{eps_i, eps_{i+2}, eps_{i+4}} = 1 for all i.
// Throws PreconditionError when pi_1 is known to be nontrivial.
WitnessList detect_weak_simple(const ColoredGraph& g, Pi1Status pi1);

// All ten 3-residue counts equal 1.
bool detect_simple(const ColoredGraph& g);

// rho_eps - rho_{eps_i-hat} - rho_{eps_{i+2}-hat} - t_{eps_{i-1},eps_{i+1},eps_{i+3}}
// for i = 0..4. Throws StructuralError on a nonzero residual.
std::vector<HalfInteger> subgenus_residuals(const ColoredGraph& g, const CyclicPermutation& eps, Pi1Status pi1);

// Asserts that the weak-simple witness set equals the set of eps with every
// subgenus equal to rho_eps / 2; throws ConsistencyError otherwise.
bool witness_sets_agree(const ColoredGraph& g, Pi1Status pi1);

struct BoundReport {
  HalfInteger regular_genus;
  int beta2 = 0;
  int chi = 0;
  int two_chi_minus_4 = 0;
  int two_beta2 = 0;
  bool equality = false;          // rho(G) = 2 beta2
  bool exact_genus_certified = false;
  std::vector<CyclicPermutation> witnesses;
  bool conditional = false;
};

// Needs beta2 in the homology report. Throws StructuralError when
// rho(G) < 2 beta2 or when the equality clause fails.
BoundReport check_bounds(const ColoredGraph& g, const HomologyReport& h);

struct ClassificationReport {
  std::vector<TValue> t;
  WitnessList weak_simple;
  bool simple = false;
  std::optional<BoundReport> bounds;
  Pi1Status pi1 = Pi1Status::kUnknown;
  bool conditional = false;
};

// 5-colored crystallization with at most one singular color (normalized to 4).
ClassificationReport classify(const ColoredGraph& g, const HomologyReport& h);

}  // namespace gemkit
