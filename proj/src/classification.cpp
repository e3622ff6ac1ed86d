#include "gemkit/classification.hpp"

#include <algorithm>

#include "gemkit/errors.hpp"
#include "gemkit/residues.hpp"

namespace gemkit {

const char* to_string(Pi1Status s) {
  switch (s) {
    case Pi1Status::kCertifiedTrivial: return "certified-trivial";
    case Pi1Status::kUnknown: return "unknown";
    case Pi1Status::kNontrivial: return "nontrivial";
  }
  return "?";
}

Pi1Status pi1_status(const HomologyReport& h) {
  if (h.simply_connected()) return Pi1Status::kCertifiedTrivial;
  if (h.pi1_compact.available && !h.pi1_compact.abelianization.trivial()) return Pi1Status::kNontrivial;
  if (!h.h1_edge_path.trivial()) return Pi1Status::kNontrivial;
  return Pi1Status::kUnknown;
}

namespace {

void require_five(const ColoredGraph& g, const char* op) {
  if (g.n_colors() != 5) throw PreconditionError(std::string(op) + " needs a 5-colored graph");
  require_connected(g, op);
}

void refuse_nontrivial(Pi1Status pi1, const char* op) {
  if (pi1 == Pi1Status::kNontrivial)
    throw PreconditionError(std::string(op) + " needs a simply-connected manifold, but pi_1 is nontrivial");
}

ColorSet skew_triple(const CyclicPermutation& eps, int i) { return ColorSet{eps[i], eps[i + 2], eps[i + 4]}; }

bool is_witness(const ResidueTable& table, const CyclicPermutation& eps) {
  for (int i = 0; i < 5; ++i)
    if (table.count(skew_triple(eps, i)) != 1) return false;
  return true;
}

std::vector<CyclicPermutation> witnesses(const ResidueTable& table) {
  std::vector<CyclicPermutation> out;
  for (const auto& eps : CyclicPermutation::all(5))
    if (is_witness(table, eps)) out.push_back(eps);
  return out;
}

}  // namespace

std::vector<TValue> t_values(const ColoredGraph& g) {
  require_five(g, "t_values");
  const ResidueTable table(g);
  std::vector<TValue> out;
  for (std::uint32_t mask = 0; mask < 32; ++mask) {
    const ColorSet s(mask);
    if (s.size() == 3) out.push_back({s, table.count(s) - 1});
  }
  return out;
}

int t_value(const ColoredGraph& g, ColorSet triple) {
  if (triple.size() != 3) throw PreconditionError("t-values are indexed by three colors");
  return residue_count(g, triple) - 1;
}

WitnessList detect_weak_simple(const ColoredGraph& g, Pi1Status pi1) {
  require_five(g, "detect_weak_simple");
  refuse_nontrivial(pi1, "detect_weak_simple");
  return {witnesses(ResidueTable(g)), pi1 != Pi1Status::kCertifiedTrivial};
}

bool detect_simple(const ColoredGraph& g) {
  for (const auto& t : t_values(g))
    if (t.t != 0) return false;
  return true;
}

std::vector<HalfInteger> subgenus_residuals(const ColoredGraph& g, const CyclicPermutation& eps, Pi1Status pi1) {
  require_five(g, "subgenus_residuals");
  refuse_nontrivial(pi1, "subgenus_residuals");
  if (eps.size() != 5) throw PreconditionError("subgenus_residuals needs a permutation of five colors");
  const ResidueTable table(g);
  const HalfInteger rho = residue_genus_sum(table, eps.sequence());
  std::vector<HalfInteger> out;
  for (int i = 0; i < 5; ++i) {
    const HalfInteger a = subgenus_by_color(table, eps.sequence(), eps[i]);
    const HalfInteger b = subgenus_by_color(table, eps.sequence(), eps[i + 2]);
    const int t = table.count(ColorSet{eps[i - 1 + 5], eps[i + 1], eps[i + 3]}) - 1;
    out.push_back(rho - a - b - HalfInteger(t));
    if (out.back() != HalfInteger(0))
      throw StructuralError("subgenus residual " + out.back().to_string() + " at " + eps.to_string() +
                            ", i = " + std::to_string(i));
  }
  return out;
}

bool witness_sets_agree(const ColoredGraph& g, Pi1Status pi1) {
  require_five(g, "witness_sets_agree");
  refuse_nontrivial(pi1, "witness_sets_agree");
  const ResidueTable table(g);
  std::vector<CyclicPermutation> by_genus;
  for (const auto& eps : CyclicPermutation::all(5)) {
    const HalfInteger rho = residue_genus_sum(table, eps.sequence());
    bool all_half = true;
    for (int i = 0; i < 5; ++i)
      if (2 * subgenus_by_color(table, eps.sequence(), eps[i]) != rho) all_half = false;
    if (all_half) by_genus.push_back(eps);
  }
  const auto by_counts = witnesses(table);
  if (by_counts != by_genus) {
    if (pi1 == Pi1Status::kCertifiedTrivial)
      throw ConsistencyError("weak-simple witnesses differ from the permutations with all subgenera rho/2");
    return false;
  }
  return true;
}

BoundReport check_bounds(const ColoredGraph& g, const HomologyReport& h) {
  require_five(g, "check_bounds");
  const Pi1Status pi1 = pi1_status(h);
  refuse_nontrivial(pi1, "check_bounds");
  if (!h.beta2) throw PreconditionError("check_bounds needs beta_2 (at most one singular color)");
  const GenusReport genus = genus_all(g);
  BoundReport b;
  b.conditional = pi1 != Pi1Status::kCertifiedTrivial;
  b.regular_genus = genus.regular_genus;
  b.beta2 = *h.beta2;
  b.chi = h.chi;
  b.two_beta2 = 2 * b.beta2;
  b.two_chi_minus_4 = 2 * b.chi - 4;
  b.equality = b.regular_genus == HalfInteger(b.two_beta2);
  b.witnesses = witnesses(ResidueTable(g));
  if (b.conditional) return b;

  if (b.two_chi_minus_4 != b.two_beta2)
    throw StructuralError("2 chi - 4 = " + std::to_string(b.two_chi_minus_4) + " differs from 2 beta2 = " +
                          std::to_string(b.two_beta2) + " on a simply-connected manifold");
  if (b.regular_genus < HalfInteger(b.two_beta2))
    throw StructuralError("regular genus " + b.regular_genus.to_string() + " is below 2 beta2 = " +
                          std::to_string(b.two_beta2));
  if (b.equality != !b.witnesses.empty())
    throw StructuralError(b.equality ? "rho = 2 beta2 but no weak-simple witness exists"
                                     : "weak-simple witness exists but rho > 2 beta2");
  for (const auto& eps : b.witnesses) {
    const auto& entry = genus.at(eps);
    if (entry.rho != HalfInteger(b.two_beta2))
      throw StructuralError("witness " + eps.to_string() + " has rho_eps = " + entry.rho.to_string());
    for (const auto& sub : entry.subgenera)
      if (sub != HalfInteger(b.chi - 2))
        throw StructuralError("witness " + eps.to_string() + " has a subgenus " + sub.to_string() +
                              " different from chi - 2");
  }
  for (const auto& entry : genus.entries)
    if (std::find(b.witnesses.begin(), b.witnesses.end(), entry.eps) == b.witnesses.end() &&
        !(entry.rho > HalfInteger(b.two_beta2)))
      throw StructuralError("permutation " + entry.eps.to_string() + " without witness reaches 2 beta2");
  b.exact_genus_certified = b.equality;
  return b;
}

ClassificationReport classify(const ColoredGraph& g, const HomologyReport& h) {
  require_five(g, "classify");
  ClassificationReport r;
  r.pi1 = pi1_status(h);
  refuse_nontrivial(r.pi1, "classify");
  r.conditional = r.pi1 != Pi1Status::kCertifiedTrivial;
  r.t = t_values(g);
  r.simple = detect_simple(g);
  r.weak_simple = detect_weak_simple(g, r.pi1);
  if (r.simple && r.weak_simple.witnesses.empty()) throw ConsistencyError("simple graph without weak-simple witness");
  witness_sets_agree(g, r.pi1);
  if (!r.conditional) {
    for (const auto& eps : CyclicPermutation::all(5)) subgenus_residuals(g, eps, r.pi1);
    beta2_via_genus(g, h);
  }
  if (h.beta2) r.bounds = check_bounds(g, h);
  return r;
}

}  // namespace gemkit
