#include "gemkit/recognition.hpp"

#include <algorithm>
#include <numeric>

#include "gemkit/errors.hpp"
#include "gemkit/homology.hpp"
#include "gemkit/moves.hpp"
#include "gemkit/residues.hpp"

namespace gemkit {

const char* to_string(SphereStatus s) {
  switch (s) {
    case SphereStatus::kCertifiedSphere: return "certified-sphere";
    case SphereStatus::kCertifiedNonsphere: return "certified-nonsphere";
    case SphereStatus::kUnknown: return "unknown";
  }
  return "?";
}

const char* to_string(SphereMethod m) {
  switch (m) {
    case SphereMethod::kNone: return "none";
    case SphereMethod::kGenusZero: return "genus-zero";
    case SphereMethod::kDipoleReduction: return "dipole-reduction-to-order-2";
    case SphereMethod::kHomologyObstruction: return "homology-obstruction";
    case SphereMethod::kSurfaceGenus: return "surface-genus";
  }
  return "?";
}

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::kSurface: return "surface";
    case Verdict::kClosed3Manifold: return "closed-3-manifold";
    case Verdict::kSingular3Residue: return "singular-3-residue";
    case Verdict::kClosed4Manifold: return "closed-4-manifold";
    case Verdict::kSingular4Manifold: return "singular-4-manifold";
    case Verdict::kNotAManifoldComplex: return "not-a-manifold-complex";
  }
  return "?";
}

Surface classify_surface(const ColoredGraph& g) {
  if (g.n_colors() != 3) throw PreconditionError("classify_surface needs a 3-colored graph");
  require_connected(g, "classify_surface");
  return Surface{genus_wrt(g, CyclicPermutation({0, 1, 2})), is_bipartite(g)};
}

namespace {

std::string surface_name(const Surface& s) {
  return (s.orientable ? "orientable genus " : "non-orientable genus ") + s.genus.to_string();
}

// First 3-residue of positive genus, as (key, residue), or nullopt.
std::optional<std::pair<ColorSet, Residue>> bad_triple(const ColoredGraph& g, const ResidueTable& table) {
  for (std::uint32_t mask = 0; mask < (1u << g.n_colors()); ++mask) {
    const ColorSet key(mask);
    if (key.size() != 3) continue;
    if (residue_genus_sum(table, key.colors()) == HalfInteger(0)) continue;
    for (auto& r : extract_residues(g, key))
      if (classify_surface(r.subgraph).genus != HalfInteger(0)) return std::make_pair(key, std::move(r));
  }
  return std::nullopt;
}

SphereCertificate genus_zero(const ColoredGraph& g) {
  const ResidueTable table(g);
  for (const auto& eps : CyclicPermutation::all(g.n_colors()))
    if (residue_genus_sum(table, eps.sequence()) == HalfInteger(0))
      return {SphereStatus::kCertifiedSphere, SphereMethod::kGenusZero, eps.to_string()};
  return {};
}

SphereCertificate reduction_or_homology(const ColoredGraph& g) {
  const auto r = reduce(g);
  if (r.graph.order() == 2)
    return {SphereStatus::kCertifiedSphere, SphereMethod::kDipoleReduction,
            std::to_string(r.eliminated.size()) + " eliminations"};
  const auto h = simplicial_homology(r.graph);
  for (int k = 1; k + 1 < static_cast<int>(h.size()); ++k)
    if (!h[k].trivial())
      return {SphereStatus::kCertifiedNonsphere, SphereMethod::kHomologyObstruction,
              "H" + std::to_string(k) + " = " + h[k].to_string()};
  return {SphereStatus::kUnknown, SphereMethod::kNone, "reduced to order " + std::to_string(r.graph.order())};
}

}  // namespace

SphereCertificate recognize_sphere3(const ColoredGraph& g) {
  if (g.n_colors() != 4) throw PreconditionError("recognize_sphere3 needs a 4-colored graph");
  require_connected(g, "recognize_sphere3");
  const ResidueTable table(g);
  if (auto bad = bad_triple(g, table))
    throw PreconditionError("recognize_sphere3: residue on " + bad->first.to_string() + " is a surface of " +
                            surface_name(classify_surface(bad->second.subgraph)));
  if (auto c = genus_zero(g); c.status == SphereStatus::kCertifiedSphere) return c;
  const auto r = reduce(g);
  if (r.graph.order() == 2)
    return {SphereStatus::kCertifiedSphere, SphereMethod::kDipoleReduction,
            std::to_string(r.eliminated.size()) + " eliminations"};
  const auto h1 = h1_edge_path(r.graph);
  if (!h1.trivial()) return {SphereStatus::kCertifiedNonsphere, SphereMethod::kHomologyObstruction, "H1 = " + h1.to_string()};
  return {SphereStatus::kUnknown, SphereMethod::kNone, "reduced to order " + std::to_string(r.graph.order())};
}

SphereCertificate recognize_sphere(const ColoredGraph& g) {
  require_connected(g, "recognize_sphere");
  if (g.n_colors() <= 2) return {SphereStatus::kCertifiedSphere, SphereMethod::kGenusZero, "at most two colors"};
  if (g.n_colors() == 3) {
    const Surface s = classify_surface(g);
    if (s.orientable && s.genus == HalfInteger(0))
      return {SphereStatus::kCertifiedSphere, SphereMethod::kGenusZero, "(0,1,2)"};
    return {SphereStatus::kCertifiedNonsphere, SphereMethod::kSurfaceGenus, surface_name(s)};
  }
  if (g.n_colors() == 4) {
    const ResidueTable table(g);
    if (auto bad = bad_triple(g, table))
      return {SphereStatus::kCertifiedNonsphere, SphereMethod::kSurfaceGenus,
              "residue on " + bad->first.to_string() + " is a surface of " +
                  surface_name(classify_surface(bad->second.subgraph))};
    return recognize_sphere3(g);
  }
  if (auto c = genus_zero(g); c.status == SphereStatus::kCertifiedSphere) return c;
  return reduction_or_homology(g);
}

ManifoldClass check_closed_manifold(const ColoredGraph& g) {
  require_connected(g, "check_closed_manifold");
  const int n_colors = g.n_colors();
  if (n_colors < 3 || n_colors > 5) throw PreconditionError("manifold recognition supports 3 to 5 colors");
  ManifoldClass mc;
  if (n_colors == 3) {
    mc.verdict = Verdict::kSurface;
    mc.surface = classify_surface(g);
    return mc;
  }
  const ResidueTable table(g);
  if (n_colors == 5) {
    if (auto bad = bad_triple(g, table)) {
      mc.verdict = Verdict::kNotAManifoldComplex;
      const auto& [key, residue] = *bad;
      mc.certificates.push_back({key, table.component(key, residue.vertices.front()), residue.subgraph.order(),
                                 {SphereStatus::kCertifiedNonsphere, SphereMethod::kSurfaceGenus,
                                  surface_name(classify_surface(residue.subgraph))}});
      return mc;
    }
  }
  ColorSet singular;
  for (Color c = 0; c < n_colors; ++c) {
    const ColorSet key = ColorSet::single(c).complement(n_colors);
    const auto residues = extract_residues(g, key);
    for (int idx = 0; idx < static_cast<int>(residues.size()); ++idx) {
      const auto& sub = residues[idx].subgraph;
      const SphereCertificate cert = n_colors == 4 ? recognize_sphere(sub) : recognize_sphere3(sub);
      if (cert.status == SphereStatus::kCertifiedNonsphere) singular = singular.with(c);
      if (cert.status == SphereStatus::kUnknown) mc.conditional = true;
      mc.certificates.push_back({key, idx, sub.order(), cert});
    }
  }
  mc.singular_colors = singular.colors();
  if (n_colors == 4) mc.verdict = singular.size() ? Verdict::kSingular3Residue : Verdict::kClosed3Manifold;
  else mc.verdict = singular.size() ? Verdict::kSingular4Manifold : Verdict::kClosed4Manifold;
  return mc;
}

CrystallizationCheck is_crystallization(const ColoredGraph& g) {
  require_connected(g, "is_crystallization");
  CrystallizationCheck out;
  out.crystallization = true;
  for (Color c = 0; c < g.n_colors(); ++c) {
    out.hat_counts.push_back(residue_count(g, ColorSet::single(c).complement(g.n_colors())));
    if (out.hat_counts.back() != 1) out.crystallization = false;
  }
  return out;
}

Normalized normalize_singular_color(const ColoredGraph& g, const ManifoldClass& mc) {
  const int n_colors = g.n_colors();
  std::vector<Color> perm(n_colors);
  std::iota(perm.begin(), perm.end(), 0);
  if (mc.singular_colors.size() == 1) std::swap(perm[mc.singular_colors.front()], perm[n_colors - 1]);
  ColorSet singular;
  for (Color c : mc.singular_colors) singular = singular.with(perm[c]);
  return {g.recolored(perm), perm, singular};
}

}  // namespace gemkit
