#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gemkit/colored_graph.hpp"
#include "gemkit/genus.hpp"
#include "gemkit/smith.hpp"

namespace gemkit {

enum class SphereStatus { kCertifiedSphere, kCertifiedNonsphere, kUnknown };
enum class SphereMethod { kNone, kGenusZero, kDipoleReduction, kHomologyObstruction, kSurfaceGenus };

const char* to_string(SphereStatus s);
const char* to_string(SphereMethod m);

struct SphereCertificate {
  SphereStatus status = SphereStatus::kUnknown;
  SphereMethod method = SphereMethod::kNone;
  std::string detail;  // witness permutation, reduced order, or obstruction group
};

struct Surface {
  HalfInteger genus;  // half-integer for non-orientable surfaces (RP2: 0.5)
  bool orientable = true;
};

// Connected 3-colored graph -> its surface.
Surface classify_surface(const ColoredGraph& g);

// Connected 4-colored graph whose 3-residues are all spheres. Tries a
// genus-zero permutation, then dipole reduction to order 2, then nontrivial
// H_1 of the reduced graph.
SphereCertificate recognize_sphere3(const ColoredGraph& g);

// Any connected graph with 1..5 colors: residues with at most two colors are
// spheres, 3-colored graphs are decided by genus, 4-colored graphs go through
// recognize_sphere3. Five or more colors: genus zero or reduction to order 2,
// otherwise unknown.
SphereCertificate recognize_sphere(const ColoredGraph& g);

enum class Verdict {
  kSurface,
  kClosed3Manifold,
  kSingular3Residue,
  kClosed4Manifold,
  kSingular4Manifold,
  kNotAManifoldComplex,
};
const char* to_string(Verdict v);

struct ResidueCertificate {
  ColorSet key;
  int index = 0;        // residue index (numbered by first vertex)
  int order = 0;
  SphereCertificate sphere;
};

struct ManifoldClass {
  Verdict verdict = Verdict::kNotAManifoldComplex;
  std::vector<Color> singular_colors;
  bool conditional = false;  // some vertex link could not be recognized
  std::optional<Surface> surface;
  std::vector<ResidueCertificate> certificates;  // vertex links, then failing lower residues
};

// Dimension 2, 3, 4 only (3 to 5 colors); throws PreconditionError otherwise.
ManifoldClass check_closed_manifold(const ColoredGraph& g);

struct CrystallizationCheck {
  bool crystallization = false;
  std::vector<int> hat_counts;  // g_{c-hat} per color
};
CrystallizationCheck is_crystallization(const ColoredGraph& g);

// Recolors so that a unique singular color becomes the last color. Returns
// the color permutation used (identity when nothing moves).
struct Normalized {
  ColoredGraph graph;
  std::vector<Color> color_perm;  // old color c is new color color_perm[c]
  ColorSet singular_colors;       // in new colors
};
Normalized normalize_singular_color(const ColoredGraph& g, const ManifoldClass& mc);

}  // namespace gemkit
