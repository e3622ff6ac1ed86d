#include <doctest.h>

#include "gemkit/canonical.hpp"
#include "gemkit/catalogue.hpp"
#include "gemkit/errors.hpp"
#include "gemkit/homology.hpp"
#include "gemkit/moves.hpp"
#include "gemkit/recognition.hpp"
#include "support.hpp"

using namespace gemkit;
using namespace gemkit::test;

namespace {

CanonicalCode code_of(const ColoredGraph& g) { return canonical_code(g, CodeFlavor::kColorPreserving); }

std::vector<ColoredGraph> corpus(int n_colors, int max_order) {
  std::vector<ColoredGraph> out;
  for (int p = 2; p <= max_order; p += 2)
    for (const auto& c : enumerate_codes(n_colors, p)) out.push_back(decode(c));
  return out;
}

}  // namespace

TEST_CASE("surface classification against the Euler characteristic oracle") {
  int n = 0;
  for (const auto& g : corpus(3, 8)) {
    const Surface s = classify_surface(g);
    const int faces = count_components(g, {0, 1}) + count_components(g, {1, 2}) + count_components(g, {0, 2});
    const int chi = g.order() - 3 * g.order() / 2 + faces;
    CHECK(s.orientable == two_colorable(g));
    CHECK(s.genus.twice() == 2 - chi);
    ++n;
  }
  CHECK(n == 1 + 2 + 5 + 19);
  const Surface torus = classify_surface(fixture("torus.gem"));
  CHECK(torus.genus == HalfInteger(1));
  CHECK(torus.orientable);
  const Surface rp2 = classify_surface(fixture("rp2.gem"));
  CHECK(rp2.genus.twice() == 1);
  CHECK_FALSE(rp2.orientable);
}

TEST_CASE("sphere recognition") {
  for (int n = 1; n <= 6; ++n) CHECK(recognize_sphere(ColoredGraph::standard(n)).status == SphereStatus::kCertifiedSphere);
  CHECK(recognize_sphere(fixture("torus.gem")).status == SphereStatus::kCertifiedNonsphere);
  CHECK(recognize_sphere(fixture("rp2.gem")).status == SphereStatus::kCertifiedNonsphere);

  const SphereCertificate rp3 = recognize_sphere(fixture("rp3.gem"));
  CHECK(rp3.status == SphereStatus::kCertifiedNonsphere);
  CHECK(rp3.method == SphereMethod::kHomologyObstruction);
  CHECK(rp3.detail.find("Z/2") != std::string::npos);

  // Every 4-colored graph of order <= 8 whose 3-residues are spheres and
  // whose H_1 vanishes is recognized; none is misreported.
  int spheres = 0;
  for (const auto& g : corpus(4, 8)) {
    const ManifoldClass mc = check_closed_manifold(g);
    if (mc.verdict != Verdict::kClosed3Manifold) continue;
    const SphereCertificate c = recognize_sphere(g);
    const bool h1_zero = h1_edge_path(g).trivial();
    CHECK(c.status != SphereStatus::kUnknown);
    CHECK((c.status == SphereStatus::kCertifiedSphere) == h1_zero);
    if (c.status == SphereStatus::kCertifiedSphere) ++spheres;
  }
  CHECK(spheres > 0);
}

TEST_CASE("manifold verdicts") {
  CHECK(check_closed_manifold(fixture("sigma5.gem")).verdict == Verdict::kClosed4Manifold);
  CHECK(check_closed_manifold(fixture("cp2.gem")).verdict == Verdict::kClosed4Manifold);
  CHECK(check_closed_manifold(fixture("rp3.gem")).verdict == Verdict::kClosed3Manifold);
  const ManifoldClass t = check_closed_manifold(fixture("torus.gem"));
  CHECK(t.verdict == Verdict::kSurface);
  REQUIRE(t.surface);
  CHECK(t.surface->genus == HalfInteger(1));

  const ManifoldClass bad = check_closed_manifold(fixture("genus1_residue.gem"));
  CHECK(bad.verdict == Verdict::kNotAManifoldComplex);
  bool certified = false;
  for (const auto& c : bad.certificates)
    if (c.key.size() == 3 && c.sphere.status == SphereStatus::kCertifiedNonsphere) certified = true;
  CHECK(certified);

  CHECK_THROWS_AS(check_closed_manifold(ColoredGraph::standard(6)), PreconditionError);
  const CrystallizationCheck cc = is_crystallization(fixture("cp2.gem"));
  CHECK(cc.crystallization);
  CHECK(cc.hat_counts == std::vector<int>{1, 1, 1, 1, 1});
}

TEST_CASE("singular color normalization") {
  int seen = 0;
  for (const auto& g : corpus(5, 8)) {
    const ManifoldClass mc = check_closed_manifold(g);
    if (mc.verdict != Verdict::kSingular4Manifold || mc.singular_colors.size() != 1) continue;
    const Normalized nz = normalize_singular_color(g, mc);
    CHECK(nz.singular_colors == ColorSet{4});
    CHECK(nz.graph == g.recolored(nz.color_perm));
    const ManifoldClass again = check_closed_manifold(nz.graph);
    CHECK(again.singular_colors == std::vector<Color>{4});
    ++seen;
  }
  CHECK(seen > 0);
}

TEST_CASE("dipole insertion and elimination round trip") {
  std::mt19937 rng(11);
  for (const char* f : {"sigma5.gem", "cp2.gem", "rp3.gem", "torus.gem", "rp2.gem"}) {
    const ColoredGraph g = fixture(f);
    const int n = g.n_colors();
    for (int trial = 0; trial < 50; ++trial) {
      std::uint32_t mask = 0;
      while (mask == 0 || std::popcount(mask) == n) mask = rng() % (1u << n);
      const ColorSet colors(mask);
      const Vertex a = static_cast<Vertex>(rng() % g.order());
      const ColoredGraph h = add_dipole(g, colors, a);
      CHECK(h.order() == g.order() + 2);
      const auto d = dipole_at(h, g.order(), g.order() + 1);
      REQUIRE(d);
      CHECK(d->colors == colors);
      CHECK(d->properness == Properness::kProper);
      CHECK(eliminate_dipole(h, g.order(), g.order() + 1) == g);
      CHECK(euler_characteristic(h) == euler_characteristic(g));
      CHECK(h1_edge_path(h) == h1_edge_path(g));
    }
  }
  CHECK_THROWS_AS(eliminate_dipole(ColoredGraph::standard(5), 0, 1), PreconditionError);
  CHECK(find_dipoles(ColoredGraph::standard(5)).empty());
}

TEST_CASE("greedy reduction") {
  const ColoredGraph cp2 = fixture("cp2.gem");
  const ColoredGraph bigger = add_dipole(add_dipole(cp2, ColorSet{0, 2}, 3), ColorSet{1}, 5);
  const Reduction r = reduce(bigger);
  CHECK(r.eliminated.size() == 2);
  CHECK(code_of(r.graph) == code_of(cp2));
  CHECK(reduce(cp2).eliminated.empty());
  // A proper 1-dipole between distinct 4-residues: sigma4 + dipole.
  const Reduction s = reduce(add_dipole(ColoredGraph::standard(4), ColorSet{0}, 0));
  CHECK(s.graph.order() == 2);
}

TEST_CASE("connected sum arithmetic") {
  const ColoredGraph cp2 = fixture("cp2.gem");
  const ColoredGraph s = connected_sum(cp2, cp2);
  CHECK(s.order() == 14);
  CHECK(euler_characteristic(s) == 4);
  const auto hs = simplicial_homology(s);
  CHECK(hs[2].to_string() == "Z^2");
  for (const auto& eps : CyclicPermutation::all(5)) CHECK(genus_wrt(s, eps) == HalfInteger(4));

  const ColoredGraph rp3 = fixture("rp3.gem");
  const ColoredGraph r2 = connected_sum(rp3, rp3);
  CHECK(h1_edge_path(r2).to_string() == "Z/2 + Z/2");
  CHECK(euler_characteristic(r2) == 0);
  CHECK_THROWS_AS(connected_sum(cp2, cp2, 0, 0), PreconditionError);
  CHECK_THROWS_AS(connected_sum(cp2, rp3), PreconditionError);

  // Regular genus is additive with respect to every permutation.
  const auto graphs = corpus(4, 6);
  for (std::size_t a = 0; a < graphs.size(); a += 7)
    for (std::size_t b = 0; b < graphs.size(); b += 11) {
      const ColoredGraph sum = connected_sum(graphs[a], graphs[b]);
      CHECK(sum.order() == graphs[a].order() + graphs[b].order() - 2);
      for (const auto& eps : CyclicPermutation::all(4))
        CHECK(genus_wrt(sum, eps) == genus_wrt(graphs[a], eps) + genus_wrt(graphs[b], eps));
    }
}
