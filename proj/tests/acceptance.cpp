#include <chrono>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

#include "gemkit/canonical.hpp"
#include "gemkit/catalogue.hpp"
#include "gemkit/cli.hpp"
#include "gemkit/errors.hpp"
#include "gemkit/gem_io.hpp"
#include "gemkit/moves.hpp"
#include "gemkit/report.hpp"

using namespace gemkit;

namespace {

using Clock = std::chrono::steady_clock;

ColoredGraph fixture(const std::string& name) { return read_gem_file(std::string(GEMKIT_FIXTURES) + "/" + name); }

double seconds_since(Clock::time_point t) { return std::chrono::duration<double>(Clock::now() - t).count(); }

struct Outcome {
  bool pass = true;
  std::ostringstream detail;
  void require(bool ok, const std::string& what) {
    if (!ok) {
      if (!pass) detail << "; ";
      pass = false;
      detail << "failed: " << what;
    }
  }
};

std::vector<int> profile_of(const HandleProfile& p) { return {p.h0, p.h1, p.h2, p.h3, p.h4}; }

// Best witness profile: special witnesses first, then smallest t.
const HandleProfile* best_profile(const Analysis& a) {
  const HandleProfile* best = nullptr;
  for (std::size_t n = 0; n < a.witnesses.size(); ++n) {
    const HandleProfile& p = a.profiles[n];
    if (!best || (a.witnesses[n].kind == WitnessKind::kSpecial && p.t <= best->t)) best = &p;
  }
  return best;
}

std::vector<ColoredGraph> manifold_corpus(int max_order) {
  std::vector<ColoredGraph> out;
  for (int n = 3; n <= 5; ++n)
    for (int p = 2; p <= max_order; p += 2)
      for (const auto& code : enumerate_codes(n, p, 4)) {
        ColoredGraph g = decode(code);
        if (check_closed_manifold(g).verdict != Verdict::kNotAManifoldComplex) out.push_back(std::move(g));
      }
  return out;
}

ColoredGraph shuffled(const ColoredGraph& g, std::mt19937& rng) {
  std::vector<Vertex> vp(g.order());
  std::iota(vp.begin(), vp.end(), 0);
  std::shuffle(vp.begin(), vp.end(), rng);
  std::vector<Color> cp(g.n_colors());
  std::iota(cp.begin(), cp.end(), 0);
  std::shuffle(cp.begin(), cp.end(), rng);
  return g.relabeled(vp).recolored(cp);
}

ColoredGraph random_dipole(const ColoredGraph& g, std::mt19937& rng) {
  const int n = g.n_colors();
  std::uint32_t mask = 0;
  while (mask == 0 || std::popcount(mask) == n) mask = rng() % (1u << n);
  return add_dipole(g, ColorSet(mask), static_cast<Vertex>(rng() % g.order()));
}

Outcome criterion1() {
  Outcome o;
  const auto t0 = Clock::now();
  const Analysis a = analyze(fixture("sigma5.gem"));
  o.require(a.manifold && a.manifold->verdict == Verdict::kClosed4Manifold, "closed 4-manifold verdict");
  o.require(a.crystallization.crystallization, "crystallization");
  o.require(a.homology && a.homology->simply_connected(), "simply connected");
  o.require(a.genus.entries.size() == 12, "12 permutations");
  for (const auto& e : a.genus.entries) o.require(e.rho == HalfInteger(0), "rho_eps = 0 at " + e.eps.to_string());
  o.require(a.homology && a.homology->chi == 2, "chi = 2");
  o.require(a.homology && a.homology->beta1_singular == 0 && a.homology->beta1_compact == 0, "beta1 = 0");
  o.require(a.homology && a.homology->beta2 == 0, "beta2 = 0");
  o.require(a.classification && a.classification->simple, "simple");
  o.require(a.classification && a.classification->weak_simple.witnesses.size() == 12, "weak simple at every eps");
  const HandleProfile* p = best_profile(a);
  o.require(p && profile_of(*p) == std::vector<int>{1, 0, 0, 0, 1}, "profile (1,0,0,0,1)");
  o.require(p && p->link.undotted == 0 && p->link.dotted == 0, "empty framed link");
  const double s = seconds_since(t0);
  o.require(s < 1.0, "runtime < 1 s");
  o.detail << (o.pass ? "" : "; ") << "runtime " << s << " s";
  return o;
}

Outcome criterion2() {
  Outcome o;
  const auto t0 = Clock::now();
  EnumerationOptions opt;
  opt.n_colors = 5;
  opt.max_order = 8;
  opt.filters = {Filter::kCrystallization};
  opt.jobs = 4;
  const EnumerationResult res = enumerate(opt);
  const VerifyReport rep = verify_corpus(res.records, 4);
  o.require(res.complete, "enumeration complete");
  o.require(rep.ok(), "zero violations");
  int violations = 0;
  for (const auto& p : rep.properties) {
    violations += static_cast<int>(p.failures.size());
    o.require(p.checked > 0, "property " + p.name + " exercised");
    if (!p.failures.empty()) o.detail << "; " << p.name << ": " << p.failures.front();
  }
  const double s = seconds_since(t0);
  o.require(s <= 600, "runtime <= 10 min");
  o.detail << (o.pass ? "" : "; ") << res.records.size() << " crystallizations, " << violations << " violations";
  for (const auto& p : rep.properties) o.detail << ", " << p.name << " " << p.passed << "/" << p.checked;
  o.detail << ", " << s << " s";
  return o;
}

Outcome criterion3() {
  Outcome o;
  const ColoredGraph g = fixture("cp2.gem");
  const Analysis a = analyze(g);
  o.require(g.order() == 8, "order 8");
  o.require(a.manifold && a.manifold->verdict == Verdict::kClosed4Manifold && !a.manifold->conditional,
            "certified closed 4-manifold");
  o.require(a.sphere && a.sphere->status == SphereStatus::kCertifiedNonsphere, "not a sphere");
  o.require(a.homology && a.homology->beta2 == 1, "beta2 = 1");
  o.require(a.homology && a.homology->chi == 3, "chi = 3");
  o.require(a.homology && a.homology->simply_connected(), "presentation trivializes");
  o.require(a.beta2_via_genus == 1, "beta2 from genera = 1");
  o.require(a.classification && a.classification->simple, "simple");
  o.require(a.genus.regular_genus == HalfInteger(2), "regular genus 2");
  o.require(a.classification && a.classification->bounds && a.classification->bounds->equality &&
                a.classification->bounds->exact_genus_certified,
            "rho = 2 beta2 certified");
  const HandleProfile* p = best_profile(a);
  o.require(p && profile_of(*p) == std::vector<int>{1, 0, 1, 0, 1}, "profile (1,0,1,0,1)");
  o.require(p && p->link.undotted == 1 && p->link.dotted == 0, "one undotted component");
  o.detail << (o.pass ? "" : "; ") << "rho 2, beta2 1, chi 3, profile (1,0,1,0,1), 1 undotted component";
  return o;
}

Outcome criterion4() {
  Outcome o;
  const auto t0 = Clock::now();
  const ColoredGraph cp2 = fixture("cp2.gem");
  ColoredGraph g = cp2;
  for (int k = 1; k <= 4; ++k) {
    if (k > 1) g = connected_sum(g, cp2);
    const Analysis a = analyze(g);
    const std::string tag = "k=" + std::to_string(k) + ": ";
    o.require(g.order() == 6 * k + 2, tag + "order");
    o.require(a.homology && a.homology->beta2 == k, tag + "beta2");
    bool witness_rho = a.classification && !a.classification->weak_simple.witnesses.empty();
    if (a.classification)
      for (const auto& eps : a.classification->weak_simple.witnesses)
        witness_rho = witness_rho && a.genus.at(eps).rho == HalfInteger(2 * k);
    o.require(witness_rho, tag + "rho at witness = 2k");
    o.require(a.genus.regular_genus == HalfInteger(2 * k), tag + "regular genus 2k");
    const HandleProfile* p = best_profile(a);
    o.require(p && profile_of(*p) == std::vector<int>{1, 0, k, 0, 1}, tag + "profile (1,0,k,0,1)");
    o.detail << (k > 1 ? ", " : "") << "k=" << k << " order " << g.order() << " beta2 "
             << (a.homology && a.homology->beta2 ? *a.homology->beta2 : -1) << " rho "
             << a.genus.regular_genus.to_string() << " h2 " << (p ? p->h2 : -1);
  }
  const double s = seconds_since(t0);
  o.require(s < 30, "runtime < 30 s");
  o.detail << ", " << s << " s";
  return o;
}

Outcome criterion5(const std::vector<ColoredGraph>& corpus) {
  Outcome o;
  std::mt19937 rng(20240501);
  int compared = 0, disagreements = 0, skipped = 0;
  while (compared < 1000) {
    ColoredGraph g = shuffled(corpus[rng() % corpus.size()], rng);
    for (int d = static_cast<int>(rng() % 3); d > 0; --d) g = random_dipole(g, rng);
    const ManifoldClass mc = check_closed_manifold(g);
    ColorSet singular;
    for (Color c : mc.singular_colors) singular = singular.with(c);
    const Pi1Summary pi = pi1_summary(g, PresentationFlavor::kSingularManifold, singular);
    if (!pi.available) {
      ++skipped;
      continue;
    }
    ++compared;
    if (pi.abelianization != h1_edge_path(g)) {
      if (disagreements++ == 0) o.detail << "first disagreement " << canonical_code(g, CodeFlavor::kColorPreserving).hex() << "; ";
    }
  }
  o.require(disagreements == 0, "zero disagreements");
  o.detail << compared << " graphs compared, " << disagreements << " disagreements, " << skipped << " without admissible pair";
  return o;
}

Outcome criterion6(const std::vector<ColoredGraph>& corpus) {
  Outcome o;
  std::vector<ColoredGraph> bases;
  for (const auto& g : corpus)
    if (find_dipoles(g).empty()) bases.push_back(g);
  std::mt19937 rng(99);
  int failures = 0;
  for (int cycle = 0; cycle < 1000; ++cycle) {
    const ColoredGraph base = shuffled(bases[rng() % bases.size()], rng);
    const CanonicalCode want = canonical_code(base, CodeFlavor::kColorPreserving);
    const int chi = euler_characteristic(base);
    const AbelianGroup h1 = h1_edge_path(base);
    ColoredGraph g = base;
    for (int d = 1 + static_cast<int>(rng() % 3); d > 0; --d) g = random_dipole(g, rng);
    const Reduction red = reduce(g);
    bool ok = canonical_code(red.graph, CodeFlavor::kColorPreserving) == want;
    ColoredGraph step = g;
    for (const auto& dp : red.eliminated) {
      step = eliminate_dipole(step, dp.x, dp.y);
      ok = ok && euler_characteristic(step) == chi && h1_edge_path(step) == h1;
    }
    if (!ok && failures++ == 0) o.detail << "first failure at cycle " << cycle << "; ";
  }
  o.require(failures == 0, "zero failures");
  o.detail << "1000 cycles over " << bases.size() << " dipole-free bases, " << failures << " failures";
  return o;
}

Outcome criterion7() {
  Outcome o;
  const auto dir = std::filesystem::temp_directory_path() / "gemkit-acceptance";
  std::filesystem::create_directories(dir);
  for (int n = 3; n <= 5; ++n) {
    std::string outputs[2];
    for (int r = 0; r < 2; ++r) {
      const std::string jobs = r == 0 ? "1" : "4";
      const auto path = dir / ("n" + std::to_string(n) + "-j" + jobs + ".jsonl");
      std::filesystem::remove(path.string() + ".meta");
      std::ostringstream out, err;
      const int code = run_cli({"generate", "--n-colors", std::to_string(n), "--max-order", "8", "--jobs", jobs, "-o",
                                path.string()},
                               out, err);
      o.require(code == kExitOk, "generate exit code for n=" + std::to_string(n));
      std::ifstream in(path, std::ios::binary);
      std::ostringstream ss;
      ss << in.rdbuf();
      outputs[r] = ss.str();
    }
    o.require(!outputs[0].empty() && outputs[0] == outputs[1], "identical catalogues for n=" + std::to_string(n));
    o.detail << (n > 3 ? ", " : "") << "n=" << n << " " << std::count(outputs[0].begin(), outputs[0].end(), '\n')
             << " records";
  }
  return o;
}

Outcome criterion8() {
  Outcome o;
  const ManifoldClass bad = check_closed_manifold(fixture("genus1_residue.gem"));
  o.require(bad.verdict == Verdict::kNotAManifoldComplex, "genus-1 residue rejected");
  const SphereCertificate rp3 = recognize_sphere(fixture("rp3.gem"));
  o.require(rp3.status == SphereStatus::kCertifiedNonsphere, "RP3 certified nonsphere");
  o.require(rp3.method == SphereMethod::kHomologyObstruction && rp3.detail.find("Z/2") != std::string::npos,
            "obstruction H1 = Z/2");
  o.detail << (o.pass ? "" : "; ") << "genus-1 residue: " << to_string(bad.verdict) << ", RP3: " << to_string(rp3.status)
           << " (" << rp3.detail << ")";
  return o;
}

}  // namespace

int main() {
  const char* names[] = {"sigma5 suite", "formula-consistency sweep", "CP2 fixture", "connected-sum scaling",
                         "dual-oracle homology", "dipole round trips", "enumeration determinism", "negative controls"};
  std::vector<ColoredGraph> corpus;
  std::vector<std::function<Outcome()>> runs = {
      criterion1, criterion2, criterion3, criterion4,
      [&] {
        if (corpus.empty()) corpus = manifold_corpus(8);
        return criterion5(corpus);
      },
      [&] {
        if (corpus.empty()) corpus = manifold_corpus(8);
        return criterion6(corpus);
      },
      criterion7, criterion8};
  int failed = 0;
  for (std::size_t i = 0; i < runs.size(); ++i) {
    Outcome o;
    try {
      o = runs[i]();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail << "exception: " << e.what();
    }
    if (!o.pass) ++failed;
    std::cout << "criterion " << i + 1 << " " << (o.pass ? "PASS" : "FAIL") << " " << names[i] << ": " << o.detail.str()
              << std::endl;
  }
  std::cout << (failed ? "acceptance FAILED" : "acceptance PASSED") << " (" << 8 - failed << "/8)" << std::endl;
  return failed ? 1 : 0;
}
