#include "gemkit/report.hpp"

#include <sstream>

#include "gemkit/errors.hpp"

namespace gemkit {

const char* version() { return GEMKIT_VERSION; }

Analysis analyze(const ColoredGraph& g, const AnalysisOptions& options) {
  require_connected(g, "analyze");
  Analysis a{g, canonical_code(g, CodeFlavor::kUpToColorPermutation)};
  a.bipartite = is_bipartite(g);
  a.genus = genus_all(g);
  a.crystallization = is_crystallization(g);
  a.color_perm.resize(g.n_colors());
  for (Color c = 0; c < g.n_colors(); ++c) a.color_perm[c] = c;

  const std::string five_only = "needs a 5-colored graph";
  if (g.n_colors() < 3 || g.n_colors() > 5) {
    a.manifold_skipped = "manifold recognition supports 3 to 5 colors";
    a.homology_skipped = a.classification_skipped = a.handles_skipped = a.manifold_skipped;
    return a;
  }
  a.manifold = check_closed_manifold(g);
  if (a.manifold->verdict == Verdict::kNotAManifoldComplex) {
    a.homology_skipped = a.classification_skipped = a.handles_skipped = "not a manifold complex";
    return a;
  }
  const Normalized norm = normalize_singular_color(g, *a.manifold);
  a.color_perm = norm.color_perm;
  a.normalized = norm.graph;
  a.singular_colors = norm.singular_colors;
  a.outside_scope = norm.singular_colors.size() >= 2;
  const ColoredGraph& ng = norm.graph;
  a.homology = homology(ng, norm.singular_colors);

  if (options.sphere && norm.singular_colors.size() == 0) a.sphere = recognize_sphere(g);

  if (g.n_colors() != 5) {
    a.classification_skipped = a.handles_skipped = five_only;
    return a;
  }
  if (!a.crystallization.crystallization) {
    a.classification_skipped = a.handles_skipped = "not a crystallization";
    return a;
  }
  if (a.outside_scope) {
    a.classification_skipped = a.handles_skipped = "outside scope: two or more singular colors";
    return a;
  }
  try {
    a.classification = classify(ng, *a.homology);
  } catch (const PreconditionError& e) {
    a.classification_refused = true;
    a.classification_skipped = e.what();
  }
  if (a.homology->simply_connected()) a.beta2_via_genus = beta2_via_genus(ng, *a.homology);
  a.witnesses = find_hypothesis_witnesses(ng, norm.singular_colors);
  for (const auto& w : a.witnesses) {
    a.profiles.push_back(handle_profile(ng, w, *a.homology));
    a.collapses.push_back(collapse_2skeleton(ng, w));
  }
  return a;
}

bool is_manifold(const Analysis& a) {
  return a.manifold && a.manifold->verdict != Verdict::kNotAManifoldComplex && a.manifold->singular_colors.size() <= 1;
}

Json to_json(const HalfInteger& h) {
  if (h.is_integer()) return h.integer();
  return h.twice() / 2.0;
}

Json to_json(const AbelianGroup& g) { return g.to_string(); }

namespace {

Json colors_json(const std::vector<Color>& cs) {
  Json j = Json::array();
  for (Color c : cs) j.push_back(c);
  return j;
}

Json sphere_json(const SphereCertificate& c) {
  return Json{{"status", to_string(c.status)}, {"method", to_string(c.method)}, {"detail", c.detail}};
}

Json pi1_json(const Pi1Summary& p) {
  Json j;
  j["available"] = p.available;
  if (!p.available) return j;
  j["pair"] = {p.i, p.j};
  j["abelianization"] = to_json(p.abelianization);
  j["certified_trivial"] = p.certified_trivial;
  j["rank_lower_bound"] = p.rank_lower_bound;
  j["tietze_moves"] = p.tietze_moves;
  return j;
}

Json skipped(const std::string& reason) { return Json{{"skipped", reason}}; }

}  // namespace

Json to_json(const ManifoldClass& mc) {
  Json j;
  j["verdict"] = to_string(mc.verdict);
  j["singular_colors"] = colors_json(mc.singular_colors);
  j["conditional"] = mc.conditional;
  if (mc.surface) j["surface"] = {{"genus", to_json(mc.surface->genus)}, {"orientable", mc.surface->orientable}};
  Json certs = Json::array();
  for (const auto& c : mc.certificates) {
    Json e{{"residue", c.key.to_string()}, {"index", c.index}, {"order", c.order}};
    e.update(sphere_json(c.sphere));
    certs.push_back(e);
  }
  j["certificates"] = certs;
  return j;
}

Json to_json(const GenusReport& r) {
  Json j;
  Json rho = Json::object(), sub = Json::object();
  for (const auto& e : r.entries) {
    rho[e.eps.to_string()] = to_json(e.rho);
    Json s = Json::array();
    for (const auto& x : e.subgenera) s.push_back(to_json(x));
    sub[e.eps.to_string()] = s;
  }
  j["rho"] = rho;
  j["regular_genus"] = to_json(r.regular_genus);
  Json mins = Json::array();
  for (const auto& e : r.minimizers()) mins.push_back(e.to_string());
  j["minimizers"] = mins;
  j["subgenera"] = sub;
  j["orientable"] = r.orientable;
  j["contracted"] = r.contracted;
  return j;
}

Json to_json(const HomologyReport& h) {
  Json j;
  j["chi"] = h.chi;
  j["chi_via_genus"] = h.chi_via_genus ? Json(*h.chi_via_genus) : Json(nullptr);
  Json groups = Json::array();
  for (const auto& g : h.simplicial) groups.push_back(to_json(g));
  j["simplicial"] = groups;
  j["h1_edge_path"] = to_json(h.h1_edge_path);
  j["pi1_compact"] = pi1_json(h.pi1_compact);
  j["pi1_singular"] = pi1_json(h.pi1_singular);
  j["beta1_compact"] = h.beta1_compact;
  j["beta1_singular"] = h.beta1_singular;
  j["beta2"] = h.beta2 ? Json(*h.beta2) : Json(nullptr);
  Json torsion = Json::array();
  for (const auto& t : h.h1_edge_path.torsion) torsion.push_back(t.get_str());
  j["h1_torsion"] = torsion;
  j["simply_connected"] = h.simply_connected();
  j["outside_scope"] = h.outside_scope;
  return j;
}

Json to_json(const ClassificationReport& c) {
  Json j;
  j["pi1"] = to_string(c.pi1);
  j["conditional"] = c.conditional;
  Json t = Json::object();
  for (const auto& x : c.t) t[x.colors.to_string()] = x.t;
  j["t"] = t;
  j["simple"] = c.simple;
  Json w = Json::array();
  for (const auto& e : c.weak_simple.witnesses) w.push_back(e.to_string());
  j["weak_simple_witnesses"] = w;
  j["weak_simple"] = !c.weak_simple.witnesses.empty();
  if (c.bounds) {
    const auto& b = *c.bounds;
    j["bounds"] = {{"regular_genus", to_json(b.regular_genus)},
                   {"two_beta2", b.two_beta2},
                   {"two_chi_minus_4", b.two_chi_minus_4},
                   {"equality", b.equality},
                   {"exact_genus_certified", b.exact_genus_certified},
                   {"conditional", b.conditional}};
  } else {
    j["bounds"] = nullptr;
  }
  return j;
}

Json to_json(const Presentation& p) {
  Json j;
  j["pair"] = {p.i, p.j};
  j["flavor"] = p.flavor == PresentationFlavor::kCompactManifold ? "compact-manifold" : "singular-manifold";
  j["generators"] = p.n_generators;
  j["relators"] = p.relators.size();
  j["tree_relators"] = p.tree_generators.size();
  j["text"] = p.to_text();
  return j;
}

Json manifold_section(const Analysis& a) {
  if (!a.manifold) return skipped(a.manifold_skipped);
  Json j = to_json(*a.manifold);
  j["crystallization"] = a.crystallization.crystallization;
  j["hat_counts"] = a.crystallization.hat_counts;
  j["color_perm"] = colors_json(a.color_perm);
  j["outside_scope"] = a.outside_scope;
  j["sphere"] = a.sphere ? sphere_json(*a.sphere) : Json(nullptr);
  return j;
}

Json genus_section(const Analysis& a) { return to_json(a.genus); }

Json homology_section(const Analysis& a) {
  if (!a.homology) return skipped(a.homology_skipped);
  Json j = to_json(*a.homology);
  j["beta2_via_genus"] = a.beta2_via_genus ? Json(*a.beta2_via_genus) : Json(nullptr);
  return j;
}

Json classification_section(const Analysis& a) {
  if (!a.classification) {
    Json j = skipped(a.classification_skipped);
    j["refused"] = a.classification_refused;
    return j;
  }
  return to_json(*a.classification);
}

Json handles_section(const Analysis& a) {
  if (!a.handles_skipped.empty()) return skipped(a.handles_skipped);
  Json ws = Json::array();
  int best = -1;
  for (std::size_t n = 0; n < a.witnesses.size(); ++n) {
    const auto& w = a.witnesses[n];
    const auto& p = a.profiles[n];
    const auto& c = a.collapses[n];
    Json e;
    e["kind"] = to_string(w.kind);
    e["i"] = w.i;
    e["j"] = w.j;
    e["k"] = w.k;
    e["r"] = w.r;
    e["apex"] = w.apex;
    e["boundary_case"] = w.boundary_case;
    e["eps"] = w.eps().to_string();
    Json prof{{"h", {p.h0, p.h1, p.h2, p.h3, p.h4}},
              {"s", p.s},
              {"t", p.t},
              {"link", {{"undotted", p.link.undotted}, {"dotted", p.link.dotted}, {"target", p.link.target}}}};
    if (w.boundary_case) prof["boundary_h1"] = p.boundary_h1;
    e["profile"] = prof;
    e["collapse"] = {{"eps", c.eps.to_string()},     {"triangles", c.triangles},
                     {"edges", c.edges},             {"schedule", c.schedule},
                     {"remaining_triangles", c.remaining_triangles},
                     {"h", c.h},                     {"r", c.r},
                     {"rho0", to_json(c.rho0)}};
    ws.push_back(e);
    const bool better = best < 0 || (w.kind == WitnessKind::kSpecial && a.witnesses[best].kind != WitnessKind::kSpecial) ||
                        (w.kind == a.witnesses[best].kind && p.t < a.profiles[best].t);
    if (better) best = static_cast<int>(n);
  }
  Json j;
  j["witness_count"] = a.witnesses.size();
  j["profile"] = best < 0 ? Json(nullptr) : ws[best]["profile"];
  j["witnesses"] = ws;
  return j;
}

namespace {

void flatten(const Json& j, const std::string& path, std::ostringstream& os) {
  if (j.is_object()) {
    for (auto it = j.begin(); it != j.end(); ++it) flatten(it.value(), path.empty() ? it.key() : path + "." + it.key(), os);
    return;
  }
  if (j.is_array()) {
    bool scalars = true;
    for (const auto& x : j)
      if (x.is_structured()) scalars = false;
    if (scalars) {
      os << path << ": [";
      for (std::size_t n = 0; n < j.size(); ++n) {
        if (n) os << ", ";
        os << (j[n].is_string() ? j[n].get<std::string>() : j[n].dump());
      }
      os << "]\n";
      return;
    }
    for (std::size_t n = 0; n < j.size(); ++n) flatten(j[n], path + "[" + std::to_string(n) + "]", os);
    return;
  }
  if (j.is_string()) {
    const auto s = j.get<std::string>();
    if (s.find('\n') != std::string::npos) {
      os << path << ":\n";
      std::istringstream lines(s);
      for (std::string line; std::getline(lines, line);) os << "  " << line << '\n';
      return;
    }
    os << path << ": " << s << '\n';
    return;
  }
  os << path << ": " << j.dump() << '\n';
}

}  // namespace

std::string render_text(const Json& j) {
  std::ostringstream os;
  flatten(j, "", os);
  return os.str();
}

}  // namespace gemkit
