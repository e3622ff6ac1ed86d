#include "gemkit/handles.hpp"

#include <algorithm>

#include "gemkit/errors.hpp"
#include "gemkit/residues.hpp"

namespace gemkit {

const char* to_string(WitnessKind k) { return k == WitnessKind::kGeneral ? "general" : "special"; }

CyclicPermutation HypothesisWitness::eps() const { return CyclicPermutation({i, j, r, k, apex}); }

std::string HypothesisWitness::to_string() const {
  std::string s = gemkit::to_string(kind);
  s += " i=" + std::to_string(i) + " j=" + std::to_string(j) + " k=" + std::to_string(k);
  if (kind == WitnessKind::kSpecial) s += " pair={" + std::to_string(std::min(r, apex)) + "," + std::to_string(std::max(r, apex)) + "}";
  return s;
}

namespace {

int hat_pair(const ResidueTable& t, Color a, Color b) { return t.count(ColorSet{a, b}.complement(5)); }

void require_crystallization(const ColoredGraph& g, const ResidueTable& table, ColorSet singular, const char* op) {
  if (g.n_colors() != 5) throw PreconditionError(std::string(op) + " needs a 5-colored graph");
  for (Color c = 0; c < 5; ++c)
    if (table.count(ColorSet::single(c).complement(5)) != 1)
      throw PreconditionError(std::string(op) + " needs a crystallization");
  if (!singular.subset_of(ColorSet{4}))
    throw PreconditionError(std::string(op) + " needs the singular color normalized to 4");
}

bool satisfies(const ResidueTable& table, const HypothesisWitness& w) {
  if (hat_pair(table, w.i, w.k) != 1 || hat_pair(table, w.j, w.k) != 1) return false;
  return w.kind == WitnessKind::kGeneral || hat_pair(table, w.r, w.apex) == 1;
}

bool well_formed(const HypothesisWitness& w) {
  const std::vector<Color> cs{w.i, w.j, w.k, w.r, w.apex};
  ColorSet s;
  for (Color c : cs) {
    if (c < 0 || c > 4) return false;
    s = s.with(c);
  }
  return s.size() == 5 && w.i < w.j && (!w.boundary_case || w.apex == 4);
}

}  // namespace

std::vector<HypothesisWitness> find_hypothesis_witnesses(const ColoredGraph& g, ColorSet singular_colors) {
  require_connected(g, "find_hypothesis_witnesses");
  const ResidueTable table(g);
  require_crystallization(g, table, singular_colors, "find_hypothesis_witnesses");
  const bool boundary = singular_colors.size() == 1;
  std::vector<HypothesisWitness> out;
  for (int pass = 0; pass < 2; ++pass) {
    const WitnessKind kind = pass == 0 ? WitnessKind::kGeneral : WitnessKind::kSpecial;
    for (std::uint32_t mask = 0; mask < 32; ++mask) {
      const ColorSet triple(mask);
      if (triple.size() != 3) continue;
      const ColorSet pair = triple.complement(5);
      if (boundary && !pair.contains(4)) continue;
      const auto rest = pair.colors();
      const Color apex = pair.contains(4) ? 4 : rest[1];
      const Color r = rest[0] == apex ? rest[1] : rest[0];
      for (Color k : triple.colors()) {
        const auto ij = triple.without(k).colors();
        HypothesisWitness w{kind, ij[0], ij[1], k, r, apex, boundary};
        if (!satisfies(table, w)) continue;
        out.push_back(w);
        if (kind == WitnessKind::kSpecial) break;
      }
    }
  }
  return out;
}

SubgenusTarget subgenus_target(const ColoredGraph& g, Color j, Color k, Color s, Color apex, const HomologyReport& h) {
  require_connected(g, "subgenus_target");
  if (g.n_colors() != 5) throw PreconditionError("subgenus_target needs a 5-colored graph");
  ColorSet used;
  for (Color c : {j, k, s, apex}) {
    if (c < 0 || c > 4 || used.contains(c)) throw PreconditionError("subgenus_target needs four distinct colors");
    used = used.with(c);
  }
  const Color r = used.complement(5).colors().front();
  const ResidueTable table(g);
  if (hat_pair(table, j, k) != 1)
    throw PreconditionError("subgenus_target needs g_{" + std::to_string(j) + "^," + std::to_string(k) + "^} = 1");
  if (!h.beta2) throw PreconditionError("subgenus_target needs beta_2");
  SubgenusTarget out;
  // Canonical storage may reverse the sequence; the identities below use
  // the orientation (s, j, r, k, apex).
  const std::vector<Color> e{s, j, r, k, apex};
  out.eps = CyclicPermutation(e);
  out.rho0 = subgenus_by_color(table, e, s);
  out.t = table.count(ColorSet{s, j, k}) - 1;
  out.beta2 = *h.beta2;
  if (out.rho0 != HalfInteger(out.beta2 + out.t))
    throw ConsistencyError("subgenus at " + out.eps.to_string() + " is " + out.rho0.to_string() + ", expected beta2 + t = " +
                           std::to_string(out.beta2 + out.t));
  const HalfInteger lhs(table.count(ColorSet{e[2], e[4]}));
  const HalfInteger rhs = HalfInteger(table.count(ColorSet{e[2], e[3], e[4]}) + table.count(ColorSet{e[1], e[2], e[4]}) - 1) + out.rho0;
  if (lhs != rhs)
    throw ConsistencyError("triangle count identity fails at " + out.eps.to_string() + ": " + lhs.to_string() + " vs " + rhs.to_string());
  return out;
}

HandleProfile handle_profile(const ColoredGraph& g, const HypothesisWitness& w, const HomologyReport& h) {
  require_connected(g, "handle_profile");
  const ResidueTable table(g);
  require_crystallization(g, table, h.singular_colors, "handle_profile");
  if (!well_formed(w) || !satisfies(table, w) || w.boundary_case != (h.singular_colors.size() == 1))
    throw PreconditionError("invalid hypothesis witness " + w.to_string());
  // g_{j-hat k-hat} = 1: one generator, killed by the tree relator.
  const auto p = pi1_presentation(g, w.j, w.k, PresentationFlavor::kCompactManifold, h.singular_colors);
  if (!tietze_simplify(p).trivial)
    throw ConsistencyError("presentation at (" + std::to_string(w.j) + "," + std::to_string(w.k) + ") is not trivial");
  if (!h.beta2) throw PreconditionError("handle_profile needs beta_2");
  const int beta2 = *h.beta2;

  HandleProfile out;
  out.t = table.count(ColorSet{w.i, w.j, w.k}) - 1;
  if (w.kind == WitnessKind::kSpecial && out.t != 0) throw ConsistencyError("special witness with t_{i,j,k} > 0");
  subgenus_target(g, w.j, w.k, w.i, w.apex, h);
  out.h2 = beta2 + out.t;
  out.h3 = out.s = out.t;
  out.h4 = w.boundary_case ? 0 : 1;
  out.link.undotted = out.h2;
  std::string sum = out.t == 0 ? "" : "#_" + std::to_string(out.t) + "(S²×S¹)";
  if (w.boundary_case) out.link.target = sum.empty() ? "∂M⁴" : sum + " # ∂M⁴";
  else out.link.target = sum.empty() ? "S³" : sum;
  if (w.boundary_case) out.boundary_h1 = h1_edge_path(residue_of(g, ColorSet{4}.complement(5), 0).subgraph).to_string();
  return out;
}

CollapseTrace collapse_2skeleton(const ColoredGraph& g, const HypothesisWitness& w) {
  require_connected(g, "collapse_2skeleton");
  const ResidueTable table(g);
  if (g.n_colors() != 5 || !well_formed(w) || !satisfies(table, w))
    throw PreconditionError("collapse_2skeleton needs a valid hypothesis witness");
  CollapseTrace tr;
  tr.eps = w.eps();
  const std::vector<Color> e{w.i, w.j, w.r, w.k, w.apex};
  const ColorSet tri_key{e[2], e[4]};
  const ColorSet edge_key{e[2], e[3], e[4]};
  tr.triangles = table.count(tri_key);
  tr.edges = table.count(edge_key);
  tr.rho0 = subgenus_by_color(table, e, e[0]);

  // {eps0, eps1}-edge of each triangle.
  std::vector<int> edge_of(tr.triangles, -1);
  for (Vertex v = 0; v < g.order(); ++v) edge_of[table.component(tri_key, v)] = table.component(edge_key, v);
  std::vector<int> load(tr.edges, 0);
  for (int t : edge_of) ++load[t];
  std::vector<char> alive(tr.triangles, 1);
  int live_edges = tr.edges;
  for (bool progress = true; progress && live_edges > 1;) {
    progress = false;
    for (int t = 0; t < tr.triangles && live_edges > 1; ++t) {
      if (!alive[t] || load[edge_of[t]] != 1) continue;
      alive[t] = 0;
      load[edge_of[t]] = 0;
      --live_edges;
      tr.schedule.push_back(t);
      progress = true;
    }
  }
  tr.remaining_triangles = tr.triangles - static_cast<int>(tr.schedule.size());
  for (int x = 0; x < tr.edges; ++x)
    if (load[x] > 0) tr.r.push_back(load[x]);
  tr.h = static_cast<int>(tr.r.size());

  int sum_r = 0;
  for (int x : tr.r) sum_r += x;
  const HalfInteger excess(tr.remaining_triangles - tr.h);
  if (excess != tr.rho0 || HalfInteger(sum_r) != tr.rho0 + HalfInteger(tr.h) || tr.h < 1 ||
      tr.h > table.count(edge_key))
    throw ConsistencyError("collapse identity fails at " + tr.eps.to_string() + ": triangles " +
                           std::to_string(tr.remaining_triangles) + ", edges " + std::to_string(tr.h) +
                           ", subgenus " + tr.rho0.to_string());
  return tr;
}

}  // namespace gemkit
