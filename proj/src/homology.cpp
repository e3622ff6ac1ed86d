#include "gemkit/homology.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <sstream>

#include "gemkit/errors.hpp"
#include "gemkit/residues.hpp"

namespace gemkit {

namespace {

// Simplices of K(G) grouped by dimension. A k-simplex is a pair (label set L
// with |L| = k+1, residue on the complementary colors).
class DualComplex {
 public:
  explicit DualComplex(const ColoredGraph& g) : g_(g), table_(g), offsets_(std::size_t{1} << g.n_colors(), -1) {
    const int n_colors = g.n_colors();
    counts_.assign(n_colors, 0);
    for (std::uint32_t mask = 1; mask < offsets_.size(); ++mask) {
      const ColorSet labels(mask);
      const int k = labels.size() - 1;
      offsets_[mask] = counts_[k];
      counts_[k] += table_.count(labels.complement(n_colors));
    }
    // Representative graph vertex for every simplex.
    reps_.resize(n_colors);
    for (int k = 0; k < n_colors; ++k) reps_[k].assign(counts_[k], -1);
    for (std::uint32_t mask = 1; mask < offsets_.size(); ++mask) {
      const ColorSet labels(mask);
      const auto& comp = table_.labels(labels.complement(n_colors)).component;
      auto& reps = reps_[labels.size() - 1];
      for (Vertex v = 0; v < g.order(); ++v) {
        int& slot = reps[offsets_[mask] + comp[v]];
        if (slot < 0) slot = v;
      }
    }
  }

  int dimension() const { return g_.n_colors() - 1; }
  int count(int k) const { return counts_[k]; }

  // Index of the face of the k-simplex containing graph vertex v with label set `labels`.
  int index(ColorSet labels, Vertex v) const {
    return offsets_[labels.mask()] + table_.component(labels.complement(g_.n_colors()), v);
  }

  struct Simplex {
    ColorSet labels;
    Vertex rep;
  };
  std::vector<Simplex> simplices(int k) const {
    std::vector<Simplex> out(counts_[k]);
    for (std::uint32_t mask = 1; mask < offsets_.size(); ++mask) {
      const ColorSet labels(mask);
      if (labels.size() - 1 != k) continue;
      for (int c = 0; c < table_.count(labels.complement(g_.n_colors())); ++c) {
        const int idx = offsets_[mask] + c;
        out[idx] = Simplex{labels, reps_[k][idx]};
      }
    }
    return out;
  }

  // Boundary matrix of dimension k: rows (k-1)-simplices, columns k-simplices.
  IntegerMatrix boundary(int k) const {
    IntegerMatrix d(counts_[k - 1], counts_[k]);
    const auto simplices_k = simplices(k);
    for (int col = 0; col < counts_[k]; ++col) {
      const auto& s = simplices_k[col];
      const auto labels = s.labels.colors();
      for (int m = 0; m < static_cast<int>(labels.size()); ++m) {
        const int row = index(s.labels.without(labels[m]), s.rep);
        d(row, col) += (m % 2 == 0) ? 1 : -1;
      }
    }
    return d;
  }

 private:
  const ColoredGraph& g_;
  ResidueTable table_;
  std::vector<int> offsets_;
  std::vector<int> counts_;
  std::vector<std::vector<Vertex>> reps_;
};

}  // namespace

ChainComplexSummary chain_complex_summary(const ColoredGraph& g) {
  require_connected(g, "chain_complex_summary");
  const ResidueTable table(g);
  ChainComplexSummary out;
  out.dimension = g.dimension();
  out.simplex_counts.assign(g.n_colors(), 0);
  for (std::uint32_t mask = 0; mask < (1u << g.n_colors()) - 1; ++mask) {
    // residues on n-k colors give k-simplices
    const ColorSet colors(mask);
    const int k = g.dimension() - colors.size();
    out.simplex_counts[k] += table.count(colors);
  }
  for (int k = 0; k < g.n_colors(); ++k) out.euler_characteristic += (k % 2 == 0 ? 1 : -1) * out.simplex_counts[k];
  return out;
}

int euler_characteristic(const ColoredGraph& g) { return chain_complex_summary(g).euler_characteristic; }

EulerViaGenus euler_via_genus(const ColoredGraph& g, const CyclicPermutation& eps) {
  if (g.n_colors() != 5) throw PreconditionError("euler_via_genus needs a 5-colored graph");
  require_connected(g, "euler_via_genus");
  const ResidueTable table(g);
  EulerViaGenus out;
  HalfInteger value = HalfInteger(2) - 2 * residue_genus_sum(table, eps.sequence());
  for (int i = 0; i < 5; ++i) {
    value += subgenus_by_color(table, eps.sequence(), eps[i]);
    if (table.count(ColorSet::single(eps[i]).complement(5)) != 1) out.contracted = false;
  }
  if (!value.is_integer()) throw StructuralError("Euler characteristic via genus is not an integer");
  out.chi = value.integer();
  return out;
}

std::vector<AbelianGroup> simplicial_homology(const ColoredGraph& g) {
  require_connected(g, "simplicial_homology");
  const DualComplex complex(g);
  const int n = complex.dimension();
  std::vector<SmithForm> forms(n + 2);  // forms[k] = SNF of boundary_k, k = 1..n
  for (int k = 1; k <= n; ++k) forms[k] = smith_normal_form(complex.boundary(k));
  std::vector<AbelianGroup> out(n + 1);
  for (int k = 0; k <= n; ++k) {
    const int rank_k = (k >= 1) ? forms[k].rank() : 0;
    const int rank_next = (k + 1 <= n) ? forms[k + 1].rank() : 0;
    out[k].free_rank = complex.count(k) - rank_k - rank_next;
    if (k + 1 <= n)
      for (const auto& d : forms[k + 1].invariant_factors)
        if (d != 1) out[k].torsion.push_back(d);
  }
  return out;
}

AbelianGroup h1_edge_path(const ColoredGraph& g) {
  require_connected(g, "h1_edge_path");
  const DualComplex complex(g);
  const int n_vertices = complex.count(0);
  const int n_edges = complex.count(1);
  // Edge endpoints: the edge with labels {a<b} runs from vertex a to vertex b.
  std::vector<std::pair<int, int>> ends(n_edges);
  for (const auto& [idx, s] : [&] {
         std::vector<std::pair<int, DualComplex::Simplex>> v;
         auto all = complex.simplices(1);
         for (int e = 0; e < n_edges; ++e) v.emplace_back(e, all[e]);
         return v;
       }()) {
    const auto labels = s.labels.colors();
    ends[idx] = {complex.index(ColorSet::single(labels[0]), s.rep), complex.index(ColorSet::single(labels[1]), s.rep)};
  }
  // Breadth-first spanning tree of the 1-skeleton.
  std::vector<std::vector<int>> incident(n_vertices);
  for (int e = 0; e < n_edges; ++e) {
    incident[ends[e].first].push_back(e);
    incident[ends[e].second].push_back(e);
  }
  std::vector<char> reached(n_vertices, 0), in_tree(n_edges, 0);
  std::queue<int> queue;
  reached[0] = 1;
  queue.push(0);
  while (!queue.empty()) {
    const int x = queue.front();
    queue.pop();
    for (int e : incident[x]) {
      const int y = ends[e].first == x ? ends[e].second : ends[e].first;
      if (!reached[y]) {
        reached[y] = 1;
        in_tree[e] = 1;
        queue.push(y);
      }
    }
  }
  std::vector<int> column(n_edges, -1);
  int n_gens = 0;
  for (int e = 0; e < n_edges; ++e)
    if (!in_tree[e]) column[e] = n_gens++;
  // Triangle boundaries with tree edges deleted.
  const auto triangles = complex.simplices(2);
  IntegerMatrix relations(static_cast<int>(triangles.size()), n_gens);
  for (int t = 0; t < static_cast<int>(triangles.size()); ++t) {
    const auto labels = triangles[t].labels.colors();
    for (int m = 0; m < 3; ++m) {
      const int e = complex.index(triangles[t].labels.without(labels[m]), triangles[t].rep);
      if (column[e] >= 0) relations(t, column[e]) += (m % 2 == 0) ? 1 : -1;
    }
  }
  return cokernel(relations);
}

std::string Presentation::to_text() const {
  std::ostringstream os;
  os << "gens:";
  for (int k = 0; k < n_generators; ++k) os << " x" << k;
  os << '\n';
  auto emit = [&](const Word& w) {
    if (w.empty()) {
      os << "1\n";
      return;
    }
    for (std::size_t k = 0; k < w.size(); ++k) {
      const int letter = w[k];
      os << (k ? " " : "") << (letter > 0 ? '+' : '-') << (std::abs(letter) - 1);
    }
    os << '\n';
  };
  for (const auto& r : relators) emit(free_reduce(r));
  for (int t : tree_generators) emit(Word{t + 1});
  return os.str();
}

Presentation pi1_presentation(const ColoredGraph& g, Color i, Color j, PresentationFlavor flavor,
                              ColorSet singular_colors) {
  require_connected(g, "pi1_presentation");
  require_color(g, i);
  require_color(g, j);
  if (i == j) throw PreconditionError("pi1_presentation needs two distinct colors");
  const ColorSet pair{i, j};
  if (flavor == PresentationFlavor::kCompactManifold) {
    if (singular_colors.contains(i) || singular_colors.contains(j))
      throw PreconditionError("compact-manifold presentation needs non-singular colors i, j");
  } else if (!singular_colors.subset_of(pair)) {
    throw PreconditionError("singular-manifold presentation needs every singular color in {i, j}");
  }
  const int n_colors = g.n_colors();
  const ResidueTable table(g);
  const ColorSet gen_colors = pair.complement(n_colors);
  const auto& gen_of = table.labels(gen_colors).component;

  Presentation p;
  p.i = i;
  p.j = j;
  p.flavor = flavor;
  p.n_generators = table.count(gen_colors);

  // Relators: walk each {i,j}-cycle starting with color i from its smallest
  // vertex; vertices at even positions contribute +gen, odd positions -gen.
  const auto& cycle_of = table.labels(pair).component;
  std::vector<char> done(table.count(pair), 0);
  for (Vertex start = 0; start < g.order(); ++start) {
    if (done[cycle_of[start]]) continue;
    done[cycle_of[start]] = 1;
    Word w;
    Vertex v = start;
    int pos = 0;
    do {
      const int letter = gen_of[v] + 1;
      w.push_back(pos % 2 == 0 ? letter : -letter);
      v = g.neighbor(v, pos % 2 == 0 ? i : j);
      ++pos;
    } while (v != start);
    p.relators.push_back(std::move(w));
  }

  // K_ij: vertices are the i-hat and j-hat residues, edges the generators.
  const ColorSet i_hat = ColorSet::single(i).complement(n_colors);
  const ColorSet j_hat = ColorSet::single(j).complement(n_colors);
  const int n_i = table.count(i_hat);
  std::vector<int> parent(n_i + table.count(j_hat));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::vector<Vertex> rep(p.n_generators, -1);
  for (Vertex v = 0; v < g.order(); ++v)
    if (rep[gen_of[v]] < 0) rep[gen_of[v]] = v;
  for (int x = 0; x < p.n_generators; ++x) {
    const int a = find(table.component(i_hat, rep[x]));
    const int b = find(n_i + table.component(j_hat, rep[x]));
    if (a != b) {
      parent[a] = b;
      p.tree_generators.push_back(x);
    }
  }
  return p;
}

Word free_reduce(const Word& w) {
  Word out;
  for (int letter : w) {
    if (!out.empty() && out.back() == -letter) out.pop_back();
    else out.push_back(letter);
  }
  return out;
}

AbelianGroup abelianization(const Presentation& p) {
  const int rows = static_cast<int>(p.relators.size() + p.tree_generators.size());
  IntegerMatrix m(rows, p.n_generators);
  int r = 0;
  for (const auto& w : p.relators) {
    for (int letter : w) m(r, std::abs(letter) - 1) += letter > 0 ? 1 : -1;
    ++r;
  }
  for (int t : p.tree_generators) m(r++, t) = 1;
  return cokernel(m);
}

namespace {

Word cyclic_reduce(Word w) {
  w = free_reduce(w);
  std::size_t a = 0, b = w.size();
  while (b - a >= 2 && w[a] == -w[b - 1]) {
    ++a;
    --b;
  }
  return Word(w.begin() + static_cast<long>(a), w.begin() + static_cast<long>(b));
}

Word inverse(const Word& w) {
  Word out(w.rbegin(), w.rend());
  for (int& x : out) x = -x;
  return out;
}

// Minimal rotation of w and of its inverse, so conjugate or inverse relators coincide.
Word normal_form(const Word& w) {
  Word best;
  for (const Word& base : {w, inverse(w)}) {
    for (std::size_t s = 0; s < base.size(); ++s) {
      Word rot(base.begin() + static_cast<long>(s), base.end());
      rot.insert(rot.end(), base.begin(), base.begin() + static_cast<long>(s));
      if (best.empty() || rot < best) best = std::move(rot);
    }
  }
  return best;
}

Word substitute(const Word& w, int gen, const Word& replacement) {
  Word out;
  const Word inv = inverse(replacement);
  for (int letter : w) {
    if (std::abs(letter) - 1 != gen) out.push_back(letter);
    else if (letter > 0) out.insert(out.end(), replacement.begin(), replacement.end());
    else out.insert(out.end(), inv.begin(), inv.end());
  }
  return out;
}

constexpr std::size_t kMaxTotalLength = 200000;

}  // namespace

TietzeResult tietze_simplify(const Presentation& p, int max_moves) {
  TietzeResult result;
  std::vector<char> alive(p.n_generators, 1);
  std::vector<Word> rels = p.relators;
  for (int t : p.tree_generators) {
    alive[t] = 0;
    for (auto& r : rels) r = substitute(r, t, {});
    ++result.moves;
  }
  for (;;) {
    // Normalize the relator list.
    std::vector<Word> next;
    for (const auto& r : rels) {
      Word c = cyclic_reduce(r);
      if (!c.empty()) next.push_back(normal_form(c));
    }
    std::sort(next.begin(), next.end());
    next.erase(std::unique(next.begin(), next.end()), next.end());
    rels.swap(next);

    const int n_alive = static_cast<int>(std::count(alive.begin(), alive.end(), 1));
    if (n_alive == 0 || result.moves >= max_moves) break;

    // Pick the shortest relator with a generator occurring exactly once.
    int best_rel = -1, best_gen = -1;
    for (int r = 0; r < static_cast<int>(rels.size()); ++r) {
      if (best_rel >= 0 && rels[r].size() >= rels[best_rel].size()) continue;
      std::map<int, int> occurrences;
      for (int letter : rels[r]) ++occurrences[std::abs(letter) - 1];
      for (const auto& [gen, count] : occurrences)
        if (count == 1) {
          best_rel = r;
          best_gen = gen;
          break;
        }
    }
    if (best_rel < 0) break;
    // Rotate so the generator comes first: r = x^e W, hence x = W^-e.
    Word r = rels[best_rel];
    const auto at = std::find_if(r.begin(), r.end(), [&](int l) { return std::abs(l) - 1 == best_gen; });
    std::rotate(r.begin(), at, r.end());
    const bool positive = r.front() > 0;
    Word rest(r.begin() + 1, r.end());
    const Word replacement = positive ? inverse(rest) : rest;
    rels.erase(rels.begin() + best_rel);
    std::size_t total = 0;
    for (auto& w : rels) {
      w = substitute(w, best_gen, replacement);
      total += w.size();
    }
    alive[best_gen] = 0;
    ++result.moves;
    if (total > kMaxTotalLength) break;
  }
  result.remaining_generators = static_cast<int>(std::count(alive.begin(), alive.end(), 1));
  result.remaining_relators = static_cast<int>(rels.size());
  result.trivial = result.remaining_generators == 0;
  return result;
}

Pi1Summary pi1_summary(const ColoredGraph& g, PresentationFlavor flavor, ColorSet singular_colors) {
  const int n_colors = g.n_colors();
  const ResidueTable table(g);
  struct Candidate {
    int generators;
    Color i, j;
  };
  std::vector<Candidate> candidates;
  for (Color i = 0; i < n_colors; ++i) {
    for (Color j = i + 1; j < n_colors; ++j) {
      const bool ok = flavor == PresentationFlavor::kCompactManifold
                          ? !singular_colors.contains(i) && !singular_colors.contains(j)
                          : singular_colors.subset_of(ColorSet{i, j});
      if (ok) candidates.push_back({table.count(ColorSet{i, j}.complement(n_colors)), i, j});
    }
  }
  Pi1Summary out;
  if (candidates.empty()) return out;
  std::stable_sort(candidates.begin(), candidates.end(),
                   [](const Candidate& a, const Candidate& b) { return a.generators < b.generators; });
  out.available = true;
  out.i = candidates.front().i;
  out.j = candidates.front().j;
  const auto first = pi1_presentation(g, out.i, out.j, flavor, singular_colors);
  out.abelianization = abelianization(first);
  out.rank_lower_bound = out.abelianization.minimal_generators();
  if (!out.abelianization.trivial()) return out;
  for (const auto& c : candidates) {
    const auto p = pi1_presentation(g, c.i, c.j, flavor, singular_colors);
    const auto t = tietze_simplify(p);
    out.tietze_moves += t.moves;
    if (t.trivial) {
      out.certified_trivial = true;
      out.i = c.i;
      out.j = c.j;
      out.rank_lower_bound = 0;
      break;
    }
  }
  return out;
}

HomologyReport homology(const ColoredGraph& g, ColorSet singular_colors) {
  require_connected(g, "homology");
  HomologyReport report;
  report.n_colors = g.n_colors();
  report.singular_colors = singular_colors;
  report.outside_scope = singular_colors.size() >= 2;
  report.chi = euler_characteristic(g);
  report.simplicial = simplicial_homology(g);
  report.h1_edge_path = h1_edge_path(g);
  if (report.h1_edge_path != report.simplicial[1])
    throw ConsistencyError("H1 from the edge-path group (" + report.h1_edge_path.to_string() +
                           ") differs from simplicial H1 (" + report.simplicial[1].to_string() + ")");
  report.pi1_singular = pi1_summary(g, PresentationFlavor::kSingularManifold, singular_colors);
  if (report.pi1_singular.available && report.pi1_singular.abelianization != report.h1_edge_path)
    throw ConsistencyError("H1 of the singular manifold: presentation gives " +
                           report.pi1_singular.abelianization.to_string() + ", edge-path group gives " +
                           report.h1_edge_path.to_string());
  report.pi1_compact = pi1_summary(g, PresentationFlavor::kCompactManifold, singular_colors);
  report.beta1_singular = report.h1_edge_path.free_rank;
  report.beta1_compact = report.pi1_compact.available ? report.pi1_compact.abelianization.free_rank : 0;

  if (g.n_colors() == 5 && !report.outside_scope) {
    std::optional<int> common;
    for (const auto& eps : CyclicPermutation::all(5)) {
      const int chi = euler_via_genus(g, eps).chi;
      if (common && *common != chi)
        throw ConsistencyError("Euler characteristic via genus depends on the permutation at " + eps.to_string());
      common = chi;
    }
    if (*common != report.chi)
      throw ConsistencyError("Euler characteristic via genus (" + std::to_string(*common) +
                             ") differs from the simplex count (" + std::to_string(report.chi) + ")");
    report.chi_via_genus = common;
    report.beta2 = report.chi - 2 + report.beta1_singular + report.beta1_compact;
    if (*report.beta2 != report.simplicial[2].free_rank)
      throw ConsistencyError("beta2 from the Euler relation (" + std::to_string(*report.beta2) +
                             ") differs from the simplicial Betti number (" +
                             std::to_string(report.simplicial[2].free_rank) + ")");
  }
  return report;
}

int beta2_via_genus(const ColoredGraph& g, const HomologyReport& homology) {
  if (g.n_colors() != 5) throw PreconditionError("beta2_via_genus needs a 5-colored graph");
  if (!homology.simply_connected())
    throw PreconditionError("beta2_via_genus needs a certified simply-connected manifold");
  const ResidueTable table(g);
  std::optional<int> common;
  for (const auto& eps : CyclicPermutation::all(5)) {
    HalfInteger sum = HalfInteger(0) - 2 * residue_genus_sum(table, eps.sequence());
    std::vector<HalfInteger> sub;
    for (int i = 0; i < 5; ++i) {
      sub.push_back(subgenus_by_color(table, eps.sequence(), eps[i]));
      sum += sub.back();
    }
    if (!sum.is_integer()) throw ConsistencyError("beta2 via genus is not an integer at " + eps.to_string());
    if (common && *common != sum.integer())
      throw ConsistencyError("beta2 via genus depends on the permutation at " + eps.to_string());
    common = sum.integer();
    for (int i = 0; i < 5; ++i)
      if (HalfInteger(*common) > sub[i])
        throw ConsistencyError("beta2 exceeds the subgenus at " + eps.to_string() + ", i = " + std::to_string(i));
  }
  if (homology.beta2 && *homology.beta2 != *common)
    throw ConsistencyError("beta2 via genus (" + std::to_string(*common) + ") differs from homology (" +
                           std::to_string(*homology.beta2) + ")");
  return *common;
}

}  // namespace gemkit
