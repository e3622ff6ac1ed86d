#pragma once

#include <algorithm>
#include <functional>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "gemkit/colored_graph.hpp"
#include "gemkit/gem_io.hpp"

namespace gemkit::test {

inline ColoredGraph fixture(const std::string& name) { return read_gem_file(std::string(GEMKIT_FIXTURES) + "/" + name); }

inline ColoredGraph random_relabel(const ColoredGraph& g, std::mt19937& rng) {
  std::vector<Vertex> perm(g.order());
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  return g.relabeled(perm);
}

inline ColoredGraph random_recolor(const ColoredGraph& g, std::mt19937& rng) {
  std::vector<Color> perm(g.n_colors());
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  return g.recolored(perm);
}

// Components of the spanning subgraph on `colors`, by plain DFS.
inline int count_components(const ColoredGraph& g, const std::vector<Color>& colors) {
  std::vector<char> seen(g.order(), 0);
  int n = 0;
  for (Vertex s = 0; s < g.order(); ++s) {
    if (seen[s]) continue;
    ++n;
    std::vector<Vertex> stack{s};
    seen[s] = 1;
    while (!stack.empty()) {
      const Vertex v = stack.back();
      stack.pop_back();
      for (Color c : colors) {
        const Vertex w = g.matching(c)[v];
        if (!seen[w]) {
          seen[w] = 1;
          stack.push_back(w);
        }
      }
    }
  }
  return n;
}

inline bool two_colorable(const ColoredGraph& g) {
  std::vector<int> side(g.order(), -1);
  side[0] = 0;
  std::vector<Vertex> stack{0};
  while (!stack.empty()) {
    const Vertex v = stack.back();
    stack.pop_back();
    for (Color c = 0; c < g.n_colors(); ++c) {
      const Vertex w = g.matching(c)[v];
      if (side[w] < 0) {
        side[w] = 1 - side[v];
        stack.push_back(w);
      } else if (side[w] == side[v]) {
        return false;
      }
    }
  }
  return true;
}

// Twice the genus of the regular embedding for the cyclic color sequence:
// faces are the bicolored cycles on consecutive colors, 2 - chi overall.
inline int twice_genus_by_faces(const ColoredGraph& g, const std::vector<Color>& seq) {
  const int n = static_cast<int>(seq.size());
  int faces = 0;
  for (int i = 0; i < n; ++i) faces += count_components(g, {seq[i], seq[(i + 1) % n]});
  const int chi = g.order() - n * g.order() / 2 + faces;
  return 2 - chi;
}

// Matrix of the graph after relabeling vertices by vperm and colors by cperm.
inline std::vector<int> permuted_matrix(const ColoredGraph& g, const std::vector<int>& vperm, const std::vector<int>& cperm) {
  const int p = g.order();
  std::vector<int> m(static_cast<std::size_t>(g.n_colors()) * p);
  for (Color c = 0; c < g.n_colors(); ++c)
    for (Vertex v = 0; v < p; ++v) m[static_cast<std::size_t>(cperm[c]) * p + vperm[v]] = vperm[g.matching(c)[v]];
  return m;
}

// Minimum matrix over all vertex permutations (and color permutations when
// `colors` is set). Factorial cost; small orders only.
inline std::vector<int> brute_canonical(const ColoredGraph& g, bool colors) {
  std::vector<int> vperm(g.order()), cperm(g.n_colors());
  std::iota(cperm.begin(), cperm.end(), 0);
  std::vector<int> best;
  do {
    std::iota(vperm.begin(), vperm.end(), 0);
    do {
      auto m = permuted_matrix(g, vperm, cperm);
      if (best.empty() || m < best) best = std::move(m);
    } while (std::next_permutation(vperm.begin(), vperm.end()));
  } while (colors && std::next_permutation(cperm.begin(), cperm.end()));
  return best;
}

inline std::vector<std::vector<Vertex>> brute_involutions(int order) {
  std::vector<std::vector<Vertex>> out;
  std::vector<Vertex> m(order, -1);
  std::function<void()> rec = [&] {
    Vertex v = 0;
    while (v < order && m[v] >= 0) ++v;
    if (v == order) {
      out.push_back(m);
      return;
    }
    for (Vertex w = v + 1; w < order; ++w) {
      if (m[w] >= 0) continue;
      m[v] = w;
      m[w] = v;
      rec();
      m[v] = m[w] = -1;
    }
  };
  rec();
  return out;
}

// Number of connected graphs of one order up to isomorphism and color
// permutation, by exhaustive generation and brute canonical forms.
inline int brute_count(int n_colors, int order) {
  const auto invs = brute_involutions(order);
  std::vector<Vertex> first(order);
  for (Vertex v = 0; v < order; ++v) first[v] = v ^ 1;
  std::set<std::vector<int>> seen;
  std::vector<int> idx(n_colors - 1, 0);
  for (;;) {
    std::vector<std::vector<Vertex>> ms{first};
    for (int k : idx) ms.push_back(invs[k]);
    ColoredGraph g(n_colors, ms);
    if (g.is_connected()) seen.insert(brute_canonical(g, true));
    int pos = 0;
    while (pos < n_colors - 1 && ++idx[pos] == static_cast<int>(invs.size())) idx[pos++] = 0;
    if (pos == n_colors - 1) break;
  }
  return static_cast<int>(seen.size());
}

}  // namespace gemkit::test
