#include <doctest.h>

#include <gmpxx.h>

#include <bit>
#include <map>

#include "gemkit/canonical.hpp"
#include "gemkit/catalogue.hpp"
#include "gemkit/errors.hpp"
#include "gemkit/homology.hpp"
#include "gemkit/recognition.hpp"
#include "gemkit/smith.hpp"
#include "support.hpp"

using namespace gemkit;
using namespace gemkit::test;

namespace {

std::vector<int> labels(const ColoredGraph& g, std::uint32_t colors, int& count) {
  std::vector<int> lab(g.order(), -1);
  count = 0;
  for (Vertex s = 0; s < g.order(); ++s) {
    if (lab[s] >= 0) continue;
    std::vector<Vertex> stack{s};
    lab[s] = count;
    while (!stack.empty()) {
      const Vertex v = stack.back();
      stack.pop_back();
      for (Color c = 0; c < g.n_colors(); ++c) {
        if (!((colors >> c) & 1u)) continue;
        const Vertex w = g.matching(c)[v];
        if (lab[w] < 0) {
          lab[w] = count;
          stack.push_back(w);
        }
      }
    }
    ++count;
  }
  return lab;
}

// Boundary matrices of the dual complex, built directly: a k-simplex is a
// residue on the complement of its k+1 vertex labels.
struct Complex {
  int n = 0;
  std::vector<std::vector<std::uint32_t>> masks;      // label masks per dimension
  std::map<std::uint32_t, std::vector<int>> lab;      // residue key -> labels
  std::map<std::uint32_t, int> count, offset;

  explicit Complex(const ColoredGraph& g) : n(g.n_colors()), masks(n) {
    const std::uint32_t all = (1u << n) - 1u;
    for (std::uint32_t m = 1; m <= all; ++m) {
      const int k = std::popcount(m) - 1;
      offset[m] = 0;
      for (std::uint32_t other : masks[k]) offset[m] += count[other];
      masks[k].push_back(m);
      int c = 0;
      lab[m] = labels(g, all & ~m, c);
      count[m] = c;
    }
  }
  int size(int k) const {
    int s = 0;
    for (auto m : masks[k]) s += count.at(m);
    return s;
  }
  // Dense boundary matrix from dimension k to k-1.
  std::vector<std::vector<int>> boundary(int k) const {
    std::vector<std::vector<int>> b(size(k - 1), std::vector<int>(size(k), 0));
    for (auto m : masks[k]) {
      const auto& lm = lab.at(m);
      for (int v = 0; v < static_cast<int>(lm.size()); ++v) {
        int pos = 0;
        for (int c = 0; c < n; ++c) {
          if (!((m >> c) & 1u)) continue;
          const std::uint32_t f = m & ~(1u << c);
          const int row = offset.at(f) + lab.at(f)[v];
          const int col = offset.at(m) + lm[v];
          b[row][col] = (pos % 2 == 0) ? 1 : -1;
          ++pos;
        }
      }
    }
    return b;
  }
};

int rank_q(std::vector<std::vector<int>> in) {
  if (in.empty()) return 0;
  std::vector<std::vector<mpq_class>> a(in.size(), std::vector<mpq_class>(in[0].size()));
  for (std::size_t r = 0; r < in.size(); ++r)
    for (std::size_t c = 0; c < in[r].size(); ++c) a[r][c] = in[r][c];
  int rank = 0;
  const int rows = static_cast<int>(a.size()), cols = static_cast<int>(a[0].size());
  for (int c = 0; c < cols && rank < rows; ++c) {
    int p = rank;
    while (p < rows && a[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[rank]);
    for (int r = 0; r < rows; ++r) {
      if (r == rank || a[r][c] == 0) continue;
      const mpq_class f = a[r][c] / a[rank][c];
      for (int x = c; x < cols; ++x) a[r][x] -= f * a[rank][x];
    }
    ++rank;
  }
  return rank;
}

int rank_mod(std::vector<std::vector<int>> a, int p) {
  if (a.empty()) return 0;
  const int rows = static_cast<int>(a.size()), cols = static_cast<int>(a[0].size());
  for (auto& row : a)
    for (auto& x : row) x = ((x % p) + p) % p;
  int rank = 0;
  for (int c = 0; c < cols && rank < rows; ++c) {
    int piv = rank;
    while (piv < rows && a[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(a[piv], a[rank]);
    int inv = 1;
    while (a[rank][c] * inv % p != 1) ++inv;
    for (int r = 0; r < rows; ++r) {
      if (r == rank || a[r][c] == 0) continue;
      const int f = a[r][c] * inv % p;
      for (int x = c; x < cols; ++x) a[r][x] = ((a[r][x] - f * a[rank][x]) % p + p) % p;
    }
    ++rank;
  }
  return rank;
}

struct Oracle {
  std::vector<int> betti;
  std::vector<int> dims_mod2, dims_mod3;
};

Oracle oracle(const ColoredGraph& g) {
  const Complex k(g);
  const int n = g.n_colors();
  std::vector<int> rq(n + 1, 0), r2(n + 1, 0), r3(n + 1, 0);
  for (int d = 1; d < n; ++d) {
    const auto b = k.boundary(d);
    rq[d] = rank_q(b);
    r2[d] = rank_mod(b, 2);
    r3[d] = rank_mod(b, 3);
  }
  Oracle o;
  for (int d = 0; d < n; ++d) {
    o.betti.push_back(k.size(d) - rq[d] - rq[d + 1]);
    o.dims_mod2.push_back(k.size(d) - r2[d] - r2[d + 1]);
    o.dims_mod3.push_back(k.size(d) - r3[d] - r3[d + 1]);
  }
  return o;
}

int torsion_divisible(const AbelianGroup& a, int p) {
  int t = 0;
  for (const auto& x : a.torsion)
    if (x % p == 0) ++t;
  return t;
}

std::vector<std::string> strings(const std::vector<AbelianGroup>& hs) {
  std::vector<std::string> out;
  for (const auto& h : hs) out.push_back(h.to_string());
  return out;
}

}  // namespace

TEST_CASE("smith normal form") {
  IntegerMatrix m(3, 3);
  const int v[3][3] = {{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}};
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c) m(r, c) = v[r][c];
  const SmithForm s = smith_normal_form(m);
  REQUIRE(s.rank() == 3);
  CHECK(s.invariant_factors[0] == 2);
  CHECK(s.invariant_factors[1] == 6);
  CHECK(s.invariant_factors[2] == 12);

  IntegerMatrix d(2, 2);
  d(0, 0) = 2;
  d(1, 1) = 3;
  CHECK(cokernel(d).to_string() == "Z/6");
  IntegerMatrix e(1, 3);
  e(0, 0) = 1;
  e(0, 1) = 1;
  CHECK(cokernel(e).to_string() == "Z^2");
  IntegerMatrix big(1, 2);
  big(0, 0) = mpz_class("123456789012345678901234567890");
  CHECK(cokernel(big).to_string() == "Z + Z/123456789012345678901234567890");
}

TEST_CASE("frozen homology of the fixtures") {
  struct Row {
    const char* file;
    std::vector<std::string> groups;
    int chi;
  };
  const Row rows[] = {
      {"sigma5.gem", {"Z", "0", "0", "0", "Z"}, 2},
      {"cp2.gem", {"Z", "0", "Z", "0", "Z"}, 3},
      {"rp3.gem", {"Z", "Z/2", "0", "Z"}, 0},
      {"torus.gem", {"Z", "Z^2", "Z"}, 0},
      {"rp2.gem", {"Z", "Z/2", "0"}, 1},
  };
  for (const auto& r : rows) {
    CAPTURE(r.file);
    const ColoredGraph g = fixture(r.file);
    CHECK(strings(simplicial_homology(g)) == r.groups);
    CHECK(euler_characteristic(g) == r.chi);
    CHECK(h1_edge_path(g).to_string() == r.groups[1]);
  }
  CHECK(strings(simplicial_homology(ColoredGraph::standard(3))) == std::vector<std::string>{"Z", "0", "Z"});
  CHECK(strings(simplicial_homology(ColoredGraph::standard(4))) == std::vector<std::string>{"Z", "0", "0", "Z"});
}

TEST_CASE("simplicial homology agrees with rank oracles over Q, GF(2), GF(3)") {
  for (auto [n, maxp] : {std::pair{3, 8}, {4, 6}, {5, 6}}) {
    int mismatches = 0, checked = 0;
    for (int p = 2; p <= maxp; p += 2) {
      for (const auto& code : enumerate_codes(n, p)) {
        const ColoredGraph g = decode(code);
        const auto hs = simplicial_homology(g);
        const Oracle o = oracle(g);
        ++checked;
        for (int d = 0; d < n; ++d) {
          const int t2 = torsion_divisible(hs[d], 2) + (d ? torsion_divisible(hs[d - 1], 2) : 0);
          const int t3 = torsion_divisible(hs[d], 3) + (d ? torsion_divisible(hs[d - 1], 3) : 0);
          if (hs[d].free_rank != o.betti[d] || o.dims_mod2[d] != o.betti[d] + t2 || o.dims_mod3[d] != o.betti[d] + t3)
            ++mismatches;
        }
        if (hs[1] != h1_edge_path(g)) ++mismatches;
      }
    }
    CAPTURE(n);
    CHECK(checked > 0);
    CHECK(mismatches == 0);
  }
}

TEST_CASE("euler characteristic from simplex counts and Betti numbers") {
  for (const auto& code : enumerate_codes(4, 8)) {
    const ColoredGraph g = decode(code);
    const auto hs = simplicial_homology(g);
    int alt = 0;
    for (std::size_t d = 0; d < hs.size(); ++d) alt += (d % 2 ? -1 : 1) * hs[d].free_rank;
    CHECK(alt == euler_characteristic(g));
  }
}

TEST_CASE("euler characteristic from regular genera") {
  for (const auto& code : enumerate_codes(5, 6)) {
    const ColoredGraph g = decode(code);
    if (!is_crystallization(g).crystallization) continue;
    const ManifoldClass mc = check_closed_manifold(g);
    if (mc.verdict == Verdict::kNotAManifoldComplex || mc.singular_colors.size() > 1) continue;
    const ColoredGraph n = normalize_singular_color(g, mc).graph;
    for (const auto& eps : CyclicPermutation::all(5)) CHECK(euler_via_genus(n, eps).chi == euler_characteristic(n));
  }
}

TEST_CASE("fundamental group presentations") {
  const ColoredGraph cp2 = fixture("cp2.gem");
  const Presentation p = pi1_presentation(cp2, 0, 1, PresentationFlavor::kCompactManifold);
  CHECK(p.n_generators >= 1);
  CHECK(tietze_simplify(p).trivial);
  CHECK(abelianization(p).trivial());
  CHECK(p.to_text().rfind("gens:", 0) == 0);

  const ColoredGraph rp3 = fixture("rp3.gem");
  for (Color i = 0; i < 4; ++i)
    for (Color j = i + 1; j < 4; ++j) {
      const Presentation q = pi1_presentation(rp3, i, j, PresentationFlavor::kCompactManifold);
      CHECK(abelianization(q).to_string() == "Z/2");
      CHECK_FALSE(tietze_simplify(q).trivial);
    }
  CHECK(free_reduce({1, 2, -2, -1, 3}) == Word{3});
  CHECK(free_reduce({1, -1}).empty());
}

TEST_CASE("homology report") {
  const HomologyReport cp2 = homology(fixture("cp2.gem"), {});
  CHECK(cp2.chi == 3);
  REQUIRE(cp2.chi_via_genus);
  CHECK(*cp2.chi_via_genus == 3);
  REQUIRE(cp2.beta2);
  CHECK(*cp2.beta2 == 1);
  CHECK(cp2.simply_connected());
  CHECK(beta2_via_genus(fixture("cp2.gem"), cp2) == 1);

  const HomologyReport s5 = homology(fixture("sigma5.gem"), {});
  CHECK(*s5.beta2 == 0);
  CHECK(beta2_via_genus(fixture("sigma5.gem"), s5) == 0);

  const HomologyReport rp3 = homology(fixture("rp3.gem"), {});
  CHECK(rp3.h1_edge_path.to_string() == "Z/2");
  CHECK_FALSE(rp3.simply_connected());
  CHECK(rp3.pi1_compact.abelianization.to_string() == "Z/2");
  CHECK_THROWS_AS(beta2_via_genus(fixture("rp3.gem"), rp3), PreconditionError);
}
