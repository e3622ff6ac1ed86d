#pragma once

#include <bit>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace gemkit {

using Vertex = int;
using Color = int;

inline constexpr int kMaxColors = 8;

// A subset of the color set {0,...,n}, stored as a bitmask. Iteration and
// printing are always in increasing color order.
class ColorSet {
 public:
  constexpr ColorSet() = default;
  constexpr explicit ColorSet(std::uint32_t mask) : mask_(mask) {}
  ColorSet(std::initializer_list<Color> colors) {
    for (Color c : colors) mask_ |= 1u << c;
  }

  static constexpr ColorSet all(int n_colors) { return ColorSet((1u << n_colors) - 1u); }
  static constexpr ColorSet single(Color c) { return ColorSet(1u << c); }

  constexpr std::uint32_t mask() const { return mask_; }
  constexpr int size() const { return std::popcount(mask_); }
  constexpr bool empty() const { return mask_ == 0; }
  constexpr bool contains(Color c) const { return (mask_ >> c) & 1u; }
  constexpr bool subset_of(ColorSet other) const { return (mask_ & ~other.mask_) == 0; }

  constexpr ColorSet with(Color c) const { return ColorSet(mask_ | (1u << c)); }
  constexpr ColorSet without(Color c) const { return ColorSet(mask_ & ~(1u << c)); }
  // Complement inside {0,...,n_colors-1}: the "hat" notation.
  constexpr ColorSet complement(int n_colors) const { return ColorSet(all(n_colors).mask_ & ~mask_); }

  std::vector<Color> colors() const;
  // "{0,1,3}"
  std::string to_string() const;

  friend constexpr bool operator==(ColorSet, ColorSet) = default;
  friend constexpr auto operator<=>(ColorSet a, ColorSet b) { return a.mask_ <=> b.mask_; }

 private:
  std::uint32_t mask_ = 0;
};

// An (n+1)-regular properly edge-colored multigraph without loops, stored as
// one fixed-point-free involution per color. Immutable after construction.
class ColoredGraph {
 public:
  // matchings[c][v] is the vertex joined to v by the c-colored edge.
  // Throws ParseError if some matching is not a fixed-point-free involution
  // or the sizes disagree.
  ColoredGraph(int n_colors, std::vector<std::vector<Vertex>> matchings);

  // The order-2 graph whose two vertices are joined by every color.
  static ColoredGraph standard(int n_colors);

  int n_colors() const { return n_colors_; }
  int dimension() const { return n_colors_ - 1; }
  int order() const { return order_; }
  ColorSet colors() const { return ColorSet::all(n_colors_); }

  Vertex neighbor(Vertex v, Color c) const { return adj_[static_cast<std::size_t>(c) * order_ + v]; }
  std::span<const Vertex> matching(Color c) const {
    return {adj_.data() + static_cast<std::size_t>(c) * order_, static_cast<std::size_t>(order_)};
  }
  std::vector<std::vector<Vertex>> matchings() const;

  bool is_connected() const;

  // Vertex v of *this becomes vertex perm[v] of the result.
  ColoredGraph relabeled(std::span<const Vertex> perm) const;
  // Color c of *this becomes color perm[c] of the result.
  ColoredGraph recolored(std::span<const Color> perm) const;

  friend bool operator==(const ColoredGraph&, const ColoredGraph&) = default;

 private:
  int n_colors_ = 0;
  int order_ = 0;
  std::vector<Vertex> adj_;
};

ColoredGraph disjoint_union(const ColoredGraph& a, const ColoredGraph& b);

// Two-coloring of the vertices, or an odd closed walk proving there is none.
struct Bipartition {
  bool bipartite = false;
  std::vector<int> side;           // 0/1 per vertex when bipartite
  std::vector<Vertex> odd_cycle;   // closed walk of odd length otherwise
};

// Throws PreconditionError on disconnected input.
Bipartition bipartition(const ColoredGraph& g);
bool is_bipartite(const ColoredGraph& g);

void require_connected(const ColoredGraph& g, const char* operation);
void require_color(const ColoredGraph& g, Color c);

}  // namespace gemkit
