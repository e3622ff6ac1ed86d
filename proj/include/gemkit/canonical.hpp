#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "gemkit/colored_graph.hpp"

namespace gemkit {

enum class CodeFlavor : std::uint8_t {
  kColorPreserving = 0,
  kUpToColorPermutation = 1,
};

const char* to_string(CodeFlavor flavor);

// A byte string identifying a connected colored graph up to vertex
// relabeling (and, for kUpToColorPermutation, recoloring).
//
// Layout: flavor, n_colors, order (2 bytes, big endian), then the
// breadth-first label stream: for every vertex in discovery order and every
// color position, the discovery label of the neighbor. Labels take one byte
// when order <= 256 and two bytes otherwise. The stream is the
// lexicographic minimum over start vertices (and color orders), and it is
// decodable back into a graph.
struct CanonicalCode {
  CodeFlavor flavor = CodeFlavor::kColorPreserving;
  std::string bytes;

  std::string hex() const;
  static CanonicalCode from_hex(const std::string& hex);

  friend bool operator==(const CanonicalCode&, const CanonicalCode&) = default;
  friend auto operator<=>(const CanonicalCode& a, const CanonicalCode& b) { return a.bytes <=> b.bytes; }
};

// Throws PreconditionError on disconnected input.
CanonicalCode canonical_code(const ColoredGraph& g, CodeFlavor flavor);

// The graph the code was read from, in canonical labeling. Throws ParseError
// on malformed codes.
ColoredGraph decode(const CanonicalCode& code);

// Canonical labeling of g: perm[v] is the label of v in decode(code).
struct CanonicalLabeling {
  CanonicalCode code;
  std::vector<Vertex> vertex_perm;
  std::vector<Color> color_perm;  // identity for kColorPreserving
};
CanonicalLabeling canonical_labeling(const ColoredGraph& g, CodeFlavor flavor);

// All permutations of {0,...,k-1} in lexicographic order.
std::vector<std::vector<Color>> all_permutations(int k);

namespace detail {

// Canonical label stream of a possibly disconnected graph: the sorted list of
// per-component minimal streams, minimized over the supplied color orders.
// Used by the enumerator on partial (not yet connected) matchings.
std::vector<std::uint16_t> component_form(const ColoredGraph& g, std::span<const std::vector<Color>> color_orders);

}  // namespace detail

}  // namespace gemkit
