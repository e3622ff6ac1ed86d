#pragma once

#include <compare>
#include <span>
#include <string>
#include <vector>

#include "gemkit/colored_graph.hpp"
#include "gemkit/residues.hpp"

namespace gemkit {

// Exact value in (1/2)Z, stored as twice the value. Non-orientable regular
// embeddings have half-integer genus.
class HalfInteger {
 public:
  constexpr HalfInteger() = default;
  constexpr explicit HalfInteger(int value) : twice_(2 * value) {}
  static constexpr HalfInteger from_twice(int twice) {
    HalfInteger h;
    h.twice_ = twice;
    return h;
  }

  constexpr int twice() const { return twice_; }
  constexpr bool is_integer() const { return twice_ % 2 == 0; }
  // Only meaningful when is_integer().
  constexpr int integer() const { return twice_ / 2; }
  std::string to_string() const;

  friend constexpr HalfInteger operator+(HalfInteger a, HalfInteger b) { return from_twice(a.twice_ + b.twice_); }
  friend constexpr HalfInteger operator-(HalfInteger a, HalfInteger b) { return from_twice(a.twice_ - b.twice_); }
  friend constexpr HalfInteger operator*(int k, HalfInteger a) { return from_twice(k * a.twice_); }
  HalfInteger& operator+=(HalfInteger o) {
    twice_ += o.twice_;
    return *this;
  }
  friend constexpr bool operator==(HalfInteger, HalfInteger) = default;
  friend constexpr auto operator<=>(HalfInteger, HalfInteger) = default;

 private:
  int twice_ = 0;
};

// A cyclic ordering of {0,...,n} up to rotation and reversal. Stored with
// the last entry equal to n and the first entry smaller than the one before n,
// which picks one representative out of each {eps, eps^-1} pair.
class CyclicPermutation {
 public:
  // Accepts any sequence listing every color once.
  explicit CyclicPermutation(std::vector<Color> sequence);

  // Every class for n_colors colors, in lexicographic order of the
  // canonical sequences: (n_colors-1)!/2 of them (1 when n_colors = 3).
  static std::vector<CyclicPermutation> all(int n_colors);
  // "(0,2,1,3,4)"; the sequence need not be canonical.
  static CyclicPermutation parse(const std::string& text);

  const std::vector<Color>& sequence() const { return seq_; }
  Color operator[](int i) const { return seq_[((i % size()) + size()) % size()]; }
  int size() const { return static_cast<int>(seq_.size()); }
  std::string to_string() const;

  friend bool operator==(const CyclicPermutation&, const CyclicPermutation&) = default;
  friend auto operator<=>(const CyclicPermutation& a, const CyclicPermutation& b) { return a.seq_ <=> b.seq_; }

 private:
  std::vector<Color> seq_;
};

std::string sequence_to_string(std::span<const Color> seq);
// The cyclic sequence with `deleted` removed.
std::vector<Color> induced_sequence(std::span<const Color> seq, Color deleted);

// rho_eps of a connected (n+1)-colored graph from
//   2 - 2 rho = sum_j g_{eps_j, eps_j+1} + (1 - n) * order / 2.
// Throws PreconditionError if disconnected, StructuralError if negative.
HalfInteger genus_wrt(const ColoredGraph& g, std::span<const Color> sequence);
HalfInteger genus_wrt(const ColoredGraph& g, const CyclicPermutation& eps);

// Sum of the regular genera of the residues on the colors of `sequence`,
// each with respect to `sequence` (which lists a subset of the colors).
HalfInteger residue_genus_sum(const ResidueTable& residues, std::span<const Color> sequence);

// rho_{eps_i-hat}: genus of the residue(s) missing color eps_i, with respect
// to the induced permutation. Sums over components when there are several.
HalfInteger subgenus(const ColoredGraph& g, const CyclicPermutation& eps, int i);
HalfInteger subgenus_by_color(const ResidueTable& residues, std::span<const Color> sequence, Color deleted);

struct GenusEntry {
  CyclicPermutation eps;
  HalfInteger rho;
  std::vector<HalfInteger> subgenera;  // index i: rho_{eps_i-hat}
};

struct GenusReport {
  int n_colors = 0;
  std::vector<GenusEntry> entries;  // canonical permutation order
  HalfInteger regular_genus;
  bool orientable = true;           // bipartite
  bool contracted = true;           // every (n)-colored spanning subgraph connected

  const GenusEntry& at(const CyclicPermutation& eps) const;
  std::vector<CyclicPermutation> minimizers() const;
};

GenusReport genus_all(const ColoredGraph& g);

}  // namespace gemkit
