#include "gemkit/genus.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "gemkit/errors.hpp"

namespace gemkit {

std::string HalfInteger::to_string() const {
  if (is_integer()) return std::to_string(twice_ / 2);
  const int magnitude = twice_ < 0 ? -twice_ : twice_;
  return (twice_ < 0 ? "-" : "") + std::to_string(magnitude / 2) + ".5";
}

namespace {

void validate_sequence(std::span<const Color> seq, int n_colors, bool full) {
  std::uint32_t seen = 0;
  for (Color c : seq) {
    if (c < 0 || c >= n_colors || ((seen >> c) & 1u))
      throw PreconditionError("cyclic sequence " + sequence_to_string(seq) + " is not a permutation of the colors");
    seen |= 1u << c;
  }
  if (full && static_cast<int>(seq.size()) != n_colors)
    throw PreconditionError("cyclic sequence " + sequence_to_string(seq) + " must list all " +
                            std::to_string(n_colors) + " colors");
}

}  // namespace

CyclicPermutation::CyclicPermutation(std::vector<Color> sequence) {
  const int k = static_cast<int>(sequence.size());
  if (k < 2) throw PreconditionError("a cyclic permutation needs at least two colors");
  validate_sequence(sequence, k, true);
  // Rotate so that the largest color comes last.
  auto top = std::find(sequence.begin(), sequence.end(), k - 1);
  std::rotate(sequence.begin(), top + 1, sequence.end());
  // Choose between the sequence and its reversal (which also ends with k-1).
  if (k > 2 && sequence.front() > sequence[k - 2]) std::reverse(sequence.begin(), sequence.end() - 1);
  seq_ = std::move(sequence);
}

std::vector<CyclicPermutation> CyclicPermutation::all(int n_colors) {
  std::vector<Color> head(n_colors - 1);
  std::iota(head.begin(), head.end(), 0);
  std::vector<CyclicPermutation> out;
  do {
    if (n_colors <= 2 || head.front() < head.back()) {
      std::vector<Color> seq(head);
      seq.push_back(n_colors - 1);
      out.emplace_back(std::move(seq));
    }
  } while (std::next_permutation(head.begin(), head.end()));
  return out;
}

CyclicPermutation CyclicPermutation::parse(const std::string& text) {
  std::string s;
  for (char ch : text)
    if (ch != ' ') s.push_back(ch);
  if (s.size() < 2 || s.front() != '(' || s.back() != ')') throw ParseError("permutation must look like (0,1,2,3,4)");
  std::vector<Color> seq;
  std::istringstream in(s.substr(1, s.size() - 2));
  std::string tok;
  while (std::getline(in, tok, ',')) {
    try {
      std::size_t used = 0;
      seq.push_back(std::stoi(tok, &used));
      if (used != tok.size()) throw ParseError("bad permutation entry '" + tok + "'");
    } catch (const std::logic_error&) {
      throw ParseError("bad permutation entry '" + tok + "'");
    }
  }
  try {
    return CyclicPermutation(std::move(seq));
  } catch (const PreconditionError& e) {
    throw ParseError(e.what());
  }
}

std::string CyclicPermutation::to_string() const { return sequence_to_string(seq_); }

std::string sequence_to_string(std::span<const Color> seq) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < seq.size(); ++i) os << (i ? "," : "") << seq[i];
  os << ')';
  return os.str();
}

std::vector<Color> induced_sequence(std::span<const Color> seq, Color deleted) {
  std::vector<Color> out;
  for (Color c : seq)
    if (c != deleted) out.push_back(c);
  return out;
}

HalfInteger residue_genus_sum(const ResidueTable& residues, std::span<const Color> sequence) {
  validate_sequence(sequence, residues.n_colors(), false);
  const int k = static_cast<int>(sequence.size());
  ColorSet colors;
  for (Color c : sequence) colors = colors.with(c);
  int pair_sum = 0;
  for (int j = 0; j < k; ++j) pair_sum += residues.count(ColorSet{sequence[j], sequence[(j + 1) % k]});
  // Per component: 2 - 2 rho = sum of pair counts + (1 - (k-1)) * order/2.
  const int twice_rho = 2 * residues.count(colors) - pair_sum - (2 - k) * residues.order() / 2;
  if (twice_rho < 0)
    throw StructuralError("negative regular genus for sequence " + sequence_to_string(sequence) +
                          ": input is not a gem");
  return HalfInteger::from_twice(twice_rho);
}

HalfInteger genus_wrt(const ColoredGraph& g, std::span<const Color> sequence) {
  require_connected(g, "genus_wrt");
  validate_sequence(sequence, g.n_colors(), true);
  return residue_genus_sum(ResidueTable(g), sequence);
}

HalfInteger genus_wrt(const ColoredGraph& g, const CyclicPermutation& eps) {
  if (eps.size() != g.n_colors()) throw PreconditionError("permutation size does not match the color count");
  return genus_wrt(g, eps.sequence());
}

HalfInteger subgenus_by_color(const ResidueTable& residues, std::span<const Color> sequence, Color deleted) {
  const auto induced = induced_sequence(sequence, deleted);
  if (induced.size() + 1 != sequence.size()) throw PreconditionError("deleted color is not in the sequence");
  return residue_genus_sum(residues, induced);
}

HalfInteger subgenus(const ColoredGraph& g, const CyclicPermutation& eps, int i) {
  require_connected(g, "subgenus");
  if (eps.size() != g.n_colors()) throw PreconditionError("permutation size does not match the color count");
  if (i < 0 || i >= eps.size()) throw PreconditionError("subgenus index out of range");
  return subgenus_by_color(ResidueTable(g), eps.sequence(), eps[i]);
}

const GenusEntry& GenusReport::at(const CyclicPermutation& eps) const {
  for (const auto& e : entries)
    if (e.eps == eps) return e;
  throw PreconditionError("permutation " + eps.to_string() + " not in report");
}

std::vector<CyclicPermutation> GenusReport::minimizers() const {
  std::vector<CyclicPermutation> out;
  for (const auto& e : entries)
    if (e.rho == regular_genus) out.push_back(e.eps);
  return out;
}

GenusReport genus_all(const ColoredGraph& g) {
  require_connected(g, "genus_all");
  const ResidueTable residues(g);
  GenusReport report;
  report.n_colors = g.n_colors();
  report.orientable = is_bipartite(g);
  for (Color c = 0; c < g.n_colors(); ++c)
    if (residues.count(ColorSet::single(c).complement(g.n_colors())) != 1) report.contracted = false;
  bool first = true;
  for (auto& eps : CyclicPermutation::all(g.n_colors())) {
    GenusEntry entry{eps, residue_genus_sum(residues, eps.sequence()), {}};
    for (int i = 0; i < eps.size(); ++i) entry.subgenera.push_back(subgenus_by_color(residues, eps.sequence(), eps[i]));
    if (first || entry.rho < report.regular_genus) report.regular_genus = entry.rho;
    first = false;
    report.entries.push_back(std::move(entry));
  }
  return report;
}

}  // namespace gemkit
