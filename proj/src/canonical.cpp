#include "gemkit/canonical.hpp"

#include <algorithm>
#include <numeric>

#include "gemkit/errors.hpp"
#include "gemkit/residues.hpp"

namespace gemkit {

const char* to_string(CodeFlavor flavor) {
  return flavor == CodeFlavor::kColorPreserving ? "color-preserving" : "up-to-color-permutation";
}

namespace {

// Breadth-first stream from `start`, visiting colors in `order`. Compares
// against `best` while emitting and stops at the first position where the
// stream exceeds it. Returns <0 if the stream is smaller than best (or best
// is empty), 0 if equal, >0 if it was abandoned as larger.
class StreamBuilder {
 public:
  explicit StreamBuilder(const ColoredGraph& g) : g_(g), label_(g.order(), -1) {}

  int run(Vertex start, std::span<const Color> order, const std::vector<std::uint16_t>& best,
          std::vector<std::uint16_t>& out) {
    std::fill(label_.begin(), label_.end(), -1);
    queue_.clear();
    out.clear();
    int cmp = best.empty() ? -1 : 0;
    label_[start] = 0;
    queue_.push_back(start);
    for (std::size_t head = 0; head < queue_.size(); ++head) {
      const Vertex v = queue_[head];
      for (Color c : order) {
        const Vertex w = g_.neighbor(v, c);
        if (label_[w] < 0) {
          label_[w] = static_cast<int>(queue_.size());
          queue_.push_back(w);
        }
        const auto x = static_cast<std::uint16_t>(label_[w]);
        if (cmp == 0) {
          const std::size_t pos = out.size();
          if (pos >= best.size() || x > best[pos]) return 1;
          if (x < best[pos]) cmp = -1;
        }
        out.push_back(x);
      }
    }
    if (cmp == 0 && out.size() < best.size()) cmp = -1;
    return cmp;
  }

  const std::vector<int>& labels() const { return label_; }

 private:
  const ColoredGraph& g_;
  std::vector<int> label_;
  std::vector<Vertex> queue_;
};

struct Best {
  std::vector<std::uint16_t> stream;
  Vertex start = -1;
  std::size_t order_index = 0;
};

Best minimize(const ColoredGraph& g, std::span<const std::vector<Color>> orders) {
  StreamBuilder builder(g);
  Best best;
  std::vector<std::uint16_t> scratch;
  for (std::size_t oi = 0; oi < orders.size(); ++oi) {
    for (Vertex s = 0; s < g.order(); ++s) {
      if (builder.run(s, orders[oi], best.stream, scratch) < 0) {
        best.stream.swap(scratch);
        best.start = s;
        best.order_index = oi;
      }
    }
  }
  return best;
}

std::vector<std::vector<Color>> orders_for(const ColoredGraph& g, CodeFlavor flavor) {
  if (flavor == CodeFlavor::kUpToColorPermutation) return all_permutations(g.n_colors());
  std::vector<Color> id(g.n_colors());
  std::iota(id.begin(), id.end(), 0);
  return {id};
}

CanonicalCode pack(CodeFlavor flavor, int n_colors, int order, const std::vector<std::uint16_t>& stream) {
  CanonicalCode code;
  code.flavor = flavor;
  auto& b = code.bytes;
  b.push_back(static_cast<char>(flavor));
  b.push_back(static_cast<char>(n_colors));
  b.push_back(static_cast<char>((order >> 8) & 0xFF));
  b.push_back(static_cast<char>(order & 0xFF));
  const bool wide = order > 256;
  for (auto x : stream) {
    if (wide) b.push_back(static_cast<char>(x >> 8));
    b.push_back(static_cast<char>(x & 0xFF));
  }
  return code;
}

}  // namespace

std::vector<std::vector<Color>> all_permutations(int k) {
  std::vector<Color> p(k);
  std::iota(p.begin(), p.end(), 0);
  std::vector<std::vector<Color>> out;
  do {
    out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

std::string CanonicalCode::hex() const {
  static constexpr char kDigits[] = "0123456789abcdef";
  std::string out;
  out.reserve(bytes.size() * 2);
  for (unsigned char c : bytes) {
    out.push_back(kDigits[c >> 4]);
    out.push_back(kDigits[c & 0xF]);
  }
  return out;
}

CanonicalCode CanonicalCode::from_hex(const std::string& hex) {
  if (hex.size() % 2 != 0 || hex.size() < 8) throw ParseError("canonical code: bad hex length");
  auto nibble = [](char c) -> int {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'f') return c - 'a' + 10;
    if (c >= 'A' && c <= 'F') return c - 'A' + 10;
    throw ParseError("canonical code: bad hex digit");
  };
  CanonicalCode code;
  for (std::size_t i = 0; i < hex.size(); i += 2)
    code.bytes.push_back(static_cast<char>(nibble(hex[i]) * 16 + nibble(hex[i + 1])));
  const auto f = static_cast<unsigned char>(code.bytes[0]);
  if (f > 1) throw ParseError("canonical code: unknown flavor");
  code.flavor = static_cast<CodeFlavor>(f);
  return code;
}

CanonicalLabeling canonical_labeling(const ColoredGraph& g, CodeFlavor flavor) {
  require_connected(g, "canonical_code");
  const auto orders = orders_for(g, flavor);
  const Best best = minimize(g, orders);
  StreamBuilder builder(g);
  std::vector<std::uint16_t> scratch;
  builder.run(best.start, orders[best.order_index], {}, scratch);
  CanonicalLabeling out;
  out.code = pack(flavor, g.n_colors(), g.order(), best.stream);
  out.vertex_perm.assign(builder.labels().begin(), builder.labels().end());
  // Position k of the order visits original color order[k], which becomes
  // color k of the decoded graph.
  const auto& order = orders[best.order_index];
  out.color_perm.assign(order.size(), 0);
  for (std::size_t k = 0; k < order.size(); ++k) out.color_perm[order[k]] = static_cast<Color>(k);
  return out;
}

CanonicalCode canonical_code(const ColoredGraph& g, CodeFlavor flavor) {
  require_connected(g, "canonical_code");
  const auto orders = orders_for(g, flavor);
  return pack(flavor, g.n_colors(), g.order(), minimize(g, orders).stream);
}

ColoredGraph decode(const CanonicalCode& code) {
  const auto& b = code.bytes;
  if (b.size() < 4) throw ParseError("canonical code too short");
  const int n_colors = static_cast<unsigned char>(b[1]);
  const int order = static_cast<unsigned char>(b[2]) * 256 + static_cast<unsigned char>(b[3]);
  const bool wide = order > 256;
  const std::size_t expected = 4 + static_cast<std::size_t>(order) * n_colors * (wide ? 2 : 1);
  if (n_colors < 1 || order < 2 || b.size() != expected) throw ParseError("canonical code has inconsistent length");
  std::vector<std::vector<Vertex>> m(n_colors, std::vector<Vertex>(order, -1));
  std::size_t pos = 4;
  for (int v = 0; v < order; ++v) {
    for (int c = 0; c < n_colors; ++c) {
      int x = static_cast<unsigned char>(b[pos++]);
      if (wide) x = x * 256 + static_cast<unsigned char>(b[pos++]);
      m[c][v] = x;
    }
  }
  return ColoredGraph(n_colors, std::move(m));
}

namespace detail {

std::vector<std::uint16_t> component_form(const ColoredGraph& g, std::span<const std::vector<Color>> color_orders) {
  const auto comps = label_components(g, g.colors());
  std::vector<std::vector<Vertex>> members(comps.count);
  for (Vertex v = 0; v < g.order(); ++v) members[comps.component[v]].push_back(v);

  StreamBuilder builder(g);
  std::vector<std::uint16_t> best_total;
  std::vector<std::uint16_t> scratch;
  std::vector<std::vector<std::uint16_t>> per_component(comps.count);
  for (const auto& order : color_orders) {
    for (int k = 0; k < comps.count; ++k) {
      auto& best = per_component[k];
      best.clear();
      for (Vertex s : members[k])
        if (builder.run(s, order, best, scratch) < 0) best.swap(scratch);
    }
    std::sort(per_component.begin(), per_component.end());
    std::vector<std::uint16_t> total;
    for (const auto& s : per_component) {
      total.push_back(0xFFFF);
      total.insert(total.end(), s.begin(), s.end());
    }
    if (best_total.empty() || total < best_total) best_total.swap(total);
  }
  return best_total;
}

}  // namespace detail

}  // namespace gemkit
