#include "gemkit/gem_io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "gemkit/errors.hpp"

namespace gemkit {

namespace {

std::vector<long> parse_ints(const std::string& line, int line_no) {
  std::vector<long> out;
  const char* p = line.data();
  const char* end = p + line.size();
  while (p < end) {
    while (p < end && (*p == ' ' || *p == '\t' || *p == '\r')) ++p;
    if (p == end) break;
    long value = 0;
    auto [next, ec] = std::from_chars(p, end, value);
    if (ec != std::errc() || (next < end && *next != ' ' && *next != '\t' && *next != '\r'))
      throw ParseError("line " + std::to_string(line_no) + ": expected integers");
    out.push_back(value);
    p = next;
  }
  return out;
}

}  // namespace

ColoredGraph parse_gem(const std::string& text) {
  if (text.empty() || text.back() != '\n') throw ParseError(".gem input must end with a newline");
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  bool have_header = false;
  int n_colors = 0;
  long order = 0;
  std::vector<std::vector<Vertex>> rows;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line[0] == '#') continue;
    if (!have_header) {
      std::istringstream hs(line);
      std::string tag;
      long nc = 0;
      if (!(hs >> tag >> nc >> order) || tag != "gem")
        throw ParseError("line " + std::to_string(line_no) + ": expected header 'gem <n_colors> <order>'");
      std::string rest;
      if (hs >> rest) throw ParseError("line " + std::to_string(line_no) + ": trailing tokens after header");
      if (nc < 3 || nc > kMaxColors) throw ParseError("a gem needs 3 to 8 colors, got " + std::to_string(nc));
      if (order < 2 || order % 2 != 0 || order > 65535)
        throw ParseError("order must be a positive even integer, got " + std::to_string(order));
      n_colors = static_cast<int>(nc);
      have_header = true;
      continue;
    }
    const auto values = parse_ints(line, line_no);
    if (values.empty()) throw ParseError("line " + std::to_string(line_no) + ": empty matching line");
    if (static_cast<long>(values.size()) != order)
      throw ParseError("line " + std::to_string(line_no) + ": expected " + std::to_string(order) + " entries");
    if (static_cast<int>(rows.size()) == n_colors) throw ParseError("line " + std::to_string(line_no) + ": extra matching line");
    std::vector<Vertex> row;
    for (long x : values) {
      if (x < 0 || x >= order) throw ParseError("line " + std::to_string(line_no) + ": vertex out of range");
      row.push_back(static_cast<Vertex>(x));
    }
    rows.push_back(std::move(row));
  }
  if (!have_header) throw ParseError("missing 'gem' header");
  if (static_cast<int>(rows.size()) != n_colors)
    throw ParseError("expected " + std::to_string(n_colors) + " matching lines, got " + std::to_string(rows.size()));
  return ColoredGraph(n_colors, std::move(rows));
}

ColoredGraph read_gem(std::istream& in) {
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_gem(ss.str());
}

ColoredGraph read_gem_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path.string());
  return read_gem(in);
}

std::string format_gem(const ColoredGraph& g) {
  std::ostringstream os;
  write_gem(os, g);
  return os.str();
}

void write_gem(std::ostream& out, const ColoredGraph& g) {
  out << "gem " << g.n_colors() << ' ' << g.order() << '\n';
  for (Color c = 0; c < g.n_colors(); ++c) {
    auto m = g.matching(c);
    for (std::size_t v = 0; v < m.size(); ++v) out << (v ? " " : "") << m[v];
    out << '\n';
  }
}

void write_gem_file(const std::filesystem::path& path, const ColoredGraph& g) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write " + path.string());
  write_gem(out, g);
}

}  // namespace gemkit
