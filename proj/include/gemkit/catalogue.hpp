#pragma once

#include <functional>
#include <string>
#include <vector>

#include "gemkit/canonical.hpp"
#include "gemkit/colored_graph.hpp"
#include "gemkit/report.hpp"

namespace gemkit {

enum class Filter {
  kBipartite,
  kManifold,
  kCrystallization,
  kSimplyConnected,
  kWeakSimple,
  kHandleWitness,
  kNonsphere,
  kDipoleFree,
};

const char* to_string(Filter f);
// "bipartite,manifold,..." -> filters in declared order. Throws ParseError.
std::vector<Filter> parse_filters(const std::string& text);
bool passes(const Analysis& a, Filter f);

// All fixed-point-free involutions of {0..order-1}, in lexicographic order.
std::vector<std::vector<Vertex>> all_involutions(int order);

// A shard is the subtree of the search below one two-colored partial graph
// (the first two matchings) of a given order.
struct Shard {
  int order = 0;
  int index = 0;
  ColoredGraph prefix;
};

// Shards of one order, sorted by the canonical form of their prefix.
std::vector<Shard> make_shards(int n_colors, int order);

// Canonical codes (up to color permutation) of the connected graphs found
// below a shard, sorted and duplicate-free. Graphs in different shards may
// coincide.
std::vector<CanonicalCode> run_shard(int n_colors, const Shard& shard);

// All connected graphs of the given order up to isomorphism and color
// permutation, sorted by code.
std::vector<CanonicalCode> enumerate_codes(int n_colors, int order, int jobs = 1);

struct CatalogueRecord {
  CanonicalCode code;
  Json json;  // one line of the catalogue
};

CatalogueRecord make_record(const ColoredGraph& g);
CatalogueRecord make_record(const Analysis& a);

struct EnumerationOptions {
  int n_colors = 5;
  int max_order = 2;
  std::vector<Filter> filters;
  int jobs = 1;
  std::string meta_path;      // checkpoint file; empty disables checkpoints
  bool resume = false;        // skip shards recorded in meta_path
  double time_budget = 0;     // seconds; 0 means unlimited
};

struct EnumerationResult {
  bool complete = true;  // false when the time budget stopped the run
  std::vector<CatalogueRecord> records;
  int shards_total = 0;
  int shards_done = 0;
  int graphs = 0;  // before filters
};

// Enumerates orders 2, 4, ..., max_order. Records are sorted by code and
// identical for every worker count.
EnumerationResult enumerate(const EnumerationOptions& options);

// JSON-Lines text for the records.
std::string format_catalogue(const std::vector<CatalogueRecord>& records);
std::vector<CatalogueRecord> parse_catalogue(const std::string& text);

struct PropertyResult {
  std::string name;
  int checked = 0;
  int passed = 0;
  std::vector<std::string> failures;  // "code: message"
};

struct VerifyReport {
  int records = 0;
  std::vector<PropertyResult> properties;
  bool ok() const;
  Json to_json() const;
};

// Replays the module identities on every record and compares each record
// with one recomputed from its code.
VerifyReport verify_corpus(const std::vector<CatalogueRecord>& records, int jobs = 1);

// Runs fn(0..n-1) on up to `jobs` threads.
void parallel_for(int n, int jobs, const std::function<void(int)>& fn);

}  // namespace gemkit
