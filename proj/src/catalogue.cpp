#include "gemkit/catalogue.hpp"

#include <atomic>
#include <chrono>
#include <ctime>
#include <fstream>
#include <map>
#include <mutex>
#include <set>
#include <sstream>
#include <thread>

#include "gemkit/errors.hpp"
#include "gemkit/moves.hpp"
#include "gemkit/residues.hpp"

namespace gemkit {

namespace {

constexpr std::pair<Filter, const char*> kFilterNames[] = {
    {Filter::kBipartite, "bipartite"},
    {Filter::kManifold, "manifold"},
    {Filter::kCrystallization, "crystallization"},
    {Filter::kSimplyConnected, "simply-connected"},
    {Filter::kWeakSimple, "weak-simple"},
    {Filter::kHandleWitness, "handle-witness"},
    {Filter::kNonsphere, "nonsphere"},
    {Filter::kDipoleFree, "dipole-free"},
};

std::string timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

ColoredGraph with_matching(const ColoredGraph& g, const std::vector<Vertex>& m) {
  auto ms = g.matchings();
  ms.push_back(m);
  return ColoredGraph(g.n_colors() + 1, std::move(ms));
}

std::vector<Vertex> standard_matching(int order) {
  std::vector<Vertex> m(order);
  for (Vertex v = 0; v < order; ++v) m[v] = v ^ 1;
  return m;
}

void require_enumerable(int n_colors, int order) {
  if (n_colors < 3 || n_colors > kMaxColors)
    throw PreconditionError("enumeration needs 3 to " + std::to_string(kMaxColors) + " colors");
  if (order < 2 || order % 2 != 0) throw PreconditionError("enumeration order must be even and at least 2");
}

}  // namespace

const char* to_string(Filter f) {
  for (const auto& [filter, name] : kFilterNames)
    if (filter == f) return name;
  return "?";
}

std::vector<Filter> parse_filters(const std::string& text) {
  std::vector<Filter> out;
  std::istringstream in(text);
  for (std::string tok; std::getline(in, tok, ',');) {
    if (tok.empty()) continue;
    bool found = false;
    for (const auto& [filter, name] : kFilterNames)
      if (tok == name) {
        out.push_back(filter);
        found = true;
      }
    if (!found) throw ParseError("unknown filter '" + tok + "'");
  }
  return out;
}

bool passes(const Analysis& a, Filter f) {
  switch (f) {
    case Filter::kBipartite: return a.bipartite;
    case Filter::kManifold: return is_manifold(a);
    case Filter::kCrystallization: return a.crystallization.crystallization;
    case Filter::kSimplyConnected: return a.homology && a.homology->simply_connected();
    case Filter::kWeakSimple: return a.classification && !a.classification->weak_simple.witnesses.empty();
    case Filter::kHandleWitness: return !a.witnesses.empty();
    case Filter::kNonsphere: return a.sphere && a.sphere->status == SphereStatus::kCertifiedNonsphere;
    case Filter::kDipoleFree: return find_dipoles(a.graph).empty();
  }
  return false;
}

std::vector<std::vector<Vertex>> all_involutions(int order) {
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

std::vector<Shard> make_shards(int n_colors, int order) {
  require_enumerable(n_colors, order);
  const ColoredGraph base(1, {standard_matching(order)});
  const auto perms = all_permutations(2);
  std::map<std::vector<std::uint16_t>, ColoredGraph> seen;
  for (const auto& m : all_involutions(order)) {
    ColoredGraph g = with_matching(base, m);
    seen.emplace(detail::component_form(g, perms), std::move(g));
  }
  std::vector<Shard> out;
  for (auto& [key, g] : seen) out.push_back(Shard{order, static_cast<int>(out.size()), g});
  return out;
}

std::vector<CanonicalCode> run_shard(int n_colors, const Shard& shard) {
  const auto involutions = all_involutions(shard.order);
  std::vector<ColoredGraph> frontier{shard.prefix};
  for (int level = 2; level + 1 < n_colors; ++level) {
    const auto perms = all_permutations(level + 1);
    std::map<std::vector<std::uint16_t>, ColoredGraph> next;
    for (const auto& g : frontier)
      for (const auto& m : involutions) {
        ColoredGraph h = with_matching(g, m);
        auto key = detail::component_form(h, perms);
        next.emplace(std::move(key), std::move(h));
      }
    frontier.clear();
    for (auto& [key, g] : next) frontier.push_back(std::move(g));
  }
  std::set<CanonicalCode> codes;
  for (const auto& g : frontier)
    for (const auto& m : involutions) {
      const ColoredGraph h = with_matching(g, m);
      if (h.is_connected()) codes.insert(canonical_code(h, CodeFlavor::kUpToColorPermutation));
    }
  return {codes.begin(), codes.end()};
}

void parallel_for(int n, int jobs, const std::function<void(int)>& fn) {
  jobs = std::max(1, std::min(jobs, n));
  if (jobs == 1) {
    for (int i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<int> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  std::vector<std::thread> workers;
  for (int w = 0; w < jobs; ++w)
    workers.emplace_back([&] {
      for (int i = next++; i < n; i = next++) {
        try {
          fn(i);
        } catch (...) {
          std::lock_guard lock(error_mutex);
          if (!error) error = std::current_exception();
          next = n;
        }
      }
    });
  for (auto& t : workers) t.join();
  if (error) std::rethrow_exception(error);
}

std::vector<CanonicalCode> enumerate_codes(int n_colors, int order, int jobs) {
  const auto shards = make_shards(n_colors, order);
  std::vector<std::vector<CanonicalCode>> results(shards.size());
  parallel_for(static_cast<int>(shards.size()), jobs, [&](int i) { results[i] = run_shard(n_colors, shards[i]); });
  std::set<CanonicalCode> all;
  for (const auto& r : results) all.insert(r.begin(), r.end());
  return {all.begin(), all.end()};
}

CatalogueRecord make_record(const Analysis& a) {
  Json j;
  j["code"] = a.code.hex();
  j["n_colors"] = a.graph.n_colors();
  j["order"] = a.graph.order();
  j["bipartite"] = a.bipartite;
  if (a.manifold) {
    j["manifold_class"] = to_string(a.manifold->verdict);
    Json sc = Json::array();
    for (Color c : a.manifold->singular_colors) sc.push_back(c);
    j["singular_colors"] = sc;
    j["conditional"] = a.manifold->conditional;
  } else {
    j["manifold_class"] = nullptr;
  }
  j["crystallization"] = a.crystallization.crystallization;
  j["genus"] = {{"regular_genus", to_json(a.genus.regular_genus)}, {"minimizers", a.genus.minimizers().size()}};
  if (a.homology) {
    const auto& h = *a.homology;
    j["homology"] = {{"chi", h.chi},
                     {"h1", to_json(h.h1_edge_path)},
                     {"beta2", h.beta2 ? Json(*h.beta2) : Json(nullptr)},
                     {"simply_connected", h.simply_connected()}};
  } else {
    j["homology"] = nullptr;
  }
  if (a.classification) {
    const auto& c = *a.classification;
    j["classification"] = {{"simple", c.simple},
                           {"weak_simple_witnesses", c.weak_simple.witnesses.size()},
                           {"conditional", c.conditional},
                           {"exact_genus_certified", c.bounds && c.bounds->exact_genus_certified}};
  } else {
    j["classification"] = nullptr;
  }
  const Json handles = handles_section(a);
  if (handles.contains("skipped")) j["handles"] = nullptr;
  else j["handles"] = {{"witnesses", handles["witness_count"]}, {"profile", handles["profile"]}};
  j["sphere"] = a.sphere ? Json(to_string(a.sphere->status)) : Json(nullptr);
  j["provenance"] = {{"generator", std::string("gemkit ") + version()}};
  return CatalogueRecord{a.code, j};
}

CatalogueRecord make_record(const ColoredGraph& g) { return make_record(analyze(g)); }

namespace {

struct ShardKey {
  int order;
  int index;
  auto operator<=>(const ShardKey&) const = default;
};

class MetaFile {
 public:
  MetaFile(const EnumerationOptions& o, std::string started) : options_(o), started_(std::move(started)) {}

  void load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot read checkpoint " + path);
    Json j;
    try {
      j = Json::parse(in);
    } catch (const std::exception& e) {
      throw ParseError("malformed checkpoint " + path + ": " + e.what());
    }
    if (j.value("n_colors", -1) != options_.n_colors || j.value("max_order", -1) != options_.max_order)
      throw PreconditionError("checkpoint " + path + " was written for different parameters");
    started_ = j.value("started", started_);
    for (const auto& s : j.at("shards")) {
      std::vector<CanonicalCode> codes;
      for (const auto& h : s.at("codes")) codes.push_back(CanonicalCode::from_hex(h.get<std::string>()));
      done_[{s.at("order").get<int>(), s.at("index").get<int>()}] = std::move(codes);
    }
  }

  bool has(ShardKey k) const { return done_.count(k) != 0; }
  const std::map<ShardKey, std::vector<CanonicalCode>>& done() const { return done_; }

  void add(ShardKey k, std::vector<CanonicalCode> codes) {
    std::lock_guard lock(mutex_);
    done_[k] = std::move(codes);
    write(false);
  }

  void write(bool complete) const {
    if (options_.meta_path.empty()) return;
    Json j;
    j["schema"] = "gemkit-catalogue-meta/1";
    j["generator"] = std::string("gemkit ") + version();
    j["n_colors"] = options_.n_colors;
    j["max_order"] = options_.max_order;
    Json filters = Json::array();
    for (Filter f : options_.filters) filters.push_back(to_string(f));
    j["filters"] = filters;
    j["jobs"] = options_.jobs;
    j["started"] = started_;
    j["updated"] = timestamp();
    j["complete"] = complete;
    Json shards = Json::array();
    for (const auto& [k, codes] : done_) {
      Json hex = Json::array();
      for (const auto& c : codes) hex.push_back(c.hex());
      shards.push_back({{"order", k.order}, {"index", k.index}, {"graphs", codes.size()}, {"codes", hex}});
    }
    j["shards"] = shards;
    const std::string tmp = options_.meta_path + ".tmp";
    {
      std::ofstream out(tmp);
      out << j.dump(1) << '\n';
    }
    std::rename(tmp.c_str(), options_.meta_path.c_str());
  }

 private:
  const EnumerationOptions& options_;
  std::string started_;
  std::map<ShardKey, std::vector<CanonicalCode>> done_;
  mutable std::mutex mutex_;
};

}  // namespace

EnumerationResult enumerate(const EnumerationOptions& options) {
  if (options.max_order < 2 || options.max_order % 2 != 0)
    throw PreconditionError("max order must be even and at least 2");
  const auto start = std::chrono::steady_clock::now();
  MetaFile meta(options, timestamp());
  if (options.resume) meta.load(options.meta_path);

  std::vector<Shard> shards;
  for (int order = 2; order <= options.max_order; order += 2)
    for (auto& s : make_shards(options.n_colors, order)) shards.push_back(std::move(s));

  EnumerationResult result;
  result.shards_total = static_cast<int>(shards.size());
  std::atomic<bool> stopped{false};
  parallel_for(static_cast<int>(shards.size()), options.jobs, [&](int i) {
    const ShardKey key{shards[i].order, shards[i].index};
    if (meta.has(key)) return;
    if (options.time_budget > 0) {
      const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
      if (elapsed.count() > options.time_budget) {
        stopped = true;
        return;
      }
    }
    meta.add(key, run_shard(options.n_colors, shards[i]));
  });
  result.shards_done = static_cast<int>(meta.done().size());
  if (stopped) {
    result.complete = false;
    meta.write(false);
    return result;
  }

  std::set<CanonicalCode> all;
  for (const auto& [k, codes] : meta.done()) all.insert(codes.begin(), codes.end());
  const std::vector<CanonicalCode> codes(all.begin(), all.end());
  result.graphs = static_cast<int>(codes.size());
  std::vector<std::optional<CatalogueRecord>> records(codes.size());
  parallel_for(static_cast<int>(codes.size()), options.jobs, [&](int i) {
    const Analysis a = analyze(decode(codes[i]));
    for (Filter f : options.filters)
      if (!passes(a, f)) return;
    records[i] = make_record(a);
  });
  for (auto& r : records)
    if (r) result.records.push_back(std::move(*r));
  meta.write(true);
  return result;
}

std::string format_catalogue(const std::vector<CatalogueRecord>& records) {
  std::string out;
  for (const auto& r : records) out += r.json.dump() + '\n';
  return out;
}

std::vector<CatalogueRecord> parse_catalogue(const std::string& text) {
  std::vector<CatalogueRecord> out;
  std::istringstream in(text);
  int line_no = 0;
  for (std::string line; std::getline(in, line);) {
    ++line_no;
    if (line.empty()) continue;
    try {
      Json j = Json::parse(line);
      out.push_back({CanonicalCode::from_hex(j.at("code").get<std::string>()), std::move(j)});
    } catch (const ParseError&) {
      throw;
    } catch (const std::exception& e) {
      throw ParseError("catalogue line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  return out;
}

bool VerifyReport::ok() const {
  for (const auto& p : properties)
    if (!p.failures.empty()) return false;
  return true;
}

Json VerifyReport::to_json() const {
  Json j;
  j["records"] = records;
  Json props = Json::array();
  for (const auto& p : properties)
    props.push_back({{"property", p.name}, {"checked", p.checked}, {"passed", p.passed}, {"failures", p.failures}});
  j["properties"] = props;
  j["ok"] = ok();
  return j;
}

namespace {

// One property outcome for one record: not applicable, pass, or failure text.
struct Outcome {
  bool applicable = false;
  std::string failure;
};

using Check = std::function<Outcome(const Analysis&, const CatalogueRecord&)>;

template <typename F>
Outcome guarded(bool applicable, F&& body) {
  if (!applicable) return {};
  try {
    body();
    return {true, ""};
  } catch (const std::exception& e) {
    return {true, e.what()};
  }
}

bool five_colored_crystal(const Analysis& a) {
  return a.graph.n_colors() == 5 && a.crystallization.crystallization && is_manifold(a) && a.homology;
}

ColoredGraph normalized(const Analysis& a) { return a.graph.recolored(a.color_perm); }

std::vector<std::pair<std::string, Check>> property_checks() {
  std::vector<std::pair<std::string, Check>> out;
  out.emplace_back("record", [](const Analysis& a, const CatalogueRecord& r) {
    return guarded(true, [&] {
      const Json fresh = make_record(a).json;
      if (fresh != r.json) throw ConsistencyError("stored record differs from the recomputed one");
    });
  });
  out.emplace_back("manifold_class", [](const Analysis& a, const CatalogueRecord& r) {
    return guarded(r.json.contains("manifold_class"), [&] {
      const Json stored = r.json["manifold_class"];
      const Json fresh = a.manifold ? Json(to_string(a.manifold->verdict)) : Json(nullptr);
      if (stored != fresh) {
        std::string why = "stored verdict " + stored.dump() + ", recomputed " + fresh.dump();
        if (a.manifold)
          for (const auto& c : a.manifold->certificates)
            if (c.sphere.status != SphereStatus::kCertifiedSphere)
              why += "; residue " + c.key.to_string() + "#" + std::to_string(c.index) + ": " + to_string(c.sphere.status) +
                     " (" + c.sphere.detail + ")";
        throw ConsistencyError(why);
      }
    });
  });
  out.emplace_back("h1_oracles", [](const Analysis& a, const CatalogueRecord&) {
    return guarded(a.homology.has_value(), [&] {
      const auto h = homology(normalized(a), a.singular_colors);
      if (h.pi1_singular.available && h.pi1_singular.abelianization != h.h1_edge_path)
        throw ConsistencyError("H1 oracles disagree");
    });
  });
  out.emplace_back("euler_eps_independence", [](const Analysis& a, const CatalogueRecord&) {
    return guarded(a.graph.n_colors() == 5 && is_manifold(a), [&] {
      const ColoredGraph g = normalized(a);
      for (const auto& eps : CyclicPermutation::all(5))
        if (euler_via_genus(g, eps).chi != a.homology->chi)
          throw ConsistencyError("Euler characteristic via genus differs at " + eps.to_string());
    });
  });
  out.emplace_back("subgenus_residuals", [](const Analysis& a, const CatalogueRecord&) {
    return guarded(five_colored_crystal(a) && a.homology->simply_connected(), [&] {
      const ColoredGraph g = normalized(a);
      for (const auto& eps : CyclicPermutation::all(5)) subgenus_residuals(g, eps, Pi1Status::kCertifiedTrivial);
    });
  });
  out.emplace_back("witness_sets", [](const Analysis& a, const CatalogueRecord&) {
    return guarded(five_colored_crystal(a) && a.homology->simply_connected(), [&] {
      if (!witness_sets_agree(normalized(a), Pi1Status::kCertifiedTrivial)) throw ConsistencyError("witness sets differ");
    });
  });
  out.emplace_back("beta2_identity", [](const Analysis& a, const CatalogueRecord&) {
    return guarded(five_colored_crystal(a) && a.homology->beta2.has_value(), [&] {
      const ColoredGraph g = normalized(a);
      const auto& h = *a.homology;
      const ResidueTable table(g);
      const int expected = *h.beta2 - h.beta1_compact - h.beta1_singular;
      for (const auto& eps : CyclicPermutation::all(5)) {
        HalfInteger sum = HalfInteger(0) - 2 * residue_genus_sum(table, eps.sequence());
        for (int i = 0; i < 5; ++i) sum += subgenus_by_color(table, eps.sequence(), eps[i]);
        if (sum != HalfInteger(expected))
          throw ConsistencyError("subgenus sum minus twice the genus is " + sum.to_string() + " at " + eps.to_string() +
                                 ", expected " + std::to_string(expected));
      }
      if (h.simply_connected() && beta2_via_genus(g, h) != *h.beta2) throw ConsistencyError("beta2 via genus differs");
    });
  });
  out.emplace_back("subgenus_target", [](const Analysis& a, const CatalogueRecord&) {
    return guarded(five_colored_crystal(a) && !a.witnesses.empty(), [&] {
      const ColoredGraph g = normalized(a);
      for (const auto& w : a.witnesses)
        for (const auto& [j, k] : {std::pair{w.j, w.k}, std::pair{w.i, w.k}})
          for (Color s : {w.i == j ? w.j : w.i, w.r}) subgenus_target(g, j, k, s, w.apex, *a.homology);
    });
  });
  out.emplace_back("collapse_identity", [](const Analysis& a, const CatalogueRecord&) {
    return guarded(five_colored_crystal(a) && !a.witnesses.empty(), [&] {
      const ColoredGraph g = normalized(a);
      for (const auto& w : a.witnesses) collapse_2skeleton(g, w);
    });
  });
  return out;
}

}  // namespace

VerifyReport verify_corpus(const std::vector<CatalogueRecord>& records, int jobs) {
  const auto checks = property_checks();
  VerifyReport report;
  report.records = static_cast<int>(records.size());
  std::vector<std::vector<Outcome>> outcomes(records.size());
  parallel_for(static_cast<int>(records.size()), jobs, [&](int n) {
    auto& row = outcomes[n];
    std::optional<Analysis> a;
    try {
      a = analyze(decode(records[n].code));
    } catch (const std::exception& e) {
      row.assign(checks.size(), Outcome{true, std::string("analysis failed: ") + e.what()});
      return;
    }
    for (const auto& [name, check] : checks) row.push_back(check(*a, records[n]));
  });
  for (std::size_t p = 0; p < checks.size(); ++p) {
    PropertyResult pr{checks[p].first};
    for (std::size_t n = 0; n < records.size(); ++n) {
      const auto& o = outcomes[n][p];
      if (!o.applicable) continue;
      ++pr.checked;
      if (o.failure.empty()) ++pr.passed;
      else pr.failures.push_back(records[n].code.hex() + ": " + o.failure);
    }
    report.properties.push_back(std::move(pr));
  }
  return report;
}

}  // namespace gemkit
