#include "gemkit/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "gemkit/catalogue.hpp"
#include "gemkit/errors.hpp"
#include "gemkit/gem_io.hpp"
#include "gemkit/moves.hpp"
#include "gemkit/report.hpp"

namespace gemkit {

namespace {

struct Flags {
  std::string path, path2, out_path;
  bool json = false;
  std::string permutation;
  std::string filters;
  int max_order = 8;
  int n_colors = 5;
  int jobs = 1;
  std::string resume;
  double time_budget = 0;
  std::string flavor = "color-permutation";
};

struct Refusal {
  std::string message;
};

std::string read_text(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out || !(out << text)) throw PreconditionError("cannot write " + path);
}

Json base_report(const std::string& command, const std::string& path, const Analysis& a) {
  Json j;
  j["schema_version"] = kReportSchema;
  j["command"] = command;
  j["input"] = {{"path", path}, {"code", a.code.hex()}};
  j["sections"] = Json::object();
  return j;
}

Json diagnostics(const Analysis& a) {
  Json d = Json::array();
  auto add = [&](const char* section, const std::string& why) {
    if (!why.empty()) d.push_back({{"section", section}, {"skipped", why}});
  };
  add("manifold_class", a.manifold_skipped);
  add("homology", a.homology_skipped);
  add("classification", a.classification_skipped);
  add("handles", a.handles_skipped);
  if (a.manifold && a.manifold->conditional)
    d.push_back({{"section", "manifold_class"}, {"note", "some residue certificates are unknown"}});
  return d;
}

void emit(std::ostream& out, const Json& j, bool json) {
  if (json) out << j.dump(2) << '\n';
  else out << render_text(j);
}

Json counts(const Analysis& a) {
  const ColoredGraph& g = a.graph;
  Json j;
  j["n_colors"] = g.n_colors();
  j["order"] = g.order();
  j["bipartite"] = a.bipartite;
  j["crystallization"] = a.crystallization.crystallization;
  j["hat_counts"] = a.crystallization.hat_counts;
  j["chi"] = a.homology ? Json(a.homology->chi) : Json(nullptr);
  return j;
}

int cmd_report(const std::string& command, const Flags& f, std::ostream& out) {
  const ColoredGraph g = read_gem_file(f.path);
  AnalysisOptions opts;
  opts.sphere = command == "info" || command == "classify";
  const Analysis a = analyze(g, opts);
  Json r = base_report(command, f.path, a);
  auto& s = r["sections"];
  int code = kExitOk;
  std::string refusal;
  if (command == "info") {
    s["manifold_class"] = manifold_section(a);
    s["counts"] = counts(a);
  } else if (command == "genus") {
    s["genus"] = genus_section(a);
    if (!f.permutation.empty()) {
      const CyclicPermutation eps = CyclicPermutation::parse(f.permutation);
      if (eps.size() != g.n_colors()) throw ParseError("permutation " + f.permutation + " has the wrong length");
      Json sub = Json::array();
      for (int i = 0; i < eps.size(); ++i) sub.push_back(to_json(subgenus(g, eps, i)));
      s["genus"]["selected"] = {{"eps", eps.to_string()}, {"rho", to_json(genus_wrt(g, eps))}, {"subgenera", sub}};
    }
  } else if (command == "classify") {
    s["manifold_class"] = manifold_section(a);
    s["classification"] = classification_section(a);
    if (!f.permutation.empty() && a.classification) {
      const CyclicPermutation eps = CyclicPermutation::parse(f.permutation);
      if (eps.size() != 5) throw ParseError("permutation " + f.permutation + " needs five colors");
      Json res = Json::array();
      for (const auto& x : subgenus_residuals(a.normalized, eps, a.classification->pi1)) res.push_back(to_json(x));
      s["classification"]["subgenus_residuals"] = {{"eps", eps.to_string()}, {"residuals", res}};
    }
    if (!a.classification) refusal = a.classification_skipped;
  } else if (command == "homology") {
    s["homology"] = homology_section(a);
    if (a.homology) {
      Json pres = Json::object();
      const ColoredGraph& ng = a.normalized;
      for (auto [name, sum, flavor] :
           {std::tuple{"compact", &a.homology->pi1_compact, PresentationFlavor::kCompactManifold},
            std::tuple{"singular", &a.homology->pi1_singular, PresentationFlavor::kSingularManifold}}) {
        pres[name] = sum->available ? to_json(pi1_presentation(ng, sum->i, sum->j, flavor, a.singular_colors)) : Json(nullptr);
      }
      s["homology"]["presentations"] = pres;
    } else {
      refusal = a.homology_skipped;
    }
  } else if (command == "handles") {
    s["handles"] = handles_section(a);
    if (!a.handles_skipped.empty()) refusal = a.handles_skipped;
  }
  r["diagnostics"] = diagnostics(a);
  emit(out, r, f.json);
  if (!refusal.empty()) throw Refusal{refusal};
  return code;
}

int cmd_reduce(const Flags& f, std::ostream& out) {
  const Reduction red = reduce(read_gem_file(f.path));
  const std::string text = format_gem(red.graph);
  if (f.out_path.empty()) {
    out << text;
    return kExitOk;
  }
  write_text(f.out_path, text);
  Json j{{"schema_version", kReportSchema},
         {"command", "reduce"},
         {"input", f.path},
         {"output", f.out_path},
         {"order", red.graph.order()},
         {"eliminated", red.eliminated.size()},
         {"unknown_skipped", red.unknown_skipped}};
  emit(out, j, f.json);
  return kExitOk;
}

int cmd_connected_sum(const Flags& f, std::ostream& out) {
  const ColoredGraph g = connected_sum(read_gem_file(f.path), read_gem_file(f.path2));
  const std::string text = format_gem(g);
  if (f.out_path.empty()) {
    out << text;
    return kExitOk;
  }
  write_text(f.out_path, text);
  Json j{{"schema_version", kReportSchema}, {"command", "connected-sum"}, {"inputs", {f.path, f.path2}},
         {"output", f.out_path},             {"order", g.order()}};
  emit(out, j, f.json);
  return kExitOk;
}

int cmd_canon(const Flags& f, std::ostream& out) {
  CodeFlavor flavor;
  if (f.flavor == "color-permutation") flavor = CodeFlavor::kUpToColorPermutation;
  else if (f.flavor == "colored") flavor = CodeFlavor::kColorPreserving;
  else throw ParseError("unknown code flavor '" + f.flavor + "'");
  const CanonicalCode code = canonical_code(read_gem_file(f.path), flavor);
  if (f.json) out << Json{{"path", f.path}, {"flavor", to_string(flavor)}, {"code", code.hex()}}.dump(2) << '\n';
  else out << code.hex() << '\n';
  return kExitOk;
}

int cmd_generate(const Flags& f, std::ostream& out, std::ostream& err) {
  EnumerationOptions o;
  o.n_colors = f.n_colors;
  o.max_order = f.max_order;
  o.filters = parse_filters(f.filters);
  o.jobs = f.jobs;
  o.time_budget = f.time_budget;
  if (!f.resume.empty()) {
    o.meta_path = f.resume;
    o.resume = true;
  } else if (!f.out_path.empty()) {
    o.meta_path = f.out_path + ".meta";
  }
  const EnumerationResult res = enumerate(o);
  const std::string text = format_catalogue(res.records);
  if (f.out_path.empty()) out << text;
  else write_text(f.out_path, text);
  Json summary{{"records", res.records.size()},
               {"graphs", res.graphs},
               {"shards_total", res.shards_total},
               {"shards_done", res.shards_done},
               {"complete", res.complete}};
  if (!f.out_path.empty()) emit(out, summary, f.json);
  if (!res.complete) {
    err << Json{{"status", "incomplete"}, {"message", "time budget exhausted; rerun with --resume"},
                {"meta", o.meta_path}}.dump()
        << '\n';
    return kExitRefused;
  }
  return kExitOk;
}

int cmd_verify(const Flags& f, std::ostream& out) {
  const auto records = parse_catalogue(read_text(f.path));
  const VerifyReport rep = verify_corpus(records, f.jobs);
  Json j{{"schema_version", kReportSchema}, {"command", "verify"}, {"input", f.path}};
  j["report"] = rep.to_json();
  emit(out, j, f.json);
  if (!rep.ok()) throw ConsistencyError("catalogue verification failed");
  return kExitOk;
}

void diagnose(std::ostream& err, const std::string& command, const char* kind, const std::string& message) {
  err << Json{{"command", command}, {"error", kind}, {"message", message}}.dump() << '\n';
}

}  // namespace

int run_cli(int argc, char** argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"gemkit: colored graphs encoding PL manifolds"};
  app.set_version_flag("--version", std::string(version()));
  app.require_subcommand(1);
  Flags f;

  auto input = [&](CLI::App* c) { c->add_option("path", f.path, ".gem file")->required(); };
  auto json = [&](CLI::App* c) { c->add_flag("--json", f.json, "JSON output"); };
  for (const char* name : {"info", "genus", "classify", "homology", "handles"}) {
    CLI::App* c = app.add_subcommand(name, std::string("report: ") + name);
    input(c);
    json(c);
    if (std::string(name) == "genus" || std::string(name) == "classify")
      c->add_option("--permutation", f.permutation, "cyclic permutation, e.g. (0,2,4,1,3)");
  }
  CLI::App* reduce_cmd = app.add_subcommand("reduce", "eliminate proper dipoles");
  input(reduce_cmd);
  json(reduce_cmd);
  reduce_cmd->add_option("-o,--output", f.out_path, "output .gem");
  CLI::App* sum_cmd = app.add_subcommand("connected-sum", "graph connected sum");
  sum_cmd->add_option("path1", f.path, "first .gem")->required();
  sum_cmd->add_option("path2", f.path2, "second .gem")->required();
  sum_cmd->add_option("-o,--output", f.out_path, "output .gem");
  json(sum_cmd);
  CLI::App* canon_cmd = app.add_subcommand("canon", "canonical code");
  input(canon_cmd);
  json(canon_cmd);
  canon_cmd->add_option("--flavor", f.flavor, "color-permutation or colored");
  CLI::App* gen_cmd = app.add_subcommand("generate", "enumerate a catalogue");
  gen_cmd->add_option("--n-colors", f.n_colors, "colors")->check(CLI::Range(3, 8));
  gen_cmd->add_option("--max-order", f.max_order, "largest order")->check(CLI::Range(2, 64));
  gen_cmd->add_option("--filters", f.filters, "comma-separated filters");
  gen_cmd->add_option("--jobs", f.jobs, "worker threads")->check(CLI::Range(1, 256));
  gen_cmd->add_option("--resume", f.resume, "checkpoint file to resume from");
  gen_cmd->add_option("--time-budget", f.time_budget, "seconds; 0 is unlimited")->check(CLI::NonNegativeNumber);
  gen_cmd->add_option("-o,--output", f.out_path, "catalogue file");
  json(gen_cmd);
  CLI::App* verify_cmd = app.add_subcommand("verify", "replay the property suite on a catalogue");
  verify_cmd->add_option("path", f.path, "catalogue file")->required();
  verify_cmd->add_option("--jobs", f.jobs, "worker threads")->check(CLI::Range(1, 256));
  json(verify_cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    diagnose(err, "", "usage", e.what());
    return kExitMalformed;
  }

  const std::string command = app.get_subcommands().front()->get_name();
  try {
    if (command == "reduce") return cmd_reduce(f, out);
    if (command == "connected-sum") return cmd_connected_sum(f, out);
    if (command == "canon") return cmd_canon(f, out);
    if (command == "generate") return cmd_generate(f, out, err);
    if (command == "verify") return cmd_verify(f, out);
    return cmd_report(command, f, out);
  } catch (const Refusal& e) {
    diagnose(err, command, "refused", e.message);
    return kExitRefused;
  } catch (const ParseError& e) {
    diagnose(err, command, "malformed-input", e.what());
    return kExitMalformed;
  } catch (const PreconditionError& e) {
    diagnose(err, command, "refused", e.what());
    return kExitRefused;
  } catch (const ConsistencyError& e) {
    diagnose(err, command, "consistency", e.what());
    return kExitInconsistent;
  } catch (const StructuralError& e) {
    diagnose(err, command, "structural", e.what());
    return kExitInconsistent;
  } catch (const std::exception& e) {
    diagnose(err, command, "internal", e.what());
    return kExitInconsistent;
  }
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<std::string> copy = args;
  copy.insert(copy.begin(), "gemkit");
  std::vector<char*> argv;
  for (auto& a : copy) argv.push_back(a.data());
  argv.push_back(nullptr);
  return run_cli(static_cast<int>(copy.size()), argv.data(), out, err);
}

}  // namespace gemkit
