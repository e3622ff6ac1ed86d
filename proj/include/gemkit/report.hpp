#pragma once

#include <json.hpp>
#include <optional>
#include <string>
#include <vector>

#include "gemkit/canonical.hpp"
#include "gemkit/classification.hpp"
#include "gemkit/colored_graph.hpp"
#include "gemkit/genus.hpp"
#include "gemkit/handles.hpp"
#include "gemkit/homology.hpp"
#include "gemkit/recognition.hpp"

namespace gemkit {

using Json = nlohmann::ordered_json;

inline constexpr const char* kReportSchema = "gemkit-report/1";
const char* version();

// Everything the toolkit derives from one connected graph. Sections that do
// not apply carry a reason in the matching *_skipped field.
struct Analysis {
  ColoredGraph graph;
  CanonicalCode code;
  bool bipartite = false;
  std::optional<ManifoldClass> manifold;
  std::string manifold_skipped;
  GenusReport genus;
  CrystallizationCheck crystallization;

  // Singular color moved to the last color; classification, homology and
  // handles refer to the normalized colors.
  std::vector<Color> color_perm;
  ColoredGraph normalized = graph;
  ColorSet singular_colors;
  bool outside_scope = false;

  std::optional<HomologyReport> homology;
  std::string homology_skipped;
  std::optional<int> beta2_via_genus;

  std::optional<ClassificationReport> classification;
  std::string classification_skipped;
  bool classification_refused = false;

  std::vector<HypothesisWitness> witnesses;
  std::vector<HandleProfile> profiles;
  std::vector<CollapseTrace> collapses;
  std::string handles_skipped;

  std::optional<SphereCertificate> sphere;  // whole-graph sphere recognition
};

struct AnalysisOptions {
  bool sphere = true;
};

Analysis analyze(const ColoredGraph& g, const AnalysisOptions& options = {});

// Graphs with the manifold verdict and at most one singular color.
bool is_manifold(const Analysis& a);

Json to_json(const HalfInteger& h);
Json to_json(const AbelianGroup& g);
Json to_json(const ManifoldClass& mc);
Json to_json(const GenusReport& r);
Json to_json(const HomologyReport& h);
Json to_json(const ClassificationReport& c);
Json to_json(const Presentation& p);

Json manifold_section(const Analysis& a);
Json genus_section(const Analysis& a);
Json homology_section(const Analysis& a);
Json classification_section(const Analysis& a);
Json handles_section(const Analysis& a);

// Lines "path.to.key: value" for the human-readable rendering.
std::string render_text(const Json& j);

}  // namespace gemkit
