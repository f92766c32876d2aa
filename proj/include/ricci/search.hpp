#pragma once

#include <functional>
#include <istream>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "ricci/graph.hpp"
#include "ricci/rational.hpp"

namespace ricci {

// One item of a scan source: a graph, or the parse error of its corpus line.
struct SourceItem {
  std::string id;
  std::variant<Graph, std::string> content;
};

// Pull-based graph stream.
class GraphSource {
 public:
  virtual ~GraphSource() = default;
  virtual std::optional<SourceItem> next() = 0;
};

// Every connected isomorphism class on 2..max_order vertices, by order then
// canonical code. Ids look like "n5#12".
std::unique_ptr<GraphSource> enumeration_source(std::size_t max_order);

// One graph6 string per line; blank lines skipped, ids are "line:<k>".
std::unique_ptr<GraphSource> graph6_source(std::istream& in);

enum class Conjecture { TriangleFree, DegreeExponential };

std::string_view to_string(Conjecture c);

enum class ScanStatus {
  Satisfied,        // hypotheses hold and the bound holds
  OutOfHypothesis,  // minimum edge curvature <= 0
  Filtered,         // contains a triangle (triangle-free scan only)
  Disconnected,
  ParseError,
  Candidate         // bound violated, reproduced by the independent oracle
};

std::string_view to_string(ScanStatus s);

struct ScanRecord {
  std::size_t index = 0;
  std::string id;
  std::string graph6;
  ScanStatus status = ScanStatus::Satisfied;
  std::string error;
  std::size_t n = 0, m = 0, max_degree = 0;
  std::optional<Rational> min_curvature;
  // Triangle-free scan: bracket of 2^(2/kappa). Degree scan: 5^Delta exactly.
  std::optional<Enclosure> bound;
  bool tight = false;  // |V| = 2^(2/kappa), or |V|^2 = 5^Delta
  bool satisfies_c1 = false;
  bool satisfies_c2 = false;
  bool candidate_counterexample = false;
};

struct ScanSummary {
  Conjecture conjecture = Conjecture::TriangleFree;
  std::size_t scanned = 0;
  std::size_t satisfied = 0;
  std::size_t out_of_hypothesis = 0;
  std::size_t filtered = 0;
  std::size_t disconnected = 0;
  std::size_t parse_errors = 0;
  std::size_t candidates = 0;
  std::size_t tight = 0;
  // Largest |V| / 2^(2/kappa), tracked through a certified lower bound.
  std::optional<Rational> max_ratio_lower;
  std::string max_ratio_id;
  // Largest |V|^(1/Delta), stored as the pair (|V|, Delta).
  std::optional<std::pair<std::size_t, std::size_t>> max_root;
  std::string max_root_id;
  double seconds = 0;
};

struct ScanOptions {
  unsigned jobs = 1;
  unsigned max_bits = 1024;
  std::size_t batch = 64;
};

using RecordSink = std::function<void(const ScanRecord&)>;

// Scans the source, emitting records in input order. Workers handle a
// bounded batch at a time, so memory stays flat on long corpora.
ScanSummary scan_conjecture1(GraphSource& source, const ScanOptions& options = {}, const RecordSink& sink = {});
ScanSummary scan_conjecture2(GraphSource& source, const ScanOptions& options = {}, const RecordSink& sink = {});

struct C5PowerReport {
  unsigned k = 0;
  std::size_t n = 0, m = 0, max_degree = 0;
  Rational min_curvature;
  Integer order_squared;
  Integer five_to_degree;
  bool tight = false;
};

// C5 x ... x C5 (k factors). Throws ScaleError for k > 3, ArgumentError for k < 1.
C5PowerReport c5_power_experiment(unsigned k, unsigned jobs = 1);

}  // namespace ricci
