// ricci: exact Lin-Lu-Yau curvature, structural verifiers and conjecture scans.
//
// Exit codes: 0 success / statement holds, 1 statement fails, 2 usage or
// input error, 3 precondition not met, 4 internal error.

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <numeric>
#include <random>
#include <sstream>
#include <string>

#include "ricci/curvature.hpp"
#include "ricci/errors.hpp"
#include "ricci/graph.hpp"
#include "ricci/graph6.hpp"
#include "ricci/parallel.hpp"
#include "ricci/rational.hpp"
#include "ricci/report.hpp"
#include "ricci/search.hpp"
#include "ricci/verifiers.hpp"

namespace {

using namespace ricci;
using nlohmann::json;

enum Exit { kOk = 0, kFails = 1, kUsage = 2, kPrecondition = 3, kInternal = 4 };

struct Globals {
  bool json = false;
  bool witness = false;
  std::optional<unsigned long> seed;
  unsigned max_bits = 1024;
  unsigned jobs = default_jobs();
};

struct InputOptions {
  std::string path = "-";
  std::string format;  // graph6 | edgelist | "" (detect)
};

std::string read_all(const std::string& path) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Graph load_graph(const InputOptions& opt) {
  std::string text = read_all(opt.path);
  std::string format = opt.format;
  std::istringstream lines(text);
  std::string first;
  while (std::getline(lines, first) && first.find_first_not_of(" \t\r") == std::string::npos) {
  }
  if (format.empty()) format = first.find(' ') != std::string::npos ? "edgelist" : "graph6";
  if (format == "graph6") {
    if (first.empty()) throw ParseError("no graph6 line in input");
    return graph6_decode(first);
  }
  return edge_list_parse(text);
}

Graph shuffled(const Graph& g, unsigned long seed) {
  std::vector<Vertex> perm(g.order());
  std::iota(perm.begin(), perm.end(), 0);
  std::mt19937_64 rng(seed);
  std::shuffle(perm.begin(), perm.end(), rng);
  return g.permuted(perm);
}

json describe_input(const InputOptions& opt, const Graph& g) {
  return {{"source", opt.path}, {"graph6", graph6_encode(g)}, {"n", g.order()}, {"m", g.size()}};
}

void print_verdict_text(const VerifierVerdict& v, std::ostream& out) {
  out << v.statement << ": " << (v.holds ? "holds" : "FAILS") << "\n";
  for (const auto& [k, val] : v.context) out << "  " << k << " = " << val << "\n";
  if (v.witness) {
    const auto& w = *v.witness;
    std::cerr << "witness [" << w.kind << "] " << w.relation << " violated at vertices";
    for (Vertex x : w.vertices) std::cerr << ' ' << x;
    if (w.layer) std::cerr << " (layer " << *w.layer << ")";
    std::cerr << ": lhs = " << to_string(w.lhs) << ", rhs = " << to_string(w.rhs) << "\n";
  }
}

int emit_verdicts(const Globals& g, ReportDocument doc) {
  bool all = std::all_of(doc.verdicts.begin(), doc.verdicts.end(), [](const auto& v) { return v.holds; });
  if (g.json) {
    json_report_write(doc, std::cout);
    for (const auto& v : doc.verdicts) {
      if (!v.holds) print_verdict_text(v, std::cerr);
    }
  } else {
    for (const auto& v : doc.verdicts) print_verdict_text(v, std::cout);
  }
  return all ? kOk : kFails;
}

// ---------------------------------------------------------------------------

int run_gen(const Globals& globals, const std::string& family, const std::vector<std::size_t>& params,
            const std::string& format) {
  auto need = [&](std::size_t count) {
    if (params.size() != count) {
      throw ArgumentError("family '" + family + "' takes " + std::to_string(count) + " parameter(s)");
    }
  };
  Graph g;
  if (family == "hypercube") {
    need(1);
    g = gen::hypercube(static_cast<unsigned>(params[0]));
  } else if (family == "cycle") {
    need(1);
    g = gen::cycle(params[0]);
  } else if (family == "path") {
    need(1);
    g = gen::path(params[0]);
  } else if (family == "complete") {
    need(1);
    g = gen::complete(params[0]);
  } else if (family == "complete-bipartite") {
    need(2);
    g = gen::complete_bipartite(params[0], params[1]);
  } else if (family == "star") {
    need(1);
    g = gen::star(params[0]);
  } else if (family == "petersen") {
    need(0);
    g = gen::petersen();
  } else if (family == "c5pow") {
    need(1);
    if (params[0] < 1) throw ArgumentError("c5pow needs k >= 1");
    g = gen::cycle(5);
    for (std::size_t i = 1; i < params[0]; ++i) g = gen::cartesian_product(g, gen::cycle(5));
  } else {
    throw ArgumentError("unknown family '" + family + "'");
  }
  if (globals.seed) g = shuffled(g, *globals.seed);
  if (format == "edgelist") {
    std::cout << edge_list_write(g);
  } else {
    std::cout << graph6_encode(g) << "\n";
  }
  return kOk;
}

int run_curv(const Globals& globals, const std::string& mode, const InputOptions& in,
             const std::optional<std::string>& alpha_text, std::optional<Vertex> x, std::optional<Vertex> y) {
  Graph g = load_graph(in);
  std::optional<Rational> alpha;
  if (alpha_text) alpha = parse_rational(*alpha_text);

  std::vector<CurvatureReport> reports;
  if (mode == "all") {
    reports = curvature_all_edges(g, globals.jobs);
  } else {
    if (!x || !y) throw ArgumentError("curv " + mode + " needs --x and --y");
    if (mode == "edge" && !g.adjacent(*x, *y)) {
      throw ArgumentError("(" + std::to_string(*x) + "," + std::to_string(*y) + ") is not an edge; use 'curv pair'");
    }
    reports.push_back(kappa_lly(g, *x, *y));
  }
  if (alpha) {
    for (auto& r : reports) r.kappa_alpha = AlphaSample{*alpha, kappa_alpha(g, r.x, r.y, *alpha)};
  }

  if (globals.json) {
    ReportDocument doc;
    doc.input = describe_input(in, g);
    doc.curvature = std::move(reports);
    doc.with_witness = globals.witness;
    json_report_write(doc, std::cout);
    return kOk;
  }
  for (const auto& r : reports) {
    std::cout << r.x << ' ' << r.y << ' ' << to_string(r.kappa_lly);
    if (r.kappa_alpha) {
      std::cout << " alpha=" << to_string(r.kappa_alpha->alpha) << " kappa_alpha=" << to_string(r.kappa_alpha->kappa);
    }
    if (globals.witness) {
      std::cout << " f=";
      bool first = true;
      for (const auto& [v, val] : r.witness.values) {
        std::cout << (first ? "" : ",") << v << ':' << to_string(val);
        first = false;
      }
    }
    std::cout << "\n";
  }
  return kOk;
}

int run_verify(const Globals& globals, const std::string& what, const InputOptions& in,
               const std::optional<std::string>& s_text) {
  ReportDocument doc;
  doc.with_witness = globals.witness;

  if (what == "noninteger") {
    if (!s_text) throw ArgumentError("verify noninteger needs --s <p/q>");
    Rational s = parse_rational(*s_text);
    auto b = check_noninteger_lemma(s, globals.max_bits);
    VerifierVerdict v{"noninteger-binomial", b.verdict == BoundVerdict::StrictlyLess, {}, {}};
    v.note("s", to_string(s));
    v.note("lhs", to_string(b.lhs));
    v.note("rhs_lower", to_string(b.rhs_lower));
    v.note("rhs_upper", to_string(b.rhs_upper));
    v.note("bits", std::to_string(b.bits));
    if (b.verdict != BoundVerdict::StrictlyLess) {
      throw InternalError("enclosure inconclusive at " + std::to_string(globals.max_bits) + " bits");
    }
    doc.input = {{"s", rational_to_json(s)}};
    doc.extra["bound"] = to_json(b);
    doc.verdicts.push_back(std::move(v));
    return emit_verdicts(globals, std::move(doc));
  }

  Graph g = load_graph(in);
  if (globals.seed && what == "iso-qd") g = shuffled(g, *globals.seed);
  doc.input = describe_input(in, g);

  if (what == "gamma") {
    auto kappa = min_edge_curvature(g, globals.jobs).kappa;
    if (kappa <= 0) throw PreconditionError("minimum edge curvature " + to_string(kappa) + " is not positive");
    doc.verdicts.push_back(check_gamma_inequality(g, kappa, globals.jobs));
  } else if (what == "matching") {
    doc.verdicts.push_back(check_matching_lemma(g, globals.jobs));
    if (globals.witness) {
      json certs = json::array();
      for (auto [u, v] : g.edges()) certs.push_back(to_json(neighborhood_matching(g, u, v)));
      doc.extra["matchings"] = certs;
    }
  } else if (what == "regular") {
    doc.verdicts.push_back(check_regular_constant(g, globals.jobs));
  } else if (what == "diameter") {
    auto kappa = min_edge_curvature(g, globals.jobs).kappa;
    if (kappa <= 0) throw PreconditionError("minimum edge curvature " + to_string(kappa) + " is not positive");
    doc.verdicts.push_back(check_diameter_bound(g, kappa));
  } else if (what == "bound") {
    auto report = check_main_bound(g, globals.max_bits, globals.jobs);
    doc.verdicts.push_back(report.verdict);
    if (report.equality && report.verdict.holds) {
      doc.verdicts.push_back(check_layer_counts(g, report));
      if (globals.witness && report.labeling) doc.extra["labeling"] = to_json(*report.labeling);
    }
  } else if (what == "iso-qd") {
    VerifierVerdict v{"hypercube-isomorphism", true, {}, {}};
    if (globals.seed) v.note("seed", std::to_string(*globals.seed));
    try {
      auto labeling = hypercube_labeling(g);
      v.note("dimension", std::to_string(labeling.dimension));
      if (globals.witness || globals.json) doc.extra["labeling"] = to_json(labeling);
    } catch (const NotHypercubeError& e) {
      const Rational order = static_cast<unsigned long>(g.order());
      v.holds = false;
      v.witness = CounterWitness{"not-hypercube", e.what(), {}, order, order, std::nullopt};
    }
    doc.verdicts.push_back(std::move(v));
  } else {
    throw ArgumentError("unknown verifier '" + what + "'");
  }
  return emit_verdicts(globals, std::move(doc));
}

int run_scan(const Globals& globals, const std::string& which, const std::string& source_text,
             const std::string& out_path, unsigned k_max) {
  std::unique_ptr<std::ofstream> out;
  if (!out_path.empty()) {
    out = std::make_unique<std::ofstream>(out_path);
    if (!*out) throw ArgumentError("cannot write " + out_path);
  }

  if (which == "c5pow") {
    json reports = json::array();
    bool all_tight = true;
    for (unsigned k = 1; k <= k_max; ++k) {
      auto r = c5_power_experiment(k, globals.jobs);
      all_tight = all_tight && r.tight && r.min_curvature > 0;
      reports.push_back(to_json(r));
      if (out) *out << to_json(r).dump() << "\n";
      if (!globals.json) {
        std::cout << "C5^" << k << ": n=" << r.n << " m=" << r.m << " Delta=" << r.max_degree
                  << " kappa=" << to_string(r.min_curvature) << " n^2=" << r.order_squared.get_str()
                  << " 5^Delta=" << r.five_to_degree.get_str() << (r.tight ? " tight" : " not tight") << "\n";
      }
    }
    if (globals.json) {
      ReportDocument doc;
      doc.input = {{"scan", "c5pow"}, {"k_max", k_max}};
      doc.extra["c5pow"] = reports;
      json_report_write(doc, std::cout);
    }
    return all_tight ? kOk : kFails;
  }

  if (which != "c1" && which != "c2") throw ArgumentError("unknown scan '" + which + "'");
  std::unique_ptr<GraphSource> source;
  std::ifstream corpus;
  if (source_text.rfind("enum:", 0) == 0) {
    source = enumeration_source(std::stoul(source_text.substr(5)));
  } else if (source_text.rfind("file:", 0) == 0) {
    corpus.open(source_text.substr(5));
    if (!corpus) throw ArgumentError("cannot open corpus " + source_text.substr(5));
    source = graph6_source(corpus);
  } else {
    throw ArgumentError("source must be enum:<n> or file:<path>");
  }

  ScanOptions options{globals.jobs, globals.max_bits, 64};
  RecordSink sink;
  if (out) sink = [&](const ScanRecord& r) { *out << to_json(r).dump() << "\n"; };
  ScanSummary summary =
      which == "c1" ? scan_conjecture1(*source, options, sink) : scan_conjecture2(*source, options, sink);

  if (globals.json) {
    ReportDocument doc;
    doc.input = {{"scan", which}, {"source", source_text}};
    doc.extra["scan"] = to_json(summary);
    json_report_write(doc, std::cout);
  } else {
    std::cout << "scan " << which << " over " << source_text << "\n"
              << "  scanned            " << summary.scanned << "\n"
              << "  satisfied          " << summary.satisfied << "\n"
              << "  tight              " << summary.tight << "\n"
              << "  out of hypothesis  " << summary.out_of_hypothesis << "\n"
              << "  filtered           " << summary.filtered << "\n"
              << "  disconnected       " << summary.disconnected << "\n"
              << "  parse errors       " << summary.parse_errors << "\n"
              << "  candidates         " << summary.candidates << "\n";
    if (summary.max_ratio_lower) {
      std::cout << "  max |V|/2^(2/k) >= " << to_string(*summary.max_ratio_lower) << " (" << summary.max_ratio_id
                << ")\n";
    }
    if (summary.max_root) {
      std::cout << "  max |V|^(1/Delta)  = " << summary.max_root->first << "^(1/" << summary.max_root->second << ") ("
                << summary.max_root_id << ")\n";
    }
  }
  return summary.candidates == 0 ? kOk : kFails;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact Lin-Lu-Yau Ricci curvature toolkit"};
  app.require_subcommand(1);
  app.fallthrough();

  Globals globals;
  app.add_flag("--json", globals.json, "Machine-readable JSON output");
  app.add_flag("--witness", globals.witness, "Include dual and matching witnesses");
  app.add_option("--seed", globals.seed, "Random vertex relabelling seed");
  app.add_option("--max-precision-bits", globals.max_bits, "Precision ceiling for 2^s enclosures")
      ->check(CLI::Range(8U, 1U << 20));
  app.add_option("--jobs", globals.jobs, "Worker threads (default $RICCI_JOBS or 1)")->check(CLI::PositiveNumber);

  // gen
  auto* gen_cmd = app.add_subcommand("gen", "Emit a generated graph");
  std::string family;
  std::vector<std::size_t> params;
  std::string gen_format = "graph6";
  gen_cmd->add_option("family", family, "hypercube|cycle|path|complete|complete-bipartite|star|petersen|c5pow")
      ->required();
  gen_cmd->add_option("params", params, "Family parameters");
  gen_cmd->add_option("--format", gen_format)->check(CLI::IsMember({"graph6", "edgelist"}));

  // curv
  auto* curv_cmd = app.add_subcommand("curv", "Curvature of edges or vertex pairs");
  std::string curv_mode;
  InputOptions curv_in;
  std::optional<std::string> alpha;
  std::optional<Vertex> x, y;
  curv_cmd->add_option("mode", curv_mode)->required()->check(CLI::IsMember({"edge", "all", "pair"}));
  curv_cmd->add_option("--input", curv_in.path, "Graph file, '-' for stdin");
  curv_cmd->add_option("--format", curv_in.format)->check(CLI::IsMember({"graph6", "edgelist"}));
  curv_cmd->add_option("--alpha", alpha, "Idleness p/q for the lazy-walk curvature");
  curv_cmd->add_option("--x", x);
  curv_cmd->add_option("--y", y);

  // verify
  auto* verify_cmd = app.add_subcommand("verify", "Check a structural statement on a graph");
  std::string what;
  InputOptions verify_in;
  std::optional<std::string> s_text;
  verify_cmd->add_option("statement", what)
      ->required()
      ->check(CLI::IsMember({"gamma", "matching", "regular", "diameter", "bound", "iso-qd", "noninteger"}));
  verify_cmd->add_option("--input", verify_in.path, "Graph file, '-' for stdin");
  verify_cmd->add_option("--format", verify_in.format)->check(CLI::IsMember({"graph6", "edgelist"}));
  verify_cmd->add_option("--s", s_text, "Exponent p/q for the non-integer binomial bound");

  // scan
  auto* scan_cmd = app.add_subcommand("scan", "Evidence scans over graph families");
  std::string which;
  std::string source = "enum:5";
  std::string out_path;
  unsigned k_max = 2;
  scan_cmd->add_option("which", which)->required()->check(CLI::IsMember({"c1", "c2", "c5pow"}));
  scan_cmd->add_option("--source", source, "enum:<n> or file:<path>");
  scan_cmd->add_option("--out", out_path, "Write one JSON record per line");
  scan_cmd->add_option("--k", k_max, "Largest power for c5pow")->check(CLI::Range(1U, 3U));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*gen_cmd) return run_gen(globals, family, params, gen_format);
    if (*curv_cmd) return run_curv(globals, curv_mode, curv_in, alpha, x, y);
    if (*verify_cmd) return run_verify(globals, what, verify_in, s_text);
    if (*scan_cmd) return run_scan(globals, which, source, out_path, k_max);
  } catch (const PreconditionError& e) {
    std::cerr << "precondition: " << e.what() << "\n";
    return kPrecondition;
  } catch (const InternalError& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kInternal;
  } catch (const ricci::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kInternal;
  }
  return kUsage;
}
