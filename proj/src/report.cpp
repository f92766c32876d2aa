#include "ricci/report.hpp"

#include "ricci/errors.hpp"

namespace ricci {

using nlohmann::json;

namespace {

json integer_to_json(const Integer& z) {
  static const Integer kSafe = Integer(1) << 53;
  if (abs(z) <= kSafe) return json(z.get_si());
  return json(z.get_str());
}

Integer integer_from_json(const json& j) {
  if (j.is_number_integer()) return Integer(j.get<long>());
  if (j.is_string()) {
    Integer z;
    if (z.set_str(j.get<std::string>(), 10) != 0) throw ParseError("bad integer string in report");
    return z;
  }
  throw ParseError("expected an integer in report, got " + j.dump());
}

json vertex_function_to_json(const VertexFunction& f) {
  json out = json::array();
  for (const auto& [v, val] : f) out.push_back({{"vertex", v}, {"value", rational_to_json(val)}});
  return out;
}

json enclosure_to_json(const Enclosure& e) {
  return {{"lower", rational_to_json(e.lower)}, {"upper", rational_to_json(e.upper)}, {"bits", e.bits}};
}

}  // namespace

json rational_to_json(const Rational& r) {
  return {{"num", integer_to_json(r.get_num())}, {"den", integer_to_json(r.get_den())}};
}

Rational rational_from_json(const json& j) {
  if (!j.is_object() || !j.contains("num") || !j.contains("den")) {
    throw ParseError("expected {num, den}, got " + j.dump());
  }
  Integer den = integer_from_json(j.at("den"));
  if (den <= 0) throw ParseError("non-positive denominator in report");
  Rational r(integer_from_json(j.at("num")), den);
  r.canonicalize();
  return r;
}

json to_json(const CurvatureReport& r, bool with_witness) {
  json out = {{"u", r.x},
              {"v", r.y},
              {"distance", r.distance},
              {"kappa", rational_to_json(r.kappa_lly)},
              {"method", std::string(to_string(r.method))}};
  if (r.kappa_alpha) {
    out["kappa_alpha"] = {{"alpha", rational_to_json(r.kappa_alpha->alpha)},
                          {"value", rational_to_json(r.kappa_alpha->kappa)}};
  }
  if (with_witness) out["witness"] = vertex_function_to_json(r.witness.values);
  return out;
}

CurvatureReport curvature_from_json(const json& j) {
  CurvatureReport r;
  r.x = j.at("u").get<Vertex>();
  r.y = j.at("v").get<Vertex>();
  r.distance = j.at("distance").get<int>();
  r.kappa_lly = rational_from_json(j.at("kappa"));
  const auto method = j.value("method", std::string("laplacian-lp"));
  r.method = method == "integral-enumeration" ? CurvatureMethod::IntegralEnumeration : CurvatureMethod::LaplacianLp;
  if (j.contains("kappa_alpha")) {
    r.kappa_alpha = AlphaSample{rational_from_json(j["kappa_alpha"].at("alpha")),
                                rational_from_json(j["kappa_alpha"].at("value"))};
  }
  if (j.contains("witness")) {
    for (const auto& e : j["witness"]) r.witness.values[e.at("vertex").get<Vertex>()] = rational_from_json(e.at("value"));
  }
  return r;
}

json to_json(const VerifierVerdict& v) {
  json ctx = json::object();
  for (const auto& [k, val] : v.context) ctx[k] = val;
  json out = {{"statement", v.statement}, {"holds", v.holds}, {"context", ctx}};
  if (v.witness) {
    const auto& w = *v.witness;
    out["witness"] = {{"kind", w.kind},
                      {"relation", w.relation},
                      {"vertices", w.vertices},
                      {"lhs", rational_to_json(w.lhs)},
                      {"rhs", rational_to_json(w.rhs)}};
    if (w.layer) out["witness"]["layer"] = *w.layer;
  }
  return out;
}

VerifierVerdict verdict_from_json(const json& j) {
  VerifierVerdict v;
  v.statement = j.at("statement").get<std::string>();
  v.holds = j.at("holds").get<bool>();
  for (const auto& [k, val] : j.at("context").items()) v.note(k, val.get<std::string>());
  if (j.contains("witness")) {
    const auto& w = j["witness"];
    CounterWitness cw{w.at("kind").get<std::string>(), w.at("relation").get<std::string>(),
                      w.at("vertices").get<std::vector<Vertex>>(), rational_from_json(w.at("lhs")),
                      rational_from_json(w.at("rhs")), std::nullopt};
    if (w.contains("layer")) cw.layer = w["layer"].get<int>();
    v.witness = std::move(cw);
  }
  return v;
}

json to_json(const MatchingCertificate& c) {
  json out = {{"edge", {c.edge.first, c.edge.second}},
              {"x_side", c.x_side},
              {"y_side", c.y_side},
              {"perfect", c.perfect},
              {"matching", json::array()}};
  for (auto [a, b] : c.matching) out["matching"].push_back({a, b});
  if (!c.perfect) {
    out["hall_violator"] = {{"set", c.hall_violator},
                            {"neighbors", c.violator_neighbors},
                            {"side", c.violator_on_y_side ? "y" : "x"}};
  }
  return out;
}

json to_json(const HypercubeLabeling& l) {
  json labels = json::array();
  for (std::size_t v = 0; v < l.labels.size(); ++v) {
    std::vector<unsigned> set;
    for (unsigned b = 0; b < l.dimension; ++b) {
      if ((l.labels[v] >> b) & 1U) set.push_back(b + 1);
    }
    labels.push_back({{"vertex", v}, {"label", set}});
  }
  return {{"root", l.root}, {"dimension", l.dimension}, {"labels", labels}};
}

json to_json(const BoundComparison& b) {
  return {{"lhs", rational_to_json(b.lhs)},
          {"rhs_lower", rational_to_json(b.rhs_lower)},
          {"rhs_upper", rational_to_json(b.rhs_upper)},
          {"verdict", b.verdict == BoundVerdict::StrictlyLess ? "strictly-less" : "inconclusive"},
          {"bits", b.bits}};
}

json to_json(const ScanRecord& r) {
  json out = {{"index", r.index}, {"id", r.id}, {"status", std::string(to_string(r.status))}};
  if (r.status == ScanStatus::ParseError) {
    out["error"] = r.error;
    return out;
  }
  out["graph6"] = r.graph6;
  out["n"] = r.n;
  out["m"] = r.m;
  out["max_degree"] = r.max_degree;
  if (r.min_curvature) out["min_curvature"] = rational_to_json(*r.min_curvature);
  if (r.bound) out["bound"] = enclosure_to_json(*r.bound);
  out["tight"] = r.tight;
  out["satisfies_c1"] = r.satisfies_c1;
  out["satisfies_c2"] = r.satisfies_c2;
  out["candidate_counterexample"] = r.candidate_counterexample;
  return out;
}

json to_json(const ScanSummary& s) {
  json out = {{"conjecture", std::string(to_string(s.conjecture))},
              {"scanned", s.scanned},
              {"satisfied", s.satisfied},
              {"out_of_hypothesis", s.out_of_hypothesis},
              {"filtered", s.filtered},
              {"disconnected", s.disconnected},
              {"parse_errors", s.parse_errors},
              {"candidates", s.candidates},
              {"tight", s.tight},
              {"seconds", s.seconds}};
  if (s.max_ratio_lower) {
    out["max_ratio"] = {{"lower", rational_to_json(*s.max_ratio_lower)}, {"id", s.max_ratio_id}};
  }
  if (s.max_root) {
    out["max_root"] = {{"n", s.max_root->first}, {"max_degree", s.max_root->second}, {"id", s.max_root_id}};
  }
  return out;
}

json to_json(const C5PowerReport& r) {
  return {{"k", r.k},
          {"n", r.n},
          {"m", r.m},
          {"max_degree", r.max_degree},
          {"min_curvature", rational_to_json(r.min_curvature)},
          {"order_squared", integer_to_json(r.order_squared)},
          {"five_to_degree", integer_to_json(r.five_to_degree)},
          {"tight", r.tight}};
}

json to_json(const ReportDocument& doc) {
  json out = {{"tool", "ricci"}, {"version", doc.version}, {"input", doc.input}};
  json curv = json::array();
  for (const auto& r : doc.curvature) curv.push_back(to_json(r, doc.with_witness));
  out["curvature"] = curv;
  json verdicts = json::array();
  for (const auto& v : doc.verdicts) verdicts.push_back(to_json(v));
  out["verdicts"] = verdicts;
  for (const auto& [k, v] : doc.extra.items()) out[k] = v;
  return out;
}

ReportDocument report_from_json(const json& j) {
  ReportDocument doc;
  doc.version = j.at("version").get<std::string>();
  doc.input = j.value("input", json::object());
  for (const auto& e : j.at("curvature")) {
    doc.curvature.push_back(curvature_from_json(e));
    if (e.contains("witness")) doc.with_witness = true;
  }
  for (const auto& e : j.at("verdicts")) doc.verdicts.push_back(verdict_from_json(e));
  for (const auto& [k, v] : j.items()) {
    if (k != "tool" && k != "version" && k != "input" && k != "curvature" && k != "verdicts") doc.extra[k] = v;
  }
  return doc;
}

void json_report_write(const ReportDocument& doc, std::ostream& sink) { sink << to_json(doc).dump(2) << '\n'; }

}  // namespace ricci
