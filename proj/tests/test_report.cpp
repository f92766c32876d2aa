#include <doctest.h>

#include <sstream>

#include "ricci/curvature.hpp"
#include "ricci/errors.hpp"
#include "ricci/report.hpp"
#include "ricci/verifiers.hpp"

using namespace ricci;
using nlohmann::json;

namespace {

bool has_float(const json& j) {
  if (j.is_number_float()) return true;
  if (j.is_structured()) {
    for (const auto& e : j) {
      if (has_float(e)) return true;
    }
  }
  return false;
}

}  // namespace

TEST_SUITE("report") {

TEST_CASE("rationals travel as exact pairs") {
  CHECK(rational_to_json(make_rational(-3, 6)) == json{{"num", -1}, {"den", 2}});
  Rational huge = parse_rational("123456789012345678901234567890/11");
  json j = rational_to_json(huge);
  CHECK(j["num"].is_string());
  CHECK(j["den"] == 11);
  CHECK(rational_from_json(j) == huge);
  Rational edge = Rational(Integer(1) << 53);
  CHECK(rational_from_json(rational_to_json(edge)) == edge);
  CHECK(rational_from_json(json{{"num", 4}, {"den", 8}}) == make_rational(1, 2));
  CHECK_THROWS_AS(rational_from_json(json{{"num", 1}, {"den", 0}}), ParseError);
  CHECK_THROWS_AS(rational_from_json(json(0.5)), ParseError);
}

TEST_CASE("Q2 curvature report") {
  ReportDocument doc;
  doc.curvature = curvature_all_edges(gen::hypercube(2));
  json j = to_json(doc);
  REQUIRE(j["curvature"].size() == 4);
  for (const auto& e : j["curvature"]) CHECK(e["kappa"] == json{{"num", 1}, {"den", 1}});
  CHECK(j["tool"] == "ricci");
  CHECK(j["version"] == std::string(kToolVersion));
  CHECK_FALSE(has_float(j));
}

TEST_CASE("documents round-trip") {
  Graph g = gen::petersen();
  ReportDocument doc;
  doc.input = {{"graph6", "Petersen"}};
  doc.curvature = curvature_all_edges(g);
  doc.curvature[0].kappa_alpha = AlphaSample{make_rational(1, 3), kappa_alpha(g, 0, 1, make_rational(1, 3))};
  doc.with_witness = true;
  doc.verdicts.push_back(check_diameter_bound(gen::cycle(6), Rational(1)));
  doc.verdicts.push_back(check_main_bound(gen::hypercube(3)).verdict);
  doc.extra["labeling"] = to_json(hypercube_labeling(gen::hypercube(3)));

  std::ostringstream out;
  json_report_write(doc, out);
  ReportDocument back = report_from_json(json::parse(out.str()));
  CHECK(to_json(back) == to_json(doc));
  REQUIRE(back.curvature.size() == doc.curvature.size());
  for (std::size_t i = 0; i < doc.curvature.size(); ++i) {
    CHECK(back.curvature[i].kappa_lly == doc.curvature[i].kappa_lly);
    CHECK(back.curvature[i].witness.values == doc.curvature[i].witness.values);
  }
  CHECK(back.curvature[0].kappa_alpha->kappa == doc.curvature[0].kappa_alpha->kappa);
  REQUIRE(back.verdicts[0].witness);
  CHECK(back.verdicts[0].witness->lhs == 3);
  CHECK(recheck_witness(gen::cycle(6), back.verdicts[0]));
}

TEST_CASE("matching certificates and labellings") {
  json perfect = to_json(neighborhood_matching(gen::hypercube(3), 0, 1));
  CHECK(perfect["perfect"] == true);
  CHECK(perfect["matching"].size() == 2);
  CHECK_FALSE(perfect.contains("hall_violator"));
  json broken = to_json(neighborhood_matching(gen::cycle(6), 0, 1));
  CHECK(broken["hall_violator"]["set"] == json::array({5}));
  CHECK(broken["hall_violator"]["neighbors"].empty());

  json l = to_json(hypercube_labeling(gen::hypercube(2)));
  CHECK(l["dimension"] == 2);
  CHECK(l["labels"][0]["label"].empty());
  CHECK(l["labels"][3]["label"] == json::array({1, 2}));
}

}  // TEST_SUITE
