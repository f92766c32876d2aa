#include <doctest.h>

#include <sstream>

#include "ricci/errors.hpp"
#include "ricci/report.hpp"
#include "ricci/search.hpp"

using namespace ricci;

namespace {

std::vector<std::string> record_stream(Conjecture which, std::size_t max_order, unsigned jobs, std::size_t batch) {
  auto src = enumeration_source(max_order);
  std::vector<std::string> out;
  RecordSink sink = [&](const ScanRecord& r) { out.push_back(to_json(r).dump()); };
  ScanOptions opt{jobs, 1024, batch};
  if (which == Conjecture::TriangleFree) {
    scan_conjecture1(*src, opt, sink);
  } else {
    scan_conjecture2(*src, opt, sink);
  }
  return out;
}

}  // namespace

TEST_SUITE("search") {

TEST_CASE("enumeration source covers every order") {
  auto src = enumeration_source(5);
  std::size_t count = 0;
  std::string last;
  while (auto item = src->next()) {
    ++count;
    last = item->id;
  }
  CHECK(count == 1 + 2 + 6 + 21);
  CHECK(last == "n5#20");
  CHECK_THROWS_AS(enumeration_source(8), ScaleError);
}

TEST_CASE("triangle-free scan up to five vertices") {
  auto src = enumeration_source(5);
  std::vector<ScanRecord> records;
  auto s = scan_conjecture1(*src, {}, [&](const ScanRecord& r) { records.push_back(r); });
  CHECK(s.scanned == 30);
  CHECK(s.candidates == 0);
  CHECK(s.scanned == s.satisfied + s.out_of_hypothesis + s.filtered + s.disconnected + s.parse_errors + s.candidates);
  CHECK(s.filtered == 30 - (1 + 1 + 3 + 6));
  // K2 and C4 are the only tight instances here.
  CHECK(s.tight == 2);
  bool saw_c5 = false;
  for (const auto& r : records) {
    if (r.n == 5 && r.m == 5 && r.max_degree == 2) {
      saw_c5 = true;
      CHECK(r.status == ScanStatus::Satisfied);
      CHECK(*r.min_curvature == make_rational(1, 2));
      CHECK(r.bound->lower == 16);
    }
  }
  CHECK(saw_c5);
}

TEST_CASE("degree scan and the C5 powers") {
  auto src = enumeration_source(5);
  auto s = scan_conjecture2(*src);
  CHECK(s.candidates == 0);
  CHECK(s.filtered == 0);
  CHECK(s.tight == 1);
  CHECK(s.max_root->first == 5);
  CHECK(s.max_root->second == 2);

  auto k1 = c5_power_experiment(1);
  CHECK(k1.tight);
  CHECK(k1.min_curvature == make_rational(1, 2));
  auto k2 = c5_power_experiment(2);
  CHECK(k2.tight);
  CHECK(k2.order_squared == 625);
  CHECK(k2.min_curvature > 0);
  CHECK_THROWS_AS(c5_power_experiment(4), ScaleError);
  CHECK_THROWS_AS(c5_power_experiment(0), ArgumentError);
}

TEST_CASE("record streams are deterministic across worker counts") {
  auto a = record_stream(Conjecture::TriangleFree, 6, 1, 64);
  auto b = record_stream(Conjecture::TriangleFree, 6, 3, 7);
  CHECK(a == b);
  auto c = record_stream(Conjecture::DegreeExponential, 6, 1, 64);
  auto d = record_stream(Conjecture::DegreeExponential, 6, 4, 5);
  CHECK(c == d);
}

TEST_CASE("graph6 corpus with bad lines") {
  std::istringstream corpus("A_\n\nBw\nnot graph6 !\nCl\nC~\n");
  auto src = graph6_source(corpus);
  std::vector<ScanRecord> records;
  auto s = scan_conjecture1(*src, {}, [&](const ScanRecord& r) { records.push_back(r); });
  REQUIRE(records.size() == 5);
  CHECK(records[0].id == "line:1");
  CHECK(records[1].id == "line:3");
  CHECK(records[1].status == ScanStatus::Filtered);
  CHECK(records[2].status == ScanStatus::ParseError);
  CHECK_FALSE(records[2].error.empty());
  CHECK(records[3].tight);
  CHECK(records[4].status == ScanStatus::Filtered);
  CHECK(s.parse_errors == 1);

  std::istringstream split("C`\n");  // two disjoint edges
  auto src2 = graph6_source(split);
  auto s2 = scan_conjecture2(*src2);
  CHECK(s2.disconnected == 1);
}

}  // TEST_SUITE
