#include <doctest.h>

#include <random>

#include "ricci/enumerate.hpp"
#include "ricci/errors.hpp"
#include "ricci/graph.hpp"
#include "ricci/graph6.hpp"
#include "support.hpp"

using namespace ricci;

TEST_SUITE("graph6") {

TEST_CASE("known encodings") {
  CHECK(graph6_encode(Graph::from_edge_list(0, {})) == "?");
  CHECK(graph6_encode(Graph::from_edge_list(1, {})) == "@");
  CHECK(graph6_encode(gen::complete(2)) == "A_");
  CHECK(graph6_encode(gen::cycle(4)) == "Cl");
  CHECK(graph6_encode(gen::complete(4)) == "C~");
  CHECK(graph6_encode(gen::petersen()).size() == 1 + 8);
  CHECK(graph6_decode("A_") == gen::complete(2));
  CHECK(graph6_decode(">>graph6<<Cl\n") == gen::cycle(4));
}

TEST_CASE("round trip over all graphs on at most six vertices") {
  for (std::size_t n = 0; n <= 6; ++n) {
    const std::size_t pairs = n * (n - 1) / 2;
    for (std::uint32_t mask = 0; mask < (1U << pairs); ++mask) {
      std::vector<Edge> edges;
      std::size_t bit = 0;
      for (Vertex j = 1; j < n; ++j)
        for (Vertex i = 0; i < j; ++i, ++bit)
          if ((mask >> bit) & 1U) edges.emplace_back(i, j);
      Graph g = Graph::from_edge_list(n, edges);
      std::string s = graph6_encode(g);
      CHECK(s.size() == 1 + (pairs + 5) / 6);
      CHECK(graph6_decode(s) == g);
    }
  }
}

TEST_CASE("long-form sizes") {
  Graph big = gen::cycle(100);
  std::string s = graph6_encode(big);
  CHECK(s[0] == '~');
  CHECK(graph6_decode(s) == big);
  Graph q7 = gen::hypercube(7);
  CHECK(graph6_decode(graph6_encode(q7)) == q7);
}

TEST_CASE("malformed input names the byte") {
  auto message = [](std::string_view s) {
    try {
      graph6_decode(s);
    } catch (const ParseError& e) {
      return std::string(e.what());
    }
    return std::string();
  };
  CHECK(message("C").find("truncated") != std::string::npos);
  CHECK(message("Cl?").find("trailing") != std::string::npos);
  CHECK(message("C\x7f").find("byte 1") != std::string::npos);
  CHECK(message("Bx").find("padding") != std::string::npos);
  CHECK(message("").find("empty") != std::string::npos);
}

TEST_CASE("edge lists") {
  Graph g = edge_list_parse("# square\n4 4\n0 1\n1 2\n2 3\n3 0\n");
  CHECK(g == gen::cycle(4));
  CHECK(edge_list_parse(edge_list_write(gen::petersen())) == gen::petersen());
  CHECK_THROWS_AS(edge_list_parse("3 1\n0 5\n"), ParseError);
  CHECK_THROWS_AS(edge_list_parse("3 2\n0 1\n"), ParseError);
  CHECK_THROWS_AS(edge_list_parse("3 2\n0 1\n1 0\n"), ParseError);
  CHECK_THROWS_AS(edge_list_parse("3 1\n0 x\n"), ParseError);
  CHECK_THROWS_AS(edge_list_parse(""), ParseError);
  try {
    edge_list_parse("3 1\n\n0 1 2\n");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("line 3") != std::string::npos);
  }
}

TEST_CASE("enumerated representatives survive encoding") {
  std::mt19937_64 rng(2);
  for (const auto& g : enumerate_small_connected(7, CycleFilter::TriangleFree)) {
    Graph h = graph6_decode(graph6_encode(g));
    CHECK(h == g);
    Graph p = g.permuted(testing::random_permutation(g.order(), rng));
    CHECK(canonical_form(graph6_decode(graph6_encode(p))) == g);
  }
}

}  // TEST_SUITE
