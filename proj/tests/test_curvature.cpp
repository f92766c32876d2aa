#include <doctest.h>

#include <random>

#include "ricci/curvature.hpp"
#include "ricci/enumerate.hpp"
#include "ricci/errors.hpp"
#include "ricci/graph.hpp"
#include "support.hpp"

using namespace ricci;

namespace {

Rational q(long a, long b = 1) { return make_rational(a, b); }

// The witness must be feasible for the Laplacian program and attain the value.
void check_witness(const Graph& g, const CurvatureReport& r) {
  const auto& f = r.witness.values;
  REQUIRE(f.count(r.x) == 1);
  REQUIRE(f.count(r.y) == 1);
  CHECK(f.at(r.x) == 0);
  CHECK(f.at(r.y) == r.distance);
  CHECK(verify_lipschitz(g, r.witness));
  for (const auto& [v, val] : f) CHECK(is_integer(val));
  Rational value = (laplacian(g, f, r.x) - laplacian(g, f, r.y)) / r.distance;
  CHECK(value == r.kappa_lly);
}

}  // namespace

TEST_SUITE("curvature") {

TEST_CASE("Laplacian") {
  Graph q3 = gen::hypercube(3);
  VertexFunction weight;
  for (Vertex v = 0; v < 8; ++v) weight[v] = __builtin_popcount(v);
  CHECK(laplacian(q3, weight, 0) == 1);
  CHECK(laplacian(q3, weight, 7) == -1);
  VertexFunction constant;
  for (Vertex v = 0; v < 8; ++v) constant[v] = 5;
  CHECK(laplacian(q3, constant, 3) == 0);
  VertexFunction partial{{0, Rational(0)}, {1, Rational(1)}};
  CHECK_THROWS_AS(laplacian(q3, partial, 0), ArgumentError);
}

TEST_CASE("known curvature values") {
  CHECK(kappa_lly(gen::complete(2), 0, 1).kappa_lly == 2);
  CHECK(kappa_lly(gen::path(3), 0, 1).kappa_lly == 1);
  CHECK(kappa_lly(gen::cycle(4), 0, 1).kappa_lly == 1);
  CHECK(kappa_lly(gen::cycle(5), 0, 1).kappa_lly == q(1, 2));
  CHECK(kappa_lly(gen::cycle(6), 0, 1).kappa_lly == 0);
  CHECK(kappa_lly(gen::star(3), 0, 1).kappa_lly == q(2, 3));
  CHECK(kappa_lly(gen::complete(3), 0, 1).kappa_lly == q(3, 2));
  for (std::size_t n = 2; n <= 7; ++n) {
    CHECK(kappa_lly(gen::complete(n), 0, 1).kappa_lly == q(static_cast<long>(n), static_cast<long>(n - 1)));
  }
  for (unsigned d = 1; d <= 4; ++d) {
    for (const auto& r : curvature_all_edges(gen::hypercube(d))) CHECK(r.kappa_lly == q(2, d));
  }
  auto m = min_edge_curvature(gen::hypercube(4));
  CHECK(m.kappa == q(1, 2));
  CHECK_THROWS_AS(kappa_lly(gen::cycle(4), 2, 2), ArgumentError);
  CHECK_THROWS_AS(min_edge_curvature(Graph::from_edge_list(1, {})), ArgumentError);
}

TEST_CASE("lazy curvature on K2") {
  Graph k2 = gen::complete(2);
  CHECK(kappa_alpha(k2, 0, 1, q(1, 4)) == q(1, 2));
  CHECK(kappa_alpha(k2, 0, 1, q(3, 4)) == q(1, 2));
  auto prof = idleness_profile(k2, 0, 1, {q(0), q(1, 4), q(1, 2), q(3, 4)});
  REQUIRE(prof.samples.size() == 4);
  CHECK(prof.samples[0].kappa == 0);
  CHECK(prof.samples[1].kappa == q(1, 2));
  CHECK(prof.samples[2].kappa == 1);
  CHECK(prof.samples[3].kappa == q(1, 2));
  CHECK_THROWS_AS(kappa_alpha(k2, 0, 0, q(1, 2)), ArgumentError);
  CHECK_THROWS_AS(kappa_alpha(k2, 0, 1, q(1)), ArgumentError);
}

TEST_CASE("witnesses are integral, feasible and optimal") {
  for (const Graph& g : {gen::hypercube(3), gen::cycle(5), gen::cycle(6), gen::petersen(), gen::star(4),
                         gen::complete(5), gen::complete_bipartite(2, 3)}) {
    for (const auto& r : curvature_all_edges(g)) check_witness(g, r);
  }
  Graph c7 = gen::cycle(7);
  check_witness(c7, kappa_lly(c7, 0, 3));
}

TEST_CASE("simplex route matches the integral enumeration oracle") {
  for (std::size_t n = 2; n <= 6; ++n) {
    for (const auto& g : enumerate_small_connected(n)) {
      for (Vertex x = 0; x < n; ++x) {
        for (Vertex y = x + 1; y < n; ++y) {
          auto lp = kappa_lly(g, x, y);
          auto brute = kappa_lly_enumerate(g, x, y);
          CHECK(brute.method == CurvatureMethod::IntegralEnumeration);
          CHECK(lp.kappa_lly == brute.kappa_lly);
        }
      }
    }
  }
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 30; ++trial) {
    Graph g = testing::random_connected(9, 0.15, rng);
    for (auto [u, v] : g.edges()) CHECK(kappa_lly(g, u, v).kappa_lly == kappa_lly_enumerate(g, u, v).kappa_lly);
  }
}

TEST_CASE("pairs are never below the minimum edge curvature") {
  for (std::size_t n = 3; n <= 7; ++n) {
    for (const auto& g : enumerate_small_connected(n)) {
      Rational kmin = min_edge_curvature(g).kappa;
      for (Vertex x = 0; x < n; ++x) {
        for (Vertex y = x + 1; y < n; ++y) {
          if (g.adjacent(x, y)) continue;
          CHECK(kappa_lly(g, x, y).kappa_lly >= kmin);
        }
      }
    }
  }
}

TEST_CASE("idleness profiles are concave and approach the limit from below") {
  std::vector<Rational> alphas;
  for (long k = 0; k < 8; ++k) alphas.push_back(q(k, 8));
  for (const Graph& g : {gen::cycle(4), gen::cycle(5), gen::star(3), gen::hypercube(3), gen::petersen()}) {
    for (auto [x, y] : g.edges()) {
      Rational lly = kappa_lly(g, x, y).kappa_lly;
      auto prof = idleness_profile(g, x, y, alphas);
      for (std::size_t i = 0; i < prof.samples.size(); ++i) {
        const auto& s = prof.samples[i];
        CHECK(s.kappa <= (1 - s.alpha) * 2);
        CHECK(s.kappa / (1 - s.alpha) <= lly);
        if (i > 0) {
          const auto& p = prof.samples[i - 1];
          CHECK(p.kappa / (1 - p.alpha) <= s.kappa / (1 - s.alpha));
        }
        if (i >= 2) {
          // equal spacing: concavity is a non-positive second difference
          CHECK(prof.samples[i].kappa - 2 * prof.samples[i - 1].kappa + prof.samples[i - 2].kappa <= 0);
        }
      }
    }
  }
}

TEST_CASE("parallel fan-out is deterministic") {
  Graph g = gen::cartesian_product(gen::cycle(5), gen::cycle(4));
  auto one = curvature_all_edges(g, 1);
  auto many = curvature_all_edges(g, 4);
  REQUIRE(one.size() == many.size());
  for (std::size_t i = 0; i < one.size(); ++i) {
    CHECK(one[i].x == many[i].x);
    CHECK(one[i].kappa_lly == many[i].kappa_lly);
    CHECK(one[i].witness.values == many[i].witness.values);
  }
}

}  // TEST_SUITE
