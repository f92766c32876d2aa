#pragma once

#include <algorithm>
#include <functional>
#include <optional>
#include <numeric>
#include <random>
#include <vector>

#include "ricci/graph.hpp"
#include "ricci/transport.hpp"

namespace testing {

using ricci::Graph;
using ricci::Vertex;

inline constexpr int kFar = 1 << 20;

// Plain Floyd-Warshall on the adjacency predicate.
inline std::vector<std::vector<int>> floyd_warshall(const Graph& g) {
  const std::size_t n = g.order();
  std::vector<std::vector<int>> d(n, std::vector<int>(n, kFar));
  for (std::size_t i = 0; i < n; ++i) {
    d[i][i] = 0;
    for (std::size_t j = 0; j < n; ++j) {
      if (g.adjacent(static_cast<Vertex>(i), static_cast<Vertex>(j))) d[i][j] = 1;
    }
  }
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
  return d;
}

inline std::vector<Vertex> random_permutation(std::size_t n, std::mt19937_64& rng) {
  std::vector<Vertex> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

// Connected graph: random spanning tree plus extra edges with probability p.
inline Graph random_connected(std::size_t n, double p, std::mt19937_64& rng) {
  std::vector<ricci::Edge> edges;
  std::bernoulli_distribution coin(p);
  for (Vertex v = 1; v < n; ++v) {
    std::uniform_int_distribution<Vertex> pick(0, v - 1);
    edges.emplace_back(pick(rng), v);
  }
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (coin(rng)) edges.emplace_back(u, v);
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  return Graph::from_edge_list(n, edges);
}

// Masses k/D on a random support, D <= max_den.
inline ricci::Distribution random_distribution(const Graph& g, std::size_t max_support, long max_den,
                                               std::mt19937_64& rng) {
  std::uniform_int_distribution<long> den_pick(1, max_den);
  const long den = den_pick(rng);
  const std::size_t support = std::min<std::size_t>({max_support, g.order(), static_cast<std::size_t>(den)});
  std::uniform_int_distribution<std::size_t> size_pick(1, support);
  const std::size_t k = size_pick(rng);
  auto verts = random_permutation(g.order(), rng);
  verts.resize(k);
  // Composition of den into k positive parts.
  std::vector<long> cuts;
  std::vector<long> pool(static_cast<std::size_t>(den - 1));
  std::iota(pool.begin(), pool.end(), 1);
  std::shuffle(pool.begin(), pool.end(), rng);
  cuts.assign(pool.begin(), pool.begin() + static_cast<std::ptrdiff_t>(k - 1));
  cuts.push_back(0);
  cuts.push_back(den);
  std::sort(cuts.begin(), cuts.end());
  ricci::VertexFunction masses;
  for (std::size_t i = 0; i < k; ++i) masses[verts[i]] = ricci::make_rational(cuts[i + 1] - cuts[i], den);
  return ricci::Distribution(masses);
}

// Minimum transport cost by trying every spanning-tree basis of the
// supply x demand table. Exponential; keep |supp m1| * |supp m2| small.
inline ricci::Rational transport_oracle(const Graph& g, const ricci::Distribution& m1,
                                        const ricci::Distribution& m2) {
  using ricci::Rational;
  auto src = m1.support();
  auto dst = m2.support();
  const std::size_t a = src.size(), b = dst.size(), cells = a * b, pick = a + b - 1;
  std::optional<Rational> best;
  std::vector<std::size_t> chosen;
  std::function<void(std::size_t)> rec = [&](std::size_t from) {
    if (chosen.size() == pick) {
      std::vector<Rational> left(a + b);
      for (std::size_t i = 0; i < a; ++i) left[i] = m1[src[i]];
      for (std::size_t j = 0; j < b; ++j) left[a + j] = m2[dst[j]];
      std::vector<char> used(pick, 0);
      std::vector<Rational> flow(pick);
      for (std::size_t round = 0; round < pick; ++round) {
        bool progressed = false;
        for (std::size_t node = 0; node < a + b && !progressed; ++node) {
          std::size_t deg = 0, last = 0;
          for (std::size_t c = 0; c < pick; ++c) {
            if (used[c]) continue;
            std::size_t i = chosen[c] / b, j = a + chosen[c] % b;
            if (i == node || j == node) {
              ++deg;
              last = c;
            }
          }
          if (deg != 1) continue;
          std::size_t i = chosen[last] / b, j = a + chosen[last] % b;
          flow[last] = left[node];
          left[i] -= flow[last];
          left[j] -= flow[last];
          used[last] = 1;
          progressed = true;
        }
        if (!progressed) return;  // cycle: not a tree
      }
      for (const auto& r : left)
        if (r != 0) return;
      Rational cost = 0;
      for (std::size_t c = 0; c < pick; ++c) {
        if (flow[c] < 0) return;
        cost += flow[c] * g.distance(src[chosen[c] / b], dst[chosen[c] % b]);
      }
      if (!best || cost < *best) best = cost;
      return;
    }
    for (std::size_t c = from; c < cells; ++c) {
      chosen.push_back(c);
      rec(c + 1);
      chosen.pop_back();
    }
  };
  rec(0);
  return *best;
}

}  // namespace testing
