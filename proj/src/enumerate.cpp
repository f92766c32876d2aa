#include "ricci/enumerate.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "ricci/errors.hpp"

namespace ricci {

namespace {

// graph6 column-major pair index of i < j.
constexpr unsigned pair_index(unsigned i, unsigned j) { return j * (j - 1) / 2 + i; }

// Colour refinement by (colour, sorted neighbour colours) until stable. The
// colours only depend on the isomorphism class, so they can restrict which
// relabellings the canonical search tries.
std::vector<int> refined_colors(const Graph& g) {
  const std::size_t n = g.order();
  std::vector<int> color(n);
  for (Vertex v = 0; v < n; ++v) color[v] = static_cast<int>(g.degree(v));
  std::size_t classes = 0;
  while (true) {
    std::vector<std::vector<int>> sig(n);
    for (Vertex v = 0; v < n; ++v) {
      sig[v].push_back(color[v]);
      std::vector<int> nb;
      for (Vertex w : g.neighbors(v)) nb.push_back(color[w]);
      std::sort(nb.begin(), nb.end());
      sig[v].insert(sig[v].end(), nb.begin(), nb.end());
    }
    auto distinct = sig;
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    for (Vertex v = 0; v < n; ++v) {
      color[v] = static_cast<int>(std::lower_bound(distinct.begin(), distinct.end(), sig[v]) -
                                  distinct.begin());
    }
    if (distinct.size() == classes) break;
    classes = distinct.size();
  }
  return color;
}

struct CanonicalSearch {
  const Graph& g;
  std::size_t n;
  unsigned total_bits;
  std::vector<int> slot_color;   // colour required at each position
  std::vector<int> color;
  std::vector<Vertex> at;        // vertex placed at each position
  std::vector<char> used;
  std::uint64_t best = ~std::uint64_t{0};
  bool have_best = false;

  void place(std::size_t pos, std::uint64_t code) {
    if (pos == n) {
      if (!have_best || code < best) {
        best = code;
        have_best = true;
      }
      return;
    }
    for (Vertex v = 0; v < n; ++v) {
      if (used[v] || color[v] != slot_color[pos]) continue;
      std::uint64_t next = code;
      for (std::size_t i = 0; i < pos; ++i) {
        if (g.adjacent(at[i], v)) {
          next |= std::uint64_t{1}
                  << (total_bits - 1 - pair_index(static_cast<unsigned>(i), static_cast<unsigned>(pos)));
        }
      }
      // Bits of pairs inside positions [0, pos] are final; prune on the prefix.
      if (have_best) {
        unsigned fixed = static_cast<unsigned>((pos + 1) * pos / 2);
        unsigned shift = total_bits - fixed;
        if (fixed > 0 && (next >> shift) > (best >> shift)) continue;
      }
      used[v] = 1;
      at[pos] = v;
      place(pos + 1, next);
      used[v] = 0;
    }
  }
};

Graph graph_from_code(std::size_t n, std::uint64_t code) {
  const auto total_bits = static_cast<unsigned>(n * (n - 1) / 2);
  std::vector<Edge> edges;
  for (unsigned j = 1; j < n; ++j) {
    for (unsigned i = 0; i < j; ++i) {
      if ((code >> (total_bits - 1 - pair_index(i, j))) & 1U) edges.emplace_back(i, j);
    }
  }
  return Graph::from_edge_list(n, edges);
}

bool passes(const Graph& g, CycleFilter filter) {
  switch (filter) {
    case CycleFilter::None:
      return true;
    case CycleFilter::TriangleFree:
      return !has_c3(g);
    case CycleFilter::C3C5Free:
      return !has_c3(g) && !has_c5(g);
  }
  return true;
}

}  // namespace

std::uint64_t canonical_code(const Graph& g) {
  const std::size_t n = g.order();
  if (n > 11) throw ScaleError("canonical codes are limited to 11 vertices");
  if (n < 2) return 0;
  CanonicalSearch search{g, n, static_cast<unsigned>(n * (n - 1) / 2), {}, refined_colors(g),
                         std::vector<Vertex>(n), std::vector<char>(n, 0)};
  search.slot_color = search.color;
  std::sort(search.slot_color.begin(), search.slot_color.end());
  search.place(0, 0);
  return search.best;
}

Graph canonical_form(const Graph& g) { return graph_from_code(g.order(), canonical_code(g)); }

void for_each_small_connected(std::size_t n, CycleFilter filter,
                              const std::function<void(const Graph&)>& fn) {
  if (n > kMaxEnumerationOrder) {
    throw ScaleError("exhaustive enumeration stops at " + std::to_string(kMaxEnumerationOrder) +
                     " vertices; feed larger graphs as a graph6 corpus");
  }
  if (n == 0) return;

  // Every connected graph has a vertex whose removal leaves it connected, and
  // both cycle filters survive vertex deletion, so level k+1 is reached by
  // attaching a new vertex to level k graphs.
  std::map<std::uint64_t, Graph> level{{0, Graph::from_edge_list(1, {})}};
  for (std::size_t k = 1; k < n; ++k) {
    std::map<std::uint64_t, Graph> next;
    for (const auto& [code, g] : level) {
      auto base = g.edges();
      for (std::uint32_t mask = 1; mask < (1U << k); ++mask) {
        auto edges = base;
        for (Vertex v = 0; v < k; ++v) {
          if (mask & (1U << v)) edges.emplace_back(v, static_cast<Vertex>(k));
        }
        Graph h = Graph::from_edge_list(k + 1, edges);
        if (!passes(h, filter)) continue;
        std::uint64_t c = canonical_code(h);
        if (!next.contains(c)) next.emplace(c, graph_from_code(k + 1, c));
      }
    }
    level = std::move(next);
  }
  for (const auto& [code, g] : level) fn(g);
}

std::vector<Graph> enumerate_small_connected(std::size_t n, CycleFilter filter) {
  std::vector<Graph> out;
  for_each_small_connected(n, filter, [&](const Graph& g) { out.push_back(g); });
  return out;
}

}  // namespace ricci
