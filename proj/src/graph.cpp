#include "ricci/graph.hpp"

#include <algorithm>
#include <deque>
#include <mutex>
#include <string>

#include "ricci/errors.hpp"

namespace ricci {

namespace detail {

struct DistanceCache {
  explicit DistanceCache(std::size_t n) : rows(n) {}
  std::mutex mu;
  std::vector<std::unique_ptr<const std::vector<int>>> rows;
};

}  // namespace detail

namespace {

std::vector<int> bfs(const std::vector<std::vector<Vertex>>& adj, Vertex x) {
  std::vector<int> dist(adj.size(), kUnreachable);
  std::deque<Vertex> queue{x};
  dist[x] = 0;
  while (!queue.empty()) {
    Vertex u = queue.front();
    queue.pop_front();
    for (Vertex w : adj[u]) {
      if (dist[w] == kUnreachable) {
        dist[w] = dist[u] + 1;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

std::string pair_str(Vertex u, Vertex v) {
  return "(" + std::to_string(u) + "," + std::to_string(v) + ")";
}

}  // namespace

Graph::Graph() : cache_(std::make_shared<detail::DistanceCache>(0)) {}

Graph Graph::from_edge_list(std::size_t n, std::span<const Edge> edges) {
  Graph g;
  g.adjacency_.assign(n, {});
  for (auto [u, v] : edges) {
    if (u >= n || v >= n) {
      throw ArgumentError("edge " + pair_str(u, v) + " has an endpoint outside [0, " +
                          std::to_string(n) + ")");
    }
    if (u == v) throw ConstructionError("loop at " + pair_str(u, v));
    g.adjacency_[u].push_back(v);
    g.adjacency_[v].push_back(u);
  }
  for (Vertex v = 0; v < n; ++v) {
    auto& nb = g.adjacency_[v];
    std::sort(nb.begin(), nb.end());
    auto dup = std::adjacent_find(nb.begin(), nb.end());
    if (dup != nb.end()) throw ConstructionError("duplicate edge " + pair_str(v, *dup));
  }
  g.edge_count_ = edges.size();
  g.cache_ = std::make_shared<detail::DistanceCache>(n);
  if (n > 0) {
    auto d = bfs(g.adjacency_, 0);
    g.connected_ = std::none_of(d.begin(), d.end(), [](int x) { return x == kUnreachable; });
  }
  return g;
}

bool Graph::adjacent(Vertex u, Vertex v) const {
  const auto& nb = adjacency_.at(u);
  return std::binary_search(nb.begin(), nb.end(), v);
}

std::size_t Graph::min_degree() const {
  std::size_t best = order() == 0 ? 0 : degree(0);
  for (const auto& nb : adjacency_) best = std::min(best, nb.size());
  return best;
}

std::size_t Graph::max_degree() const {
  std::size_t best = 0;
  for (const auto& nb : adjacency_) best = std::max(best, nb.size());
  return best;
}

bool Graph::is_regular() const { return min_degree() == max_degree(); }

bool Graph::is_connected() const { return connected_; }

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (Vertex u = 0; u < order(); ++u) {
    for (Vertex v : adjacency_[u]) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

const std::vector<int>& Graph::distances_from(Vertex x) const {
  if (x >= order()) throw ArgumentError("vertex " + std::to_string(x) + " out of range");
  std::lock_guard lock(cache_->mu);
  auto& row = cache_->rows[x];
  if (!row) row = std::make_unique<const std::vector<int>>(bfs(adjacency_, x));
  return *row;
}

Graph Graph::permuted(std::span<const Vertex> perm) const {
  if (perm.size() != order()) throw ArgumentError("permutation size mismatch");
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (auto [u, v] : edges()) out.emplace_back(perm[u], perm[v]);
  return from_edge_list(order(), out);
}

DistanceMatrix::DistanceMatrix(const Graph& g) : n_(g.order()), d_(n_ * n_) {
  for (Vertex u = 0; u < n_; ++u) {
    const auto& row = g.distances_from(u);
    std::copy(row.begin(), row.end(), d_.begin() + static_cast<std::ptrdiff_t>(u * n_));
  }
}

std::vector<int> bfs_distances(const Graph& g, Vertex x) { return g.distances_from(x); }

DistanceMatrix all_distances(const Graph& g) { return DistanceMatrix(g); }

int diameter(const Graph& g) {
  if (!g.is_connected()) throw DisconnectedError("diameter of a disconnected graph");
  int best = 0;
  for (Vertex u = 0; u < g.order(); ++u) {
    const auto& row = g.distances_from(u);
    best = std::max(best, *std::max_element(row.begin(), row.end()));
  }
  return best;
}

std::optional<std::vector<int>> two_coloring(const Graph& g) {
  std::vector<int> color(g.order(), -1);
  for (Vertex s = 0; s < g.order(); ++s) {
    if (color[s] != -1) continue;
    color[s] = 0;
    std::deque<Vertex> queue{s};
    while (!queue.empty()) {
      Vertex u = queue.front();
      queue.pop_front();
      for (Vertex w : g.neighbors(u)) {
        if (color[w] == -1) {
          color[w] = 1 - color[u];
          queue.push_back(w);
        } else if (color[w] == color[u]) {
          return std::nullopt;
        }
      }
    }
  }
  return color;
}

std::optional<std::vector<Vertex>> find_c3(const Graph& g) {
  for (Vertex u = 0; u < g.order(); ++u) {
    for (Vertex v : g.neighbors(u)) {
      if (v <= u) continue;
      for (Vertex w : g.neighbors(v)) {
        if (w > v && g.adjacent(u, w)) return std::vector<Vertex>{u, v, w};
      }
    }
  }
  return std::nullopt;
}

// Every 5-cycle is found from its smallest vertex s, walking only through
// larger vertices, so each path is explored from exactly one start.
std::optional<std::vector<Vertex>> find_c5(const Graph& g) {
  std::vector<Vertex> path;
  std::vector<char> on_path(g.order(), 0);

  auto extend = [&](auto&& self, Vertex s) -> bool {
    Vertex last = path.back();
    if (path.size() == 5) return g.adjacent(last, s);
    for (Vertex w : g.neighbors(last)) {
      if (w <= s || on_path[w]) continue;
      // The closing vertex must be adjacent to s; skip the descent otherwise.
      if (path.size() == 4 && !g.adjacent(w, s)) continue;
      path.push_back(w);
      on_path[w] = 1;
      if (self(self, s)) return true;
      on_path[w] = 0;
      path.pop_back();
    }
    return false;
  };

  for (Vertex s = 0; s < g.order(); ++s) {
    path.assign(1, s);
    on_path[s] = 1;
    if (extend(extend, s)) return path;
    on_path[s] = 0;
  }
  return std::nullopt;
}

LayerPartition layer_partition(const Graph& g, Vertex x, Vertex y) {
  if (x == y) throw ArgumentError("layer partition needs distinct vertices");
  const auto& dx = g.distances_from(x);
  int i = dx.at(y);
  if (i == kUnreachable) throw DisconnectedError("target unreachable from root");
  LayerPartition p{x, y, i, {}, {}, {}};
  for (Vertex u : g.neighbors(y)) {
    int du = dx[u];
    if (du == i - 1) {
      p.gamma_minus.push_back(u);
    } else if (du == i) {
      p.gamma_zero.push_back(u);
    } else {
      p.gamma_plus.push_back(u);
    }
  }
  return p;
}

LayerEdgeProfile layer_edge_profile(const Graph& g, Vertex x) {
  if (!g.is_connected()) throw DisconnectedError("layer profile of a disconnected graph");
  const auto& dx = g.distances_from(x);
  int ecc = *std::max_element(dx.begin(), dx.end());
  LayerEdgeProfile p{x, {}, {}, {}};
  p.layers.resize(static_cast<std::size_t>(ecc) + 1);
  p.e_cross.assign(static_cast<std::size_t>(ecc), 0);
  p.e_flat.assign(static_cast<std::size_t>(ecc) + 1, 0);
  for (Vertex v = 0; v < g.order(); ++v) p.layers[static_cast<std::size_t>(dx[v])].push_back(v);
  for (auto [u, v] : g.edges()) {
    auto a = static_cast<std::size_t>(dx[u]);
    auto b = static_cast<std::size_t>(dx[v]);
    if (a == b) {
      ++p.e_flat[a];
    } else {
      ++p.e_cross[std::min(a, b)];
    }
  }
  return p;
}

namespace gen {

Graph hypercube(unsigned d) {
  if (d < 1 || d > 20) throw ArgumentError("hypercube dimension must be in [1, 20]");
  std::size_t n = std::size_t{1} << d;
  std::vector<Edge> edges;
  for (Vertex v = 0; v < n; ++v) {
    for (unsigned b = 0; b < d; ++b) {
      Vertex w = v ^ (Vertex{1} << b);
      if (v < w) edges.emplace_back(v, w);
    }
  }
  return Graph::from_edge_list(n, edges);
}

Graph cycle(std::size_t n) {
  if (n < 3) throw ArgumentError("cycle needs at least 3 vertices");
  std::vector<Edge> edges;
  for (Vertex v = 0; v < n; ++v) edges.emplace_back(v, static_cast<Vertex>((v + 1) % n));
  return Graph::from_edge_list(n, edges);
}

Graph path(std::size_t n) {
  if (n < 1) throw ArgumentError("path needs at least 1 vertex");
  std::vector<Edge> edges;
  for (Vertex v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
  return Graph::from_edge_list(n, edges);
}

Graph complete(std::size_t n) {
  if (n < 1) throw ArgumentError("complete graph needs at least 1 vertex");
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  }
  return Graph::from_edge_list(n, edges);
}

Graph complete_bipartite(std::size_t a, std::size_t b) {
  if (a < 1 || b < 1) throw ArgumentError("complete bipartite sides must be non-empty");
  std::vector<Edge> edges;
  for (Vertex u = 0; u < a; ++u) {
    for (Vertex v = 0; v < b; ++v) edges.emplace_back(u, static_cast<Vertex>(a + v));
  }
  return Graph::from_edge_list(a + b, edges);
}

Graph star(std::size_t leaves) {
  if (leaves < 1) throw ArgumentError("star needs at least one leaf");
  return complete_bipartite(1, leaves);
}

Graph petersen() {
  std::vector<Edge> edges;
  for (Vertex i = 0; i < 5; ++i) {
    edges.emplace_back(i, (i + 1) % 5);            // outer cycle
    edges.emplace_back(i, i + 5);                  // spokes
    edges.emplace_back(i + 5, (i + 2) % 5 + 5);    // inner pentagram
  }
  return Graph::from_edge_list(10, edges);
}

Graph cartesian_product(const Graph& g, const Graph& h) {
  const std::size_t nh = h.order();
  std::vector<Edge> edges;
  auto id = [nh](Vertex u, Vertex a) { return static_cast<Vertex>(u * nh + a); };
  for (auto [u, v] : g.edges()) {
    for (Vertex a = 0; a < nh; ++a) edges.emplace_back(id(u, a), id(v, a));
  }
  for (Vertex u = 0; u < g.order(); ++u) {
    for (auto [a, b] : h.edges()) edges.emplace_back(id(u, a), id(u, b));
  }
  return Graph::from_edge_list(g.order() * nh, edges);
}

}  // namespace gen

}  // namespace ricci
