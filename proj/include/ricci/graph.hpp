#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace ricci {

using Vertex = std::uint32_t;
using Edge = std::pair<Vertex, Vertex>;

// Marks an unreachable vertex in a distance row.
inline constexpr int kUnreachable = -1;

namespace detail {
struct DistanceCache;
}

// Immutable simple undirected graph on vertices 0..n-1.
//
// Neighbor lists are sorted and duplicate free. BFS rows are computed on first
// request and cached; the cache is shared between copies and is safe to query
// from several threads.
class Graph {
 public:
  Graph();

  // Throws ConstructionError on a loop or repeated edge and ArgumentError on
  // an endpoint outside [0, n).
  static Graph from_edge_list(std::size_t n, std::span<const Edge> edges);

  std::size_t order() const { return adjacency_.size(); }
  std::size_t size() const { return edge_count_; }

  std::span<const Vertex> neighbors(Vertex v) const { return adjacency_.at(v); }
  std::size_t degree(Vertex v) const { return adjacency_.at(v).size(); }
  bool adjacent(Vertex u, Vertex v) const;

  std::size_t min_degree() const;
  std::size_t max_degree() const;
  bool is_regular() const;
  bool is_connected() const;

  // Edges as (u, v) with u < v, in lexicographic order.
  std::vector<Edge> edges() const;

  const std::vector<int>& distances_from(Vertex x) const;
  int distance(Vertex u, Vertex v) const { return distances_from(u).at(v); }

  // Relabels vertex v as perm[v].
  Graph permuted(std::span<const Vertex> perm) const;

  friend bool operator==(const Graph& a, const Graph& b) { return a.adjacency_ == b.adjacency_; }

 private:
  std::vector<std::vector<Vertex>> adjacency_;
  std::size_t edge_count_ = 0;
  bool connected_ = true;
  std::shared_ptr<detail::DistanceCache> cache_;
};

// All-pairs shortest path lengths.
class DistanceMatrix {
 public:
  explicit DistanceMatrix(const Graph& g);

  std::size_t order() const { return n_; }
  std::optional<int> at(Vertex u, Vertex v) const {
    int d = d_[static_cast<std::size_t>(u) * n_ + v];
    if (d == kUnreachable) return std::nullopt;
    return d;
  }

 private:
  std::size_t n_;
  std::vector<int> d_;
};

std::vector<int> bfs_distances(const Graph& g, Vertex x);
DistanceMatrix all_distances(const Graph& g);

// Throws DisconnectedError when g is disconnected.
int diameter(const Graph& g);

// 2-colouring; empty when g has an odd cycle.
std::optional<std::vector<int>> two_coloring(const Graph& g);
inline bool is_bipartite(const Graph& g) { return two_coloring(g).has_value(); }

// Cycle detection (subgraph, not induced). The find_* variants return the
// cycle's vertices in order.
std::optional<std::vector<Vertex>> find_c3(const Graph& g);
std::optional<std::vector<Vertex>> find_c5(const Graph& g);
inline bool has_c3(const Graph& g) { return find_c3(g).has_value(); }
inline bool has_c5(const Graph& g) { return find_c5(g).has_value(); }

// Neighbours of y split by their distance to x relative to d(x, y).
struct LayerPartition {
  Vertex root;
  Vertex target;
  int distance;
  std::vector<Vertex> gamma_minus;
  std::vector<Vertex> gamma_zero;
  std::vector<Vertex> gamma_plus;
};

LayerPartition layer_partition(const Graph& g, Vertex x, Vertex y);

// BFS layers around a root. e_cross[i] counts edges between layers i and i+1,
// e_flat[i] counts edges inside layer i.
struct LayerEdgeProfile {
  Vertex root;
  std::vector<std::vector<Vertex>> layers;
  std::vector<std::size_t> e_cross;
  std::vector<std::size_t> e_flat;

  std::size_t cross(std::size_t i) const { return i < e_cross.size() ? e_cross[i] : 0; }
  std::size_t flat(std::size_t i) const { return i < e_flat.size() ? e_flat[i] : 0; }
};

LayerEdgeProfile layer_edge_profile(const Graph& g, Vertex x);

namespace gen {

Graph hypercube(unsigned d);
Graph cycle(std::size_t n);
Graph path(std::size_t n);
Graph complete(std::size_t n);
Graph complete_bipartite(std::size_t a, std::size_t b);
// K_{1,leaves}; vertex 0 is the centre.
Graph star(std::size_t leaves);
Graph petersen();
// Vertex (u, a) of g x h is numbered u * |h| + a.
Graph cartesian_product(const Graph& g, const Graph& h);

}  // namespace gen

}  // namespace ricci
