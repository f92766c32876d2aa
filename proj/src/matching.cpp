#include <algorithm>
#include <deque>
#include <string>

#include "ricci/errors.hpp"
#include "ricci/verifiers.hpp"

namespace ricci {

namespace {

constexpr std::size_t kFree = static_cast<std::size_t>(-1);

// Kuhn's augmenting paths on the bipartite graph between `left` and `right`
// whose edges are edges of g. Returns the partner of every left vertex.
struct Bipartite {
  const Graph& g;
  const std::vector<Vertex>& left;
  const std::vector<Vertex>& right;
  std::vector<std::size_t> mate_left, mate_right;

  Bipartite(const Graph& graph, const std::vector<Vertex>& l, const std::vector<Vertex>& r)
      : g(graph), left(l), right(r), mate_left(l.size(), kFree), mate_right(r.size(), kFree) {}

  bool augment(std::size_t a, std::vector<char>& seen) {
    for (std::size_t b = 0; b < right.size(); ++b) {
      if (seen[b] || !g.adjacent(left[a], right[b])) continue;
      seen[b] = 1;
      if (mate_right[b] == kFree || augment(mate_right[b], seen)) {
        mate_left[a] = b;
        mate_right[b] = a;
        return true;
      }
    }
    return false;
  }

  std::size_t solve() {
    std::size_t size = 0;
    for (std::size_t a = 0; a < left.size(); ++a) {
      std::vector<char> seen(right.size(), 0);
      if (augment(a, seen)) ++size;
    }
    return size;
  }

  // Left vertices reachable by alternating paths from unmatched left
  // vertices, and the right vertices reached on the way.
  std::pair<std::vector<Vertex>, std::vector<Vertex>> alternating_reach() const {
    std::vector<char> in_s(left.size(), 0), in_n(right.size(), 0);
    std::deque<std::size_t> queue;
    for (std::size_t a = 0; a < left.size(); ++a) {
      if (mate_left[a] == kFree) {
        in_s[a] = 1;
        queue.push_back(a);
      }
    }
    while (!queue.empty()) {
      std::size_t a = queue.front();
      queue.pop_front();
      for (std::size_t b = 0; b < right.size(); ++b) {
        if (in_n[b] || !g.adjacent(left[a], right[b])) continue;
        in_n[b] = 1;
        std::size_t next = mate_right[b];
        if (next != kFree && !in_s[next]) {
          in_s[next] = 1;
          queue.push_back(next);
        }
      }
    }
    std::vector<Vertex> s, n;
    for (std::size_t a = 0; a < left.size(); ++a) {
      if (in_s[a]) s.push_back(left[a]);
    }
    for (std::size_t b = 0; b < right.size(); ++b) {
      if (in_n[b]) n.push_back(right[b]);
    }
    return {s, n};
  }
};

}  // namespace

MatchingCertificate neighborhood_matching(const Graph& g, Vertex u, Vertex v) {
  if (!g.adjacent(u, v)) {
    throw ArgumentError("(" + std::to_string(u) + "," + std::to_string(v) + ") is not an edge");
  }
  MatchingCertificate cert;
  cert.edge = {u, v};
  for (Vertex w : g.neighbors(u)) {
    if (w == v) continue;
    if (g.adjacent(v, w)) {
      throw PreconditionError("edge (" + std::to_string(u) + "," + std::to_string(v) + ") lies on triangle with " +
                              std::to_string(w));
    }
    cert.x_side.push_back(w);
  }
  for (Vertex w : g.neighbors(v)) {
    if (w != u) cert.y_side.push_back(w);
  }

  Bipartite h(g, cert.x_side, cert.y_side);
  std::size_t size = h.solve();
  for (std::size_t a = 0; a < cert.x_side.size(); ++a) {
    if (h.mate_left[a] != kFree) cert.matching.emplace_back(cert.x_side[a], cert.y_side[h.mate_left[a]]);
  }
  cert.perfect = size == cert.x_side.size() && size == cert.y_side.size();
  if (cert.perfect) return cert;

  if (size < cert.x_side.size()) {
    auto [s, n] = h.alternating_reach();
    cert.hall_violator = std::move(s);
    cert.violator_neighbors = std::move(n);
  } else {
    Bipartite flipped(g, cert.y_side, cert.x_side);
    flipped.solve();
    auto [s, n] = flipped.alternating_reach();
    cert.hall_violator = std::move(s);
    cert.violator_neighbors = std::move(n);
    cert.violator_on_y_side = true;
  }
  return cert;
}

}  // namespace ricci
