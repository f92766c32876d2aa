#include "ricci/transport.hpp"

#include <algorithm>
#include <limits>
#include <queue>
#include <set>

#include "ricci/errors.hpp"

namespace ricci {

Distribution::Distribution(const VertexFunction& masses) {
  Rational total = 0;
  for (const auto& [v, m] : masses) {
    if (m < 0) throw ArgumentError("negative mass " + to_string(m) + " at vertex " + std::to_string(v));
    total += m;
    if (m != 0) masses_.emplace(v, m);
  }
  if (total != 1) throw ArgumentError("masses sum to " + to_string(total) + ", not 1");
}

Rational Distribution::operator[](Vertex v) const {
  auto it = masses_.find(v);
  return it == masses_.end() ? Rational(0) : it->second;
}

std::vector<Vertex> Distribution::support() const {
  std::vector<Vertex> out;
  for (const auto& [v, m] : masses_) out.push_back(v);
  return out;
}

void Coupling::add(Vertex from, Vertex to, const Rational& mass) {
  if (mass == 0) return;
  entries_[{from, to}] += mass;
}

VertexFunction Coupling::row_sums() const {
  VertexFunction out;
  for (const auto& [uv, m] : entries_) out[uv.first] += m;
  return out;
}

VertexFunction Coupling::column_sums() const {
  VertexFunction out;
  for (const auto& [uv, m] : entries_) out[uv.second] += m;
  return out;
}

Rational Coupling::cost(const Graph& g) const {
  Rational total = 0;
  for (const auto& [uv, m] : entries_) {
    int d = g.distance(uv.first, uv.second);
    if (d == kUnreachable) throw DisconnectedError("plan moves mass between disconnected vertices");
    total += m * d;
  }
  return total;
}

Rational LipschitzWitness::pairing(const Distribution& m1, const Distribution& m2) const {
  Rational total = 0;
  for (const auto& [v, f] : values) total += f * (m1[v] - m2[v]);
  return total;
}

Distribution lazy_walk(const Graph& g, Vertex x, const Rational& alpha) {
  if (alpha < 0 || alpha >= 1) throw ArgumentError("alpha must lie in [0, 1), got " + to_string(alpha));
  if (x >= g.order()) throw ArgumentError("vertex out of range");
  auto nb = g.neighbors(x);
  if (nb.empty()) throw DegreeZeroError("vertex " + std::to_string(x) + " is isolated");
  VertexFunction m;
  m[x] = alpha;
  Rational share = (1 - alpha) / static_cast<unsigned long>(nb.size());
  for (Vertex w : nb) m[w] = share;
  return Distribution(m);
}

namespace {

// Successive shortest paths on the surplus/deficit transportation network.
// Arc costs are graph distances (integers), so Dijkstra potentials stay
// integral; capacities are rational.
class TransportSolver {
 public:
  TransportSolver(std::vector<Vertex> sources, std::vector<Rational> supply, std::vector<Vertex> sinks,
                  std::vector<Rational> demand, const std::vector<std::vector<long>>& dist)
      : sources_(std::move(sources)), sinks_(std::move(sinks)) {
    const std::size_t a = sources_.size(), b = sinks_.size();
    nodes_ = a + b + 2;
    head_.assign(nodes_, {});
    for (std::size_t i = 0; i < a; ++i) add_arc(kSource, source_node(i), supply[i], 0, false);
    for (std::size_t j = 0; j < b; ++j) add_arc(sink_node(j), sink(), demand[j], 0, false);
    for (std::size_t i = 0; i < a; ++i) {
      for (std::size_t j = 0; j < b; ++j) add_arc(source_node(i), sink_node(j), 0, dist[i][j], true);
    }
  }

  void run(const Rational& total) {
    std::vector<long> potential(nodes_, 0);
    Rational sent = 0;
    while (sent < total) {
      auto [dist, parent] = dijkstra(potential);
      if (dist[sink()] == kInf) throw InternalError("transport network disconnected before all mass moved");
      for (std::size_t v = 0; v < nodes_; ++v) potential[v] += std::min(dist[v], dist[sink()]);

      bool bounded = false;
      Rational push;
      for (std::size_t v = sink(); v != kSource; v = arcs_[parent[v]].from) {
        const Arc& e = arcs_[parent[v]];
        if (e.infinite) continue;
        if (!bounded || e.cap < push) push = e.cap;
        bounded = true;
      }
      if (!bounded) throw InternalError("augmenting path without a finite bottleneck");
      for (std::size_t v = sink(); v != kSource; v = arcs_[parent[v]].from) {
        std::size_t id = parent[v];
        if (!arcs_[id].infinite) arcs_[id].cap -= push;
        if (!arcs_[id ^ 1].infinite) arcs_[id ^ 1].cap += push;
      }
      sent += push;
    }
  }

  // Flow on source -> sink arcs equals the capacity of their reverse arcs.
  Rational flow(std::size_t i, std::size_t j) const { return arcs_[middle_arc(i, j) ^ 1].cap; }

  // Dual prices phi (sources) and psi (sinks) with phi_i - psi_j <= d_ij and
  // equality on every arc carrying flow: shortest distances in the final
  // residual network among source and sink nodes, negated.
  std::pair<std::vector<long>, std::vector<long>> dual_prices() const {
    const std::size_t a = sources_.size(), b = sinks_.size();
    std::vector<long> d(nodes_, 0);
    for (std::size_t round = 0; round <= a + b; ++round) {
      bool changed = false;
      for (std::size_t id = 0; id < arcs_.size(); ++id) {
        const Arc& e = arcs_[id];
        if (e.from == kSource || e.to == kSource || e.from == sink() || e.to == sink()) continue;
        if (!e.infinite && e.cap <= 0) continue;
        if (d[e.from] + e.cost < d[e.to]) {
          d[e.to] = d[e.from] + e.cost;
          changed = true;
        }
      }
      if (!changed) break;
      if (round == a + b) throw InternalError("negative residual cycle after transport solve");
    }
    std::vector<long> phi(a), psi(b);
    for (std::size_t i = 0; i < a; ++i) phi[i] = -d[source_node(i)];
    for (std::size_t j = 0; j < b; ++j) psi[j] = -d[sink_node(j)];
    return {phi, psi};
  }

 private:
  struct Arc {
    std::size_t from, to;
    Rational cap;
    long cost;
    bool infinite;
  };

  static constexpr std::size_t kSource = 0;
  static constexpr long kInf = std::numeric_limits<long>::max() / 4;

  std::size_t source_node(std::size_t i) const { return 1 + i; }
  std::size_t sink_node(std::size_t j) const { return 1 + sources_.size() + j; }
  std::size_t sink() const { return nodes_ - 1; }
  std::size_t middle_arc(std::size_t i, std::size_t j) const {
    return 2 * (sources_.size() + sinks_.size() + i * sinks_.size() + j);
  }

  void add_arc(std::size_t from, std::size_t to, const Rational& cap, long cost, bool infinite) {
    head_[from].push_back(arcs_.size());
    arcs_.push_back({from, to, cap, cost, infinite});
    head_[to].push_back(arcs_.size());
    arcs_.push_back({to, from, Rational(0), -cost, false});
  }

  std::pair<std::vector<long>, std::vector<std::size_t>> dijkstra(const std::vector<long>& potential) const {
    std::vector<long> dist(nodes_, kInf);
    std::vector<std::size_t> parent(nodes_, 0);
    using Item = std::pair<long, std::size_t>;
    std::priority_queue<Item, std::vector<Item>, std::greater<>> queue;
    dist[kSource] = 0;
    queue.emplace(0, kSource);
    while (!queue.empty()) {
      auto [du, u] = queue.top();
      queue.pop();
      if (du != dist[u]) continue;
      for (std::size_t id : head_[u]) {
        const Arc& e = arcs_[id];
        if (!e.infinite && e.cap <= 0) continue;
        long reduced = e.cost + potential[u] - potential[e.to];
        if (reduced < 0) throw InternalError("negative reduced cost in transport solver");
        if (du + reduced < dist[e.to]) {
          dist[e.to] = du + reduced;
          parent[e.to] = id;
          queue.emplace(dist[e.to], e.to);
        }
      }
    }
    return {dist, parent};
  }

  std::vector<Vertex> sources_, sinks_;
  std::size_t nodes_ = 0;
  std::vector<Arc> arcs_;
  std::vector<std::vector<std::size_t>> head_;
};

}  // namespace

TransportResult transport_distance(const Graph& g, const Distribution& m1, const Distribution& m2) {
  Rational t1 = 0, t2 = 0;
  for (const auto& [v, m] : m1.masses()) t1 += m;
  for (const auto& [v, m] : m2.masses()) t2 += m;
  if (t1 != t2) throw MarginalMismatch("total masses differ: " + to_string(t1) + " vs " + to_string(t2));

  std::set<Vertex> support;
  for (const auto& [v, m] : m1.masses()) support.insert(v);
  for (const auto& [v, m] : m2.masses()) support.insert(v);
  for (Vertex v : support) {
    if (v >= g.order()) throw ArgumentError("distribution supported outside the graph");
  }

  TransportResult result;
  std::vector<Vertex> sources, sinks;
  std::vector<Rational> supply, demand;
  for (Vertex v : support) {
    Rational a = m1[v], b = m2[v];
    result.plan.add(v, v, a < b ? a : b);
    if (a > b) {
      sources.push_back(v);
      supply.push_back(a - b);
    } else if (b > a) {
      sinks.push_back(v);
      demand.push_back(b - a);
    }
  }

  std::vector<std::vector<long>> dist(sources.size(), std::vector<long>(sinks.size()));
  for (std::size_t i = 0; i < sources.size(); ++i) {
    const auto& row = g.distances_from(sources[i]);
    for (std::size_t j = 0; j < sinks.size(); ++j) {
      if (row[sinks[j]] == kUnreachable) {
        throw DisconnectedError("no path from " + std::to_string(sources[i]) + " to " +
                                std::to_string(sinks[j]));
      }
      dist[i][j] = row[sinks[j]];
    }
  }

  Rational surplus = 0;
  for (const auto& s : supply) surplus += s;

  result.cost = 0;
  for (Vertex v : support) result.dual.values[v] = 0;
  if (surplus == 0) return result;

  TransportSolver solver(sources, supply, sinks, demand, dist);
  solver.run(surplus);
  for (std::size_t i = 0; i < sources.size(); ++i) {
    for (std::size_t j = 0; j < sinks.size(); ++j) {
      Rational f = solver.flow(i, j);
      if (f == 0) continue;
      result.plan.add(sources[i], sinks[j], f);
      result.cost += f * dist[i][j];
    }
  }

  // Envelope f(w) = min_j psi_j + d(w, sink_j): 1-Lipschitz on the whole
  // graph, >= phi on sources by dual feasibility, = psi on sinks with demand.
  auto [phi, psi] = solver.dual_prices();
  for (Vertex w : support) {
    const auto& row = g.distances_from(w);
    long best = std::numeric_limits<long>::max();
    for (std::size_t j = 0; j < sinks.size(); ++j) best = std::min(best, psi[j] + row[sinks[j]]);
    result.dual.values[w] = best;
  }

  if (result.dual.pairing(m1, m2) != result.cost) {
    throw InternalError("transport duality gap: primal " + to_string(result.cost) + ", dual " +
                        to_string(result.dual.pairing(m1, m2)));
  }
  return result;
}

Check verify_coupling(const Graph& g, const Coupling& plan, const Distribution& m1, const Distribution& m2) {
  for (const auto& [uv, m] : plan.entries()) {
    std::string cell = "(" + std::to_string(uv.first) + "," + std::to_string(uv.second) + ")";
    if (m < 0) return {false, "negative entry " + to_string(m) + " at " + cell};
    if (uv.first >= g.order() || uv.second >= g.order()) return {false, "entry outside the graph at " + cell};
  }
  auto rows = plan.row_sums();
  auto cols = plan.column_sums();
  std::set<Vertex> vs;
  for (const auto& [v, m] : rows) vs.insert(v);
  for (const auto& [v, m] : m1.masses()) vs.insert(v);
  for (Vertex v : vs) {
    Rational r = rows.contains(v) ? rows[v] : Rational(0);
    if (r != m1[v]) return {false, "row " + std::to_string(v) + " sums to " + to_string(r) + ", expected " + to_string(m1[v])};
  }
  vs.clear();
  for (const auto& [v, m] : cols) vs.insert(v);
  for (const auto& [v, m] : m2.masses()) vs.insert(v);
  for (Vertex v : vs) {
    Rational c = cols.contains(v) ? cols[v] : Rational(0);
    if (c != m2[v]) return {false, "column " + std::to_string(v) + " sums to " + to_string(c) + ", expected " + to_string(m2[v])};
  }
  return {};
}

Check verify_lipschitz(const Graph& g, const LipschitzWitness& f, const std::vector<Vertex>& support_set) {
  std::vector<Vertex> vs = support_set;
  if (vs.empty()) {
    for (const auto& [v, val] : f.values) vs.push_back(v);
  }
  for (Vertex u : vs) {
    auto fu = f.values.find(u);
    if (fu == f.values.end()) return {false, "no value at vertex " + std::to_string(u)};
    const auto& row = g.distances_from(u);
    for (Vertex v : vs) {
      if (v <= u) continue;
      auto fv = f.values.find(v);
      if (fv == f.values.end()) return {false, "no value at vertex " + std::to_string(v)};
      Rational diff = fu->second - fv->second;
      if (diff < 0) diff = -diff;
      if (row[v] == kUnreachable) continue;
      if (diff > row[v]) {
        return {false, "|f(" + std::to_string(u) + ") - f(" + std::to_string(v) + ")| = " + to_string(diff) +
                           " > d = " + std::to_string(row[v])};
      }
    }
  }
  return {};
}

}  // namespace ricci
