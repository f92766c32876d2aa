#include "ricci/curvature.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>

#include "ricci/errors.hpp"
#include "ricci/lp.hpp"
#include "ricci/parallel.hpp"

namespace ricci {

std::string_view to_string(CurvatureMethod m) {
  switch (m) {
    case CurvatureMethod::LaplacianLp:
      return "laplacian-lp";
    case CurvatureMethod::IntegralEnumeration:
      return "integral-enumeration";
  }
  return "?";
}

Rational laplacian(const Graph& g, const VertexFunction& f, Vertex x) {
  auto nb = g.neighbors(x);
  if (nb.empty()) throw DegreeZeroError("Laplacian at isolated vertex " + std::to_string(x));
  auto at = [&](Vertex v) -> const Rational& {
    auto it = f.find(v);
    if (it == f.end()) throw ArgumentError("function has no value at vertex " + std::to_string(v));
    return it->second;
  };
  const Rational& fx = at(x);
  Rational sum = 0;
  for (Vertex w : nb) sum += at(w) - fx;
  return sum / static_cast<unsigned long>(nb.size());
}

Rational kappa_alpha(const Graph& g, Vertex x, Vertex y, const Rational& alpha) {
  if (x == y) throw ArgumentError("curvature needs two distinct vertices");
  int d = g.distance(x, y);
  if (d == kUnreachable) throw DisconnectedError("vertices lie in different components");
  auto w = transport_distance(g, lazy_walk(g, x, alpha), lazy_walk(g, y, alpha));
  return 1 - w.cost / d;
}

namespace {

struct PairSetup {
  int dist;
  std::vector<Vertex> support;  // N[x] u N[y], sorted
};

PairSetup setup_pair(const Graph& g, Vertex x, Vertex y) {
  if (x == y) throw ArgumentError("curvature needs two distinct vertices");
  if (x >= g.order() || y >= g.order()) throw ArgumentError("vertex out of range");
  int d = g.distance(x, y);
  if (d == kUnreachable) throw DisconnectedError("vertices lie in different components");
  if (g.degree(x) == 0 || g.degree(y) == 0) throw DegreeZeroError("isolated vertex");
  std::set<Vertex> s{x, y};
  for (Vertex w : g.neighbors(x)) s.insert(w);
  for (Vertex w : g.neighbors(y)) s.insert(w);
  return {d, {s.begin(), s.end()}};
}

Rational laplacian_gradient(const Graph& g, const VertexFunction& f, Vertex x, Vertex y, int d) {
  return (laplacian(g, f, x) - laplacian(g, f, y)) / d;
}

}  // namespace

// Substituting z_v = d(x, v) - f(v) turns every Lipschitz constraint
// f(u) - f(v) <= d(u, v) into z_v - z_u <= d(u, v) - d(x, u) + d(x, v), whose
// right-hand side is non-negative by the triangle inequality. So z = 0 (the
// function d(x, .)) is a feasible starting vertex and no phase one is needed.
CurvatureReport kappa_lly(const Graph& g, Vertex x, Vertex y) {
  auto [d, support] = setup_pair(g, x, y);
  const auto& dx = g.distances_from(x);
  const auto& dy = g.distances_from(y);

  std::vector<Vertex> free;
  for (Vertex v : support) {
    if (v != x && v != y) free.push_back(v);
  }
  const std::size_t k = free.size();

  const auto deg_x = static_cast<unsigned long>(g.degree(x));
  const auto deg_y = static_cast<unsigned long>(g.degree(y));
  auto weight = [&](Vertex w) {
    Rational a = 0;
    if (g.adjacent(x, w)) a += Rational(1, deg_x);
    if (g.adjacent(y, w)) a -= Rational(1, deg_y);
    return a;
  };

  lp::Problem problem;
  problem.vars = k;
  problem.objective.resize(k);
  // d * objective = constant - sum_w weight(w) z_w.
  Rational constant = d + weight(y) * d;
  std::vector<int> upper(k);
  for (std::size_t i = 0; i < k; ++i) {
    Vertex w = free[i];
    Rational a = weight(w);
    constant += a * dx[w];
    problem.objective[i] = a;
    // f(w) >= -d(x, w) and f(w) >= d - d(y, w).
    upper[i] = std::min(2 * dx[w], dx[w] - d + dy[w]);
    std::vector<Rational> row(k, Rational(0));
    row[i] = 1;
    problem.add_row(std::move(row), upper[i]);
  }
  for (std::size_t i = 0; i < k; ++i) {
    const auto& du = g.distances_from(free[i]);
    for (std::size_t j = 0; j < k; ++j) {
      if (i == j) continue;
      // z_j - z_i <= bound
      int bound = du[free[j]] - dx[free[i]] + dx[free[j]];
      if (upper[j] <= bound) continue;  // implied by the box
      std::vector<Rational> row(k, Rational(0));
      row[j] = 1;
      row[i] = -1;
      problem.add_row(std::move(row), bound);
    }
  }

  auto solution = lp::maximize(problem);
  if (solution.status != lp::Status::Optimal) {
    throw InternalError("Laplacian program unbounded despite Lipschitz box constraints");
  }

  CurvatureReport report;
  report.x = x;
  report.y = y;
  report.distance = d;
  report.method = CurvatureMethod::LaplacianLp;
  report.kappa_lly = (constant - solution.value) / d;
  report.witness.values[x] = 0;
  report.witness.values[y] = d;
  for (std::size_t i = 0; i < k; ++i) {
    Rational fv = dx[free[i]] - solution.z[i];
    if (!is_integer(fv)) throw InternalError("non-integral vertex of a difference-constraint program");
    report.witness.values[free[i]] = fv;
  }
  if (laplacian_gradient(g, report.witness.values, x, y, d) != report.kappa_lly) {
    throw InternalError("witness does not reproduce the optimal value");
  }
  return report;
}

CurvatureReport kappa_lly_enumerate(const Graph& g, Vertex x, Vertex y, std::size_t max_candidates) {
  auto [d, support] = setup_pair(g, x, y);
  std::vector<Vertex> free;
  for (Vertex v : support) {
    if (v != x && v != y) free.push_back(v);
  }
  std::vector<std::vector<int>> dist;  // rows over support order
  for (Vertex u : support) {
    const auto& row = g.distances_from(u);
    std::vector<int> r;
    for (Vertex v : support) r.push_back(row[v]);
    dist.push_back(std::move(r));
  }
  auto index_of = [&](Vertex v) {
    return static_cast<std::size_t>(std::lower_bound(support.begin(), support.end(), v) - support.begin());
  };
  const std::size_t ix = index_of(x), iy = index_of(y);

  std::vector<int> value(support.size(), 0);
  std::vector<char> assigned(support.size(), 0);
  value[ix] = 0;
  value[iy] = d;
  assigned[ix] = assigned[iy] = 1;

  std::vector<std::size_t> order;
  for (Vertex v : free) order.push_back(index_of(v));

  std::size_t visited = 0;
  bool found = false;
  Rational best;
  std::vector<int> best_value;

  auto objective = [&] {
    VertexFunction f;
    for (std::size_t i = 0; i < support.size(); ++i) f[support[i]] = value[i];
    return laplacian_gradient(g, f, x, y, d);
  };

  auto search = [&](auto&& self, std::size_t pos) -> void {
    if (pos == order.size()) {
      Rational v = objective();
      if (!found || v < best) {
        best = v;
        best_value = value;
        found = true;
      }
      return;
    }
    std::size_t s = order[pos];
    int lo = std::max(-dist[ix][s], d - dist[iy][s]);
    int hi = std::min(dist[ix][s], d + dist[iy][s]);
    for (int c = lo; c <= hi; ++c) {
      if (++visited > max_candidates) throw ScaleError("integral enumeration exceeded its candidate budget");
      bool ok = true;
      for (std::size_t t = 0; t < support.size() && ok; ++t) {
        if (assigned[t] && std::abs(value[t] - c) > dist[s][t]) ok = false;
      }
      if (!ok) continue;
      value[s] = c;
      assigned[s] = 1;
      self(self, pos + 1);
      assigned[s] = 0;
    }
  };
  search(search, 0);
  if (!found) throw InternalError("no Lipschitz candidate found");

  CurvatureReport report;
  report.x = x;
  report.y = y;
  report.distance = d;
  report.method = CurvatureMethod::IntegralEnumeration;
  report.kappa_lly = best;
  for (std::size_t i = 0; i < support.size(); ++i) report.witness.values[support[i]] = best_value[i];
  return report;
}

IdlenessProfile idleness_profile(const Graph& g, Vertex x, Vertex y, const std::vector<Rational>& alphas) {
  IdlenessProfile profile{x, y, {}};
  for (const auto& a : alphas) profile.samples.push_back({a, kappa_alpha(g, x, y, a)});
  return profile;
}

std::vector<CurvatureReport> curvature_all_edges(const Graph& g, unsigned jobs) {
  if (!g.is_connected()) throw DisconnectedError("curvature of a disconnected graph");
  auto edges = g.edges();
  std::vector<CurvatureReport> reports(edges.size());
  parallel_for(edges.size(), jobs, [&](std::size_t i) { reports[i] = kappa_lly(g, edges[i].first, edges[i].second); });
  return reports;
}

MinCurvature min_edge_curvature(const Graph& g, unsigned jobs) {
  if (g.size() == 0) throw ArgumentError("graph has no edges");
  auto reports = curvature_all_edges(g, jobs);
  std::size_t best = 0;
  for (std::size_t i = 1; i < reports.size(); ++i) {
    if (reports[i].kappa_lly < reports[best].kappa_lly) best = i;
  }
  return {reports[best].kappa_lly, {reports[best].x, reports[best].y}};
}

}  // namespace ricci
