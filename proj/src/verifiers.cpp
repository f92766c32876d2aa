#include "ricci/verifiers.hpp"

#include <algorithm>
#include <bit>
#include <mutex>
#include <string>
#include <tuple>

#include "ricci/curvature.hpp"
#include "ricci/errors.hpp"
#include "ricci/parallel.hpp"

namespace ricci {

const std::string* VerifierVerdict::find(std::string_view key) const {
  for (const auto& [k, v] : context) {
    if (k == key) return &v;
  }
  return nullptr;
}

namespace {

std::string cycle_str(const std::vector<Vertex>& c) {
  std::string out;
  for (Vertex v : c) out += (out.empty() ? "" : "-") + std::to_string(v);
  return out;
}

void require_c3c5_free(const Graph& g) {
  if (auto c = find_c3(g)) throw PreconditionError("graph contains C3 " + cycle_str(*c));
  if (auto c = find_c5(g)) throw PreconditionError("graph contains C5 " + cycle_str(*c));
}

void require_connected(const Graph& g) {
  if (g.order() == 0 || !g.is_connected()) throw PreconditionError("graph is not connected");
}

VerifierVerdict fail(VerifierVerdict v, CounterWitness w) {
  v.holds = false;
  v.witness = std::move(w);
  return v;
}

// First failure wins, ordered by the index the caller assigns (root order).
struct FirstFailure {
  std::mutex mu;
  std::optional<std::pair<std::size_t, CounterWitness>> best;

  void offer(std::size_t index, CounterWitness w) {
    std::lock_guard lock(mu);
    if (!best || index < best->first) best.emplace(index, std::move(w));
  }
};

Rational integer_binomial(unsigned n, unsigned k) { return gen_binomial(Rational(n), k); }

}  // namespace

VerifierVerdict check_diameter_bound(const Graph& g, const Rational& kappa0) {
  if (kappa0 <= 0) throw ArgumentError("kappa0 must be positive, got " + to_string(kappa0));
  if (!g.is_connected()) throw DisconnectedError("diameter of a disconnected graph");
  VerifierVerdict v{"diameter-bound", true, {}, {}};
  Rational bound = 2 / kappa0;
  int diam = diameter(g);
  v.note("diameter", std::to_string(diam));
  v.note("bound", to_string(bound));
  v.note("kappa", to_string(kappa0));
  if (diam <= bound) return v;
  for (Vertex a = 0; a < g.order(); ++a) {
    const auto& row = g.distances_from(a);
    for (Vertex b = a + 1; b < g.order(); ++b) {
      if (row[b] == diam) {
        return fail(std::move(v), {"diameter", "d(u,v) <= 2/kappa", {a, b}, diam, bound, std::nullopt});
      }
    }
  }
  throw InternalError("diameter pair not found");
}

namespace {

struct GammaCounts {
  std::size_t plus, zero, minus;
};

GammaCounts count_gamma(const Graph& g, Vertex x, Vertex y) {
  auto p = layer_partition(g, x, y);
  return {p.gamma_plus.size(), p.gamma_zero.size(), p.gamma_minus.size()};
}

}  // namespace

VerifierVerdict check_gamma_inequality(const Graph& g, const Rational& kappa, unsigned jobs) {
  require_connected(g);
  if (kappa <= 0) throw PreconditionError("kappa must be positive, got " + to_string(kappa));
  require_c3c5_free(g);

  VerifierVerdict v{"gamma-inequality", true, {}, {}};
  v.note("kappa", to_string(kappa));
  const int diam = diameter(g);
  v.note("diameter", std::to_string(diam));
  v.note("diameter_within_2_over_kappa", diam <= 2 / kappa ? "true" : "false");

  const std::size_t n = g.order();
  FirstFailure failure;
  std::vector<std::size_t> tight(n, 0), pairs(n, 0);
  parallel_for(n, jobs, [&](std::size_t xi) {
    auto x = static_cast<Vertex>(xi);
    const auto& dx = g.distances_from(x);
    for (Vertex y = 0; y < n; ++y) {
      if (y == x) continue;
      const int i = dx[y];
      const auto dy = static_cast<long>(g.degree(y));
      auto c = count_gamma(g, x, y);
      Rational rhs = (1 - Rational(i) * kappa / 2) * dy;
      Rational strong = static_cast<long>(c.plus + c.zero);
      Rational weak = static_cast<long>(c.plus) + make_rational(static_cast<long>(c.zero), 2);
      std::size_t key = xi * n + y;
      ++pairs[xi];
      if (i == 1 && kappa > make_rational(2, dy)) {
        failure.offer(key, {"gamma-base", "kappa <= 2/d_y", {x, y}, kappa, make_rational(2, dy), i});
      }
      if (strong > rhs) {
        failure.offer(key, {"gamma", "|G+| + |G0| <= (1 - i kappa/2) d_y", {x, y}, strong, rhs, i});
      } else if (weak > rhs) {
        failure.offer(key, {"gamma-weak", "|G+| + |G0|/2 <= (1 - i kappa/2) d_y", {x, y}, weak, rhs, i});
      }
      if (strong == rhs) ++tight[xi];
    }
  });
  std::size_t total_tight = 0, total_pairs = 0;
  for (std::size_t i = 0; i < n; ++i) {
    total_tight += tight[i];
    total_pairs += pairs[i];
  }
  v.note("pairs", std::to_string(total_pairs));
  v.note("tight_pairs", std::to_string(total_tight));
  if (failure.best) return fail(std::move(v), std::move(failure.best->second));
  return v;
}

VerifierVerdict check_gamma_inequality_weak(const Graph& g, const Rational& kappa) {
  require_connected(g);
  if (kappa <= 0) throw PreconditionError("kappa must be positive, got " + to_string(kappa));
  VerifierVerdict v{"gamma-inequality-weak", true, {}, {}};
  v.note("kappa", to_string(kappa));
  std::size_t tight = 0;
  for (Vertex x = 0; x < g.order(); ++x) {
    const auto& dx = g.distances_from(x);
    for (Vertex y = 0; y < g.order(); ++y) {
      if (y == x) continue;
      const int i = dx[y];
      auto c = count_gamma(g, x, y);
      Rational rhs = (1 - Rational(i) * kappa / 2) * static_cast<long>(g.degree(y));
      Rational weak = static_cast<long>(c.plus) + make_rational(static_cast<long>(c.zero), 2);
      if (weak > rhs) {
        return fail(std::move(v), {"gamma-weak", "|G+| + |G0|/2 <= (1 - i kappa/2) d_y", {x, y}, weak, rhs, i});
      }
      if (weak == rhs) ++tight;
    }
  }
  v.note("tight_pairs", std::to_string(tight));
  return v;
}

VerifierVerdict check_matching_lemma(const Graph& g, unsigned jobs) {
  require_connected(g);
  if (!g.is_regular()) throw PreconditionError("graph is not regular");
  require_c3c5_free(g);

  VerifierVerdict v{"matching-lemma", true, {}, {}};
  auto edges = g.edges();
  auto reports = curvature_all_edges(g, jobs);
  std::size_t positive = 0, perfect = 0, violators = 0;
  for (std::size_t e = 0; e < edges.size(); ++e) {
    auto cert = neighborhood_matching(g, edges[e].first, edges[e].second);
    if (cert.perfect) {
      ++perfect;
    } else {
      ++violators;
    }
    if (reports[e].kappa_lly <= 0) continue;
    ++positive;
    if (!cert.perfect && v.holds) {
      std::vector<Vertex> vs{edges[e].first, edges[e].second};
      vs.insert(vs.end(), cert.hall_violator.begin(), cert.hall_violator.end());
      v = fail(std::move(v), {"hall", "positively curved edge has a perfect neighbourhood matching", vs,
                              static_cast<long>(cert.violator_neighbors.size()),
                              static_cast<long>(cert.hall_violator.size()), std::nullopt});
      v.note("violator_on_y_side", cert.violator_on_y_side ? "true" : "false");
      v.note("edge_kappa", to_string(reports[e].kappa_lly));
    }
  }
  v.note("edges", std::to_string(edges.size()));
  v.note("positive_edges", std::to_string(positive));
  v.note("perfect_matchings", std::to_string(perfect));
  v.note("hall_violators", std::to_string(violators));
  return v;
}

VerifierVerdict check_regular_constant(const Graph& g, unsigned jobs) {
  require_connected(g);
  if (!g.is_regular()) throw PreconditionError("graph is not regular");
  require_c3c5_free(g);
  auto reports = curvature_all_edges(g, jobs);
  for (const auto& r : reports) {
    if (r.kappa_lly <= 0) {
      throw PreconditionError("edge (" + std::to_string(r.x) + "," + std::to_string(r.y) +
                              ") has non-positive curvature " + to_string(r.kappa_lly));
    }
  }
  const auto d = static_cast<unsigned long>(g.max_degree());
  const Rational expected = make_rational(2, static_cast<long>(d));
  VerifierVerdict v{"regular-constant", true, {}, {}};
  v.note("degree", std::to_string(d));
  v.note("expected", to_string(expected));
  for (const auto& r : reports) {
    if (r.kappa_lly != expected) {
      return fail(std::move(v), {"regular-constant", "kappa(x,y) = 2/d", {r.x, r.y}, r.kappa_lly, expected, std::nullopt});
    }
  }
  return v;
}

Rational lly_order_bound(unsigned max_degree, const Rational& kappa) {
  if (kappa <= 0) throw ArgumentError("kappa must be positive, got " + to_string(kappa));
  if (max_degree < 1) throw ArgumentError("maximum degree must be at least 1");
  const Integer top = floor(2 / kappa);
  if (!top.fits_ulong_p()) throw ScaleError("2/kappa too large");
  Rational total = 1;
  Rational product = 1;  // prod_{i=1}^{j-1} (1 - i kappa/2)
  Rational power = 1;    // Delta^j
  for (unsigned long j = 1; j <= top.get_ui(); ++j) {
    if (j > 1) product *= 1 - Rational(static_cast<long>(j - 1)) * kappa / 2;
    power *= max_degree;
    total += power * product;
  }
  return total;
}

HypercubeLabeling hypercube_labeling(const Graph& g, Vertex root) {
  const std::size_t n = g.order();
  if (n < 2 || !std::has_single_bit(n)) {
    throw NotHypercubeError("order " + std::to_string(n) + " is not a power of two");
  }
  const auto d = static_cast<unsigned>(std::countr_zero(n));
  if (d > 63) throw ScaleError("dimension too large for a 64-bit label");
  if (!g.is_connected()) throw NotHypercubeError("graph is not connected");
  for (Vertex v = 0; v < n; ++v) {
    if (g.degree(v) != d) {
      throw NotHypercubeError("vertex " + std::to_string(v) + " has degree " + std::to_string(g.degree(v)) +
                              ", expected " + std::to_string(d));
    }
  }
  if (!is_bipartite(g)) throw NotHypercubeError("graph is not bipartite");
  if (root >= n) throw ArgumentError("root out of range");

  HypercubeLabeling out{root, d, std::vector<std::uint64_t>(n, 0)};
  auto profile = layer_edge_profile(g, root);
  const auto& dist = g.distances_from(root);
  std::vector<char> used(n, 0);
  used[0] = 1;

  auto nb = g.neighbors(root);
  for (std::size_t j = 0; j < nb.size(); ++j) {
    out.labels[nb[j]] = std::uint64_t{1} << j;
    used[out.labels[nb[j]]] = 1;
  }
  for (std::size_t i = 2; i < profile.layers.size(); ++i) {
    for (Vertex v : profile.layers[i]) {
      std::uint64_t label = 0;
      std::size_t down = 0;
      for (Vertex w : g.neighbors(v)) {
        if (dist[w] == static_cast<int>(i) - 1) {
          label |= out.labels[w];
          ++down;
        }
      }
      const std::string where = "vertex " + std::to_string(v) + " in layer " + std::to_string(i);
      if (down != i) {
        throw NotHypercubeError(where + " has " + std::to_string(down) + " lower neighbours");
      }
      if (static_cast<std::size_t>(std::popcount(label)) != i) {
        throw NotHypercubeError(where + " gets a label of size " + std::to_string(std::popcount(label)));
      }
      if (used[label]) throw NotHypercubeError(where + " collides with an earlier label");
      used[label] = 1;
      out.labels[v] = label;
    }
  }
  for (auto [a, b] : g.edges()) {
    if (std::popcount(out.labels[a] ^ out.labels[b]) != 1) {
      throw NotHypercubeError("edge (" + std::to_string(a) + "," + std::to_string(b) +
                              ") does not join labels differing in one element");
    }
  }
  // n distinct labels among 2^d subsets and d * 2^(d-1) edges, each a
  // hypercube edge: the map is an isomorphism onto Q_d.
  return out;
}

MainBoundReport check_main_bound(const Graph& g, unsigned max_bits, unsigned jobs) {
  require_connected(g);
  if (g.size() == 0) throw PreconditionError("graph has no edges");
  require_c3c5_free(g);
  auto minimum = min_edge_curvature(g, jobs);
  if (minimum.kappa <= 0) {
    throw PreconditionError("minimum edge curvature " + to_string(minimum.kappa) + " is not positive");
  }

  MainBoundReport report;
  report.kappa = minimum.kappa;
  VerifierVerdict& v = report.verdict;
  v.statement = "main-bound";
  const Rational s = 2 / report.kappa;
  const Rational order = static_cast<unsigned long>(g.order());
  v.note("kappa", to_string(report.kappa));
  v.note("exponent", to_string(s));
  v.note("order", to_string(order));

  auto cmp = compare_with_pow2(order, s, 0, max_bits);
  report.order = cmp.order;
  report.bound = cmp.rhs;
  v.note("comparison", std::string(to_string(cmp.order)));
  v.note("bound_lower", to_string(cmp.rhs.lower));
  v.note("bound_upper", to_string(cmp.rhs.upper));
  if (cmp.order == Ordering::Inconclusive) {
    throw InternalError("2^(2/kappa) enclosure inconclusive at " + std::to_string(max_bits) + " bits");
  }
  if (cmp.order == Ordering::Greater) {
    v.holds = false;
    v.witness = CounterWitness{"order", "|V| <= 2^(2/kappa)", {minimum.edge.first, minimum.edge.second},
                               order, cmp.rhs.upper, std::nullopt};
    return report;
  }

  // Counting chain from a minimum-degree root.
  Vertex root = 0;
  for (Vertex u = 1; u < g.order(); ++u) {
    if (g.degree(u) < g.degree(root)) root = u;
  }
  const auto delta = static_cast<long>(g.degree(root));
  auto profile = layer_edge_profile(g, root);
  const unsigned top = static_cast<unsigned>(floor(s).get_ui());
  Rational edge_budget = 0;
  for (unsigned i = 0; i <= top; ++i) {
    Rational lhs = static_cast<unsigned long>(profile.cross(i) + 2 * profile.flat(i));
    Rational rhs = gen_binomial(s - 1, i) * delta;
    edge_budget += rhs;
    if (lhs > rhs) {
      v.holds = false;
      v.witness = CounterWitness{"chain", "|E_{i,i+1}| + 2|E_{i,i}| <= C(2/kappa - 1, i) delta", {root}, lhs, rhs,
                                 static_cast<int>(i)};
      return report;
    }
  }
  v.note("chain_root", std::to_string(root));
  v.note("edge_budget", to_string(edge_budget));
  if (Rational(static_cast<unsigned long>(g.size())) > edge_budget) {
    v.holds = false;
    v.witness = CounterWitness{"edge-total", "|E| <= sum_i C(2/kappa - 1, i) delta", {root},
                               static_cast<unsigned long>(g.size()), edge_budget, std::nullopt};
    return report;
  }

  report.equality = cmp.order == Ordering::Equal;
  v.note("equality", report.equality ? "true" : "false");
  if (!report.equality) return report;

  // Equality: the graph must be Q_d with kappa = 2/d.
  bool flat_free = true;
  for (std::size_t i = 1; i < profile.e_flat.size(); ++i) flat_free = flat_free && profile.e_flat[i] == 0;
  const bool bipartite = is_bipartite(g);
  v.note("bipartite", bipartite ? "true" : "false");
  v.note("layers_flat_free", flat_free ? "true" : "false");
  if (bipartite != flat_free) throw InternalError("2-colouring disagrees with the layer profile");
  try {
    report.labeling = hypercube_labeling(g);
  } catch (const NotHypercubeError& e) {
    v.holds = false;
    v.note("labeling_error", e.what());
    v.witness = CounterWitness{"equality-structure", "equality forces a hypercube", {}, order, order, std::nullopt};
    return report;
  }
  const Rational expected = make_rational(2, report.labeling->dimension);
  v.note("dimension", std::to_string(report.labeling->dimension));
  if (report.kappa != expected) {
    v.holds = false;
    v.witness = CounterWitness{"equality-kappa", "kappa = 2/d", {minimum.edge.first, minimum.edge.second},
                               report.kappa, expected, std::nullopt};
  }
  return report;
}

VerifierVerdict check_layer_counts(const Graph& g, const MainBoundReport& established) {
  if (!established.equality || !established.labeling) {
    throw PreconditionError("layer counts need a graph meeting the order bound with equality");
  }
  const unsigned d = established.labeling->dimension;
  VerifierVerdict v{"layer-counts", true, {}, {}};
  v.note("dimension", std::to_string(d));
  for (Vertex x = 0; x < g.order(); ++x) {
    auto profile = layer_edge_profile(g, x);
    if (profile.layers.size() != d + 1) {
      return fail(std::move(v), {"layer-depth", "eccentricity = d", {x},
                                 static_cast<unsigned long>(profile.layers.size() - 1), d, std::nullopt});
    }
    for (unsigned i = 0; i <= d; ++i) {
      Rational size = static_cast<unsigned long>(profile.layers[i].size());
      Rational expected = integer_binomial(d, i);
      if (size != expected) {
        return fail(std::move(v), {"layer-size", "|N_i(x)| = C(d,i)", {x}, size, expected, static_cast<int>(i)});
      }
      if (profile.flat(i) != 0) {
        return fail(std::move(v), {"layer-flat", "|E_{i,i}| = 0", {x},
                                   static_cast<unsigned long>(profile.flat(i)), 0, static_cast<int>(i)});
      }
      if (i == 0) continue;
      for (Vertex y : profile.layers[i]) {
        auto c = count_gamma(g, x, y);
        if (c.plus != d - i) {
          return fail(std::move(v), {"gamma-plus", "|G+| = d - i", {x, y}, static_cast<unsigned long>(c.plus),
                                     d - i, static_cast<int>(i)});
        }
        if (c.minus != i) {
          return fail(std::move(v), {"gamma-minus", "|G-| = i", {x, y}, static_cast<unsigned long>(c.minus), i,
                                     static_cast<int>(i)});
        }
      }
    }
  }
  return v;
}

// ---------------------------------------------------------------------------
// Independent re-check

namespace {

std::vector<std::vector<long>> floyd_warshall(const Graph& g) {
  const std::size_t n = g.order();
  constexpr long kInf = 1L << 40;
  std::vector<std::vector<long>> d(n, std::vector<long>(n, kInf));
  for (std::size_t i = 0; i < n; ++i) d[i][i] = 0;
  for (auto [a, b] : g.edges()) d[a][b] = d[b][a] = 1;
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
    }
  }
  return d;
}

std::optional<Rational> context_rational(const VerifierVerdict& v, std::string_view key) {
  const std::string* s = v.find(key);
  if (!s) return std::nullopt;
  return parse_rational(*s);
}

}  // namespace

bool recheck_witness(const Graph& g, const VerifierVerdict& verdict) {
  if (verdict.holds || !verdict.witness) return false;
  const CounterWitness& w = verdict.witness.value();
  const auto dist = floyd_warshall(g);
  const auto kappa = context_rational(verdict, "kappa");

  auto gamma_sizes = [&](Vertex x, Vertex y) {
    long plus = 0, zero = 0, minus = 0;
    for (Vertex u = 0; u < g.order(); ++u) {
      if (dist[y][u] != 1) continue;
      long diff = dist[x][u] - dist[x][y];
      (diff > 0 ? plus : diff == 0 ? zero : minus) += 1;
    }
    return std::tuple{plus, zero, minus};
  };

  if (w.kind == "diameter") {
    return kappa && w.vertices.size() == 2 && Rational(dist[w.vertices[0]][w.vertices[1]]) > 2 / *kappa;
  }
  if (w.kind == "gamma" || w.kind == "gamma-weak" || w.kind == "gamma-base") {
    if (!kappa || w.vertices.size() != 2) return false;
    Vertex x = w.vertices[0], y = w.vertices[1];
    long i = dist[x][y];
    long dy = 0;
    for (Vertex u = 0; u < g.order(); ++u) dy += dist[y][u] == 1;
    auto [plus, zero, minus] = gamma_sizes(x, y);
    Rational rhs = (1 - Rational(i) * *kappa / 2) * dy;
    if (w.kind == "gamma") return Rational(plus + zero) > rhs;
    if (w.kind == "gamma-weak") return Rational(plus) + make_rational(zero, 2) > rhs;
    return i == 1 && *kappa > make_rational(2, dy);
  }
  if (w.kind == "hall") {
    if (w.vertices.size() < 3) return false;
    Vertex u = w.vertices[0], v = w.vertices[1];
    std::vector<Vertex> s(w.vertices.begin() + 2, w.vertices.end());
    std::vector<char> in_n(g.order(), 0);
    const std::string* flip = verdict.find("violator_on_y_side");
    Vertex near = (flip && *flip == "true") ? v : u;
    Vertex far = near == u ? v : u;
    for (Vertex a : s) {
      if (dist[near][a] != 1 || a == far) return false;
    }
    std::size_t reach = 0;
    for (Vertex b = 0; b < g.order(); ++b) {
      if (b == near || dist[far][b] != 1) continue;
      bool hit = std::any_of(s.begin(), s.end(), [&](Vertex a) { return dist[a][b] == 1; });
      if (hit) ++reach;
    }
    if (reach >= s.size()) return false;
    return kappa_lly_enumerate(g, u, v).kappa_lly > 0;
  }
  if (w.kind == "regular-constant") {
    if (w.vertices.size() != 2) return false;
    return kappa_lly_enumerate(g, w.vertices[0], w.vertices[1]).kappa_lly != w.rhs;
  }
  if (w.kind == "order") {
    const auto s = context_rational(verdict, "exponent");
    if (!s) return false;
    // |V| > 2^(p/q)  <=>  |V|^q > 2^p
    Integer lhs = pow(Integer(static_cast<unsigned long>(g.order())), s->get_den().get_ui());
    Integer rhs = pow(Integer(2), s->get_num().get_ui());
    return lhs > rhs;
  }
  if (w.kind == "chain" || w.kind == "edge-total") {
    const auto s = context_rational(verdict, "exponent");
    if (!s || w.vertices.empty()) return false;
    Vertex x = w.vertices[0];
    long delta = 0;
    for (Vertex u = 0; u < g.order(); ++u) delta += dist[x][u] == 1;
    if (w.kind == "edge-total") {
      Rational budget = 0;
      for (unsigned i = 0; i <= floor(*s).get_ui(); ++i) budget += gen_binomial(*s - 1, i) * delta;
      return Rational(static_cast<unsigned long>(g.size())) > budget;
    }
    const long i = w.layer.value_or(0);
    long count = 0;
    for (auto [a, b] : g.edges()) {
      long la = dist[x][a], lb = dist[x][b];
      if (std::min(la, lb) != i) continue;
      count += la == lb ? 2 : 1;
    }
    return Rational(count) > gen_binomial(*s - 1, static_cast<unsigned>(i)) * delta;
  }
  if (w.kind == "layer-size" || w.kind == "layer-flat" || w.kind == "gamma-plus" || w.kind == "gamma-minus" ||
      w.kind == "layer-depth") {
    if (w.vertices.empty()) return false;
    Vertex x = w.vertices[0];
    const std::string* dim = verdict.find("dimension");
    if (!dim) return false;
    const long d = std::stol(*dim);
    const long i = w.layer.value_or(0);
    if (w.kind == "layer-depth") {
      long ecc = 0;
      for (Vertex u = 0; u < g.order(); ++u) ecc = std::max(ecc, dist[x][u]);
      return ecc != d;
    }
    if (w.kind == "layer-size") {
      long size = 0;
      for (Vertex u = 0; u < g.order(); ++u) size += dist[x][u] == i;
      return Rational(size) != integer_binomial(static_cast<unsigned>(d), static_cast<unsigned>(i));
    }
    if (w.kind == "layer-flat") {
      for (auto [a, b] : g.edges()) {
        if (dist[x][a] == i && dist[x][b] == i) return true;
      }
      return false;
    }
    if (w.vertices.size() != 2) return false;
    auto [plus, zero, minus] = gamma_sizes(x, w.vertices[1]);
    return w.kind == "gamma-plus" ? plus != d - i : minus != i;
  }
  if (w.kind == "equality-structure") {
    return !is_bipartite(g) || g.max_degree() != g.min_degree() || !std::has_single_bit(g.order()) ||
           g.size() != g.order() * static_cast<std::size_t>(std::countr_zero(g.order())) / 2;
  }
  if (w.kind == "equality-kappa") {
    if (w.vertices.size() != 2) return false;
    return kappa_lly_enumerate(g, w.vertices[0], w.vertices[1]).kappa_lly != w.rhs;
  }
  return false;
}

}  // namespace ricci
