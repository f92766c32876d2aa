#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ricci/graph.hpp"
#include "ricci/rational.hpp"

namespace ricci {

// A violated inequality "lhs <relation> rhs" on concrete vertices.
// `kind` selects the re-check rule; `relation` is the human-readable form.
// The statement fails because lhs exceeds rhs (or differs from it for
// equality statements).
struct CounterWitness {
  std::string kind;
  std::string relation;
  std::vector<Vertex> vertices;
  Rational lhs;
  Rational rhs;
  std::optional<int> layer;
};

struct VerifierVerdict {
  std::string statement;
  bool holds = true;
  std::optional<CounterWitness> witness;
  std::vector<std::pair<std::string, std::string>> context;

  void note(std::string key, std::string value) { context.emplace_back(std::move(key), std::move(value)); }
  const std::string* find(std::string_view key) const;
};

// Either a perfect matching between X = N(u)\{v} and Y = N(v)\{u} or a Hall
// violator S with |N_H(S)| < |S|. The violator is taken on the X side
// unless X is saturated and Y is larger.
struct MatchingCertificate {
  Edge edge;
  std::vector<Vertex> x_side;
  std::vector<Vertex> y_side;
  std::vector<Edge> matching;  // (x, y) pairs; complete when perfect
  bool perfect = false;
  std::vector<Vertex> hall_violator;
  std::vector<Vertex> violator_neighbors;
  bool violator_on_y_side = false;
};

// Map vertex -> subset of {1..d} stored as a bitmask (bit j-1 for element j).
struct HypercubeLabeling {
  Vertex root = 0;
  unsigned dimension = 0;
  std::vector<std::uint64_t> labels;
};

// holds iff diam(g) <= 2 / kappa0.
VerifierVerdict check_diameter_bound(const Graph& g, const Rational& kappa0);

// For every root x and every y at distance i >= 1, checks
//   |G+| + |G0|     <= (1 - i kappa/2) d_y   (needs {C3, C5}-free),
//   |G+| + |G0|/2   <= (1 - i kappa/2) d_y,
//   kappa <= 2/d_y  for i = 1,
// plus diam(g) <= 2/kappa. The context records how many pairs meet the
// first inequality with equality.
VerifierVerdict check_gamma_inequality(const Graph& g, const Rational& kappa, unsigned jobs = 1);

// Only the half-weighted form; valid on any positively curved graph.
VerifierVerdict check_gamma_inequality_weak(const Graph& g, const Rational& kappa);

MatchingCertificate neighborhood_matching(const Graph& g, Vertex u, Vertex v);

VerifierVerdict check_matching_lemma(const Graph& g, unsigned jobs = 1);

VerifierVerdict check_regular_constant(const Graph& g, unsigned jobs = 1);

// 1 + sum_{j=1}^{floor(2/kappa)} Delta^j prod_{i=1}^{j-1} (1 - i kappa/2).
Rational lly_order_bound(unsigned max_degree, const Rational& kappa);

struct MainBoundReport {
  VerifierVerdict verdict;
  Rational kappa;
  Ordering order = Ordering::Inconclusive;  // |V| against 2^(2/kappa)
  Enclosure bound;
  bool equality = false;
  std::optional<HypercubeLabeling> labeling;
};

// |V| <= 2^(2/kappa) with kappa the minimum edge curvature, the layer
// counting chain from a minimum-degree root, and the hypercube
// reconstruction in the equality case.
MainBoundReport check_main_bound(const Graph& g, unsigned max_bits = 1024, unsigned jobs = 1);

// Throws NotHypercubeError naming the first vertex where the layered
// construction breaks.
HypercubeLabeling hypercube_labeling(const Graph& g, Vertex root = 0);

// Equality-case layer facts: |N_i(x)| = C(d, i), |G+| = d - i, |G-| = i and
// no edges inside a layer, for every root. Requires an equality report.
VerifierVerdict check_layer_counts(const Graph& g, const MainBoundReport& established);

// Recomputes a failed verdict's inequality from the graph alone, using
// Floyd-Warshall distances and no solver state. True iff the witness is a
// genuine violation.
bool recheck_witness(const Graph& g, const VerifierVerdict& verdict);

}  // namespace ricci
