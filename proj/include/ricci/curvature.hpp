#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ricci/graph.hpp"
#include "ricci/rational.hpp"
#include "ricci/transport.hpp"

namespace ricci {

enum class CurvatureMethod {
  LaplacianLp,        // exact simplex on the Lipschitz-constrained Laplacian program
  IntegralEnumeration // exhaustive search over integer-valued Lipschitz functions
};

std::string_view to_string(CurvatureMethod m);

struct AlphaSample {
  Rational alpha;
  Rational kappa;
};

struct CurvatureReport {
  Vertex x = 0;
  Vertex y = 0;
  int distance = 0;
  Rational kappa_lly;
  std::optional<AlphaSample> kappa_alpha;
  // Minimiser of the Laplacian program on N[x] u N[y], normalised to f(x) = 0.
  LipschitzWitness witness;
  CurvatureMethod method = CurvatureMethod::LaplacianLp;
};

struct IdlenessProfile {
  Vertex x = 0;
  Vertex y = 0;
  std::vector<AlphaSample> samples;
};

// (1/d_x) sum_{y ~ x} (f(y) - f(x)). Throws ArgumentError when f misses x or
// a neighbour of x, DegreeZeroError when x is isolated.
Rational laplacian(const Graph& g, const VertexFunction& f, Vertex x);

// 1 - W(m_x^alpha, m_y^alpha) / d(x, y).
Rational kappa_alpha(const Graph& g, Vertex x, Vertex y, const Rational& alpha);

// Lin-Lu-Yau curvature as the minimum of (Lap f(x) - Lap f(y)) / d(x, y) over
// 1-Lipschitz f with f(y) - f(x) = d(x, y). Works for non-adjacent pairs too.
CurvatureReport kappa_lly(const Graph& g, Vertex x, Vertex y);

// Same quantity by enumerating integer-valued candidates on N[x] u N[y]. It
// shares no code with the simplex route and serves as its oracle. Throws
// ScaleError when the search space exceeds max_candidates.
CurvatureReport kappa_lly_enumerate(const Graph& g, Vertex x, Vertex y,
                                    std::size_t max_candidates = 50'000'000);

IdlenessProfile idleness_profile(const Graph& g, Vertex x, Vertex y, const std::vector<Rational>& alphas);

// kappa_lly on every edge in edge order, fanned out over `jobs` threads.
std::vector<CurvatureReport> curvature_all_edges(const Graph& g, unsigned jobs = 1);

struct MinCurvature {
  Rational kappa;
  Edge edge;
};

// Throws ArgumentError when g has no edge, DisconnectedError when disconnected.
MinCurvature min_edge_curvature(const Graph& g, unsigned jobs = 1);

}  // namespace ricci
