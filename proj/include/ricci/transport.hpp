#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ricci/graph.hpp"
#include "ricci/rational.hpp"

namespace ricci {

using VertexFunction = std::map<Vertex, Rational>;

// Probability mass on finitely many vertices. Zero masses are not stored.
class Distribution {
 public:
  Distribution() = default;

  // Throws ArgumentError on a negative mass or a total different from 1.
  explicit Distribution(const VertexFunction& masses);

  const VertexFunction& masses() const { return masses_; }
  Rational operator[](Vertex v) const;
  std::vector<Vertex> support() const;

  friend bool operator==(const Distribution&, const Distribution&) = default;

 private:
  VertexFunction masses_;
};

// Transport plan; entry (u, v) is the mass moved from u to v.
class Coupling {
 public:
  void add(Vertex from, Vertex to, const Rational& mass);

  const std::map<std::pair<Vertex, Vertex>, Rational>& entries() const { return entries_; }
  VertexFunction row_sums() const;
  VertexFunction column_sums() const;
  Rational cost(const Graph& g) const;

  // Direct write for tests and external plans; no validation.
  void set(Vertex from, Vertex to, const Rational& mass) { entries_[{from, to}] = mass; }

 private:
  std::map<std::pair<Vertex, Vertex>, Rational> entries_;
};

// A function on a declared vertex set, claimed 1-Lipschitz for the graph metric.
struct LipschitzWitness {
  VertexFunction values;

  // sum_v f(v) (m1(v) - m2(v)); vertices of m1, m2 outside the set contribute 0.
  Rational pairing(const Distribution& m1, const Distribution& m2) const;
};

struct TransportResult {
  Rational cost;
  Coupling plan;
  LipschitzWitness dual;
};

// Outcome of a certificate check; `violation` names the first failed constraint.
struct Check {
  bool ok = true;
  std::string violation;

  explicit operator bool() const { return ok; }
};

// alpha at x, (1 - alpha)/d_x at each neighbour.
Distribution lazy_walk(const Graph& g, Vertex x, const Rational& alpha);

// Exact W1 distance under the shortest-path metric. The plan and the dual
// witness certify the value: plan cost and dual pairing agree exactly.
// The witness is defined on supp(m1) u supp(m2).
TransportResult transport_distance(const Graph& g, const Distribution& m1, const Distribution& m2);

Check verify_coupling(const Graph& g, const Coupling& plan, const Distribution& m1,
                      const Distribution& m2);

// |f(u) - f(v)| <= d(u, v) on every pair of the support set (all of f's
// domain when the set is empty).
Check verify_lipschitz(const Graph& g, const LipschitzWitness& f,
                       const std::vector<Vertex>& support_set = {});

}  // namespace ricci
