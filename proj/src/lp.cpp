#include "ricci/lp.hpp"

#include <limits>
#include <string>

#include "ricci/errors.hpp"

namespace ricci::lp {

void Problem::add_row(std::vector<Rational> coeffs, Rational bound) {
  if (coeffs.size() != vars) throw ArgumentError("row width does not match variable count");
  rows.push_back(std::move(coeffs));
  rhs.push_back(std::move(bound));
}

Solution maximize(const Problem& problem) {
  const std::size_t n = problem.vars;
  const std::size_t m = problem.rows.size();
  if (problem.objective.size() != n || problem.rhs.size() != m) {
    throw ArgumentError("inconsistent linear program dimensions");
  }
  for (std::size_t i = 0; i < m; ++i) {
    if (problem.rhs[i] < 0) throw ArgumentError("right-hand side " + std::to_string(i) + " is negative");
  }

  // Row i reads  x_basic[i] = rhs[i] - sum_j t[i][j] * x_nonbasic[j].
  // The objective reads  value + sum_j cost[j] * x_nonbasic[j].
  std::vector<std::vector<Rational>> t = problem.rows;
  std::vector<Rational> rhs = problem.rhs;
  std::vector<Rational> cost = problem.objective;
  Rational value = 0;
  std::vector<std::size_t> nonbasic(n), basic(m);
  for (std::size_t j = 0; j < n; ++j) nonbasic[j] = j;
  for (std::size_t i = 0; i < m; ++i) basic[i] = n + i;

  constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();
  std::size_t pivots = 0;
  while (true) {
    std::size_t s = kNone;
    for (std::size_t j = 0; j < n; ++j) {
      if (cost[j] > 0 && (s == kNone || nonbasic[j] < nonbasic[s])) s = j;
    }
    if (s == kNone) break;

    std::size_t r = kNone;
    Rational best_ratio;
    for (std::size_t i = 0; i < m; ++i) {
      if (t[i][s] <= 0) continue;
      Rational ratio = rhs[i] / t[i][s];
      if (r == kNone || ratio < best_ratio || (ratio == best_ratio && basic[i] < basic[r])) {
        r = i;
        best_ratio = ratio;
      }
    }
    if (r == kNone) return {Status::Unbounded, 0, {}, pivots};

    const Rational p = t[r][s];
    for (std::size_t j = 0; j < n; ++j) {
      if (j != s) t[r][j] /= p;
    }
    t[r][s] = 1 / p;
    rhs[r] /= p;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == r || t[i][s] == 0) continue;
      const Rational f = t[i][s];
      for (std::size_t j = 0; j < n; ++j) {
        if (j != s) t[i][j] -= f * t[r][j];
      }
      t[i][s] = -f * t[r][s];
      rhs[i] -= f * rhs[r];
    }
    if (cost[s] != 0) {
      const Rational f = cost[s];
      for (std::size_t j = 0; j < n; ++j) {
        if (j != s) cost[j] -= f * t[r][j];
      }
      cost[s] = -f * t[r][s];
      value += f * rhs[r];
    }
    std::swap(nonbasic[s], basic[r]);
    ++pivots;
  }

  std::vector<Rational> z(n, Rational(0));
  for (std::size_t i = 0; i < m; ++i) {
    if (basic[i] < n) z[basic[i]] = rhs[i];
  }
  return {Status::Optimal, value, std::move(z), pivots};
}

}  // namespace ricci::lp
