#include <doctest.h>

#include <functional>
#include <optional>
#include <random>

#include "ricci/errors.hpp"
#include "ricci/lp.hpp"

using namespace ricci;

namespace {

// Solve the square system A z = b by Gauss-Jordan; nullopt when singular.
std::optional<std::vector<Rational>> solve(std::vector<std::vector<Rational>> a, std::vector<Rational> b) {
  const std::size_t n = b.size();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a[p][c] == 0) ++p;
    if (p == n) return std::nullopt;
    std::swap(a[p], a[c]);
    std::swap(b[p], b[c]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || a[r][c] == 0) continue;
      Rational f = a[r][c] / a[c][c];
      for (std::size_t k = 0; k < n; ++k) a[r][k] -= f * a[c][k];
      b[r] -= f * b[c];
    }
  }
  for (std::size_t i = 0; i < n; ++i) b[i] /= a[i][i];
  return b;
}

// Best objective over all vertices of {rows z <= rhs, z >= 0}.
Rational vertex_oracle(const lp::Problem& p) {
  const std::size_t n = p.vars;
  std::vector<std::vector<Rational>> all = p.rows;
  std::vector<Rational> bounds = p.rhs;
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<Rational> row(n, 0);
    row[j] = -1;
    all.push_back(row);
    bounds.push_back(0);
  }
  const std::size_t m = all.size();
  std::optional<Rational> best;
  std::vector<std::size_t> pick(n);
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t depth, std::size_t from) {
    if (depth == n) {
      std::vector<std::vector<Rational>> a;
      std::vector<Rational> b;
      for (auto i : pick) {
        a.push_back(all[i]);
        b.push_back(bounds[i]);
      }
      auto z = solve(a, b);
      if (!z) return;
      for (std::size_t i = 0; i < m; ++i) {
        Rational lhs = 0;
        for (std::size_t j = 0; j < n; ++j) lhs += all[i][j] * (*z)[j];
        if (lhs > bounds[i]) return;
      }
      Rational v = 0;
      for (std::size_t j = 0; j < n; ++j) v += p.objective[j] * (*z)[j];
      if (!best || v > *best) best = v;
      return;
    }
    for (std::size_t i = from; i < m; ++i) {
      pick[depth] = i;
      rec(depth + 1, i + 1);
    }
  };
  rec(0, 0);
  return *best;
}

}  // namespace

TEST_SUITE("lp") {

TEST_CASE("textbook instance") {
  // max 3x + 5y  s.t.  x <= 4, 2y <= 12, 3x + 2y <= 18  ->  36 at (2, 6)
  lp::Problem p;
  p.vars = 2;
  p.objective = {3, 5};
  p.add_row({1, 0}, 4);
  p.add_row({0, 2}, 12);
  p.add_row({3, 2}, 18);
  auto s = lp::maximize(p);
  CHECK(s.status == lp::Status::Optimal);
  CHECK(s.value == 36);
  CHECK(s.z == std::vector<Rational>{2, 6});
}

TEST_CASE("unbounded and degenerate problems") {
  lp::Problem p;
  p.vars = 2;
  p.objective = {1, 1};
  p.add_row({1, -1}, 1);
  CHECK(lp::maximize(p).status == lp::Status::Unbounded);

  lp::Problem d;
  d.vars = 2;
  d.objective = {1, 1};
  d.add_row({1, 1}, 0);
  d.add_row({1, -1}, 0);
  auto s = lp::maximize(d);
  CHECK(s.status == lp::Status::Optimal);
  CHECK(s.value == 0);

  lp::Problem bad;
  bad.vars = 1;
  bad.objective = {1};
  bad.add_row({1}, -1);
  CHECK_THROWS_AS(lp::maximize(bad), ArgumentError);
}

TEST_CASE("random bounded programs agree with vertex enumeration") {
  std::mt19937_64 rng(2024);
  std::uniform_int_distribution<int> coef(-4, 6), rhs(0, 9), obj(-3, 5), den(1, 4);
  for (int trial = 0; trial < 200; ++trial) {
    lp::Problem p;
    p.vars = 2 + trial % 3;
    for (std::size_t j = 0; j < p.vars; ++j) p.objective.push_back(make_rational(obj(rng), den(rng)));
    // Box keeps the program bounded.
    for (std::size_t j = 0; j < p.vars; ++j) {
      std::vector<Rational> row(p.vars, 0);
      row[j] = 1;
      p.add_row(row, make_rational(rhs(rng) + 1, den(rng)));
    }
    for (int r = 0; r < 3; ++r) {
      std::vector<Rational> row;
      for (std::size_t j = 0; j < p.vars; ++j) row.push_back(make_rational(coef(rng), den(rng)));
      p.add_row(row, rhs(rng));
    }
    auto s = lp::maximize(p);
    REQUIRE(s.status == lp::Status::Optimal);
    CHECK(s.value == vertex_oracle(p));
    Rational v = 0;
    for (std::size_t j = 0; j < p.vars; ++j) {
      CHECK(s.z[j] >= 0);
      v += p.objective[j] * s.z[j];
    }
    CHECK(v == s.value);
    for (std::size_t i = 0; i < p.rows.size(); ++i) {
      Rational lhs = 0;
      for (std::size_t j = 0; j < p.vars; ++j) lhs += p.rows[i][j] * s.z[j];
      CHECK(lhs <= p.rhs[i]);
    }
  }
}

}  // TEST_SUITE
