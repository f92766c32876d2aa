#pragma once

#include <cstddef>
#include <vector>

#include "ricci/rational.hpp"

namespace ricci::lp {

// maximize objective . z  subject to  rows * z <= rhs,  z >= 0.
// rhs must be non-negative so that z = 0 is a feasible starting vertex.
struct Problem {
  std::size_t vars = 0;
  std::vector<std::vector<Rational>> rows;
  std::vector<Rational> rhs;
  std::vector<Rational> objective;

  void add_row(std::vector<Rational> coeffs, Rational bound);
};

enum class Status { Optimal, Unbounded };

struct Solution {
  Status status;
  Rational value;
  std::vector<Rational> z;
  std::size_t pivots = 0;
};

// Exact primal simplex on a compact tableau with Bland's rule, so pivoting is
// deterministic and cannot cycle.
Solution maximize(const Problem& problem);

}  // namespace ricci::lp
