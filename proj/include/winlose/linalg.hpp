#pragma once

#include <vector>

#include "winlose/rational.hpp"

namespace winlose {

enum class SolveKind { kUnique, kInconsistent, kUnderdetermined };

struct LinearSolution {
  SolveKind kind = SolveKind::kInconsistent;
  std::vector<Rational> x;  // filled only when kind == kUnique
};

// Exact Gaussian elimination for A x = b.
LinearSolution solve_linear(std::vector<std::vector<Rational>> a, std::vector<Rational> b);

enum class LpStatus { kOptimal, kInfeasible, kUnbounded };

struct LpResult {
  LpStatus status = LpStatus::kInfeasible;
  Rational value;
  std::vector<Rational> x;
};

// Two-phase dense simplex with Bland's rule over exact rationals:
// optimize c^T x subject to A x = b, x >= 0. Bland's pivoting guarantees
// termination; everything stays exact.
LpResult lp_solve(std::vector<std::vector<Rational>> a, std::vector<Rational> b,
                  std::vector<Rational> c, bool maximize);

}  // namespace winlose
