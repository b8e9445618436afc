#include "winlose/linalg.hpp"

#include <stdexcept>
#include <utility>

namespace winlose {

LinearSolution solve_linear(std::vector<std::vector<Rational>> a, std::vector<Rational> b) {
  const int rows = static_cast<int>(a.size());
  const int cols = rows > 0 ? static_cast<int>(a[0].size()) : 0;
  std::vector<int> pivot_col_of_row;
  int row = 0;
  for (int col = 0; col < cols && row < rows; ++col) {
    int pr = -1;
    for (int i = row; i < rows; ++i)
      if (!a[i][col].is_zero()) {
        pr = i;
        break;
      }
    if (pr < 0) continue;
    std::swap(a[row], a[pr]);
    std::swap(b[row], b[pr]);
    const Rational inv = Rational(1) / a[row][col];
    for (int j = col; j < cols; ++j) a[row][j] *= inv;
    b[row] *= inv;
    for (int i = 0; i < rows; ++i) {
      if (i == row || a[i][col].is_zero()) continue;
      const Rational f = a[i][col];
      for (int j = col; j < cols; ++j) a[i][j] -= f * a[row][j];
      b[i] -= f * b[row];
    }
    pivot_col_of_row.push_back(col);
    ++row;
  }
  for (int i = row; i < rows; ++i)
    if (!b[i].is_zero()) return {SolveKind::kInconsistent, {}};
  if (row < cols) return {SolveKind::kUnderdetermined, {}};
  LinearSolution out;
  out.kind = SolveKind::kUnique;
  out.x.assign(cols, Rational(0));
  for (int i = 0; i < row; ++i) out.x[pivot_col_of_row[i]] = b[i];
  return out;
}

namespace {

struct Tableau {
  std::vector<std::vector<Rational>> t;  // rows x (cols + 1), last column = rhs
  std::vector<Rational> obj;             // cols + 1 reduced-profit row
  std::vector<int> basis;
  int cols = 0;

  int rows() const { return static_cast<int>(t.size()); }

  void pivot(int pr, int pc) {
    const Rational inv = Rational(1) / t[pr][pc];
    for (auto& v : t[pr]) v *= inv;
    for (int i = 0; i < rows(); ++i) {
      if (i == pr || t[i][pc].is_zero()) continue;
      const Rational f = t[i][pc];
      for (int j = 0; j <= cols; ++j) t[i][j] -= f * t[pr][j];
    }
    if (!obj[pc].is_zero()) {
      const Rational f = obj[pc];
      for (int j = 0; j <= cols; ++j) obj[j] -= f * t[pr][j];
    }
    basis[pr] = pc;
  }

  // Bland: entering = lowest-index improving column, leaving = lowest basis
  // index among the minimum-ratio rows. Returns false on unboundedness.
  bool run() {
    while (true) {
      int enter = -1;
      for (int j = 0; j < cols; ++j)
        if (obj[j].sign() > 0) {
          enter = j;
          break;
        }
      if (enter < 0) return true;
      int leave = -1;
      Rational best;
      for (int i = 0; i < rows(); ++i) {
        if (t[i][enter].sign() <= 0) continue;
        Rational ratio = t[i][cols] / t[i][enter];
        if (leave < 0 || ratio < best || (ratio == best && basis[i] < basis[leave])) {
          best = ratio;
          leave = i;
        }
      }
      if (leave < 0) return false;
      pivot(leave, enter);
    }
  }
};

}  // namespace

LpResult lp_solve(std::vector<std::vector<Rational>> a, std::vector<Rational> b,
                  std::vector<Rational> c, bool maximize) {
  const int m = static_cast<int>(a.size());
  const int n = m > 0 ? static_cast<int>(a[0].size()) : static_cast<int>(c.size());
  if (static_cast<int>(c.size()) != n) throw std::invalid_argument("lp_solve: c size mismatch");
  for (int i = 0; i < m; ++i)
    if (b[i].sign() < 0) {
      for (auto& v : a[i]) v = -v;
      b[i] = -b[i];
    }

  // Phase 1: artificial basis, maximize -(sum of artificials).
  Tableau tab;
  tab.cols = n + m;
  tab.t.assign(m, std::vector<Rational>(n + m + 1, Rational(0)));
  tab.basis.resize(m);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < n; ++j) tab.t[i][j] = a[i][j];
    tab.t[i][n + i] = Rational(1);
    tab.t[i][n + m] = b[i];
    tab.basis[i] = n + i;
  }
  tab.obj.assign(n + m + 1, Rational(0));
  for (int j = n; j < n + m; ++j) tab.obj[j] = Rational(-1);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j <= n + m; ++j) tab.obj[j] += tab.t[i][j];
  tab.run();  // bounded by construction
  Rational phase1{0};
  for (int i = 0; i < m; ++i)
    if (tab.basis[i] >= n) phase1 += tab.t[i][n + m];
  if (!phase1.is_zero()) return {LpStatus::kInfeasible, {}, {}};

  // Drive leftover artificials out of the basis; rows that cannot pivot are
  // redundant and get dropped.
  for (int i = tab.rows() - 1; i >= 0; --i) {
    if (tab.basis[i] < n) continue;
    int pc = -1;
    for (int j = 0; j < n; ++j)
      if (!tab.t[i][j].is_zero()) {
        pc = j;
        break;
      }
    if (pc >= 0) {
      tab.pivot(i, pc);
    } else {
      tab.t.erase(tab.t.begin() + i);
      tab.basis.erase(tab.basis.begin() + i);
    }
  }

  // Phase 2 on the original columns.
  Tableau t2;
  t2.cols = n;
  t2.basis = tab.basis;
  t2.t.assign(tab.rows(), std::vector<Rational>(n + 1, Rational(0)));
  for (int i = 0; i < tab.rows(); ++i) {
    for (int j = 0; j < n; ++j) t2.t[i][j] = tab.t[i][j];
    t2.t[i][n] = tab.t[i][n + m];
  }
  std::vector<Rational> goal = c;
  if (!maximize)
    for (auto& v : goal) v = -v;
  t2.obj.assign(n + 1, Rational(0));
  for (int j = 0; j < n; ++j) t2.obj[j] = goal[j];
  for (int i = 0; i < t2.rows(); ++i) {
    const Rational f = goal[t2.basis[i]];
    if (f.is_zero()) continue;
    for (int j = 0; j <= n; ++j) t2.obj[j] -= f * t2.t[i][j];
  }
  if (!t2.run()) return {LpStatus::kUnbounded, {}, {}};

  LpResult out;
  out.status = LpStatus::kOptimal;
  out.x.assign(n, Rational(0));
  for (int i = 0; i < t2.rows(); ++i) out.x[t2.basis[i]] = t2.t[i][n];
  for (int j = 0; j < n; ++j) out.value += c[j] * out.x[j];
  return out;
}

}  // namespace winlose
