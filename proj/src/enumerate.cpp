#include "winlose/enumerate.hpp"

#include <omp.h>

#include <algorithm>
#include <atomic>
#include <functional>
#include <random>
#include <stdexcept>

#include "winlose/linalg.hpp"

namespace winlose {
namespace {

using Mask = std::uint32_t;
using Mat = std::vector<std::vector<Rational>>;

std::vector<int> mask_indices(Mask m) {
  std::vector<int> out;
  for (int i = 0; m != 0; ++i, m >>= 1)
    if (m & 1u) out.push_back(i);
  return out;
}

Mat row_matrix(const Game& g) {
  Mat r(g.strategy_count(0), std::vector<Rational>(g.strategy_count(1)));
  for (int i = 0; i < g.strategy_count(0); ++i)
    for (int j = 0; j < g.strategy_count(1); ++j) r[i][j] = g.row_util(i, j);
  return r;
}

Mat col_matrix(const Game& g) {
  Mat c(g.strategy_count(0), std::vector<Rational>(g.strategy_count(1)));
  for (int i = 0; i < g.strategy_count(0); ++i)
    for (int j = 0; j < g.strategy_count(1); ++j) c[i][j] = g.col_util(i, j);
  return c;
}

struct SideOutcome {
  enum Kind { kEmpty, kPoint, kMulti, kUnderdetermined } kind = kEmpty;
  std::vector<Rational> probs;  // full-length vector, zero off support
};

// Stage 1 of one player's half of a support pair: solve the exact
// indifference-and-normalization system for the opponent mix. A unique
// solution is feasibility-checked on the spot; an underdetermined system is
// deferred to LP probing (stage 2) so the other side's cheap rejection can
// run first. `util[own][opp]` is the utility of the player being made
// indifferent, `own_rows` her support, `opp_cols` the support being solved.
SideOutcome solve_side_equalities(const Mat& util, int own_n, int opp_n,
                                  const std::vector<int>& own_rows,
                                  const std::vector<int>& opp_cols) {
  const int k = static_cast<int>(opp_cols.size());
  // Unknowns: probabilities over opp_cols, then the common value v.
  std::vector<std::vector<Rational>> a;
  std::vector<Rational> b;
  for (int i : own_rows) {
    std::vector<Rational> row(k + 1, Rational(0));
    for (int c = 0; c < k; ++c) row[c] = util[i][opp_cols[c]];
    row[k] = Rational(-1);
    a.push_back(std::move(row));
    b.emplace_back(0);
  }
  {
    std::vector<Rational> row(k + 1, Rational(0));
    for (int c = 0; c < k; ++c) row[c] = Rational(1);
    a.push_back(std::move(row));
    b.emplace_back(1);
  }

  LinearSolution sol = solve_linear(std::move(a), std::move(b));
  if (sol.kind == SolveKind::kInconsistent) return {};
  if (sol.kind == SolveKind::kUnderdetermined) {
    SideOutcome out;
    out.kind = SideOutcome::kUnderdetermined;
    return out;
  }
  const Rational& v = sol.x[k];
  for (int c = 0; c < k; ++c)
    if (sol.x[c].sign() < 0) return {};
  for (int i = 0; i < own_n; ++i) {
    if (std::find(own_rows.begin(), own_rows.end(), i) != own_rows.end()) continue;
    Rational dev(0);
    for (int c = 0; c < k; ++c) dev += util[i][opp_cols[c]] * sol.x[c];
    if (dev > v) return {};
  }
  SideOutcome out;
  out.kind = SideOutcome::kPoint;
  out.probs.assign(opp_n, Rational(0));
  for (int c = 0; c < k; ++c) out.probs[opp_cols[c]] = sol.x[c];
  return out;
}

// Stage 2: probe the feasible polytope coordinate by coordinate. LP
// variables: k probabilities, v split into v+ and v-, one slack per
// off-support row. Constraints: the indifference equalities and
// normalization, plus util[i] . y - v + slack_i = 0 per off-support row.
// With probe_only_feasibility, stops after the first feasibility answer.
SideOutcome solve_side_polytope(const Mat& util, int own_n, int opp_n,
                                const std::vector<int>& own_rows,
                                const std::vector<int>& opp_cols,
                                bool probe_only_feasibility = false) {
  const int k = static_cast<int>(opp_cols.size());
  std::vector<int> off_rows;
  for (int i = 0; i < own_n; ++i)
    if (std::find(own_rows.begin(), own_rows.end(), i) == own_rows.end()) off_rows.push_back(i);
  const int nv = k + 2 + static_cast<int>(off_rows.size());
  std::vector<std::vector<Rational>> la;
  std::vector<Rational> lb;
  for (int i : own_rows) {
    std::vector<Rational> row(nv, Rational(0));
    for (int c = 0; c < k; ++c) row[c] = util[i][opp_cols[c]];
    row[k] = Rational(-1);
    row[k + 1] = Rational(1);
    la.push_back(std::move(row));
    lb.emplace_back(0);
  }
  {
    std::vector<Rational> row(nv, Rational(0));
    for (int c = 0; c < k; ++c) row[c] = Rational(1);
    la.push_back(std::move(row));
    lb.emplace_back(1);
  }
  for (std::size_t o = 0; o < off_rows.size(); ++o) {
    std::vector<Rational> row(nv, Rational(0));
    for (int c = 0; c < k; ++c) row[c] = util[off_rows[o]][opp_cols[c]];
    row[k] = Rational(-1);
    row[k + 1] = Rational(1);
    row[k + 2 + static_cast<int>(o)] = Rational(1);
    la.push_back(std::move(row));
    lb.emplace_back(0);
  }

  std::vector<Rational> point(k);
  for (int c = 0; c < k; ++c) {
    std::vector<Rational> goal(nv, Rational(0));
    goal[c] = Rational(1);
    LpResult hi = lp_solve(la, lb, goal, /*maximize=*/true);
    if (hi.status == LpStatus::kInfeasible) return {};
    if (probe_only_feasibility) {
      SideOutcome out;
      out.kind = SideOutcome::kPoint;  // nonempty; caller only cares about that
      return out;
    }
    LpResult lo = lp_solve(la, lb, goal, /*maximize=*/false);
    if (hi.status == LpStatus::kUnbounded || lo.status == LpStatus::kUnbounded ||
        !(hi.value == lo.value)) {
      SideOutcome out;
      out.kind = SideOutcome::kMulti;
      return out;
    }
    point[c] = hi.value;
  }
  SideOutcome out;
  out.kind = SideOutcome::kPoint;
  out.probs.assign(opp_n, Rational(0));
  for (int c = 0; c < k; ++c) out.probs[opp_cols[c]] = point[c];
  return out;
}

SideOutcome solve_side(const Mat& util, int own_n, int opp_n, const std::vector<int>& own_rows,
                       const std::vector<int>& opp_cols) {
  SideOutcome first = solve_side_equalities(util, own_n, opp_n, own_rows, opp_cols);
  if (first.kind != SideOutcome::kUnderdetermined) return first;
  return solve_side_polytope(util, own_n, opp_n, own_rows, opp_cols);
}

struct Found {
  std::vector<int> supp1, supp2;
  std::vector<Rational> x, y;

  bool operator<(const Found& o) const {
    if (supp1 != o.supp1) return supp1 < o.supp1;
    if (supp2 != o.supp2) return supp2 < o.supp2;
    for (std::size_t i = 0; i < x.size(); ++i)
      if (!(x[i] == o.x[i])) return x[i] < o.x[i];
    for (std::size_t j = 0; j < y.size(); ++j)
      if (!(y[j] == o.y[j])) return y[j] < o.y[j];
    return false;
  }
  bool operator==(const Found& o) const { return x == o.x && y == o.y; }
};

// Returns true if the pair certifies degeneracy. `ct` is the transposed
// column matrix, so player 2's indifference reads like player 1's.
bool process_pair(const Mat& r, const Mat& ct, int m, int n, Mask mask1, Mask mask2,
                  std::vector<Found>& sink) {
  const std::vector<int> s1 = mask_indices(mask1);
  const std::vector<int> s2 = mask_indices(mask2);

  SideOutcome ymix = solve_side(r, m, n, s1, s2);
  if (ymix.kind == SideOutcome::kEmpty) return false;

  SideOutcome xmix = solve_side(ct, n, m, s2, s1);
  if (xmix.kind == SideOutcome::kEmpty) return false;

  if (ymix.kind == SideOutcome::kMulti || xmix.kind == SideOutcome::kMulti) return true;

  for (int i : s1)
    if (xmix.probs[i].sign() <= 0) return false;
  for (int j : s2)
    if (ymix.probs[j].sign() <= 0) return false;
  sink.push_back({s1, s2, std::move(xmix.probs), std::move(ymix.probs)});
  return false;
}

EnumerationResult finish(const Game& g, std::vector<Found> found, bool degenerate,
                         std::int64_t scanned) {
  EnumerationResult res;
  res.supports_scanned = scanned;
  res.degenerate = degenerate;
  if (degenerate) return res;
  std::sort(found.begin(), found.end());
  found.erase(std::unique(found.begin(), found.end()), found.end());
  for (auto& f : found) {
    Profile p;
    p.dist = {std::move(f.x), std::move(f.y)};
    res.equilibria.push_back(std::move(p));
  }
  (void)g;
  return res;
}

void require_bimatrix_cap(const Game& g, const EnumOptions& opt) {
  if (!g.is_bimatrix()) throw std::invalid_argument("enumerate: bimatrix game required");
  if (g.strategy_count(0) > opt.max_strategies || g.strategy_count(1) > opt.max_strategies)
    throw std::invalid_argument("enumerate: strategy count exceeds cap");
}

}  // namespace

namespace {

Mat transposed_col_matrix(const Game& g) {
  Mat ct(g.strategy_count(1), std::vector<Rational>(g.strategy_count(0)));
  for (int i = 0; i < g.strategy_count(0); ++i)
    for (int j = 0; j < g.strategy_count(1); ++j) ct[j][i] = g.col_util(i, j);
  return ct;
}

}  // namespace

EnumerationResult enumerate_ne_bimatrix_serial(const Game& g, const EnumOptions& opt) {
  require_bimatrix_cap(g, opt);
  const int m = g.strategy_count(0);
  const int n = g.strategy_count(1);
  const Mat r = row_matrix(g);
  const Mat ct = transposed_col_matrix(g);
  const std::int64_t p1 = (1ll << m) - 1;
  const std::int64_t p2 = (1ll << n) - 1;
  std::vector<Found> found;
  bool degenerate = false;
  for (std::int64_t p = 0; p < p1 * p2 && !degenerate; ++p) {
    const Mask mask1 = static_cast<Mask>(p / p2 + 1);
    const Mask mask2 = static_cast<Mask>(p % p2 + 1);
    degenerate = process_pair(r, ct, m, n, mask1, mask2, found);
  }
  return finish(g, std::move(found), degenerate, p1 * p2);
}

EnumerationResult enumerate_ne_bimatrix(const Game& g, const EnumOptions& opt) {
  require_bimatrix_cap(g, opt);
  const int m = g.strategy_count(0);
  const int n = g.strategy_count(1);
  const Mat r = row_matrix(g);
  const Mat ct = transposed_col_matrix(g);
  const std::int64_t p1 = (1ll << m) - 1;
  const std::int64_t p2 = (1ll << n) - 1;
  const std::int64_t total = p1 * p2;
  std::vector<Found> found;
  std::atomic<bool> degenerate{false};
  const int threads = opt.jobs > 0 ? opt.jobs : omp_get_max_threads();
#pragma omp parallel num_threads(threads)
  {
    std::vector<Found> local;
#pragma omp for schedule(dynamic, 256) nowait
    for (std::int64_t p = 0; p < total; ++p) {
      if (degenerate.load(std::memory_order_relaxed)) continue;
      const Mask mask1 = static_cast<Mask>(p / p2 + 1);
      const Mask mask2 = static_cast<Mask>(p % p2 + 1);
      if (process_pair(r, ct, m, n, mask1, mask2, local))
        degenerate.store(true, std::memory_order_relaxed);
    }
#pragma omp critical
    found.insert(found.end(), std::make_move_iterator(local.begin()),
                 std::make_move_iterator(local.end()));
  }
  return finish(g, std::move(found), degenerate.load(), total);
}

std::vector<PureProfile> enumerate_pure_ne(const Game& g) {
  std::vector<PureProfile> out;
  const int r = g.players();
  std::vector<int> s(r, 0);
  while (true) {
    bool stable = true;
    std::vector<int> probe = s;
    for (int i = 0; i < r && stable; ++i) {
      const Rational& here = g.utility(s, i);
      for (int t = 0; t < g.strategy_count(i) && stable; ++t) {
        probe[i] = t;
        if (g.utility(probe, i) > here) stable = false;
      }
      probe[i] = s[i];
    }
    if (stable) out.push_back(s);
    int i = r - 1;
    for (; i >= 0; --i) {
      if (++s[i] < g.strategy_count(i)) break;
      s[i] = 0;
    }
    if (i < 0) break;
  }
  return out;
}

namespace {

// argmax_masks[mask] = set of own strategies with maximal total utility
// against the uniform mix on `mask` (scaling by the support size does not
// move the argmax). Built by subset DFS with a running column sum.
std::vector<Mask> best_reply_masks(const Mat& util, int own_n, int opp_n) {
  std::vector<Mask> out(1u << opp_n, 0);
  std::vector<Rational> sum(own_n, Rational(0));
  auto record = [&](Mask mask) {
    Mask best = 0;
    int first = -1;
    for (int i = 0; i < own_n; ++i) {
      if (first < 0 || sum[i] > sum[first]) {
        first = i;
        best = 1u << i;
      } else if (sum[i] == sum[first]) {
        best |= 1u << i;
      }
    }
    out[mask] = best;
  };
  // Subset DFS mutating `sum` on entry/exit of each column choice.
  std::function<void(int, Mask)> rec = [&](int start, Mask mask) {
    if (mask != 0) record(mask);
    for (int j = start; j < opp_n; ++j) {
      for (int i = 0; i < own_n; ++i) sum[i] += util[i][j];
      rec(j + 1, mask | (1u << j));
      for (int i = 0; i < own_n; ++i) sum[i] -= util[i][j];
    }
  };
  rec(0, 0);
  return out;
}

std::vector<Profile> uniform_pairs_to_profiles(const Game& g, std::vector<std::pair<Mask, Mask>> hits) {
  std::sort(hits.begin(), hits.end(), [](const auto& a, const auto& b) {
    const auto ia = mask_indices(a.first), ib = mask_indices(b.first);
    if (ia != ib) return ia < ib;
    return mask_indices(a.second) < mask_indices(b.second);
  });
  std::vector<Profile> out;
  for (const auto& [m1, m2] : hits) {
    Profile p;
    p.dist.resize(2);
    const auto s1 = mask_indices(m1);
    const auto s2 = mask_indices(m2);
    p.dist[0].assign(g.strategy_count(0), Rational(0));
    p.dist[1].assign(g.strategy_count(1), Rational(0));
    for (int i : s1) p.dist[0][i] = Rational(1, static_cast<long>(s1.size()));
    for (int j : s2) p.dist[1][j] = Rational(1, static_cast<long>(s2.size()));
    out.push_back(std::move(p));
  }
  return out;
}

template <bool Parallel>
std::vector<Profile> uniform_scan(const Game& g, const EnumOptions& opt) {
  if (!g.is_bimatrix()) throw std::invalid_argument("enumerate_uniform_ne: bimatrix required");
  const int m = g.strategy_count(0);
  const int n = g.strategy_count(1);
  if (m > opt.max_strategies || n > opt.max_strategies)
    throw std::invalid_argument("enumerate_uniform_ne: strategy count exceeds cap");
  const Mat r = row_matrix(g);
  const Mat c = col_matrix(g);
  Mat ct(n, std::vector<Rational>(m));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < n; ++j) ct[j][i] = c[i][j];

  const std::vector<Mask> reply1 = best_reply_masks(r, m, n);   // by opponent mask2
  const std::vector<Mask> reply2 = best_reply_masks(ct, n, m);  // by opponent mask1

  const std::int64_t p1 = (1ll << m) - 1;
  const std::int64_t p2 = (1ll << n) - 1;
  const std::int64_t total = p1 * p2;
  std::vector<std::pair<Mask, Mask>> hits;
  const int threads = opt.jobs > 0 ? opt.jobs : omp_get_max_threads();
#pragma omp parallel num_threads(threads) if (Parallel)
  {
    std::vector<std::pair<Mask, Mask>> local;
#pragma omp for schedule(static) nowait
    for (std::int64_t p = 0; p < total; ++p) {
      const Mask mask1 = static_cast<Mask>(p / p2 + 1);
      const Mask mask2 = static_cast<Mask>(p % p2 + 1);
      // A uniform pair is a Nash equilibrium iff each support lies inside
      // the argmax set against the other side's uniform mix.
      if ((mask1 & ~reply1[mask2]) == 0 && (mask2 & ~reply2[mask1]) == 0)
        local.emplace_back(mask1, mask2);
    }
#pragma omp critical
    hits.insert(hits.end(), local.begin(), local.end());
  }
  return uniform_pairs_to_profiles(g, std::move(hits));
}

}  // namespace

std::vector<Profile> enumerate_uniform_ne(const Game& g, const EnumOptions& opt) {
  return uniform_scan<true>(g, opt);
}

std::vector<Profile> enumerate_uniform_ne_serial(const Game& g, const EnumOptions& opt) {
  return uniform_scan<false>(g, opt);
}

EnumerationResult enumerate_symmetric_ne(const Game& g, const EnumOptions& opt) {
  if (!g.is_symmetric_bimatrix())
    throw std::invalid_argument("enumerate_symmetric_ne: symmetric bimatrix game required");
  const int n = g.strategy_count(0);
  if (n > opt.max_strategies)
    throw std::invalid_argument("enumerate_symmetric_ne: strategy count exceeds cap");
  const Mat r = row_matrix(g);
  EnumerationResult res;
  res.supports_scanned = (1ll << n) - 1;
  std::vector<Found> found;
  for (Mask mask = 1; mask < (1u << n); ++mask) {
    const std::vector<int> s = mask_indices(mask);
    SideOutcome mix = solve_side(r, n, n, s, s);
    if (mix.kind == SideOutcome::kEmpty) continue;
    if (mix.kind == SideOutcome::kMulti) {
      res.degenerate = true;
      return res;
    }
    bool strict = true;
    for (int j : s)
      if (mix.probs[j].sign() <= 0) strict = false;
    if (strict) found.push_back({s, s, mix.probs, mix.probs});
  }
  std::sort(found.begin(), found.end());
  for (auto& f : found) {
    Profile p;
    p.dist = {std::move(f.x), std::move(f.y)};
    res.equilibria.push_back(std::move(p));
  }
  return res;
}

namespace {

// Any weakly feasible point of the side polytope (equalities plus
// nonnegativity and off-support dominance). Empty optional = infeasible.
std::optional<std::vector<Rational>> side_feasible_point(const Mat& util, int own_n, int opp_n,
                                                         const std::vector<int>& own_rows,
                                                         const std::vector<int>& opp_cols) {
  const int k = static_cast<int>(opp_cols.size());
  std::vector<int> off_rows;
  for (int i = 0; i < own_n; ++i)
    if (std::find(own_rows.begin(), own_rows.end(), i) == own_rows.end()) off_rows.push_back(i);
  const int nv = k + 2 + static_cast<int>(off_rows.size());
  std::vector<std::vector<Rational>> la;
  std::vector<Rational> lb;
  for (int i : own_rows) {
    std::vector<Rational> row(nv, Rational(0));
    for (int c = 0; c < k; ++c) row[c] = util[i][opp_cols[c]];
    row[k] = Rational(-1);
    row[k + 1] = Rational(1);
    la.push_back(std::move(row));
    lb.emplace_back(0);
  }
  {
    std::vector<Rational> row(nv, Rational(0));
    for (int c = 0; c < k; ++c) row[c] = Rational(1);
    la.push_back(std::move(row));
    lb.emplace_back(1);
  }
  for (std::size_t o = 0; o < off_rows.size(); ++o) {
    std::vector<Rational> row(nv, Rational(0));
    for (int c = 0; c < k; ++c) row[c] = util[off_rows[o]][opp_cols[c]];
    row[k] = Rational(-1);
    row[k + 1] = Rational(1);
    row[k + 2 + static_cast<int>(o)] = Rational(1);
    la.push_back(std::move(row));
    lb.emplace_back(0);
  }
  LpResult r = lp_solve(la, lb, std::vector<Rational>(nv, Rational(0)), true);
  if (r.status != LpStatus::kOptimal) return std::nullopt;
  std::vector<Rational> full(opp_n, Rational(0));
  for (int c = 0; c < k; ++c) full[opp_cols[c]] = r.x[c];
  return full;
}

}  // namespace

std::optional<Profile> find_symmetric_profile_equilibrium(const Game& g, int max_strategies) {
  if (!g.is_bimatrix())
    throw std::invalid_argument("find_symmetric_profile_equilibrium: bimatrix required");
  const int n = g.strategy_count(0);
  if (g.strategy_count(1) != n || n > max_strategies)
    throw std::invalid_argument("find_symmetric_profile_equilibrium: square game within cap required");
  const Mat r = row_matrix(g);
  const Mat ct = transposed_col_matrix(g);
  for (Mask mask = 1; mask < (1u << n); ++mask) {
    const std::vector<int> s = mask_indices(mask);
    const int k = static_cast<int>(s.size());
    std::vector<int> off;
    for (int i = 0; i < n; ++i)
      if (!((mask >> i) & 1u)) off.push_back(i);
    // Variables: z over s, v1 split, v2 split, one slack per inequality.
    const int nslack = 2 * static_cast<int>(off.size());
    const int nv = k + 4 + nslack;
    std::vector<std::vector<Rational>> la;
    std::vector<Rational> lb;
    auto add_row = [&](const Mat& util, int i, int vpos, int slack) {
      std::vector<Rational> row(nv, Rational(0));
      for (int c = 0; c < k; ++c) row[c] = util[i][s[c]];
      row[vpos] = Rational(-1);
      row[vpos + 1] = Rational(1);
      if (slack >= 0) row[slack] = Rational(1);
      la.push_back(std::move(row));
      lb.emplace_back(0);
    };
    for (int i : s) add_row(r, i, k, -1);
    for (int j : s) add_row(ct, j, k + 2, -1);
    int slack = k + 4;
    for (int i : off) add_row(r, i, k, slack++);
    for (int j : off) add_row(ct, j, k + 2, slack++);
    {
      std::vector<Rational> row(nv, Rational(0));
      for (int c = 0; c < k; ++c) row[c] = Rational(1);
      la.push_back(std::move(row));
      lb.emplace_back(1);
    }
    LpResult res = lp_solve(la, lb, std::vector<Rational>(nv, Rational(0)), true);
    if (res.status != LpStatus::kOptimal) continue;
    std::vector<Rational> z(n, Rational(0));
    for (int c = 0; c < k; ++c) z[s[c]] = res.x[c];
    Profile p;
    p.dist = {z, z};
    if (!is_nash(g, p).is_nash)
      throw std::logic_error("find_symmetric_profile_equilibrium: feasible point not an equilibrium");
    return p;
  }
  return std::nullopt;
}

std::optional<Profile> find_one_equilibrium(const Game& g, const EnumOptions& opt) {
  require_bimatrix_cap(g, opt);
  const int m = g.strategy_count(0);
  const int n = g.strategy_count(1);
  const Mat r = row_matrix(g);
  const Mat ct = transposed_col_matrix(g);
  for (Mask mask1 = 1; mask1 < (1u << m); ++mask1) {
    const std::vector<int> s1 = mask_indices(mask1);
    for (Mask mask2 = 1; mask2 < (1u << n); ++mask2) {
      const std::vector<int> s2 = mask_indices(mask2);
      auto y = side_feasible_point(r, m, n, s1, s2);
      if (!y) continue;
      auto x = side_feasible_point(ct, n, m, s2, s1);
      if (!x) continue;
      Profile p;
      p.dist = {std::move(*x), std::move(*y)};
      if (!is_nash(g, p).is_nash)
        throw std::logic_error("find_one_equilibrium: feasible pair not an equilibrium");
      return p;
    }
  }
  return std::nullopt;
}

Profile random_profile(const Game& g, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  Profile p;
  p.dist.resize(g.players());
  for (int i = 0; i < g.players(); ++i) {
    const int n = g.strategy_count(i);
    std::uniform_int_distribution<int> coin(0, 1);
    std::uniform_int_distribution<int> weight(1, 20);
    std::vector<long> w(n, 0);
    long total = 0;
    for (int s = 0; s < n; ++s) {
      if (coin(rng)) {
        w[s] = weight(rng);
        total += w[s];
      }
    }
    if (total == 0) {
      std::uniform_int_distribution<int> pick(0, n - 1);
      w[pick(rng)] = 1;
      total = 1;
    }
    p.dist[i].reserve(n);
    for (int s = 0; s < n; ++s) p.dist[i].emplace_back(w[s], total);
  }
  return p;
}

}  // namespace winlose
