#include "winlose/symmetrize.hpp"

#include <algorithm>
#include <stdexcept>

#include "winlose/enumerate.hpp"

namespace winlose {

std::pair<Game, GhrLayout> ghr_symmetrize(const Game& base) {
  if (!base.is_bimatrix()) throw std::invalid_argument("ghr_symmetrize: bimatrix game required");
  if (!base.win_lose()) throw std::invalid_argument("ghr_symmetrize: win-lose game required");
  const int m = base.strategy_count(0);
  const int n = base.strategy_count(1);
  std::vector<std::string> labels;
  for (const auto& l : base.labels(0)) labels.push_back("p1:" + l);
  for (const auto& l : base.labels(1)) labels.push_back("p2:" + l);
  const int t = m + n;
  std::vector<std::vector<Rational>> s(t, std::vector<Rational>(t, Rational(0)));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < n; ++j) s[i][m + j] = base.row_util(i, j);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < n; ++j) s[m + j][i] = base.col_util(i, j);
  std::vector<std::vector<Rational>> st(t, std::vector<Rational>(t));
  for (int i = 0; i < t; ++i)
    for (int j = 0; j < t; ++j) st[i][j] = s[j][i];
  Game sym = Game::bimatrix(labels, labels, s, st);

  GhrLayout layout;
  layout.left_count = m;
  layout.right_count = n;
  const StructureReport base_s = check_structure(base);
  if (base_s.pup && !check_structure(sym).pup)
    throw std::logic_error("ghr_symmetrize: positive utility property not preserved");
  return {std::move(sym), layout};
}

GhrLayout ghr_layout_for_reduction(const ReductionLayout& red, const GhrLayout& plain) {
  GhrLayout out = plain;
  out.lit_left_begin = red.literal_begin(0);
  out.lit_left_end = red.literal_begin(0) + 2 * red.n;
  out.lit_right_begin = plain.left_count + red.literal_begin(1);
  out.lit_right_end = plain.left_count + red.literal_begin(1) + 2 * red.n;
  return out;
}

Game ghr_base_game(const Game& sym, const GhrLayout& layout) {
  const int m = layout.left_count;
  const int n = layout.right_count;
  if (sym.strategy_count(0) != m + n || sym.strategy_count(1) != m + n)
    throw std::invalid_argument("ghr_base_game: layout does not match game");
  std::vector<std::string> rl, cl;
  for (int i = 0; i < m; ++i) rl.push_back(sym.labels(0)[i]);
  for (int j = 0; j < n; ++j) cl.push_back(sym.labels(0)[m + j]);
  std::vector<std::vector<Rational>> r(m, std::vector<Rational>(n));
  std::vector<std::vector<Rational>> c(m, std::vector<Rational>(n));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < n; ++j) {
      r[i][j] = sym.row_util(i, m + j);
      c[i][j] = sym.row_util(m + j, i);  // C^T block of S
    }
  return Game::bimatrix(rl, cl, r, c);
}

namespace {

std::vector<Rational> scaled_concat(const Rational& wl, const std::vector<Rational>& left,
                                    const Rational& wr, const std::vector<Rational>& right) {
  std::vector<Rational> out;
  out.reserve(left.size() + right.size());
  for (const auto& v : left) out.push_back(wl * v);
  for (const auto& v : right) out.push_back(wr * v);
  return out;
}

std::vector<Rational> normalized(const std::vector<Rational>& v) {
  Rational sum(0);
  for (const auto& x : v) sum += x;
  if (sum.is_zero()) throw std::invalid_argument("normalize: zero vector");
  std::vector<Rational> out;
  out.reserve(v.size());
  for (const auto& x : v) out.push_back(x / sum);
  return out;
}

bool all_zero(const std::vector<Rational>& v) {
  for (const auto& x : v)
    if (!x.is_zero()) return false;
  return true;
}

}  // namespace

std::pair<Profile, Profile> balanced_mixture(const Game& base, const BalancedInput& in) {
  const int m = base.strategy_count(0);
  const int n = base.strategy_count(1);
  validate_profile(base, in.tau);
  const Rational u1_tau = expected_utility(base, in.tau, 0);
  const Rational u2_tau = expected_utility(base, in.tau, 1);

  Profile first, second;
  if (!in.rho.has_value()) {
    // Null first argument: the two mixtures just swap tau's strategies
    // across the halves.
    std::vector<Rational> zero_left(m, Rational(0));
    std::vector<Rational> zero_right(n, Rational(0));
    std::vector<Rational> e1 = zero_left, e2 = zero_left;
    e1.insert(e1.end(), in.tau.dist[1].begin(), in.tau.dist[1].end());
    e2 = in.tau.dist[0];
    e2.insert(e2.end(), zero_right.begin(), zero_right.end());
    first.dist = {e1, e2};
    second.dist = {e2, e1};
    return {first, second};
  }

  const Profile& rho = *in.rho;
  validate_profile(base, rho);
  const Rational u1_rho = expected_utility(base, rho, 0);
  const Rational u2_rho = expected_utility(base, rho, 1);
  const Rational d1 = u1_tau + u2_rho;
  const Rational d2 = u1_rho + u2_tau;
  if (d1.is_zero() || d2.is_zero())
    throw std::invalid_argument("balanced_mixture: zero mixture denominator");

  std::vector<Rational> e1 =
      scaled_concat(u1_tau / d1, rho.dist[0], u2_rho / d1, in.tau.dist[1]);
  std::vector<Rational> e2 =
      scaled_concat(u1_rho / d2, in.tau.dist[0], u2_tau / d2, rho.dist[1]);
  first.dist = {e1, e2};
  second.dist = {e2, e1};
  return {first, second};
}

Decomposition decompose_symmetric_ne(const Game& sym, const GhrLayout& layout,
                                     const Profile& phi) {
  if (!is_nash(sym, phi).is_nash)
    throw std::invalid_argument("decompose_symmetric_ne: profile is not an equilibrium");
  const Game base = ghr_base_game(sym, layout);
  const auto h1 = split_halves(layout, phi.dist[0]);
  const auto h2 = split_halves(layout, phi.dist[1]);
  const bool l1 = all_zero(h1.left), r1 = all_zero(h1.right);
  const bool l2 = all_zero(h2.left), r2 = all_zero(h2.right);

  auto check_base_ne = [&](Profile p) {
    if (!is_nash(base, p).is_nash)
      throw std::logic_error("decompose_symmetric_ne: recovered profile fails on the base game");
    return p;
  };

  Decomposition out;
  if (!l1 && !r1 && !l2 && !r2) {
    out.which = Decomposition::kBothHalves;
    Profile rho, tau;
    rho.dist = {normalized(h1.left), normalized(h2.right)};
    tau.dist = {normalized(h2.left), normalized(h1.right)};
    out.recovered.push_back(check_base_ne(rho));
    out.recovered.push_back(check_base_ne(tau));
    auto [mix1, mix2] = balanced_mixture(base, {rho, tau});
    if (!(mix1 == phi))
      throw std::logic_error("decompose_symmetric_ne: mixture round-trip failed");
    (void)mix2;
    return out;
  }
  if (l1 && r2 && !r1 && !l2) {
    out.which = Decomposition::kLeftZero;
    Profile tau;
    tau.dist = {h2.left, h1.right};
    out.recovered.push_back(check_base_ne(tau));
    auto [mix1, mix2] = balanced_mixture(base, {std::nullopt, out.recovered.front()});
    if (!(mix1 == phi))
      throw std::logic_error("decompose_symmetric_ne: mixture round-trip failed");
    (void)mix2;
    return out;
  }
  if (r1 && l2 && !l1 && !r2) {
    out.which = Decomposition::kRightZero;
    Profile tau;
    tau.dist = {h1.left, h2.right};
    out.recovered.push_back(check_base_ne(tau));
    auto [mix1, mix2] = balanced_mixture(base, {std::nullopt, out.recovered.front()});
    if (!(mix2 == phi))
      throw std::logic_error("decompose_symmetric_ne: mixture round-trip failed");
    (void)mix1;
    return out;
  }
  throw std::logic_error("decompose_symmetric_ne: half-zero pattern outside the three cases");
}

Profile recover_base_ne(const Game& sym, const GhrLayout& layout, const Profile& phi) {
  const Decomposition d = decompose_symmetric_ne(sym, layout, phi);
  // In the two-sided case the rule picks <norm(left of entry 2), norm(right
  // of entry 1)>, which is the decomposition's tau.
  return d.which == Decomposition::kBothHalves ? d.recovered[1] : d.recovered[0];
}

Report ghr_count_identity_check(const Game& base, int jobs) {
  Report rep;
  rep.title = "ghr-count";
  const StructureReport st = check_structure(base);
  rep.add("base is win-lose", st.win_lose);
  rep.add("base has the positive utility property", st.pup);
  if (!st.win_lose || !st.pup) return rep;

  EnumerationResult base_res = enumerate_ne_bimatrix(base, {.jobs = jobs});
  if (base_res.degenerate) {
    rep.add("skipped(degenerate): base oracle", true, "counting identity not applicable");
    return rep;
  }
  auto [sym, layout] = ghr_symmetrize(base);
  EnumerationResult sym_res = enumerate_ne_bimatrix(sym, {.max_strategies = 16, .jobs = jobs});
  if (sym_res.degenerate) {
    rep.add("skipped(degenerate): symmetrized oracle", true, "counting identity not applicable");
    return rep;
  }
  const std::size_t k = base_res.equilibria.size();
  const std::size_t expected = k * (k + 2);
  rep.add("|NE(GHR)| == |NE| * (|NE| + 2)", sym_res.equilibria.size() == expected,
          std::to_string(sym_res.equilibria.size()) + " vs " + std::to_string(k) + "*(" +
              std::to_string(k) + "+2)");

  // The balanced-mixture map must hit every equilibrium of the image exactly
  // once: ordered pairs of base equilibria, plus the two null mixtures per
  // base equilibrium.
  std::vector<Profile> constructed;
  for (const Profile& rho : base_res.equilibria)
    for (const Profile& tau : base_res.equilibria)
      constructed.push_back(balanced_mixture(base, {rho, tau}).first);
  for (const Profile& tau : base_res.equilibria) {
    auto [a, b] = balanced_mixture(base, {std::nullopt, tau});
    constructed.push_back(a);
    constructed.push_back(b);
  }
  bool all_nash = true;
  for (const Profile& p : constructed)
    if (!is_nash(sym, p).is_nash) all_nash = false;
  rep.add("all balanced mixtures are equilibria of the image", all_nash);

  bool distinct = true;
  for (std::size_t i = 0; i < constructed.size() && distinct; ++i)
    for (std::size_t j = i + 1; j < constructed.size() && distinct; ++j)
      if (constructed[i] == constructed[j]) distinct = false;
  rep.add("balanced mixtures pairwise distinct", distinct);

  bool onto = true;
  for (const Profile& e : sym_res.equilibria) {
    bool hit = false;
    for (const Profile& p : constructed)
      if (p == e) hit = true;
    if (!hit) onto = false;
  }
  rep.add("every image equilibrium is a balanced mixture", onto);
  return rep;
}

PupCompletion pup_complete(const Game& g) {
  if (!g.is_bimatrix() || !g.win_lose())
    throw std::invalid_argument("pup_complete: win-lose bimatrix game required");
  const auto pure = enumerate_pure_ne(g);
  if (!pure.empty()) return {.pure_ne = pure.front(), .completed = std::nullopt};

  const StructureReport st = check_structure(g);
  if (st.pup) return {.pure_ne = std::nullopt, .completed = g};

  const int m = g.strategy_count(0);
  const int n = g.strategy_count(1);
  std::vector<std::vector<Rational>> r(m + 1, std::vector<Rational>(n + 1, Rational(0)));
  std::vector<std::vector<Rational>> c(m + 1, std::vector<Rational>(n + 1, Rational(0)));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < n; ++j) {
      r[i][j] = g.row_util(i, j);
      c[i][j] = g.col_util(i, j);
    }
  // New column: rewards rows whose original column-player row is all zero.
  for (int i = 0; i < m; ++i) {
    bool zero_row_of_c = true;
    for (int j = 0; j < n; ++j)
      if (!g.col_util(i, j).is_zero()) zero_row_of_c = false;
    r[i][n] = Rational(zero_row_of_c ? 0 : 1);
    c[i][n] = Rational(zero_row_of_c ? 1 : 0);
  }
  // New row: rewards columns that were all-zero for the row player.
  for (int j = 0; j < n; ++j) {
    bool zero_col_of_r = true;
    for (int i = 0; i < m; ++i)
      if (!g.row_util(i, j).is_zero()) zero_col_of_r = false;
    r[m][j] = Rational(zero_col_of_r ? 1 : 0);
    c[m][j] = Rational(zero_col_of_r ? 0 : 1);
  }
  auto rl = g.labels(0);
  auto cl = g.labels(1);
  rl.push_back("aux");
  cl.push_back("aux");
  Game completed = Game::bimatrix(rl, cl, r, c);
  if (!check_structure(completed).pup)
    throw std::logic_error("pup_complete: completion failed to establish the property");
  return {.pure_ne = std::nullopt, .completed = std::move(completed)};
}

Game diagonal_embed(const Game& sym, const GhrLayout& layout, int k) {
  if (k < 1) throw std::invalid_argument("diagonal_embed: k must be >= 1");
  if (!sym.is_symmetric_bimatrix())
    throw std::invalid_argument("diagonal_embed: symmetric game required");
  if (!layout.has_literal_roles())
    throw std::invalid_argument("diagonal_embed: layout lacks literal roles");
  const int t = sym.strategy_count(0);
  std::vector<std::vector<Rational>> r(t + k, std::vector<Rational>(t + k, Rational(0)));
  std::vector<std::vector<Rational>> c(t + k, std::vector<Rational>(t + k, Rational(0)));
  for (int i = 0; i < t; ++i)
    for (int j = 0; j < t; ++j) {
      r[i][j] = sym.row_util(i, j);
      c[i][j] = sym.col_util(i, j);
    }
  for (int s = 0; s < t; ++s) {
    if (layout.is_literal(s)) continue;  // literals tie with the new block at zero
    for (int d = 0; d < k; ++d) {
      r[s][t + d] = Rational(0);
      c[s][t + d] = Rational(1);
      r[t + d][s] = Rational(1);
      c[t + d][s] = Rational(0);
    }
  }
  for (int a = 0; a < k; ++a)
    for (int b = 0; b < k; ++b) {
      r[t + a][t + b] = Rational(a <= b ? 1 : 0);
      c[t + a][t + b] = Rational(b <= a ? 1 : 0);
    }
  auto labels = sym.labels(0);
  for (int d = 1; d <= k; ++d) labels.push_back("diag:" + std::to_string(d));
  Game out = Game::bimatrix(labels, labels, r, c);
  if (!out.is_symmetric_bimatrix()) throw std::logic_error("diagonal_embed: output not symmetric");
  return out;
}

}  // namespace winlose
