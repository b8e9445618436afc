#include "winlose/reduction.hpp"

#include <omp.h>

#include <algorithm>
#include <array>
#include <stdexcept>

#include "winlose/enumerate.hpp"

namespace winlose {

int ReductionLayout::pair_var_index(int player, int i, int j) const {
  if (i == j || i < 0 || j < 0 || i >= n || j >= n)
    throw std::invalid_argument("pair_var_index: bad pair");
  // Ordered pairs (i, j), i != j, lexicographic: row i holds n-1 entries.
  const int col = j < i ? j : j - 1;
  return pair_var_begin(player) + i * (n - 1) + col;
}

ReductionLayout::RoleInfo ReductionLayout::role_of(int player, int index) const {
  if (index < 0 || index >= strategy_count(player))
    throw std::invalid_argument("role_of: index out of range");
  if (index < gadget_counts[player]) return {Role::kGadget, index};
  if (!special(player)) return {Role::kDelta};
  int off = index - literal_begin(player);
  if (off < 2 * n) return {Role::kLiteral, off / 2, 0, (off & 1) != 0};
  off -= 2 * n;
  if (off < clause_count) return {Role::kClause, off};
  off -= clause_count;
  const int i = off / (n - 1);
  int j = off % (n - 1);
  if (j >= i) ++j;
  return {Role::kPairVar, i, j};
}

int cyclic_index_diff(int from, int to, int n) {
  if (n < 1) throw std::invalid_argument("cyclic_index_diff: n must be positive");
  return ((to - from) % n + n) % n;
}

namespace {

int to_dimacs(int var, bool neg) { return neg ? -(var + 1) : (var + 1); }

bool clause_contains(const std::vector<int>& clause, int dimacs_lit) {
  return std::find(clause.begin(), clause.end(), dimacs_lit) != clause.end();
}

std::vector<Rational> mark_winners(int r, std::span<const int> winners) {
  std::vector<Rational> u(r, Rational(0));
  for (int w : winners) u[w] = Rational(1);
  return u;
}

// Cases (1)-(6) reward every non-special player; the special winners vary.
std::vector<Rational> specials_and_bystanders(int r, int special_winner) {
  std::vector<Rational> u(r, Rational(0));
  if (special_winner >= 0) u[special_winner] = Rational(1);
  for (int i = 2; i < r; ++i) u[i] = Rational(1);
  return u;
}

}  // namespace

CaseUtility reduction_utility(const ReductionLayout& layout, const Game& gadget,
                              const CnfFormula& formula, std::span<const int> profile) {
  const int r = layout.players;
  if (static_cast<int>(profile.size()) != r)
    throw std::invalid_argument("reduction_utility: wrong profile arity");
  using Role = ReductionLayout::Role;
  std::vector<ReductionLayout::RoleInfo> roles(r);
  std::vector<int> gadget_players;
  for (int i = 0; i < r; ++i) {
    roles[i] = layout.role_of(i, profile[i]);
    if (roles[i].role == Role::kGadget) gadget_players.push_back(i);
  }

  if (static_cast<int>(gadget_players.size()) == r) {
    std::vector<int> inner(profile.begin(), profile.end());
    std::vector<Rational> u(r);
    for (int i = 0; i < r; ++i) u[i] = gadget.utility(inner, i);
    return {std::move(u), "7"};
  }
  if (gadget_players.size() > 1) return {mark_winners(r, gadget_players), "8"};
  if (gadget_players.size() == 1) {
    const int i = gadget_players.front();
    if (i >= 2) return {mark_winners(r, std::array{i}), "9"};
    const auto& other = roles[1 - i];
    const bool gate = (other.role == Role::kLiteral && other.a <= 1) ||
                      other.role == Role::kClause || other.role == Role::kPairVar;
    if (gate) return {mark_winners(r, std::array{i}), "10"};
    return {std::vector<Rational>(r, Rational(0)), "11"};
  }

  // Nobody plays a gadget strategy: the non-special players all sit on their
  // extra strategy, and the two special players' roles decide the case.
  const auto& a = roles[0];
  const auto& b = roles[1];
  if (a.role == Role::kLiteral && b.role == Role::kLiteral) {
    if (a.a == b.a && a.neg != b.neg) return {specials_and_bystanders(r, -1), "1"};
    const int d = cyclic_index_diff(a.a, b.a, layout.n);
    if (d <= 1) return {specials_and_bystanders(r, 0), "2"};
    if (d <= 3) return {specials_and_bystanders(r, 1), "3"};
    return {specials_and_bystanders(r, -1), "4"};
  }
  if (a.role == Role::kPairVar && b.role == Role::kLiteral && (b.a == a.a || b.a == a.b))
    return {specials_and_bystanders(r, 0), "5a"};
  if (a.role == Role::kLiteral && b.role == Role::kPairVar && (a.a == b.a || a.a == b.b))
    return {specials_and_bystanders(r, 1), "5b"};
  if (a.role == Role::kClause && b.role == Role::kLiteral &&
      clause_contains(formula.clauses[a.a], to_dimacs(b.a, !b.neg)))
    return {specials_and_bystanders(r, 0), "6a"};
  if (a.role == Role::kLiteral && b.role == Role::kClause &&
      clause_contains(formula.clauses[b.a], to_dimacs(a.a, !a.neg)))
    return {specials_and_bystanders(r, 1), "6b"};
  return {std::vector<Rational>(r, Rational(0)), "11"};
}

std::pair<Game, ReductionLayout> build_reduction(const Game& gadget, const CnfFormula& formula) {
  const StructureReport s = check_structure(gadget);
  if (!s.win_lose) throw std::invalid_argument("build_reduction: gadget must be win-lose");
  if (!s.pup)
    throw std::invalid_argument("build_reduction: gadget lacks the positive utility property");
  validate_3sat(formula, /*require_distinct=*/true);
  if (formula.var_count < 4) throw std::invalid_argument("build_reduction: need n >= 4 variables");

  ReductionLayout layout;
  layout.players = gadget.players();
  layout.n = formula.var_count;
  layout.clause_count = static_cast<int>(formula.clauses.size());
  for (int i = 0; i < gadget.players(); ++i) layout.gadget_counts.push_back(gadget.strategy_count(i));

  std::vector<std::vector<std::string>> labels(layout.players);
  for (int i = 0; i < layout.players; ++i) {
    for (const auto& l : gadget.labels(i)) labels[i].push_back("gad:" + l);
    if (layout.special(i)) {
      for (int v = 0; v < layout.n; ++v) {
        labels[i].push_back("lit:+" + std::to_string(v));
        labels[i].push_back("lit:-" + std::to_string(v));
      }
      for (int c = 0; c < layout.clause_count; ++c) labels[i].push_back("cls:" + std::to_string(c));
      for (int p = 0; p < layout.n; ++p)
        for (int q = 0; q < layout.n; ++q)
          if (p != q) labels[i].push_back("var:" + std::to_string(p) + "," + std::to_string(q));
    } else {
      labels[i].push_back("delta");
    }
  }

  std::size_t cells = 1;
  for (int i = 0; i < layout.players; ++i) cells *= labels[i].size();
  std::vector<Rational> flat;
  flat.reserve(cells * layout.players);
  std::vector<int> profile(layout.players, 0);
  while (true) {
    CaseUtility cu = reduction_utility(layout, gadget, formula, profile);
    for (auto& u : cu.u) flat.push_back(std::move(u));
    int i = layout.players - 1;
    for (; i >= 0; --i) {
      if (++profile[i] < static_cast<int>(labels[i].size())) break;
      profile[i] = 0;
    }
    if (i < 0) break;
  }
  return {Game(std::move(labels), std::move(flat)), layout};
}

Profile literal_equilibrium(const ReductionLayout& layout, std::uint32_t assignment) {
  Profile p;
  p.dist.resize(layout.players);
  for (int i = 0; i < layout.players; ++i) {
    p.dist[i].assign(layout.strategy_count(i), Rational(0));
    if (layout.special(i)) {
      for (int v = 0; v < layout.n; ++v) {
        const bool var_true = (assignment >> v) & 1u;
        p.dist[i][layout.literal_index(i, v, /*negated=*/!var_true)] = Rational(1, layout.n);
      }
    } else {
      p.dist[i][layout.delta_index(i)] = Rational(1);
    }
  }
  return p;
}

namespace {

bool is_literal_family_member(const ReductionLayout& layout, const Profile& p) {
  for (std::uint32_t gamma = 0; gamma < (1u << layout.n); ++gamma)
    if (p == literal_equilibrium(layout, gamma)) return true;
  return false;
}

bool supports_within_gadget(const ReductionLayout& layout, const Profile& p) {
  for (int i = 0; i < layout.players; ++i)
    for (int s : p.support(i))
      if (s >= layout.gadget_counts[i]) return false;
  return true;
}

}  // namespace

Report reduction_equivalence_check(const Game& gadget, const CnfFormula& formula,
                                   const EquivalenceOptions& opt) {
  Report rep;
  rep.title = "reduce-check";
  auto [game, layout] = build_reduction(gadget, formula);

  const StructureReport st = check_structure(game);
  rep.add("constructed game is win-lose", st.win_lose);
  rep.add("construction preserves the positive utility property", st.pup);

  // (a) gadget equilibria embed.
  if (gadget.is_bimatrix()) {
    EnumerationResult res = enumerate_ne_bimatrix(gadget, {.jobs = opt.jobs});
    if (res.degenerate) {
      rep.add("gadget oracle non-degenerate", false);
    } else {
      bool all = true;
      for (const Profile& e : res.equilibria)
        if (!is_nash(game, embed_gadget_profile(layout, e)).is_nash) all = false;
      rep.add("all " + std::to_string(res.equilibria.size()) + " gadget equilibria embed",
              all);
    }
  } else {
    bool all = true;
    int count = 0;
    for (const PureProfile& e : enumerate_pure_ne(gadget)) {
      ++count;
      if (!is_nash(game, embed_gadget_profile(layout, pure_profile(gadget, e))).is_nash)
        all = false;
    }
    rep.add("all " + std::to_string(count) + " pure gadget equilibria embed", all);
  }

  // (b) literal profile is an equilibrium exactly for satisfying assignments,
  // and (c) every unsatisfied clause is a 3/n deviation against it.
  const std::int64_t total = 1ll << layout.n;
  const int threads = opt.jobs > 0 ? opt.jobs : omp_get_max_threads();
  std::vector<std::uint8_t> equiv_ok(total, 0);
  std::vector<std::uint8_t> deviation_ok(total, 1);
  const Rational three_over_n(3, layout.n);
#pragma omp parallel for schedule(dynamic, 8) num_threads(threads)
  for (std::int64_t gm = 0; gm < total; ++gm) {
    const auto gamma = static_cast<std::uint32_t>(gm);
    const Profile sigma = literal_equilibrium(layout, gamma);
    const bool nash = is_nash(game, sigma).is_nash;
    const bool sat = eval_formula(formula, gamma);
    equiv_ok[gm] = nash == sat ? 1 : 0;
    if (!sat) {
      bool any_unsat = false;
      bool all_exact = true;
      for (int c = 0; c < layout.clause_count; ++c) {
        bool clause_sat = false;
        for (int lit : formula.clauses[c]) {
          const bool var_true = (gamma >> (std::abs(lit) - 1)) & 1u;
          if ((lit > 0) == var_true) clause_sat = true;
        }
        if (clause_sat) continue;
        any_unsat = true;
        const Rational dev =
            conditional_utility(game, sigma, 0, layout.clause_begin(0) + c);
        if (!(dev == three_over_n)) all_exact = false;
      }
      deviation_ok[gm] = (any_unsat && all_exact) ? 1 : 0;
    }
  }
  std::int64_t equiv_bad = 0, dev_bad = 0;
  for (std::int64_t gm = 0; gm < total; ++gm) {
    if (!equiv_ok[gm]) ++equiv_bad;
    if (!deviation_ok[gm]) ++dev_bad;
  }
  rep.add("is_nash(literal profile) == satisfiability over all " + std::to_string(total) +
              " assignments",
          equiv_bad == 0, std::to_string(equiv_bad) + " mismatches");
  rep.add("unsatisfied-clause deviations earn exactly 3/n", dev_bad == 0,
          std::to_string(dev_bad) + " bad assignments");

  // (d) random profiles outside the two families never pass is_nash.
  std::int64_t false_accepts = 0;
#pragma omp parallel for schedule(dynamic, 64) num_threads(threads) \
    reduction(+ : false_accepts)
  for (int s = 0; s < opt.samples; ++s) {
    const Profile p = random_profile(game, opt.seed * 0x9e3779b97f4a7c15ull + s);
    if (!is_nash(game, p).is_nash) continue;
    if (supports_within_gadget(layout, p)) continue;
    if (is_literal_family_member(layout, p)) continue;
    ++false_accepts;
  }
  rep.add("refutation sampling (" + std::to_string(opt.samples) + " profiles)",
          false_accepts == 0, std::to_string(false_accepts) + " false accepts");
  return rep;
}

}  // namespace winlose
