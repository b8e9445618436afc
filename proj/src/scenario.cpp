#include "winlose/scenario.hpp"

#include <algorithm>
#include <stdexcept>

#include "winlose/enumerate.hpp"
#include "winlose/gadgets.hpp"
#include "winlose/property.hpp"
#include "winlose/reduction.hpp"
#include "winlose/symmetrize.hpp"

namespace winlose {

ScenarioId ScenarioId::parse(const std::string& name, int k) {
  if (name == "group1") return {kGroup1, 0};
  if (name == "group2") return {kGroup2, 0};
  if (name == "group3") return {kGroup3, 0};
  if (name == "group4") return {kGroup4, k};
  if (name == "symmetric-nash-witness") return {kSymmetricNashWitness, 0};
  if (name == "rational-nash-witness") return {kRationalNashWitness, 0};
  throw std::invalid_argument("unknown scenario '" + name + "'");
}

std::string ScenarioId::name() const {
  switch (kind) {
    case kGroup1: return "group1";
    case kGroup2: return "group2";
    case kGroup3: return "group3";
    case kGroup4: return "group4[k=" + std::to_string(k) + "]";
    case kSymmetricNashWitness: return "symmetric-nash-witness";
    case kRationalNashWitness: return "rational-nash-witness";
  }
  return "?";
}

namespace {

std::vector<std::uint32_t> satisfying_assignments(const CnfFormula& f) {
  std::vector<std::uint32_t> out;
  for (std::uint32_t g = 0; g < (1u << f.var_count); ++g)
    if (eval_formula(f, g)) out.push_back(g);
  return out;
}

struct MixFamilies {
  std::vector<Profile> gadget_based;   // mixtures built from gadget equilibria only
  std::vector<Profile> lit_lit;        // ordered pairs of literal equilibria
  std::vector<Profile> lit_sym;        // the symmetric diagonal sigma * sigma subset
  std::vector<Profile> null_lit;       // both outputs of (null, literal equilibrium)
  std::vector<Profile> gadget_lit;     // both orders of gadget x literal mixtures
};

// All balanced-mixture candidates over the symmetrization of `game`, built
// from embedded gadget equilibria and literal equilibria.
MixFamilies build_families(const Game& game, const std::vector<Profile>& gadget_eq,
                           const std::vector<Profile>& literal_eq) {
  MixFamilies fam;
  for (const Profile& a : gadget_eq)
    for (const Profile& b : gadget_eq)
      fam.gadget_based.push_back(balanced_mixture(game, {a, b}).first);
  for (const Profile& a : gadget_eq) {
    auto [x, y] = balanced_mixture(game, {std::nullopt, a});
    fam.gadget_based.push_back(x);
    fam.gadget_based.push_back(y);
  }
  for (const Profile& a : literal_eq)
    for (const Profile& b : literal_eq) {
      Profile mix = balanced_mixture(game, {a, b}).first;
      if (a == b) fam.lit_sym.push_back(mix);
      fam.lit_lit.push_back(std::move(mix));
    }
  for (const Profile& a : literal_eq) {
    auto [x, y] = balanced_mixture(game, {std::nullopt, a});
    fam.null_lit.push_back(x);
    fam.null_lit.push_back(y);
  }
  for (const Profile& g : gadget_eq)
    for (const Profile& l : literal_eq) {
      fam.gadget_lit.push_back(balanced_mixture(game, {g, l}).first);
      fam.gadget_lit.push_back(balanced_mixture(game, {l, g}).first);
    }
  return fam;
}

bool all_nash(const Game& g, const std::vector<Profile>& ps) {
  for (const auto& p : ps)
    if (!is_nash(g, p).is_nash) return false;
  return true;
}

bool none_nash(const Game& g, const std::vector<Profile>& ps) {
  for (const auto& p : ps)
    if (is_nash(g, p).is_nash) return false;
  return true;
}

bool utilities_equal(const Game& g, const std::vector<Profile>& ps, const Rational& v) {
  for (const auto& p : ps)
    for (int i = 0; i < g.players(); ++i)
      if (!(expected_utility(g, p, i) == v)) return false;
  return true;
}

bool support_sizes_equal(const std::vector<Profile>& ps, int want) {
  for (const auto& p : ps)
    for (int i = 0; i < p.players(); ++i)
      if (static_cast<int>(p.support(i).size()) != want) return false;
  return true;
}

bool max_prob_at_most(const Game& g, const std::vector<Profile>& ps, const Rational& v) {
  for (const auto& p : ps)
    if (!evaluate_property(g, p, MaxProbAtMost{v})) return false;
  return true;
}

bool all_uniform(const Game& g, const std::vector<Profile>& ps, bool want_uniform) {
  for (const auto& p : ps)
    if (evaluate_property(g, p, Uniform{}) != want_uniform) return false;
  return true;
}

bool supports_within(const std::vector<Profile>& ps, int lo1, int hi1, int lo2, int hi2) {
  // Union of the two half-open index ranges.
  for (const auto& p : ps)
    for (int i = 0; i < p.players(); ++i)
      for (int s : p.support(i))
        if (!((s >= lo1 && s < hi1) || (s >= lo2 && s < hi2))) return false;
  return true;
}

bool pairwise_distinct(const std::vector<Profile>& ps) {
  for (std::size_t i = 0; i < ps.size(); ++i)
    for (std::size_t j = i + 1; j < ps.size(); ++j)
      if (ps[i] == ps[j]) return false;
  return true;
}

std::vector<Profile> concat(std::vector<Profile> a, const std::vector<Profile>& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

// Shared core for the two cyclic-gadget scenarios: group1 uses h = 1,
// group3 uses h = 2n + 1.
void run_cyclic_group(Report& rep, const CnfFormula& formula, int h, const ScenarioOptions& opt) {
  const int n = formula.var_count;
  const Game gadget = build_gadget({GadgetId::kG1, h});
  auto [game, layout] = build_reduction(gadget, formula);
  auto [sym, ghr] = ghr_symmetrize(game);

  EnumerationResult gres = enumerate_ne_bimatrix(gadget, {.jobs = opt.jobs});
  rep.add("gadget oracle: unique equilibrium", !gres.degenerate && gres.equilibria.size() == 1);
  std::vector<Profile> gadget_eq;
  for (const Profile& e : gres.equilibria) gadget_eq.push_back(embed_gadget_profile(layout, e));

  const auto sats = satisfying_assignments(formula);
  std::vector<Profile> literal_eq;
  for (std::uint32_t gm : sats) literal_eq.push_back(literal_equilibrium(layout, gm));

  MixFamilies fam = build_families(game, gadget_eq, literal_eq);

  rep.add("gadget mixtures are equilibria of the symmetrization",
          all_nash(sym, fam.gadget_based), std::to_string(fam.gadget_based.size()) + " profiles");

  const int m = layout.special_count(0);
  const int lit_lo = layout.literal_begin(0);
  const int lit_hi = lit_lo + 2 * n;

  if (sats.empty()) {
    rep.add("formula unsatisfiable: gadget mixtures are the whole candidate set", true,
            std::to_string(fam.gadget_based.size()) + " = 3 mixtures");
    bool umin = true, umax = true, tmin = true, tmax = true;
    bool smin = true, smax = true, within = true, probs = true, unif = true;
    for (const Profile& p : fam.gadget_based) {
      if (!evaluate_property(sym, p, MinUtilityAtLeast{Rational(1, 2 * h)})) umin = false;
      if (!evaluate_property(sym, p, MaxUtilityAtMost{Rational(1, h)})) umax = false;
      if (!evaluate_property(sym, p, TotalUtilityAtLeast{Rational(1, h)})) tmin = false;
      if (!evaluate_property(sym, p, TotalUtilityAtMost{Rational(2, h)})) tmax = false;
      if (!evaluate_property(sym, p, SupportSizeAtLeast{h})) smin = false;
      if (!evaluate_property(sym, p, SupportSizeAtMost{2 * h})) smax = false;
      if (!supports_within({p}, 0, layout.gadget_counts[0], m, m + layout.gadget_counts[1]))
        within = false;
      for (int i = 0; i < 2; ++i)
        for (int s : p.support(i))
          if (p.dist[i][s] < Rational(1, 2 * h)) probs = false;
      if (!evaluate_property(sym, p, Uniform{})) unif = false;
    }
    rep.add("utilities within [1/(2h), 1/h]", umin && umax);
    rep.add("total utilities within [1/h, 2/h]", tmin && tmax);
    rep.add("supports inside the gadget blocks, size within [h, 2h]", smin && smax && within);
    rep.add("all supported probabilities >= 1/(2h)", probs);
    rep.add("all candidates uniform", unif);
    if (h > 2 * n)
      rep.add("contrast thresholds: utilities <= 1/h < 1/(2n), supports >= h > 2n",
              Rational(1, h) < Rational(1, 2 * n) && h > 2 * n);
    return;
  }

  rep.add("formula satisfiable: #phi = " + std::to_string(sats.size()), true);
  rep.add("literal x literal mixtures are equilibria", all_nash(sym, fam.lit_lit),
          std::to_string(fam.lit_lit.size()) + " profiles");
  rep.add("literal x literal utilities exactly 1/n",
          utilities_equal(sym, fam.lit_lit, Rational(1, n)));
  rep.add("literal x literal supports exactly 2n", support_sizes_equal(fam.lit_lit, 2 * n));
  rep.add("literal x literal supports inside L and L'",
          supports_within(fam.lit_lit, lit_lo, lit_hi, m + lit_lo, m + lit_hi));
  rep.add("literal x literal mixtures uniform", all_uniform(sym, fam.lit_lit, true));

  rep.add("null x literal mixtures are equilibria", all_nash(sym, fam.null_lit),
          std::to_string(fam.null_lit.size()) + " profiles");
  rep.add("null x literal utilities exactly 2/n",
          utilities_equal(sym, fam.null_lit, Rational(2, n)));
  rep.add("null x literal supports exactly n", support_sizes_equal(fam.null_lit, n));

  const Rational mixed_val(2, n + 2 * h);
  rep.add("gadget x literal mixtures are equilibria", all_nash(sym, fam.gadget_lit),
          std::to_string(fam.gadget_lit.size()) + " profiles");
  rep.add("gadget x literal utilities exactly 2/(n+2h) = " + mixed_val.str(),
          utilities_equal(sym, fam.gadget_lit, mixed_val));
  rep.add("gadget x literal supports exactly n+h", support_sizes_equal(fam.gadget_lit, n + h));
  rep.add("gadget x literal max probability 2/(n+2h)",
          max_prob_at_most(sym, fam.gadget_lit, mixed_val));
  rep.add("gadget x literal mixtures non-uniform", all_uniform(sym, fam.gadget_lit, false));
  rep.add("max probability of every literal-based mixture <= 1/2",
          max_prob_at_most(sym, concat(fam.lit_lit, fam.null_lit), Rational(1, 2)));
}

void run_group2(Report& rep, const CnfFormula& formula, const ScenarioOptions& opt) {
  const Game gadget = build_gadget({GadgetId::kG3, 0});
  auto [game, layout] = build_reduction(gadget, formula);
  auto [sym, ghr] = ghr_symmetrize(game);

  const auto uniform_scan = enumerate_uniform_ne(gadget, {.max_strategies = 20, .jobs = opt.jobs});
  rep.add("gadget has no uniform equilibrium (225 support pairs)", uniform_scan.empty());

  EnumerationResult gres = enumerate_ne_bimatrix(gadget, {.jobs = opt.jobs});
  rep.add("gadget oracle non-degenerate", !gres.degenerate,
          std::to_string(gres.equilibria.size()) + " gadget equilibria");
  std::vector<Profile> gadget_eq;
  for (const Profile& e : gres.equilibria) gadget_eq.push_back(embed_gadget_profile(layout, e));

  const auto sats = satisfying_assignments(formula);
  std::vector<Profile> literal_eq;
  for (std::uint32_t gm : sats) literal_eq.push_back(literal_equilibrium(layout, gm));

  MixFamilies fam = build_families(game, gadget_eq, literal_eq);
  rep.add("gadget mixtures are equilibria of the symmetrization",
          all_nash(sym, fam.gadget_based));
  rep.add("no gadget-based candidate is uniform", all_uniform(sym, fam.gadget_based, false),
          std::to_string(fam.gadget_based.size()) + " candidates");

  if (sats.empty()) {
    rep.add("formula unsatisfiable: candidate set has no uniform profile", true);
    return;
  }
  rep.add("formula satisfiable: #phi = " + std::to_string(sats.size()), true);
  rep.add("literal x literal mixtures are uniform equilibria",
          all_nash(sym, fam.lit_lit) && all_uniform(sym, fam.lit_lit, true),
          std::to_string(fam.lit_lit.size()) + " profiles");
}

void run_group4(Report& rep, const CnfFormula& formula, int k, const ScenarioOptions& opt) {
  const Game gadget = build_gadget({GadgetId::kG1, 2});
  auto [game, layout] = build_reduction(gadget, formula);
  auto [sym, plain] = ghr_symmetrize(game);
  const GhrLayout ghr = ghr_layout_for_reduction(layout, plain);
  const Game embedded = diagonal_embed(sym, ghr, k);
  const int t = sym.strategy_count(0);

  // The k diagonal profiles are always equilibria with the top utility pair.
  bool diag_ok = true, diag_topmost = true, diag_sym = true, diag_undominated = true;
  std::vector<Profile> diag;
  for (int d = 0; d < k; ++d) {
    const std::vector<int> s = {t + d, t + d};
    Profile p = pure_profile(embedded, s);
    if (!is_nash(embedded, p).is_nash) diag_ok = false;
    if (!(expected_utility(embedded, p, 0) == Rational(1) &&
          expected_utility(embedded, p, 1) == Rational(1)))
      diag_topmost = false;
    if (!evaluate_property(embedded, p, SymmetricProfile{})) diag_sym = false;
    if (evaluate_property(embedded, p, PureParetoDominated{}) ||
        evaluate_property(embedded, p, PureStrongParetoDominated{}))
      diag_undominated = false;
    diag.push_back(std::move(p));
  }
  rep.add("k diagonal profiles are equilibria", diag_ok, "k = " + std::to_string(k));
  rep.add("diagonal equilibria have utility vector (1,1)", diag_topmost);
  rep.add("diagonal equilibria symmetric", diag_sym);
  rep.add("diagonal equilibria Pareto- and strongly-Pareto-optimal (no pure dominator)",
          diag_undominated);

  EnumerationResult gres = enumerate_ne_bimatrix(gadget, {.jobs = opt.jobs});
  rep.add("gadget oracle: unique equilibrium with utility 1/2",
          !gres.degenerate && gres.equilibria.size() == 1 &&
              expected_utility(gadget, gres.equilibria.front(), 0) == Rational(1, 2));
  std::vector<Profile> gadget_eq;
  for (const Profile& e : gres.equilibria) gadget_eq.push_back(embed_gadget_profile(layout, e));

  const auto sats = satisfying_assignments(formula);
  std::vector<Profile> literal_eq;
  for (std::uint32_t gm : sats) literal_eq.push_back(literal_equilibrium(layout, gm));
  MixFamilies fam = build_families(game, gadget_eq, literal_eq);

  auto widen = [&](const std::vector<Profile>& ps) {
    // Profiles over the symmetrization extend with zero mass on the diagonal
    // block.
    std::vector<Profile> out;
    for (const Profile& p : ps) {
      Profile w = p;
      for (auto& d : w.dist) d.resize(t + k, Rational(0));
      out.push_back(std::move(w));
    }
    return out;
  };

  const auto gadget_based_w = widen(fam.gadget_based);
  rep.add("gadget mixtures are equilibria before the diagonal block",
          all_nash(sym, fam.gadget_based));
  rep.add("gadget mixtures destroyed by the diagonal block", none_nash(embedded, gadget_based_w),
          std::to_string(gadget_based_w.size()) + " profiles all refuted");

  if (sats.empty()) {
    rep.add("formula unsatisfiable: only the k diagonal equilibria verified", true);
    return;
  }

  const auto lit_lit_w = widen(fam.lit_lit);
  const auto null_lit_w = widen(fam.null_lit);
  const auto lit_sym_w = widen(fam.lit_sym);
  const std::size_t phi = sats.size();
  rep.add("formula satisfiable: #phi = " + std::to_string(phi), true);
  rep.add("literal-based mixtures survive the diagonal block",
          all_nash(embedded, lit_lit_w) && all_nash(embedded, null_lit_w),
          std::to_string(lit_lit_w.size() + null_lit_w.size()) + " profiles");

  std::size_t sym_count = 0, nonsym_count = 0;
  for (const auto& p : concat(lit_lit_w, null_lit_w)) {
    if (evaluate_property(embedded, p, SymmetricProfile{}))
      ++sym_count;
    else
      ++nonsym_count;
  }
  rep.add("#phi symmetric constructed equilibria", sym_count == phi,
          std::to_string(sym_count) + " vs " + std::to_string(phi));
  rep.add("#phi*(#phi+1) non-symmetric constructed equilibria",
          nonsym_count == phi * (phi + 1),
          std::to_string(nonsym_count) + " vs " + std::to_string(phi * (phi + 1)));
  rep.add("constructed equilibria pairwise distinct",
          pairwise_distinct(concat(concat(lit_lit_w, null_lit_w), diag)));
  bool dominated = true;
  for (const auto& p : concat(lit_lit_w, null_lit_w)) {
    if (!evaluate_property(embedded, p, PureParetoDominated{})) dominated = false;
    if (!evaluate_property(embedded, p, PureStrongParetoDominated{})) dominated = false;
  }
  rep.add("every literal-based mixture Pareto-refuted by a diagonal witness", dominated);
  rep.add("symmetric diagonal subset matches sigma*sigma mixtures", lit_sym_w.size() == phi);
}

void run_symmetric_witness(Report& rep, const CnfFormula& formula, const ScenarioOptions& opt) {
  const Game gadget = build_gadget({GadgetId::kG4, 0});
  auto [game, layout] = build_reduction(gadget, formula);

  EnumerationResult gres = enumerate_ne_bimatrix(gadget, {.jobs = opt.jobs});
  rep.add("gadget oracle non-degenerate", !gres.degenerate);
  bool embeds = true, none_symmetric = true;
  for (const Profile& e : gres.equilibria) {
    const Profile emb = embed_gadget_profile(layout, e);
    if (!is_nash(game, emb).is_nash) embeds = false;
    if (evaluate_property(game, emb, SymmetricProfile{})) none_symmetric = false;
  }
  rep.add("gadget equilibria embed", embeds,
          std::to_string(gres.equilibria.size()) + " profiles");
  rep.add("no embedded gadget equilibrium is symmetric", none_symmetric);

  const auto sats = satisfying_assignments(formula);
  bool equiv = true, symmetric = true;
  for (std::uint32_t gm = 0; gm < (1u << formula.var_count); ++gm) {
    const Profile p = literal_equilibrium(layout, gm);
    if (is_nash(game, p).is_nash != eval_formula(formula, gm)) equiv = false;
    if (!evaluate_property(game, p, SymmetricProfile{})) symmetric = false;
  }
  rep.add("literal profile accepted exactly for satisfying assignments", equiv);
  rep.add("literal profiles are symmetric", symmetric);
  rep.add(sats.empty() ? "unsatisfiable: no symmetric equilibrium among candidates"
                       : "satisfiable: symmetric equilibrium witnessed",
          true, "#phi = " + std::to_string(sats.size()));
}

void run_rational_witness(Report& rep, const CnfFormula& formula, const ScenarioOptions& opt) {
  (void)opt;
  const Game gadget = build_gadget({GadgetId::kG2, 0});
  auto [game, layout] = build_reduction(gadget, formula);

  const QuadProfile closed = embed_gadget_profile(layout, g2_closed_form_equilibrium());
  rep.add("irrational gadget equilibrium verified over Q(sqrt5)",
          is_nash(game, closed).is_nash);
  rep.add("gadget equilibrium is irrational",
          !evaluate_property(game, closed, RationalProfile{}));

  const auto sats = satisfying_assignments(formula);
  bool equiv = true;
  std::vector<Profile> accepted;
  for (std::uint32_t gm = 0; gm < (1u << formula.var_count); ++gm) {
    const Profile p = literal_equilibrium(layout, gm);
    const bool nash = is_nash(game, p).is_nash;
    if (nash != eval_formula(formula, gm)) equiv = false;
    if (nash) accepted.push_back(p);
  }
  rep.add("literal profile accepted exactly for satisfying assignments", equiv);
  rep.add("accepted rational equilibria in bijection with satisfying assignments",
          accepted.size() == sats.size() && pairwise_distinct(accepted),
          std::to_string(accepted.size()) + " accepted, #phi = " + std::to_string(sats.size()));
  bool rational = true;
  for (const auto& p : accepted)
    if (!evaluate_property(game, p, RationalProfile{})) rational = false;
  rep.add("accepted equilibria are rational", rational);
}

}  // namespace

Report run_scenario(const ScenarioId& id, const CnfFormula& formula, const ScenarioOptions& opt) {
  validate_3sat(formula, /*require_distinct=*/true);
  if (formula.var_count > 14)
    throw std::invalid_argument("scenario: assignment sweep capped at n <= 14");
  Report rep;
  rep.title = "scenario " + id.name() + " (constructive verification, n=" +
              std::to_string(formula.var_count) + ")";
  switch (id.kind) {
    case ScenarioId::kGroup1:
      run_cyclic_group(rep, formula, 1, opt);
      break;
    case ScenarioId::kGroup2:
      run_group2(rep, formula, opt);
      break;
    case ScenarioId::kGroup3:
      run_cyclic_group(rep, formula, 2 * formula.var_count + 1, opt);
      break;
    case ScenarioId::kGroup4:
      run_group4(rep, formula, id.k, opt);
      break;
    case ScenarioId::kSymmetricNashWitness:
      run_symmetric_witness(rep, formula, opt);
      break;
    case ScenarioId::kRationalNashWitness:
      run_rational_witness(rep, formula, opt);
      break;
  }
  return rep;
}

}  // namespace winlose
