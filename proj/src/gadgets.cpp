#include "winlose/gadgets.hpp"

#include <algorithm>
#include <stdexcept>

#include "winlose/enumerate.hpp"
#include "winlose/property.hpp"

namespace winlose {

GadgetId GadgetId::parse(const std::string& name, int param) {
  std::string n = name;
  std::transform(n.begin(), n.end(), n.begin(), ::tolower);
  if (n == "g1") return {kG1, param};
  if (n == "g2") return {kG2, 0};
  if (n == "g3") return {kG3, 0};
  if (n == "g4") return {kG4, 0};
  if (n == "g5") return {kG5, param};
  throw std::invalid_argument("unknown gadget '" + name + "' (expected g1..g5)");
}

std::string GadgetId::name() const {
  switch (kind) {
    case kG1: return "g1[" + std::to_string(param) + "]";
    case kG2: return "g2";
    case kG3: return "g3";
    case kG4: return "g4";
    case kG5: return "g5[" + std::to_string(param) + "]";
  }
  return "?";
}

namespace {

Game build_g1(int h) {
  if (h < 1) throw std::invalid_argument("g1: h must be >= 1");
  std::vector<std::string> labels;
  for (int i = 0; i < h; ++i) labels.push_back("s" + std::to_string(i));
  std::vector<std::vector<Rational>> r(h, std::vector<Rational>(h, Rational(0)));
  std::vector<std::vector<Rational>> c(h, std::vector<Rational>(h, Rational(0)));
  for (int i = 0; i < h; ++i) {
    r[i][i] = Rational(1);           // player 1 wins when they concur
    c[i][(i + 1) % h] = Rational(1);  // player 2 wins one step ahead
  }
  return Game::bimatrix(labels, labels, r, c);
}

Game build_g2() {
  const std::vector<std::string> two = {"0", "1"};
  const std::vector<std::string> three = {"0", "1", "2"};
  // Utility vectors by profile (s1, s2, s3), s3 fastest.
  const int table[2][2][3][3] = {
      {{{1, 0, 1}, {1, 1, 0}, {0, 1, 0}}, {{0, 1, 0}, {1, 0, 0}, {0, 0, 1}}},
      {{{0, 0, 1}, {0, 1, 1}, {1, 0, 0}}, {{1, 1, 0}, {0, 0, 1}, {1, 1, 0}}},
  };
  std::vector<Rational> flat;
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b)
      for (int c = 0; c < 3; ++c)
        for (int p = 0; p < 3; ++p) flat.emplace_back(table[a][b][c][p]);
  return Game({two, two, three}, std::move(flat));
}

Game build_g3() {
  const std::vector<std::string> labels = {"1", "2", "3", "4"};
  const int rows[4][4] = {{0, 0, 1, 1}, {0, 1, 1, 0}, {0, 1, 0, 1}, {1, 0, 0, 0}};
  std::vector<std::vector<Rational>> r(4, std::vector<Rational>(4));
  std::vector<std::vector<Rational>> c(4, std::vector<Rational>(4));
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      r[i][j] = Rational(rows[i][j]);
      c[i][j] = Rational(1 - rows[i][j]);  // one-sum
    }
  return Game::bimatrix(labels, labels, r, c);
}

Game build_g4() {
  const std::vector<std::string> labels = {"1", "2", "3"};
  const int rrows[3][3] = {{1, 0, 1}, {0, 0, 1}, {0, 1, 0}};
  const int crows[3][3] = {{0, 1, 0}, {1, 0, 0}, {1, 0, 1}};
  std::vector<std::vector<Rational>> r(3, std::vector<Rational>(3));
  std::vector<std::vector<Rational>> c(3, std::vector<Rational>(3));
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      r[i][j] = Rational(rrows[i][j]);
      c[i][j] = Rational(crows[i][j]);
    }
  return Game::bimatrix(labels, labels, r, c);
}

Game build_g5(int k) {
  if (k < 1) throw std::invalid_argument("g5: k must be >= 1");
  std::vector<std::string> labels;
  for (int i = 1; i <= k; ++i) labels.push_back(std::to_string(i));
  std::vector<std::vector<Rational>> r(k, std::vector<Rational>(k));
  std::vector<std::vector<Rational>> c(k, std::vector<Rational>(k));
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      r[i][j] = Rational(i <= j ? 1 : 0);
      c[i][j] = Rational(j <= i ? 1 : 0);
    }
  return Game::bimatrix(labels, labels, r, c);
}

}  // namespace

Game build_gadget(const GadgetId& id) {
  switch (id.kind) {
    case GadgetId::kG1: return build_g1(id.param);
    case GadgetId::kG2: return build_g2();
    case GadgetId::kG3: return build_g3();
    case GadgetId::kG4: return build_g4();
    case GadgetId::kG5: return build_g5(id.param);
  }
  throw std::logic_error("unreachable");
}

QuadProfile g2_closed_form_equilibrium() {
  const Rational half(1, 2);
  const QuadExt s1(Rational(-1, 2), half);        // (sqrt5 - 1)/2
  const QuadExt s2(Rational(3, 2), Rational(-1, 2));  // (3 - sqrt5)/2
  const QuadExt t0(Rational(1, 8), Rational(1, 8));   // (1 + sqrt5)/8
  const QuadExt t1(Rational(5, 8), Rational(-1, 8));  // (5 - sqrt5)/8
  const QuadExt t2(Rational(1, 4));
  QuadProfile p;
  p.dist = {{s1, QuadExt(1) - s1}, {s2, QuadExt(1) - s2}, {t0, t1, t2}};
  return p;
}

namespace {

bool fully_mixed(const Game& g, const Profile& p) {
  for (int i = 0; i < g.players(); ++i)
    if (static_cast<int>(p.support(i).size()) != g.strategy_count(i)) return false;
  return true;
}

void verify_common(Report& rep, const Game& g) {
  const StructureReport s = check_structure(g);
  rep.add("win-lose", s.win_lose);
  rep.add("positive utility property", s.pup);
}

}  // namespace

Report verify_gadget(const GadgetId& id, const GadgetVerifyOptions& opt) {
  Report rep;
  rep.title = "gadget-verify " + id.name();
  const Game g = build_gadget(id);
  verify_common(rep, g);

  switch (id.kind) {
    case GadgetId::kG1: {
      const int h = id.param;
      EnumerationResult res = enumerate_ne_bimatrix(g, {.jobs = opt.jobs});
      rep.add("oracle non-degenerate", !res.degenerate);
      rep.add("exactly one equilibrium", res.equilibria.size() == 1,
              std::to_string(res.equilibria.size()) + " found");
      if (res.equilibria.size() == 1) {
        const Profile& e = res.equilibria.front();
        rep.add("fully mixed", fully_mixed(g, e));
        rep.add("uniform", evaluate_property(g, e, Uniform{}));
        const Rational want(1, h);
        rep.add("utilities exactly 1/h", expected_utility(g, e, 0) == want &&
                                             expected_utility(g, e, 1) == want);
        if (h == 1) {
          // Utility 1 for everyone is the top of a win-lose game, so the
          // equilibrium is Pareto-optimal and strongly so; the pure-witness
          // refutations must come back empty.
          rep.add("h=1: no pure Pareto dominator",
                  !evaluate_property(g, e, PureParetoDominated{}) &&
                      !evaluate_property(g, e, PureStrongParetoDominated{}));
        }
      }
      break;
    }
    case GadgetId::kG2: {
      rep.add("no pure equilibrium (12 profiles refuted)", enumerate_pure_ne(g).empty());
      const QuadProfile closed = g2_closed_form_equilibrium();
      rep.add("closed-form profile accepted over Q(sqrt5)", is_nash(g, closed).is_nash);
      rep.add("closed-form profile is irrational",
              !evaluate_property(g, closed, RationalProfile{}));
      int bad = 0;
      for (int s = 0; s < opt.g2_samples; ++s) {
        const Profile p = random_profile(g, opt.seed * 0x9e3779b97f4a7c15ull + s);
        if (is_nash(g, p).is_nash) ++bad;
      }
      rep.add("rational sampling refutation", bad == 0,
              std::to_string(opt.g2_samples) + " samples, " + std::to_string(bad) +
                  " false accepts");
      break;
    }
    case GadgetId::kG3: {
      const auto uniform = enumerate_uniform_ne(g, {.max_strategies = 20, .jobs = opt.jobs});
      rep.add("no uniform equilibrium (225 support pairs scanned)", uniform.empty(),
              std::to_string(uniform.size()) + " uniform equilibria");
      EnumerationResult res = enumerate_ne_bimatrix(g, {.jobs = opt.jobs});
      rep.add("oracle non-degenerate", !res.degenerate);
      rep.add("has some equilibrium", !res.equilibria.empty(),
              std::to_string(res.equilibria.size()) + " found");
      bool one_sum = true;
      for (int i = 0; i < 4 && one_sum; ++i)
        for (int j = 0; j < 4 && one_sum; ++j)
          if (!(g.row_util(i, j) + g.col_util(i, j) == Rational(1))) one_sum = false;
      rep.add("one-sum", one_sum);
      break;
    }
    case GadgetId::kG4: {
      rep.add("not a symmetric game as a matrix pair", !g.is_symmetric_bimatrix());
      rep.add("no pure equilibrium", enumerate_pure_ne(g).empty());
      // The equilibrium set of this gadget is positive-dimensional (a whole
      // segment of mixes against (1/2, 0, 1/2)), so the counting oracle is
      // expected to flag degeneracy; existence and the absence of a
      // same-strategy equilibrium are checked exactly instead.
      EnumerationResult res = enumerate_ne_bimatrix(g, {.jobs = opt.jobs});
      rep.add("oracle flags the positive-dimensional equilibrium set", res.degenerate);
      const auto witness = find_one_equilibrium(g);
      rep.add("constructive equilibrium witness", witness.has_value() &&
                                                      is_nash(g, *witness).is_nash);
      if (witness)
        rep.add("witness is non-symmetric",
                evaluate_property(g, *witness, NonSymmetricProfile{}));
      const auto sym_eq = find_symmetric_profile_equilibrium(g);
      rep.add("no symmetric equilibrium (7 same-support polytopes all empty)",
              !sym_eq.has_value());
      break;
    }
    case GadgetId::kG5: {
      const int k = id.param;
      rep.add("symmetric game", g.is_symmetric_bimatrix());
      EnumerationResult res = enumerate_ne_bimatrix(g, {.jobs = opt.jobs});
      rep.add("oracle non-degenerate", !res.degenerate);
      rep.add("exactly k equilibria", static_cast<int>(res.equilibria.size()) == k,
              std::to_string(res.equilibria.size()) + " found, k=" + std::to_string(k));
      bool all_good = true;
      for (const Profile& e : res.equilibria) {
        const bool pure = e.support(0).size() == 1 && e.support(1).size() == 1;
        const bool sym = evaluate_property(g, e, SymmetricProfile{});
        const bool ones = expected_utility(g, e, 0) == Rational(1) &&
                          expected_utility(g, e, 1) == Rational(1);
        const bool undominated = !evaluate_property(g, e, PureParetoDominated{});
        if (!(pure && sym && ones && undominated)) all_good = false;
      }
      rep.add("all pure, symmetric, utility (1,1), undominated", all_good);
      const EnumerationResult sres = enumerate_symmetric_ne(g, {.jobs = opt.jobs});
      rep.add("symmetric scan agrees", !sres.degenerate &&
                                           static_cast<int>(sres.equilibria.size()) == k);
      break;
    }
  }
  return rep;
}

}  // namespace winlose
