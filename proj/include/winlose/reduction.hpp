#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "winlose/game.hpp"
#include "winlose/report.hpp"
#include "winlose/sat.hpp"

namespace winlose {

// Strategy-space layout of the constructed game. The two special players
// (indices 0 and 1) play gadget strategies, literals, clauses and pair
// variables; everyone else plays gadget strategies plus one extra strategy.
// Literals are laid out as +0, -0, +1, -1, ...; pair variables as the
// ordered pairs (i, j), i != j, in lexicographic order.
struct ReductionLayout {
  int players = 2;
  int n = 0;             // variable count
  int clause_count = 0;
  std::vector<int> gadget_counts;

  bool special(int player) const { return player < 2; }

  int literal_begin(int player) const { return gadget_counts[player]; }
  int literal_index(int player, int var, bool negated) const {
    return literal_begin(player) + 2 * var + (negated ? 1 : 0);
  }
  int clause_begin(int player) const { return literal_begin(player) + 2 * n; }
  int pair_var_begin(int player) const { return clause_begin(player) + clause_count; }
  int pair_var_index(int player, int i, int j) const;
  int special_count(int player) const { return pair_var_begin(player) + n * (n - 1); }

  int delta_index(int player) const { return gadget_counts[player]; }
  int nonspecial_count(int player) const { return gadget_counts[player] + 1; }

  int strategy_count(int player) const {
    return special(player) ? special_count(player) : nonspecial_count(player);
  }

  enum class Role { kGadget, kLiteral, kClause, kPairVar, kDelta };
  struct RoleInfo {
    Role role;
    int a = 0;      // gadget index / literal variable / clause index / pair i
    int b = 0;      // pair j
    bool neg = false;
  };
  RoleInfo role_of(int player, int index) const;
};

// Cyclic difference on variable indices: (to - from) mod n, valued in [0, n).
int cyclic_index_diff(int from, int to, int n);

struct CaseUtility {
  std::vector<Rational> u;
  std::string case_id;  // "1".."4", "5a", "5b", "6a", "6b", "7".."11"
};

// Classifies a pure profile into exactly one of the construction's cases and
// returns its utility vector.
CaseUtility reduction_utility(const ReductionLayout& layout, const Game& gadget,
                              const CnfFormula& formula, std::span<const int> profile);

// Builds the full dense game. Requires a win-lose gadget with the positive
// utility property and a 3SAT formula (3 distinct literals per clause) with
// n >= 4 variables.
std::pair<Game, ReductionLayout> build_reduction(const Game& gadget, const CnfFormula& formula);

// The equilibrium induced by an assignment: both special players uniform
// (1/n) on the assignment's true literals, everyone else pure on the extra
// strategy. It is a Nash equilibrium iff the assignment satisfies the
// formula.
Profile literal_equilibrium(const ReductionLayout& layout, std::uint32_t assignment);

template <typename S>
BasicProfile<S> embed_gadget_profile(const ReductionLayout& layout,
                                     const BasicProfile<S>& gadget_profile) {
  BasicProfile<S> out;
  out.dist.resize(layout.players);
  for (int i = 0; i < layout.players; ++i) {
    if (static_cast<int>(gadget_profile.dist[i].size()) != layout.gadget_counts[i])
      throw std::invalid_argument("embed_gadget_profile: shape mismatch");
    out.dist[i].assign(layout.strategy_count(i), S{});
    for (int s = 0; s < layout.gadget_counts[i]; ++s)
      out.dist[i][s] = gadget_profile.dist[i][s];
  }
  return out;
}

struct EquivalenceOptions {
  int samples = 10000;
  std::uint64_t seed = 1;
  int jobs = 0;
};

// Machine-checks the construction at desk scale:
//  (a) every oracle equilibrium of the gadget embeds to an equilibrium,
//  (b) over all 2^n assignments, the literal profile passes is_nash exactly
//      when the assignment satisfies the formula,
//  (c) each non-satisfying assignment has an unsatisfied clause whose
//      deviation earns exactly 3/n (> the candidate's 2/n),
//  (d) seeded random profiles outside the two families all fail is_nash.
Report reduction_equivalence_check(const Game& gadget, const CnfFormula& formula,
                                   const EquivalenceOptions& opt = {});

}  // namespace winlose
