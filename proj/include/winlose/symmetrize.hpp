#pragma once

#include <optional>
#include <utility>

#include "winlose/game.hpp"
#include "winlose/reduction.hpp"
#include "winlose/report.hpp"

namespace winlose {

// Layout of a symmetrized game: each player's strategies are the base row
// player's strategies (left half) followed by the base column player's
// (right half). When the base game came out of the reduction, the literal
// blocks of both halves are recorded so the diagonal embedding can find them.
struct GhrLayout {
  int left_count = 0;
  int right_count = 0;
  int lit_left_begin = -1, lit_left_end = -1;
  int lit_right_begin = -1, lit_right_end = -1;

  int total() const { return left_count + right_count; }
  bool has_literal_roles() const { return lit_left_begin >= 0; }
  bool is_literal(int index) const {
    return (index >= lit_left_begin && index < lit_left_end) ||
           (index >= lit_right_begin && index < lit_right_end);
  }
};

// The block symmetrization <S, S^T> with S = [[0, R], [C^T, 0]]. Win-lose
// and the positive utility property both carry over.
std::pair<Game, GhrLayout> ghr_symmetrize(const Game& base);

// Attaches the reduction's literal ranges to a GHR layout.
GhrLayout ghr_layout_for_reduction(const ReductionLayout& red, const GhrLayout& plain);

// Reconstructs the base game from a symmetrization and its layout.
Game ghr_base_game(const Game& sym, const GhrLayout& layout);

template <typename S>
struct HalfSplit {
  std::vector<S> left, right;
};

template <typename S>
HalfSplit<S> split_halves(const GhrLayout& layout, const std::vector<S>& dist) {
  HalfSplit<S> out;
  out.left.assign(dist.begin(), dist.begin() + layout.left_count);
  out.right.assign(dist.begin() + layout.left_count, dist.end());
  return out;
}

// rho may be absent, standing for the null pair; tau must be an equilibrium
// of the base game. Returns the two mixture profiles over the symmetrized
// game (the second is the first with entries swapped).
struct BalancedInput {
  std::optional<Profile> rho;
  Profile tau;
};
std::pair<Profile, Profile> balanced_mixture(const Game& base, const BalancedInput& in);

struct Decomposition {
  enum Case { kBothHalves, kLeftZero, kRightZero } which = kBothHalves;
  // kBothHalves yields two recovered base equilibria (rho then tau with
  // phi = rho * tau); the degenerate-half cases yield one.
  std::vector<Profile> recovered;
};

// Classifies an equilibrium of the symmetrization by its zero half-components
// and inverts the balanced mixture. Every recovered profile is verified to be
// an equilibrium of the base game, and re-mixing reproduces phi exactly.
Decomposition decompose_symmetric_ne(const Game& sym, const GhrLayout& layout, const Profile& phi);

// The three-branch recovery rule; returns one base equilibrium.
Profile recover_base_ne(const Game& sym, const GhrLayout& layout, const Profile& phi);

// Oracle check of the counting identity |NE(GHR(g))| = |NE(g)| * (|NE(g)|+2)
// together with bijectivity of the mixture map. Degenerate oracles skip.
Report ghr_count_identity_check(const Game& base, int jobs = 0);

struct PupCompletion {
  std::optional<PureProfile> pure_ne;
  std::optional<Game> completed;
};

// Either the game already has a pure equilibrium (returned), or one extra
// strategy per player yields an equilibrium-preserving game with the
// positive utility property.
PupCompletion pup_complete(const Game& g);

// Appends k mutually ordered strategies to a symmetric game; they beat
// everything outside the literal blocks, tie (at zero) with literals, and
// play the diagonal game among themselves.
Game diagonal_embed(const Game& sym, const GhrLayout& layout, int k);

}  // namespace winlose
