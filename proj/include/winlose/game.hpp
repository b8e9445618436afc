#pragma once

#include <cassert>
#include <span>
#include <string>
#include <vector>

#include "winlose/quadext.hpp"
#include "winlose/rational.hpp"

namespace winlose {

using PureProfile = std::vector<int>;

// Finite normal-form game with exact rational utilities. Utilities are stored
// as a dense row-major table over pure profiles, with the per-player utility
// vector at each cell. Win-lose (all entries 0/1) is detected and cached.
class Game {
 public:
  Game(std::vector<std::vector<std::string>> labels, std::vector<Rational> utilities);

  static Game bimatrix(std::vector<std::string> row_labels, std::vector<std::string> col_labels,
                       std::vector<std::vector<Rational>> r, std::vector<std::vector<Rational>> c);

  int players() const { return static_cast<int>(dims_.size()); }
  int strategy_count(int player) const { return dims_[player]; }
  const std::vector<int>& dims() const { return dims_; }
  const std::vector<std::string>& labels(int player) const { return labels_[player]; }
  const std::vector<Rational>& table() const { return utilities_; }

  std::size_t flat_index(std::span<const int> profile) const;
  const Rational& utility(std::span<const int> profile, int player) const {
    return utilities_[flat_index(profile) * players() + player];
  }

  bool win_lose() const { return win_lose_; }
  bool is_bimatrix() const { return players() == 2; }

  // Bimatrix accessors (row matrix = player 1's utilities, column matrix = player 2's).
  const Rational& row_util(int i, int j) const {
    assert(is_bimatrix());
    return utilities_[(static_cast<std::size_t>(i) * dims_[1] + j) * 2];
  }
  const Rational& col_util(int i, int j) const {
    assert(is_bimatrix());
    return utilities_[(static_cast<std::size_t>(i) * dims_[1] + j) * 2 + 1];
  }

  // Structural symmetry: square bimatrix with R = C^T, labels in identical order.
  bool is_symmetric_bimatrix() const;

 private:
  std::vector<std::vector<std::string>> labels_;
  std::vector<int> dims_;
  std::vector<Rational> utilities_;
  bool win_lose_ = false;
};

// One mixed strategy per player over scalar field S (Rational or QuadExt).
template <typename S>
struct BasicProfile {
  std::vector<std::vector<S>> dist;

  int players() const { return static_cast<int>(dist.size()); }

  std::vector<int> support(int player) const {
    std::vector<int> out;
    for (int s = 0; s < static_cast<int>(dist[player].size()); ++s)
      if (sign_of(dist[player][s]) > 0) out.push_back(s);
    return out;
  }

  bool operator==(const BasicProfile& o) const { return dist == o.dist; }
};

using Profile = BasicProfile<Rational>;
using QuadProfile = BasicProfile<QuadExt>;

Profile pure_profile(const Game& g, std::span<const int> strategies);

QuadProfile to_quad(const Profile& p);

// Shape and probability-law validation: sizes match the game, every entry has
// nonnegative exact sign, and each player's probabilities sum to one.
template <typename S>
void validate_profile(const Game& g, const BasicProfile<S>& p);

template <typename S>
S expected_utility(const Game& g, const BasicProfile<S>& sigma, int player);

// Expected utility for `player` when she plays `strategy` with probability 1
// and everyone else keeps sigma.
template <typename S>
S conditional_utility(const Game& g, const BasicProfile<S>& sigma, int player, int strategy);

struct NashWitness {
  bool is_nash = false;
  // On failure: a (player, strategy) pair whose conditional utility strictly
  // exceeds the player's expected utility under sigma.
  int player = -1;
  int strategy = -1;
};

// Best-response characterization: sigma is a Nash equilibrium iff for every
// player the conditional utility is constant on her support and no strategy
// off the support does strictly better.
template <typename S>
NashWitness is_nash(const Game& g, const BasicProfile<S>& sigma);

struct StructureReport {
  bool win_lose = false;
  bool pup = false;
  // Per player: the opponents' pure partial profiles that force her utility
  // to zero no matter what she replies. Empty everywhere iff pup holds.
  std::vector<std::vector<std::vector<int>>> all_zero_counter;
};

StructureReport check_structure(const Game& g);

// For a win-lose bimatrix game and a verified equilibrium in which some
// player earns exactly zero, extracts a pure Nash equilibrium from the
// supports. The returned profile is is_nash-verified before returning.
PureProfile pure_ne_from_zero_utility(const Game& g, const Profile& sigma);

// --- template implementations -------------------------------------------

template <typename S>
void validate_profile(const Game& g, const BasicProfile<S>& p) {
  if (p.players() != g.players()) throw std::invalid_argument("profile: wrong player count");
  for (int i = 0; i < g.players(); ++i) {
    if (static_cast<int>(p.dist[i].size()) != g.strategy_count(i))
      throw std::invalid_argument("profile: wrong strategy count for player " + std::to_string(i + 1));
    S sum{};
    for (const S& q : p.dist[i]) {
      if (sign_of(q) < 0) throw std::invalid_argument("profile: negative probability");
      sum += q;
    }
    if (!(sum == S(1))) throw std::invalid_argument("profile: probabilities do not sum to 1");
  }
}

namespace detail {

// Calls fn(partial, weight) for every pure partial profile of all players
// except `skip` that is supported in sigma. `partial` has one entry per
// player; entry at `skip` is left at 0 and must be ignored by fn.
template <typename S, typename Fn>
void for_each_supported_partial(const Game& g, const BasicProfile<S>& sigma, int skip, Fn&& fn) {
  const int r = g.players();
  std::vector<std::vector<int>> supports(r);
  for (int i = 0; i < r; ++i)
    if (i != skip) supports[i] = sigma.support(i);

  std::vector<int> pos(r, 0);
  std::vector<int> partial(r, 0);
  while (true) {
    S weight{1};
    for (int i = 0; i < r; ++i) {
      if (i == skip) continue;
      partial[i] = supports[i][pos[i]];
      weight *= sigma.dist[i][partial[i]];
    }
    fn(partial, weight);
    int i = r - 1;
    for (; i >= 0; --i) {
      if (i == skip) continue;
      if (++pos[i] < static_cast<int>(supports[i].size())) break;
      pos[i] = 0;
    }
    if (i < 0) break;
  }
}

}  // namespace detail

template <typename S>
S expected_utility(const Game& g, const BasicProfile<S>& sigma, int player) {
  validate_profile(g, sigma);
  S total{};
  const int skip = -1;
  (void)skip;
  std::vector<int> profile(g.players());
  // Iterate the full supported product by treating no player as skipped:
  // reuse the partial iterator with skip = player and fold in her own mix.
  detail::for_each_supported_partial(g, sigma, player, [&](std::vector<int>& partial, const S& w) {
    for (int s = 0; s < g.strategy_count(player); ++s) {
      if (sign_of(sigma.dist[player][s]) <= 0) continue;
      partial[player] = s;
      total += w * sigma.dist[player][s] * S(g.utility(partial, player));
    }
  });
  return total;
}

template <typename S>
S conditional_utility(const Game& g, const BasicProfile<S>& sigma, int player, int strategy) {
  validate_profile(g, sigma);
  if (strategy < 0 || strategy >= g.strategy_count(player))
    throw std::invalid_argument("conditional_utility: invalid strategy index");
  S total{};
  detail::for_each_supported_partial(g, sigma, player, [&](std::vector<int>& partial, const S& w) {
    partial[player] = strategy;
    total += w * S(g.utility(partial, player));
  });
  return total;
}

template <typename S>
NashWitness is_nash(const Game& g, const BasicProfile<S>& sigma) {
  validate_profile(g, sigma);
  const int r = g.players();
  for (int i = 0; i < r; ++i) {
    const int n_i = g.strategy_count(i);
    std::vector<S> cond(n_i, S{});
    detail::for_each_supported_partial(g, sigma, i, [&](std::vector<int>& partial, const S& w) {
      for (int s = 0; s < n_i; ++s) {
        partial[i] = s;
        cond[s] += w * S(g.utility(partial, i));
      }
    });
    S own{};
    for (int s = 0; s < n_i; ++s)
      if (sign_of(sigma.dist[i][s]) > 0) own += sigma.dist[i][s] * cond[s];

    bool bad = false;
    for (int s = 0; s < n_i && !bad; ++s) {
      const bool supported = sign_of(sigma.dist[i][s]) > 0;
      const int c = sign_of(cond[s] - own);
      if (supported ? (c != 0) : (c > 0)) bad = true;
    }
    if (bad) {
      int best = 0;
      for (int s = 1; s < n_i; ++s)
        if (cond[s] > cond[best]) best = s;
      return {false, i, best};
    }
  }
  return {true, -1, -1};
}

}  // namespace winlose
