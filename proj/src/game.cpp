#include "winlose/game.hpp"

#include <stdexcept>

namespace winlose {

Game::Game(std::vector<std::vector<std::string>> labels, std::vector<Rational> utilities)
    : labels_(std::move(labels)), utilities_(std::move(utilities)) {
  if (labels_.size() < 2) throw std::invalid_argument("Game: need at least 2 players");
  std::size_t cells = 1;
  for (const auto& l : labels_) {
    if (l.empty()) throw std::invalid_argument("Game: every player needs a strategy");
    dims_.push_back(static_cast<int>(l.size()));
    cells *= l.size();
  }
  if (utilities_.size() != cells * labels_.size())
    throw std::invalid_argument("Game: utility table size mismatch");
  win_lose_ = true;
  for (const auto& u : utilities_) {
    if (!(u == Rational(0) || u == Rational(1))) {
      win_lose_ = false;
      break;
    }
  }
}

Game Game::bimatrix(std::vector<std::string> row_labels, std::vector<std::string> col_labels,
                    std::vector<std::vector<Rational>> r, std::vector<std::vector<Rational>> c) {
  const std::size_t m = row_labels.size();
  const std::size_t n = col_labels.size();
  if (r.size() != m || c.size() != m) throw std::invalid_argument("bimatrix: row count mismatch");
  std::vector<Rational> flat;
  flat.reserve(m * n * 2);
  for (std::size_t i = 0; i < m; ++i) {
    if (r[i].size() != n || c[i].size() != n)
      throw std::invalid_argument("bimatrix: column count mismatch");
    for (std::size_t j = 0; j < n; ++j) {
      flat.push_back(r[i][j]);
      flat.push_back(c[i][j]);
    }
  }
  return Game({std::move(row_labels), std::move(col_labels)}, std::move(flat));
}

std::size_t Game::flat_index(std::span<const int> profile) const {
  assert(profile.size() == dims_.size());
  std::size_t idx = 0;
  for (std::size_t i = 0; i < dims_.size(); ++i) {
    assert(profile[i] >= 0 && profile[i] < dims_[i]);
    idx = idx * dims_[i] + profile[i];
  }
  return idx;
}

bool Game::is_symmetric_bimatrix() const {
  if (!is_bimatrix() || dims_[0] != dims_[1]) return false;
  if (labels_[0] != labels_[1]) return false;
  for (int i = 0; i < dims_[0]; ++i)
    for (int j = 0; j < dims_[1]; ++j)
      if (!(row_util(i, j) == col_util(j, i))) return false;
  return true;
}

Profile pure_profile(const Game& g, std::span<const int> strategies) {
  if (static_cast<int>(strategies.size()) != g.players())
    throw std::invalid_argument("pure_profile: wrong arity");
  Profile p;
  p.dist.resize(g.players());
  for (int i = 0; i < g.players(); ++i) {
    p.dist[i].assign(g.strategy_count(i), Rational(0));
    p.dist[i].at(strategies[i]) = Rational(1);
  }
  return p;
}

QuadProfile to_quad(const Profile& p) {
  QuadProfile q;
  q.dist.resize(p.dist.size());
  for (std::size_t i = 0; i < p.dist.size(); ++i)
    for (const auto& x : p.dist[i]) q.dist[i].emplace_back(x);
  return q;
}

StructureReport check_structure(const Game& g) {
  StructureReport rep;
  rep.win_lose = g.win_lose();
  rep.all_zero_counter.resize(g.players());
  const int r = g.players();
  for (int i = 0; i < r; ++i) {
    // Walk every pure partial profile of the other players.
    std::vector<int> partial(r, 0);
    while (true) {
      bool has_positive_reply = false;
      for (int t = 0; t < g.strategy_count(i) && !has_positive_reply; ++t) {
        partial[i] = t;
        if (g.utility(partial, i).sign() > 0) has_positive_reply = true;
      }
      partial[i] = 0;
      if (!has_positive_reply) {
        std::vector<int> others;
        for (int k = 0; k < r; ++k)
          if (k != i) others.push_back(partial[k]);
        rep.all_zero_counter[i].push_back(std::move(others));
      }
      int k = r - 1;
      for (; k >= 0; --k) {
        if (k == i) continue;
        if (++partial[k] < g.strategy_count(k)) break;
        partial[k] = 0;
      }
      if (k < 0) break;
    }
  }
  rep.pup = true;
  for (const auto& lst : rep.all_zero_counter)
    if (!lst.empty()) rep.pup = false;
  return rep;
}

PureProfile pure_ne_from_zero_utility(const Game& g, const Profile& sigma) {
  if (!g.is_bimatrix() || !g.win_lose())
    throw std::invalid_argument("pure_ne_from_zero_utility: needs a win-lose bimatrix game");
  if (!is_nash(g, sigma).is_nash)
    throw std::invalid_argument("pure_ne_from_zero_utility: profile is not a Nash equilibrium");
  const Rational u1 = expected_utility(g, sigma, 0);
  const Rational u2 = expected_utility(g, sigma, 1);
  int zero_player;
  if (u1.is_zero())
    zero_player = 0;
  else if (u2.is_zero())
    zero_player = 1;
  else
    throw std::invalid_argument("pure_ne_from_zero_utility: no player has zero utility");

  const auto supp1 = sigma.support(0);
  const auto supp2 = sigma.support(1);
  // The other player's best cell over the support box yields the equilibrium;
  // first maximizer in lexicographic order keeps the choice deterministic.
  const int other = 1 - zero_player;
  PureProfile best = {supp1.front(), supp2.front()};
  Rational best_val(-1);
  for (int i : supp1) {
    for (int j : supp2) {
      const Rational& v = other == 1 ? g.col_util(i, j) : g.row_util(i, j);
      if (v > best_val) {
        best_val = v;
        best = {i, j};
      }
    }
  }
  if (!is_nash(g, pure_profile(g, best)).is_nash)
    throw std::logic_error("pure_ne_from_zero_utility: extracted profile failed verification");
  return best;
}

}  // namespace winlose
