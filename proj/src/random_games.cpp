#include "winlose/random_games.hpp"

#include <random>
#include <set>
#include <stdexcept>

namespace winlose {
namespace {

Game from_bits(int m, int n, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> bit(0, 1);
  std::vector<std::string> rl, cl;
  for (int i = 0; i < m; ++i) rl.push_back("r" + std::to_string(i));
  for (int j = 0; j < n; ++j) cl.push_back("c" + std::to_string(j));
  std::vector<std::vector<Rational>> r(m, std::vector<Rational>(n));
  std::vector<std::vector<Rational>> c(m, std::vector<Rational>(n));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < n; ++j) {
      r[i][j] = Rational(bit(rng));
      c[i][j] = Rational(bit(rng));
    }
  return Game::bimatrix(rl, cl, r, c);
}

}  // namespace

Game random_win_lose_bimatrix(int m, int n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  return from_bits(m, n, rng);
}

Game random_win_lose_with_pup(int m, int n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  for (int tries = 0; tries < 10000; ++tries) {
    Game g = from_bits(m, n, rng);
    if (check_structure(g).pup) return g;
  }
  throw std::runtime_error("random_win_lose_with_pup: rejection sampling exhausted");
}

Game random_win_lose_without_pup(int m, int n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  for (int tries = 0; tries < 10000; ++tries) {
    Game g = from_bits(m, n, rng);
    if (!check_structure(g).pup) return g;
  }
  throw std::runtime_error("random_win_lose_without_pup: rejection sampling exhausted");
}

CnfFormula random_3sat(int n, int m, std::uint64_t seed) {
  if (n < 3) throw std::invalid_argument("random_3sat: need n >= 3");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> var(1, n);
  std::uniform_int_distribution<int> flip(0, 1);
  CnfFormula f;
  f.var_count = n;
  for (int c = 0; c < m; ++c) {
    std::set<int> vars;
    while (static_cast<int>(vars.size()) < 3) vars.insert(var(rng));
    std::vector<int> clause;
    for (int v : vars) clause.push_back(flip(rng) ? v : -v);
    f.clauses.push_back(std::move(clause));
  }
  return f;
}

}  // namespace winlose
