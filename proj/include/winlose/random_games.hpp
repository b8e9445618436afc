#pragma once

#include <cstdint>

#include "winlose/game.hpp"
#include "winlose/sat.hpp"

namespace winlose {

// Deterministically seeded random instances used by tests and checks.

Game random_win_lose_bimatrix(int m, int n, std::uint64_t seed);

// Rejection-samples until the game has (or lacks) the positive utility
// property. The returned seed offset makes reruns reproducible.
Game random_win_lose_with_pup(int m, int n, std::uint64_t seed);
Game random_win_lose_without_pup(int m, int n, std::uint64_t seed);

// Random 3SAT formula with clauses of three distinct literals.
CnfFormula random_3sat(int n, int m, std::uint64_t seed);

}  // namespace winlose
