#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "winlose/game.hpp"

namespace winlose {

struct EnumOptions {
  int max_strategies = 12;  // per-player cap for the support-pair oracle
  int jobs = 0;             // 0 = use all available threads
};

struct EnumerationResult {
  std::vector<Profile> equilibria;
  bool degenerate = false;
  std::int64_t supports_scanned = 0;
};

// Exhaustive support enumeration for bimatrix games: for every support pair,
// solve the exact indifference + normalization systems, keep solutions with
// strictly positive support probabilities and satisfied off-support
// best-response inequalities. If some support pair's solution set is
// positive-dimensional (certified by per-coordinate LP probing), the game has
// infinitely many equilibria: degenerate is set and the list is withheld.
//
// Output is sorted by (support1, support2, probabilities) and is identical
// for any worker count. supports_scanned always reports the full pair count.
EnumerationResult enumerate_ne_bimatrix(const Game& g, const EnumOptions& opt = {});
EnumerationResult enumerate_ne_bimatrix_serial(const Game& g, const EnumOptions& opt = {});

// All pure Nash equilibria, any number of players, lexicographic order.
std::vector<PureProfile> enumerate_pure_ne(const Game& g);

// All uniform Nash equilibria of a bimatrix game: every nonempty support pair
// is tested via the best-response characterization. A uniform pair is an
// equilibrium iff each support sits inside the opponent-facing argmax set, so
// the scan reduces to subset tests against precomputed argmax masks.
std::vector<Profile> enumerate_uniform_ne(const Game& g, const EnumOptions& opt = {.max_strategies = 20});
std::vector<Profile> enumerate_uniform_ne_serial(const Game& g, const EnumOptions& opt = {.max_strategies = 20});

// Support enumeration restricted to sigma1 == sigma2 for symmetric bimatrix
// games; same degeneracy discipline as the full oracle, applied to the
// symmetric equilibrium family.
EnumerationResult enumerate_symmetric_ne(const Game& g, const EnumOptions& opt = {});

// Exact existence check for equilibria with identical mixed strategies in an
// arbitrary bimatrix game (the game itself need not be symmetric): for every
// same-support candidate, both players' indifference-and-dominance polytopes
// are intersected by LP feasibility. Any feasible point is such an
// equilibrium, so emptiness everywhere is a proof of nonexistence.
std::optional<Profile> find_symmetric_profile_equilibrium(const Game& g, int max_strategies = 12);

// First support pair (lexicographically) whose two feasibility polytopes are
// both nonempty; any combined point is an equilibrium. Works on degenerate
// games, where the full oracle withholds its list.
std::optional<Profile> find_one_equilibrium(const Game& g, const EnumOptions& opt = {});

// Deterministically seeded random mixed profile, used by refutation sampling.
Profile random_profile(const Game& g, std::uint64_t seed);

}  // namespace winlose
