#pragma once

#include <variant>
#include <vector>

#include "winlose/game.hpp"

namespace winlose {

// Checkable equilibrium properties. The caller is responsible for handing in
// an actual equilibrium whenever the property's meaning presumes one; the
// evaluator only decides the stated predicate.
struct MinUtilityAtLeast { Rational u; };
struct MaxUtilityAtMost { Rational u; };
struct TotalUtilityAtLeast { Rational u; };
struct TotalUtilityAtMost { Rational u; };
struct SupportSizeAtLeast { int k; };
struct SupportSizeAtMost { int k; };
struct SupportContains { std::vector<std::vector<int>> sets; };
struct SupportWithin { std::vector<std::vector<int>> sets; };
struct MaxProbAtMost { Rational u; };
struct Uniform {};
struct NonUniform {};
struct SymmetricProfile {};
struct NonSymmetricProfile {};
struct RationalProfile {};
// Sound (not complete) refutation of Pareto-optimality: some pure profile
// weakly dominates sigma with at least one strict improvement.
struct PureParetoDominated {};
// Refutation of strong Pareto-optimality against pure witnesses: some pure
// profile strictly improves one player and strictly improves every player
// whose mixed strategy it changes.
struct PureStrongParetoDominated {};

using PropertySpec =
    std::variant<MinUtilityAtLeast, MaxUtilityAtMost, TotalUtilityAtLeast, TotalUtilityAtMost,
                 SupportSizeAtLeast, SupportSizeAtMost, SupportContains, SupportWithin,
                 MaxProbAtMost, Uniform, NonUniform, SymmetricProfile, NonSymmetricProfile,
                 RationalProfile, PureParetoDominated, PureStrongParetoDominated>;

bool evaluate_property(const Game& g, const Profile& sigma, const PropertySpec& p);
bool evaluate_property(const Game& g, const QuadProfile& sigma, const PropertySpec& p);

}  // namespace winlose
