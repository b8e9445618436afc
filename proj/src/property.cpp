#include "winlose/property.hpp"

#include <algorithm>

namespace winlose {
namespace {

template <typename S>
bool uniform_on_support(const BasicProfile<S>& sigma) {
  for (const auto& d : sigma.dist) {
    const S* first = nullptr;
    for (const S& q : d) {
      if (sign_of(q) <= 0) continue;
      if (first == nullptr)
        first = &q;
      else if (!(*first == q))
        return false;
    }
  }
  return true;
}

template <typename S>
bool symmetric_profile(const BasicProfile<S>& sigma) {
  for (int i = 1; i < sigma.players(); ++i) {
    if (sigma.dist[i].size() != sigma.dist[0].size()) return false;
    if (!(sigma.dist[i] == sigma.dist[0])) return false;
  }
  return true;
}

bool rational_profile(const Profile&) { return true; }

bool rational_profile(const QuadProfile& sigma) {
  for (const auto& d : sigma.dist)
    for (const auto& q : d)
      if (!q.is_rational()) return false;
  return true;
}

// Walks all pure profiles of g, comparing their utility vectors against the
// given baseline; `accept` decides whether a pure witness refutes.
template <typename S, typename Accept>
bool exists_pure_witness(const Game& g, const std::vector<S>& base, Accept&& accept) {
  const int r = g.players();
  std::vector<int> s(r, 0);
  while (true) {
    if (accept(std::span<const int>(s))) return true;
    int i = r - 1;
    for (; i >= 0; --i) {
      if (++s[i] < g.strategy_count(i)) break;
      s[i] = 0;
    }
    if (i < 0) return false;
  }
}

template <typename S>
bool pure_pareto_dominated(const Game& g, const BasicProfile<S>& sigma) {
  std::vector<S> base;
  for (int i = 0; i < g.players(); ++i) base.push_back(expected_utility(g, sigma, i));
  return exists_pure_witness(g, base, [&](std::span<const int> s) {
    bool strict = false;
    for (int i = 0; i < g.players(); ++i) {
      const int c = sign_of(S(g.utility(s, i)) - base[i]);
      if (c < 0) return false;
      if (c > 0) strict = true;
    }
    return strict;
  });
}

template <typename S>
bool pure_strong_pareto_dominated(const Game& g, const BasicProfile<S>& sigma) {
  std::vector<S> base;
  for (int i = 0; i < g.players(); ++i) base.push_back(expected_utility(g, sigma, i));
  return exists_pure_witness(g, base, [&](std::span<const int> s) {
    bool strict = false;
    for (int i = 0; i < g.players(); ++i) {
      const int c = sign_of(S(g.utility(s, i)) - base[i]);
      if (c > 0) strict = true;
      // Player i is in the Diff set iff sigma_i differs from the pure strategy s_i.
      bool differs = false;
      for (int t = 0; t < g.strategy_count(i); ++t) {
        const S want = (t == s[i]) ? S(1) : S(0);
        if (!(sigma.dist[i][t] == want)) {
          differs = true;
          break;
        }
      }
      if (differs && c <= 0) return false;
    }
    return strict;
  });
}

template <typename S>
bool evaluate(const Game& g, const BasicProfile<S>& sigma, const PropertySpec& p) {
  validate_profile(g, sigma);
  return std::visit(
      [&](const auto& spec) -> bool {
        using T = std::decay_t<decltype(spec)>;
        if constexpr (std::is_same_v<T, MinUtilityAtLeast>) {
          for (int i = 0; i < g.players(); ++i)
            if (sign_of(expected_utility(g, sigma, i) - S(spec.u)) < 0) return false;
          return true;
        } else if constexpr (std::is_same_v<T, MaxUtilityAtMost>) {
          for (int i = 0; i < g.players(); ++i)
            if (sign_of(expected_utility(g, sigma, i) - S(spec.u)) > 0) return false;
          return true;
        } else if constexpr (std::is_same_v<T, TotalUtilityAtLeast>) {
          S total{};
          for (int i = 0; i < g.players(); ++i) total += expected_utility(g, sigma, i);
          return sign_of(total - S(spec.u)) >= 0;
        } else if constexpr (std::is_same_v<T, TotalUtilityAtMost>) {
          S total{};
          for (int i = 0; i < g.players(); ++i) total += expected_utility(g, sigma, i);
          return sign_of(total - S(spec.u)) <= 0;
        } else if constexpr (std::is_same_v<T, SupportSizeAtLeast>) {
          for (int i = 0; i < g.players(); ++i)
            if (static_cast<int>(sigma.support(i).size()) < spec.k) return false;
          return true;
        } else if constexpr (std::is_same_v<T, SupportSizeAtMost>) {
          for (int i = 0; i < g.players(); ++i)
            if (static_cast<int>(sigma.support(i).size()) > spec.k) return false;
          return true;
        } else if constexpr (std::is_same_v<T, SupportContains>) {
          for (int i = 0; i < g.players(); ++i)
            for (int t : spec.sets.at(i))
              if (sign_of(sigma.dist[i].at(t)) <= 0) return false;
          return true;
        } else if constexpr (std::is_same_v<T, SupportWithin>) {
          for (int i = 0; i < g.players(); ++i) {
            const auto& allowed = spec.sets.at(i);
            for (int t : sigma.support(i))
              if (std::find(allowed.begin(), allowed.end(), t) == allowed.end()) return false;
          }
          return true;
        } else if constexpr (std::is_same_v<T, MaxProbAtMost>) {
          for (const auto& d : sigma.dist)
            for (const auto& q : d)
              if (sign_of(q - S(spec.u)) > 0) return false;
          return true;
        } else if constexpr (std::is_same_v<T, Uniform>) {
          return uniform_on_support(sigma);
        } else if constexpr (std::is_same_v<T, NonUniform>) {
          return !uniform_on_support(sigma);
        } else if constexpr (std::is_same_v<T, SymmetricProfile>) {
          return symmetric_profile(sigma);
        } else if constexpr (std::is_same_v<T, NonSymmetricProfile>) {
          return !symmetric_profile(sigma);
        } else if constexpr (std::is_same_v<T, RationalProfile>) {
          return rational_profile(sigma);
        } else if constexpr (std::is_same_v<T, PureParetoDominated>) {
          return pure_pareto_dominated(g, sigma);
        } else {
          static_assert(std::is_same_v<T, PureStrongParetoDominated>);
          return pure_strong_pareto_dominated(g, sigma);
        }
      },
      p);
}

}  // namespace

bool evaluate_property(const Game& g, const Profile& sigma, const PropertySpec& p) {
  return evaluate(g, sigma, p);
}

bool evaluate_property(const Game& g, const QuadProfile& sigma, const PropertySpec& p) {
  return evaluate(g, sigma, p);
}

}  // namespace winlose
