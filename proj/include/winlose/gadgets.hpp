#pragma once

#include <cstdint>
#include <string>

#include "winlose/game.hpp"
#include "winlose/report.hpp"

namespace winlose {

// The five fixed win-lose gadget games:
//   G1(h): cyclic h x h game; player 1 wins on agreement, player 2 wins one
//          step ahead (mod h). Unique equilibrium: both uniform, value 1/h.
//   G2:    the 2 x 2 x 3 three-player game whose single equilibrium has
//          golden-ratio coordinates.
//   G3:    the 4 x 4 one-sum game with no uniform equilibrium.
//   G4:    the 3 x 3 game with no symmetric equilibrium.
//   G5(k): the diagonal game <D_k, D_k^T> with exactly k (pure, symmetric)
//          equilibria, each worth 1 to both players.
struct GadgetId {
  enum Kind { kG1, kG2, kG3, kG4, kG5 };
  Kind kind = kG1;
  int param = 1;  // h for G1, k for G5

  static GadgetId parse(const std::string& name, int param);
  std::string name() const;
};

Game build_gadget(const GadgetId& id);

// The closed-form equilibrium of G2 over Q(sqrt 5):
// sigma1(0) = (sqrt5 - 1)/2, sigma2(0) = (3 - sqrt5)/2,
// sigma3 = ((1 + sqrt5)/8, (5 - sqrt5)/8, 1/4).
QuadProfile g2_closed_form_equilibrium();

struct GadgetVerifyOptions {
  std::uint64_t seed = 1;
  int jobs = 0;
  int g2_samples = 100000;  // random rational profiles thrown at G2
};

// Machine-checks every claimed property of the gadget; each claim becomes a
// pass/fail line. Degeneracy reported by the oracle on any gadget is a
// failure in itself.
Report verify_gadget(const GadgetId& id, const GadgetVerifyOptions& opt = {});

}  // namespace winlose
