#pragma once

#include <cstdint>
#include <string>

#include "winlose/report.hpp"
#include "winlose/sat.hpp"

namespace winlose {

// Prebuilt constructive verification suites. Each scenario builds the
// constructed game (and where applicable its symmetrization and the diagonal
// extension), assembles the equilibrium candidate families explicitly, and
// checks the claimed properties with exact arithmetic. Exhaustiveness over
// the full mixed space is not claimed; the reports say so in their header.
struct ScenarioId {
  enum Kind {
    kGroup1,               // cyclic gadget g1[1]: utility/support/probability bounds
    kGroup2,               // one-sum gadget g3: uniformity flips with satisfiability
    kGroup3,               // cyclic gadget g1[2n+1]: scaled utility/support bounds
    kGroup4,               // g1[2] + diagonal block: equilibrium counting by family
    kSymmetricNashWitness, // g4: a symmetric equilibrium appears iff satisfiable
    kRationalNashWitness,  // g2 (3 players): rational equilibria = satisfying assignments
  };
  Kind kind = kGroup1;
  int k = 1;  // diagonal block size for kGroup4

  static ScenarioId parse(const std::string& name, int k);
  std::string name() const;
};

struct ScenarioOptions {
  std::uint64_t seed = 1;
  int jobs = 0;
};

Report run_scenario(const ScenarioId& id, const CnfFormula& formula,
                    const ScenarioOptions& opt = {});

}  // namespace winlose
