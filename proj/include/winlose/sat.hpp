#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace winlose {

// CNF formula over n boolean variables; literals use the DIMACS convention
// (variable indices 1..n, negative = negated).
struct CnfFormula {
  int var_count = 0;
  std::vector<std::vector<int>> clauses;
};

struct DimacsError : std::runtime_error {
  DimacsError(int line, const std::string& what)
      : std::runtime_error("dimacs:" + std::to_string(line) + ": " + what), line(line) {}
  int line;
};

CnfFormula parse_dimacs(const std::string& text);

// Every clause must have width 3. With require_distinct, the three literals
// must also be pairwise distinct (a clause is a set); the reduction needs
// that stronger form.
void validate_3sat(const CnfFormula& f, bool require_distinct = false);

// Assignment encoded as a bit mask: bit j-1 set <=> variable j true.
bool eval_formula(const CnfFormula& f, std::uint32_t assignment);

struct SatCount {
  long long count = 0;
  int parity = 0;
  std::optional<std::vector<std::uint32_t>> witnesses;
};

// Exhaustive truth-table count of satisfying assignments (and their parity);
// capped at 24 variables. The parallel version splits the assignment range
// across workers; both produce identical results, witnesses in increasing
// mask order.
SatCount count_sat(const CnfFormula& f, bool want_witnesses = false, int jobs = 0);
SatCount count_sat_serial(const CnfFormula& f, bool want_witnesses = false);

}  // namespace winlose
