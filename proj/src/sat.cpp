#include "winlose/sat.hpp"

#include <omp.h>

#include <algorithm>
#include <cstdlib>
#include <set>
#include <sstream>

namespace winlose {

CnfFormula parse_dimacs(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  CnfFormula f;
  int expected_clauses = -1;
  bool header_seen = false;
  std::vector<int> current;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty() || line[0] == 'c') continue;
    if (line[0] == 'p') {
      std::istringstream hs(line);
      std::string p, fmt;
      int n = 0, m = 0;
      if (!(hs >> p >> fmt >> n >> m) || fmt != "cnf" || n < 0 || m < 0)
        throw DimacsError(lineno, "malformed header, expected 'p cnf <vars> <clauses>'");
      if (header_seen) throw DimacsError(lineno, "duplicate header");
      header_seen = true;
      f.var_count = n;
      expected_clauses = m;
      continue;
    }
    if (!header_seen) throw DimacsError(lineno, "clause before header");
    std::istringstream cs(line);
    long lit;
    while (cs >> lit) {
      if (lit == 0) {
        f.clauses.push_back(current);
        current.clear();
      } else {
        if (std::abs(lit) > f.var_count)
          throw DimacsError(lineno, "literal out of range: " + std::to_string(lit));
        current.push_back(static_cast<int>(lit));
      }
    }
    if (cs.fail() && !cs.eof()) throw DimacsError(lineno, "unreadable token");
  }
  if (!header_seen) throw DimacsError(lineno, "missing header");
  if (!current.empty()) throw DimacsError(lineno, "last clause not 0-terminated");
  if (expected_clauses >= 0 && static_cast<int>(f.clauses.size()) != expected_clauses)
    throw DimacsError(lineno, "clause count does not match header");
  return f;
}

void validate_3sat(const CnfFormula& f, bool require_distinct) {
  for (std::size_t i = 0; i < f.clauses.size(); ++i) {
    if (f.clauses[i].size() != 3)
      throw std::invalid_argument("3sat: clause " + std::to_string(i + 1) + " width != 3");
    if (require_distinct) {
      std::set<int> uniq(f.clauses[i].begin(), f.clauses[i].end());
      if (uniq.size() != 3)
        throw std::invalid_argument("3sat: clause " + std::to_string(i + 1) +
                                    " has duplicate literals");
    }
  }
}

namespace {

struct ClauseMasks {
  std::uint32_t pos = 0;
  std::uint32_t neg = 0;
};

std::vector<ClauseMasks> clause_masks(const CnfFormula& f) {
  std::vector<ClauseMasks> out;
  out.reserve(f.clauses.size());
  for (const auto& cl : f.clauses) {
    ClauseMasks m;
    for (int lit : cl) {
      const std::uint32_t bit = 1u << (std::abs(lit) - 1);
      if (lit > 0)
        m.pos |= bit;
      else
        m.neg |= bit;
    }
    out.push_back(m);
  }
  return out;
}

bool satisfied(const std::vector<ClauseMasks>& masks, std::uint32_t a) {
  for (const auto& m : masks)
    if ((a & m.pos) == 0 && (~a & m.neg) == 0) return false;
  return true;
}

}  // namespace

bool eval_formula(const CnfFormula& f, std::uint32_t assignment) {
  return satisfied(clause_masks(f), assignment);
}

SatCount count_sat_serial(const CnfFormula& f, bool want_witnesses) {
  if (f.var_count > 24) throw std::invalid_argument("count_sat: more than 24 variables");
  const auto masks = clause_masks(f);
  const std::uint64_t total = 1ull << f.var_count;
  SatCount out;
  if (want_witnesses) out.witnesses.emplace();
  for (std::uint64_t a = 0; a < total; ++a) {
    if (satisfied(masks, static_cast<std::uint32_t>(a))) {
      ++out.count;
      if (want_witnesses) out.witnesses->push_back(static_cast<std::uint32_t>(a));
    }
  }
  out.parity = static_cast<int>(out.count & 1);
  return out;
}

SatCount count_sat(const CnfFormula& f, bool want_witnesses, int jobs) {
  if (f.var_count > 24) throw std::invalid_argument("count_sat: more than 24 variables");
  const auto masks = clause_masks(f);
  const std::int64_t total = 1ll << f.var_count;
  const int threads = jobs > 0 ? jobs : omp_get_max_threads();
  SatCount out;
  if (want_witnesses) out.witnesses.emplace();
  long long count = 0;
#pragma omp parallel num_threads(threads)
  {
    std::vector<std::uint32_t> local;
    long long local_count = 0;
#pragma omp for schedule(static) nowait
    for (std::int64_t a = 0; a < total; ++a) {
      if (satisfied(masks, static_cast<std::uint32_t>(a))) {
        ++local_count;
        if (want_witnesses) local.push_back(static_cast<std::uint32_t>(a));
      }
    }
#pragma omp critical
    {
      count += local_count;
      if (want_witnesses)
        out.witnesses->insert(out.witnesses->end(), local.begin(), local.end());
    }
  }
  out.count = count;
  out.parity = static_cast<int>(count & 1);
  if (want_witnesses) std::sort(out.witnesses->begin(), out.witnesses->end());
  return out;
}

}  // namespace winlose
