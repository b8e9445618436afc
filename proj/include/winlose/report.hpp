#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace winlose {

struct CheckLine {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct Report {
  std::string title;
  std::vector<CheckLine> lines;

  void add(const std::string& name, bool pass, const std::string& detail = "") {
    lines.push_back({name, pass, detail});
  }

  bool all_pass() const {
    for (const auto& l : lines)
      if (!l.pass) return false;
    return true;
  }

  void print(std::ostream& os) const {
    os << "== " << title << " ==\n";
    for (const auto& l : lines) {
      os << (l.pass ? "  [pass] " : "  [FAIL] ") << l.name;
      if (!l.detail.empty()) os << "  (" << l.detail << ")";
      os << "\n";
    }
    os << (all_pass() ? "all checks passed" : "CHECKS FAILED") << "\n";
  }
};

}  // namespace winlose
