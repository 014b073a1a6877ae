#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace colorpbw {

// One failed check: which axiom, at which basis tuple, and the nonzero
// defect that witnesses the failure.
struct Violation {
  std::string check;
  std::string witness;
  std::string defect;
};

struct VerificationReport {
  std::vector<Violation> violations;

  bool ok() const { return violations.empty(); }

  void add(std::string check, std::string witness, std::string defect) {
    violations.push_back({std::move(check), std::move(witness), std::move(defect)});
  }

  void append(const VerificationReport& other) {
    violations.insert(violations.end(), other.violations.begin(), other.violations.end());
  }

  void print(std::ostream& os) const {
    if (ok()) {
      os << "ok: no violations\n";
      return;
    }
    for (const auto& v : violations)
      os << "violation: " << v.check << " at " << v.witness << " defect " << v.defect << "\n";
  }
};

}  // namespace colorpbw
