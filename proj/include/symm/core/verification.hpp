#pragma once

#include <string>
#include <vector>

namespace symm {

/// One independently re-checked clause of an operation's contract. Reports
/// list these one-to-one with the contract.
struct Clause {
  std::string name;
  bool ok = false;
  std::string detail;
};

/// Throws InvariantViolation naming every failed clause.
void require_all(const std::vector<Clause>& clauses, const std::string& context);

bool all_ok(const std::vector<Clause>& clauses);

}  // namespace symm
