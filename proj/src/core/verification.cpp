#include "symm/core/verification.hpp"

#include "symm/core/errors.hpp"

namespace symm {

bool all_ok(const std::vector<Clause>& clauses) {
  for (const auto& c : clauses)
    if (!c.ok) return false;
  return true;
}

void require_all(const std::vector<Clause>& clauses, const std::string& context) {
  std::string failed;
  for (const auto& c : clauses) {
    if (c.ok) continue;
    if (!failed.empty()) failed += "; ";
    failed += c.name;
    if (!c.detail.empty()) failed += " (" + c.detail + ")";
  }
  if (!failed.empty()) throw InvariantViolation(context + ": " + failed);
}

}  // namespace symm
