#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "symm/group/group.hpp"

namespace symm::group {

enum class ClassTag { trivial, solvable, nilpotent, pi };

struct ClassTester {
  ClassTag tag = ClassTag::trivial;
  std::vector<std::uint64_t> primes;  // pi only

  std::string to_string() const;
};

/// "trivial", "solvable", "nilpotent", or "pi:2,3".
ClassTester parse_class(const std::string& text);

/// Membership of the quotient s/k, where k is normal in s.
bool class_test_quotient(const FiniteGroup& g, const ClassTester& c, const Subgroup& s, const Subgroup& k);
/// Membership of the subgroup s itself.
bool class_test(const FiniteGroup& g, const ClassTester& c, const Subgroup& s);

}  // namespace symm::group
