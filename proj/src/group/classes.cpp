#include "symm/group/classes.hpp"

#include <algorithm>
#include <sstream>

namespace symm::group {

std::string ClassTester::to_string() const {
  switch (tag) {
    case ClassTag::trivial:
      return "trivial";
    case ClassTag::solvable:
      return "solvable";
    case ClassTag::nilpotent:
      return "nilpotent";
    case ClassTag::pi: {
      std::string s = "pi:";
      for (std::size_t i = 0; i < primes.size(); ++i) s += (i ? "," : "") + std::to_string(primes[i]);
      return s;
    }
  }
  return "?";
}

ClassTester parse_class(const std::string& text) {
  if (text == "trivial") return {ClassTag::trivial, {}};
  if (text == "solvable") return {ClassTag::solvable, {}};
  if (text == "nilpotent") return {ClassTag::nilpotent, {}};
  if (text.rfind("pi:", 0) == 0) {
    ClassTester c{ClassTag::pi, {}};
    std::istringstream in(text.substr(3));
    std::string item;
    while (std::getline(in, item, ',')) {
      try {
        std::size_t used = 0;
        long long p = std::stoll(item, &used);
        if (used != item.size() || p < 2) throw ParseError("");
        c.primes.push_back(static_cast<std::uint64_t>(p));
      } catch (const std::exception&) {
        throw ParseError("class \"" + text + "\": bad prime \"" + item + "\"");
      }
    }
    std::sort(c.primes.begin(), c.primes.end());
    return c;
  }
  throw ParseError("unknown class \"" + text + "\" (trivial, solvable, nilpotent, pi:p,q,...)");
}

bool class_test_quotient(const FiniteGroup& g, const ClassTester& c, const Subgroup& s, const Subgroup& kk) {
  const Subgroup k = s & kk;
  switch (c.tag) {
    case ClassTag::trivial:
      return s.subset_of(k);
    case ClassTag::solvable: {
      Subgroup d = s;
      while (!d.subset_of(k)) {
        Subgroup next = generate(g, commutator_subgroup(g, d, d) | k);
        if (next == d) return false;
        d = next;
      }
      return true;
    }
    case ClassTag::nilpotent: {
      Subgroup gamma = s;
      while (!gamma.subset_of(k)) {
        Subgroup next = generate(g, commutator_subgroup(g, gamma, s) | k);
        if (next == gamma) return false;
        gamma = next;
      }
      return true;
    }
    case ClassTag::pi: {
      std::size_t index = s.count() / k.count();
      for (std::uint64_t p = 2; index > 1; ++p) {
        if (index % p) continue;
        if (!std::binary_search(c.primes.begin(), c.primes.end(), p)) return false;
        while (index % p == 0) index /= p;
      }
      return true;
    }
  }
  return false;
}

bool class_test(const FiniteGroup& g, const ClassTester& c, const Subgroup& s) {
  return class_test_quotient(g, c, s, g.trivial());
}

}  // namespace symm::group
