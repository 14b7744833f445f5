#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "symm/group/group.hpp"

namespace symm::group {

/// Repeated or out-of-order variable in an outer commutator word.
class VariableError : public ParseError {
 public:
  using ParseError::ParseError;
};

class NotNormal : public PreconditionViolated {
 public:
  using PreconditionViolated::PreconditionViolated;
};

/// Binary bracket tree whose leaves are x_1..x_t, left to right, each once.
class OuterCommutatorWord {
 public:
  struct Node {
    int var = -1;  // 0-based variable for leaves, -1 for brackets
    int left = -1;
    int right = -1;
  };

  static OuterCommutatorWord variable();  // the word x1
  static OuterCommutatorWord bracket(const OuterCommutatorWord& u, const OuterCommutatorWord& v);

  std::size_t weight() const { return weight_; }
  const std::vector<Node>& nodes() const { return nodes_; }
  int root() const { return root_; }
  std::string to_string() const;

 private:
  friend OuterCommutatorWord parse_ocw(const std::string& text);
  std::vector<Node> nodes_;
  int root_ = -1;
  std::size_t weight_ = 0;
};

/// W ::= "x" INT | "[" W "," W "]", whitespace ignored.
OuterCommutatorWord parse_ocw(const std::string& text);

/// w(K_1..K_t). Throws ArityMismatch on a wrong argument count and NotNormal
/// when an argument is not normal in g.
Subgroup verbal_subgroup(const FiniteGroup& g, const OuterCommutatorWord& w, const std::vector<Subgroup>& args);

}  // namespace symm::group
