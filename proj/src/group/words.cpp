#include "symm/group/words.hpp"

#include <cctype>

namespace symm::group {

namespace {

class WordParser {
 public:
  explicit WordParser(const std::string& s) : s_(s) {}

  int parse(std::vector<OuterCommutatorWord::Node>& nodes, std::vector<long>& vars) {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end of word");
    if (s_[pos_] == 'x') {
      ++pos_;
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (start == pos_) fail("expected a variable index after 'x'");
      long v = std::stol(s_.substr(start, pos_ - start));
      vars.push_back(v);
      nodes.push_back({static_cast<int>(vars.size()) - 1, -1, -1});
      return static_cast<int>(nodes.size()) - 1;
    }
    if (s_[pos_] != '[') fail("expected 'x' or '['");
    ++pos_;
    int l = parse(nodes, vars);
    expect(',');
    int r = parse(nodes, vars);
    expect(']');
    nodes.push_back({-1, l, r});
    return static_cast<int>(nodes.size()) - 1;
  }

  void finish() {
    skip();
    if (pos_ != s_.size()) fail("trailing characters");
  }

 private:
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  void expect(char c) {
    skip();
    if (pos_ >= s_.size() || s_[pos_] != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("word \"" + s_ + "\": " + what + " at offset " + std::to_string(pos_));
  }

  const std::string& s_;
  std::size_t pos_ = 0;
};

Subgroup eval(const FiniteGroup& g, const OuterCommutatorWord& w, int node, const std::vector<Subgroup>& args) {
  const auto& nd = w.nodes()[static_cast<std::size_t>(node)];
  if (nd.var >= 0) return args[static_cast<std::size_t>(nd.var)];
  return commutator_subgroup(g, eval(g, w, nd.left, args), eval(g, w, nd.right, args));
}

std::string render(const OuterCommutatorWord& w, int node) {
  const auto& nd = w.nodes()[static_cast<std::size_t>(node)];
  if (nd.var >= 0) return "x" + std::to_string(nd.var + 1);
  return "[" + render(w, nd.left) + "," + render(w, nd.right) + "]";
}

}  // namespace

OuterCommutatorWord OuterCommutatorWord::variable() {
  OuterCommutatorWord w;
  w.nodes_.push_back({0, -1, -1});
  w.root_ = 0;
  w.weight_ = 1;
  return w;
}

OuterCommutatorWord OuterCommutatorWord::bracket(const OuterCommutatorWord& u, const OuterCommutatorWord& v) {
  OuterCommutatorWord w = u;
  const int shift = static_cast<int>(w.nodes_.size());
  for (auto nd : v.nodes_) {
    if (nd.var >= 0) nd.var += static_cast<int>(u.weight_);
    if (nd.left >= 0) nd.left += shift;
    if (nd.right >= 0) nd.right += shift;
    w.nodes_.push_back(nd);
  }
  w.nodes_.push_back({-1, u.root_, v.root_ + shift});
  w.root_ = static_cast<int>(w.nodes_.size()) - 1;
  w.weight_ = u.weight_ + v.weight_;
  return w;
}

std::string OuterCommutatorWord::to_string() const { return render(*this, root_); }

OuterCommutatorWord parse_ocw(const std::string& text) {
  OuterCommutatorWord w;
  std::vector<long> vars;
  WordParser p(text);
  w.root_ = p.parse(w.nodes_, vars);
  p.finish();
  for (std::size_t i = 0; i < vars.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j)
      if (vars[j] == vars[i]) throw VariableError("word \"" + text + "\": variable x" + std::to_string(vars[i]) + " repeated");
    if (vars[i] != static_cast<long>(i) + 1)
      throw VariableError("word \"" + text + "\": expected x" + std::to_string(i + 1) + " but found x" +
                          std::to_string(vars[i]));
  }
  w.weight_ = vars.size();
  return w;
}

Subgroup verbal_subgroup(const FiniteGroup& g, const OuterCommutatorWord& w, const std::vector<Subgroup>& args) {
  if (args.size() != w.weight())
    throw ArityMismatch("word " + w.to_string() + " has weight " + std::to_string(w.weight()) + ", got " +
                        std::to_string(args.size()) + " arguments");
  for (std::size_t i = 0; i < args.size(); ++i)
    if (!is_subgroup(g, args[i]) || !is_normal(g, args[i]))
      throw NotNormal("argument " + std::to_string(i + 1) + " is not a normal subgroup");
  Subgroup out = eval(g, w, w.root(), args);
  if (!is_normal(g, out)) throw InvariantViolation("verbal subgroup of normal arguments is not normal");
  return out;
}

}  // namespace symm::group
