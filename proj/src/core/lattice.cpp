#include "symm/core/lattice.hpp"

#include <stdexcept>

#include "symm/core/errors.hpp"

namespace symm {

SubsetLattice::SubsetLattice(std::size_t n, std::vector<Permutation> generators)
    : n_(n), generators_(std::move(generators)) {
  for (const auto& g : generators_)
    if (g.size() != n_ || !is_permutation(g))
      throw std::invalid_argument("subset lattice generator is not a permutation of the ground set");
}

Codim SubsetLattice::codim(const Element& a) const {
  return Codim(static_cast<long>(n_ - a.count()));
}

Element SubsetLattice::apply(std::size_t g, const Element& a) const {
  return apply_permutation(generators_.at(g), a);
}

TableLattice::TableLattice(Tables tables) : t_(std::move(tables)) {
  const auto k = t_.codim.size();
  if (t_.leq.size() != k || t_.join.size() != k || t_.meet.size() != k)
    throw std::invalid_argument("table lattice: inconsistent table sizes");
  for (const auto& g : t_.generators)
    if (g.size() != k) throw std::invalid_argument("table lattice: generator has the wrong size");
}

std::size_t TableLattice::index(const Element& e) const {
  auto idx = e.indices();
  if (idx.size() != 1) throw std::invalid_argument("table lattice: element is not a singleton");
  return idx.front();
}

bool TableLattice::leq(const Element& a, const Element& b) const { return t_.leq[index(a)][index(b)]; }

Element TableLattice::join(const Element& a, const Element& b) const {
  return element(t_.join[index(a)][index(b)]);
}

Element TableLattice::meet(const Element& a, const Element& b) const {
  return element(t_.meet[index(a)][index(b)]);
}

Codim TableLattice::codim(const Element& a) const { return Codim(t_.codim[index(a)]); }

Element TableLattice::apply(std::size_t g, const Element& a) const {
  return element(t_.generators.at(g)[index(a)]);
}

std::optional<Element> TableLattice::top() const {
  if (!t_.top) return std::nullopt;
  return element(*t_.top);
}

DualLattice::DualLattice(LatticePtr base, CodimFn dual_codim)
    : base_(std::move(base)), codim_(std::move(dual_codim)) {}

LatticePtr dualize(LatticePtr lattice, DualLattice::CodimFn dual_codim) {
  return std::make_shared<DualLattice>(std::move(lattice), std::move(dual_codim));
}

Element join_fold(const LatticeInstance& lattice, std::span<const Element> family) {
  if (family.empty()) throw std::invalid_argument("join of an empty family");
  Element acc = family.front();
  for (std::size_t i = 1; i < family.size(); ++i) acc = lattice.join(acc, family[i]);
  return acc;
}

Element meet_fold(const LatticeInstance& lattice, std::span<const Element> family) {
  if (family.empty()) throw std::invalid_argument("meet of an empty family");
  Element acc = family.front();
  for (std::size_t i = 1; i < family.size(); ++i) acc = lattice.meet(acc, family[i]);
  return acc;
}

bool Predicate::operator()(std::span<const Element> args) const {
  if (args.size() != arity)
    throw ArityMismatch("predicate " + id + " expects " + std::to_string(arity) + " arguments, got " +
                        std::to_string(args.size()));
  return eval(args);
}

bool eval_repeated(const Predicate& p, const Element& a) {
  std::vector<Element> args(p.arity, a);
  return p(args);
}

}  // namespace symm
