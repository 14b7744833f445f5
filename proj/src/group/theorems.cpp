#include "symm/group/theorems.hpp"

#include <algorithm>
#include <functional>

namespace symm::group {

NormalSubgroupLattice::NormalSubgroupLattice(std::shared_ptr<const FiniteGroup> g, std::vector<Permutation> automorphisms)
    : g_(std::move(g)), auts_(std::move(automorphisms)) {
  for (const auto& p : auts_)
    if (!is_group_automorphism(*g_, p)) throw PreconditionViolated("lattice generator is not an automorphism");
}

Element NormalSubgroupLattice::join(const Element& a, const Element& b) const { return product(*g_, a, b); }

Codim NormalSubgroupLattice::codim(const Element& a) const { return log2_index(*g_, a); }

Codim log2_order(const Subgroup& a) { return Codim::log2(Integer(static_cast<unsigned long>(a.count()))); }

Codim log2_index(const FiniteGroup& g, const Subgroup& a) {
  return Codim::log2(Integer(static_cast<unsigned long>(g.order() / a.count())));
}

Predicate verbal_predicate(std::shared_ptr<const FiniteGroup> g, std::vector<VerbalCondition> conditions) {
  std::size_t t = 0;
  std::string id = "verbal";
  for (const auto& c : conditions) {
    t = std::max(t, c.word.weight());
    id += " " + c.word.to_string() + "|" + c.tester.to_string();
  }
  return Predicate{id, t, [g, conditions](std::span<const Element> args) {
                     for (const auto& c : conditions) {
                       std::vector<Subgroup> sub(args.begin(), args.begin() + c.word.weight());
                       if (!class_test(*g, c.tester, verbal_subgroup(*g, c.word, sub))) return false;
                     }
                     return true;
                   }};
}

Subgroup automorphism_core(const Subgroup& n, const std::vector<Permutation>& auts) {
  Subgroup core = n;
  std::vector<Subgroup> seen{n};
  for (std::size_t i = 0; i < seen.size(); ++i)
    for (const auto& p : auts) {
      auto img = apply_permutation(p, seen[i]);
      if (std::find(seen.begin(), seen.end(), img) == seen.end()) {
        seen.push_back(img);
        core &= img;
      }
    }
  return core;
}

namespace {

void require_normal(const FiniteGroup& g, const Subgroup& n) {
  if (n.universe() != g.order() || !is_subgroup(g, n)) throw PreconditionViolated("N is not a subgroup");
  if (!is_normal(g, n)) throw NotNormal("N is not normal");
}

Clause bound_clause(const Codim& value, const Codim& bound) {
  return {"bound", value <= bound, value.to_string() + " <= " + bound.to_string()};
}

}  // namespace

GroupRunResult khm_run(const FiniteGroup& g, const Subgroup& n, const std::vector<VerbalCondition>& conditions,
                       const GroupRunOptions& options) {
  require_normal(g, n);
  if (conditions.empty()) throw PreconditionViolated("khm_run: no verbal conditions");
  auto gp = std::make_shared<const FiniteGroup>(g);
  for (const auto& c : conditions) {
    std::vector<Subgroup> args(c.word.weight(), n);
    if (!class_test(g, c.tester, verbal_subgroup(g, c.word, args)))
      throw PreconditionViolated("N does not satisfy " + c.word.to_string() + " in class " + c.tester.to_string());
  }
  GroupRunResult out;
  out.aut = group_automorphisms(g, options.order_cap);
  out.arity = verbal_predicate(gp, conditions).arity;
  NormalSubgroupLattice lattice(gp, out.aut.generators);
  out.engine = engine_run(lattice, n, out.arity, options.engine);
  out.H = out.engine.H;

  out.clauses.push_back({"characteristic", is_characteristic(out.H, out.aut.generators), ""});
  for (const auto& c : conditions) {
    std::vector<Subgroup> args(c.word.weight(), out.H);
    out.clauses.push_back({"law " + c.word.to_string() + " in " + c.tester.to_string(),
                           class_test(g, c.tester, verbal_subgroup(g, c.word, args)), ""});
  }
  out.clauses.push_back(bound_clause(log2_index(g, out.H), iterate_f(log2_index(g, n), out.arity - 1)));
  out.clauses.push_back({"formation", automorphism_core(n, out.aut.generators).subset_of(out.H), ""});
  require_all(out.clauses, "khm_run");
  return out;
}

std::set<std::uint64_t> spectrum_of_quotient(const FiniteGroup& g, const Subgroup& k) {
  std::set<std::uint64_t> out;
  for (std::uint32_t x = 0; x < g.order(); ++x) {
    std::uint64_t m = 1;
    std::uint32_t y = x;
    while (!k.test(y)) {
      y = g.mul(y, x);
      ++m;
    }
    out.insert(m);
  }
  return out;
}

Predicate spectrum_predicate(std::shared_ptr<const FiniteGroup> g, std::vector<std::uint64_t> orders) {
  const std::size_t t = orders.size();
  std::string id = "spectrum";
  for (auto o : orders) id += " " + std::to_string(o);
  return Predicate{id, t, [g, orders](std::span<const Element> args) {
                     for (std::uint32_t x = 0; x < g->order(); ++x) {
                       bool any = false;
                       for (std::size_t i = 0; i < orders.size() && !any; ++i) any = args[i].test(g->pow(x, orders[i]));
                       if (!any) return false;
                     }
                     return true;
                   }};
}

GroupRunResult spectrum_run(const FiniteGroup& g, const Subgroup& n, const GroupRunOptions& options) {
  require_normal(g, n);
  auto gp = std::make_shared<const FiniteGroup>(g);
  const auto spec = spectrum_of_quotient(g, n);
  GroupRunResult out;
  out.aut = group_automorphisms(g, options.order_cap);
  out.arity = spec.size();
  auto base = std::make_shared<NormalSubgroupLattice>(gp, out.aut.generators);
  auto dual = dualize(base, [](const Element& a) { return log2_order(a); });
  out.engine = engine_run(*dual, n, out.arity, options.engine);
  out.H = out.engine.H;

  const auto got = spectrum_of_quotient(g, out.H);
  out.clauses = {
      {"characteristic", is_characteristic(out.H, out.aut.generators), ""},
      {"normal", is_subgroup(g, out.H) && is_normal(g, out.H), ""},
      {"spectrum-contained", std::includes(spec.begin(), spec.end(), got.begin(), got.end()), ""},
      bound_clause(log2_order(out.H), iterate_f(log2_order(n), out.arity - 1)),
  };
  require_all(out.clauses, "spectrum_run");
  return out;
}

std::string LayerRequirement::to_string() const {
  if (word) return word->to_string() + "=1";
  if (tester) return tester->to_string();
  return "?";
}

LayerRequirement word_layer(const std::string& word) { return {parse_ocw(word), std::nullopt}; }
LayerRequirement class_layer(const std::string& tag) { return {std::nullopt, parse_class(tag)}; }

bool layer_holds(const FiniteGroup& g, const LayerRequirement& r, const Subgroup& a, const Subgroup& b) {
  if (r.word) {
    std::vector<Subgroup> args(r.word->weight(), a);
    return verbal_subgroup(g, *r.word, args).subset_of(b);
  }
  if (r.tester) return class_test_quotient(g, *r.tester, a, b);
  throw PreconditionViolated("empty layer requirement");
}

std::optional<std::vector<Subgroup>> find_normal_series(const FiniteGroup& g, const Subgroup& n,
                                                        const std::vector<LayerRequirement>& spec,
                                                        std::size_t order_cap) {
  if (g.order() > order_cap) throw CapExceeded("series search limited to groups of order <= " + std::to_string(order_cap));
  require_normal(g, n);
  if (spec.empty()) return n == g.trivial() ? std::optional(std::vector<Subgroup>{n}) : std::nullopt;
  std::vector<Subgroup> normals;
  for (const auto& s : all_normal_subgroups(g))
    if (s.subset_of(n)) normals.push_back(s);
  std::vector<Subgroup> chain{g.trivial()};
  std::function<bool(std::size_t)> dfs = [&](std::size_t i) {
    if (i == spec.size()) return chain.back() == n;
    for (const auto& a : normals) {
      if (!chain.back().subset_of(a)) continue;
      if (i + 1 == spec.size() && a != n) continue;
      if (!layer_holds(g, spec[i], a, chain.back())) continue;
      chain.push_back(a);
      if (dfs(i + 1)) return true;
      chain.pop_back();
    }
    return false;
  };
  if (dfs(0)) return chain;
  return std::nullopt;
}

bool series_predicate(const FiniteGroup& g, const Subgroup& n, const std::vector<LayerRequirement>& spec,
                      std::size_t order_cap) {
  return find_normal_series(g, n, spec, order_cap).has_value();
}

Predicate series_composed_predicate(std::shared_ptr<const FiniteGroup> g, const std::vector<LayerRequirement>& spec) {
  if (spec.empty()) throw PreconditionViolated("series specification is empty");
  auto weight = [](const LayerRequirement& r) { return r.word ? r.word->weight() : std::size_t{1}; };

  // Bottom layer: A_1 / 1.
  const auto& first = spec.front();
  Predicate p{"series " + first.to_string(), weight(first), [g, first](std::span<const Element> args) {
                if (first.word) {
                  std::vector<Subgroup> sub(args.begin(), args.end());
                  return verbal_subgroup(*g, *first.word, sub) == g->trivial();
                }
                return class_test(*g, *first.tester, args[0]);
              }};
  const auto candidates = all_normal_subgroups(*g);
  for (std::size_t i = 1; i < spec.size(); ++i) {
    const auto layer = spec[i];
    RowPredicate row{"layer " + layer.to_string(), weight(layer),
                     [g, layer](std::span<const Element> xs, const Element& m) {
                       if (layer.word) {
                         std::vector<Subgroup> sub(xs.begin(), xs.end());
                         return verbal_subgroup(*g, *layer.word, sub).subset_of(m);
                       }
                       return class_test_quotient(*g, *layer.tester, xs[0], xs[0] & m);
                     }};
    std::vector<RowPredicate> rows(p.arity, row);
    std::string id = p.id + " / " + layer.to_string();
    p = compose_predicates(p, std::move(rows), candidates);
    p.id = id;
  }
  return p;
}

GroupRunResult series_run(const FiniteGroup& g, const Subgroup& n, const std::vector<LayerRequirement>& spec,
                          const GroupRunOptions& options) {
  if (!series_predicate(g, n, spec, options.order_cap))
    throw PreconditionViolated("N has no normal series of the requested shape");
  auto gp = std::make_shared<const FiniteGroup>(g);
  auto p = series_composed_predicate(gp, spec);
  GroupRunResult out;
  out.aut = group_automorphisms(g, options.order_cap);
  out.arity = p.arity;
  NormalSubgroupLattice lattice(gp, out.aut.generators);
  out.engine = engine_run(lattice, n, out.arity, options.engine);
  out.H = out.engine.H;
  out.clauses = {
      {"characteristic", is_characteristic(out.H, out.aut.generators), ""},
      {"series", series_predicate(g, out.H, spec, options.order_cap), ""},
      {"composed-predicate", eval_repeated(p, out.H), ""},
      bound_clause(log2_index(g, out.H), iterate_f(log2_index(g, n), out.arity - 1)),
  };
  require_all(out.clauses, "series_run");
  return out;
}

}  // namespace symm::group
