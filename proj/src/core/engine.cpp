#include "symm/core/engine.hpp"

#include <algorithm>
#include <sstream>

#include "symm/core/errors.hpp"

namespace symm {

Selection greedy_select(const LatticeInstance& lattice, std::span<const Element> family) {
  if (family.empty()) throw std::invalid_argument("greedy_select: empty family");
  Selection out{{family.front()}, family.front()};
  for (std::size_t i = 1; i < family.size(); ++i) {
    Element next = lattice.join(out.sup, family[i]);
    if (next != out.sup) {
      out.selected.push_back(family[i]);
      out.sup = std::move(next);
    }
  }
  return out;
}

EngineResult engine_run(const LatticeInstance& lattice, const Element& seed, std::size_t t,
                        const EngineOptions& options) {
  if (t == 0) throw std::invalid_argument("engine_run: arity must be positive");
  EngineResult result;
  result.codim_seed = lattice.codim(seed);
  Element current = seed;
  for (std::size_t s = 1; s <= t; ++s) {
    auto orbit = orbit_closure(lattice, current, options.orbit_cap, options.execution);
    auto sel = greedy_select(lattice, orbit);
    EngineStep step;
    step.orbit_size = orbit.size();
    step.N = meet_fold(lattice, sel.selected);
    step.G = std::move(sel.sup);
    step.selected = std::move(sel.selected);
    step.codim_N = lattice.codim(step.N);
    step.codim_G = lattice.codim(step.G);
    current = step.N;
    result.trace.steps.push_back(std::move(step));
  }
  result.H = result.trace.steps.back().G;
  result.codim_H = lattice.codim(result.H);
  result.bound = iterate_f(result.codim_seed, t - 1);

  std::ostringstream failures;
  for (std::size_t g = 0; g < lattice.generator_count(); ++g)
    if (!lattice.leq(lattice.apply(g, result.H), result.H))
      failures << "generator " << g << " moves H outside itself; ";
  if (result.codim_H > result.bound)
    failures << "codim(H) = " << result.codim_H.to_string() << " exceeds f^" << (t - 1) << " bound "
             << result.bound.to_string() << "; ";
  if (!lattice.leq(result.H, result.trace.steps.front().G)) failures << "H is not below G_1; ";
  for (const auto& v : trace_violations(lattice, seed, result.trace)) failures << v << "; ";
  if (!failures.str().empty()) throw InvariantViolation("engine post-check failed: " + failures.str());
  return result;
}

std::vector<std::string> trace_violations(const LatticeInstance& lattice, const Element& seed,
                                          const EngineTrace& trace) {
  std::vector<std::string> out;
  Codim prev_codim = lattice.codim(seed);
  for (std::size_t i = 0; i < trace.steps.size(); ++i) {
    const auto& st = trace.steps[i];
    const std::string tag = "step " + std::to_string(i + 1) + ": ";
    if (st.selected.empty()) {
      out.push_back(tag + "empty selection");
      continue;
    }
    if (join_fold(lattice, st.selected) != st.G) out.push_back(tag + "G_s is not the join of the selection");
    if (meet_fold(lattice, st.selected) != st.N) out.push_back(tag + "N_s is not the meet of the selection");
    if (lattice.codim(st.N) != st.codim_N || lattice.codim(st.G) != st.codim_G)
      out.push_back(tag + "recorded codimension disagrees with the lattice");
    if (st.codim_N > bound_step(prev_codim)) out.push_back(tag + "codim(N_s) > f(codim N_{s-1})");
    if (st.codim_G > prev_codim) out.push_back(tag + "codim(G_s) > codim(N_{s-1})");
    if (i > 0 && !lattice.leq(st.G, trace.steps[i - 1].G)) out.push_back(tag + "G_s is not below G_{s-1}");
    // Greedy count bound under integer-gapped codimension.
    Codim max_codim = lattice.codim(st.selected.front());
    for (const auto& e : st.selected) max_codim = std::max(max_codim, lattice.codim(e));
    if (Codim(static_cast<long>(st.selected.size()) - 1) > max_codim)
      out.push_back(tag + "more selected images than max codim + 1");
    prev_codim = st.codim_N;
  }
  return out;
}

std::vector<std::size_t> predicate_failures_along_trace(const Predicate& p, const EngineTrace& trace) {
  std::vector<std::size_t> failed;
  const std::size_t t = p.arity;
  for (std::size_t s = 1; s <= trace.steps.size() && s <= t; ++s) {
    const auto& st = trace.steps[s - 1];
    std::vector<Element> args(t - s, st.N);
    args.insert(args.end(), s, st.G);
    if (!p(args)) failed.push_back(s);
  }
  if (!trace.steps.empty() && !eval_repeated(p, trace.steps.back().G)) failed.push_back(trace.steps.size() + 1);
  return failed;
}

Predicate compose_predicates(const Predicate& q, std::vector<RowPredicate> rows, std::vector<Element> candidates,
                             std::size_t budget) {
  const std::size_t k = q.arity;
  if (rows.size() != k) throw ArityMismatch("composition needs one row predicate per argument of Q");
  const std::size_t l = rows.empty() ? 0 : rows.front().row_arity;
  for (const auto& r : rows)
    if (r.row_arity != l) throw ArityMismatch("row predicates must share one first-row arity");
  std::size_t combos = 1;
  for (std::size_t i = 0; i < k; ++i) {
    if (!candidates.empty() && combos > budget / candidates.size())
      throw CapExceeded("composition search space exceeds budget " + std::to_string(budget));
    combos *= candidates.size();
  }

  Predicate out;
  out.id = q.id + "∘R";
  out.arity = k * l;
  out.eval = [q, rows = std::move(rows), candidates = std::move(candidates), k, l](std::span<const Element> args) {
    if (candidates.empty()) return false;
    // Precompute which candidates satisfy each row; Q is searched only over
    // those.
    std::vector<std::vector<std::size_t>> ok(k);
    for (std::size_t i = 0; i < k; ++i) {
      auto row = args.subspan(i * l, l);
      for (std::size_t c = 0; c < candidates.size(); ++c)
        if (rows[i].eval(row, candidates[c])) ok[i].push_back(c);
      if (ok[i].empty()) return false;
    }
    std::vector<std::size_t> pick(k, 0);
    std::vector<Element> ms(k);
    while (true) {
      for (std::size_t i = 0; i < k; ++i) ms[i] = candidates[ok[i][pick[i]]];
      if (q(ms)) return true;
      std::size_t i = 0;
      while (i < k && ++pick[i] == ok[i].size()) pick[i++] = 0;
      if (i == k) return false;
    }
  };
  return out;
}

bool lemma1_check(const LatticeInstance& lattice, const Predicate& p, std::size_t m,
                  std::span<const Element> family, const Element& top) {
  if (m == 0 || m > p.arity)
    throw ArityMismatch("lemma1_check: m = " + std::to_string(m) + " outside 1.." + std::to_string(p.arity));
  for (const auto& n : family) {
    std::vector<Element> args(m, n);
    args.insert(args.end(), p.arity - m, top);
    if (!p(args)) throw PreconditionViolated("lemma1_check: P(N x m, top x (t-m)) fails for N = " + lattice.describe(n));
  }
  Element lo = meet_fold(lattice, family);
  Element hi = join_fold(lattice, family);
  std::vector<Element> args(m - 1, lo);
  args.insert(args.end(), p.arity - m + 1, hi);
  return p(args);
}

}  // namespace symm
