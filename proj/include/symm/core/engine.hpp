#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "symm/core/kernels.hpp"
#include "symm/core/lattice.hpp"

namespace symm {

inline constexpr std::size_t kDefaultOrbitCap = 100000;

struct Selection {
  std::vector<Element> selected;
  Element sup;
};

/// Scans `family` in order and keeps an element iff it strictly raises the
/// running join. The final join equals the join of the whole family.
Selection greedy_select(const LatticeInstance& lattice, std::span<const Element> family);

struct EngineStep {
  std::size_t orbit_size = 0;
  std::vector<Element> selected;  // images of the previous N, canonical order
  Element G;                      // join of `selected`; generator-invariant
  Element N;                      // meet fold of `selected`
  Codim codim_N;
  Codim codim_G;
};

struct EngineTrace {
  std::vector<EngineStep> steps;
};

struct EngineResult {
  Element H;
  EngineTrace trace;
  Codim codim_seed;
  Codim codim_H;
  Codim bound;  // f^{t-1}(codim_seed)
};

struct EngineOptions {
  std::size_t orbit_cap = kDefaultOrbitCap;
  Execution execution = Execution::parallel;
};

/// Runs the t-step invariantization from the seed N.
///
/// Step s closes N_{s-1} under the generators (N_0 = N), greedily selects a
/// family with the same join G_s, and sets N_s to the meet fold of that
/// family. Returns H = G_t. Before returning, re-checks that H is invariant
/// under every generator, that codim(H) <= f^{t-1}(codim N), that H <= G_1,
/// and every per-step trace inequality; any failure throws
/// InvariantViolation.
EngineResult engine_run(const LatticeInstance& lattice, const Element& seed, std::size_t t,
                        const EngineOptions& options = {});

/// Human-readable list of violated trace inequalities (empty when sound):
/// codim(N_s) <= f(codim N_{s-1}), codim(G_s) <= codim(N_{s-1}),
/// G_s <= G_{s-1}, G_s = join(selected), N_s = meet fold(selected),
/// |selected| - 1 <= max codim over the orbit.
std::vector<std::string> trace_violations(const LatticeInstance& lattice, const Element& seed,
                                          const EngineTrace& trace);

/// Evaluates P on (N_s x (t-s), G_s x s) for each step s and on (H, ..., H).
/// Returns the 1-based steps where P failed; step t+1 denotes the final H.
std::vector<std::size_t> predicate_failures_along_trace(const Predicate& p, const EngineTrace& trace);

/// A predicate with a first row of `row_arity` elements and one second-row
/// element M.
struct RowPredicate {
  std::string id;
  std::size_t row_arity = 0;
  std::function<bool(std::span<const Element> row, const Element& m)> eval;
};

inline constexpr std::size_t kDefaultCompositionBudget = 1u << 20;

/// Composition Q o R: true on (N_1..N_{kl}) iff some M_1..M_k drawn from
/// `candidates` satisfy Q(M_1..M_k) and R_i(N_{(i-1)l+1..il}; M_i) for all i.
/// Exhaustive; throws CapExceeded if |candidates|^k exceeds `budget`.
Predicate compose_predicates(const Predicate& q, std::vector<RowPredicate> rows, std::vector<Element> candidates,
                             std::size_t budget = kDefaultCompositionBudget);

/// Evaluates P(meet(F) x (m-1), join(F) x (t-m+1)) for the family F.
/// Throws ArityMismatch when m is zero or exceeds the arity, and
/// PreconditionViolated when P(N x m, top x (t-m)) fails for some N in F.
bool lemma1_check(const LatticeInstance& lattice, const Predicate& p, std::size_t m,
                  std::span<const Element> family, const Element& top);

}  // namespace symm
