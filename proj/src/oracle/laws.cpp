#include "symm/oracle/laws.hpp"

#include <omp.h>

#include <algorithm>
#include <map>
#include <random>

#include "symm/core/errors.hpp"

namespace symm::oracle {

namespace {

using Digits = std::vector<std::size_t>;

// Number of tuples, or nullopt when it exceeds `limit`.
std::optional<std::size_t> tuple_count(std::size_t u, std::size_t t, std::size_t limit) {
  std::size_t n = 1;
  for (std::size_t i = 0; i < t; ++i) {
    if (u != 0 && n > limit / u) return std::nullopt;
    n *= u;
  }
  return n <= limit ? std::optional(n) : std::nullopt;
}

Digits decode(std::size_t idx, std::size_t u, std::size_t t) {
  Digits d(t);
  for (std::size_t i = t; i-- > 0;) {
    d[i] = idx % u;
    idx /= u;
  }
  return d;
}

// Mixed-radix increment, last coordinate fastest.
void advance(Digits& d, std::size_t u) {
  for (std::size_t i = d.size(); i-- > 0;) {
    if (++d[i] < u) return;
    d[i] = 0;
  }
}

std::vector<Element> tuple_of(std::span<const Element> universe, const Digits& d) {
  std::vector<Element> out;
  for (auto i : d) out.push_back(universe[i]);
  return out;
}

void fill_block(const Predicate& p, std::span<const Element> universe, std::size_t lo, std::size_t hi,
                std::vector<std::uint8_t>& table) {
  if (lo >= hi) return;
  const std::size_t u = universe.size(), t = p.arity;
  Digits d = decode(lo, u, t);
  std::vector<Element> args = tuple_of(universe, d);
  for (std::size_t idx = lo;;) {
    table[idx] = p(args) ? 1 : 0;
    if (++idx == hi) break;
    for (std::size_t i = t; i-- > 0;) {
      if (++d[i] < u) {
        args[i] = universe[d[i]];
        break;
      }
      d[i] = 0;
      args[i] = universe[0];
    }
  }
}

std::vector<std::size_t> strides(std::size_t u, std::size_t t) {
  std::vector<std::size_t> s(t, 1);
  for (std::size_t i = t; i-- > 1;) s[i - 1] = s[i] * u;
  return s;
}

void require_arity(const Predicate& p) {
  if (p.arity == 0) throw ArityMismatch("law check: predicate '" + p.id + "' has arity 0");
}

LawReport monotone_exhaustive(const LatticeInstance& lattice, const Predicate& p, std::span<const Element> universe,
                              std::size_t total, Execution exec) {
  LawReport r{p.id, "monotone", 0, true, std::nullopt, {}};
  const std::size_t u = universe.size(), t = p.arity;
  // Lower covers inside the universe; checking covers reaches every
  // pointwise-smaller tuple by a chain of single-coordinate steps.
  std::vector<std::vector<std::size_t>> covers(u);
  for (std::size_t a = 0; a < u; ++a)
    for (std::size_t c = 0; c < u; ++c) {
      if (c == a || !lattice.leq(universe[c], universe[a])) continue;
      bool direct = true;
      for (std::size_t d = 0; d < u && direct; ++d)
        if (d != a && d != c && lattice.leq(universe[c], universe[d]) && lattice.leq(universe[d], universe[a]))
          direct = false;
      if (direct) covers[a].push_back(c);
    }
  const auto table = truth_table(p, universe, exec);
  const auto s = strides(u, t);
  Digits d(t, 0);
  for (std::size_t idx = 0; idx < total; ++idx, advance(d, u)) {
    if (!table[idx]) continue;
    for (std::size_t i = 0; i < t; ++i)
      for (auto c : covers[d[i]]) {
        ++r.checks;
        std::size_t lower = idx - d[i] * s[i] + c * s[i];
        if (!table[lower]) {
          r.premises = {tuple_of(universe, d)};
          d[i] = c;
          r.counterexample = tuple_of(universe, d);
          return r;
        }
      }
  }
  return r;
}

LawReport multilinear_exhaustive(const LatticeInstance& lattice, const Predicate& p,
                                 std::span<const Element> universe, std::size_t total, Execution exec) {
  LawReport r{p.id, "multilinear", 0, true, std::nullopt, {}};
  const std::size_t u = universe.size(), t = p.arity;
  std::map<Element, std::size_t> index;
  for (std::size_t i = 0; i < u; ++i) index.emplace(universe[i], i);
  std::vector<std::vector<std::size_t>> join(u, std::vector<std::size_t>(u));
  for (std::size_t a = 0; a < u; ++a)
    for (std::size_t b = 0; b < u; ++b) {
      auto it = index.find(lattice.join(universe[a], universe[b]));
      if (it == index.end()) throw PreconditionViolated("law check: universe is not closed under join");
      join[a][b] = it->second;
    }
  const auto table = truth_table(p, universe, exec);
  const auto s = strides(u, t);
  std::vector<std::size_t> members;
  for (std::size_t i = 0; i < t; ++i) {
    Digits ctx(t, 0);
    for (std::size_t base = 0; base < total; ++base, advance(ctx, u)) {
      if (ctx[i] != 0) continue;
      members.clear();
      for (std::size_t a = 0; a < u; ++a)
        if (table[base + a * s[i]]) members.push_back(a);
      if (members.size() == u) continue;  // the whole universe is join-closed
      for (std::size_t x = 0; x < members.size(); ++x)
        for (std::size_t y = x + 1; y < members.size(); ++y) {
          ++r.checks;
          std::size_t j = join[members[x]][members[y]];
          if (!table[base + j * s[i]]) {
            Digits d = ctx;
            d[i] = members[x];
            r.premises.push_back(tuple_of(universe, d));
            d[i] = members[y];
            r.premises.push_back(tuple_of(universe, d));
            d[i] = j;
            r.counterexample = tuple_of(universe, d);
            return r;
          }
        }
    }
  }
  return r;
}

std::vector<Element> random_tuple(std::span<const Element> universe, std::size_t t, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::size_t> pick(0, universe.size() - 1);
  std::vector<Element> out;
  for (std::size_t i = 0; i < t; ++i) out.push_back(universe[pick(rng)]);
  return out;
}

LawReport monotone_sampled(const LatticeInstance& lattice, const Predicate& p, std::span<const Element> universe,
                           const LawOptions& o) {
  LawReport r{p.id, "monotone", 0, false, std::nullopt, {}};
  std::mt19937_64 rng(o.seed);
  std::uniform_int_distribution<std::size_t> coord(0, p.arity - 1);
  for (std::size_t n = 0; n < o.samples; ++n) {
    auto x = random_tuple(universe, p.arity, rng);
    if (!p(x)) continue;
    std::size_t i = coord(rng);
    std::vector<std::size_t> below;
    for (std::size_t c = 0; c < universe.size(); ++c)
      if (lattice.leq(universe[c], x[i])) below.push_back(c);
    auto y = x;
    y[i] = universe[below[std::uniform_int_distribution<std::size_t>(0, below.size() - 1)(rng)]];
    ++r.checks;
    if (!p(y)) {
      r.premises = {x};
      r.counterexample = y;
      return r;
    }
  }
  return r;
}

LawReport multilinear_sampled(const LatticeInstance& lattice, const Predicate& p,
                              std::span<const Element> universe, const LawOptions& o) {
  LawReport r{p.id, "multilinear", 0, false, std::nullopt, {}};
  std::mt19937_64 rng(o.seed);
  std::uniform_int_distribution<std::size_t> coord(0, p.arity - 1), pick(0, universe.size() - 1);
  for (std::size_t n = 0; n < o.samples; ++n) {
    auto x = random_tuple(universe, p.arity, rng);
    if (!p(x)) continue;
    std::size_t i = coord(rng);
    auto y = x;
    y[i] = universe[pick(rng)];
    if (!p(y)) continue;
    auto z = x;
    z[i] = lattice.join(x[i], y[i]);
    ++r.checks;
    if (!p(z)) {
      r.premises = {x, y};
      r.counterexample = z;
      return r;
    }
  }
  return r;
}

}  // namespace

Predicate even_size_predicate() {
  return {"|arg1| even", 1, [](std::span<const Element> a) { return a[0].count() % 2 == 0; }};
}

Predicate at_most_one_predicate() {
  return {"|arg1| <= 1", 1, [](std::span<const Element> a) { return a[0].count() <= 1; }};
}

std::vector<Element> all_subsets(std::size_t n) {
  if (n >= 24) throw CapExceeded("all_subsets: ground set of " + std::to_string(n) + " is too large");
  std::vector<Element> out;
  for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
    Bitset b(n);
    for (std::size_t i = 0; i < n; ++i)
      if (mask >> i & 1) b.set(i);
    out.push_back(b);
  }
  std::sort(out.begin(), out.end());
  return out;
}

LawReport check_monotone(const LatticeInstance& lattice, const Predicate& p, std::span<const Element> universe,
                         const LawOptions& options) {
  require_arity(p);
  if (universe.empty()) return {p.id, "monotone", 0, true, std::nullopt, {}};
  if (auto total = tuple_count(universe.size(), p.arity, options.budget))
    return monotone_exhaustive(lattice, p, universe, *total, options.execution);
  return monotone_sampled(lattice, p, universe, options);
}

LawReport check_multilinear(const LatticeInstance& lattice, const Predicate& p, std::span<const Element> universe,
                            const LawOptions& options) {
  require_arity(p);
  if (universe.empty()) return {p.id, "multilinear", 0, true, std::nullopt, {}};
  if (auto total = tuple_count(universe.size(), p.arity, options.budget))
    return multilinear_exhaustive(lattice, p, universe, *total, options.execution);
  return multilinear_sampled(lattice, p, universe, options);
}

bool revalidate(const LatticeInstance& lattice, const Predicate& p, const LawReport& report) {
  if (!report.counterexample) return true;
  const auto& cex = *report.counterexample;
  if (cex.size() != p.arity || p(cex)) return false;
  for (const auto& premise : report.premises)
    if (premise.size() != p.arity || !p(premise)) return false;
  if (report.law == "monotone") {
    if (report.premises.size() != 1) return false;
    for (std::size_t i = 0; i < p.arity; ++i)
      if (!lattice.leq(cex[i], report.premises[0][i])) return false;
    return true;
  }
  if (report.law == "multilinear") {
    if (report.premises.size() != 2) return false;
    const auto &a = report.premises[0], &b = report.premises[1];
    std::size_t differing = 0;
    for (std::size_t i = 0; i < p.arity; ++i) {
      if (cex[i] != lattice.join(a[i], b[i])) return false;
      if (a[i] != b[i]) ++differing;
    }
    return differing <= 1;
  }
  return false;
}

nlohmann::json to_json(const LatticeInstance& lattice, const LawReport& report) {
  auto tuple = [&](const std::vector<Element>& xs) {
    auto j = nlohmann::json::array();
    for (const auto& x : xs) j.push_back(lattice.describe(x));
    return j;
  };
  nlohmann::json j{{"predicate", report.predicate_id},
                   {"law", report.law},
                   {"checks", report.checks},
                   {"exhaustive", report.exhaustive},
                   {"passed", report.passed()}};
  if (report.counterexample) {
    j["counterexample"] = tuple(*report.counterexample);
    auto prem = nlohmann::json::array();
    for (const auto& x : report.premises) prem.push_back(tuple(x));
    j["premises"] = prem;
  }
  return j;
}

namespace kernels {

std::vector<std::uint8_t> truth_table_serial(const Predicate& p, std::span<const Element> universe) {
  auto total = tuple_count(universe.size(), p.arity, static_cast<std::size_t>(-1));
  if (!total) throw CapExceeded("truth table too large");
  std::vector<std::uint8_t> table(*total);
  fill_block(p, universe, 0, *total, table);
  return table;
}

std::vector<std::uint8_t> truth_table_parallel(const Predicate& p, std::span<const Element> universe) {
  auto total = tuple_count(universe.size(), p.arity, static_cast<std::size_t>(-1));
  if (!total) throw CapExceeded("truth table too large");
  std::vector<std::uint8_t> table(*total);
  const std::size_t n = *total;
#pragma omp parallel
  {
    const auto threads = static_cast<std::size_t>(omp_get_num_threads());
    const auto me = static_cast<std::size_t>(omp_get_thread_num());
    const std::size_t block = (n + threads - 1) / threads;
    fill_block(p, universe, std::min(n, me * block), std::min(n, (me + 1) * block), table);
  }
  return table;
}

}  // namespace kernels

std::vector<std::uint8_t> truth_table(const Predicate& p, std::span<const Element> universe, Execution exec) {
  return exec == Execution::serial ? kernels::truth_table_serial(p, universe)
                                   : kernels::truth_table_parallel(p, universe);
}

}  // namespace symm::oracle
