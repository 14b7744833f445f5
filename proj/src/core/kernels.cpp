#include "symm/core/kernels.hpp"

#include <algorithm>
#include <atomic>
#include <set>
#include <string>
#include <unordered_set>

#include "symm/core/errors.hpp"

namespace symm {

namespace {

[[noreturn]] void orbit_cap(std::size_t cap) {
  throw CapExceeded("orbit closure exceeded " + std::to_string(cap) + " elements");
}

/// Scan the k-combinations of positions whose first position is `first`.
std::optional<std::vector<std::size_t>> scan_bucket(std::span<const std::size_t> ids, std::size_t k,
                                                    std::size_t first, const kernels::SubsetTest& test) {
  const std::size_t n = ids.size();
  std::vector<std::size_t> pos(k);
  std::vector<std::size_t> chosen(k);
  pos[0] = first;
  for (std::size_t i = 1; i < k; ++i) pos[i] = first + i;
  if (k > 0 && pos[k - 1] >= n) return std::nullopt;
  while (true) {
    for (std::size_t i = 0; i < k; ++i) chosen[i] = ids[pos[i]];
    if (test(chosen)) return chosen;
    // Advance positions 1..k-1 only; position 0 stays fixed in this bucket.
    std::size_t i = k;
    while (i > 1 && pos[i - 1] == n - k + (i - 1)) --i;
    if (i == 1) return std::nullopt;
    ++pos[i - 1];
    for (std::size_t j = i; j < k; ++j) pos[j] = pos[j - 1] + 1;
  }
}

}  // namespace

namespace kernels {

std::vector<Element> orbit_closure_serial(const LatticeInstance& lattice, const Element& seed, std::size_t cap) {
  std::set<Element> seen{seed};
  std::vector<Element> work{seed};
  while (!work.empty()) {
    Element x = std::move(work.back());
    work.pop_back();
    for (std::size_t g = 0; g < lattice.generator_count(); ++g) {
      Element y = lattice.apply(g, x);
      if (seen.insert(y).second) {
        if (seen.size() > cap) orbit_cap(cap);
        work.push_back(std::move(y));
      }
    }
  }
  return {seen.begin(), seen.end()};
}

std::vector<Element> orbit_closure_parallel(const LatticeInstance& lattice, const Element& seed, std::size_t cap) {
  std::unordered_set<Element, BitsetHash> seen{seed};
  std::vector<Element> frontier{seed};
  const auto gens = static_cast<long>(lattice.generator_count());
  while (!frontier.empty()) {
    const long tasks = static_cast<long>(frontier.size()) * gens;
    std::vector<Element> images(static_cast<std::size_t>(tasks));
#pragma omp parallel for schedule(static)
    for (long i = 0; i < tasks; ++i) {
      images[static_cast<std::size_t>(i)] =
          lattice.apply(static_cast<std::size_t>(i % gens), frontier[static_cast<std::size_t>(i / gens)]);
    }
    std::vector<Element> next;
    for (auto& y : images) {
      if (seen.insert(y).second) {
        if (seen.size() > cap) orbit_cap(cap);
        next.push_back(std::move(y));
      }
    }
    frontier = std::move(next);
  }
  std::vector<Element> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<std::vector<std::size_t>> first_subset_serial(std::span<const std::size_t> ids, std::size_t k,
                                                            const SubsetTest& test) {
  if (k == 0) {
    std::vector<std::size_t> none;
    return test(none) ? std::optional(none) : std::nullopt;
  }
  for (std::size_t first = 0; first + k <= ids.size(); ++first)
    if (auto hit = scan_bucket(ids, k, first, test)) return hit;
  return std::nullopt;
}

std::optional<std::vector<std::size_t>> first_subset_parallel(std::span<const std::size_t> ids, std::size_t k,
                                                              const SubsetTest& test) {
  if (k == 0 || ids.size() < k) return first_subset_serial(ids, k, test);
  const long buckets = static_cast<long>(ids.size() - k + 1);
  std::vector<std::optional<std::vector<std::size_t>>> hits(static_cast<std::size_t>(buckets));
  std::atomic<long> best{buckets};
#pragma omp parallel for schedule(dynamic, 1)
  for (long b = 0; b < buckets; ++b) {
    if (b > best.load(std::memory_order_relaxed)) continue;
    auto hit = scan_bucket(ids, k, static_cast<std::size_t>(b), test);
    if (hit) {
      hits[static_cast<std::size_t>(b)] = std::move(hit);
      long cur = best.load();
      while (b < cur && !best.compare_exchange_weak(cur, b)) {
      }
    }
  }
  for (auto& h : hits)
    if (h) return h;
  return std::nullopt;
}

}  // namespace kernels

std::vector<Element> orbit_closure(const LatticeInstance& lattice, const Element& seed, std::size_t cap,
                                   Execution exec) {
  return exec == Execution::serial ? kernels::orbit_closure_serial(lattice, seed, cap)
                                   : kernels::orbit_closure_parallel(lattice, seed, cap);
}

std::optional<std::vector<std::size_t>> first_subset(std::span<const std::size_t> ids, std::size_t k,
                                                     const kernels::SubsetTest& test, Execution exec) {
  return exec == Execution::serial ? kernels::first_subset_serial(ids, k, test)
                                   : kernels::first_subset_parallel(ids, k, test);
}

bool for_each_combination(std::size_t n, std::size_t k,
                          const std::function<bool(std::span<const std::size_t>)>& visit) {
  if (k > n) return true;
  std::vector<std::size_t> c(k);
  for (std::size_t i = 0; i < k; ++i) c[i] = i;
  while (true) {
    if (!visit(c)) return false;
    std::size_t i = k;
    while (i > 0 && c[i - 1] == n - k + (i - 1)) --i;
    if (i == 0) return true;
    ++c[i - 1];
    for (std::size_t j = i; j < k; ++j) c[j] = c[j - 1] + 1;
  }
}

}  // namespace symm
