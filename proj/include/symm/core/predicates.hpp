#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "symm/core/lattice.hpp"

namespace symm {

/// P(N_1..N_t) = no listed tuple (x_1..x_t) has x_i in N_i for every i.
/// Monotone and multilinear for any tuple list.
Predicate forbidden_tuple_predicate(std::string id, std::size_t arity,
                                    std::vector<std::vector<std::size_t>> tuples);

/// P(N_1..N_t) = no listed t-subset S admits an assignment of its members to
/// the t positions, one each, with the member at position i lying in N_i.
/// This is the "any x_1 in N_1, ..., x_t in N_t (distinct)" form used for
/// point and candidate properties.
Predicate forbidden_subset_predicate(std::string id, std::size_t arity,
                                     std::vector<std::vector<std::size_t>> subsets);

}  // namespace symm
