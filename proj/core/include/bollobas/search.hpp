#pragma once

// Exact maximum (skew) Bollobás systems of one uniform type on a small
// ground set.
//
// Bollobás: maximum clique in the graph on all tuples of the type, with an
// edge when the cross condition holds in both directions. Branch and bound
// with greedy-colouring upper bounds.
//
// Skew: the relation is order dependent, so a skew system is a sequence,
// not a set. We search ordered chains T_1, ..., T_m with
// cross_condition(T_i, T_j) for all i < j, extending only at the end.

#include "bollobas/exact.hpp"
#include "bollobas/family.hpp"

#include <cstdint>

namespace bollobas {

struct SearchOptions {
  /// Stop expanding after this many nodes (0 = unlimited). A truncated
  /// search reports complete = false.
  std::uint64_t node_budget = 0;
  /// Stop as soon as a system of size multinomial(t) is found.
  bool stop_at_bound = true;
  /// Largest candidate set accepted; beyond it SizeError is thrown.
  std::size_t max_candidates = 5000;
};

struct SearchResult {
  std::size_t max_size = 0;
  Family witness;
  std::uint64_t nodes_explored = 0;
  /// multinomial(t), the uniform upper bound.
  BigInteger bound;
  bool complete = true;
};

SearchResult max_bollobas_uniform(GroundSet ground, const TupleType& t,
                                  const SearchOptions& opts = {});
SearchResult max_skew_uniform(GroundSet ground, const TupleType& t,
                              const SearchOptions& opts = {});

} // namespace bollobas
