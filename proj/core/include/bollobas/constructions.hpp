#pragma once

#include "bollobas/exterior.hpp"
#include "bollobas/family.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace bollobas {

/// Every pairwise-disjoint d-tuple of subsets of [n] with the given part
/// sizes, in lexicographic order of (part_1, ..., part_d) as sorted lists.
/// Throws DomainError if t.total() > n.
std::vector<DTuple> all_tuples_of_type(GroundSet ground, const TupleType& t);

/// All disjoint tuples of type t on [sum t]: a Bollobás system of size
/// multinomial(t). Every part size must be positive.
Family example1(const TupleType& t);

/// Union over l = 0..floor(n/2) of all triples of type (l, n - 2l, l) on [n].
/// A Bollobás system whose multinomial sum is floor(n/2) + 1.
Family example2(int n);

struct RandomFamilyOptions {
  int arity = 3;
  /// Fixed tuple type; when empty, candidate tuples are drawn freely.
  std::optional<TupleType> type;
  std::uint64_t seed = 0;
  std::size_t target = 16;
  /// Candidate draws allowed before giving up; 0 picks 64 * max(target, 1).
  std::size_t retry_budget = 0;
};

/// Greedy skew system: a candidate is appended iff every current member u
/// satisfies cross_condition(u, candidate). May return fewer than target.
/// Free-mode candidates that no tuple could follow are skipped.
Family random_skew_family(GroundSet ground, const RandomFamilyOptions& opts);

/// As random_skew_family but appends only when the condition holds in both
/// directions, so the result is a Bollobás system.
Family random_bollobas_family(GroundSet ground, const RandomFamilyOptions& opts);

/// Ordered d-tuples of subspaces of Q^n whose parts are independent
/// (dim of the sum equals the sum of dims).
class SubspaceFamily {
public:
  using Entry = std::vector<SubspaceRep>;

  SubspaceFamily(int ambient_dim, int arity);
  SubspaceFamily(int ambient_dim, int arity, std::vector<Entry> entries);

  int ambient_dim() const noexcept { return n_; }
  int arity() const noexcept { return d_; }
  std::size_t size() const noexcept { return entries_.size(); }
  const Entry& operator[](std::size_t i) const { return entries_.at(i); }
  const std::vector<Entry>& entries() const noexcept { return entries_; }

  /// Throws DimensionError on a shape mismatch or dependent parts.
  void push_back(Entry e);

  /// The common part dimensions if every entry has the same ones.
  std::optional<std::vector<int>> uniform_type() const;

private:
  int n_;
  int d_;
  std::vector<Entry> entries_;
};

/// Replaces each part A by span{e_a : a in A}. `ambient_dim` defaults to n
/// and may be larger (the extra coordinates are unused).
SubspaceFamily lift_to_spaces(const Family& f, std::optional<int> ambient_dim = std::nullopt);

} // namespace bollobas
