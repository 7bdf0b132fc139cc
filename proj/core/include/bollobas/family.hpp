#pragma once

// d-tuples of pairwise-disjoint subsets of [n] and the cross-intersection
// predicates that define (skew) Bollobás systems.
//
// Sets are 64-bit masks: element e in 1..n is bit (e - 1).

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace bollobas {

using Mask = std::uint64_t;

/// The ground set {1, ..., n}, 1 <= n <= 64.
class GroundSet {
public:
  static constexpr int kMaxSize = 64;

  explicit GroundSet(int n);

  int size() const noexcept { return n_; }
  Mask full_mask() const noexcept;
  bool contains(int element) const noexcept { return element >= 1 && element <= n_; }

  friend bool operator==(GroundSet, GroundSet) = default;

private:
  int n_;
};

/// Part sizes (a_1, ..., a_d) of a tuple.
class TupleType {
public:
  explicit TupleType(std::vector<int> sizes);

  int arity() const noexcept { return static_cast<int>(sizes_.size()); }
  int total() const noexcept;
  int operator[](int p) const { return sizes_.at(static_cast<std::size_t>(p)); }
  const std::vector<int>& sizes() const noexcept { return sizes_; }

  friend bool operator==(const TupleType&, const TupleType&) = default;

private:
  std::vector<int> sizes_;
};

/// d pairwise-disjoint subsets of a ground set. Parts are indexed 0..d-1.
class DTuple {
public:
  DTuple(std::vector<Mask> parts, GroundSet ground);

  int arity() const noexcept { return static_cast<int>(parts_.size()); }
  GroundSet ground() const noexcept { return ground_; }
  Mask part(int p) const { return parts_.at(static_cast<std::size_t>(p)); }
  std::span<const Mask> parts() const noexcept { return parts_; }
  Mask support() const noexcept;
  int part_size(int p) const;
  /// Sum of part sizes.
  int weight() const noexcept;
  /// Sorted 1-based elements of part p.
  std::vector<int> elements(int p) const;

  friend bool operator==(const DTuple&, const DTuple&) = default;

private:
  std::vector<Mask> parts_;
  GroundSet ground_;
};

/// Builds a tuple from explicit element lists (1-based), checking arity,
/// range and disjointness.
DTuple validate_tuple(const std::vector<std::vector<int>>& parts, GroundSet ground);

/// True iff some p < q has part p of `s` meeting part q of `t`.
/// Throws MismatchError if the tuples differ in n or d.
bool cross_condition(const DTuple& s, const DTuple& t);

TupleType type_of(const DTuple& t);

/// Ordered family of tuples over one ground set with one arity.
class Family {
public:
  Family(GroundSet ground, int arity);
  Family(GroundSet ground, int arity, std::vector<DTuple> tuples);

  GroundSet ground() const noexcept { return ground_; }
  int n() const noexcept { return ground_.size(); }
  int arity() const noexcept { return d_; }
  std::size_t size() const noexcept { return tuples_.size(); }
  bool empty() const noexcept { return tuples_.empty(); }

  const DTuple& operator[](std::size_t i) const { return tuples_.at(i); }
  const std::vector<DTuple>& tuples() const noexcept { return tuples_; }
  auto begin() const noexcept { return tuples_.begin(); }
  auto end() const noexcept { return tuples_.end(); }

  void push_back(DTuple t);
  Family reversed() const;

  friend bool operator==(const Family&, const Family&) = default;

private:
  GroundSet ground_;
  int d_;
  std::vector<DTuple> tuples_;
};

/// Ordered pair of 0-based tuple indices (first plays role i, second role j).
struct PairIndex {
  std::size_t i;
  std::size_t j;
  friend bool operator==(const PairIndex&, const PairIndex&) = default;
};

struct SystemCheck {
  bool holds = true;
  /// Lexicographically first violating pair when `holds` is false.
  std::optional<PairIndex> violation;

  explicit operator bool() const noexcept { return holds; }
};

/// cross_condition(t_i, t_j) for every ordered pair i != j.
SystemCheck is_bollobas(const Family& f);
/// cross_condition(t_i, t_j) for every i < j.
SystemCheck is_skew_bollobas(const Family& f);

/// Applies a relabelling of the ground set to every part. `perm` holds the
/// image of element e at index e - 1 and must be a permutation of 1..n.
Family relabel(const Family& f, std::span<const int> perm);
DTuple relabel(const DTuple& t, std::span<const int> perm);

} // namespace bollobas
