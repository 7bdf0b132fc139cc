#pragma once

// Delimiter events on uniformly random permutations.
//
// A permutation sigma of {1..N} is read as "element x sits at position
// sigma(x)". For a tuple over [n], the elements n+1..N are delimiters; their
// internal order never matters. Sorting the delimiter positions cuts the
// line into slots, and an event asks each part to lie wholly inside a given
// slot (vacuously true for empty parts), with parts sharing a slot required
// to appear in part order.

#include "bollobas/exact.hpp"
#include "bollobas/family.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace bollobas {

class Permutation {
public:
  /// images[x - 1] = sigma(x); must be a bijection on 1..N.
  explicit Permutation(std::vector<int> images);
  static Permutation identity(int size);

  int size() const noexcept { return static_cast<int>(images_.size()); }
  int operator()(int x) const { return images_.at(static_cast<std::size_t>(x - 1)); }
  std::span<const int> images() const noexcept { return images_; }

private:
  std::vector<int> images_;
};

enum class EventMode { skew, d3, general };
enum class D3Event { E, F };

/// One concrete event: skew uses d - 1 delimiters; d3 (E or F) one
/// delimiter; general(k) d - 2 delimiters with gap k (1-based) left open.
struct EventKind {
  EventMode mode = EventMode::skew;
  int gap = 0;

  static EventKind skew() { return {EventMode::skew, 0}; }
  static EventKind d3(D3Event e) { return {EventMode::d3, e == D3Event::E ? 2 : 1}; }
  static EventKind general(int gap) { return {EventMode::general, gap}; }

  friend bool operator==(const EventKind&, const EventKind&) = default;
};

/// Number of delimiters an event of this mode uses for arity d.
int delimiter_count(EventMode mode, int arity);

/// Parts in order, every consecutive pair separated by a delimiter.
/// Permutation size must be n + d - 1 (SizeError).
bool in_event_skew(const Permutation& sigma, const DTuple& t);

/// d = 3 with the single delimiter n + 1. E: part 1 | parts 2, 3;
/// F: parts 1, 2 | part 3. Permutation size must be n + 1.
bool in_event_d3(const Permutation& sigma, const DTuple& t, D3Event which);

/// Parts in order, the d - 2 gaps other than `gap` each split by a delimiter.
/// Permutation size must be n + d - 2; gap in 1..d-1 (IndexError).
bool in_event_general(const Permutation& sigma, const DTuple& t, int gap);

bool in_event(const Permutation& sigma, const DTuple& t, EventKind kind);

/// (C(s + d - 1, d - 1) * multinomial(t))^{-1}: probability of the skew event.
Rational event_probability(const TupleType& t);

/// (C(s + d - 2, d - 2) * multinomial(t))^{-1}: probability of each general
/// (and, for d = 3, each E/F) event.
Rational general_event_probability(const TupleType& t);

/// Probability of `kind` for tuple i, by enumerating every relative order of
/// the tuple's elements and the delimiters. Throws SizeError when more than
/// `max_elements` elements are involved.
Rational exact_event_probability(const Family& f, std::size_t i, EventKind kind,
                                 int max_elements = 10);

struct EventReport {
  EventMode mode = EventMode::skew;
  std::uint64_t trials = 0;
  std::uint64_t seed = 0;
  /// Per tuple: memberships summed over the event variants of the mode.
  std::vector<std::uint64_t> hits;
  /// Per tuple: exact expected hits per trial (variants * probability).
  std::vector<Rational> formula_values;
  /// Largest number of distinct tuples whose events one sample fell into.
  std::uint64_t max_simultaneous_hits = 0;
  /// Samples that fell into events of two or more distinct tuples.
  std::uint64_t cross_tuple_collisions = 0;
  /// (sample, tuple) pairs hitting two variants of one tuple whose middle
  /// parts are all nonempty.
  std::uint64_t variant_overlaps = 0;

  Rational estimate(std::size_t i) const;
};

/// Number of event variants per tuple: 1 (skew), 2 (d3), d - 1 (general).
int variant_count(EventMode mode, int arity);

/// Samples `trials` uniform permutations of n + delimiter_count elements.
/// Work is split into fixed-size shards seeded from (seed, shard index), so
/// the report does not depend on how shards are scheduled over threads.
EventReport monte_carlo(const Family& f, EventMode mode, std::uint64_t trials,
                        std::uint64_t seed, unsigned threads = 0);

} // namespace bollobas
