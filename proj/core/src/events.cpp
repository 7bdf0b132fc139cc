#include "bollobas/events.hpp"

#include "bollobas/errors.hpp"
#include "bollobas/rng.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <numeric>
#include <string>
#include <thread>

namespace bollobas {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  const int n = size();
  std::vector<bool> seen(images_.size(), false);
  for (int v : images_) {
    if (v < 1 || v > n || seen[static_cast<std::size_t>(v - 1)]) {
      throw DomainError("permutation images must be a bijection on 1.." + std::to_string(n));
    }
    seen[static_cast<std::size_t>(v - 1)] = true;
  }
}

Permutation Permutation::identity(int size) {
  std::vector<int> images(static_cast<std::size_t>(size));
  std::iota(images.begin(), images.end(), 1);
  return Permutation(std::move(images));
}

int delimiter_count(EventMode mode, int arity) {
  switch (mode) {
    case EventMode::skew: return arity - 1;
    case EventMode::d3: return 1;
    case EventMode::general: return arity - 2;
  }
  return 0;
}

int variant_count(EventMode mode, int arity) {
  switch (mode) {
    case EventMode::skew: return 1;
    case EventMode::d3: return 2;
    case EventMode::general: return arity - 1;
  }
  return 0;
}

namespace {

// Positions of ground elements grouped by the slot the delimiters cut out.
struct SampleView {
  std::vector<int> pos;         // pos[e - 1] for ground elements e
  std::vector<Mask> slot_mask;  // slot s -> elements lying in it

  SampleView(std::span<const int> images, int n, int delimiters) {
    pos.assign(images.begin(), images.begin() + n);
    std::vector<int> cuts(images.begin() + n, images.begin() + n + delimiters);
    std::sort(cuts.begin(), cuts.end());
    slot_mask.assign(static_cast<std::size_t>(delimiters) + 1, 0);
    for (int e = 0; e < n; ++e) {
      const auto slot = std::lower_bound(cuts.begin(), cuts.end(), pos[static_cast<std::size_t>(e)]) - cuts.begin();
      slot_mask[static_cast<std::size_t>(slot)] |= Mask{1} << e;
    }
  }

  int max_pos(Mask m) const {
    int best = 0;
    for (; m != 0; m &= m - 1) best = std::max(best, pos[static_cast<std::size_t>(std::countr_zero(m))]);
    return best;
  }
  int min_pos(Mask m) const {
    int best = 1 << 30;
    for (; m != 0; m &= m - 1) best = std::min(best, pos[static_cast<std::size_t>(std::countr_zero(m))]);
    return best;
  }
};

// Part p (0-based) must lie in slot p - (p > open_gap ? 1 : 0), where
// open_gap is the 1-based gap with no delimiter (0 = none). Parts sharing the
// open gap must appear in order.
bool member(const SampleView& view, const DTuple& t, int open_gap) {
  const int d = t.arity();
  for (int p = 0; p < d; ++p) {
    const int slot = (open_gap != 0 && p >= open_gap) ? p - 1 : p;
    if (t.part(p) & ~view.slot_mask[static_cast<std::size_t>(slot)]) return false;
  }
  if (open_gap != 0) {
    const Mask left = t.part(open_gap - 1);
    const Mask right = t.part(open_gap);
    if (left != 0 && right != 0 && view.max_pos(left) > view.min_pos(right)) return false;
  }
  return true;
}

int open_gap_of(EventKind kind) {
  return kind.mode == EventMode::skew ? 0 : kind.gap;
}

void check_kind(const DTuple& t, EventKind kind) {
  const int d = t.arity();
  if (kind.mode == EventMode::d3 && d != 3) {
    throw ArityError("d3 events need d = 3, got " + std::to_string(d));
  }
  if (kind.mode != EventMode::skew && (kind.gap < 1 || kind.gap > d - 1)) {
    throw IndexError("gap index " + std::to_string(kind.gap) + " outside 1.." + std::to_string(d - 1));
  }
}

bool middle_parts_nonempty(const DTuple& t) {
  for (int p = 1; p + 1 < t.arity(); ++p) {
    if (t.part(p) == 0) return false;
  }
  return true;
}

} // namespace

bool in_event(const Permutation& sigma, const DTuple& t, EventKind kind) {
  check_kind(t, kind);
  const int n = t.ground().size();
  const int delims = delimiter_count(kind.mode, t.arity());
  if (sigma.size() != n + delims) {
    throw SizeError("permutation has size " + std::to_string(sigma.size()) + ", expected " +
                    std::to_string(n + delims));
  }
  return member(SampleView(sigma.images(), n, delims), t, open_gap_of(kind));
}

bool in_event_skew(const Permutation& sigma, const DTuple& t) {
  return in_event(sigma, t, EventKind::skew());
}

bool in_event_d3(const Permutation& sigma, const DTuple& t, D3Event which) {
  return in_event(sigma, t, EventKind::d3(which));
}

bool in_event_general(const Permutation& sigma, const DTuple& t, int gap) {
  return in_event(sigma, t, EventKind::general(gap));
}

Rational event_probability(const TupleType& t) {
  const int d = t.arity();
  return Rational(1, binomial(t.total() + d - 1, d - 1) * multinomial(t));
}

Rational general_event_probability(const TupleType& t) {
  const int d = t.arity();
  return Rational(1, binomial(t.total() + d - 2, d - 2) * multinomial(t));
}

Rational exact_event_probability(const Family& f, std::size_t i, EventKind kind, int max_elements) {
  const DTuple& t = f[i];
  check_kind(t, kind);
  const int n = f.n();
  const int delims = delimiter_count(kind.mode, t.arity());
  std::vector<int> relevant;
  for (Mask m = t.support(); m != 0; m &= m - 1) relevant.push_back(std::countr_zero(m) + 1);
  for (int b = 1; b <= delims; ++b) relevant.push_back(n + b);
  const int r = static_cast<int>(relevant.size());
  if (r > max_elements) {
    throw SizeError("enumeration over " + std::to_string(r) + "! orderings exceeds the limit");
  }
  // Irrelevant elements keep fixed positions after the relevant block.
  std::vector<int> images(static_cast<std::size_t>(n + delims), 0);
  int tail = r;
  for (int x = 1; x <= n + delims; ++x) {
    if (std::find(relevant.begin(), relevant.end(), x) == relevant.end()) {
      images[static_cast<std::size_t>(x - 1)] = ++tail;
    }
  }
  std::vector<int> order(static_cast<std::size_t>(r));
  std::iota(order.begin(), order.end(), 1);
  std::uint64_t favourable = 0;
  std::uint64_t total = 0;
  const int gap = open_gap_of(kind);
  do {
    for (int k = 0; k < r; ++k) {
      images[static_cast<std::size_t>(relevant[static_cast<std::size_t>(k)] - 1)] =
          order[static_cast<std::size_t>(k)];
    }
    ++total;
    if (member(SampleView(images, n, delims), t, gap)) ++favourable;
  } while (std::next_permutation(order.begin(), order.end()));
  return Rational(BigInteger(favourable), BigInteger(total));
}

Rational EventReport::estimate(std::size_t i) const {
  if (trials == 0) return 0;
  return Rational(BigInteger(hits.at(i)), BigInteger(trials));
}

namespace {

constexpr std::uint64_t kShardTrials = 1 << 14;

struct ShardResult {
  std::vector<std::uint64_t> hits;
  std::uint64_t max_simultaneous = 0;
  std::uint64_t collisions = 0;
  std::uint64_t overlaps = 0;
};

ShardResult run_shard(const Family& f, EventMode mode, std::uint64_t trials, std::uint64_t seed,
                      std::uint64_t shard) {
  const int n = f.n();
  const int d = f.arity();
  const int delims = delimiter_count(mode, d);
  const int variants = variant_count(mode, d);
  const int size = n + delims;

  std::vector<int> gaps;
  if (mode == EventMode::skew) gaps.push_back(0);
  else for (int v = 1; v <= variants; ++v) gaps.push_back(v);

  std::vector<bool> check_overlap(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) {
    check_overlap[i] = variants > 1 && middle_parts_nonempty(f[i]);
  }

  ShardResult out;
  out.hits.assign(f.size(), 0);
  Rng rng(derive_seed(seed, "monte-carlo", shard));
  std::vector<int> images(static_cast<std::size_t>(size));
  for (std::uint64_t s = 0; s < trials; ++s) {
    std::iota(images.begin(), images.end(), 1);
    rng.shuffle(std::span<int>(images));
    const SampleView view(images, n, delims);
    std::uint64_t tuples_hit = 0;
    for (std::size_t i = 0; i < f.size(); ++i) {
      int count = 0;
      for (int gap : gaps) {
        if (member(view, f[i], gap)) ++count;
      }
      out.hits[i] += static_cast<std::uint64_t>(count);
      if (count > 0) ++tuples_hit;
      if (count > 1 && check_overlap[i]) ++out.overlaps;
    }
    out.max_simultaneous = std::max(out.max_simultaneous, tuples_hit);
    if (tuples_hit > 1) ++out.collisions;
  }
  return out;
}

} // namespace

EventReport monte_carlo(const Family& f, EventMode mode, std::uint64_t trials, std::uint64_t seed,
                        unsigned threads) {
  const int d = f.arity();
  if (mode == EventMode::d3 && d != 3) throw ArityError("d3 mode needs d = 3");
  if (mode == EventMode::general && d < 3) throw ArityError("general mode needs d >= 3");

  EventReport report;
  report.mode = mode;
  report.trials = trials;
  report.seed = seed;
  report.hits.assign(f.size(), 0);
  const int variants = variant_count(mode, d);
  for (const auto& t : f) {
    const auto type = type_of(t);
    report.formula_values.push_back(
        mode == EventMode::skew ? event_probability(type)
                                : variants * general_event_probability(type));
  }

  const std::uint64_t shards = (trials + kShardTrials - 1) / kShardTrials;
  std::vector<ShardResult> results(shards);
  std::atomic<std::uint64_t> next{0};
  auto worker = [&] {
    for (std::uint64_t s = next++; s < shards; s = next++) {
      const std::uint64_t count = std::min(kShardTrials, trials - s * kShardTrials);
      results[s] = run_shard(f, mode, count, seed, s);
    }
  };
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::uint64_t>(threads, std::max<std::uint64_t>(shards, 1)));
  {
    std::vector<std::jthread> pool;
    for (unsigned w = 1; w < threads; ++w) pool.emplace_back(worker);
    worker();
  }
  for (const auto& r : results) {
    for (std::size_t i = 0; i < f.size(); ++i) report.hits[i] += r.hits[i];
    report.max_simultaneous_hits = std::max(report.max_simultaneous_hits, r.max_simultaneous);
    report.cross_tuple_collisions += r.collisions;
    report.variant_overlaps += r.overlaps;
  }
  return report;
}

} // namespace bollobas
