#include "bollobas/constructions.hpp"

#include "bollobas/errors.hpp"
#include "bollobas/rng.hpp"

#include <bit>
#include <numeric>
#include <string>

namespace bollobas {

namespace {

// Visits the size-k subsets of `available` in lexicographic order of their
// sorted element lists.
template <typename Visit>
void for_each_subset(Mask available, int k, Visit&& visit) {
  std::vector<int> elems;
  for (Mask m = available; m != 0; m &= m - 1) elems.push_back(std::countr_zero(m));
  const int n = static_cast<int>(elems.size());
  if (k > n) return;
  for (const auto& idx : k_subsets(n, k)) {
    Mask chosen = 0;
    for (int i : idx) chosen |= Mask{1} << elems[static_cast<std::size_t>(i)];
    visit(chosen);
  }
}

void enumerate_parts(GroundSet ground, const TupleType& t, std::size_t part, Mask used,
                     std::vector<Mask>& parts, std::vector<DTuple>& out) {
  if (part == parts.size()) {
    out.emplace_back(parts, ground);
    return;
  }
  for_each_subset(ground.full_mask() & ~used, t[static_cast<int>(part)], [&](Mask chosen) {
    parts[part] = chosen;
    enumerate_parts(ground, t, part + 1, used | chosen, parts, out);
  });
}

} // namespace

std::vector<DTuple> all_tuples_of_type(GroundSet ground, const TupleType& t) {
  if (t.total() > ground.size()) {
    throw DomainError("type total " + std::to_string(t.total()) + " exceeds n = " +
                      std::to_string(ground.size()));
  }
  std::vector<DTuple> out;
  std::vector<Mask> parts(static_cast<std::size_t>(t.arity()), 0);
  enumerate_parts(ground, t, 0, 0, parts, out);
  return out;
}

Family example1(const TupleType& t) {
  for (int a : t.sizes()) {
    if (a == 0) throw DomainError("example1 needs every part size positive");
  }
  const GroundSet ground(t.total());
  return Family(ground, t.arity(), all_tuples_of_type(ground, t));
}

Family example2(int n) {
  const GroundSet ground(n);
  Family f(ground, 3);
  for (int l = 0; 2 * l <= n; ++l) {
    for (auto& tup : all_tuples_of_type(ground, TupleType({l, n - 2 * l, l}))) {
      f.push_back(std::move(tup));
    }
  }
  return f;
}

namespace {

DTuple draw_candidate(GroundSet ground, const RandomFamilyOptions& opts, Rng& rng) {
  const int n = ground.size();
  const int d = opts.arity;
  std::vector<int> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  rng.shuffle(std::span<int>(order));
  std::vector<Mask> parts(static_cast<std::size_t>(d), 0);
  if (opts.type) {
    std::size_t next = 0;
    for (int p = 0; p < d; ++p) {
      for (int c = 0; c < (*opts.type)[p]; ++c) {
        parts[static_cast<std::size_t>(p)] |= Mask{1} << order[next++];
      }
    }
  } else {
    // Pick how many elements to use, then scatter them over the parts.
    const auto used = static_cast<std::size_t>(rng.below(static_cast<std::uint64_t>(n) + 1));
    for (std::size_t i = 0; i < used; ++i) {
      parts[rng.below(static_cast<std::uint64_t>(d))] |= Mask{1} << order[i];
    }
  }
  return DTuple(std::move(parts), ground);
}

bool can_lead(const DTuple& t) {
  Mask head = 0;
  for (int p = 0; p + 1 < t.arity(); ++p) head |= t.part(p);
  return head != 0;
}

// Some u has cross_condition both ways with t iff t has distinct elements x
// in its first d - 1 parts and y in its last d - 1 parts (put x last in u
// and y first).
bool can_pair(const DTuple& t) {
  Mask head = 0;
  Mask tail = 0;
  for (int p = 0; p + 1 < t.arity(); ++p) head |= t.part(p);
  for (int p = 1; p < t.arity(); ++p) tail |= t.part(p);
  return head != 0 && tail != 0 && std::popcount(head | tail) >= 2;
}

Family greedy_family(GroundSet ground, const RandomFamilyOptions& opts, bool two_sided) {
  if (opts.arity < 2) throw ArityError("random family needs arity >= 2");
  if (opts.type) {
    if (opts.type->arity() != opts.arity) throw ArityError("type arity does not match");
    if (opts.type->total() > ground.size()) throw DomainError("type total exceeds n");
  }
  const std::size_t budget =
      opts.retry_budget != 0 ? opts.retry_budget : 64 * std::max<std::size_t>(opts.target, 1);
  Rng rng(derive_seed(opts.seed, two_sided ? "random-bollobas" : "random-skew"));
  Family f(ground, opts.arity);
  for (std::size_t attempt = 0; attempt < budget && f.size() < opts.target; ++attempt) {
    DTuple cand = draw_candidate(ground, opts, rng);
    // In free mode, skip candidates that no tuple could follow (or, for
    // two-sided systems, pair with); accepting one early would freeze the
    // family.
    if (!opts.type && (!can_lead(cand) || (two_sided && !can_pair(cand)))) continue;
    bool ok = true;
    for (const auto& u : f) {
      if (!cross_condition(u, cand) || (two_sided && !cross_condition(cand, u))) {
        ok = false;
        break;
      }
    }
    if (ok) f.push_back(std::move(cand));
  }
  return f;
}

} // namespace

Family random_skew_family(GroundSet ground, const RandomFamilyOptions& opts) {
  return greedy_family(ground, opts, false);
}

Family random_bollobas_family(GroundSet ground, const RandomFamilyOptions& opts) {
  return greedy_family(ground, opts, true);
}

SubspaceFamily::SubspaceFamily(int ambient_dim, int arity) : n_(ambient_dim), d_(arity) {
  if (ambient_dim < 0) throw DimensionError("negative ambient dimension");
  if (arity < 2) throw ArityError("subspace family arity must be >= 2");
}

SubspaceFamily::SubspaceFamily(int ambient_dim, int arity, std::vector<Entry> entries)
    : SubspaceFamily(ambient_dim, arity) {
  for (auto& e : entries) push_back(std::move(e));
}

void SubspaceFamily::push_back(Entry e) {
  if (static_cast<int>(e.size()) != d_) {
    throw ArityError("entry has " + std::to_string(e.size()) + " parts, expected " +
                     std::to_string(d_));
  }
  RationalMatrix all(0, static_cast<std::size_t>(n_));
  int total = 0;
  for (const auto& part : e) {
    if (part.ambient_dim() != static_cast<std::size_t>(n_)) {
      throw DimensionError("part lives in the wrong ambient dimension");
    }
    all = all.stacked(part.basis());
    total += part.dim();
  }
  if (rank(all) != total) {
    throw DimensionError("entry " + std::to_string(entries_.size() + 1) +
                         ": parts are not independent (dim of sum < sum of dims)");
  }
  entries_.push_back(std::move(e));
}

std::optional<std::vector<int>> SubspaceFamily::uniform_type() const {
  std::vector<int> dims;
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    std::vector<int> here;
    for (const auto& part : entries_[i]) here.push_back(part.dim());
    if (i == 0) dims = std::move(here);
    else if (here != dims) return std::nullopt;
  }
  if (entries_.empty()) return std::vector<int>(static_cast<std::size_t>(d_), 0);
  return dims;
}

SubspaceFamily lift_to_spaces(const Family& f, std::optional<int> ambient_dim) {
  const int n = ambient_dim.value_or(f.n());
  if (n < f.n()) throw DimensionError("lift target dimension is smaller than n");
  SubspaceFamily out(n, f.arity());
  for (const auto& t : f) {
    SubspaceFamily::Entry entry;
    for (int p = 0; p < t.arity(); ++p) {
      std::vector<int> coords;
      for (int e : t.elements(p)) coords.push_back(e - 1);
      entry.push_back(SubspaceRep::coordinate(coords, static_cast<std::size_t>(n)));
    }
    out.push_back(std::move(entry));
  }
  return out;
}

} // namespace bollobas
