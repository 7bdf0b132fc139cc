#include "bollobas/family.hpp"

#include "bollobas/errors.hpp"

#include <algorithm>
#include <bit>
#include <string>

namespace bollobas {

OverlapError::OverlapError(int p, int q, int element)
    : Error("parts " + std::to_string(p) + " and " + std::to_string(q) +
            " share element " + std::to_string(element)),
      p_(p), q_(q), element_(element) {}

GroundSet::GroundSet(int n) : n_(n) {
  if (n < 1 || n > kMaxSize) {
    throw RangeError("ground set size must lie in 1..64, got " + std::to_string(n));
  }
}

Mask GroundSet::full_mask() const noexcept {
  return n_ == kMaxSize ? ~Mask{0} : (Mask{1} << n_) - 1;
}

TupleType::TupleType(std::vector<int> sizes) : sizes_(std::move(sizes)) {
  if (sizes_.size() < 2) {
    throw ArityError("tuple type needs arity >= 2");
  }
  for (int a : sizes_) {
    if (a < 0) throw DomainError("tuple type entries must be nonnegative");
  }
}

int TupleType::total() const noexcept {
  int s = 0;
  for (int a : sizes_) s += a;
  return s;
}

DTuple::DTuple(std::vector<Mask> parts, GroundSet ground)
    : parts_(std::move(parts)), ground_(ground) {
  if (parts_.size() < 2) {
    throw ArityError("tuple arity must be >= 2, got " + std::to_string(parts_.size()));
  }
  const Mask full = ground_.full_mask();
  for (std::size_t p = 0; p < parts_.size(); ++p) {
    if (Mask stray = parts_[p] & ~full) {
      throw RangeError("element " + std::to_string(std::countr_zero(stray) + 1) +
                       " outside 1.." + std::to_string(ground_.size()));
    }
  }
  for (std::size_t p = 0; p < parts_.size(); ++p) {
    for (std::size_t q = p + 1; q < parts_.size(); ++q) {
      if (Mask common = parts_[p] & parts_[q]) {
        throw OverlapError(static_cast<int>(p) + 1, static_cast<int>(q) + 1,
                           std::countr_zero(common) + 1);
      }
    }
  }
}

Mask DTuple::support() const noexcept {
  Mask m = 0;
  for (Mask p : parts_) m |= p;
  return m;
}

int DTuple::part_size(int p) const { return std::popcount(part(p)); }

int DTuple::weight() const noexcept { return std::popcount(support()); }

std::vector<int> DTuple::elements(int p) const {
  std::vector<int> out;
  for (Mask m = part(p); m != 0; m &= m - 1) {
    out.push_back(std::countr_zero(m) + 1);
  }
  return out;
}

DTuple validate_tuple(const std::vector<std::vector<int>>& parts, GroundSet ground) {
  if (parts.size() < 2) {
    throw ArityError("tuple arity must be >= 2, got " + std::to_string(parts.size()));
  }
  std::vector<Mask> masks(parts.size(), 0);
  for (std::size_t p = 0; p < parts.size(); ++p) {
    for (int e : parts[p]) {
      if (!ground.contains(e)) {
        throw RangeError("element " + std::to_string(e) + " outside 1.." +
                         std::to_string(ground.size()));
      }
      const Mask bit = Mask{1} << (e - 1);
      for (std::size_t q = 0; q < p; ++q) {
        if (masks[q] & bit) {
          throw OverlapError(static_cast<int>(q) + 1, static_cast<int>(p) + 1, e);
        }
      }
      masks[p] |= bit;
    }
  }
  return DTuple(std::move(masks), ground);
}

bool cross_condition(const DTuple& s, const DTuple& t) {
  if (s.ground() != t.ground() || s.arity() != t.arity()) {
    throw MismatchError("cross_condition on tuples with different n or d");
  }
  // Suffix union of t's parts: does part p of s meet any part q > p of t?
  Mask later = 0;
  for (int p = s.arity() - 1; p >= 0; --p) {
    if (s.part(p) & later) return true;
    later |= t.part(p);
  }
  return false;
}

TupleType type_of(const DTuple& t) {
  std::vector<int> sizes;
  sizes.reserve(static_cast<std::size_t>(t.arity()));
  for (Mask m : t.parts()) sizes.push_back(std::popcount(m));
  return TupleType(std::move(sizes));
}

Family::Family(GroundSet ground, int arity) : ground_(ground), d_(arity) {
  if (arity < 2) throw ArityError("family arity must be >= 2");
}

Family::Family(GroundSet ground, int arity, std::vector<DTuple> tuples)
    : Family(ground, arity) {
  tuples_.reserve(tuples.size());
  for (auto& t : tuples) push_back(std::move(t));
}

void Family::push_back(DTuple t) {
  if (t.ground() != ground_ || t.arity() != d_) {
    throw MismatchError("tuple does not match family n or d");
  }
  tuples_.push_back(std::move(t));
}

Family Family::reversed() const {
  Family out(ground_, d_);
  out.tuples_.assign(tuples_.rbegin(), tuples_.rend());
  return out;
}

SystemCheck is_bollobas(const Family& f) {
  const std::size_t m = f.size();
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      if (i != j && !cross_condition(f[i], f[j])) {
        return {false, PairIndex{i, j}};
      }
    }
  }
  return {};
}

SystemCheck is_skew_bollobas(const Family& f) {
  const std::size_t m = f.size();
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      if (!cross_condition(f[i], f[j])) return {false, PairIndex{i, j}};
    }
  }
  return {};
}

namespace {

void check_relabelling(std::span<const int> perm, int n) {
  if (static_cast<int>(perm.size()) != n) {
    throw SizeError("relabelling must have length n");
  }
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  for (int v : perm) {
    if (v < 1 || v > n || seen[static_cast<std::size_t>(v - 1)]) {
      throw DomainError("relabelling is not a permutation of 1..n");
    }
    seen[static_cast<std::size_t>(v - 1)] = true;
  }
}

} // namespace

DTuple relabel(const DTuple& t, std::span<const int> perm) {
  check_relabelling(perm, t.ground().size());
  std::vector<Mask> parts;
  for (Mask m : t.parts()) {
    Mask image = 0;
    for (; m != 0; m &= m - 1) {
      image |= Mask{1} << (perm[static_cast<std::size_t>(std::countr_zero(m))] - 1);
    }
    parts.push_back(image);
  }
  return DTuple(std::move(parts), t.ground());
}

Family relabel(const Family& f, std::span<const int> perm) {
  Family out(f.ground(), f.arity());
  for (const auto& t : f) out.push_back(relabel(t, perm));
  return out;
}

} // namespace bollobas
