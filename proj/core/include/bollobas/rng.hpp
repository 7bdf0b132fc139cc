#pragma once

// Seeded randomness with a fixed, platform-independent output sequence.
// std::uniform_int_distribution and std::shuffle are implementation-defined,
// so bounded draws and shuffles are done here on top of std::mt19937_64.

#include <cstdint>
#include <random>
#include <span>
#include <string_view>
#include <utility>

namespace bollobas {

std::uint64_t splitmix64(std::uint64_t x) noexcept;

/// Child seed for a labelled stage; distinct labels/indices give independent
/// streams and adding a stage never perturbs the others.
std::uint64_t derive_seed(std::uint64_t seed, std::string_view label,
                          std::uint64_t index = 0) noexcept;

class Rng {
public:
  explicit Rng(std::uint64_t seed) : engine_(splitmix64(seed)) {}

  std::uint64_t next() { return engine_(); }

  /// Uniform integer in [0, bound). bound must be positive.
  std::uint64_t below(std::uint64_t bound);

  /// Uniform integer in [lo, hi].
  std::int64_t between(std::int64_t lo, std::int64_t hi);

  template <typename T>
  void shuffle(std::span<T> items) {
    for (std::size_t i = items.size(); i > 1; --i) {
      std::swap(items[i - 1], items[below(i)]);
    }
  }

private:
  std::mt19937_64 engine_;
};

} // namespace bollobas
