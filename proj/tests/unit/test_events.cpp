#include "bollobas/constructions.hpp"
#include "bollobas/errors.hpp"
#include "bollobas/events.hpp"
#include "bollobas/rng.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numeric>

using namespace bollobas;

namespace {

DTuple tup(int n, std::vector<std::vector<int>> parts) { return validate_tuple(parts, GroundSet(n)); }

Permutation random_perm(Rng& rng, int size) {
  std::vector<int> images(static_cast<std::size_t>(size));
  std::iota(images.begin(), images.end(), 1);
  rng.shuffle(std::span<int>(images));
  return Permutation(images);
}

std::vector<int> chain_for(EventKind kind, int d) {
  return kind.mode == EventMode::skew ? oracle::skew_chain(d) : oracle::general_chain(d, kind.gap);
}

std::vector<EventKind> kinds_for(int d) {
  std::vector<EventKind> out{EventKind::skew()};
  if (d == 3) {
    out.push_back(EventKind::d3(D3Event::E));
    out.push_back(EventKind::d3(D3Event::F));
  }
  if (d >= 3)
    for (int k = 1; k < d; ++k) out.push_back(EventKind::general(k));
  return out;
}

Family single(const DTuple& t) {
  Family f(t.ground(), t.arity());
  f.push_back(t);
  return f;
}

} // namespace

TEST(PermutationTest, Validation) {
  EXPECT_NO_THROW(Permutation({2, 3, 1}));
  EXPECT_THROW(Permutation({1, 1, 2}), DomainError);
  EXPECT_THROW(Permutation({0, 1}), DomainError);
  EXPECT_EQ(Permutation::identity(4)(3), 3);
}

TEST(SkewEvent, Examples) {
  const auto t = tup(2, {{1}, {2}});
  EXPECT_FALSE(in_event_skew(Permutation::identity(3), t));
  EXPECT_TRUE(in_event_skew(Permutation({1, 3, 2}), t));
  EXPECT_THROW(in_event_skew(Permutation::identity(4), t), SizeError);
}

TEST(SkewEvent, EmptyPartsAreVacuous) {
  const auto t = tup(4, {{1}, {}, {2}});
  // 1 | 5 | 6 | 2: both gaps hold a delimiter.
  EXPECT_TRUE(in_event_skew(Permutation({1, 4, 5, 6, 2, 3}), t));
  // 2 before 1 breaks the order.
  EXPECT_FALSE(in_event_skew(Permutation({4, 1, 5, 6, 2, 3}), t));
}

TEST(D3Event, Examples) {
  const auto t = tup(3, {{1}, {2}, {3}});
  // Order 1, delimiter, 2, 3.
  const Permutation e({1, 3, 4, 2});
  EXPECT_TRUE(in_event_d3(e, t, D3Event::E));
  EXPECT_FALSE(in_event_d3(e, t, D3Event::F));
  // Order 1, 2, delimiter, 3.
  const Permutation f({1, 2, 4, 3});
  EXPECT_TRUE(in_event_d3(f, t, D3Event::F));
  EXPECT_FALSE(in_event_d3(f, t, D3Event::E));
  EXPECT_THROW(in_event_d3(e, tup(3, {{1}, {2}}), D3Event::E), ArityError);
}

TEST(GeneralEvent, ReducesToD3) {
  Rng rng(3);
  for (int trial = 0; trial < 300; ++trial) {
    const auto t = tup(4, {{1}, {2, 4}, {3}});
    const auto sigma = random_perm(rng, 5);
    EXPECT_EQ(in_event_general(sigma, t, 2), in_event_d3(sigma, t, D3Event::E));
    EXPECT_EQ(in_event_general(sigma, t, 1), in_event_d3(sigma, t, D3Event::F));
  }
  EXPECT_THROW(in_event_general(Permutation::identity(5), tup(4, {{1}, {2}, {3}}), 3), IndexError);
  EXPECT_THROW(in_event_general(Permutation::identity(5), tup(4, {{1}, {2}, {3}}), 0), IndexError);
}

TEST(Probability, Formulas) {
  EXPECT_EQ(event_probability(TupleType({1, 1})), Rational(1, 6));
  EXPECT_EQ(event_probability(TupleType({1, 1, 1})), Rational(1, 60));
  EXPECT_EQ(event_probability(TupleType({0, 0, 0})), 1);
  EXPECT_EQ(general_event_probability(TupleType({1, 1, 1})), Rational(1, 24));
  EXPECT_EQ(general_event_probability(TupleType({0, 0, 0, 0})), 1);
  EXPECT_EQ(variant_count(EventMode::skew, 4), 1);
  EXPECT_EQ(variant_count(EventMode::d3, 3), 2);
  EXPECT_EQ(variant_count(EventMode::general, 5), 4);
  EXPECT_EQ(delimiter_count(EventMode::skew, 4), 3);
  EXPECT_EQ(delimiter_count(EventMode::d3, 3), 1);
  EXPECT_EQ(delimiter_count(EventMode::general, 5), 3);
}

TEST(Probability, ExactEnumerationExample) {
  const auto f = single(tup(3, {{1}, {2}, {3}}));
  EXPECT_EQ(exact_event_probability(f, 0, EventKind::skew()), Rational(1, 60));
}

TEST(Probability, EnumerationMatchesFormulaForAllSmallTypes) {
  for (int d = 2; d <= 4; ++d) {
    std::vector<int> t(static_cast<std::size_t>(d), 0);
    while (true) {
      const int s = std::accumulate(t.begin(), t.end(), 0);
      if (s >= 1 && s + d - 1 <= 8) {
        std::vector<std::vector<int>> parts;
        int next = 1;
        for (int a : t) {
          parts.emplace_back();
          for (int i = 0; i < a; ++i) parts.back().push_back(next++);
        }
        const auto f = single(tup(s, parts));
        const TupleType type(t);
        for (const auto kind : kinds_for(d)) {
          const Rational expected = kind.mode == EventMode::skew ? event_probability(type)
                                                                 : general_event_probability(type);
          EXPECT_EQ(exact_event_probability(f, 0, kind), expected) << "d=" << d << " s=" << s;
        }
      }
      std::size_t i = 0;
      while (i < t.size() && t[i] == 3) t[i++] = 0;
      if (i == t.size()) break;
      ++t[i];
    }
  }
}

TEST(Probability, EnumerationGuard) {
  const auto f = single(tup(8, {{1, 2, 3, 4}, {5, 6, 7, 8}}));
  EXPECT_THROW(exact_event_probability(f, 0, EventKind::skew(), 8), SizeError);
}

class EventOracleSweep : public ::testing::TestWithParam<std::uint64_t> {};

TEST_P(EventOracleSweep, MembershipMatchesChainDefinition) {
  Rng rng(GetParam());
  const int n = static_cast<int>(rng.between(2, 6));
  const int d = static_cast<int>(rng.between(2, 4));
  RandomFamilyOptions opts{d, std::nullopt, GetParam(), 4, 0};
  const auto f = random_skew_family(GroundSet(n), opts);
  for (const auto& t : f) {
    for (const auto kind : kinds_for(d)) {
      const int size = n + delimiter_count(kind.mode, d);
      for (int s = 0; s < 20; ++s) {
        const auto sigma = random_perm(rng, size);
        const std::vector<int> images(sigma.images().begin(), sigma.images().end());
        EXPECT_EQ(in_event(sigma, t, kind), oracle::chain_event(images, n, t, chain_for(kind, d)));
      }
    }
  }
}

INSTANTIATE_TEST_SUITE_P(Seeds, EventOracleSweep, ::testing::Range<std::uint64_t>(0, 40));

class DisjointnessSweep : public ::testing::TestWithParam<std::uint64_t> {};

TEST_P(DisjointnessSweep, SkewEventsNeverOverlap) {
  Rng rng(GetParam() + 1000);
  const int n = static_cast<int>(rng.between(2, 7));
  const int d = static_cast<int>(rng.between(2, 4));
  RandomFamilyOptions opts{d, std::nullopt, GetParam(), 10, 0};
  const auto f = random_skew_family(GroundSet(n), opts);
  for (int s = 0; s < 300; ++s) {
    const auto sigma = random_perm(rng, n + d - 1);
    int hit = 0;
    for (const auto& t : f) hit += in_event_skew(sigma, t);
    EXPECT_LE(hit, 1);
  }
}

TEST_P(DisjointnessSweep, D3EventsOfDistinctTuplesNeverOverlap) {
  Rng rng(GetParam() + 2000);
  const int n = static_cast<int>(rng.between(2, 7));
  RandomFamilyOptions opts{3, std::nullopt, GetParam(), 10, 0};
  const auto f = random_bollobas_family(GroundSet(n), opts);
  for (int s = 0; s < 300; ++s) {
    const auto sigma = random_perm(rng, n + 1);
    int tuples_hit = 0;
    for (const auto& t : f) {
      const bool e = in_event_d3(sigma, t, D3Event::E);
      const bool fe = in_event_d3(sigma, t, D3Event::F);
      if (t.part_size(1) > 0) EXPECT_FALSE(e && fe);
      tuples_hit += (e || fe);
    }
    EXPECT_LE(tuples_hit, 1);
  }
}

INSTANTIATE_TEST_SUITE_P(Seeds, DisjointnessSweep, ::testing::Range<std::uint64_t>(0, 30));

TEST(MonteCarlo, DeterministicAcrossThreadCounts) {
  const auto f = example2(5);
  const auto a = monte_carlo(f, EventMode::d3, 40000, 9, 1);
  const auto b = monte_carlo(f, EventMode::d3, 40000, 9, 3);
  EXPECT_EQ(a.hits, b.hits);
  EXPECT_EQ(a.max_simultaneous_hits, b.max_simultaneous_hits);
  EXPECT_EQ(a.cross_tuple_collisions, b.cross_tuple_collisions);
  EXPECT_EQ(a.variant_overlaps, b.variant_overlaps);
  const auto c = monte_carlo(f, EventMode::d3, 40000, 10, 1);
  EXPECT_NE(a.hits, c.hits);
}

TEST(MonteCarlo, ValidFamiliesShowNoCollisions) {
  const auto f = example2(6);
  const auto r = monte_carlo(f, EventMode::d3, 50000, 1);
  EXPECT_EQ(r.cross_tuple_collisions, 0u);
  EXPECT_LE(r.max_simultaneous_hits, 1u);
  ASSERT_EQ(r.formula_values.size(), f.size());
  for (std::size_t i = 0; i < f.size(); ++i)
    EXPECT_EQ(r.formula_values[i], 2 * general_event_probability(type_of(f[i])));

  const auto g = monte_carlo(example1(TupleType({1, 1, 1, 1})), EventMode::general, 30000, 1);
  EXPECT_EQ(g.cross_tuple_collisions, 0u);
  EXPECT_EQ(g.variant_overlaps, 0u);
}

TEST(MonteCarlo, EstimateWithinThreeSigma) {
  const auto f = single(tup(3, {{1}, {2}, {3}}));
  const std::uint64_t trials = 300000;
  const auto r = monte_carlo(f, EventMode::skew, trials, 42);
  const double p = 1.0 / 60.0;
  const double sd = std::sqrt(p * (1 - p) / static_cast<double>(trials));
  const double est = static_cast<double>(r.hits[0]) / static_cast<double>(trials);
  EXPECT_LT(std::abs(est - p), 3 * sd);
  EXPECT_EQ(r.estimate(0), Rational(static_cast<long>(r.hits[0]), static_cast<long>(trials)));
}

TEST(MonteCarlo, ModeArityChecks) {
  EXPECT_THROW(monte_carlo(example1(TupleType({1, 1})), EventMode::d3, 10, 0), ArityError);
  EXPECT_THROW(monte_carlo(example1(TupleType({1, 1})), EventMode::general, 10, 0), ArityError);
}
