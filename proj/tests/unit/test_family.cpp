#include "bollobas/constructions.hpp"
#include "bollobas/errors.hpp"
#include "bollobas/family.hpp"
#include "bollobas/rng.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

#include <numeric>

using namespace bollobas;

namespace {

DTuple tup(int n, std::vector<std::vector<int>> parts) { return validate_tuple(parts, GroundSet(n)); }

Family fam(int n, int d, std::vector<std::vector<std::vector<int>>> tuples) {
  Family f(GroundSet(n), d);
  for (auto& t : tuples) f.push_back(tup(n, t));
  return f;
}

} // namespace

TEST(GroundSet, RejectsOutOfRangeSizes) {
  EXPECT_THROW(GroundSet(0), RangeError);
  EXPECT_THROW(GroundSet(65), RangeError);
  EXPECT_EQ(GroundSet(64).full_mask(), ~Mask{0});
  EXPECT_EQ(GroundSet(3).full_mask(), Mask{7});
}

TEST(ValidateTuple, AcceptsDisjointSingletons) {
  auto t = tup(3, {{1}, {2}, {3}});
  EXPECT_EQ(t.arity(), 3);
  EXPECT_EQ(t.elements(2), std::vector<int>{3});
}

TEST(ValidateTuple, ReportsOverlap) {
  try {
    tup(2, {{1}, {1}});
    FAIL() << "expected OverlapError";
  } catch (const OverlapError& e) {
    EXPECT_EQ(e.first_part(), 1);
    EXPECT_EQ(e.second_part(), 2);
    EXPECT_EQ(e.element(), 1);
  }
}

TEST(ValidateTuple, AllowsEmptyParts) {
  auto t = tup(4, {{1}, {}, {2}});
  EXPECT_EQ(t.part(1), Mask{0});
  EXPECT_EQ(type_of(t).sizes(), (std::vector<int>{1, 0, 1}));
}

TEST(ValidateTuple, RangeAndArityErrors) {
  EXPECT_THROW(tup(3, {{4}, {1}}), RangeError);
  EXPECT_THROW(tup(3, {{0}, {1}}), RangeError);
  EXPECT_THROW(tup(3, {{1}}), ArityError);
}

TEST(CrossCondition, Examples) {
  EXPECT_TRUE(cross_condition(tup(2, {{1}, {2}}), tup(2, {{2}, {1}})));
  EXPECT_FALSE(cross_condition(tup(2, {{1}, {2}}), tup(2, {{1}, {2}})));
  EXPECT_TRUE(cross_condition(tup(3, {{1}, {2}, {3}}), tup(3, {{3}, {1}, {2}})));
}

TEST(CrossCondition, MismatchedTuples) {
  EXPECT_THROW(cross_condition(tup(3, {{1}, {2}}), tup(4, {{1}, {2}})), MismatchError);
  EXPECT_THROW(cross_condition(tup(3, {{1}, {2}}), tup(3, {{1}, {2}, {3}})), MismatchError);
}

TEST(IsBollobas, Examples) {
  EXPECT_TRUE(is_bollobas(example2(4)));
  EXPECT_TRUE(is_bollobas(fam(3, 2, {{{1}, {2}}})));
  auto check = is_bollobas(fam(4, 2, {{{1}, {2}}, {{3}, {4}}}));
  EXPECT_FALSE(check);
  ASSERT_TRUE(check.violation);
  EXPECT_EQ(*check.violation, (PairIndex{0, 1}));
}

TEST(IsBollobas, ReportsLexicographicallyFirstViolation) {
  // (0,1) and (0,2) hold; (1,0) fails first.
  auto f = fam(4, 2, {{{1}, {2}}, {{3}, {1}}, {{4}, {1}}});
  ASSERT_TRUE(cross_condition(f[0], f[1]));
  ASSERT_TRUE(cross_condition(f[0], f[2]));
  ASSERT_FALSE(cross_condition(f[1], f[0]));
  auto check = is_bollobas(f);
  EXPECT_EQ(*check.violation, (PairIndex{1, 0}));
}

TEST(IsSkewBollobas, Examples) {
  EXPECT_TRUE(is_skew_bollobas(fam(2, 2, {{{1}, {2}}, {{2}, {1}}})));
  EXPECT_TRUE(is_skew_bollobas(fam(2, 2, {{{2}, {1}}, {{1}, {2}}})));
  auto check = is_skew_bollobas(fam(4, 2, {{{2}, {1}}, {{3}, {4}}}));
  EXPECT_FALSE(check);
  EXPECT_EQ(*check.violation, (PairIndex{0, 1}));
  EXPECT_TRUE(is_skew_bollobas(example2(5)));
}

TEST(IsSkewBollobas, OrderMatters) {
  // ({1},{2}) then ({2},{3}): 1 in {2}? no; ({2},{3}) then ({1},{2}): 2 in {2}: yes.
  auto f = fam(3, 2, {{{1}, {2}}, {{2}, {3}}});
  EXPECT_FALSE(is_skew_bollobas(f));
  EXPECT_TRUE(is_skew_bollobas(f.reversed()));
}

TEST(TypeOf, Examples) {
  EXPECT_EQ(type_of(tup(4, {{1}, {2, 3}, {4}})).sizes(), (std::vector<int>{1, 2, 1}));
  EXPECT_EQ(type_of(tup(2, {{}, {1, 2}, {}})).sizes(), (std::vector<int>{0, 2, 0}));
  for (const auto& t : example1(TupleType({2, 1}))) {
    EXPECT_EQ(type_of(t), TupleType({2, 1}));
  }
}

TEST(Family, RejectsMismatchedTuples) {
  Family f(GroundSet(3), 2);
  EXPECT_THROW(f.push_back(tup(4, {{1}, {2}})), MismatchError);
  EXPECT_THROW(f.push_back(tup(3, {{1}, {2}, {3}})), MismatchError);
}

// Property sweep over seeded random tuples and families.
class FamilyProperties : public ::testing::TestWithParam<std::uint64_t> {};

TEST_P(FamilyProperties, PredicatesAgreeWithOracleAndInvariants) {
  Rng rng(GetParam());
  const int n = static_cast<int>(rng.between(1, 8));
  const int d = static_cast<int>(rng.between(2, 4));
  RandomFamilyOptions opts{d, std::nullopt, GetParam(), 8, 0};
  const auto skew = random_skew_family(GroundSet(n), opts);
  const auto bol = random_bollobas_family(GroundSet(n), opts);

  for (const auto& s : skew) {
    EXPECT_FALSE(cross_condition(s, s));
    for (const auto& t : skew) EXPECT_EQ(cross_condition(s, t), oracle::cross(s, t));
  }
  EXPECT_TRUE(is_skew_bollobas(skew));
  EXPECT_EQ(static_cast<bool>(is_bollobas(skew)), oracle::bollobas(skew));
  EXPECT_TRUE(oracle::skew(skew));

  EXPECT_TRUE(is_bollobas(bol));
  EXPECT_TRUE(is_skew_bollobas(bol));
  EXPECT_TRUE(is_skew_bollobas(bol.reversed()));

  // Relabelling the ground set preserves both predicates.
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 1);
  rng.shuffle(std::span<int>(perm));
  EXPECT_TRUE(is_skew_bollobas(relabel(skew, perm)));
  EXPECT_TRUE(is_bollobas(relabel(bol, perm)));
  EXPECT_EQ(static_cast<bool>(is_bollobas(relabel(skew, perm))), static_cast<bool>(is_bollobas(skew)));

  // Duplicating any member breaks the skew property.
  if (!skew.empty()) {
    Family dup = skew;
    dup.push_back(skew[0]);
    EXPECT_FALSE(is_skew_bollobas(dup));
  }
}

INSTANTIATE_TEST_SUITE_P(Seeds, FamilyProperties, ::testing::Range<std::uint64_t>(0, 60));

TEST(Family, PairsCoincideWithTwoSetDefinition) {
  // For d = 2, cross_condition(s, t) is A_s meets B_t.
  auto s = tup(4, {{1, 2}, {3}});
  auto t = tup(4, {{3}, {2, 4}});
  EXPECT_TRUE(cross_condition(s, t));   // {1,2} meets {2,4}
  EXPECT_TRUE(cross_condition(t, s));   // {3} meets {3}
  auto u = tup(4, {{4}, {1}});
  EXPECT_TRUE(cross_condition(s, u));   // {1,2} meets {1}
  EXPECT_FALSE(cross_condition(u, s));  // {4} misses {3}
}
