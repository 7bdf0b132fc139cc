#include "bollobas/constructions.hpp"
#include "bollobas/errors.hpp"
#include "bollobas/io.hpp"

#include <gtest/gtest.h>

using namespace bollobas;

TEST(FamilyJson, RoundTrip) {
  for (int n = 1; n <= 6; ++n) {
    const auto f = example2(n);
    const Json j = to_json(f);
    EXPECT_EQ(j["n"], n);
    EXPECT_EQ(j["d"], 3);
    EXPECT_EQ(family_from_json(j), f);
    EXPECT_EQ(family_from_json(Json::parse(j.dump())), f);
  }
}

TEST(FamilyJson, Shape) {
  const auto j = Json::parse(R"({"n": 4, "d": 3, "tuples": [[[1], [], [2]]]})");
  const auto f = family_from_json(j);
  ASSERT_EQ(f.size(), 1u);
  EXPECT_EQ(f[0].elements(0), (std::vector<int>{1}));
  EXPECT_TRUE(f[0].elements(1).empty());
  EXPECT_EQ(to_json(f).dump(), R"({"d":3,"n":4,"tuples":[[[1],[],[2]]]})");
}

TEST(FamilyJson, EmptyTupleList) {
  const auto f = family_from_json(Json::parse(R"({"n": 3, "d": 2, "tuples": []})"));
  EXPECT_EQ(f.size(), 0u);
  EXPECT_TRUE(is_bollobas(f));
}

TEST(FamilyJson, Rejections) {
  auto parse = [](const char* text) { return family_from_json(Json::parse(text)); };
  EXPECT_THROW(parse(R"({"d": 2, "tuples": []})"), ParseError);
  EXPECT_THROW(parse(R"({"n": "4", "d": 2, "tuples": []})"), ParseError);
  EXPECT_THROW(parse(R"({"n": 4, "d": 2, "tuples": [[[1]]]})"), ParseError);
  EXPECT_THROW(parse(R"({"n": 4, "d": 2, "tuples": [[[2, 1], [3]]]})"), ParseError);
  EXPECT_THROW(parse(R"({"n": 4, "d": 2, "tuples": [[[1, 1], [3]]]})"), ParseError);
  EXPECT_THROW(parse(R"({"n": 4, "d": 2, "tuples": [[[1], ["x"]]]})"), ParseError);
  EXPECT_THROW(parse(R"({"n": 4, "d": 2, "tuples": [[[5], [1]]]})"), RangeError);
  EXPECT_THROW(parse(R"({"n": 4, "d": 2, "tuples": [[[1], [1]]]})"), OverlapError);
  EXPECT_THROW(parse(R"([1, 2])"), ParseError);
}

TEST(FamilyJson, ErrorNamesTheField) {
  try {
    family_from_json(Json::parse(R"({"n": 4, "d": 2, "tuples": [[[1], [2]], [[3], [2, 1]]]})"));
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_NE(std::string(e.what()).find("tuples[1][1]"), std::string::npos) << e.what();
  }
}

TEST(SubspaceJson, RoundTripAndInts) {
  const auto s = lift_to_spaces(example1(TupleType({1, 1, 1})));
  const Json j = to_json(s);
  const auto back = subspace_family_from_json(j);
  EXPECT_EQ(to_json(back), j);
  EXPECT_EQ(j["entries"][0][0][0], Json::array({"1", "0", "0"}));

  const auto ints = subspace_family_from_json(
      Json::parse(R"({"n": 2, "d": 2, "entries": [[[[1, 0]], [["1/2", "3"]]]]})"));
  EXPECT_EQ(ints[0][1].basis()(0, 0), Rational(1, 2));
}

TEST(SubspaceJson, Rejections) {
  auto parse = [](const char* text) { return subspace_family_from_json(Json::parse(text)); };
  EXPECT_THROW(parse(R"({"n": 2, "d": 2, "entries": [[[[1]], [[0, 1]]]]})"), ParseError);
  EXPECT_THROW(parse(R"({"n": 2, "d": 2, "entries": [[[[1, 0], [2, 0]], [[0, 1]]]]})"), DimensionError);
  EXPECT_THROW(parse(R"({"n": 2, "d": 2, "entries": [[[[1, 0]], [[1, 0]]]]})"), DimensionError);
  EXPECT_THROW(parse(R"({"n": 2, "d": 2, "entries": [[[["1/0", 0]], [[0, 1]]]]})"), ParseError);
}

TEST(BladeJson, Shape) {
  const std::vector<RationalVector> rows{{1, 0, 0}, {0, 1, 1}};
  EXPECT_EQ(to_json(wedge(rows, 3)).dump(), R"({"coords":["1","1","0"],"k":2,"n":3})");
}

TEST(CheckJson, OneBasedViolation) {
  EXPECT_EQ(to_json(SystemCheck{}).dump(), R"({"holds":true,"violation":null})");
  const SystemCheck bad{false, PairIndex{1, 0}};
  EXPECT_EQ(to_json(bad).dump(), R"({"holds":false,"violation":{"i":2,"j":1}})");
}

TEST(EventJson, DecimalsAndFormula) {
  EventReport r;
  r.mode = EventMode::skew;
  r.trials = 60;
  r.hits = {1};
  r.formula_values = {Rational(1, 60)};
  const Json j = to_json(r);
  EXPECT_EQ(j["tuples"][0]["estimate"], "0.016666666");
  EXPECT_EQ(j["tuples"][0]["formula"], "1/60");
  EXPECT_EQ(j["mode"], "skew");
}

TEST(EventMode, StringRoundTrip) {
  for (auto m : {EventMode::skew, EventMode::d3, EventMode::general})
    EXPECT_EQ(event_mode_from_string(to_string(m)), m);
  EXPECT_THROW(event_mode_from_string("E"), ParseError);
}

TEST(CertificateJson, Verdict) {
  const auto c = certify(lift_to_spaces(example1(TupleType({1, 1}))), 42);
  const Json j = to_json(c);
  EXPECT_EQ(j["verdict"], "pass");
  EXPECT_EQ(j["bound"], "2");
  EXPECT_EQ(j["m"], 2);
  EXPECT_EQ(j["maps"].size(), 1u);
  EXPECT_TRUE(j["evaluation"][0][1] == "0");
}
