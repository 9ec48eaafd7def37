#include <gtest/gtest.h>

#include <cmath>
#include <limits>

#include "oracle.hpp"
#include "softdx/error.hpp"
#include "softdx/fuzzify.hpp"
#include "softdx/serialize.hpp"
#include "test_support.hpp"

using namespace softdx;
using namespace softdx::testing;

namespace {

const LinguisticVariable& var(const VariableConfig& c, const std::string& name) {
  for (const auto& v : c)
    if (v.name == name) return v;
  throw std::out_of_range(name);
}

double membership_of(const std::vector<std::pair<std::string, double>>& ms, const std::string& term) {
  for (const auto& [t, m] : ms)
    if (t == term) return m;
  return NAN;
}

}  // namespace

TEST(MfEval, ChildAgeSix) {
  EXPECT_DOUBLE_EQ(mf_eval(TriangularMF::triangle(2, 9, 16), 6), 4.0 / 7.0);
  EXPECT_NEAR(mf_eval(TriangularMF::triangle(2, 9, 16), 6), 0.57, 0.01);
}

TEST(MfEval, ApexIsOne) { EXPECT_EQ(mf_eval(TriangularMF::triangle(2, 9, 16), 9), 1.0); }

TEST(MfEval, BelowSupportIsZero) { EXPECT_EQ(mf_eval(TriangularMF::triangle(15, 30, 45), 14), 0.0); }

TEST(MfEval, BloodPressureLowAt125) {
  // The published table prints 0.75 here; the formula gives 5/7.
  EXPECT_DOUBLE_EQ(mf_eval(TriangularMF::triangle(120, 127, 134), 125), 5.0 / 7.0);
}

TEST(MfEval, NonFiniteInputIsRejected) {
  const auto mf = TriangularMF::triangle(0, 1, 2);
  try {
    mf_eval(mf, std::numeric_limits<double>::quiet_NaN());
    FAIL() << "expected an error";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::InvalidInput);
  }
  EXPECT_THROW(mf_eval(mf, std::numeric_limits<double>::infinity()), Error);
}

TEST(MfEval, BreakpointsAgreeWithBothPieces) {
  const auto mf = TriangularMF::triangle(2, 9, 16);
  EXPECT_EQ(mf_eval(mf, 2), 0.0);
  EXPECT_EQ(mf_eval(mf, 16), 0.0);
  EXPECT_EQ(mf_eval(mf, 9), oracle::piecewise(2, 9, 16, 9));
}

TEST(MfEval, TrapezoidPlateauAndShoulders) {
  const TriangularMF trap{0, 2, 4, 6};
  EXPECT_EQ(mf_eval(trap, 3), 1.0);
  EXPECT_DOUBLE_EQ(mf_eval(trap, 1), 0.5);
  EXPECT_DOUBLE_EQ(mf_eval(trap, 5), 0.5);
  const TriangularMF left_shoulder{0, 0, 2, 4};
  EXPECT_EQ(mf_eval(left_shoulder, 0), 1.0);
  EXPECT_EQ(mf_eval(left_shoulder, -0.1), 0.0);
  const TriangularMF spike{1, 1, 1, 1};
  EXPECT_EQ(mf_eval(spike, 1), 1.0);
  EXPECT_EQ(mf_eval(spike, 1.5), 0.0);
}

TEST(MfEval, RisingSegmentIsLinear) {
  const auto mf = TriangularMF::triangle(3500, 80000, 150000);
  for (int i = 0; i <= 100; ++i) {
    const double t = i / 100.0;
    EXPECT_NEAR(mf_eval(mf, 3500 + t * (80000 - 3500)), t, 1e-12);
  }
}

TEST(TermMemberships, SgotAt46) {
  const auto ms = term_memberships(var(default_dengue_config(), "sgot"), 46);
  ASSERT_EQ(ms.size(), 3u);
  EXPECT_EQ(ms[0].first, "low");
  EXPECT_EQ(membership_of(ms, "low"), 0.0);
  EXPECT_DOUBLE_EQ(membership_of(ms, "medium"), 0.5);
  EXPECT_DOUBLE_EQ(membership_of(ms, "high"), 0.2);
}

TEST(TermMemberships, AgeBeyondAllRanges) {
  for (const auto& [t, m] : term_memberships(var(default_dengue_config(), "age"), 100)) EXPECT_EQ(m, 0.0) << t;
}

TEST(TermMemberships, TlcAt3650) {
  const auto ms = term_memberships(var(default_dengue_config(), "tlc"), 3650);
  EXPECT_DOUBLE_EQ(membership_of(ms, "low"), 0.6);
  EXPECT_EQ(membership_of(ms, "medium"), 0.0);
  EXPECT_EQ(membership_of(ms, "high"), 0.0);
}

TEST(TermMemberships, NonFinitePropagates) {
  EXPECT_THROW(term_memberships(var(default_dengue_config(), "tlc"), NAN), Error);
}

TEST(DefaultConfig, BreakpointsMatchPublishedDivisors) {
  const auto c = default_dengue_config();
  ASSERT_EQ(c.size(), 5u);
  const auto& sgot_medium = var(c, "sgot").find_term("medium")->mf;
  EXPECT_EQ(sgot_medium.apex_lo - sgot_medium.left, 7.0);
  EXPECT_EQ(sgot_medium.right - sgot_medium.apex_hi, 8.0);
  const auto& pc_low = var(c, "platelets").find_term("low")->mf;
  EXPECT_EQ(pc_low.apex_lo - pc_low.left, 76500.0);
  EXPECT_EQ(pc_low.right - pc_low.apex_hi, 70000.0);
  EXPECT_NO_THROW(validate_config(c));
}

TEST(DefaultConfig, GridsCoverThePublishedRuleLevels) {
  const auto c = default_dengue_config();
  auto has = [&](const char* v, const char* t, double a) {
    const auto& g = var(c, v).find_term(t)->levels;
    return std::find(g.begin(), g.end(), a) != g.end();
  };
  EXPECT_TRUE(has("age", "child", 0.25));
  EXPECT_TRUE(has("age", "young", 0.6));
  EXPECT_TRUE(has("age", "old", 0.6));
  EXPECT_TRUE(has("tlc", "low", 0.2));
  EXPECT_TRUE(has("sgot", "high", 0.2));
  EXPECT_TRUE(has("sgot", "medium", 0.25));
  EXPECT_TRUE(has("platelets", "low", 0.2));
  EXPECT_TRUE(has("bp", "low", 0.25));
}

TEST(DefaultConfig, RoundTripsThroughJson) {
  const DatasetConfig c = default_dataset_config();
  const std::string text = dump(to_json(c));
  const DatasetConfig back = dataset_config_from_json(Json::parse(text));
  EXPECT_EQ(back, c);
  EXPECT_EQ(dump(to_json(back)), text);
  EXPECT_EQ(config_digest(back.variables), config_digest(c.variables));
}

TEST(Config, RejectsMalformedVariables) {
  LinguisticVariable v{"x", "", {{"a", TriangularMF{3, 2, 2, 4}, {0.5}}}};
  EXPECT_THROW(v.validate(), Error);
  v.terms[0].mf = TriangularMF::triangle(0, 1, 2);
  v.terms[0].levels = {0.5, 0.5};
  try {
    v.validate();
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::InvalidGrid);
  }
  v.terms[0].levels = {0.0, 0.5};
  EXPECT_THROW(v.validate(), Error);
  v.terms[0].levels = {0.5};
  v.terms.push_back(v.terms[0]);
  EXPECT_THROW(v.validate(), Error);
}

TEST(FuzzifyTable, SingleRecordV16) {
  const auto all = reference_records();
  const std::vector<PatientRecord> one{all[15]};
  ASSERT_EQ(one[0].id, "v16");
  const FuzzyTable t = fuzzify_table(one, default_dengue_config());
  EXPECT_DOUBLE_EQ(t.at("v16", "sgot", "low"), 13.0 / 15.0);
  EXPECT_EQ(t.at("v16", "sgot", "medium"), 0.0);
}

TEST(FuzzifyTable, EmptyVariableListGivesUniverseOnly) {
  const FuzzyTable t = fuzzify_table(reference_records(), {});
  EXPECT_EQ(t.universe()->size(), 30u);
  EXPECT_TRUE(t.columns().empty());
  EXPECT_TRUE(t.values().empty());
}

TEST(FuzzifyTable, MissingValueNamesRecordAndVariable) {
  auto records = reference_records();
  records[3].values.erase("sgot");
  try {
    fuzzify_table(records, default_dengue_config());
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::ConfigMismatch);
    EXPECT_NE(std::string(e.what()).find("v4"), std::string::npos);
    EXPECT_NE(std::string(e.what()).find("sgot"), std::string::npos);
  }
}

TEST(FuzzifyTable, RejectsDuplicateIdsAndEmptyInput) {
  auto records = reference_records();
  records[1].id = "v1";
  EXPECT_THROW(fuzzify_table(records, default_dengue_config()), Error);
  EXPECT_THROW(fuzzify_table(std::vector<PatientRecord>{}, default_dengue_config()), Error);
}

TEST(FuzzifyTable, MatchesOracleForEveryCell) {
  const FuzzyTable t = reference_table();
  ASSERT_EQ(t.universe()->size(), oracle::kCohort.size());
  for (const auto& row : oracle::kCohort)
    for (const auto& col : t.columns())
      EXPECT_DOUBLE_EQ(t.at(row.id, col.variable, col.term), oracle::mu(col.variable, col.term, oracle::raw(row, col.variable)))
          << row.id << " " << col.variable << "/" << col.term;
}

TEST(FuzzifyTable, IsPure) { EXPECT_EQ(reference_table(), reference_table()); }

TEST(FuzzifyTable, OutOfSupportValuesGiveZeroRows) {
  auto records = reference_records();
  records[0].values["age"] = 95;
  const FuzzyTable t = fuzzify_table(records, default_dengue_config());
  for (const char* term : {"child", "young", "old"}) EXPECT_EQ(t.at("v1", "age", term), 0.0);
}
