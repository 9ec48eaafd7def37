#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>

#include "oracle.hpp"
#include "softdx/error.hpp"
#include "softdx/softset.hpp"
#include "test_support.hpp"

using namespace softdx;
using namespace softdx::testing;

namespace {

class SoftSetTest : public ::testing::Test {
 protected:
  FuzzyTable table = reference_table();
  const Universe& u() const { return *table.universe(); }
  SoftSet cut(const char* v, const char* t, std::vector<double> grid) const { return alpha_cut(table, v, t, grid); }

  SoftSet by_hand(std::vector<std::pair<double, Ids>> levels) const {
    std::vector<SoftLevel> ls;
    for (auto& [a, m] : levels) ls.push_back({a, set_of(u(), m)});
    return SoftSet(table.universe(), {"x", "y"}, std::move(ls));
  }
};

}  // namespace

TEST_F(SoftSetTest, ChildAgeCut) {
  const SoftSet s = cut("age", "child", {0.25, 0.5, 0.75, 1});
  EXPECT_EQ(ids(s, 0.25), (Ids{"v1", "v6", "v11", "v19", "v28"}));
  EXPECT_EQ(ids(s, 0.5), (Ids{"v1", "v6", "v19", "v28"}));
  // The published listing adds v28 at 0.75, but mu_child(11) = 5/7 < 0.75.
  EXPECT_EQ(ids(s, 0.75), (Ids{"v19"}));
  EXPECT_EQ(ids(s, 1), (Ids{"v19"}));
}

TEST_F(SoftSetTest, LowTlcFullLevel) { EXPECT_EQ(ids(cut("tlc", "low", {1}), 1), (Ids{"v12", "v25"})); }

TEST_F(SoftSetTest, WeakInequalityAtTheThreshold) {
  // v2: mu_low,TLC(3650) = 0.6 exactly; v11: mu_child(4) = 0.2857
  EXPECT_EQ(ids(cut("tlc", "low", {0.6}), 0.6).front(), "v2");
  const auto child = ids(cut("age", "child", {0.25}), 0.25);
  EXPECT_NE(std::find(child.begin(), child.end(), "v11"), child.end());
}

TEST_F(SoftSetTest, AlphaAboveMaximumIsEmpty) {
  double max_mu = 0.0;
  const auto col = *table.column_index("sgot", "medium");
  for (std::size_t p = 0; p < u().size(); ++p) max_mu = std::max(max_mu, table.at(p, col));
  const double above = std::nextafter(max_mu, 2.0);
  EXPECT_TRUE(cut("sgot", "medium", {above}).levels()[0].members.empty());
}

TEST_F(SoftSetTest, EveryLevelMatchesTheOracleScan) {
  for (const auto& v : default_dengue_config())
    for (const auto& t : v.terms) {
      const SoftSet s = alpha_cut(table, v.name, t.name, t.levels);
      for (double a : t.levels) EXPECT_EQ(ids(s, a), oracle::cut(v.name, t.name, a)) << v.name << "/" << t.name << "@" << a;
    }
}

TEST_F(SoftSetTest, CutErrors) {
  try {
    cut("age", "ancient", {0.5});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::Config);
  }
  for (std::vector<double> bad : {std::vector<double>{0.0}, {1.5}, {0.5, 0.25}, {0.5, 0.5}}) {
    try {
      cut("age", "child", bad);
      FAIL();
    } catch (const Error& e) {
      EXPECT_EQ(e.kind(), ErrorKind::InvalidGrid);
    }
  }
}

TEST_F(SoftSetTest, ConstructorRejectsBrokenNesting) {
  EXPECT_THROW(by_hand({{0.2, {"v1"}}, {0.4, {"v1", "v2"}}}), Error);
  EXPECT_THROW(by_hand({{0.4, {"v1"}}, {0.2, {"v1"}}}), Error);
}

TEST_F(SoftSetTest, AndOpChildByLowTlc) {
  const SoftSet child = cut("age", "child", {0.25, 0.5, 0.75, 1});
  const SoftSet tlc = cut("tlc", "low", {0.2, 0.4, 0.6, 0.8, 1});
  const ProductSoftSet p = and_op(child, tlc);
  EXPECT_EQ(p.cell_count(), 20u);
  EXPECT_TRUE(p.eager());
  const std::vector<double> at{0.25, 0.2};
  EXPECT_EQ(ids(u(), p.cell_at(at)), (Ids{"v1", "v6", "v11", "v19"}));
  // Independent brute-force intersection.
  EXPECT_EQ(ids(u(), p.cell_at(at)), oracle::scan({{"age", "child", 0.25}, {"tlc", "low", 0.2}}));
}

TEST_F(SoftSetTest, AndWithFullAndEmptyLevels) {
  const SoftSet a = cut("age", "child", {0.25, 0.5});
  const SoftSet full = by_hand({{0.1, u().members()}});
  const SoftSet none = by_hand({{0.1, {}}});
  for (std::size_t i = 0; i < 2; ++i) {
    const std::vector<std::size_t> idx{i, 0};
    EXPECT_EQ(and_op(a, full).cell(idx), a.levels()[i].members);
    EXPECT_TRUE(and_op(a, none).cell(idx).empty());
  }
}

TEST_F(SoftSetTest, MismatchedUniversesAreIncompatible) {
  const SoftSet a = cut("age", "child", {0.25});
  const SoftSet b(make_universe({"p1", "p2"}), {"x", "y"}, {{0.5, PatientSet(2)}});
  try {
    and_op(a, b);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::Incompatible);
  }
  EXPECT_THROW(or_op(a, b), Error);
}

TEST_F(SoftSetTest, EqualUniversesFromDifferentObjectsAreCompatible) {
  const SoftSet a = cut("age", "child", {0.25});
  const SoftSet b(make_universe(u().members()), {"x", "y"}, {{0.5, PatientSet::full(u().size())}});
  EXPECT_NO_THROW(and_op(a, b));
}

TEST_F(SoftSetTest, OrOp) {
  const std::vector<std::size_t> origin{0, 0};
  EXPECT_EQ(ids(u(), or_op(by_hand({{0.5, {"v1"}}}), by_hand({{0.5, {"v2"}}})).cell(origin)), (Ids{"v1", "v2"}));
  EXPECT_EQ(ids(u(), or_op(by_hand({{0.5, {"v1", "v9"}}}), by_hand({{0.5, {}}})).cell(origin)), (Ids{"v1", "v9"}));
  const SoftSet child = cut("age", "child", {0.75, 1});
  const ProductSoftSet p = or_op(child, child);
  const std::vector<double> at{0.75, 1.0};
  EXPECT_EQ(ids(u(), p.cell_at(at)), (Ids{"v19"}));
}

TEST_F(SoftSetTest, CellAtRejectsOffGridAlpha) {
  const auto p = and_op(cut("age", "child", {0.25}), cut("tlc", "low", {0.2}));
  const std::vector<double> at{0.3, 0.2};
  EXPECT_THROW(p.cell_at(at), Error);
}

TEST_F(SoftSetTest, LazyProductMatchesDirectIntersection) {
  // 4 factors x 32 levels = 1,048,576 cells, above the eager limit.
  std::vector<double> grid;
  for (int i = 1; i <= 32; ++i) grid.push_back(i / 32.0);
  std::vector<SoftSet> factors{cut("age", "child", grid), cut("tlc", "low", grid), cut("sgot", "high", grid),
                               cut("bp", "low", grid)};
  const ProductSoftSet lazy = and_all(factors);
  EXPECT_GT(lazy.cell_count(), ProductSoftSet::kEagerCellLimit);
  EXPECT_FALSE(lazy.eager());
  const ProductSoftSet small = and_all({factors[0], factors[1]});
  EXPECT_TRUE(small.eager());
  for (std::size_t i = 0; i < 32; i += 5)
    for (std::size_t j = 0; j < 32; j += 3) {
      const std::vector<std::size_t> four{i, j, 0, 0}, two{i, j};
      PatientSet expect = factors[0].levels()[i].members & factors[1].levels()[j].members;
      EXPECT_EQ(small.cell(two), expect);
      expect &= factors[2].levels()[0].members;
      expect &= factors[3].levels()[0].members;
      EXPECT_EQ(lazy.cell(four), expect);
    }
}

TEST_F(SoftSetTest, ReduceMediumSgotDropsFullAndEmptyLevels) {
  const SoftSet cut_levels = cut("sgot", "medium", {0.25, 0.5, 0.75, 1});
  std::vector<std::pair<double, Ids>> hand{{0.0, u().members()}};
  for (double a : {0.25, 0.5, 0.75, 1.0}) hand.emplace_back(a, ids(cut_levels, a));
  ASSERT_TRUE(hand.back().second.empty());
  const SoftSet reduced = reduce_trivial(by_hand(hand));
  EXPECT_EQ(reduced.grid(), (std::vector<double>{0.25, 0.5, 0.75}));
  EXPECT_EQ(ids(reduced, 0.25), (Ids{"v1", "v3", "v4", "v8", "v10", "v11", "v17", "v20", "v21", "v30"}));
  EXPECT_EQ(ids(reduced, 0.5), (Ids{"v1", "v4", "v8", "v10", "v21"}));
  EXPECT_EQ(ids(reduced, 0.75), (Ids{"v4", "v8"}));
}

TEST_F(SoftSetTest, ReduceLowPlateletsDropsEmptyTop) {
  const SoftSet s = cut("platelets", "low", {0.2, 0.55, 0.7, 0.85, 1});
  EXPECT_TRUE(s.find(1.0)->members.empty());
  EXPECT_EQ(reduce_trivial(s).grid(), (std::vector<double>{0.2, 0.55, 0.7, 0.85}));
}

TEST_F(SoftSetTest, ReduceLeavesProperLevelsAlone) {
  const SoftSet s = cut("tlc", "low", {0.2, 0.4, 0.6, 0.8, 1});
  EXPECT_EQ(reduce_trivial(s), s);
  EXPECT_TRUE(reduce_trivial(by_hand({{0.5, {}}, {0.6, {}}})).levels().empty());
}

TEST_F(SoftSetTest, MergeDuplicateLevelsKeepsLowestAlpha) {
  const SoftSet child = cut("age", "child", {0.25, 0.5, 0.75, 1});
  const SoftSet merged = merge_duplicate_levels(child);
  EXPECT_EQ(merged.grid(), (std::vector<double>{0.25, 0.5, 0.75}));
  EXPECT_EQ(ids(merged, 0.75), (Ids{"v19"}));
}
