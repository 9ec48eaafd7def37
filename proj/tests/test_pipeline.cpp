#include <gtest/gtest.h>

#include <filesystem>

#include "softdx/error.hpp"
#include "softdx/pipeline.hpp"
#include "softdx/serialize.hpp"
#include "test_support.hpp"

using namespace softdx;
using namespace softdx::testing;
namespace fs = std::filesystem;

namespace {

class PipelineTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir = fs::temp_directory_path() /
          ("softdx_pipeline_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir);
    options.reference = load_printed_memberships(corpus("published_memberships.csv"));
  }
  void TearDown() override { fs::remove_all(dir); }

  RunArtifacts full_run() const {
    return run_pipeline(reference_records(), default_dataset_config(), reference_labels(), options);
  }

  fs::path dir;
  RunOptions options;
};

std::vector<Conjunct> child_rule() {
  return {{"age", "child", 0.25}, {"tlc", "low", 0.2}, {"sgot", "high", 0.2}, {"platelets", "low", 0.2}, {"bp", "low", 0.25}};
}

}  // namespace

TEST_F(PipelineTest, ReferenceRunContainsChildRule) {
  const RunArtifacts a = full_run();
  ASSERT_TRUE(a.risk_model.has_value());
  bool found = false;
  for (const auto& r : a.risk_model->rules)
    if (r.rule.conjuncts == child_rule()) {
      found = true;
      EXPECT_EQ(r.support, 4u);
      EXPECT_EQ(r.risk, 50.0);
    }
  EXPECT_TRUE(found);
  EXPECT_NE(a.report.find("support=4 risk=50.0"), std::string::npos);
  EXPECT_NE(a.report.find("9 of 297 printed entries"), std::string::npos);
  EXPECT_NE(a.report.find("positive at threshold 50.0: 16 of 30"), std::string::npos);
}

TEST_F(PipelineTest, TwoRunsAreByteIdentical) { EXPECT_EQ(render_artifacts(full_run()), render_artifacts(full_run())); }

TEST_F(PipelineTest, WithoutLabelsScoringIsSkipped) {
  const RunArtifacts a = run_pipeline(reference_records(), default_dataset_config(), std::nullopt, options);
  EXPECT_TRUE(a.rule_set.has_value());
  EXPECT_FALSE(a.risk_model.has_value());
  EXPECT_NE(a.report.find("scoring skipped"), std::string::npos);
  for (const auto& [name, text] : render_artifacts(a)) EXPECT_NE(name, files::kRiskModel);
}

TEST_F(PipelineTest, EmptyRuleSetIsReported) {
  RunArtifacts a = full_run();
  a.rule_set->rules.clear();
  a.risk_model.reset();
  EXPECT_NE(emit_report(a, options).find("no rules survived pruning"), std::string::npos);
}

TEST_F(PipelineTest, PersistLoadRoundTrip) {
  const RunArtifacts a = full_run();
  persist_artifacts(a, dir);
  const RunArtifacts back = load_artifacts(dir);
  EXPECT_EQ(render_artifacts(back), render_artifacts(a));
  EXPECT_EQ(emit_report(back, options), a.report);
}

TEST_F(PipelineTest, ResumingFromAnyIntermediateReproducesDownstream) {
  const RunArtifacts full = full_run();
  persist_artifacts(full, dir);
  const auto expected = render_artifacts(full);
  for (Stage from : {Stage::SoftSets, Stage::Reduce, Stage::Rules, Stage::Score, Stage::Report}) {
    RunArtifacts a = load_artifacts(dir);
    // drop everything the resumed stages will rebuild
    if (from <= Stage::SoftSets) a.soft_sets.clear();
    if (from <= Stage::Reduce) a.reduced_sets.clear();
    if (from <= Stage::Rules) a.rule_set.reset();
    if (from <= Stage::Score) a.risk_model.reset();
    a.report.clear();
    continue_pipeline(a, from, reference_labels(), options);
    EXPECT_EQ(render_artifacts(a), expected) << stage_name(from);
  }
}

TEST_F(PipelineTest, DigestMismatchIsRejected) {
  persist_artifacts(full_run(), dir);
  DatasetConfig changed = default_dataset_config();
  changed.variables[0].terms[0].mf.right = 17;
  write_text_file(dir / files::kConfig, dump(to_json(changed)));
  try {
    load_artifacts(dir);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::Validation);
  }
}

TEST_F(PipelineTest, StageErrorsNameTheStage) {
  auto records = reference_records();
  records[0].values.erase("bp");
  try {
    run_pipeline(records, default_dataset_config(), std::nullopt);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::ConfigMismatch);
    EXPECT_NE(std::string(e.what()).find("stage 'fuzzify'"), std::string::npos) << e.what();
  }
  auto partial = reference_labels();
  partial.erase("v19");
  try {
    run_pipeline(reference_records(), default_dataset_config(), partial);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::MissingLabel);
    EXPECT_NE(std::string(e.what()).find("stage 'score'"), std::string::npos) << e.what();
  }
}

TEST_F(PipelineTest, MergeDuplicateLevelsOption) {
  options.merge_duplicate_levels = true;
  const RunArtifacts a = full_run();
  for (const auto& s : a.reduced_sets)
    if (s.source().variable == "age" && s.source().term == "child")
      EXPECT_EQ(s.grid(), (std::vector<double>{0.25, 0.5, 0.75}));
  // Merging levels with identical sets cannot change the distinct matched sets.
  options.merge_duplicate_levels = false;
  const RunArtifacts plain = full_run();
  ASSERT_EQ(a.rule_set->rules.size(), plain.rule_set->rules.size());
  for (std::size_t i = 0; i < a.rule_set->rules.size(); ++i)
    EXPECT_EQ(a.rule_set->rules[i].matched, plain.rule_set->rules[i].matched);
}

TEST_F(PipelineTest, TamperedRiskIsRejectedOnLoad) {
  persist_artifacts(full_run(), dir);
  Json j = read_json_file(dir / files::kRiskModel);
  j["rules"][0]["risk"] = 12.3;
  write_text_file(dir / files::kRiskModel, dump(j));
  EXPECT_THROW(load_artifacts(dir), Error);
}
