#include "lexsent/eval.h"

#include <random>
#include <sstream>

#include "gtest/gtest.h"

namespace lexsent {
namespace {

constexpr Polarity kPos = Polarity::kPositive;
constexpr Polarity kNeg = Polarity::kNegative;
constexpr Polarity kNeu = Polarity::kNeutral;

// Published sentence-level counts, rows = system, columns = actual.
const ConfusionMatrix::Counts kSentenceTable = {{
    {222, 26, 12},
    {30, 170, 8},
    {14, 10, 100},
}};

// Published feedback-level counts.
const ConfusionMatrix::Counts kFeedbackTable = {{
    {80, 7, 3},
    {5, 44, 2},
    {1, 2, 13},
}};

TEST(ConfusionMatrixTest, Examples) {
  const std::vector<LabelPair> pairs = {{kPos, kPos}, {kPos, kNeg}, {kNeg, kNeg}};
  const ConfusionMatrix m = confusion_matrix(pairs);
  EXPECT_EQ(m.cell(kPos, kPos), 1u);
  EXPECT_EQ(m.cell(kPos, kNeg), 1u);
  EXPECT_EQ(m.cell(kNeg, kNeg), 1u);
  EXPECT_EQ(m.total(), 3u);

  const std::vector<LabelPair> same(5, {kPos, kPos});
  const ConfusionMatrix m5 = confusion_matrix(same);
  EXPECT_EQ(m5.cell(kPos, kPos), 5u);
  EXPECT_EQ(m5.total(), 5u);

  EXPECT_THROW(confusion_matrix(std::vector<LabelPair>{}),
               std::invalid_argument);
}

TEST(ConfusionMatrixTest, TotalsMatchPublishedTable) {
  const ConfusionMatrix m(kSentenceTable);
  EXPECT_EQ(m.row_total(kPos), 260u);
  EXPECT_EQ(m.row_total(kNeg), 208u);
  EXPECT_EQ(m.row_total(kNeu), 124u);
  EXPECT_EQ(m.col_total(kPos), 266u);
  EXPECT_EQ(m.col_total(kNeg), 206u);
  EXPECT_EQ(m.col_total(kNeu), 120u);
  EXPECT_EQ(m.total(), 592u);

  const ConfusionMatrix f(kFeedbackTable);
  EXPECT_EQ(f.row_total(kPos), 90u);
  EXPECT_EQ(f.row_total(kNeg), 51u);
  EXPECT_EQ(f.row_total(kNeu), 16u);
  EXPECT_EQ(f.col_total(kPos), 86u);
  EXPECT_EQ(f.col_total(kNeg), 53u);
  EXPECT_EQ(f.col_total(kNeu), 18u);
  EXPECT_EQ(f.total(), 157u);
}

TEST(AccuracyTest, Examples) {
  const double sentence = accuracy(ConfusionMatrix(kSentenceTable));
  EXPECT_NEAR(sentence, 0.8311, 1e-4);
  EXPECT_EQ(format_rounded(sentence), "0.83");
  const double feedback = accuracy(ConfusionMatrix(kFeedbackTable));
  EXPECT_NEAR(feedback, 0.8726, 1e-4);
  EXPECT_EQ(format_rounded(feedback), "0.87");

  ConfusionMatrix diag;
  diag.add(kPos, kPos, 4);
  diag.add(kNeg, kNeg, 2);
  diag.add(kNeu, kNeu, 9);
  EXPECT_DOUBLE_EQ(accuracy(diag), 1.0);
  EXPECT_THROW(accuracy(ConfusionMatrix{}), std::invalid_argument);
}

TEST(FormatRoundedTest, HalfUp) {
  EXPECT_EQ(format_rounded(0.125), "0.13");
  EXPECT_EQ(format_rounded(0.135), "0.14");
  EXPECT_EQ(format_rounded(0.8349), "0.83");
  EXPECT_EQ(format_rounded(1.0), "1.00");
  EXPECT_EQ(format_rounded(0.87255, 4), "0.8726");
}

TEST(PerClassMetricsTest, PublishedTables) {
  // Oracle: direct arithmetic on the published counts.
  const auto s = per_class_metrics(ConfusionMatrix(kSentenceTable));
  const auto& pos = s[ConfusionMatrix::index(kPos)];
  EXPECT_NEAR(pos.precision, 222.0 / 260.0, 1e-15);
  EXPECT_NEAR(pos.precision, 0.8538, 1e-4);
  EXPECT_NEAR(pos.recall, 222.0 / 266.0, 1e-15);
  EXPECT_NEAR(pos.recall, 0.8346, 1e-4);
  const double p = 222.0 / 260.0, r = 222.0 / 266.0;
  EXPECT_NEAR(pos.f1, 2 * p * r / (p + r), 1e-15);

  const auto f = per_class_metrics(ConfusionMatrix(kFeedbackTable));
  const auto& neu = f[ConfusionMatrix::index(kNeu)];
  EXPECT_NEAR(neu.precision, 13.0 / 16.0, 1e-15);
  EXPECT_NEAR(neu.precision, 0.8125, 1e-4);
  EXPECT_NEAR(neu.recall, 13.0 / 18.0, 1e-15);
  EXPECT_NEAR(neu.recall, 0.7222, 1e-4);
  EXPECT_FALSE(neu.precision_undefined);
}

TEST(PerClassMetricsTest, EmptyRowIsFlaggedZero) {
  ConfusionMatrix m;
  m.add(kPos, kPos, 3);
  m.add(kPos, kNeu, 1);
  const auto metrics = per_class_metrics(m);
  const auto& neu = metrics[ConfusionMatrix::index(kNeu)];
  EXPECT_DOUBLE_EQ(neu.precision, 0.0);
  EXPECT_TRUE(neu.precision_undefined);
  EXPECT_DOUBLE_EQ(neu.recall, 0.0);
  EXPECT_FALSE(neu.recall_undefined);
  const auto& neg = metrics[ConfusionMatrix::index(kNeg)];
  EXPECT_TRUE(neg.precision_undefined);
  EXPECT_TRUE(neg.recall_undefined);
  EXPECT_TRUE(neg.f1_undefined);
}

TEST(SubjectivityStatsTest, Examples) {
  EXPECT_EQ(subjectivity_stats(1238, 392).percent, "76/24");
  EXPECT_EQ(subjectivity_stats(5405, 2325).percent, "70/30");
  EXPECT_EQ(subjectivity_stats(1, 0).percent, "100/0");
  EXPECT_EQ(subjectivity_stats(0, 3).percent, "0/100");
  EXPECT_EQ(subjectivity_stats(1, 1).percent, "50/50");
  EXPECT_EQ(subjectivity_stats(1, 7).percent, "13/87");  // 12.5 rounds up
  EXPECT_THROW(subjectivity_stats(0, 0), std::invalid_argument);
}

TEST(SubjectivityStatsTest, FromAnalyses) {
  std::vector<SentenceAnalysis> a(4);
  a[0].subjective = a[1].subjective = a[2].subjective = true;
  const auto stats = subjectivity_stats(a);
  EXPECT_EQ(stats.subjective, 3u);
  EXPECT_EQ(stats.objective, 1u);
  EXPECT_EQ(stats.percent, "75/25");
  EXPECT_THROW(subjectivity_stats(std::span<const SentenceAnalysis>{}),
               std::invalid_argument);
}

std::vector<LabelPair> random_pairs(std::mt19937& rng, std::size_t n) {
  std::uniform_int_distribution<int> label(0, 2);
  std::vector<LabelPair> out;
  for (std::size_t i = 0; i < n; ++i) {
    out.emplace_back(kPolarities[label(rng)], kPolarities[label(rng)]);
  }
  return out;
}

TEST(EvalProperty, PermutationInvariance) {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 500; ++trial) {
    auto pairs = random_pairs(rng, 1 + rng() % 60);
    const ConfusionMatrix m = confusion_matrix(pairs);
    std::shuffle(pairs.begin(), pairs.end(), rng);
    EXPECT_EQ(confusion_matrix(pairs), m);
  }
}

TEST(EvalProperty, RecallWeightedByColumnTotalsIsAccuracy) {
  std::mt19937 rng(6);
  for (int trial = 0; trial < 500; ++trial) {
    const ConfusionMatrix m = confusion_matrix(random_pairs(rng, 1 + rng() % 80));
    const auto metrics = per_class_metrics(m);
    double weighted = 0.0;
    for (Polarity p : kPolarities) {
      weighted += metrics[ConfusionMatrix::index(p)].recall *
                  static_cast<double>(m.col_total(p));
    }
    EXPECT_NEAR(weighted / static_cast<double>(m.total()), accuracy(m), 1e-12);
    const double acc = accuracy(m);
    EXPECT_GE(acc, 0.0);
    EXPECT_LE(acc, 1.0);
    EXPECT_EQ(acc == 1.0, m.trace() == m.total());
  }
}

TEST(ReadGoldLabelsTest, ParsesRowsAndHeader) {
  std::istringstream in(
      "id,level,label\n"
      "f1,feedback,positive\n"
      "# comment\n"
      "f1#0,sentence,Negative\n"
      "odd,id#2,sentence,neutral\n");
  const auto gold = read_gold_labels(in);
  ASSERT_EQ(gold.size(), 3u);
  EXPECT_EQ(gold[0].id, "f1");
  EXPECT_EQ(gold[0].level, EvalLevel::kFeedback);
  EXPECT_EQ(gold[1].label, kNeg);
  EXPECT_EQ(gold[2].id, "odd,id#2");
}

TEST(ReadGoldLabelsTest, RejectsBadRows) {
  for (const std::string bad :
       {"f1,feedback\n", "f1,document,positive\n", "f1,sentence,great\n",
        ",sentence,positive\n"}) {
    std::istringstream in(bad);
    EXPECT_THROW(read_gold_labels(in), std::runtime_error) << bad;
  }
}

}  // namespace
}  // namespace lexsent
