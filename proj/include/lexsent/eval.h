// Confusion matrices and the metrics derived from them.

#ifndef LEXSENT_EVAL_H_
#define LEXSENT_EVAL_H_

#include <array>
#include <cstdint>
#include <istream>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "lexsent/scorer.h"

namespace lexsent {

// 3x3 counts indexed [system][actual] over (Positive, Negative, Neutral).
class ConfusionMatrix {
 public:
  using Counts = std::array<std::array<std::uint64_t, 3>, 3>;

  ConfusionMatrix() = default;
  explicit ConfusionMatrix(const Counts& counts) : counts_(counts) {}

  std::uint64_t cell(Polarity system, Polarity actual) const {
    return counts_[index(system)][index(actual)];
  }
  void add(Polarity system, Polarity actual, std::uint64_t n = 1) {
    counts_[index(system)][index(actual)] += n;
  }

  std::uint64_t row_total(Polarity system) const;
  std::uint64_t col_total(Polarity actual) const;
  std::uint64_t total() const;
  std::uint64_t trace() const;

  const Counts& counts() const { return counts_; }

  static std::size_t index(Polarity p) { return static_cast<std::size_t>(p); }

  friend bool operator==(const ConfusionMatrix&,
                         const ConfusionMatrix&) = default;

 private:
  Counts counts_{};
};

using LabelPair = std::pair<Polarity, Polarity>;  // (system, actual)

// Throws std::invalid_argument on empty input.
ConfusionMatrix confusion_matrix(std::span<const LabelPair> pairs);

// trace / total. Throws std::invalid_argument when the matrix is empty.
double accuracy(const ConfusionMatrix& m);

struct ClassMetrics {
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
  // Set when the corresponding denominator was zero and the value was
  // reported as 0.
  bool precision_undefined = false;
  bool recall_undefined = false;
  bool f1_undefined = false;
};

std::array<ClassMetrics, 3> per_class_metrics(const ConfusionMatrix& m);

// Round half up to `decimals` places, formatted with exactly that many
// fraction digits ("0.83").
std::string format_rounded(double value, int decimals = 2);

struct SubjectivityStats {
  std::uint64_t subjective = 0;
  std::uint64_t objective = 0;
  // "S/O" with S = round(100 * subjective / total), O = 100 - S.
  std::string percent;
};

// Throws std::invalid_argument when both counts are zero.
SubjectivityStats subjectivity_stats(std::uint64_t subjective,
                                     std::uint64_t objective);
// Throws std::invalid_argument on empty input.
SubjectivityStats subjectivity_stats(std::span<const SentenceAnalysis> analyses);

enum class EvalLevel { kSentence, kFeedback };

std::string_view to_string(EvalLevel level);
std::optional<EvalLevel> parse_eval_level(std::string_view text);

struct GoldLabel {
  std::string id;
  EvalLevel level = EvalLevel::kSentence;
  Polarity label = Polarity::kNeutral;
};

// CSV `id,level,label`, no header required; a first line equal to
// "id,level,label" is skipped. Throws std::runtime_error with the line
// number on malformed rows.
std::vector<GoldLabel> read_gold_labels(std::istream& in,
                                        const std::string& source = "gold");

}  // namespace lexsent

#endif  // LEXSENT_EVAL_H_
