// Feedback-level polarity from sentence analyses.

#ifndef LEXSENT_AGGREGATE_H_
#define LEXSENT_AGGREGATE_H_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lexsent/scorer.h"

namespace lexsent {

enum class AggregateStrategy {
  // Sum of raw scores over subjective sentences.
  kSum,
  // (#positive - #negative) over subjective sentences.
  kMajority,
};

std::string_view to_string(AggregateStrategy strategy);
std::optional<AggregateStrategy> parse_aggregate_strategy(std::string_view text);

struct FeedbackResult {
  std::string feedback_id;
  std::vector<SentenceAnalysis> sentences;
  double feedback_score = 0.0;
  Polarity polarity = Polarity::kNeutral;
  std::size_t subjective_count = 0;
  std::size_t objective_count = 0;
};

// Throws std::invalid_argument when the analyses carry more than one
// feedback id. Zero subjective sentences give Neutral with score 0.
FeedbackResult aggregate_feedback(
    std::vector<SentenceAnalysis> analyses,
    double neutral_band = ScoringConfig{}.neutral_band,
    AggregateStrategy strategy = AggregateStrategy::kSum);

}  // namespace lexsent

#endif  // LEXSENT_AGGREGATE_H_
