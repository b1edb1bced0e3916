#include "lexsent/aggregate.h"

#include <stdexcept>

namespace lexsent {

std::string_view to_string(AggregateStrategy strategy) {
  return strategy == AggregateStrategy::kSum ? "sum" : "majority";
}

std::optional<AggregateStrategy> parse_aggregate_strategy(
    std::string_view text) {
  if (text == "sum") return AggregateStrategy::kSum;
  if (text == "majority") return AggregateStrategy::kMajority;
  return std::nullopt;
}

FeedbackResult aggregate_feedback(std::vector<SentenceAnalysis> analyses,
                                  double neutral_band,
                                  AggregateStrategy strategy) {
  FeedbackResult result;
  if (!analyses.empty()) result.feedback_id = analyses.front().sentence.feedback_id;

  double score = 0.0;
  for (const SentenceAnalysis& a : analyses) {
    if (a.sentence.feedback_id != result.feedback_id) {
      throw std::invalid_argument("sentences from feedbacks '" +
                                  result.feedback_id + "' and '" +
                                  a.sentence.feedback_id +
                                  "' cannot be aggregated together");
    }
    if (!a.subjective) {
      ++result.objective_count;
      continue;
    }
    ++result.subjective_count;
    if (strategy == AggregateStrategy::kSum) {
      score += a.raw_score;
    } else if (a.polarity == Polarity::kPositive) {
      score += 1.0;
    } else if (a.polarity == Polarity::kNegative) {
      score -= 1.0;
    }
  }

  result.feedback_score = result.subjective_count == 0 ? 0.0 : score;
  result.polarity = polarity_for_score(result.feedback_score, neutral_band);
  result.sentences = std::move(analyses);
  return result;
}

}  // namespace lexsent
