// Sentence scoring rules.
//
// Tokens are scanned left to right:
//   * A Negation token arms a flag at its position. The next
//     sentiment-bearing token consumes the flag and has its score sign
//     flipped if it sits at most `negation_window` tokens after the most
//     recent negation; past the window the flag is dropped unused.
//   * Intensifier tokens multiply into a pending multiplier (default 1)
//     which the next sentiment-bearing token consumes.
//   * A sentiment-bearing token is one whose resolved synset has a non-zero
//     positive or negative score. It contributes multiplier * s where
//     s = pos_score - neg_score, negated when the flag applies.
// The raw score is the unclamped sum of contributions.

#ifndef LEXSENT_SCORER_H_
#define LEXSENT_SCORER_H_

#include <array>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "lexsent/knowledge_base.h"
#include "lexsent/preprocess.h"
#include "lexsent/tagger.h"

namespace lexsent {

enum class Polarity { kPositive, kNegative, kNeutral };

inline constexpr std::array<Polarity, 3> kPolarities = {
    Polarity::kPositive, Polarity::kNegative, Polarity::kNeutral};

std::string_view to_string(Polarity polarity);
std::optional<Polarity> parse_polarity(std::string_view text);

struct ScoringConfig {
  // Minimum max(pos, neg) of a resolved synset for a sentence to count as
  // subjective.
  double subjectivity_threshold = 0.1;
  // Scores within [-neutral_band, +neutral_band] are Neutral.
  double neutral_band = 0.05;
  std::size_t negation_window = 3;
};

struct SentenceAnalysis {
  Sentence sentence;
  std::vector<TaggedToken> tagged;
  bool subjective = false;
  double raw_score = 0.0;
  Polarity polarity = Polarity::kNeutral;
};

double token_signed_score(const Synset& synset);

bool is_sentiment_bearing(const TaggedToken& token);

bool classify_subjectivity(std::span<const TaggedToken> tagged,
                           double threshold = ScoringConfig{}.subjectivity_threshold);

// Band rule shared by sentence and feedback levels.
Polarity polarity_for_score(double score, double neutral_band);

// Expects tokens already tagged and disambiguated. Fills per-token
// signed_score / multiplier / negated diagnostics.
SentenceAnalysis score_sentence(std::vector<TaggedToken> tagged,
                                const KnowledgeBase& kb,
                                const ScoringConfig& config = {},
                                Sentence sentence = {});

}  // namespace lexsent

#endif  // LEXSENT_SCORER_H_
