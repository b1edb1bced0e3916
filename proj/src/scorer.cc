#include "lexsent/scorer.h"

#include <algorithm>

#include "lexsent/text_util.h"

namespace lexsent {

std::string_view to_string(Polarity polarity) {
  switch (polarity) {
    case Polarity::kPositive: return "positive";
    case Polarity::kNegative: return "negative";
    case Polarity::kNeutral: return "neutral";
  }
  return "neutral";
}

std::optional<Polarity> parse_polarity(std::string_view text) {
  const std::string t = to_lower(trim(text));
  if (t == "positive") return Polarity::kPositive;
  if (t == "negative") return Polarity::kNegative;
  if (t == "neutral") return Polarity::kNeutral;
  return std::nullopt;
}

double token_signed_score(const Synset& synset) {
  return synset.pos_score - synset.neg_score;
}

bool is_sentiment_bearing(const TaggedToken& token) {
  return token.synset != nullptr &&
         (token.synset->pos_score > 0.0 || token.synset->neg_score > 0.0);
}

bool classify_subjectivity(std::span<const TaggedToken> tagged,
                           double threshold) {
  return std::any_of(tagged.begin(), tagged.end(), [&](const TaggedToken& t) {
    return t.synset != nullptr &&
           std::max(t.synset->pos_score, t.synset->neg_score) >= threshold;
  });
}

Polarity polarity_for_score(double score, double neutral_band) {
  if (score > neutral_band) return Polarity::kPositive;
  if (score < -neutral_band) return Polarity::kNegative;
  return Polarity::kNeutral;
}

SentenceAnalysis score_sentence(std::vector<TaggedToken> tagged,
                                const KnowledgeBase& kb,
                                const ScoringConfig& config,
                                Sentence sentence) {
  SentenceAnalysis result;
  result.sentence = std::move(sentence);

  bool negation_armed = false;
  std::size_t negation_at = 0;
  double multiplier = 1.0;
  double sum = 0.0;

  for (std::size_t i = 0; i < tagged.size(); ++i) {
    TaggedToken& t = tagged[i];
    t.signed_score = 0.0;
    t.multiplier = 1.0;
    t.negated = false;

    if (t.pos == CoarsePos::kNegation) {
      negation_armed = true;
      negation_at = i;
      continue;
    }
    if (t.pos == CoarsePos::kIntensifier) {
      multiplier *= kb.intensifier(t.token.lemma).value_or(1.0);
      continue;
    }
    if (!is_sentiment_bearing(t)) continue;

    double s = token_signed_score(*t.synset);
    if (negation_armed) {
      if (i - negation_at <= config.negation_window) {
        s = -s;
        t.negated = true;
      }
      negation_armed = false;
    }
    t.signed_score = s;
    t.multiplier = multiplier;
    sum += multiplier * s;
    multiplier = 1.0;
  }

  result.subjective =
      classify_subjectivity(tagged, config.subjectivity_threshold);
  if (result.subjective) {
    result.raw_score = sum;
    result.polarity = polarity_for_score(sum, config.neutral_band);
  } else {
    result.raw_score = 0.0;
    result.polarity = Polarity::kNeutral;
  }
  result.tagged = std::move(tagged);
  return result;
}

}  // namespace lexsent
