#include "lexsent/pipeline.h"

#include "lexsent/tagger.h"

namespace lexsent {

SentenceAnalysis Classifier::analyze_sentence(const Sentence& sentence) const {
  std::vector<Token> tokens = tokenize(sentence);
  for (Token& t : tokens) t = lemmatize(std::move(t), kb_);
  std::vector<TaggedToken> tagged = tag_tokens(tokens, kb_);
  disambiguate_all(tagged, kb_, stopwords_);
  return score_sentence(std::move(tagged), kb_, options_.scoring, sentence);
}

FeedbackResult Classifier::classify(const RawFeedback& feedback) const {
  const RawFeedback cleaned{feedback.id, clean_text(feedback.text)};
  std::vector<SentenceAnalysis> analyses;
  for (const Sentence& s : split_sentences(cleaned)) {
    analyses.push_back(analyze_sentence(s));
  }
  FeedbackResult result = aggregate_feedback(
      std::move(analyses), options_.scoring.neutral_band, options_.aggregate);
  result.feedback_id = feedback.id;
  return result;
}

std::vector<FeedbackResult> Classifier::classify_all(
    std::span<const RawFeedback> corpus) const {
  std::vector<FeedbackResult> out;
  out.reserve(corpus.size());
  for (const RawFeedback& f : corpus) out.push_back(classify(f));
  return out;
}

}  // namespace lexsent
