// End-to-end classification: clean -> split -> tokenize -> lemmatize -> tag
// -> disambiguate -> score -> aggregate.

#ifndef LEXSENT_PIPELINE_H_
#define LEXSENT_PIPELINE_H_

#include <span>
#include <vector>

#include "lexsent/aggregate.h"
#include "lexsent/knowledge_base.h"
#include "lexsent/preprocess.h"
#include "lexsent/scorer.h"
#include "lexsent/wsd.h"

namespace lexsent {

struct PipelineOptions {
  ScoringConfig scoring;
  AggregateStrategy aggregate = AggregateStrategy::kSum;
};

// Holds references only; the knowledge base and stopword list must outlive
// the classifier. Thread-safe for concurrent classify() calls.
class Classifier {
 public:
  Classifier(const KnowledgeBase& kb, PipelineOptions options = {},
             const StopwordList& stopwords = default_stopwords())
      : kb_(kb), options_(options), stopwords_(stopwords) {}

  SentenceAnalysis analyze_sentence(const Sentence& sentence) const;
  FeedbackResult classify(const RawFeedback& feedback) const;
  // Output order matches input order.
  std::vector<FeedbackResult> classify_all(
      std::span<const RawFeedback> corpus) const;

  const PipelineOptions& options() const { return options_; }

 private:
  const KnowledgeBase& kb_;
  PipelineOptions options_;
  const StopwordList& stopwords_;
};

}  // namespace lexsent

#endif  // LEXSENT_PIPELINE_H_
