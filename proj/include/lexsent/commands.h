// Batch commands behind the `lexsent` executable. Each returns the process
// exit code and writes results to `out` and diagnostics to `err`.
//
// Exit codes: 0 success, 1 load/parse failure, 2 empty input (empty corpus,
// or no ids shared between predictions and gold labels).

#ifndef LEXSENT_COMMANDS_H_
#define LEXSENT_COMMANDS_H_

#include <istream>
#include <ostream>
#include <string>
#include <vector>

#include "lexsent/eval.h"
#include "lexsent/pipeline.h"
#include "lexsent/preprocess.h"

namespace lexsent {

inline constexpr int kExitOk = 0;
inline constexpr int kExitLoadError = 1;
inline constexpr int kExitEmptyInput = 2;

enum class CorpusFormat { kJsonLines, kLines };

// JSON Lines: {"id": "...", "text": "..."} per line. Lines: one feedback per
// non-blank line, id = 1-based line number. Throws std::runtime_error on
// malformed input or duplicate ids.
std::vector<RawFeedback> read_corpus(std::istream& in, CorpusFormat format,
                                     const std::string& source = "corpus");

// Fixed 4-fraction-digit decimal; negative zero prints as 0.0000.
std::string format_score(double value);

// One JSON object (no trailing newline) for a classified feedback.
std::string feedback_to_json(const FeedbackResult& result, bool verbose);

struct ClassifyOptions {
  std::string corpus_path;
  CorpusFormat format = CorpusFormat::kJsonLines;
  std::string lexicon_path;
  std::string intensifier_path;
  std::string negation_path;
  std::string stopword_path;  // empty: built-in list
  PipelineOptions pipeline;
  bool verbose = false;
};

int cmd_classify(const ClassifyOptions& options, std::ostream& out,
                 std::ostream& err);

struct EvaluateOptions {
  std::string predictions_path;
  std::string gold_path;
  EvalLevel level = EvalLevel::kSentence;
};

int cmd_evaluate(const EvaluateOptions& options, std::ostream& out,
                 std::ostream& err);

int cmd_lexicon_info(const std::string& lexicon_path, std::ostream& out,
                     std::ostream& err);

}  // namespace lexsent

#endif  // LEXSENT_COMMANDS_H_
