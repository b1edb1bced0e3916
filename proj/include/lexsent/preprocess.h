// Noise removal, sentence splitting, tokenization and lemma normalization.

#ifndef LEXSENT_PREPROCESS_H_
#define LEXSENT_PREPROCESS_H_

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "lexsent/knowledge_base.h"

namespace lexsent {

struct RawFeedback {
  std::string id;
  std::string text;
};

struct Sentence {
  std::string feedback_id;
  std::size_t index = 0;
  std::string text;
};

struct Token {
  std::string surface;
  std::string lemma;
  std::size_t position = 0;
};

// Removes URLs, markup tags and control characters, collapses letter runs of
// three or more to two and repeated punctuation to one, then normalizes
// whitespace. The rules are re-applied until the text stops changing, which
// makes the function idempotent.
std::string clean_text(std::string_view raw);

// Abbreviations whose trailing '.' never ends a sentence.
const std::vector<std::string>& abbreviation_guard();

// Splits on '.', '!' or '?' followed by whitespace or end of text.
std::vector<Sentence> split_sentences(const RawFeedback& feedback);

std::vector<Token> tokenize(const Sentence& sentence);
std::vector<Token> tokenize(std::string_view text);

// Suffix-stripping lemmatizer gated by lexicon membership. The first
// candidate present in the sense index wins; otherwise the lowercase surface
// is kept.
Token lemmatize(Token token, const KnowledgeBase& kb);
std::string lemmatize_word(std::string_view lowercase_word,
                           const KnowledgeBase& kb);

}  // namespace lexsent

#endif  // LEXSENT_PREPROCESS_H_
