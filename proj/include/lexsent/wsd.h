// Simplified Lesk word-sense disambiguation over synset glosses.

#ifndef LEXSENT_WSD_H_
#define LEXSENT_WSD_H_

#include <istream>
#include <span>
#include <string>
#include <string_view>
#include <unordered_set>

#include "lexsent/knowledge_base.h"
#include "lexsent/tagger.h"

namespace lexsent {

class StopwordList {
 public:
  // The built-in English function-word list.
  StopwordList();
  explicit StopwordList(std::unordered_set<std::string> words)
      : words_(std::move(words)) {}

  // One word per line, '#' comments allowed.
  static StopwordList from_stream(std::istream& in);
  static StopwordList from_file(const std::string& path);

  bool contains(std::string_view word) const {
    return words_.contains(std::string(word));
  }
  std::size_t size() const { return words_.size(); }

 private:
  std::unordered_set<std::string> words_;
};

const StopwordList& default_stopwords();

// Number of distinct non-stopword gloss lemmas found in `context_lemmas`.
std::size_t gloss_overlap(std::string_view gloss,
                          const std::unordered_set<std::string>& context_lemmas,
                          const KnowledgeBase& kb,
                          const StopwordList& stopwords = default_stopwords());

// Lemmas of every open-class token in `sentence` other than the one at
// `position`.
std::unordered_set<std::string> wsd_context(
    std::span<const TaggedToken> sentence, std::size_t position);

// Picks the candidate sense (same lemma, same POS) with the largest gloss
// overlap with the sentence context; ties go to the lowest sense rank.
// Returns nullptr when the lemma has no senses for the token's POS.
const Synset* disambiguate(const TaggedToken& token,
                           std::span<const TaggedToken> sentence,
                           const KnowledgeBase& kb,
                           const StopwordList& stopwords = default_stopwords());

// Runs disambiguate on every open-class token, filling TaggedToken::synset.
void disambiguate_all(std::span<TaggedToken> sentence, const KnowledgeBase& kb,
                      const StopwordList& stopwords = default_stopwords());

}  // namespace lexsent

#endif  // LEXSENT_WSD_H_
