#include "lexsent/wsd.h"

#include <fstream>
#include <stdexcept>

#include "lexsent/preprocess.h"
#include "lexsent/text_util.h"

namespace lexsent {

namespace {

constexpr std::string_view kDefaultStopwords[] = {
    "a",    "an",   "the",   "and",   "or",    "but",  "if",   "of",
    "at",   "by",   "for",   "with",  "about", "to",   "from", "in",
    "on",   "into", "as",    "than",  "that",  "this", "these", "those",
    "which", "who", "what",  "it",    "its",   "is",   "are",  "was",
    "were", "be",   "been",  "being", "do",    "does", "did",  "have",
    "has",  "had",  "he",    "she",   "they",  "them", "their", "his",
    "her",  "we",   "you",   "i",     "so",    "such", "there", "some",
};

}  // namespace

StopwordList::StopwordList() {
  for (std::string_view w : kDefaultStopwords) words_.emplace(w);
}

StopwordList StopwordList::from_stream(std::istream& in) {
  std::unordered_set<std::string> words;
  std::string line;
  while (std::getline(in, line)) {
    const std::string_view t = trim(line);
    if (t.empty() || t.front() == '#') continue;
    words.insert(to_lower(t));
  }
  return StopwordList(std::move(words));
}

StopwordList StopwordList::from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open file: " + path);
  return from_stream(in);
}

const StopwordList& default_stopwords() {
  static const StopwordList kList;
  return kList;
}

std::size_t gloss_overlap(std::string_view gloss,
                          const std::unordered_set<std::string>& context_lemmas,
                          const KnowledgeBase& kb,
                          const StopwordList& stopwords) {
  if (context_lemmas.empty()) return 0;
  std::unordered_set<std::string> seen;
  for (Token& token : tokenize(gloss)) {
    token = lemmatize(std::move(token), kb);
    if (stopwords.contains(token.lemma)) continue;
    if (context_lemmas.contains(token.lemma)) seen.insert(token.lemma);
  }
  return seen.size();
}

std::unordered_set<std::string> wsd_context(
    std::span<const TaggedToken> sentence, std::size_t position) {
  std::unordered_set<std::string> context;
  for (const TaggedToken& t : sentence) {
    if (t.token.position == position || !is_open_class(t.pos)) continue;
    context.insert(t.token.lemma);
  }
  return context;
}

const Synset* disambiguate(const TaggedToken& token,
                           std::span<const TaggedToken> sentence,
                           const KnowledgeBase& kb,
                           const StopwordList& stopwords) {
  const auto code = to_pos_code(token.pos);
  if (!code) return nullptr;
  const auto candidates = lookup_senses(kb, token.token.lemma, *code);
  if (candidates.empty()) return nullptr;
  if (candidates.size() == 1) return candidates.front();

  const auto context = wsd_context(sentence, token.token.position);
  // Candidates arrive in ascending rank order; strict '>' keeps the lowest
  // rank on ties.
  const Synset* best = candidates.front();
  std::size_t best_overlap = gloss_overlap(best->gloss, context, kb, stopwords);
  for (std::size_t i = 1; i < candidates.size(); ++i) {
    const std::size_t overlap =
        gloss_overlap(candidates[i]->gloss, context, kb, stopwords);
    if (overlap > best_overlap) {
      best = candidates[i];
      best_overlap = overlap;
    }
  }
  return best;
}

void disambiguate_all(std::span<TaggedToken> sentence, const KnowledgeBase& kb,
                      const StopwordList& stopwords) {
  for (TaggedToken& t : sentence) {
    t.synset = is_open_class(t.pos) ? disambiguate(t, sentence, kb, stopwords)
                                    : nullptr;
  }
}

}  // namespace lexsent
