// Coarse part-of-speech tagging driven by the lexicon.
//
// Rules, first match wins:
//   1. lemma in the negation list      -> Negation
//   2. lemma in the intensifier list   -> Intensifier
//   3. lemma in the sense index        -> POS code with the most senses
//                                         (ties: a > r > v > n)
//   4. suffix heuristics: -ly adverb; -ous/-ful/-ive/-able adjective
//   5. Other

#ifndef LEXSENT_TAGGER_H_
#define LEXSENT_TAGGER_H_

#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "lexsent/knowledge_base.h"
#include "lexsent/preprocess.h"

namespace lexsent {

enum class CoarsePos {
  kNoun,
  kVerb,
  kAdjective,
  kAdverb,
  kNegation,
  kIntensifier,
  kOther,
};

std::string_view to_string(CoarsePos pos);

// Noun/Verb/Adjective/Adverb.
bool is_open_class(CoarsePos pos);
std::optional<PosCode> to_pos_code(CoarsePos pos);
CoarsePos to_coarse(PosCode code);

struct TaggedToken {
  Token token;
  CoarsePos pos = CoarsePos::kOther;
  // Set by word-sense disambiguation; points into the KnowledgeBase.
  const Synset* synset = nullptr;
  // Per-token score after negation, before any intensifier multiplier.
  double signed_score = 0.0;
  // Intensifier multiplier applied to this token's contribution.
  double multiplier = 1.0;
  bool negated = false;
};

CoarsePos tag_token(const Token& token, const KnowledgeBase& kb);
std::vector<TaggedToken> tag_tokens(std::span<const Token> tokens,
                                    const KnowledgeBase& kb);

}  // namespace lexsent

#endif  // LEXSENT_TAGGER_H_
