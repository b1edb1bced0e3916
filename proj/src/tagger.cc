#include "lexsent/tagger.h"

namespace lexsent {

std::string_view to_string(CoarsePos pos) {
  switch (pos) {
    case CoarsePos::kNoun: return "noun";
    case CoarsePos::kVerb: return "verb";
    case CoarsePos::kAdjective: return "adjective";
    case CoarsePos::kAdverb: return "adverb";
    case CoarsePos::kNegation: return "negation";
    case CoarsePos::kIntensifier: return "intensifier";
    case CoarsePos::kOther: return "other";
  }
  return "other";
}

bool is_open_class(CoarsePos pos) { return to_pos_code(pos).has_value(); }

std::optional<PosCode> to_pos_code(CoarsePos pos) {
  switch (pos) {
    case CoarsePos::kNoun: return PosCode::kNoun;
    case CoarsePos::kVerb: return PosCode::kVerb;
    case CoarsePos::kAdjective: return PosCode::kAdjective;
    case CoarsePos::kAdverb: return PosCode::kAdverb;
    default: return std::nullopt;
  }
}

CoarsePos to_coarse(PosCode code) {
  switch (code) {
    case PosCode::kNoun: return CoarsePos::kNoun;
    case PosCode::kVerb: return CoarsePos::kVerb;
    case PosCode::kAdjective: return CoarsePos::kAdjective;
    case PosCode::kAdverb: return CoarsePos::kAdverb;
  }
  return CoarsePos::kOther;
}

CoarsePos tag_token(const Token& token, const KnowledgeBase& kb) {
  const std::string_view lemma = token.lemma;
  if (kb.is_negation(lemma)) return CoarsePos::kNegation;
  if (kb.intensifier(lemma)) return CoarsePos::kIntensifier;

  if (kb.is_indexed(lemma)) {
    // kPosPriority is ordered a > r > v > n, so strict '>' keeps the
    // higher-priority code on ties.
    std::optional<PosCode> best;
    std::size_t best_count = 0;
    for (PosCode code : kPosPriority) {
      const std::size_t count = kb.senses(lemma, code).size();
      if (count > best_count) {
        best = code;
        best_count = count;
      }
    }
    if (best) return to_coarse(*best);
  }

  if (lemma.ends_with("ly")) return CoarsePos::kAdverb;
  for (std::string_view suffix : {"ous", "ful", "ive", "able"}) {
    if (lemma.ends_with(suffix)) return CoarsePos::kAdjective;
  }
  return CoarsePos::kOther;
}

std::vector<TaggedToken> tag_tokens(std::span<const Token> tokens,
                                    const KnowledgeBase& kb) {
  std::vector<TaggedToken> out;
  out.reserve(tokens.size());
  for (const Token& token : tokens) {
    TaggedToken tagged;
    tagged.token = token;
    tagged.pos = tag_token(token, kb);
    out.push_back(std::move(tagged));
  }
  return out;
}

}  // namespace lexsent
