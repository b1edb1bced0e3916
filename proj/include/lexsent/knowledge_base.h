// Sentiment lexicon, intensifier and negation dictionaries.
//
// The lexicon uses the SentiWordNet 3.0 line format:
//
//   POS<TAB>ID<TAB>PosScore<TAB>NegScore<TAB>SynsetTerms<TAB>Gloss
//
// where SynsetTerms is a space separated list of `lemma#rank` entries.
// A KnowledgeBase is built once and never mutated afterwards, so it can be
// shared between threads without locking.

#ifndef LEXSENT_KNOWLEDGE_BASE_H_
#define LEXSENT_KNOWLEDGE_BASE_H_

#include <array>
#include <cstdint>
#include <istream>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <vector>

namespace lexsent {

// Tolerance for pos + neg + obj == 1 on scores read from decimal text.
inline constexpr double kScoreSumTolerance = 1e-9;

// Lexicon part-of-speech codes. Enumerator order is the lookup priority
// a > r > v > n used for wildcard lookups and tagger ties.
enum class PosCode : std::uint8_t { kAdjective, kAdverb, kVerb, kNoun };

inline constexpr std::array<PosCode, 4> kPosPriority = {
    PosCode::kAdjective, PosCode::kAdverb, PosCode::kVerb, PosCode::kNoun};

char pos_code_char(PosCode pos);
std::optional<PosCode> pos_code_from_char(char c);

struct SynsetKey {
  PosCode pos = PosCode::kNoun;
  std::uint64_t offset = 0;

  friend auto operator<=>(const SynsetKey&, const SynsetKey&) = default;
};

std::string to_string(const SynsetKey& key);

struct SynsetTerm {
  std::string lemma;
  int sense_rank = 1;

  friend bool operator==(const SynsetTerm&, const SynsetTerm&) = default;
};

struct Synset {
  SynsetKey key;
  double pos_score = 0.0;
  double neg_score = 0.0;
  double obj_score = 1.0;
  std::vector<SynsetTerm> terms;
  std::string gloss;

  friend bool operator==(const Synset&, const Synset&) = default;
};

struct IntensifierEntry {
  std::string word;
  double multiplier = 1.0;
};

// Thrown for any malformed dictionary line. what() carries the source name,
// line number and offending field.
class LexiconError : public std::runtime_error {
 public:
  LexiconError(std::string source, std::size_t line, std::string field,
               const std::string& message);

  const std::string& source() const { return source_; }
  std::size_t line() const { return line_; }
  const std::string& field() const { return field_; }

 private:
  std::string source_;
  std::size_t line_;
  std::string field_;
};

// 1 - (pos + neg). Throws std::domain_error when either score is outside
// [0, 1] or the pair sums above 1.
double compute_obj_score(double pos_score, double neg_score);

// Parses one physical lexicon line. Returns std::nullopt for blank lines and
// lines whose first non-blank character is '#'. `line_number` and `source`
// only feed diagnostics.
std::optional<Synset> parse_lexicon_line(std::string_view line,
                                         std::size_t line_number = 0,
                                         std::string_view source = "lexicon");

// Inverse of parse_lexicon_line; scores use the shortest round-tripping
// decimal form.
std::string format_lexicon_line(const Synset& synset);

struct SenseRef {
  SynsetKey key;
  int sense_rank = 1;
};

class KnowledgeBase {
 public:
  KnowledgeBase() = default;

  const std::map<SynsetKey, Synset>& synsets() const { return synsets_; }
  std::size_t size() const { return synsets_.size(); }
  const Synset* find(const SynsetKey& key) const;

  // Senses of `lemma` with the given POS, ascending by sense rank.
  const std::vector<SenseRef>& senses(std::string_view lemma,
                                      PosCode pos) const;
  bool is_indexed(std::string_view lemma) const;

  bool is_negation(std::string_view word) const;
  std::optional<double> intensifier(std::string_view word) const;

  const std::unordered_map<std::string, double>& intensifiers() const {
    return intensifiers_;
  }
  const std::unordered_set<std::string>& negations() const {
    return negations_;
  }

  // Non-fatal notes produced while loading (duplicate intensifiers).
  const std::vector<std::string>& warnings() const { return warnings_; }

 private:
  friend class KnowledgeBaseBuilder;

  using SenseTable = std::array<std::vector<SenseRef>, 4>;

  std::map<SynsetKey, Synset> synsets_;
  std::unordered_map<std::string, SenseTable> sense_index_;
  std::unordered_map<std::string, double> intensifiers_;
  std::unordered_set<std::string> negations_;
  std::vector<std::string> warnings_;
};

// A named line source, used for diagnostics.
struct DictionarySource {
  std::istream& stream;
  std::string name;
};

// Loads and validates all three dictionaries. Any line-level error aborts
// with a LexiconError naming the source and line.
KnowledgeBase load_knowledge_base(DictionarySource lexicon,
                                  DictionarySource intensifiers,
                                  DictionarySource negations);

// Convenience overload for files on disk; an empty path means "no entries"
// for the intensifier and negation lists. Throws std::runtime_error naming
// the path when a file cannot be opened.
KnowledgeBase load_knowledge_base_files(const std::string& lexicon_path,
                                        const std::string& intensifier_path,
                                        const std::string& negation_path);

// Candidate synsets for `lemma`, ascending by sense rank. With no POS given,
// senses of all four codes are returned ordered by (a > r > v > n, rank).
// Unknown lemmas yield an empty list.
std::vector<const Synset*> lookup_senses(const KnowledgeBase& kb,
                                         std::string_view lemma,
                                         std::optional<PosCode> pos);

}  // namespace lexsent

#endif  // LEXSENT_KNOWLEDGE_BASE_H_
