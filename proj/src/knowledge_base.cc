#include "lexsent/knowledge_base.h"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>

#include "lexsent/text_util.h"

namespace lexsent {

namespace {

const std::vector<SenseRef> kNoSenses;

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = s.find(sep, start);
    if (pos == std::string_view::npos) {
      out.push_back(s.substr(start));
      return out;
    }
    out.push_back(s.substr(start, pos - start));
    start = pos + 1;
  }
}

std::string_view strip_cr(std::string_view line) {
  if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
  return line;
}

bool is_comment_or_blank(std::string_view line) {
  const std::string_view t = trim(line);
  return t.empty() || t.front() == '#';
}

double parse_score(std::string_view text, std::size_t line,
                   std::string_view source, const char* field) {
  const std::string_view t = trim(text);
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), value);
  if (t.empty() || ec != std::errc() || ptr != t.data() + t.size()) {
    throw LexiconError(std::string(source), line, field,
                       "not a number: '" + std::string(text) + "'");
  }
  if (!(value >= 0.0 && value <= 1.0)) {
    throw LexiconError(std::string(source), line, field,
                       "score outside [0,1]: " + std::string(t));
  }
  return value;
}

}  // namespace

char pos_code_char(PosCode pos) {
  switch (pos) {
    case PosCode::kAdjective: return 'a';
    case PosCode::kAdverb: return 'r';
    case PosCode::kVerb: return 'v';
    case PosCode::kNoun: return 'n';
  }
  return '?';
}

std::optional<PosCode> pos_code_from_char(char c) {
  switch (c) {
    case 'a': return PosCode::kAdjective;
    case 'r': return PosCode::kAdverb;
    case 'v': return PosCode::kVerb;
    case 'n': return PosCode::kNoun;
    default: return std::nullopt;
  }
}

std::string to_string(const SynsetKey& key) {
  return std::string(1, pos_code_char(key.pos)) + ":" +
         std::to_string(key.offset);
}

LexiconError::LexiconError(std::string source, std::size_t line,
                           std::string field, const std::string& message)
    : std::runtime_error(source + ":" + std::to_string(line) + ": field '" +
                         field + "': " + message),
      source_(std::move(source)),
      line_(line),
      field_(std::move(field)) {}

double compute_obj_score(double pos_score, double neg_score) {
  if (!(pos_score >= 0.0 && pos_score <= 1.0) ||
      !(neg_score >= 0.0 && neg_score <= 1.0)) {
    throw std::domain_error("sentiment scores must lie in [0,1]");
  }
  const double sum = pos_score + neg_score;
  if (sum > 1.0 + kScoreSumTolerance) {
    throw std::domain_error("PosScore + NegScore exceeds 1");
  }
  return std::max(0.0, 1.0 - sum);
}

std::optional<Synset> parse_lexicon_line(std::string_view line,
                                         std::size_t line_number,
                                         std::string_view source) {
  line = strip_cr(line);
  if (is_comment_or_blank(line)) return std::nullopt;

  const std::string src(source);
  const auto fields = split(line, '\t');
  if (fields.size() != 6) {
    throw LexiconError(src, line_number, "line",
                       "expected 6 tab-separated fields, found " +
                           std::to_string(fields.size()));
  }

  Synset synset;
  const std::string_view pos_text = trim(fields[0]);
  const auto pos = pos_text.size() == 1 ? pos_code_from_char(pos_text[0])
                                        : std::nullopt;
  if (!pos) {
    throw LexiconError(src, line_number, "POS",
                       "unknown part-of-speech code '" +
                           std::string(fields[0]) + "'");
  }
  synset.key.pos = *pos;

  const std::string_view id_text = trim(fields[1]);
  const auto [ptr, ec] = std::from_chars(
      id_text.data(), id_text.data() + id_text.size(), synset.key.offset);
  if (id_text.empty() || ec != std::errc() ||
      ptr != id_text.data() + id_text.size()) {
    throw LexiconError(src, line_number, "ID",
                       "not a non-negative integer: '" +
                           std::string(fields[1]) + "'");
  }

  synset.pos_score = parse_score(fields[2], line_number, source, "PosScore");
  synset.neg_score = parse_score(fields[3], line_number, source, "NegScore");
  try {
    synset.obj_score = compute_obj_score(synset.pos_score, synset.neg_score);
  } catch (const std::domain_error& e) {
    throw LexiconError(src, line_number, "NegScore", e.what());
  }

  for (const std::string_view entry : split(fields[4], ' ')) {
    if (entry.empty()) continue;
    const std::size_t hash = entry.rfind('#');
    if (hash == std::string_view::npos || hash == 0) {
      throw LexiconError(src, line_number, "SynsetTerms",
                         "malformed term '" + std::string(entry) +
                             "', expected lemma#rank");
    }
    const std::string_view rank_text = entry.substr(hash + 1);
    int rank = 0;
    const auto [rptr, rec] = std::from_chars(
        rank_text.data(), rank_text.data() + rank_text.size(), rank);
    if (rank_text.empty() || rec != std::errc() ||
        rptr != rank_text.data() + rank_text.size() || rank < 1) {
      throw LexiconError(src, line_number, "SynsetTerms",
                         "invalid sense rank in '" + std::string(entry) + "'");
    }
    synset.terms.push_back({to_lower(entry.substr(0, hash)), rank});
  }
  if (synset.terms.empty()) {
    throw LexiconError(src, line_number, "SynsetTerms", "no terms");
  }
  synset.gloss = std::string(fields[5]);
  return synset;
}

std::string format_lexicon_line(const Synset& synset) {
  auto shortest = [](double v) {
    char buf[32];
    const auto res = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, res.ptr);
  };
  std::string out;
  out += pos_code_char(synset.key.pos);
  out += '\t';
  out += std::to_string(synset.key.offset);
  out += '\t';
  out += shortest(synset.pos_score);
  out += '\t';
  out += shortest(synset.neg_score);
  out += '\t';
  for (std::size_t i = 0; i < synset.terms.size(); ++i) {
    if (i > 0) out += ' ';
    out += synset.terms[i].lemma + "#" +
           std::to_string(synset.terms[i].sense_rank);
  }
  out += '\t';
  out += synset.gloss;
  return out;
}

const Synset* KnowledgeBase::find(const SynsetKey& key) const {
  const auto it = synsets_.find(key);
  return it == synsets_.end() ? nullptr : &it->second;
}

const std::vector<SenseRef>& KnowledgeBase::senses(std::string_view lemma,
                                                   PosCode pos) const {
  const auto it = sense_index_.find(std::string(lemma));
  if (it == sense_index_.end()) return kNoSenses;
  return it->second[static_cast<std::size_t>(pos)];
}

bool KnowledgeBase::is_indexed(std::string_view lemma) const {
  return sense_index_.contains(std::string(lemma));
}

bool KnowledgeBase::is_negation(std::string_view word) const {
  return negations_.contains(std::string(word));
}

std::optional<double> KnowledgeBase::intensifier(std::string_view word) const {
  const auto it = intensifiers_.find(std::string(word));
  if (it == intensifiers_.end()) return std::nullopt;
  return it->second;
}

class KnowledgeBaseBuilder {
 public:
  void add_synset(Synset synset, const std::string& source, std::size_t line) {
    const SynsetKey key = synset.key;
    if (kb_.synsets_.contains(key)) {
      throw LexiconError(source, line, "ID",
                         "duplicate synset key " + to_string(key));
    }
    for (const SynsetTerm& term : synset.terms) {
      kb_.sense_index_[term.lemma][static_cast<std::size_t>(key.pos)]
          .push_back({key, term.sense_rank});
    }
    kb_.synsets_.emplace(key, std::move(synset));
  }

  void add_intensifier(const std::string& word, double multiplier,
                       const std::string& source, std::size_t line) {
    auto [it, inserted] = kb_.intensifiers_.insert_or_assign(word, multiplier);
    if (!inserted) {
      kb_.warnings_.push_back(source + ":" + std::to_string(line) +
                              ": duplicate intensifier '" + word +
                              "', keeping the last value");
    }
  }

  void add_negation(std::string word) {
    kb_.negations_.insert(std::move(word));
  }

  KnowledgeBase finish() && {
    for (auto& [lemma, table] : kb_.sense_index_) {
      for (auto& refs : table) {
        std::stable_sort(refs.begin(), refs.end(),
                         [](const SenseRef& a, const SenseRef& b) {
                           if (a.sense_rank != b.sense_rank)
                             return a.sense_rank < b.sense_rank;
                           return a.key < b.key;
                         });
      }
    }
    return std::move(kb_);
  }

 private:
  KnowledgeBase kb_;
};

KnowledgeBase load_knowledge_base(DictionarySource lexicon,
                                  DictionarySource intensifiers,
                                  DictionarySource negations) {
  KnowledgeBaseBuilder builder;
  std::string line;

  std::size_t n = 0;
  while (std::getline(lexicon.stream, line)) {
    ++n;
    if (auto synset = parse_lexicon_line(line, n, lexicon.name)) {
      builder.add_synset(std::move(*synset), lexicon.name, n);
    }
  }

  n = 0;
  while (std::getline(intensifiers.stream, line)) {
    ++n;
    const std::string_view text = strip_cr(line);
    if (is_comment_or_blank(text)) continue;
    const auto cols = split(text, ',');
    if (cols.size() != 2) {
      throw LexiconError(intensifiers.name, n, "line",
                         "expected 'word,multiplier'");
    }
    const std::string word = to_lower(trim(cols[0]));
    if (word.empty()) {
      throw LexiconError(intensifiers.name, n, "word", "empty word");
    }
    const std::string_view m = trim(cols[1]);
    double multiplier = 0.0;
    const auto [ptr, ec] = std::from_chars(m.data(), m.data() + m.size(),
                                           multiplier);
    if (m.empty() || ec != std::errc() || ptr != m.data() + m.size() ||
        !(multiplier > 0.0)) {
      throw LexiconError(intensifiers.name, n, "multiplier",
                         "expected a positive number, got '" +
                             std::string(cols[1]) + "'");
    }
    builder.add_intensifier(word, multiplier, intensifiers.name, n);
  }

  n = 0;
  while (std::getline(negations.stream, line)) {
    ++n;
    const std::string_view text = strip_cr(line);
    if (is_comment_or_blank(text)) continue;
    const std::string_view word = trim(text);
    if (word.find_first_of(" \t") != std::string_view::npos) {
      throw LexiconError(negations.name, n, "word",
                         "expected a single token per line");
    }
    builder.add_negation(to_lower(word));
  }

  return std::move(builder).finish();
}

KnowledgeBase load_knowledge_base_files(const std::string& lexicon_path,
                                        const std::string& intensifier_path,
                                        const std::string& negation_path) {
  auto open = [](const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open file: " + path);
    return in;
  };
  std::ifstream lexicon = open(lexicon_path);
  std::istringstream empty;
  std::ifstream intens_file, neg_file;
  if (!intensifier_path.empty()) intens_file = open(intensifier_path);
  if (!negation_path.empty()) neg_file = open(negation_path);
  std::istream& intens = intensifier_path.empty()
                             ? static_cast<std::istream&>(empty)
                             : intens_file;
  std::istringstream empty2;
  std::istream& neg = negation_path.empty()
                          ? static_cast<std::istream&>(empty2)
                          : neg_file;
  return load_knowledge_base({lexicon, lexicon_path},
                             {intens, intensifier_path},
                             {neg, negation_path});
}

std::vector<const Synset*> lookup_senses(const KnowledgeBase& kb,
                                         std::string_view lemma,
                                         std::optional<PosCode> pos) {
  std::vector<const Synset*> out;
  auto append = [&](PosCode p) {
    for (const SenseRef& ref : kb.senses(lemma, p)) {
      if (const Synset* s = kb.find(ref.key)) out.push_back(s);
    }
  };
  if (pos) {
    append(*pos);
  } else {
    for (PosCode p : kPosPriority) append(p);
  }
  return out;
}

}  // namespace lexsent
