#include "lexsent/commands.h"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <set>
#include <unordered_set>

#include <json.hpp>

#include "lexsent/text_util.h"

namespace lexsent {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

std::string quote(std::string_view s) {
  return json(std::string(s)).dump(-1, ' ', false,
                                   json::error_handler_t::replace);
}

std::string bool_str(bool b) { return b ? "true" : "false"; }

std::ifstream open_or_throw(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open file: " + path);
  return in;
}

struct Predictions {
  std::map<std::string, Polarity> feedback;
  std::map<std::string, Polarity> sentence;
};

Predictions read_predictions(std::istream& in, const std::string& source) {
  Predictions p;
  std::string line;
  std::size_t n = 0;
  auto fail = [&](const std::string& what) {
    throw std::runtime_error(source + ":" + std::to_string(n) + ": " + what);
  };
  while (std::getline(in, line)) {
    ++n;
    if (trim(line).empty()) continue;
    json obj;
    try {
      obj = json::parse(line);
    } catch (const json::parse_error& e) {
      fail(std::string("invalid JSON: ") + e.what());
    }
    if (!obj.is_object() || !obj.contains("id") || !obj["id"].is_string() ||
        !obj.contains("polarity") || !obj["polarity"].is_string()) {
      fail("expected an object with string 'id' and 'polarity'");
    }
    const std::string id = obj["id"].get<std::string>();
    const auto pol = parse_polarity(obj["polarity"].get<std::string>());
    if (!pol) fail("unknown polarity");
    p.feedback[id] = *pol;
    if (obj.contains("sentences")) {
      for (const json& s : obj["sentences"]) {
        if (!s.contains("index") || !s["index"].is_number_unsigned() ||
            !s.contains("polarity") || !s["polarity"].is_string()) {
          fail("sentence records need 'index' and 'polarity'");
        }
        const auto sp = parse_polarity(s["polarity"].get<std::string>());
        if (!sp) fail("unknown sentence polarity");
        p.sentence[id + "#" + std::to_string(s["index"].get<std::size_t>())] =
            *sp;
      }
    }
  }
  return p;
}

ordered_json metrics_json(const ConfusionMatrix& m) {
  ordered_json j;
  ordered_json labels = ordered_json::array();
  for (Polarity p : kPolarities) labels.push_back(std::string(to_string(p)));

  ordered_json counts = ordered_json::array();
  ordered_json row_totals = ordered_json::array();
  ordered_json col_totals = ordered_json::array();
  for (Polarity s : kPolarities) {
    ordered_json row = ordered_json::array();
    for (Polarity a : kPolarities) row.push_back(m.cell(s, a));
    counts.push_back(row);
    row_totals.push_back(m.row_total(s));
    col_totals.push_back(m.col_total(s));
  }
  j["matrix"] = {{"labels", labels},
                 {"rows", "system"},
                 {"columns", "actual"},
                 {"counts", counts},
                 {"row_totals", row_totals},
                 {"col_totals", col_totals},
                 {"total", m.total()}};
  const double acc = accuracy(m);
  j["accuracy"] = acc;
  j["accuracy_display"] = format_rounded(acc, 2);

  const auto per_class = per_class_metrics(m);
  ordered_json pc;
  for (Polarity p : kPolarities) {
    const ClassMetrics& c = per_class[ConfusionMatrix::index(p)];
    pc[std::string(to_string(p))] = {
        {"precision", c.precision},
        {"recall", c.recall},
        {"f1", c.f1},
        {"precision_undefined", c.precision_undefined},
        {"recall_undefined", c.recall_undefined},
        {"f1_undefined", c.f1_undefined}};
  }
  j["per_class"] = pc;
  return j;
}

}  // namespace

std::vector<RawFeedback> read_corpus(std::istream& in, CorpusFormat format,
                                     const std::string& source) {
  std::vector<RawFeedback> corpus;
  std::unordered_set<std::string> ids;
  std::string line;
  std::size_t n = 0;
  while (std::getline(in, line)) {
    ++n;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (trim(line).empty()) continue;
    RawFeedback f;
    if (format == CorpusFormat::kLines) {
      f.id = std::to_string(n);
      f.text = line;
    } else {
      json obj;
      try {
        obj = json::parse(line);
      } catch (const json::parse_error& e) {
        throw std::runtime_error(source + ":" + std::to_string(n) +
                                 ": invalid JSON: " + e.what());
      }
      if (!obj.is_object() || !obj.contains("id") || !obj.contains("text") ||
          !obj["text"].is_string() ||
          !(obj["id"].is_string() || obj["id"].is_number_integer())) {
        throw std::runtime_error(source + ":" + std::to_string(n) +
                                 ": expected {\"id\": ..., \"text\": ...}");
      }
      f.id = obj["id"].is_string() ? obj["id"].get<std::string>()
                                   : obj["id"].dump();
      f.text = obj["text"].get<std::string>();
    }
    if (f.id.empty()) {
      throw std::runtime_error(source + ":" + std::to_string(n) +
                               ": empty feedback id");
    }
    if (!ids.insert(f.id).second) {
      throw std::runtime_error(source + ":" + std::to_string(n) +
                               ": duplicate feedback id '" + f.id + "'");
    }
    corpus.push_back(std::move(f));
  }
  return corpus;
}

std::string format_score(double value) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.4f", value);
  std::string s = buf;
  if (s == "-0.0000") s = "0.0000";
  return s;
}

std::string feedback_to_json(const FeedbackResult& result, bool verbose) {
  std::string o;
  o += "{\"id\":" + quote(result.feedback_id);
  o += ",\"polarity\":" + quote(to_string(result.polarity));
  o += ",\"feedback_score\":" + format_score(result.feedback_score);
  o += ",\"subjective_sentences\":" + std::to_string(result.subjective_count);
  o += ",\"objective_sentences\":" + std::to_string(result.objective_count);
  o += ",\"sentences\":[";
  for (std::size_t i = 0; i < result.sentences.size(); ++i) {
    const SentenceAnalysis& s = result.sentences[i];
    if (i > 0) o += ',';
    o += "{\"index\":" + std::to_string(s.sentence.index);
    o += ",\"text\":" + quote(s.sentence.text);
    o += ",\"subjective\":" + bool_str(s.subjective);
    o += ",\"raw_score\":" + format_score(s.raw_score);
    o += ",\"polarity\":" + quote(to_string(s.polarity));
    if (verbose) {
      o += ",\"tokens\":[";
      for (std::size_t k = 0; k < s.tagged.size(); ++k) {
        const TaggedToken& t = s.tagged[k];
        if (k > 0) o += ',';
        o += "{\"surface\":" + quote(t.token.surface);
        o += ",\"lemma\":" + quote(t.token.lemma);
        o += ",\"pos\":" + quote(to_string(t.pos));
        o += ",\"synset\":" +
             (t.synset ? quote(to_string(t.synset->key)) : std::string("null"));
        o += ",\"signed_score\":" + format_score(t.signed_score);
        o += ",\"multiplier\":" + format_score(t.multiplier);
        o += ",\"negated\":" + bool_str(t.negated) + "}";
      }
      o += "]";
    }
    o += "}";
  }
  o += "]}";
  return o;
}

int cmd_classify(const ClassifyOptions& options, std::ostream& out,
                 std::ostream& err) {
  std::vector<RawFeedback> corpus;
  KnowledgeBase kb;
  StopwordList stopwords;
  try {
    kb = load_knowledge_base_files(options.lexicon_path,
                                   options.intensifier_path,
                                   options.negation_path);
    if (!options.stopword_path.empty()) {
      stopwords = StopwordList::from_file(options.stopword_path);
    }
    std::ifstream in = open_or_throw(options.corpus_path);
    corpus = read_corpus(in, options.format, options.corpus_path);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitLoadError;
  }
  for (const std::string& w : kb.warnings()) err << "warning: " << w << "\n";

  if (corpus.empty()) {
    err << "error: corpus is empty: " << options.corpus_path << "\n";
    return kExitEmptyInput;
  }

  const Classifier classifier(kb, options.pipeline, stopwords);
  for (const FeedbackResult& r : classifier.classify_all(corpus)) {
    out << feedback_to_json(r, options.verbose) << "\n";
  }
  return kExitOk;
}

int cmd_evaluate(const EvaluateOptions& options, std::ostream& out,
                 std::ostream& err) {
  Predictions predictions;
  std::vector<GoldLabel> gold;
  try {
    std::ifstream pin = open_or_throw(options.predictions_path);
    predictions = read_predictions(pin, options.predictions_path);
    std::ifstream gin = open_or_throw(options.gold_path);
    gold = read_gold_labels(gin, options.gold_path);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitLoadError;
  }

  const auto& predicted = options.level == EvalLevel::kFeedback
                              ? predictions.feedback
                              : predictions.sentence;
  std::vector<LabelPair> pairs;
  std::set<std::string> gold_ids;
  ordered_json unmatched_gold = ordered_json::array();
  for (const GoldLabel& g : gold) {
    if (g.level != options.level) continue;
    gold_ids.insert(g.id);
    const auto it = predicted.find(g.id);
    if (it == predicted.end()) {
      unmatched_gold.push_back(g.id);
      continue;
    }
    pairs.emplace_back(it->second, g.label);
  }
  ordered_json unmatched_pred = ordered_json::array();
  for (const auto& [id, _] : predicted) {
    if (!gold_ids.contains(id)) unmatched_pred.push_back(id);
  }

  const std::size_t unmatched = unmatched_gold.size() + unmatched_pred.size();
  if (unmatched > 0) {
    err << "warning: " << unmatched
        << " unmatched id(s) excluded from evaluation\n";
  }
  if (pairs.empty()) {
    err << "error: no ids shared between predictions and gold labels at "
        << to_string(options.level) << " level\n";
    return kExitEmptyInput;
  }

  ordered_json j;
  j["level"] = std::string(to_string(options.level));
  j["matched"] = pairs.size();
  j["unmatched_gold"] = unmatched_gold;
  j["unmatched_predictions"] = unmatched_pred;
  const ordered_json metrics = metrics_json(confusion_matrix(pairs));
  for (const auto& [key, value] : metrics.items()) j[key] = value;
  out << j.dump(2) << "\n";
  return kExitOk;
}

int cmd_lexicon_info(const std::string& lexicon_path, std::ostream& out,
                     std::ostream& err) {
  KnowledgeBase kb;
  try {
    kb = load_knowledge_base_files(lexicon_path, "", "");
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitLoadError;
  }

  std::map<char, std::size_t> per_pos;
  for (PosCode p : kPosPriority) per_pos[pos_code_char(p)] = 0;
  std::array<std::size_t, 10> pos_hist{}, neg_hist{};
  std::size_t violations = 0;
  auto bin = [](double score) {
    const auto b = static_cast<std::size_t>(std::floor(score * 10.0 + 1e-9));
    return std::min<std::size_t>(b, 9);
  };
  for (const auto& [key, s] : kb.synsets()) {
    ++per_pos[pos_code_char(key.pos)];
    ++pos_hist[bin(s.pos_score)];
    ++neg_hist[bin(s.neg_score)];
    if (std::abs(s.pos_score + s.neg_score + s.obj_score - 1.0) >
        kScoreSumTolerance) {
      ++violations;
    }
  }

  ordered_json j;
  j["lexicon"] = lexicon_path;
  j["synsets"] = kb.size();
  ordered_json pos_counts;
  for (PosCode p : kPosPriority) {
    pos_counts[std::string(1, pos_code_char(p))] = per_pos[pos_code_char(p)];
  }
  j["per_pos"] = pos_counts;
  j["histogram_bins"] =
      "10 equal-width bins over [0,1]; the last bin includes 1.0";
  j["pos_score_histogram"] = pos_hist;
  j["neg_score_histogram"] = neg_hist;
  j["score_sum_tolerance"] = kScoreSumTolerance;
  j["score_sum_violations"] = violations;
  j["score_sum_valid"] = violations == 0;
  out << j.dump(2) << "\n";
  return kExitOk;
}

}  // namespace lexsent
