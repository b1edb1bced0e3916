#include "lexsent/eval.h"

#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "lexsent/text_util.h"

namespace lexsent {

std::uint64_t ConfusionMatrix::row_total(Polarity system) const {
  const auto& row = counts_[index(system)];
  return row[0] + row[1] + row[2];
}

std::uint64_t ConfusionMatrix::col_total(Polarity actual) const {
  const std::size_t c = index(actual);
  return counts_[0][c] + counts_[1][c] + counts_[2][c];
}

std::uint64_t ConfusionMatrix::total() const {
  std::uint64_t sum = 0;
  for (const auto& row : counts_)
    for (std::uint64_t v : row) sum += v;
  return sum;
}

std::uint64_t ConfusionMatrix::trace() const {
  return counts_[0][0] + counts_[1][1] + counts_[2][2];
}

ConfusionMatrix confusion_matrix(std::span<const LabelPair> pairs) {
  if (pairs.empty()) {
    throw std::invalid_argument("confusion matrix needs at least one pair");
  }
  ConfusionMatrix m;
  for (const auto& [system, actual] : pairs) m.add(system, actual);
  return m;
}

double accuracy(const ConfusionMatrix& m) {
  const std::uint64_t total = m.total();
  if (total == 0) throw std::invalid_argument("empty confusion matrix");
  return static_cast<double>(m.trace()) / static_cast<double>(total);
}

std::array<ClassMetrics, 3> per_class_metrics(const ConfusionMatrix& m) {
  std::array<ClassMetrics, 3> out{};
  for (Polarity label : kPolarities) {
    ClassMetrics& cm = out[ConfusionMatrix::index(label)];
    const double hit = static_cast<double>(m.cell(label, label));
    const std::uint64_t row = m.row_total(label);
    const std::uint64_t col = m.col_total(label);
    cm.precision_undefined = row == 0;
    cm.recall_undefined = col == 0;
    cm.precision = row == 0 ? 0.0 : hit / static_cast<double>(row);
    cm.recall = col == 0 ? 0.0 : hit / static_cast<double>(col);
    const double denom = cm.precision + cm.recall;
    cm.f1_undefined = denom == 0.0;
    cm.f1 = denom == 0.0 ? 0.0 : 2.0 * cm.precision * cm.recall / denom;
  }
  return out;
}

std::string format_rounded(double value, int decimals) {
  const double scale = std::pow(10.0, decimals);
  const double rounded = std::floor(value * scale + 0.5) / scale;
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", decimals, rounded);
  return buf;
}

SubjectivityStats subjectivity_stats(std::uint64_t subjective,
                                     std::uint64_t objective) {
  const std::uint64_t total = subjective + objective;
  if (total == 0) {
    throw std::invalid_argument("subjectivity statistics need sentences");
  }
  // Integer round-half-up of 100 * s / total.
  const std::uint64_t s = (200 * subjective + total) / (2 * total);
  return {subjective, objective,
          std::to_string(s) + "/" + std::to_string(100 - s)};
}

SubjectivityStats subjectivity_stats(
    std::span<const SentenceAnalysis> analyses) {
  if (analyses.empty()) {
    throw std::invalid_argument("subjectivity statistics need sentences");
  }
  std::uint64_t subjective = 0;
  for (const auto& a : analyses) subjective += a.subjective ? 1 : 0;
  return subjectivity_stats(subjective, analyses.size() - subjective);
}

std::string_view to_string(EvalLevel level) {
  return level == EvalLevel::kSentence ? "sentence" : "feedback";
}

std::optional<EvalLevel> parse_eval_level(std::string_view text) {
  const std::string t = to_lower(trim(text));
  if (t == "sentence") return EvalLevel::kSentence;
  if (t == "feedback") return EvalLevel::kFeedback;
  return std::nullopt;
}

std::vector<GoldLabel> read_gold_labels(std::istream& in,
                                        const std::string& source) {
  std::vector<GoldLabel> out;
  std::string line;
  std::size_t n = 0;
  while (std::getline(in, line)) {
    ++n;
    const std::string_view t = trim(line);
    if (t.empty() || t.front() == '#') continue;
    if (n == 1 && to_lower(t) == "id,level,label") continue;

    // The id may itself contain commas, so split on the last two.
    const std::size_t c2 = t.rfind(',');
    const std::size_t c1 =
        c2 == std::string_view::npos || c2 == 0 ? std::string_view::npos
                                                : t.rfind(',', c2 - 1);
    if (c1 == std::string_view::npos) {
      throw std::runtime_error(source + ":" + std::to_string(n) +
                               ": expected 'id,level,label'");
    }
    GoldLabel g;
    g.id = std::string(trim(t.substr(0, c1)));
    const auto level = parse_eval_level(t.substr(c1 + 1, c2 - c1 - 1));
    const auto label = parse_polarity(t.substr(c2 + 1));
    if (g.id.empty() || !level || !label) {
      throw std::runtime_error(source + ":" + std::to_string(n) +
                               ": bad gold row '" + std::string(t) + "'");
    }
    g.level = *level;
    g.label = *label;
    out.push_back(std::move(g));
  }
  return out;
}

}  // namespace lexsent
