// lexsent: lexicon-based sentence and feedback sentiment classification.
//
//   lexsent classify --corpus c.jsonl --lexicon swn.txt \
//       --intensifiers int.csv --negations neg.txt > predictions.jsonl
//   lexsent evaluate --predictions predictions.jsonl --gold gold.csv \
//       --level sentence
//   lexsent lexicon-info --lexicon swn.txt

#include <iostream>
#include <map>
#include <string>

#include <CLI11.hpp>

#include "lexsent/commands.h"

int main(int argc, char** argv) {
  using namespace lexsent;

  CLI::App app{"Lexicon-based sentiment classification and evaluation"};
  app.set_config("--config", "", "TOML/INI file with flag defaults");
  app.require_subcommand(1);

  ClassifyOptions classify;
  std::string format = "jsonl";
  std::string aggregate = "sum";
  auto* cls = app.add_subcommand("classify", "Classify a corpus, JSON Lines out");
  cls->add_option("--corpus", classify.corpus_path, "Corpus file")->required();
  cls->add_option("--format", format, "Corpus format")
      ->check(CLI::IsMember({"jsonl", "lines"}));
  cls->add_option("--lexicon", classify.lexicon_path,
                  "SentiWordNet-format lexicon")
      ->required();
  cls->add_option("--intensifiers", classify.intensifier_path,
                  "CSV word,multiplier");
  cls->add_option("--negations", classify.negation_path,
                  "Negation words, one per line");
  cls->add_option("--stopwords", classify.stopword_path,
                  "Replace the built-in WSD stopword list");
  cls->add_option("--tau-subj", classify.pipeline.scoring.subjectivity_threshold,
                  "Subjectivity threshold on max(pos, neg)")
      ->capture_default_str();
  cls->add_option("--epsilon", classify.pipeline.scoring.neutral_band,
                  "Neutral band half-width")
      ->capture_default_str();
  cls->add_option("--neg-window", classify.pipeline.scoring.negation_window,
                  "Negation window in tokens")
      ->capture_default_str();
  cls->add_option("--aggregate", aggregate, "Feedback aggregation")
      ->check(CLI::IsMember({"sum", "majority"}));
  cls->add_flag("--verbose", classify.verbose, "Per-token diagnostics");

  EvaluateOptions evaluate;
  std::string level = "sentence";
  auto* ev = app.add_subcommand("evaluate", "Score predictions against gold labels");
  ev->add_option("--predictions", evaluate.predictions_path,
                 "Output of `classify`")
      ->required();
  ev->add_option("--gold", evaluate.gold_path, "CSV id,level,label")->required();
  ev->add_option("--level", level, "Evaluation level")
      ->check(CLI::IsMember({"sentence", "feedback"}));

  std::string lexicon_path;
  auto* info = app.add_subcommand("lexicon-info", "Summarize a lexicon file");
  info->add_option("--lexicon", lexicon_path, "SentiWordNet-format lexicon")
      ->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitLoadError;
  }

  if (cls->parsed()) {
    classify.format =
        format == "lines" ? CorpusFormat::kLines : CorpusFormat::kJsonLines;
    classify.pipeline.aggregate = *parse_aggregate_strategy(aggregate);
    return cmd_classify(classify, std::cout, std::cerr);
  }
  if (ev->parsed()) {
    evaluate.level = *parse_eval_level(level);
    return cmd_evaluate(evaluate, std::cout, std::cerr);
  }
  return cmd_lexicon_info(lexicon_path, std::cout, std::cerr);
}
