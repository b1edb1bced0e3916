#include "lexsent/knowledge_base.h"

#include <random>
#include <sstream>

#include "gtest/gtest.h"
#include "test_util.h"

namespace lexsent {
namespace {

using testing::kb_from_strings;

constexpr const char* kGoodLine =
    "a\t100\t0.125\t0\tgood#1 decent#2\tmorally admirable";
constexpr const char* kTwoLineLexicon =
    "a\t100\t0.125\t0\tgood#1 decent#2\tmorally admirable\n"
    "n\t200\t0\t0.5\tflop#1\ta complete failure\n";

TEST(ParseLexiconLineTest, ParsesSentiWordNetLine) {
  const auto s = parse_lexicon_line(kGoodLine);
  ASSERT_TRUE(s.has_value());
  EXPECT_EQ(s->key.pos, PosCode::kAdjective);
  EXPECT_EQ(s->key.offset, 100u);
  EXPECT_DOUBLE_EQ(s->pos_score, 0.125);
  EXPECT_DOUBLE_EQ(s->neg_score, 0.0);
  EXPECT_DOUBLE_EQ(s->obj_score, 0.875);
  ASSERT_EQ(s->terms.size(), 2u);
  EXPECT_EQ(s->terms[0], (SynsetTerm{"good", 1}));
  EXPECT_EQ(s->terms[1], (SynsetTerm{"decent", 2}));
  EXPECT_EQ(s->gloss, "morally admirable");
}

TEST(ParseLexiconLineTest, CommentsAndBlankLinesAreSkipped) {
  EXPECT_FALSE(parse_lexicon_line("# comment line").has_value());
  EXPECT_FALSE(parse_lexicon_line("   # indented").has_value());
  EXPECT_FALSE(parse_lexicon_line("").has_value());
  EXPECT_FALSE(parse_lexicon_line("\t\t\t\t#\t").has_value());
}

TEST(ParseLexiconLineTest, ToleratesCarriageReturn) {
  const auto s = parse_lexicon_line(std::string(kGoodLine) + "\r");
  ASSERT_TRUE(s.has_value());
  EXPECT_EQ(s->gloss, "morally admirable");
}

struct BadLine {
  const char* line;
  const char* field;
};

void PrintTo(const BadLine& b, std::ostream* os) { *os << b.field; }

class ParseLexiconErrorTest : public ::testing::TestWithParam<BadLine> {};

TEST_P(ParseLexiconErrorTest, NamesLineAndField) {
  try {
    parse_lexicon_line(GetParam().line, 7, "swn.txt");
    FAIL() << "expected LexiconError for: " << GetParam().line;
  } catch (const LexiconError& e) {
    EXPECT_EQ(e.line(), 7u);
    EXPECT_EQ(e.field(), GetParam().field);
    EXPECT_NE(std::string(e.what()).find("swn.txt:7"), std::string::npos);
  }
}

INSTANTIATE_TEST_SUITE_P(
    Malformed, ParseLexiconErrorTest,
    ::testing::Values(
        BadLine{"a\t100\t0.7\t0.6\tgood#1\tgloss", "NegScore"},
        BadLine{"a\t100\t0.1\t0\tgood#1", "line"},
        BadLine{"a\t100\t0.1\t0\tgood#1\tgloss\textra", "line"},
        BadLine{"x\t100\t0.1\t0\tgood#1\tgloss", "POS"},
        BadLine{"adj\t100\t0.1\t0\tgood#1\tgloss", "POS"},
        BadLine{"a\t-5\t0.1\t0\tgood#1\tgloss", "ID"},
        BadLine{"a\tabc\t0.1\t0\tgood#1\tgloss", "ID"},
        BadLine{"a\t100\thigh\t0\tgood#1\tgloss", "PosScore"},
        BadLine{"a\t100\t1.5\t0\tgood#1\tgloss", "PosScore"},
        BadLine{"a\t100\t0\t-0.1\tgood#1\tgloss", "NegScore"},
        BadLine{"a\t100\t0.1\t0\tgood\tgloss", "SynsetTerms"},
        BadLine{"a\t100\t0.1\t0\tgood#0\tgloss", "SynsetTerms"},
        BadLine{"a\t100\t0.1\t0\tgood#x\tgloss", "SynsetTerms"},
        BadLine{"a\t100\t0.1\t0\t#1\tgloss", "SynsetTerms"},
        BadLine{"a\t100\t0.1\t0\t\tgloss", "SynsetTerms"}),
    [](const ::testing::TestParamInfo<BadLine>& info) {
      return std::string(info.param.field) + "_" +
             std::to_string(info.index);
    });

TEST(ComputeObjScoreTest, Examples) {
  EXPECT_DOUBLE_EQ(compute_obj_score(0.5, 0.25), 0.25);
  EXPECT_DOUBLE_EQ(compute_obj_score(0, 0), 1.0);
  EXPECT_DOUBLE_EQ(compute_obj_score(1, 0), 0.0);
}

TEST(ComputeObjScoreTest, DomainErrors) {
  EXPECT_THROW(compute_obj_score(-0.1, 0), std::domain_error);
  EXPECT_THROW(compute_obj_score(0, 1.1), std::domain_error);
  EXPECT_THROW(compute_obj_score(0.7, 0.6), std::domain_error);
}

TEST(ComputeObjScoreTest, CompletesUnitSumOnRandomPairs) {
  std::mt19937_64 rng(20140101);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int i = 0; i < 10000; ++i) {
    const double p = u(rng);
    const double n = u(rng) * (1.0 - p);
    EXPECT_NEAR(p + n + compute_obj_score(p, n), 1.0, 1e-12);
  }
  // SentiWordNet scores are multiples of 1/8.
  for (int a = 0; a <= 8; ++a) {
    for (int b = 0; a + b <= 8; ++b) {
      const double p = a / 8.0, n = b / 8.0;
      EXPECT_NEAR(p + n + compute_obj_score(p, n), 1.0, 1e-12);
    }
  }
}

TEST(LoadKnowledgeBaseTest, TwoLineFixture) {
  const KnowledgeBase kb = kb_from_strings(kTwoLineLexicon);
  EXPECT_EQ(kb.size(), 2u);
  EXPECT_TRUE(kb.intensifiers().empty());
  EXPECT_TRUE(kb.negations().empty());
  EXPECT_TRUE(kb.warnings().empty());
}

TEST(LoadKnowledgeBaseTest, DuplicateSynsetKeyIsAnError) {
  try {
    kb_from_strings(std::string(kGoodLine) + "\n" + kGoodLine + "\n");
    FAIL();
  } catch (const LexiconError& e) {
    EXPECT_EQ(e.line(), 2u);
    EXPECT_EQ(e.source(), "lexicon");
  }
}

TEST(LoadKnowledgeBaseTest, DuplicateIntensifierKeepsLastAndWarns) {
  const KnowledgeBase kb =
      kb_from_strings(kGoodLine, "very,1.5\n# note\nVery , 2\n", "");
  EXPECT_EQ(kb.intensifier("very"), 2.0);
  ASSERT_EQ(kb.warnings().size(), 1u);
  EXPECT_NE(kb.warnings()[0].find("intensifiers:3"), std::string::npos);
}

TEST(LoadKnowledgeBaseTest, IntensifierErrors) {
  EXPECT_THROW(kb_from_strings(kGoodLine, "very\n"), LexiconError);
  EXPECT_THROW(kb_from_strings(kGoodLine, "very,0\n"), LexiconError);
  EXPECT_THROW(kb_from_strings(kGoodLine, "very,-1\n"), LexiconError);
  EXPECT_THROW(kb_from_strings(kGoodLine, ",1.5\n"), LexiconError);
  EXPECT_THROW(kb_from_strings(kGoodLine, "very,lots\n"), LexiconError);
}

TEST(LoadKnowledgeBaseTest, NegationList) {
  const KnowledgeBase kb =
      kb_from_strings(kGoodLine, "", "# negators\nnot\n\nNever\ndon't\n");
  EXPECT_TRUE(kb.is_negation("not"));
  EXPECT_TRUE(kb.is_negation("never"));
  EXPECT_TRUE(kb.is_negation("don't"));
  EXPECT_FALSE(kb.is_negation("good"));
  EXPECT_THROW(kb_from_strings(kGoodLine, "", "not at all\n"), LexiconError);
}

TEST(LoadKnowledgeBaseTest, LineErrorCarriesSourceAndLine) {
  std::istringstream lex(std::string(kGoodLine) + "\nbroken line\n");
  std::istringstream empty1, empty2;
  try {
    load_knowledge_base({lex, "my.lex"}, {empty1, "i"}, {empty2, "n"});
    FAIL();
  } catch (const LexiconError& e) {
    EXPECT_EQ(e.source(), "my.lex");
    EXPECT_EQ(e.line(), 2u);
  }
}

TEST(LoadKnowledgeBaseTest, MissingFileNamesPath) {
  try {
    load_knowledge_base_files("/nonexistent/swn.txt", "", "");
    FAIL();
  } catch (const std::runtime_error& e) {
    EXPECT_NE(std::string(e.what()).find("/nonexistent/swn.txt"),
              std::string::npos);
  }
}

TEST(LookupSensesTest, Examples) {
  const KnowledgeBase kb = kb_from_strings(kGoodLine);
  const auto good = lookup_senses(kb, "good", PosCode::kAdjective);
  ASSERT_EQ(good.size(), 1u);
  EXPECT_EQ(good[0]->key, (SynsetKey{PosCode::kAdjective, 100}));
  EXPECT_TRUE(lookup_senses(kb, "zzzz", PosCode::kAdjective).empty());
  const auto decent = lookup_senses(kb, "decent", PosCode::kAdjective);
  ASSERT_EQ(decent.size(), 1u);
  EXPECT_EQ(decent[0]->key, (SynsetKey{PosCode::kAdjective, 100}));
  EXPECT_TRUE(lookup_senses(kb, "good", PosCode::kNoun).empty());
}

TEST(LookupSensesTest, OrdersByRankAndWildcardPriority) {
  const KnowledgeBase kb = kb_from_strings(
      "n\t1\t0\t0\tfair#2\ta gathering\n"
      "n\t2\t0\t0\tfair#1\tan exhibition\n"
      "v\t3\t0\t0\tfair#1\tjoin so that the edges are smooth\n"
      "r\t4\t0\t0\tfair#1\tin conformity with the rules\n"
      "a\t5\t0.5\t0\tfair#3\tfree from favoritism\n"
      "a\t6\t0.25\t0\tfair#1\tnot excessive\n");
  const auto nouns = lookup_senses(kb, "fair", PosCode::kNoun);
  ASSERT_EQ(nouns.size(), 2u);
  EXPECT_EQ(nouns[0]->key.offset, 2u);
  EXPECT_EQ(nouns[1]->key.offset, 1u);

  const auto all = lookup_senses(kb, "fair", std::nullopt);
  std::vector<std::uint64_t> offsets;
  for (const Synset* s : all) offsets.push_back(s->key.offset);
  EXPECT_EQ(offsets, (std::vector<std::uint64_t>{6, 5, 4, 3, 2, 1}));
}

TEST(KnowledgeBaseInvariantTest, SenseIndexResolvesToContainingSynset) {
  const KnowledgeBase kb = testing::small_kb();
  for (const auto& [key, synset] : kb.synsets()) {
    for (const SynsetTerm& term : synset.terms) {
      for (const Synset* s : lookup_senses(kb, term.lemma, std::nullopt)) {
        const bool has_lemma =
            std::any_of(s->terms.begin(), s->terms.end(),
                        [&](const SynsetTerm& t) { return t.lemma == term.lemma; });
        EXPECT_TRUE(has_lemma) << term.lemma << " -> " << to_string(s->key);
      }
      for (const SenseRef& ref : kb.senses(term.lemma, key.pos)) {
        const Synset* s = kb.find(ref.key);
        ASSERT_NE(s, nullptr);
        EXPECT_NE(std::find(s->terms.begin(), s->terms.end(),
                            SynsetTerm{term.lemma, ref.sense_rank}),
                  s->terms.end());
      }
    }
  }
}

TEST(KnowledgeBaseInvariantTest, SerializeReparseRoundTrip) {
  const KnowledgeBase kb = testing::small_kb();
  std::string text;
  for (const auto& [key, synset] : kb.synsets()) {
    text += format_lexicon_line(synset) + "\n";
  }
  const KnowledgeBase again = kb_from_strings(text);
  EXPECT_EQ(again.synsets(), kb.synsets());
}

TEST(KnowledgeBaseInvariantTest, RandomSynsetsRoundTrip) {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> eighth(0, 8);
  std::uniform_int_distribution<int> rank(1, 30);
  std::string text;
  for (int i = 0; i < 200; ++i) {
    const int p = eighth(rng);
    const int n = std::uniform_int_distribution<int>(0, 8 - p)(rng);
    Synset s;
    s.key = {kPosPriority[i % 4], static_cast<std::uint64_t>(1000 + i)};
    s.pos_score = p / 8.0;
    s.neg_score = n / 8.0;
    s.obj_score = compute_obj_score(s.pos_score, s.neg_score);
    s.terms = {{"w" + std::to_string(i), rank(rng)},
               {"alt_" + std::to_string(i % 7), rank(rng)}};
    s.gloss = "gloss number " + std::to_string(i) + "; \"quoted\"";
    const auto parsed = parse_lexicon_line(format_lexicon_line(s));
    ASSERT_TRUE(parsed.has_value());
    EXPECT_EQ(*parsed, s);
  }
}

}  // namespace
}  // namespace lexsent
