#include "lexsent/preprocess.h"

#include <algorithm>
#include <array>

#include "lexsent/text_util.h"

namespace lexsent {

namespace {

bool starts_with_ci(std::string_view s, std::string_view prefix) {
  if (s.size() < prefix.size()) return false;
  for (std::size_t i = 0; i < prefix.size(); ++i) {
    if (ascii_lower(s[i]) != prefix[i]) return false;
  }
  return true;
}

bool is_ascii_punct(char c) {
  const auto u = static_cast<unsigned char>(c);
  return u >= 0x21 && u <= 0x7e && !is_ascii_alpha(c) && !is_ascii_digit(c);
}

// A byte that belongs to a word: ASCII alphanumerics and any non-ASCII
// UTF-8 byte.
bool is_word_byte(char c) {
  return is_ascii_alpha(c) || is_ascii_digit(c) ||
         static_cast<unsigned char>(c) >= 0x80;
}

std::string remove_urls(std::string_view in) {
  std::string out;
  out.reserve(in.size());
  std::size_t i = 0;
  while (i < in.size()) {
    const std::string_view rest = in.substr(i);
    const bool at_word_start = i == 0 || is_space(in[i - 1]);
    if (starts_with_ci(rest, "http://") || starts_with_ci(rest, "https://") ||
        (at_word_start && starts_with_ci(rest, "www."))) {
      while (i < in.size() && !is_space(in[i])) ++i;
      out += ' ';
      continue;
    }
    out += in[i++];
  }
  return out;
}

// <tag ...>, </tag>, <!-- ... --> and <!DOCTYPE ...>.
std::string remove_tags(std::string_view in) {
  std::string out;
  out.reserve(in.size());
  std::size_t i = 0;
  while (i < in.size()) {
    if (in[i] == '<' && i + 1 < in.size()) {
      std::size_t j = i + 1;
      if (in[j] == '/' || in[j] == '!') ++j;
      if (j < in.size() && (is_ascii_alpha(in[j]) || in[j] == '-')) {
        const std::size_t close = in.find_first_of("<>", j);
        if (close != std::string_view::npos && in[close] == '>') {
          out += ' ';
          i = close + 1;
          continue;
        }
      }
    }
    out += in[i++];
  }
  return out;
}

std::string remove_control(std::string_view in) {
  std::string out;
  out.reserve(in.size());
  for (char c : in) {
    const auto u = static_cast<unsigned char>(c);
    if (is_space(c)) {
      out += c;
    } else if (u < 0x20 || u == 0x7f) {
      continue;
    } else {
      out += c;
    }
  }
  return out;
}

std::string collapse_runs(std::string_view in) {
  std::string out;
  out.reserve(in.size());
  std::size_t i = 0;
  while (i < in.size()) {
    std::size_t j = i;
    while (j < in.size() && in[j] == in[i]) ++j;
    const std::size_t run = j - i;
    if (is_ascii_alpha(in[i])) {
      out.append(std::min<std::size_t>(run, 2), in[i]);
    } else if (is_ascii_punct(in[i])) {
      out += in[i];
    } else {
      out.append(run, in[i]);
    }
    i = j;
  }
  return out;
}

std::string normalize_space(std::string_view in) {
  std::string out;
  out.reserve(in.size());
  bool pending = false;
  for (char c : in) {
    if (is_space(c)) {
      pending = !out.empty();
      continue;
    }
    if (pending) out += ' ';
    pending = false;
    out += c;
  }
  return out;
}

std::string clean_once(std::string_view raw) {
  return normalize_space(
      collapse_runs(remove_control(remove_tags(remove_urls(raw)))));
}

bool is_terminator(char c) { return c == '.' || c == '!' || c == '?'; }

// U+2019 RIGHT SINGLE QUOTATION MARK, the usual typographic apostrophe.
constexpr std::string_view kCurlyApostrophe = "\xE2\x80\x99";

std::string normalized_lower(std::string_view surface) {
  std::string lower = to_lower(surface);
  for (std::size_t p = lower.find(kCurlyApostrophe); p != std::string::npos;
       p = lower.find(kCurlyApostrophe, p + 1)) {
    lower.replace(p, kCurlyApostrophe.size(), "'");
  }
  return lower;
}

}  // namespace

std::string clean_text(std::string_view raw) {
  std::string current = clean_once(raw);
  while (true) {
    std::string next = clean_once(current);
    if (next == current) return current;
    current = std::move(next);
  }
}

const std::vector<std::string>& abbreviation_guard() {
  static const std::vector<std::string> kGuard = {
      "mr", "mrs", "dr", "st", "vs", "etc", "e.g", "i.e", "no"};
  return kGuard;
}

std::vector<Sentence> split_sentences(const RawFeedback& feedback) {
  std::vector<Sentence> out;
  const std::string_view text = feedback.text;
  auto emit = [&](std::string_view piece) {
    const std::string_view t = trim(piece);
    if (t.empty()) return;
    out.push_back({feedback.id, out.size(), std::string(t)});
  };

  std::size_t start = 0;
  std::size_t i = 0;
  while (i < text.size()) {
    if (!is_terminator(text[i])) {
      ++i;
      continue;
    }
    std::size_t end = i;
    while (end < text.size() && is_terminator(text[end])) ++end;
    const bool boundary = end == text.size() || is_space(text[end]);
    if (boundary && end - i == 1 && text[i] == '.') {
      std::size_t w = i;
      while (w > start && !is_space(text[w - 1])) --w;
      std::string word = to_lower(text.substr(w, i - w));
      const auto first = word.find_first_not_of("(\"'[");
      word = first == std::string::npos ? "" : word.substr(first);
      const auto& guard = abbreviation_guard();
      if (std::find(guard.begin(), guard.end(), word) != guard.end()) {
        i = end;
        continue;
      }
    }
    if (boundary) {
      emit(text.substr(start, end - start));
      start = end;
    }
    i = end;
  }
  emit(text.substr(start));
  return out;
}

std::vector<Token> tokenize(std::string_view text) {
  std::vector<Token> tokens;
  std::string current;
  auto flush = [&] {
    if (!current.empty()) {
      Token tok;
      tok.lemma = normalized_lower(current);
      tok.surface = std::move(current);
      tok.position = tokens.size();
      tokens.push_back(std::move(tok));
    }
    current.clear();
  };

  std::size_t i = 0;
  while (i < text.size()) {
    const char c = text[i];
    const bool curly = text.substr(i).starts_with(kCurlyApostrophe);
    if (c == '\'' || curly) {
      const std::size_t next = i + (curly ? kCurlyApostrophe.size() : 1);
      const bool internal = !current.empty() && next < text.size() &&
                            is_word_byte(text[next]) &&
                            !text.substr(next).starts_with(kCurlyApostrophe);
      if (internal) {
        current += text.substr(i, next - i);
      } else {
        flush();
      }
      i = next;
      continue;
    }
    if (is_word_byte(c)) {
      current += c;
    } else {
      flush();
    }
    ++i;
  }
  flush();
  return tokens;
}

std::vector<Token> tokenize(const Sentence& sentence) {
  return tokenize(std::string_view(sentence.text));
}

std::string lemmatize_word(std::string_view word, const KnowledgeBase& kb) {
  if (word.empty() || kb.is_indexed(word)) return std::string(word);

  struct Rule {
    std::string_view suffix;
    std::array<std::string_view, 2> replacements;
    std::size_t count;
  };
  static constexpr std::array<Rule, 7> kRules = {{
      {"ies", {"y", ""}, 1},
      {"es", {"", ""}, 1},
      {"s", {"", ""}, 1},
      {"ing", {"", "e"}, 2},
      {"ed", {"", "e"}, 2},
      {"er", {"", ""}, 1},
      {"est", {"", ""}, 1},
  }};

  for (const Rule& rule : kRules) {
    if (word.size() <= rule.suffix.size() || !word.ends_with(rule.suffix)) {
      continue;
    }
    const std::string_view stem = word.substr(0, word.size() - rule.suffix.size());
    for (std::size_t r = 0; r < rule.count; ++r) {
      std::string candidate(stem);
      candidate += rule.replacements[r];
      if (kb.is_indexed(candidate)) return candidate;
    }
  }
  return std::string(word);
}

Token lemmatize(Token token, const KnowledgeBase& kb) {
  token.lemma = lemmatize_word(normalized_lower(token.surface), kb);
  return token;
}

}  // namespace lexsent
