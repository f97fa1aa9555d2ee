#include "microq/tokenizer.hpp"

#include <algorithm>
#include <cctype>

#include "microq/errors.hpp"

namespace microq {

namespace {

inline bool is_ascii_space(unsigned char c) { return std::isspace(c) != 0; }
inline bool is_ascii_digit(unsigned char c) { return std::isdigit(c) != 0; }
inline bool is_ascii_alpha(unsigned char c) { return std::isalpha(c) != 0; }

// Word characters: letters, digits, apostrophes. Bytes >= 0x80 (multi-byte
// UTF-8) are treated as letters.
inline bool is_word_char(unsigned char c) {
  return is_ascii_alpha(c) || is_ascii_digit(c) || c == '\'' || c >= 0x80;
}

// Characters allowed in an @handle.
inline bool is_handle_char(unsigned char c) {
  return is_ascii_alpha(c) || is_ascii_digit(c) || c == '_';
}

// Characters consumed after '#' in a hashtag.
inline bool is_hashtag_char(unsigned char c) {
  return is_ascii_alpha(c) || is_ascii_digit(c) || c == '_' || c >= 0x80;
}

inline bool is_end_punct(char c) { return c == '.' || c == '?' || c == '!'; }

// Number of bytes in the UTF-8 sequence starting at s[pos].
std::size_t cp_len(std::string_view s, std::size_t pos) {
  unsigned char c = static_cast<unsigned char>(s[pos]);
  std::size_t n = 1;
  if (c >= 0xF0)
    n = 4;
  else if (c >= 0xE0)
    n = 3;
  else if (c >= 0xC0)
    n = 2;
  return std::min(n, s.size() - pos);
}

bool ci_prefix(std::string_view s, std::size_t pos, std::string_view prefix) {
  if (s.size() - pos < prefix.size()) return false;
  for (std::size_t i = 0; i < prefix.size(); ++i) {
    if (std::tolower(static_cast<unsigned char>(s[pos + i])) != prefix[i]) return false;
  }
  return true;
}

bool url_at(std::string_view s, std::size_t pos) {
  return ci_prefix(s, pos, "http://") || ci_prefix(s, pos, "https://") ||
         ci_prefix(s, pos, "www.");
}

// Emoticon alphabet. The face model is eyes + optional nose + mouth, in
// either direction, plus a few non-face symbols.
constexpr std::string_view kEyes = ":;=";
constexpr std::string_view kNose = "-=";
constexpr std::string_view kMouth = ")(DPpSs0OoL/\\[]>|";
constexpr std::string_view kSymbols[] = {"<3"};

inline bool in(std::string_view set, char c) { return set.find(c) != std::string_view::npos; }

}  // namespace

std::string_view kind_name(TokenKind kind) {
  switch (kind) {
    case TokenKind::Word: return "WORD";
    case TokenKind::UserTag: return "USERTAG";
    case TokenKind::HashTag: return "HASHTAG";
    case TokenKind::Url: return "URL";
    case TokenKind::Emoticon: return "EMOTICON";
    case TokenKind::Numeral: return "NUMERAL";
    case TokenKind::Punct: return "PUNCT";
  }
  return "?";
}

std::string normalize_word(std::string_view word) {
  std::string out;
  out.reserve(word.size());
  std::size_t prev_begin = std::string::npos;  // offset of previous codepoint in out
  std::size_t pos = 0;
  while (pos < word.size()) {
    std::size_t n = cp_len(word, pos);
    if (n == 1) {
      char c = static_cast<char>(std::tolower(static_cast<unsigned char>(word[pos])));
      ++pos;
      if (c == '\'') continue;
      if (prev_begin != std::string::npos && out.size() - prev_begin == 1 &&
          out[prev_begin] == c) {
        continue;  // adjacent duplicate
      }
      prev_begin = out.size();
      out.push_back(c);
    } else {
      std::string_view cp = word.substr(pos, n);
      pos += n;
      if (prev_begin != std::string::npos &&
          std::string_view(out).substr(prev_begin) == cp) {
        continue;
      }
      prev_begin = out.size();
      out.append(cp);
    }
  }
  return out;
}

CollapsedRun collapse_punct_run(std::string_view run) {
  char token = '.';
  if (run.find('?') != std::string_view::npos)
    token = '?';
  else if (run.find('!') != std::string_view::npos)
    token = '!';
  return {token, run.size() > 1};
}

std::optional<std::size_t> scan_emoticon(std::string_view text, std::size_t pos) {
  std::size_t best = 0;
  auto consider = [&](std::size_t len) { best = std::max(best, len); };

  for (std::string_view sym : kSymbols) {
    if (text.substr(pos, sym.size()) == sym) consider(sym.size());
  }
  if (pos < text.size()) {
    char a = text[pos];
    // forward face: eyes [nose] mouth
    if (in(kEyes, a)) {
      if (pos + 1 < text.size() && in(kMouth, text[pos + 1])) consider(2);
      if (pos + 2 < text.size() && in(kNose, text[pos + 1]) && in(kMouth, text[pos + 2]))
        consider(3);
    }
    // reversed face: mouth [nose] eyes
    if (in(kMouth, a)) {
      if (pos + 1 < text.size() && in(kEyes, text[pos + 1])) consider(2);
      if (pos + 2 < text.size() && in(kNose, text[pos + 1]) && in(kEyes, text[pos + 2]))
        consider(3);
    }
  }
  if (best == 0) return std::nullopt;
  return best;
}

namespace {

// True if the raw text contains an adjacent pair of end-punctuation
// characters anywhere, including inside URLs.
bool has_repeated_end_punct(std::string_view raw) {
  for (std::size_t i = 0; i + 1 < raw.size(); ++i) {
    if (is_end_punct(raw[i]) && is_end_punct(raw[i + 1])) return true;
  }
  return false;
}

}  // namespace

TokenizedTweet tokenize(std::string_view raw) {
  bool all_space = std::all_of(raw.begin(), raw.end(),
                               [](char c) { return is_ascii_space(static_cast<unsigned char>(c)); });
  if (raw.empty() || all_space) throw EmptyInput();

  TokenizedTweet tweet;
  tweet.raw.assign(raw);
  tweet.repeated_punct = has_repeated_end_punct(raw);

  const std::size_t n = raw.size();
  std::size_t pos = 0;
  auto emit = [&](std::size_t begin, std::size_t end, TokenKind kind, std::string norm) {
    tweet.tokens.push_back(
        {std::string(raw.substr(begin, end - begin)), std::move(norm), kind, begin, end});
  };

  while (pos < n) {
    unsigned char c = static_cast<unsigned char>(raw[pos]);
    if (is_ascii_space(c)) {
      ++pos;
      continue;
    }
    std::size_t start = pos;

    if (url_at(raw, pos)) {
      while (pos < n && !is_ascii_space(static_cast<unsigned char>(raw[pos]))) ++pos;
      emit(start, pos, TokenKind::Url, "");
      continue;
    }
    if (auto len = scan_emoticon(raw, pos)) {
      pos += *len;
      emit(start, pos, TokenKind::Emoticon, "");
      continue;
    }
    if (c == '@') {
      if (pos + 1 < n && is_handle_char(static_cast<unsigned char>(raw[pos + 1]))) {
        ++pos;
        while (pos < n && is_handle_char(static_cast<unsigned char>(raw[pos]))) ++pos;
        emit(start, pos, TokenKind::UserTag,
             normalize_word(raw.substr(start + 1, pos - start - 1)));
      } else {
        // '@' used as shorthand for the word "at"
        ++pos;
        emit(start, pos, TokenKind::Word, "at");
      }
      continue;
    }
    if (c == '#' && pos + 1 < n) {
      unsigned char next = static_cast<unsigned char>(raw[pos + 1]);
      if (is_ascii_digit(next)) {
        ++pos;
        while (pos < n && is_ascii_digit(static_cast<unsigned char>(raw[pos]))) ++pos;
        emit(start, pos, TokenKind::Numeral, std::string(raw.substr(start + 1, pos - start - 1)));
        continue;
      }
      if (is_ascii_alpha(next) || next >= 0x80) {
        ++pos;
        while (pos < n && is_hashtag_char(static_cast<unsigned char>(raw[pos]))) ++pos;
        emit(start, pos, TokenKind::HashTag,
             normalize_word(raw.substr(start + 1, pos - start - 1)));
        continue;
      }
      // lone '#': fall through to punctuation
    }
    if (is_end_punct(static_cast<char>(c))) {
      while (pos < n && is_end_punct(raw[pos])) ++pos;
      CollapsedRun run = collapse_punct_run(raw.substr(start, pos - start));
      emit(start, pos, TokenKind::Punct, std::string(1, run.token));
      continue;
    }
    if (is_word_char(c)) {
      while (pos < n && is_word_char(static_cast<unsigned char>(raw[pos]))) ++pos;
      std::string_view run = raw.substr(start, pos - start);
      bool all_digits = std::all_of(run.begin(), run.end(), [](char ch) {
        return is_ascii_digit(static_cast<unsigned char>(ch));
      });
      bool all_apostrophes = std::all_of(run.begin(), run.end(),
                                         [](char ch) { return ch == '\''; });
      if (all_digits) {
        emit(start, pos, TokenKind::Numeral, std::string(run));
      } else if (all_apostrophes) {
        // a quote run, not a word: one PUNCT per character
        for (std::size_t i = start; i < pos; ++i)
          emit(i, i + 1, TokenKind::Punct, "'");
      } else {
        emit(start, pos, TokenKind::Word, normalize_word(run));
      }
      continue;
    }
    // everything else (including apostrophe runs): one PUNCT per character
    pos += cp_len(raw, pos);
    emit(start, pos, TokenKind::Punct, std::string(raw.substr(start, pos - start)));
  }
  return tweet;
}

}  // namespace microq
