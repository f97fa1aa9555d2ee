#ifndef MICROQ_TOKENIZER_HPP
#define MICROQ_TOKENIZER_HPP

#include <optional>
#include <string>
#include <string_view>

#include "microq/token.hpp"

namespace microq {

// Lowercases, deletes apostrophes, then collapses every run of an identical
// character (at codepoint granularity) to a single instance.
// "pleaaaaaase" -> "please", "we're" -> "were". Idempotent.
std::string normalize_word(std::string_view word);

struct CollapsedRun {
  char token;     // the single surviving character
  bool repeated;  // run length was >= 2
};

// Collapses a maximal run of end punctuation ('.', '?', '!') to one
// character. Mixed runs keep '?' over '!' over '.' so the question signal
// survives.
CollapsedRun collapse_punct_run(std::string_view run);

// Attempts to recognize an emoticon starting at `pos`. Returns its length in
// bytes (longest match) or nullopt. Accepts forward faces (eyes, optional
// nose, mouth), reversed faces (mouth first), and non-face symbols such as
// "<3". The eye/nose/mouth alphabets are data; see tokenizer.cpp.
std::optional<std::size_t> scan_emoticon(std::string_view text, std::size_t pos);

// Splits a raw tweet into tokens in a single left-to-right pass, applying
// the Twitter-specific rules: URL / emoticon recognition, '@' and '#'
// disambiguation, end-punctuation collapsing, word normalization.
// Throws EmptyInput on empty or whitespace-only input.
TokenizedTweet tokenize(std::string_view raw);

}  // namespace microq

#endif  // MICROQ_TOKENIZER_HPP
