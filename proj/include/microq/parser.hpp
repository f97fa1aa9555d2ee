#ifndef MICROQ_PARSER_HPP
#define MICROQ_PARSER_HPP

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "microq/grammar.hpp"
#include "microq/lexicon.hpp"
#include "microq/token.hpp"

namespace microq {

// Index of the first WORD or NUMERAL token; token count when there is none.
// Everything before it (user names, hash tags, URLs, emoticons, punctuation)
// is extraneous to the syntax.
std::size_t strip_leading_extraneous(std::span<const Token> tokens);

// Tag set a grammar Tag symbol is matched against. WORDs go through the
// lexicon; USERTAG acts as a proper noun, HASHTAG as noun material, NUMERAL
// as a cardinal. URL/EMOTICON/PUNCT tokens carry no tags.
const TagSet& tags_for_token(const Lexicon& lex, const Token& token);

// Expansion-depth cap for a segment of n tokens; guards against pathological
// grammars without ever binding on the seed grammar.
std::size_t expansion_cap(std::size_t token_count);

struct RecognizeOutcome {
  // Indices into Grammar::rules of the first complete derivation, in
  // application order; nullopt when no derivation covers the span.
  std::optional<std::vector<int>> trace;
  // Some search path was abandoned at the expansion cap. Reported as a
  // diagnostic; the outcome is still a plain non-match.
  bool depth_exceeded = false;
};

// Top-down depth-first recognition of `tokens` from `start`. Rule order is
// expansion priority; expansion is leftmost. A Tag symbol matches a token
// whose tag set contains it, a Literal matches by norm equality. A
// derivation is complete when no WORD/NUMERAL token remains unconsumed.
RecognizeOutcome recognize(const Grammar& g, const Lexicon& lex,
                           std::span<const Token> tokens, const std::string& start);

struct ParseResult {
  bool is_question = false;
  std::optional<QuestionType> question_type;
  std::vector<int> rule_trace;   // nonempty iff is_question
  int segment_index = -1;        // which sentence segment matched
  bool depth_exceeded = false;   // diagnostic from any segment
};

// Splits the token stream into segments at sentence-final punctuation and
// tries the question types in order WH, AUX_INITIAL, BE_INITIAL, TAG on each
// segment; the first match decides the verdict.
ParseResult classify_tweet(const Grammar& g, const Lexicon& lex, const TokenizedTweet& tweet);

// tokenize + classify_tweet; empty or whitespace-only text is not a question.
ParseResult classify_text(const Grammar& g, const Lexicon& lex, const std::string& text);

}  // namespace microq

#endif  // MICROQ_PARSER_HPP
