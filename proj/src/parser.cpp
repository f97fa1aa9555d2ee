#include "microq/parser.hpp"

#include <algorithm>

#include "microq/errors.hpp"
#include "microq/tokenizer.hpp"

namespace microq {

namespace {

const TagSet kNoTags;
const TagSet kUserTagTags{"NNP"};
const TagSet kHashTagTags{"NN", "NNP"};
const TagSet kNumeralTags{"CD"};

bool is_sentence_final(const Token& t) {
  return t.kind == TokenKind::Punct &&
         (t.norm == "." || t.norm == "?" || t.norm == "!");
}

// Mid-segment punctuation the question grammar can see: commas (tag
// questions, vocatives) and sentence-final marks. Quotes, asterisks,
// parentheses and the like are noise.
bool is_grammar_punct(const Token& t) {
  return t.norm == "," || is_sentence_final(t);
}

}  // namespace

std::size_t strip_leading_extraneous(std::span<const Token> tokens) {
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    if (tokens[i].is_word_like()) return i;
  }
  return tokens.size();
}

const TagSet& tags_for_token(const Lexicon& lex, const Token& token) {
  switch (token.kind) {
    case TokenKind::Word: return lex.lookup(token.norm);
    case TokenKind::UserTag: return kUserTagTags;
    case TokenKind::HashTag: return kHashTagTags;
    case TokenKind::Numeral: return kNumeralTags;
    default: return kNoTags;
  }
}

std::size_t expansion_cap(std::size_t token_count) { return 4 * token_count + 16; }

namespace {

// One pending alternative: word position plus the symbols left to match.
struct SearchState {
  std::size_t pos;
  std::vector<Symbol> agenda;  // leftmost symbol first
  std::vector<int> trace;
};

// No unconsumed word material may remain; trailing punctuation, emoticons
// and similar non-word tokens do not block completion.
bool covers_span(std::span<const Token> tokens, std::size_t pos) {
  for (std::size_t i = pos; i < tokens.size(); ++i) {
    if (tokens[i].is_word_like()) return false;
  }
  return true;
}

bool matches_terminal(const Lexicon& lex, const Symbol& sym, const Token& token) {
  if (sym.kind == Symbol::Kind::Tag) return tags_for_token(lex, token).contains(sym.text);
  return !token.norm.empty() && token.norm == sym.text;
}

}  // namespace

RecognizeOutcome recognize(const Grammar& g, const Lexicon& lex,
                           std::span<const Token> tokens, const std::string& start) {
  RecognizeOutcome outcome;
  const std::size_t cap = expansion_cap(tokens.size());

  std::vector<SearchState> pending;
  pending.push_back({0, {Symbol{Symbol::Kind::NonTerminal, start}}, {}});

  while (!pending.empty()) {
    SearchState state = std::move(pending.back());
    pending.pop_back();

    // Advance this state until it dies, completes, or branches.
    for (;;) {
      if (state.agenda.empty()) {
        if (covers_span(tokens, state.pos)) {
          outcome.trace = std::move(state.trace);
          return outcome;
        }
        break;  // matched the start symbol but left words unconsumed
      }
      Symbol sym = std::move(state.agenda.front());
      state.agenda.erase(state.agenda.begin());

      if (sym.kind == Symbol::Kind::NonTerminal) {
        if (state.trace.size() >= cap) {
          outcome.depth_exceeded = true;
          break;
        }
        const std::vector<int>& alts = g.expansions_of(sym.text);
        if (alts.empty()) break;
        // Push alternatives in reverse so the first rule is tried first.
        for (auto it = alts.rbegin(); it != alts.rend(); ++it) {
          SearchState branch;
          branch.pos = state.pos;
          const std::vector<Symbol>& rhs = g.rules[*it].rhs;
          branch.agenda.reserve(rhs.size() + state.agenda.size());
          branch.agenda.insert(branch.agenda.end(), rhs.begin(), rhs.end());
          branch.agenda.insert(branch.agenda.end(), state.agenda.begin(), state.agenda.end());
          branch.trace = state.trace;
          branch.trace.push_back(*it);
          pending.push_back(std::move(branch));
        }
        break;  // continue from the stack top
      }

      if (state.pos >= tokens.size() || !matches_terminal(lex, sym, tokens[state.pos])) break;
      ++state.pos;
    }
  }
  return outcome;
}

namespace {

struct Segment {
  std::span<const Token> tokens;
  int index;
};

// Splits at sentence-final punctuation; the boundary token stays with the
// preceding segment. Noise punctuation is dropped along the way.
std::vector<std::vector<Token>> split_segments(std::span<const Token> tokens) {
  std::vector<std::vector<Token>> segments;
  std::vector<Token> current;
  for (const Token& t : tokens) {
    if (t.kind == TokenKind::Punct && !is_grammar_punct(t)) continue;
    current.push_back(t);
    if (is_sentence_final(t)) {
      segments.push_back(std::move(current));
      current.clear();
    }
  }
  if (!current.empty()) segments.push_back(std::move(current));
  return segments;
}

}  // namespace

ParseResult classify_tweet(const Grammar& g, const Lexicon& lex, const TokenizedTweet& tweet) {
  ParseResult result;
  std::span<const Token> tokens(tweet.tokens);
  tokens = tokens.subspan(strip_leading_extraneous(tokens));

  std::vector<std::vector<Token>> segments = split_segments(tokens);
  for (std::size_t seg = 0; seg < segments.size(); ++seg) {
    std::span<const Token> span(segments[seg]);
    // Within a segment, leading non-word tokens are extraneous as well.
    span = span.subspan(strip_leading_extraneous(span));
    if (span.empty()) continue;

    for (QuestionType qt : kQuestionTypes) {
      RecognizeOutcome outcome = recognize(g, lex, span, g.start_symbols.at(qt));
      result.depth_exceeded = result.depth_exceeded || outcome.depth_exceeded;
      if (outcome.trace) {
        result.is_question = true;
        result.question_type = qt;
        result.rule_trace = std::move(*outcome.trace);
        result.segment_index = static_cast<int>(seg);
        return result;
      }
    }
  }
  return result;
}

ParseResult classify_text(const Grammar& g, const Lexicon& lex, const std::string& text) {
  try {
    return classify_tweet(g, lex, tokenize(text));
  } catch (const EmptyInput&) {
    return ParseResult{};
  }
}

}  // namespace microq
