#ifndef MICROQ_TESTS_TESTUTIL_HPP
#define MICROQ_TESTS_TESTUTIL_HPP

#include <random>
#include <span>
#include <string>
#include <vector>

#include "microq/corpus.hpp"
#include "microq/grammar.hpp"
#include "microq/lexicon.hpp"
#include "microq/parser.hpp"
#include "microq/tokenizer.hpp"

namespace microq::testutil {

inline std::string data_path(const std::string& rel) {
  return std::string(MICROQ_DATA_DIR) + "/" + rel;
}

inline const Lexicon& seed_lexicon() {
  static const Lexicon lex = build_lexicon(read_lines(data_path("lexicon/base.tsv")),
                                           read_lines(data_path("lexicon/twitter.tsv")),
                                           read_lines(data_path("lexicon/names.txt")));
  return lex;
}

inline const Grammar& seed_grammar() {
  static const Grammar g = parse_rule_file(read_lines(data_path("grammar/questions.grm")));
  return g;
}

inline std::vector<LabeledTweet> seed_corpus() {
  return read_corpus(read_lines(data_path("corpus/mini.tsv")));
}

// ---------------------------------------------------------------------------
// Random grammars and sentences for the parser-vs-oracle property.

struct RandomInstance {
  std::vector<std::string> grammar_lines;
  std::vector<std::string> lexicon_lines;
  std::vector<std::string> sentences;
};

// Words that are fixed points of normalize_word.
inline const std::vector<std::string>& oracle_words() {
  static const std::vector<std::string> words = {"ba", "do", "mi", "ka",
                                                 "zu", "re", "po", "na"};
  return words;
}

// Builds a left-recursion-free grammar of at most `max_rules` rules over a
// small lexicon, plus random sentences. Nonterminals are ordered N0..Nk and
// a leftmost nonterminal always has a strictly larger index, which rules out
// leftmost cycles by construction.
inline RandomInstance random_instance(std::mt19937& rng, int max_rules = 15,
                                      int max_sentence_len = 6) {
  static const std::vector<std::string> tags = {"TA", "TB", "TC"};
  std::uniform_int_distribution<int> coin(0, 1);

  RandomInstance inst;
  int word_count = std::uniform_int_distribution<int>(2, 8)(rng);
  std::vector<std::string> words(oracle_words().begin(),
                                 oracle_words().begin() + word_count);
  for (const auto& w : words) {
    std::string line = w + "\t";
    bool first = true;
    for (const auto& t : tags) {
      if (coin(rng)) {
        line += (first ? "" : ",") + t;
        first = false;
      }
    }
    if (first) line += tags[std::uniform_int_distribution<std::size_t>(0, 2)(rng)];
    inst.lexicon_lines.push_back(line);
  }

  int nt_count = std::uniform_int_distribution<int>(1, 5)(rng);
  int rule_count = std::uniform_int_distribution<int>(nt_count, max_rules)(rng);
  auto nt_name = [](int i) { return "N" + std::to_string(i); };

  inst.grammar_lines.push_back("%tags TA TB TC");
  for (const char* qt : {"WH", "AUX_INITIAL", "BE_INITIAL", "TAG"}) {
    inst.grammar_lines.push_back(std::string("%start ") + qt + " N0");
  }

  auto random_terminal = [&]() -> std::string {
    if (coin(rng)) return tags[std::uniform_int_distribution<std::size_t>(0, 2)(rng)];
    return words[std::uniform_int_distribution<std::size_t>(0, words.size() - 1)(rng)];
  };

  for (int r = 0; r < rule_count; ++r) {
    // The first nt_count rules give every nonterminal at least one expansion.
    int lhs = r < nt_count ? r : std::uniform_int_distribution<int>(0, nt_count - 1)(rng);
    std::string line = nt_name(lhs) + " ->";
    int len = std::uniform_int_distribution<int>(1, 3)(rng);
    for (int s = 0; s < len; ++s) {
      bool leftmost = s == 0;
      bool want_nt = std::uniform_int_distribution<int>(0, 3)(rng) == 0;
      if (want_nt && (!leftmost || lhs + 1 < nt_count)) {
        int lo = leftmost ? lhs + 1 : 0;
        line += " " + nt_name(std::uniform_int_distribution<int>(lo, nt_count - 1)(rng));
      } else {
        line += " " + random_terminal();
      }
    }
    inst.grammar_lines.push_back(line);
  }

  int sentence_count = 4;
  for (int s = 0; s < sentence_count; ++s) {
    int len = std::uniform_int_distribution<int>(1, max_sentence_len)(rng);
    std::string sentence;
    for (int w = 0; w < len; ++w) {
      if (w) sentence += ' ';
      sentence += words[std::uniform_int_distribution<std::size_t>(0, words.size() - 1)(rng)];
    }
    inst.sentences.push_back(sentence);
  }
  return inst;
}

// ---------------------------------------------------------------------------
// Exhaustive derivation-enumeration oracle, independent of the search in
// recognize(): recursively explores every expansion of the leftmost symbol
// with the same per-path expansion budget and asks whether any derivation
// covers the span.

inline bool oracle_matches_terminal(const Lexicon& lex, const Symbol& sym,
                                    const Token& token) {
  if (sym.kind == Symbol::Kind::Tag) return tags_for_token(lex, token).contains(sym.text);
  return !token.norm.empty() && token.norm == sym.text;
}

inline bool oracle_derive(const Grammar& g, const Lexicon& lex,
                          std::span<const Token> tokens,
                          std::vector<Symbol> symbols, std::size_t pos,
                          std::size_t budget) {
  if (symbols.empty()) {
    for (std::size_t i = pos; i < tokens.size(); ++i) {
      if (tokens[i].is_word_like()) return false;
    }
    return true;
  }
  Symbol first = symbols.front();
  std::vector<Symbol> rest(symbols.begin() + 1, symbols.end());
  if (first.kind == Symbol::Kind::NonTerminal) {
    if (budget == 0) return false;
    for (int idx : g.expansions_of(first.text)) {
      std::vector<Symbol> next = g.rules[idx].rhs;
      next.insert(next.end(), rest.begin(), rest.end());
      if (oracle_derive(g, lex, tokens, std::move(next), pos, budget - 1)) return true;
    }
    return false;
  }
  if (pos >= tokens.size() || !oracle_matches_terminal(lex, first, tokens[pos]))
    return false;
  return oracle_derive(g, lex, tokens, std::move(rest), pos + 1, budget);
}

inline bool oracle_accepts(const Grammar& g, const Lexicon& lex,
                           std::span<const Token> tokens, const std::string& start) {
  return oracle_derive(g, lex, tokens, {Symbol{Symbol::Kind::NonTerminal, start}}, 0,
                       expansion_cap(tokens.size()));
}

}  // namespace microq::testutil

#endif  // MICROQ_TESTS_TESTUTIL_HPP
