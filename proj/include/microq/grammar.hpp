#ifndef MICROQ_GRAMMAR_HPP
#define MICROQ_GRAMMAR_HPP

#include <array>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "microq/lexicon.hpp"

namespace microq {

enum class QuestionType { Wh, AuxInitial, BeInitial, Tag };

constexpr std::array<QuestionType, 4> kQuestionTypes = {
    QuestionType::Wh, QuestionType::AuxInitial, QuestionType::BeInitial,
    QuestionType::Tag};

std::string_view question_type_name(QuestionType t);
std::optional<QuestionType> question_type_from_name(std::string_view name);

struct Symbol {
  enum class Kind { NonTerminal, Tag, Literal };
  Kind kind = Kind::NonTerminal;
  std::string text;

  bool operator==(const Symbol&) const = default;
};

struct Rule {
  std::string lhs;
  std::vector<Symbol> rhs;

  bool operator==(const Rule&) const = default;
  std::string display() const;  // "AUXQ -> PPQ MD VB"
};

// Ordered rewrite rules; file order is the parser's expansion priority.
struct Grammar {
  std::vector<Rule> rules;
  std::map<QuestionType, std::string> start_symbols;
  std::set<std::string> tag_inventory;

  // lhs -> indices into rules, preserving file order.
  std::map<std::string, std::vector<int>> rules_by_lhs;

  const std::vector<int>& expansions_of(const std::string& nonterminal) const;
  bool operator==(const Grammar& other) const;
};

// Grammar file format, one declaration per line:
//   %tags NN VB MD ...          tag inventory (may repeat; sets are unioned)
//   %start WH WHQ               bind a question type to a start nonterminal
//   LHS -> SYM SYM ...          rewrite rule
// Symbols starting with a lowercase letter or punctuation are literal words;
// uppercase symbols in the tag inventory are tags; other uppercase symbols
// are nonterminals. '#' starts a comment. Throws MalformedRule,
// UnknownSymbol, LeftRecursion, MissingStart.
Grammar parse_rule_file(const std::vector<std::string>& lines);

// Re-serializes a grammar in the file format; parse_rule_file(dump_grammar(g))
// is structurally identical to g.
std::vector<std::string> dump_grammar(const Grammar& g);

struct GrammarWarnings {
  std::vector<std::string> unreachable;     // defined but not derivable from a start
  std::vector<std::string> nonproductive;   // cannot derive any terminal string
  std::vector<std::string> unknown_tags;    // inventory tags absent from the lexicon

  bool empty() const {
    return unreachable.empty() && nonproductive.empty() && unknown_tags.empty();
  }
  std::vector<std::string> messages() const;
};

// Reports structural oddities as warnings, not errors. When a lexicon is
// given, grammar tags never observed in it are flagged too.
GrammarWarnings validate_grammar(const Grammar& g, const Lexicon* lexicon = nullptr);

}  // namespace microq

#endif  // MICROQ_GRAMMAR_HPP
