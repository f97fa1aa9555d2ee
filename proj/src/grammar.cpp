#include "microq/grammar.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "microq/errors.hpp"
#include "microq/tokenizer.hpp"

namespace microq {

std::string_view question_type_name(QuestionType t) {
  switch (t) {
    case QuestionType::Wh: return "WH";
    case QuestionType::AuxInitial: return "AUX_INITIAL";
    case QuestionType::BeInitial: return "BE_INITIAL";
    case QuestionType::Tag: return "TAG";
  }
  return "?";
}

std::optional<QuestionType> question_type_from_name(std::string_view name) {
  for (QuestionType t : kQuestionTypes) {
    if (question_type_name(t) == name) return t;
  }
  return std::nullopt;
}

std::string Rule::display() const {
  std::string out = lhs + " ->";
  for (const auto& sym : rhs) {
    out += ' ';
    out += sym.text;
  }
  return out;
}

const std::vector<int>& Grammar::expansions_of(const std::string& nonterminal) const {
  static const std::vector<int> kNone;
  auto it = rules_by_lhs.find(nonterminal);
  return it == rules_by_lhs.end() ? kNone : it->second;
}

bool Grammar::operator==(const Grammar& other) const {
  return rules == other.rules && start_symbols == other.start_symbols &&
         tag_inventory == other.tag_inventory;
}

namespace {

std::vector<std::string> split_ws(std::string_view line) {
  std::vector<std::string> out;
  std::istringstream in{std::string(line)};
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

bool is_upper_name(std::string_view s) {
  if (s.empty() || !std::isupper(static_cast<unsigned char>(s.front()))) return false;
  return std::all_of(s.begin(), s.end(), [](unsigned char c) {
    return (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') || c == '_';
  });
}

std::string_view strip_comment(std::string_view line) {
  std::size_t hash = line.find('#');
  return hash == std::string_view::npos ? line : line.substr(0, hash);
}

// Detects a cycle of nonterminals through leftmost rule positions. Without
// epsilon rules this is exactly the condition for unbounded top-down descent.
void check_left_recursion(const Grammar& g) {
  enum class Mark { White, Grey, Black };
  std::map<std::string, Mark> marks;
  std::vector<std::string> path;

  auto dfs = [&](auto&& self, const std::string& nt) -> void {
    marks[nt] = Mark::Grey;
    path.push_back(nt);
    for (int idx : g.expansions_of(nt)) {
      const Symbol& first = g.rules[idx].rhs.front();
      if (first.kind != Symbol::Kind::NonTerminal) continue;
      Mark m = marks.count(first.text) ? marks[first.text] : Mark::White;
      if (m == Mark::Grey) {
        auto begin = std::find(path.begin(), path.end(), first.text);
        std::vector<std::string> cycle(begin, path.end());
        cycle.push_back(first.text);
        throw LeftRecursion(std::move(cycle));
      }
      if (m == Mark::White) self(self, first.text);
    }
    path.pop_back();
    marks[nt] = Mark::Black;
  };

  for (const auto& [nt, indices] : g.rules_by_lhs) {
    if (!marks.count(nt)) dfs(dfs, nt);
  }
}

}  // namespace

Grammar parse_rule_file(const std::vector<std::string>& lines) {
  Grammar g;
  struct PendingSymbol {
    std::string name;
    std::size_t line_no;
  };
  std::vector<PendingSymbol> uppercase_symbols;  // resolved after all rules are read

  std::size_t line_no = 0;
  for (const auto& raw_line : lines) {
    ++line_no;
    std::vector<std::string> toks = split_ws(strip_comment(raw_line));
    if (toks.empty()) continue;

    if (toks[0] == "%tags") {
      if (toks.size() < 2) throw MalformedRule(line_no, "%tags needs at least one tag");
      for (std::size_t i = 1; i < toks.size(); ++i) {
        if (!is_upper_name(toks[i]))
          throw MalformedRule(line_no, "invalid tag '" + toks[i] + "'");
        g.tag_inventory.insert(toks[i]);
      }
      continue;
    }
    if (toks[0] == "%start") {
      if (toks.size() != 3)
        throw MalformedRule(line_no, "%start needs a question type and a nonterminal");
      auto qt = question_type_from_name(toks[1]);
      if (!qt) throw MalformedRule(line_no, "unknown question type '" + toks[1] + "'");
      if (g.start_symbols.count(*qt))
        throw MalformedRule(line_no, "duplicate %start for " + toks[1]);
      g.start_symbols[*qt] = toks[2];
      uppercase_symbols.push_back({toks[2], line_no});
      continue;
    }

    if (toks.size() < 3 || toks[1] != "->")
      throw MalformedRule(line_no, "expected LHS -> SYM [SYM ...]");
    const std::string& lhs = toks[0];
    if (!is_upper_name(lhs))
      throw MalformedRule(line_no, "rule LHS '" + lhs + "' must be an uppercase nonterminal");
    if (g.tag_inventory.count(lhs))
      throw MalformedRule(line_no, "rule LHS '" + lhs + "' collides with a POS tag");

    Rule rule;
    rule.lhs = lhs;
    for (std::size_t i = 2; i < toks.size(); ++i) {
      const std::string& t = toks[i];
      if (is_upper_name(t)) {
        if (g.tag_inventory.count(t)) {
          rule.rhs.push_back({Symbol::Kind::Tag, t});
        } else {
          rule.rhs.push_back({Symbol::Kind::NonTerminal, t});
          uppercase_symbols.push_back({t, line_no});
        }
      } else {
        std::string norm = normalize_word(t);
        if (norm != t)
          throw MalformedRule(line_no, "literal '" + t + "' is not in normalized form");
        rule.rhs.push_back({Symbol::Kind::Literal, t});
      }
    }
    int idx = static_cast<int>(g.rules.size());
    g.rules.push_back(std::move(rule));
    g.rules_by_lhs[g.rules.back().lhs].push_back(idx);
  }

  for (const auto& pending : uppercase_symbols) {
    if (!g.rules_by_lhs.count(pending.name))
      throw UnknownSymbol(pending.name, pending.line_no);
  }
  for (QuestionType t : kQuestionTypes) {
    if (!g.start_symbols.count(t))
      throw MissingStart(std::string(question_type_name(t)));
  }
  check_left_recursion(g);
  return g;
}

std::vector<std::string> dump_grammar(const Grammar& g) {
  std::vector<std::string> out;
  if (!g.tag_inventory.empty()) {
    std::string line = "%tags";
    for (const auto& t : g.tag_inventory) line += ' ' + t;
    out.push_back(std::move(line));
  }
  for (const auto& [qt, nt] : g.start_symbols) {
    out.push_back("%start " + std::string(question_type_name(qt)) + " " + nt);
  }
  for (const auto& rule : g.rules) out.push_back(rule.display());
  return out;
}

std::vector<std::string> GrammarWarnings::messages() const {
  std::vector<std::string> out;
  for (const auto& n : unreachable) out.push_back("unreachable nonterminal " + n);
  for (const auto& n : nonproductive) out.push_back("nonproductive nonterminal " + n);
  for (const auto& t : unknown_tags) out.push_back("tag " + t + " never appears in the lexicon");
  return out;
}

GrammarWarnings validate_grammar(const Grammar& g, const Lexicon* lexicon) {
  GrammarWarnings warnings;

  // Reachability from the four start symbols.
  std::set<std::string> reachable;
  std::vector<std::string> frontier;
  for (const auto& [qt, nt] : g.start_symbols) {
    if (reachable.insert(nt).second) frontier.push_back(nt);
  }
  while (!frontier.empty()) {
    std::string nt = std::move(frontier.back());
    frontier.pop_back();
    for (int idx : g.expansions_of(nt)) {
      for (const Symbol& sym : g.rules[idx].rhs) {
        if (sym.kind == Symbol::Kind::NonTerminal && reachable.insert(sym.text).second)
          frontier.push_back(sym.text);
      }
    }
  }
  for (const auto& [nt, indices] : g.rules_by_lhs) {
    if (!reachable.count(nt)) warnings.unreachable.push_back(nt);
  }

  // Productivity: fixed point over "some rule has an all-productive rhs".
  std::set<std::string> productive;
  bool changed = true;
  while (changed) {
    changed = false;
    for (const auto& [nt, indices] : g.rules_by_lhs) {
      if (productive.count(nt)) continue;
      for (int idx : indices) {
        const Rule& rule = g.rules[idx];
        bool ok = std::all_of(rule.rhs.begin(), rule.rhs.end(), [&](const Symbol& s) {
          return s.kind != Symbol::Kind::NonTerminal || productive.count(s.text);
        });
        if (ok) {
          productive.insert(nt);
          changed = true;
          break;
        }
      }
    }
  }
  for (const auto& [nt, indices] : g.rules_by_lhs) {
    if (!productive.count(nt)) warnings.nonproductive.push_back(nt);
  }

  if (lexicon) {
    std::vector<std::string> observed = lexicon->observed_tags();
    std::set<std::string> observed_set(observed.begin(), observed.end());
    // Tags supplied outside the lexicon proper: NNP for user tags, NN/NNP
    // for hashtags, CD for numerals, and the unknown-word default set.
    for (const auto& t : Lexicon::unknown_word_tags()) observed_set.insert(t);
    observed_set.insert("CD");
    std::set<std::string> used;
    for (const Rule& rule : g.rules) {
      for (const Symbol& sym : rule.rhs) {
        if (sym.kind == Symbol::Kind::Tag) used.insert(sym.text);
      }
    }
    for (const auto& tag : used) {
      if (!observed_set.count(tag)) warnings.unknown_tags.push_back(tag);
    }
  }
  return warnings;
}

}  // namespace microq
