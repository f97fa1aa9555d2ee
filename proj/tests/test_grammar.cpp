#include "microq/grammar.hpp"

#include <doctest.h>

#include "microq/errors.hpp"
#include "testutil.hpp"

using namespace microq;

namespace {

std::vector<std::string> with_starts(std::vector<std::string> lines) {
  std::vector<std::string> out = {"%tags PPQ MD VB BEPRP VBG",
                                  "%start WH WHQ", "%start AUX_INITIAL AUXQ",
                                  "%start BE_INITIAL BEQ", "%start TAG TAGQ"};
  out.insert(out.end(), lines.begin(), lines.end());
  return out;
}

}  // namespace

TEST_CASE("parse_rule_file reads tags, literals and nonterminals") {
  Grammar g = parse_rule_file(with_starts({
      "WHQ -> AUXQ",
      "AUXQ -> PPQ MD VB",
      "BEQ -> BEPRP VBG",
      "TAGQ -> AUXQ , do PPQ",
  }));
  REQUIRE(g.rules.size() == 4);
  CHECK(g.rules[1].lhs == "AUXQ");
  CHECK(g.rules[1].rhs == std::vector<Symbol>{{Symbol::Kind::Tag, "PPQ"},
                                              {Symbol::Kind::Tag, "MD"},
                                              {Symbol::Kind::Tag, "VB"}});
  CHECK(g.rules[1].display() == "AUXQ -> PPQ MD VB");
  CHECK(g.rules[2].rhs == std::vector<Symbol>{{Symbol::Kind::Tag, "BEPRP"},
                                              {Symbol::Kind::Tag, "VBG"}});
  CHECK(g.rules[3].rhs[1] == Symbol{Symbol::Kind::Literal, ","});
  CHECK(g.rules[3].rhs[2] == Symbol{Symbol::Kind::Literal, "do"});
  CHECK(g.start_symbols.at(QuestionType::Wh) == "WHQ");
  CHECK(g.expansions_of("AUXQ") == std::vector<int>{1});
}

TEST_CASE("parse_rule_file rejects malformed rules") {
  CHECK_THROWS_AS(parse_rule_file(with_starts({"WHQ ->"})), MalformedRule);
  CHECK_THROWS_AS(parse_rule_file(with_starts({"WHQ MD VB"})), MalformedRule);
  CHECK_THROWS_AS(parse_rule_file(with_starts({"lower -> MD"})), MalformedRule);
  CHECK_THROWS_AS(parse_rule_file(with_starts({"MD -> VB"})), MalformedRule);
  // literals must be in normalized form
  CHECK_THROWS_AS(parse_rule_file(with_starts({"WHQ -> ppleease"})), MalformedRule);
}

TEST_CASE("parse_rule_file resolves symbols") {
  try {
    parse_rule_file(with_starts({"WHQ -> XQ MD", "AUXQ -> MD", "BEQ -> MD", "TAGQ -> MD"}));
    FAIL("expected UnknownSymbol");
  } catch (const UnknownSymbol& e) {
    CHECK(e.symbol == "XQ");
  }
  // %start pointing at an undefined nonterminal is unknown too
  CHECK_THROWS_AS(parse_rule_file({"%tags MD", "%start WH WHQ", "%start AUX_INITIAL A",
                                   "%start BE_INITIAL A", "%start TAG A", "A -> MD"}),
                  UnknownSymbol);
}

TEST_CASE("parse_rule_file detects left recursion") {
  CHECK_THROWS_AS(
      parse_rule_file(with_starts({"WHQ -> WHQ", "AUXQ -> MD", "BEQ -> MD", "TAGQ -> MD"})),
      LeftRecursion);
  try {
    parse_rule_file(with_starts({"WHQ -> AUXQ MD", "AUXQ -> BEQ VB", "BEQ -> WHQ",
                                 "TAGQ -> MD"}));
    FAIL("expected LeftRecursion");
  } catch (const LeftRecursion& e) {
    CHECK(e.cycle.size() >= 2);
  }
  // right recursion is fine
  CHECK_NOTHROW(parse_rule_file(
      with_starts({"WHQ -> MD WHQ", "WHQ -> MD", "AUXQ -> MD", "BEQ -> MD", "TAGQ -> MD"})));
}

TEST_CASE("parse_rule_file requires all four start symbols") {
  try {
    parse_rule_file({"%tags MD", "%start WH A", "A -> MD"});
    FAIL("expected MissingStart");
  } catch (const MissingStart& e) {
    CHECK(e.question_type == "AUX_INITIAL");
  }
}

TEST_CASE("dumped grammars reparse identically") {
  const Grammar& g = testutil::seed_grammar();
  Grammar again = parse_rule_file(dump_grammar(g));
  CHECK(g == again);
  CHECK(again.rules.size() == g.rules.size());
}

TEST_CASE("validate_grammar flags unreachable and nonproductive nonterminals") {
  Grammar g = parse_rule_file(with_starts({
      "WHQ -> MD",
      "AUXQ -> MD",
      "BEQ -> MD",
      "TAGQ -> MD",
      "XQ -> VB",            // never referenced
      "LOOP -> MD LOOP",     // consumes but never terminates a derivation
      "WHQ -> LOOP",
  }));
  GrammarWarnings w = validate_grammar(g);
  CHECK(w.unreachable == std::vector<std::string>{"XQ"});
  CHECK(w.nonproductive == std::vector<std::string>{"LOOP"});
  CHECK_FALSE(w.empty());
}

TEST_CASE("validate_grammar checks tags against the lexicon") {
  Grammar g = parse_rule_file({"%tags MD ZZQ", "%start WH A", "%start AUX_INITIAL A",
                               "%start BE_INITIAL A", "%start TAG A", "A -> ZZQ MD"});
  Lexicon lex = build_lexicon({"can\tMD"});
  GrammarWarnings w = validate_grammar(g, &lex);
  CHECK(w.unknown_tags == std::vector<std::string>{"ZZQ"});
}

TEST_CASE("the seed grammar validates cleanly against the seed lexicon") {
  const Grammar& g = testutil::seed_grammar();
  GrammarWarnings w = validate_grammar(g, &testutil::seed_lexicon());
  CAPTURE(w.messages());
  CHECK(w.empty());
  // four question types bound to defined nonterminals
  for (QuestionType qt : kQuestionTypes) {
    const std::string& start = g.start_symbols.at(qt);
    CHECK_FALSE(g.expansions_of(start).empty());
  }
}
