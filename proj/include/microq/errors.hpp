#ifndef MICROQ_ERRORS_HPP
#define MICROQ_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace microq {

// Base class for all recoverable toolkit errors.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// tokenize() on an empty or whitespace-only string.
struct EmptyInput : Error {
  EmptyInput() : Error("empty input") {}
};

// A line in a list/corpus file that does not match the expected format.
struct MalformedLine : Error {
  std::size_t line_no;
  MalformedLine(std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_no(line) {}
};

// A word-list file that yields no usable entries.
struct EmptyList : Error {
  EmptyList() : Error("word list contains no entries") {}
};

// An invalid corpus label (anything other than "q" / "nq").
struct UnknownLabel : MalformedLine {
  UnknownLabel(std::size_t line, const std::string& label)
      : MalformedLine(line, "unknown label '" + label + "'") {}
};

struct EmptyCorpus : Error {
  EmptyCorpus() : Error("corpus contains no tweets") {}
};

// A grammar rule line that cannot be parsed.
struct MalformedRule : MalformedLine {
  using MalformedLine::MalformedLine;
};

// An uppercase rule symbol that is neither an inventory tag nor a
// defined nonterminal.
struct UnknownSymbol : Error {
  std::string symbol;
  std::size_t line_no;
  UnknownSymbol(const std::string& name, std::size_t line)
      : Error("line " + std::to_string(line) + ": unknown symbol '" + name + "'"),
        symbol(name), line_no(line) {}
};

// A cycle of nonterminals through leftmost rule positions; such a grammar
// would not terminate under top-down search.
struct LeftRecursion : Error {
  std::vector<std::string> cycle;
  explicit LeftRecursion(std::vector<std::string> nts)
      : Error(describe(nts)), cycle(std::move(nts)) {}

 private:
  static std::string describe(const std::vector<std::string>& nts) {
    std::string msg = "left recursion through:";
    for (const auto& n : nts) msg += " " + n;
    return msg;
  }
};

// A grammar file that never binds a start symbol for a question type.
struct MissingStart : Error {
  std::string question_type;
  explicit MissingStart(const std::string& qtype)
      : Error("no %start directive for question type " + qtype),
        question_type(qtype) {}
};

}  // namespace microq

#endif  // MICROQ_ERRORS_HPP
