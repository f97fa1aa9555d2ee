#ifndef MICROQ_CORPUS_HPP
#define MICROQ_CORPUS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "microq/parser.hpp"

namespace microq {

enum class Label { Question, NotQuestion };

struct LabeledTweet {
  std::string text;
  Label label = Label::NotQuestion;
};

// Parses `label<TAB>text` lines, label in {q, nq}. Blank lines are skipped.
std::vector<LabeledTweet> read_corpus(const std::vector<std::string>& lines);

struct FilterStats {
  std::size_t input = 0;
  std::size_t kept = 0;
  std::size_t removed_retweet = 0;
  std::size_t removed_no_question_mark = 0;
  // Non-English detection is not implemented; kept for the report shape.
  std::size_t removed_non_english = 0;
};

// Candidate filter: drops retweets (leading "rt" token) and tweets without
// a question mark.
std::vector<std::string> filter_candidates(const std::vector<std::string>& tweets,
                                           FilterStats* stats = nullptr);

struct EvalReport {
  std::int64_t tp = 0;  // parser question, labeled question
  std::int64_t fp = 0;  // parser question, labeled not
  std::int64_t fn = 0;  // parser not, labeled question
  std::int64_t tn = 0;  // parser not, labeled not

  std::optional<double> precision;  // absent when tp+fp == 0
  std::optional<double> recall;     // absent when tp+fn == 0
  double accuracy = 0.0;

  std::int64_t total() const { return tp + fp + fn + tn; }
  static EvalReport from_counts(std::int64_t tp, std::int64_t fp, std::int64_t fn,
                                std::int64_t tn);
};

// Plain-text 2x2 table plus the three metrics (truncated to five decimals,
// matching the convention of the scores this layout mirrors), ending with a
// machine-readable `tp fp fn tn precision recall accuracy` line.
std::string format_report(const EvalReport& report);

// Metric value with exactly five decimals, truncated toward zero.
std::string format_metric(std::optional<double> value);

// Classifies every text, preserving input order. The serial walk is the
// reference implementation.
std::vector<ParseResult> classify_batch(const Grammar& g, const Lexicon& lex,
                                        const std::vector<std::string>& texts);

// OpenMP variant of classify_batch; `threads` <= 0 uses the runtime default.
// Falls back to the serial walk when built without OpenMP.
std::vector<ParseResult> classify_batch_parallel(const Grammar& g, const Lexicon& lex,
                                                 const std::vector<std::string>& texts,
                                                 int threads = 0);

// Runs the classifier over a labeled corpus and tallies the confusion
// matrix. `threads` == 1 is the serial reference path. Throws EmptyCorpus.
EvalReport evaluate(const Grammar& g, const Lexicon& lex,
                    const std::vector<LabeledTweet>& corpus, int threads = 1);

}  // namespace microq

#endif  // MICROQ_CORPUS_HPP
