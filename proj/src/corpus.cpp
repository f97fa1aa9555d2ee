#include "microq/corpus.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "microq/errors.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace microq {

std::vector<LabeledTweet> read_corpus(const std::vector<std::string>& lines) {
  std::vector<LabeledTweet> corpus;
  std::size_t line_no = 0;
  for (const auto& line : lines) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    std::size_t tab = line.find('\t');
    if (tab == std::string::npos)
      throw MalformedLine(line_no, "expected label<TAB>text");
    std::string label = line.substr(0, tab);
    std::string text = line.substr(tab + 1);
    if (text.empty()) throw MalformedLine(line_no, "empty tweet text");
    LabeledTweet tweet;
    tweet.text = std::move(text);
    if (label == "q")
      tweet.label = Label::Question;
    else if (label == "nq")
      tweet.label = Label::NotQuestion;
    else
      throw UnknownLabel(line_no, label);
    corpus.push_back(std::move(tweet));
  }
  return corpus;
}

namespace {

// Leading "rt" token (any case, optionally followed by ':') marks a retweet.
bool is_retweet(const std::string& tweet) {
  std::size_t i = tweet.find_first_not_of(" \t");
  if (i == std::string::npos) return false;
  std::size_t end = tweet.find_first_of(" \t", i);
  std::string first = tweet.substr(i, end == std::string::npos ? std::string::npos : end - i);
  if (!first.empty() && first.back() == ':') first.pop_back();
  if (first.size() != 2) return false;
  return std::tolower(static_cast<unsigned char>(first[0])) == 'r' &&
         std::tolower(static_cast<unsigned char>(first[1])) == 't';
}

}  // namespace

std::vector<std::string> filter_candidates(const std::vector<std::string>& tweets,
                                           FilterStats* stats) {
  FilterStats local;
  local.input = tweets.size();
  std::vector<std::string> kept;
  for (const auto& tweet : tweets) {
    if (is_retweet(tweet)) {
      ++local.removed_retweet;
      continue;
    }
    if (tweet.find('?') == std::string::npos) {
      ++local.removed_no_question_mark;
      continue;
    }
    kept.push_back(tweet);
  }
  local.kept = kept.size();
  if (stats) *stats = local;
  return kept;
}

EvalReport EvalReport::from_counts(std::int64_t tp, std::int64_t fp, std::int64_t fn,
                                   std::int64_t tn) {
  EvalReport r;
  r.tp = tp;
  r.fp = fp;
  r.fn = fn;
  r.tn = tn;
  if (tp + fp > 0) r.precision = static_cast<double>(tp) / static_cast<double>(tp + fp);
  if (tp + fn > 0) r.recall = static_cast<double>(tp) / static_cast<double>(tp + fn);
  std::int64_t total = r.total();
  r.accuracy = total > 0 ? static_cast<double>(tp + tn) / static_cast<double>(total) : 0.0;
  return r;
}

std::string format_metric(std::optional<double> value) {
  if (!value) return "undefined";
  // The offset absorbs representation error in ratios like 7/10 that sit an
  // ulp below the truncation boundary; genuine count ratios are never that
  // close to a five-decimal boundary from below.
  double truncated = std::floor(*value * 100000.0 + 1e-7) / 100000.0;
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.5f", truncated);
  return buf;
}

std::string format_report(const EvalReport& report) {
  std::ostringstream out;
  char row[128];
  out << "                 labeled Q   labeled NQ\n";
  std::snprintf(row, sizeof(row), "parser Q   %15lld %12lld\n",
                static_cast<long long>(report.tp), static_cast<long long>(report.fp));
  out << row;
  std::snprintf(row, sizeof(row), "parser NQ  %15lld %12lld\n",
                static_cast<long long>(report.fn), static_cast<long long>(report.tn));
  out << row;
  out << '\n';
  out << "precision: " << format_metric(report.precision) << '\n';
  out << "recall:    " << format_metric(report.recall) << '\n';
  out << "accuracy:  " << format_metric(report.accuracy) << '\n';
  out << report.tp << ' ' << report.fp << ' ' << report.fn << ' ' << report.tn << ' '
      << (report.precision ? format_metric(report.precision) : "-") << ' '
      << (report.recall ? format_metric(report.recall) : "-") << ' '
      << format_metric(report.accuracy) << '\n';
  return out.str();
}

std::vector<ParseResult> classify_batch(const Grammar& g, const Lexicon& lex,
                                        const std::vector<std::string>& texts) {
  std::vector<ParseResult> results(texts.size());
  for (std::size_t i = 0; i < texts.size(); ++i) {
    results[i] = classify_text(g, lex, texts[i]);
  }
  return results;
}

std::vector<ParseResult> classify_batch_parallel(const Grammar& g, const Lexicon& lex,
                                                 const std::vector<std::string>& texts,
                                                 int threads) {
#ifdef _OPENMP
  std::vector<ParseResult> results(texts.size());
  const std::int64_t n = static_cast<std::int64_t>(texts.size());
  if (threads > 0) {
#pragma omp parallel for schedule(dynamic, 64) num_threads(threads)
    for (std::int64_t i = 0; i < n; ++i) {
      results[i] = classify_text(g, lex, texts[i]);
    }
  } else {
#pragma omp parallel for schedule(dynamic, 64)
    for (std::int64_t i = 0; i < n; ++i) {
      results[i] = classify_text(g, lex, texts[i]);
    }
  }
  return results;
#else
  (void)threads;
  return classify_batch(g, lex, texts);
#endif
}

EvalReport evaluate(const Grammar& g, const Lexicon& lex,
                    const std::vector<LabeledTweet>& corpus, int threads) {
  if (corpus.empty()) throw EmptyCorpus();
  std::vector<std::string> texts;
  texts.reserve(corpus.size());
  for (const auto& t : corpus) texts.push_back(t.text);

  std::vector<ParseResult> results =
      threads == 1 ? classify_batch(g, lex, texts)
                   : classify_batch_parallel(g, lex, texts, threads);

  std::int64_t tp = 0, fp = 0, fn = 0, tn = 0;
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    bool predicted = results[i].is_question;
    bool labeled = corpus[i].label == Label::Question;
    if (predicted && labeled)
      ++tp;
    else if (predicted)
      ++fp;
    else if (labeled)
      ++fn;
    else
      ++tn;
  }
  return EvalReport::from_counts(tp, fp, fn, tn);
}

}  // namespace microq
