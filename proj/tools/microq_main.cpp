// microq: question detection for tweet-sized text.
//
// Subcommands: tokenize, build-lexicon, validate-grammar, filter, classify,
// eval. Input is line-oriented (one tweet per line); output is plain text or
// json-lines. Exit codes: 0 success, 2 operational failure.

#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "microq/corpus.hpp"
#include "microq/errors.hpp"
#include "microq/grammar.hpp"
#include "microq/lexicon.hpp"
#include "microq/parser.hpp"
#include "microq/tokenizer.hpp"

namespace {

using json = nlohmann::json;

struct LexiconOptions {
  std::string prebuilt;
  std::string base;
  std::string overlay;
  std::string names;
};

void add_lexicon_options(CLI::App* cmd, LexiconOptions* opts) {
  cmd->add_option("--lexicon", opts->prebuilt, "prebuilt lexicon dump")
      ->check(CLI::ExistingFile);
  cmd->add_option("--base", opts->base, "base word list")->check(CLI::ExistingFile);
  cmd->add_option("--overlay", opts->overlay, "Twitter overlay list")
      ->check(CLI::ExistingFile);
  cmd->add_option("--names", opts->names, "names list")->check(CLI::ExistingFile);
}

microq::Lexicon load_lexicon(const LexiconOptions& opts) {
  if (!opts.prebuilt.empty()) {
    return microq::build_lexicon(microq::read_lines(opts.prebuilt));
  }
  if (opts.base.empty()) {
    throw microq::Error("need --lexicon or --base");
  }
  return microq::build_lexicon(
      microq::read_lines(opts.base),
      opts.overlay.empty() ? std::vector<std::string>{} : microq::read_lines(opts.overlay),
      opts.names.empty() ? std::vector<std::string>{} : microq::read_lines(opts.names));
}

// Reads tweets from a file or stdin when the path is empty or "-".
std::vector<std::string> read_input(const std::string& path) {
  if (path.empty() || path == "-") {
    std::vector<std::string> lines;
    std::string line;
    while (std::getline(std::cin, line)) {
      if (!line.empty() && line.back() == '\r') line.pop_back();
      lines.push_back(line);
    }
    return lines;
  }
  return microq::read_lines(path);
}

bool is_blank(const std::string& line) {
  return line.find_first_not_of(" \t\r") == std::string::npos;
}

int cmd_tokenize(const std::string& input, const std::string& format) {
  std::vector<std::string> lines = read_input(input);
  std::size_t failed = 0, attempted = 0;
  std::size_t line_no = 0;
  for (const auto& line : lines) {
    ++line_no;
    if (is_blank(line)) continue;
    ++attempted;
    microq::TokenizedTweet tweet;
    try {
      tweet = microq::tokenize(line);
    } catch (const microq::Error& e) {
      std::cerr << "line " << line_no << ": " << e.what() << '\n';
      ++failed;
      continue;
    }
    if (format == "jsonl") {
      json record;
      record["raw"] = tweet.raw;
      record["repeated_punct"] = tweet.repeated_punct;
      record["tokens"] = json::array();
      for (const auto& t : tweet.tokens) {
        record["tokens"].push_back({{"kind", std::string(microq::kind_name(t.kind))},
                                    {"surface", t.surface},
                                    {"norm", t.norm},
                                    {"span", {t.begin, t.end}}});
      }
      std::cout << record.dump() << '\n';
    } else {
      for (const auto& t : tweet.tokens) {
        std::cout << microq::kind_name(t.kind) << '\t' << t.surface << '\t' << t.norm
                  << '\t' << t.begin << ':' << t.end << '\n';
      }
      std::cout << "repeated_punct\t" << (tweet.repeated_punct ? "true" : "false")
                << "\n\n";
    }
  }
  return attempted > 0 && failed == attempted ? 2 : 0;
}

int cmd_build_lexicon(const LexiconOptions& opts, const std::string& output) {
  if (opts.base.empty()) throw microq::Error("--base is required");
  microq::Lexicon lex = load_lexicon(opts);

  const auto& counts = lex.source_counts();
  std::cerr << "base entries:       " << counts.base_entries << '\n'
            << "overlay added:      " << counts.overlay.added << '\n'
            << "overlay overridden: " << counts.overlay.overridden << '\n'
            << "names added:        " << counts.names.added << '\n'
            << "names augmented:    " << counts.names.augmented << '\n'
            << "total entries:      " << lex.size() << '\n';

  if (output.empty() || output == "-") {
    lex.dump(std::cout);
  } else {
    std::ofstream out(output);
    if (!out) throw microq::Error("cannot write " + output);
    lex.dump(out);
  }
  return 0;
}

int cmd_validate_grammar(const std::string& grammar_path, const LexiconOptions& opts) {
  microq::Grammar g = microq::parse_rule_file(microq::read_lines(grammar_path));
  std::optional<microq::Lexicon> lex;
  if (!opts.prebuilt.empty() || !opts.base.empty()) lex = load_lexicon(opts);

  microq::GrammarWarnings warnings = microq::validate_grammar(g, lex ? &*lex : nullptr);
  std::cout << g.rules.size() << " rules, " << g.rules_by_lhs.size()
            << " nonterminals, " << g.tag_inventory.size() << " tags\n";
  for (const auto& msg : warnings.messages()) std::cout << "warning: " << msg << '\n';
  if (warnings.empty()) std::cout << "no warnings\n";
  return 0;
}

int cmd_filter(const std::string& input) {
  std::vector<std::string> lines = read_input(input);
  std::vector<std::string> tweets;
  for (auto& line : lines) {
    if (!is_blank(line)) tweets.push_back(line);
  }
  microq::FilterStats stats;
  std::vector<std::string> kept = microq::filter_candidates(tweets, &stats);
  for (const auto& t : kept) std::cout << t << '\n';
  std::cerr << "input:                    " << stats.input << '\n'
            << "kept:                     " << stats.kept << '\n'
            << "removed retweets:         " << stats.removed_retweet << '\n'
            << "removed no question mark: " << stats.removed_no_question_mark << '\n'
            << "removed non-English:      " << stats.removed_non_english
            << " (detection not implemented)\n";
  return 0;
}

int cmd_classify(const std::string& input, const LexiconOptions& opts,
                 const std::string& grammar_path, const std::string& format,
                 bool verbose, int jobs) {
  microq::Lexicon lex = load_lexicon(opts);
  microq::Grammar g = microq::parse_rule_file(microq::read_lines(grammar_path));

  std::vector<std::string> lines = read_input(input);
  std::vector<std::string> tweets;
  std::vector<std::size_t> line_nos;
  std::size_t line_no = 0;
  for (auto& line : lines) {
    ++line_no;
    if (is_blank(line)) {
      std::cerr << "line " << line_no << ": empty input\n";
      continue;
    }
    tweets.push_back(line);
    line_nos.push_back(line_no);
  }

  std::vector<microq::ParseResult> results =
      jobs == 1 ? microq::classify_batch(g, lex, tweets)
                : microq::classify_batch_parallel(g, lex, tweets, jobs);

  for (std::size_t i = 0; i < tweets.size(); ++i) {
    const microq::ParseResult& r = results[i];
    std::string type =
        r.question_type ? std::string(microq::question_type_name(*r.question_type)) : "-";
    if (format == "jsonl") {
      json record{{"question", r.is_question}, {"type", r.is_question ? json(type) : json()},
                  {"text", tweets[i]}};
      if (verbose) {
        json trace = json::array();
        for (int idx : r.rule_trace) trace.push_back(g.rules[idx].display());
        record["trace"] = trace;
        record["segment"] = r.segment_index;
      }
      std::cout << record.dump() << '\n';
    } else {
      std::cout << (r.is_question ? "Q" : "NQ") << '\t' << type << '\t' << tweets[i];
      if (verbose && r.is_question) {
        std::cout << '\t';
        for (std::size_t k = 0; k < r.rule_trace.size(); ++k) {
          if (k) std::cout << "; ";
          std::cout << g.rules[r.rule_trace[k]].display();
        }
      }
      std::cout << '\n';
    }
  }
  return tweets.empty() && !lines.empty() ? 2 : 0;
}

int cmd_eval(const std::string& input, const LexiconOptions& opts,
             const std::string& grammar_path, const std::string& format, int jobs) {
  microq::Lexicon lex = load_lexicon(opts);
  microq::Grammar g = microq::parse_rule_file(microq::read_lines(grammar_path));
  std::vector<microq::LabeledTweet> corpus = microq::read_corpus(read_input(input));
  microq::EvalReport report = microq::evaluate(g, lex, corpus, jobs);
  if (format == "jsonl") {
    json record{{"tp", report.tp}, {"fp", report.fp}, {"fn", report.fn}, {"tn", report.tn},
                {"accuracy", report.accuracy}};
    record["precision"] = report.precision ? json(*report.precision) : json();
    record["recall"] = report.recall ? json(*report.recall) : json();
    std::cout << record.dump() << '\n';
  } else {
    std::cout << microq::format_report(report);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"question detection for tweet-sized text"};
  app.require_subcommand(1);

  std::string input, output, grammar_path;
  std::string format = "text";
  bool verbose = false;
  int jobs = 1;
  LexiconOptions lex_opts;

  auto add_format = [&](CLI::App* cmd) {
    cmd->add_option("--format", format, "output format")
        ->check(CLI::IsMember({"text", "jsonl"}));
  };

  CLI::App* tok = app.add_subcommand("tokenize", "dump tokens for each input line");
  tok->add_option("input", input, "input file (default: stdin)");
  add_format(tok);

  CLI::App* build = app.add_subcommand("build-lexicon", "build and dump a lexicon");
  add_lexicon_options(build, &lex_opts);
  build->add_option("-o,--output", output, "dump destination (default: stdout)");

  CLI::App* validate = app.add_subcommand("validate-grammar", "check a grammar file");
  validate->add_option("--grammar", grammar_path, "grammar file")
      ->required()
      ->check(CLI::ExistingFile);
  add_lexicon_options(validate, &lex_opts);

  CLI::App* filter = app.add_subcommand("filter", "keep question-candidate tweets");
  filter->add_option("input", input, "input file (default: stdin)");

  CLI::App* classify = app.add_subcommand("classify", "classify each input line");
  classify->add_option("input", input, "input file (default: stdin)");
  add_lexicon_options(classify, &lex_opts);
  classify->add_option("--grammar", grammar_path, "grammar file")
      ->required()
      ->check(CLI::ExistingFile);
  classify->add_flag("--verbose", verbose, "append the matched rule trace");
  classify->add_option("--jobs", jobs, "worker threads (output order is preserved)");
  add_format(classify);

  CLI::App* eval = app.add_subcommand("eval", "evaluate against a labeled corpus");
  eval->add_option("input", input, "labeled corpus file (default: stdin)");
  add_lexicon_options(eval, &lex_opts);
  eval->add_option("--grammar", grammar_path, "grammar file")
      ->required()
      ->check(CLI::ExistingFile);
  eval->add_option("--jobs", jobs, "worker threads");
  add_format(eval);

  CLI11_PARSE(app, argc, argv);

  try {
    if (tok->parsed()) return cmd_tokenize(input, format);
    if (build->parsed()) return cmd_build_lexicon(lex_opts, output);
    if (validate->parsed()) return cmd_validate_grammar(grammar_path, lex_opts);
    if (filter->parsed()) return cmd_filter(input);
    if (classify->parsed())
      return cmd_classify(input, lex_opts, grammar_path, format, verbose, jobs);
    if (eval->parsed()) return cmd_eval(input, lex_opts, grammar_path, format, jobs);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
