// Benchmark: serial reference batch classification vs the OpenMP kernel.
// Generates synthetic tweets (<= 140 chars), checks the two paths agree,
// and prints throughput for each.

#include <chrono>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "microq/corpus.hpp"
#include "microq/grammar.hpp"
#include "microq/lexicon.hpp"
#include "microq/parser.hpp"

namespace {

std::vector<std::string> make_tweets(std::size_t count, unsigned seed) {
  static const std::vector<std::string> templates = {
      "can you %s the %s for me",
      "does anyone know a good %s in %s?",
      "what do you think about the new %s",
      "i just %s my %s and i love it",
      "ru going to the %s tonight",
      "@%s did you see that %s yesterday??",
      "wheres the best place to buy a %s",
      "so tired of this %s weather :(",
      "who wants to %s my #%s?",
      "the %s was amazing, wasnt it?",
      "need a new %s asap!!! any1 got one",
      "http://bit.ly/x%s check this %s out",
      "RT @%s: free %s this weekend",
      "lol that %s is so %s <3",
      "omg I cant believe the %s again...",
  };
  static const std::vector<std::string> words = {
      "dentist", "phone",  "movie",   "party",   "game",    "laptop", "pizza",
      "song",    "book",   "charger", "meeting", "coffee",  "show",   "city",
      "team",    "camera", "ticket",  "shirt",   "teacher", "dog",
  };
  std::mt19937 rng(seed);
  std::uniform_int_distribution<std::size_t> pick_template(0, templates.size() - 1);
  std::uniform_int_distribution<std::size_t> pick_word(0, words.size() - 1);

  std::vector<std::string> tweets;
  tweets.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    std::string t = templates[pick_template(rng)];
    std::size_t at;
    while ((at = t.find("%s")) != std::string::npos) {
      t.replace(at, 2, words[pick_word(rng)]);
    }
    tweets.push_back(std::move(t));
  }
  return tweets;
}

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

}  // namespace

int main(int argc, char** argv) {
  std::size_t count = argc > 1 ? std::stoul(argv[1]) : 50000;
  std::string data_dir = argc > 2 ? argv[2] : "data";

  microq::Lexicon lex = microq::build_lexicon(
      microq::read_lines(data_dir + "/lexicon/base.tsv"),
      microq::read_lines(data_dir + "/lexicon/twitter.tsv"),
      microq::read_lines(data_dir + "/lexicon/names.txt"));
  microq::Grammar grammar =
      microq::parse_rule_file(microq::read_lines(data_dir + "/grammar/questions.grm"));

  std::vector<std::string> tweets = make_tweets(count, 20100501);

  auto t0 = std::chrono::steady_clock::now();
  std::vector<microq::ParseResult> serial = microq::classify_batch(grammar, lex, tweets);
  double serial_s = seconds_since(t0);

  t0 = std::chrono::steady_clock::now();
  std::vector<microq::ParseResult> parallel =
      microq::classify_batch_parallel(grammar, lex, tweets);
  double parallel_s = seconds_since(t0);

  std::size_t mismatches = 0, questions = 0;
  for (std::size_t i = 0; i < tweets.size(); ++i) {
    if (serial[i].is_question != parallel[i].is_question ||
        serial[i].question_type != parallel[i].question_type ||
        serial[i].rule_trace != parallel[i].rule_trace) {
      ++mismatches;
    }
    if (serial[i].is_question) ++questions;
  }

  int threads = 1;
#ifdef _OPENMP
  threads = omp_get_max_threads();
#endif
  std::printf("tweets:             %zu (%zu classified as questions)\n", tweets.size(),
              questions);
  std::printf("serial:             %.3f s  (%.0f tweets/s)\n", serial_s,
              tweets.size() / serial_s);
  std::printf("openmp (%2d threads): %.3f s  (%.0f tweets/s, %.2fx)\n", threads,
              parallel_s, tweets.size() / parallel_s, serial_s / parallel_s);
  std::printf("mismatches:         %zu\n", mismatches);
  return mismatches == 0 ? 0 : 1;
}
