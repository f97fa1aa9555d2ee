#ifndef MICROQ_TOKEN_HPP
#define MICROQ_TOKEN_HPP

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace microq {

enum class TokenKind {
  Word,      // ordinary word; norm holds the normalized form
  UserTag,   // @handle
  HashTag,   // #keyword
  Url,       // http://..., https://..., www....
  Emoticon,  // :) ;-> <3 ...
  Numeral,   // digits, or '#' followed by digits
  Punct,     // single punctuation character (runs of .?! collapse to one)
};

std::string_view kind_name(TokenKind kind);

struct Token {
  std::string surface;  // original slice of the tweet
  std::string norm;     // normalized form; empty where normalization is meaningless
  TokenKind kind = TokenKind::Word;
  std::size_t begin = 0;  // byte offsets into the raw tweet, [begin, end)
  std::size_t end = 0;

  bool is_word_like() const {
    return kind == TokenKind::Word || kind == TokenKind::Numeral;
  }
};

struct TokenizedTweet {
  std::string raw;
  std::vector<Token> tokens;
  // True iff the raw text contains two or more adjacent end-punctuation
  // characters ('.', '?', '!').
  bool repeated_punct = false;
};

}  // namespace microq

#endif  // MICROQ_TOKEN_HPP
