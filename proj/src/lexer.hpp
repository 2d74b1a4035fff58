#pragma once

// Line-oriented tokenizer shared by the instance, schema and tgd readers.

#include <cctype>
#include <string>
#include <string_view>
#include <vector>

#include "schemamap/errors.hpp"

namespace schemamap::detail {

enum class Tok {
  Word,     // letters, digits, '_' ; not starting with '_'
  Quoted,   // 'text' with \' and \\ escapes
  Null,     // _<digits>
  LParen,
  RParen,
  Comma,
  Dot,
  Amp,
  Arrow,
  Colon,
  Equals,
  LBracket,
  RBracket,
  End,
};

struct Token {
  Tok kind;
  std::string text;
};

inline bool is_word_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

inline std::vector<Token> tokenize(std::string_view line, std::size_t lineno,
                                   const std::string& source) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    char c = line[i];
    if (c == '%') break;
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    switch (c) {
      case '(': out.push_back({Tok::LParen, "("}); ++i; continue;
      case ')': out.push_back({Tok::RParen, ")"}); ++i; continue;
      case ',': out.push_back({Tok::Comma, ","}); ++i; continue;
      case '.': out.push_back({Tok::Dot, "."}); ++i; continue;
      case '&': out.push_back({Tok::Amp, "&"}); ++i; continue;
      case ':': out.push_back({Tok::Colon, ":"}); ++i; continue;
      case '=': out.push_back({Tok::Equals, "="}); ++i; continue;
      case '[': out.push_back({Tok::LBracket, "["}); ++i; continue;
      case ']': out.push_back({Tok::RBracket, "]"}); ++i; continue;
      default: break;
    }
    if (c == '-' && i + 1 < line.size() && line[i + 1] == '>') {
      out.push_back({Tok::Arrow, "->"});
      i += 2;
      continue;
    }
    if (c == '\'') {
      std::string text;
      ++i;
      bool closed = false;
      while (i < line.size()) {
        char d = line[i];
        if (d == '\\' && i + 1 < line.size()) {
          text.push_back(line[i + 1]);
          i += 2;
          continue;
        }
        if (d == '\'') {
          closed = true;
          ++i;
          break;
        }
        text.push_back(d);
        ++i;
      }
      if (!closed) throw ParseError("unterminated quoted constant", lineno, source);
      out.push_back({Tok::Quoted, std::move(text)});
      continue;
    }
    if (c == '_') {
      std::size_t j = i + 1;
      while (j < line.size() && std::isdigit(static_cast<unsigned char>(line[j]))) ++j;
      if (j == i + 1 || (j < line.size() && is_word_char(line[j])))
        throw ParseError("malformed null '" + std::string(line.substr(i, j - i + 1)) +
                             "' (expected _<positive integer>)",
                         lineno, source);
      out.push_back({Tok::Null, std::string(line.substr(i + 1, j - i - 1))});
      i = j;
      continue;
    }
    if (is_word_char(c)) {
      std::size_t j = i;
      while (j < line.size() && is_word_char(line[j])) ++j;
      out.push_back({Tok::Word, std::string(line.substr(i, j - i))});
      i = j;
      continue;
    }
    throw ParseError(std::string("unexpected character '") + c + "'", lineno, source);
  }
  out.push_back({Tok::End, ""});
  return out;
}

/// Cursor over one tokenized line.
class TokenStream {
 public:
  TokenStream(std::vector<Token> tokens, std::size_t lineno, const std::string& source)
      : tokens_(std::move(tokens)), lineno_(lineno), source_(source) {}

  const Token& peek() const { return tokens_[pos_]; }
  bool at(Tok kind) const { return peek().kind == kind; }
  bool at_end() const { return at(Tok::End); }

  Token next() {
    Token t = tokens_[pos_];
    if (t.kind != Tok::End) ++pos_;
    return t;
  }

  bool accept(Tok kind) {
    if (!at(kind)) return false;
    next();
    return true;
  }

  Token expect(Tok kind, const char* what) {
    if (!at(kind)) fail(std::string("expected ") + what + describe_found());
    return next();
  }

  [[noreturn]] void fail(const std::string& message) const {
    throw ParseError(message, lineno_, source_);
  }

  std::string describe_found() const {
    if (at_end()) return ", found end of line";
    return ", found '" + peek().text + "'";
  }

  std::size_t line() const { return lineno_; }
  const std::string& source() const { return source_; }

 private:
  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  std::size_t lineno_;
  const std::string& source_;
};

inline bool starts_upper(const std::string& s) {
  return !s.empty() && std::isupper(static_cast<unsigned char>(s[0]));
}

}  // namespace schemamap::detail
