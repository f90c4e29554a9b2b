#include "thermocalc/notation.hpp"

#include <cctype>
#include <optional>
#include <vector>

namespace thermocalc {

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  Game parse() {
    Game g = expr();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return g;
  }

 private:
  [[noreturn]] void fail(const std::string& message) const { throw ParseError(pos_, message); }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  std::optional<char> peek() {
    skip_space();
    if (pos_ == text_.size()) return std::nullopt;
    return text_[pos_];
  }

  void expect(char c) {
    if (peek() != c) {
      if (pos_ == text_.size()) fail(std::string("expected '") + c + "' but input ended");
      fail(std::string("expected '") + c + "'");
    }
    ++pos_;
  }

  Game expr() {
    Game g = term();
    for (;;) {
      auto c = peek();
      if (c == '+') {
        ++pos_;
        g = add(g, term());
      } else if (c == '-') {
        ++pos_;
        g = add(g, negate(term()));
      } else {
        return g;
      }
    }
  }

  Game term() {
    auto c = peek();
    if (!c) fail("expected a game but input ended");
    if (*c == '-') {
      ++pos_;
      return negate(term());
    }
    if (*c == '*') {
      ++pos_;
      return star();
    }
    if (*c == '(') {
      ++pos_;
      Game g = expr();
      expect(')');
      return g;
    }
    if (*c == '{') {
      ++pos_;
      std::vector<Game> left = list('|');
      expect('|');
      std::vector<Game> right = list('}');
      expect('}');
      return Game::make(std::move(left), std::move(right));
    }
    if (std::isdigit(static_cast<unsigned char>(*c))) return literal();
    fail("unexpected '" + std::string(1, *c) + "'");
  }

  std::vector<Game> list(char terminator) {
    std::vector<Game> out;
    if (peek() == terminator) return out;
    out.push_back(expr());
    while (peek() == ',') {
      ++pos_;
      out.push_back(expr());
    }
    return out;
  }

  Game literal() {
    const std::size_t start = pos_;
    auto digits = [&] {
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    };
    digits();
    if (pos_ < text_.size() && text_[pos_] == '/') {
      ++pos_;
      const std::size_t den_start = pos_;
      digits();
      if (pos_ == den_start) fail("expected a denominator");
    }
    const std::string_view token = text_.substr(start, pos_ - start);
    try {
      return number_to_game(Dyadic::parse(token));
    } catch (const DyadicParseError& e) {
      throw ParseError(start, e.what(), e.kind() == DyadicParseError::Kind::non_dyadic_denominator);
    }
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

void print(const Game& g, std::string& out) {
  if (g == star()) {
    out += '*';
    return;
  }
  if (auto x = as_number(g); x && number_to_game(*x) == g) {
    out += x->to_string();
    return;
  }
  out += '{';
  bool first = true;
  for (const auto& l : g.left_options()) {
    if (!first) out += ',';
    first = false;
    print(l, out);
  }
  out += '|';
  first = true;
  for (const auto& r : g.right_options()) {
    if (!first) out += ',';
    first = false;
    print(r, out);
  }
  out += '}';
}

}  // namespace

Game parse_expression(std::string_view text) { return Parser(text).parse(); }

std::string to_brace_notation(const Game& g) {
  std::string out;
  print(g, out);
  return out;
}

}  // namespace thermocalc
