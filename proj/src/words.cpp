#include "garside/words.hpp"

#include <algorithm>
#include <cctype>
#include <optional>
#include <vector>

namespace garside {

namespace {

enum class TokenKind { sigma, band, delta, literal, identity };

struct Token {
  TokenKind        kind;
  std::size_t      position;
  std::vector<int> values;  // sigma: {k}; band: {t, s}; literal: entries
  long             exponent = 1;
};

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) {}

  std::vector<Token> tokens() {
    std::vector<Token> out;
    while (true) {
      skip_separators();
      if (at_end()) return out;
      out.push_back(token());
    }
  }

 private:
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }

  void skip_separators() {
    while (!at_end() && (std::isspace(static_cast<unsigned char>(peek())) || peek() == '.')) {
      ++pos_;
    }
  }
  void skip_spaces() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }

  void expect(char c) {
    skip_spaces();
    if (peek() != c) {
      throw ParseError(std::string("expected '") + c + "'", pos_);
    }
    ++pos_;
  }

  long integer() {
    skip_spaces();
    const std::size_t start = pos_;
    bool              neg   = false;
    if (peek() == '-' || peek() == '+') {
      neg = peek() == '-';
      ++pos_;
    }
    if (!std::isdigit(static_cast<unsigned char>(peek()))) {
      throw ParseError("expected an integer", start);
    }
    long v = 0;
    while (std::isdigit(static_cast<unsigned char>(peek()))) {
      v = v * 10 + (peek() - '0');
      if (v > 1'000'000'000) throw ParseError("integer too large", start);
      ++pos_;
    }
    return neg ? -v : v;
  }

  long exponent() {
    if (peek() != '^') return 1;
    ++pos_;
    return integer();
  }

  Token token() {
    const std::size_t start = pos_;
    const char        c     = peek();
    Token             t{TokenKind::identity, start, {}, 1};
    if (c == 's') {
      ++pos_;
      if (!std::isdigit(static_cast<unsigned char>(peek()))) {
        throw ParseError("expected a generator index", pos_);
      }
      t.kind = TokenKind::sigma;
      t.values.push_back(static_cast<int>(integer()));
      t.exponent = exponent();
    } else if (c == 'a') {
      ++pos_;
      expect('(');
      t.kind = TokenKind::band;
      t.values.push_back(static_cast<int>(integer()));
      expect(',');
      t.values.push_back(static_cast<int>(integer()));
      expect(')');
      t.exponent = exponent();
    } else if (c == 'D') {
      ++pos_;
      t.kind     = TokenKind::delta;
      t.exponent = exponent();
    } else if (c == '[') {
      ++pos_;
      t.kind = TokenKind::literal;
      skip_spaces();
      while (peek() != ']') {
        if (at_end()) throw ParseError("unterminated literal", start);
        t.values.push_back(static_cast<int>(integer()));
        skip_spaces();
        if (peek() == ',') ++pos_;
        skip_spaces();
      }
      ++pos_;
      t.exponent = exponent();
    } else if (c == '1' || c == 'e') {
      ++pos_;
    } else {
      throw ParseError(std::string("unexpected character '") + c + "'", start);
    }
    const char next = peek();
    if (!at_end() && !std::isspace(static_cast<unsigned char>(next)) && next != '.') {
      throw ParseError("expected a separator", pos_);
    }
    return t;
  }

  std::string_view text_;
  std::size_t      pos_ = 0;
};

void append_power(std::vector<Letter>& word, const std::vector<Letter>& base, long e) {
  for (long i = 0; i < (e < 0 ? -e : e); ++i) {
    if (e > 0) {
      word.insert(word.end(), base.begin(), base.end());
    } else {
      for (auto it = base.rbegin(); it != base.rend(); ++it) {
        word.push_back({it->simple, -it->exponent});
      }
    }
  }
}

}  // namespace

Element parse_word(const BraidStructure& structure, std::string_view text) {
  std::vector<Letter> word;
  for (const auto& t : Lexer(text).tokens()) {
    try {
      switch (t.kind) {
        case TokenKind::sigma:
          append_power(word, structure.sigma_letters(t.values[0], 1), t.exponent);
          break;
        case TokenKind::band:
          append_power(word, structure.band_letters(t.values[0], t.values[1], 1),
                       t.exponent);
          break;
        case TokenKind::delta:
          append_power(word, {{structure.delta(), 1}}, t.exponent);
          break;
        case TokenKind::literal:
          append_power(word, {{structure.from_literal(t.values), 1}}, t.exponent);
          break;
        case TokenKind::identity:
          break;
      }
    } catch (const std::invalid_argument& e) {
      throw ParseError(e.what(), t.position);
    }
  }
  return left_normal_form(structure, word);
}

int infer_strands(std::string_view text) {
  int n = 2;
  for (const auto& t : Lexer(text).tokens()) {
    switch (t.kind) {
      case TokenKind::sigma: n = std::max(n, t.values[0] + 1); break;
      case TokenKind::band:
        n = std::max({n, t.values[0], t.values[1]});
        break;
      case TokenKind::literal: n = std::max(n, static_cast<int>(t.values.size())); break;
      default: break;
    }
  }
  return n;
}

std::string format_element(const BraidStructure& structure, const Element& x) {
  std::vector<std::string> parts;
  if (x.inf() == 1) {
    parts.push_back("D");
  } else if (x.inf() != 0) {
    parts.push_back("D^" + std::to_string(x.inf()));
  }
  for (const auto& f : x.factors()) parts.push_back(structure.word(f));
  if (parts.empty()) return "1";
  std::string out = parts.front();
  for (std::size_t i = 1; i < parts.size(); ++i) out += " . " + parts[i];
  return out;
}

nlohmann::json element_to_json(const BraidStructure& structure, const Element& x) {
  nlohmann::json factors = nlohmann::json::array();
  for (const auto& f : x.factors()) factors.push_back(structure.to_literal(f));
  return {{"p", x.inf()}, {"factors", factors}};
}

Element element_from_json(const BraidStructure& structure, const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("p") || !j.contains("factors") ||
      !j["p"].is_number_integer() || !j["factors"].is_array()) {
    throw std::invalid_argument("element JSON needs integer \"p\" and array \"factors\"");
  }
  std::vector<Simple> factors;
  for (const auto& f : j["factors"]) {
    factors.push_back(structure.from_literal(f.get<std::vector<int>>()));
  }
  return Element::from_factors(structure, j["p"].get<long>(), factors);
}

}  // namespace garside
