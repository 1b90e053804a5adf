// SPDX-License-Identifier: Apache-2.0

#include "inductor/lexer.hpp"

#include <array>
#include <cctype>
#include <utility>

namespace inductor {

namespace {

// Unicode glyphs the repair pass rewrites, UTF-8 encoded. Kept in one place
// so the lexer can offer the same mapping as a hint when it trips over a
// glyph that was not repaired (e.g. inside design sources).
struct GlyphRule {
  const char* glyph;
  const char* replacement;
};

constexpr std::array<GlyphRule, 14> kGlyphRules{{
    {"⇔", "<->"},  // ⇔
    {"↔", "<->"},  // ↔
    {"⇒", "->"},   // ⇒
    {"→", "->"},   // →
    {"¬", "!"},    // ¬
    {"∧", "&&"},   // ∧
    {"∨", "||"},   // ∨
    {"≠", "!="},   // ≠
    {"≡", "=="},   // ≡
    {" ", " "},    // non-breaking space
    {"‘", "'"},    // ‘
    {"’", "'"},    // ’
    {"“", "\""},   // “
    {"”", "\""},   // ”
}};

// Multi-character operators, longest first so greedy matching is correct.
constexpr std::array<const char*, 10> kLongPuncts{
    "|->", "<->", "##", "&&", "||", "==", "!=", "<=", ">=", "->",
};

size_t utf8Len(unsigned char lead) {
  if ((lead & 0xE0) == 0xC0) return 2;
  if ((lead & 0xF0) == 0xE0) return 3;
  if ((lead & 0xF8) == 0xF0) return 4;
  return 1;  // stray continuation byte; treat as one glyph
}

class Cursor {
 public:
  explicit Cursor(const std::string& text) : text_(text) {}

  bool done() const { return i_ >= text_.size(); }
  char peek(size_t ahead = 0) const {
    return i_ + ahead < text_.size() ? text_[i_ + ahead] : '\0';
  }
  bool startsWith(const char* s) const {
    return text_.compare(i_, std::char_traits<char>::length(s), s) == 0;
  }
  SourcePos pos() const { return {line_, col_}; }

  void advance(size_t n = 1) {
    for (size_t k = 0; k < n && i_ < text_.size(); ++k, ++i_) {
      if (text_[i_] == '\n') {
        ++line_;
        col_ = 1;
      } else {
        ++col_;
      }
    }
  }

 private:
  const std::string& text_;
  size_t i_ = 0;
  int line_ = 1;
  int col_ = 1;
};

bool isIdentStart(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool isIdentChar(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

uint64_t digitValue(char c) {
  if (c >= '0' && c <= '9') return static_cast<uint64_t>(c - '0');
  if (c >= 'a' && c <= 'f') return static_cast<uint64_t>(c - 'a' + 10);
  if (c >= 'A' && c <= 'F') return static_cast<uint64_t>(c - 'A' + 10);
  return ~uint64_t{0};
}

// Reads the digit run of a based literal and folds it into a value.
uint64_t readBasedDigits(Cursor& c, uint64_t base, SourcePos at) {
  uint64_t value = 0;
  bool any = false;
  while (!c.done()) {
    char ch = c.peek();
    if (ch == '_') {
      c.advance();
      continue;
    }
    uint64_t d = digitValue(ch);
    if (d == ~uint64_t{0} || d >= base) break;
    value = value * base + d;
    any = true;
    c.advance();
  }
  if (!any) throw SyntaxError(at, "digits after base specifier");
  return value;
}

}  // namespace

RepairResult repair_non_ascii(const std::string& text) {
  RepairResult out;
  out.text.reserve(text.size());
  int line = 1, col = 1;
  size_t i = 0;
  while (i < text.size()) {
    unsigned char b = static_cast<unsigned char>(text[i]);
    if (b < 0x80) {
      out.text.push_back(text[i]);
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
      ++i;
      continue;
    }
    size_t len = utf8Len(b);
    std::string glyph = text.substr(i, len);
    bool repaired = false;
    for (const auto& rule : kGlyphRules) {
      if (glyph == rule.glyph) {
        out.text += rule.replacement;
        out.notes.push_back(SourcePos{line, col}.str() + ": replaced '" +
                            glyph + "' with '" + rule.replacement + "'");
        repaired = true;
        break;
      }
    }
    if (!repaired) out.text += glyph;  // leave it; the lexer will complain
    ++col;
    i += len;
  }
  return out;
}

std::vector<Token> tokenize(const std::string& text) {
  std::vector<Token> out;
  Cursor c(text);
  while (!c.done()) {
    char ch = c.peek();

    if (ch == ' ' || ch == '\t' || ch == '\r' || ch == '\n') {
      c.advance();
      continue;
    }
    if (ch == '/' && c.peek(1) == '/') {
      while (!c.done() && c.peek() != '\n') c.advance();
      continue;
    }
    if (ch == '/' && c.peek(1) == '*') {
      SourcePos open = c.pos();
      c.advance(2);
      while (!c.done() && !(c.peek() == '*' && c.peek(1) == '/')) c.advance();
      if (c.done()) throw SyntaxError(open, "closing */");
      c.advance(2);
      continue;
    }

    if (static_cast<unsigned char>(ch) >= 0x80) {
      SourcePos at = c.pos();
      size_t len = utf8Len(static_cast<unsigned char>(ch));
      std::string glyph;
      for (size_t k = 0; k < len; ++k) glyph.push_back(c.peek(k));
      std::string hint;
      for (const auto& rule : kGlyphRules)
        if (glyph == rule.glyph) {
          hint = std::string("use '") + rule.replacement + "' instead";
          break;
        }
      throw NonAsciiOperator(at, glyph, hint);
    }

    Token t;
    t.pos = c.pos();

    if (isIdentStart(ch)) {
      t.kind = Token::Kind::Ident;
      while (isIdentChar(c.peek())) {
        t.text.push_back(c.peek());
        c.advance();
      }
      out.push_back(std::move(t));
      continue;
    }

    if (std::isdigit(static_cast<unsigned char>(ch)) || ch == '\'') {
      t.kind = Token::Kind::Number;
      uint64_t size = 0;
      bool have_size = false;
      while (std::isdigit(static_cast<unsigned char>(c.peek())) ||
             c.peek() == '_') {
        if (c.peek() != '_')
          size = size * 10 + static_cast<uint64_t>(c.peek() - '0');
        have_size = true;
        c.advance();
      }
      if (c.peek() == '\'') {
        c.advance();
        char base_ch = c.peek();
        uint64_t base;
        switch (base_ch) {
          case 'b': case 'B': base = 2; break;
          case 'd': case 'D': base = 10; break;
          case 'h': case 'H': base = 16; break;
          default: throw SyntaxError(c.pos(), "base specifier b, d or h");
        }
        c.advance();
        t.value = readBasedDigits(c, base, t.pos);
        t.width = have_size ? static_cast<int>(size) : 0;
        if (have_size && size == 0)
          throw SyntaxError(t.pos, "nonzero literal size");
      } else {
        if (!have_size) throw SyntaxError(t.pos, "number");
        t.value = size;
        t.width = 0;
      }
      t.text = "<number>";
      out.push_back(std::move(t));
      continue;
    }

    t.kind = Token::Kind::Punct;
    bool matched = false;
    for (const char* p : kLongPuncts) {
      if (c.startsWith(p)) {
        t.text = p;
        c.advance(t.text.size());
        matched = true;
        break;
      }
    }
    if (!matched) {
      static const std::string kSingles = "()[]{};,.:=~!&|^+-<>@#?*/%$";
      if (kSingles.find(ch) == std::string::npos)
        throw SyntaxError(t.pos, "valid token");
      t.text = std::string(1, ch);
      c.advance();
    }
    out.push_back(std::move(t));
  }

  Token eof;
  eof.kind = Token::Kind::Eof;
  eof.pos = c.pos();
  eof.text = "<eof>";
  out.push_back(std::move(eof));
  return out;
}

}  // namespace inductor
