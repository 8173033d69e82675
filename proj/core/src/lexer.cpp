#include <array>
#include <cstdint>

#include "axiotome/syntax.hpp"
#include "lexer_internal.hpp"

namespace axiotome {

namespace {

constexpr std::array<GlyphAlias, 6> kAliases{{
    {"≡", ":="},
    {"↔", "<->"},
    {"∀", "forall"},
    {"∈", "in"},
    {"∨", "\\/"},
    {"∧", "/\\"},
}};

constexpr std::array<std::string_view, 14> kKeywords{
    "type", "function", "allowing", "theorem", "proof",   "by",  "cases",
    "of",   "using",    "case",     "via",     "operator", "Product", "Sum"};

// Unicode symbols accepted verbatim (beyond the aliased ones).
constexpr std::array<std::string_view, 3> kExtraGlyphs{"∪", "²", "³"};

bool is_ascii_letter(char c) {
  return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z');
}
bool is_digit(char c) { return c >= '0' && c <= '9'; }

constexpr std::string_view kDegree = "°";
constexpr std::string_view kPilcrow = "¶";

class Lexer {
 public:
  Lexer(std::string_view source, std::string_view name)
      : src_(source), name_(name) {}

  LexResult run() {
    while (pos_ < src_.size()) {
      char c = src_[pos_];
      if (c == '\n') {
        advance(1);
        line_has_token_ = false;
        continue;
      }
      if (c == ' ' || c == '\t' || c == '\r') {
        advance(1);
        continue;
      }
      if (starts_with("//")) {
        line_comment();
        continue;
      }
      if (starts_with("/*")) {
        if (!block_comment()) break;
        continue;
      }
      lex_token();
    }
    LexResult out;
    out.tokens = std::move(tokens_);
    out.eof_comments = std::move(pending_);
    out.diagnostics = std::move(diagnostics_);
    return out;
  }

 private:
  bool starts_with(std::string_view s) const {
    return src_.substr(pos_, s.size()) == s;
  }

  // Advances `bytes` bytes, tracking line and code-point column.
  void advance(std::size_t bytes) {
    for (std::size_t end = pos_ + bytes; pos_ < end;) {
      if (src_[pos_] == '\n') {
        ++line_;
        column_ = 1;
        ++pos_;
        continue;
      }
      pos_ += utf8_length(static_cast<unsigned char>(src_[pos_]));
      ++column_;
    }
  }

  static std::size_t utf8_length(unsigned char lead) {
    if (lead < 0x80) return 1;
    if ((lead >> 5) == 0x6) return 2;
    if ((lead >> 4) == 0xE) return 3;
    if ((lead >> 3) == 0x1E) return 4;
    return 1;
  }

  Span span_here(int length) const {
    return Span{std::string(name_), line_, column_, length};
  }

  static std::string trim(std::string_view text) {
    std::size_t b = 0, e = text.size();
    while (b < e && (text[b] == ' ' || text[b] == '\t' || text[b] == '\r'))
      ++b;
    while (e > b && (text[e - 1] == ' ' || text[e - 1] == '\t' ||
                     text[e - 1] == '\r'))
      --e;
    return std::string(text.substr(b, e - b));
  }

  void add_comment(std::string text) {
    if (line_has_token_ && !tokens_.empty()) {
      auto& trailing = tokens_.back().trailing_comment;
      if (!trailing.empty()) trailing += ' ';
      trailing += text;
    } else {
      pending_.push_back(std::move(text));
    }
  }

  void line_comment() {
    std::size_t end = src_.find('\n', pos_);
    if (end == std::string_view::npos) end = src_.size();
    std::string text = trim(src_.substr(pos_ + 2, end - pos_ - 2));
    advance(end - pos_);
    add_comment(std::move(text));
  }

  bool block_comment() {
    Span start = span_here(2);
    std::size_t end = src_.find("*/", pos_ + 2);
    if (end == std::string_view::npos) {
      diagnostics_.push_back(
          make_error(Code::kSyntax, "unterminated block comment", start));
      advance(src_.size() - pos_);
      return false;
    }
    std::string text = trim(src_.substr(pos_ + 2, end - pos_ - 2));
    for (char& ch : text)
      if (ch == '\n') ch = ' ';
    bool had_token = line_has_token_;
    int line_before = line_;
    advance(end + 2 - pos_);
    line_has_token_ = had_token && line_ == line_before;
    add_comment(std::move(text));
    return true;
  }

  void push(TokenKind kind, std::string lexeme, Span span) {
    Token token;
    token.kind = kind;
    token.lexeme = std::move(lexeme);
    token.span = std::move(span);
    token.line_start = !line_has_token_;
    token.leading_comments = std::move(pending_);
    pending_.clear();
    tokens_.push_back(std::move(token));
    line_has_token_ = true;
  }

  // Name characters after the first letter; `.` -> `°` when allowed.
  std::string name_tail(bool dots_allowed, int& columns) {
    std::string out;
    while (pos_ < src_.size()) {
      char c = src_[pos_];
      if (is_ascii_letter(c) || is_digit(c)) {
        out += c;
        ++pos_;
        ++column_;
        ++columns;
      } else if (starts_with(kDegree)) {
        out += kDegree;
        pos_ += kDegree.size();
        ++column_;
        ++columns;
      } else if (dots_allowed && c == '.' && pos_ + 1 < src_.size() &&
                 (is_ascii_letter(src_[pos_ + 1]) ||
                  is_digit(src_[pos_ + 1]))) {
        out += kDegree;
        ++pos_;
        ++column_;
        ++columns;
      } else {
        break;
      }
    }
    return out;
  }

  void lex_token() {
    char c = src_[pos_];
    Span start = span_here(1);

    for (const auto& alias : kAliases) {
      if (starts_with(alias.unicode)) {
        advance(alias.unicode.size());
        push(TokenKind::kSymbol, std::string(alias.unicode), start);
        return;
      }
      bool word = is_ascii_letter(alias.ascii.front());
      if (!word && starts_with(alias.ascii)) {
        advance(alias.ascii.size());
        start.length = static_cast<int>(alias.ascii.size());
        push(TokenKind::kSymbol, std::string(alias.unicode), start);
        return;
      }
    }
    for (auto glyph : kExtraGlyphs) {
      if (starts_with(glyph)) {
        advance(glyph.size());
        push(TokenKind::kSymbol, std::string(glyph), start);
        return;
      }
    }

    if (c == '$' || starts_with(kPilcrow)) {
      bool axiom = c == '$';
      std::string prefix = axiom ? "$" : std::string(kPilcrow);
      advance(axiom ? 1 : kPilcrow.size());
      int columns = 1;
      if (pos_ >= src_.size() || !(is_ascii_letter(src_[pos_]) ||
                                   is_digit(src_[pos_]) ||
                                   starts_with(kDegree))) {
        diagnostics_.push_back(make_error(
            Code::kSyntax,
            std::string("expected a name after '") + prefix + "'", start));
        return;
      }
      std::string name = prefix + name_tail(true, columns);
      start.length = columns;
      push(axiom ? TokenKind::kAxiomName : TokenKind::kTheoremName,
           std::move(name), start);
      return;
    }

    if (is_ascii_letter(c)) {
      int columns = 0;
      std::string word = name_tail(false, columns);
      start.length = columns;
      for (const auto& alias : kAliases) {
        if (word == alias.ascii) {
          push(TokenKind::kSymbol, std::string(alias.unicode), start);
          return;
        }
      }
      for (auto keyword : kKeywords) {
        if (word == keyword) {
          push(TokenKind::kKeyword, std::move(word), start);
          return;
        }
      }
      push(TokenKind::kIdentifier, std::move(word), start);
      return;
    }

    if (is_digit(c)) {
      std::string digits;
      while (pos_ < src_.size() && is_digit(src_[pos_])) {
        digits += src_[pos_];
        advance(1);
      }
      start.length = static_cast<int>(digits.size());
      push(TokenKind::kNumber, std::move(digits), start);
      return;
    }

    static constexpr std::string_view kPunct = "()[],:;=.^";
    if (kPunct.find(c) != std::string_view::npos) {
      advance(1);
      push(TokenKind::kSymbol, std::string(1, c), start);
      return;
    }

    std::size_t len = utf8_length(static_cast<unsigned char>(c));
    std::string bad(src_.substr(pos_, len));
    diagnostics_.push_back(make_error(
        Code::kSyntax, "illegal character '" + bad + "'", start));
    advance(len);
  }

  std::string_view src_;
  std::string_view name_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int column_ = 1;
  bool line_has_token_ = false;
  std::vector<Token> tokens_;
  std::vector<std::string> pending_;
  std::vector<Diagnostic> diagnostics_;
};

}  // namespace

std::span<const GlyphAlias> glyph_aliases() { return kAliases; }

LexResult lex(std::string_view source, std::string_view source_name) {
  return Lexer(source, source_name).run();
}

Result<std::vector<Token>> tokenize(std::string_view source,
                                    std::string_view source_name) {
  LexResult result = lex(source, source_name);
  if (!result.diagnostics.empty()) return std::move(result.diagnostics);
  return std::move(result.tokens);
}

std::string normalize_rule_name(std::string_view name) {
  std::string out;
  for (char c : name) {
    if (c == '.')
      out += kDegree;
    else
      out += c;
  }
  return out;
}

}  // namespace axiotome
