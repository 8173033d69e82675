#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "axiotome/ast.hpp"
#include "axiotome/diagnostics.hpp"
#include "axiotome/term.hpp"

namespace axiotome {

enum class TokenKind {
  kKeyword,
  kIdentifier,
  kAxiomName,
  kTheoremName,
  kSymbol,
  kNumber,
};

struct Token {
  TokenKind kind = TokenKind::kSymbol;
  std::string lexeme;  // aliases already normalized to their Unicode form
  Span span;
  bool line_start = false;  // first token on its source line
  std::vector<std::string> leading_comments;
  std::string trailing_comment;
};

// Glyph table: Unicode spelling and its single ASCII alias.
struct GlyphAlias {
  std::string_view unicode;
  std::string_view ascii;
};
std::span<const GlyphAlias> glyph_aliases();

Result<std::vector<Token>> tokenize(std::string_view source,
                                    std::string_view source_name = "");

struct ParseOptions {
  // Infix glyph -> function name, in scope before any OperatorDecl.
  std::map<std::string, std::string> operators;
};

Result<Program> parse_program(std::string_view source,
                              std::string_view source_name = "",
                              const ParseOptions& options = {});

// A single term, e.g. a command-line expression.
Result<Term> parse_term(std::string_view source,
                        std::string_view source_name = "",
                        const ParseOptions& options = {});

std::string format(const Program& program);
std::string format(const Statement& statement);
std::string format(const Term& term);

// Axiom and theorem names with `.` separators are rewritten with `°`.
std::string normalize_rule_name(std::string_view name);

}  // namespace axiotome
