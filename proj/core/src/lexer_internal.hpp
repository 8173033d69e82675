#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "axiotome/syntax.hpp"

namespace axiotome {

struct LexResult {
  std::vector<Token> tokens;
  std::vector<std::string> eof_comments;
  std::vector<Diagnostic> diagnostics;
};

LexResult lex(std::string_view source, std::string_view source_name);

}  // namespace axiotome
