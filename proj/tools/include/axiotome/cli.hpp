#pragma once

#include <cstddef>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "axiotome/oracle.hpp"
#include "axiotome/search.hpp"

namespace axiotome::cli {

enum ExitCode : int { kClean = 0, kFindings = 1, kOperational = 2 };

struct Flags {
  bool strict = false;
  bool machine = false;
  bool color = false;
  SearchBudget search;
  std::size_t budget = kDefaultBudget;
  // Infix glyph -> function name, injected before parsing.
  std::map<std::string, std::string> operators;
  // Loaded ahead of the command's own paths; never written.
  std::vector<std::string> libs;
  bool in_place = false;
  bool check = false;
  std::optional<std::string> output;
};

// Parses `glyph=function`. Returns false on a malformed mapping.
bool add_operator(Flags& flags, const std::string& mapping);

int cmd_check(const std::vector<std::string>& paths, const Flags& flags,
              std::ostream& out, std::ostream& err);
int cmd_validate(const std::vector<std::string>& paths, const Flags& flags,
                 std::ostream& out, std::ostream& err);
int cmd_eval(const std::string& expression,
             const std::vector<std::string>& paths, const Flags& flags,
             std::ostream& out, std::ostream& err);
int cmd_fill(const std::string& path, const Flags& flags, std::ostream& out,
             std::ostream& err);
int cmd_fmt(const std::vector<std::string>& paths, const Flags& flags,
            std::ostream& out, std::ostream& err);

}  // namespace axiotome::cli
