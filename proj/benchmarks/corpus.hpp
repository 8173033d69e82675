#pragma once

#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "axiotome/rewrite.hpp"
#include "axiotome/typesys.hpp"
#include "axiotome/verifier.hpp"

namespace axiotome::bench {

std::string read_corpus(const std::string& name);

// Parses the named corpus files jointly; aborts on any error.
Registry load(const std::vector<std::string>& files,
              const std::map<std::string, std::string>& operators = {});

Registry boolean_library();

Term term(std::string_view text, const std::vector<std::string>& vars = {});

// Each var is bound to the nullary constructor of the named type.
RewriteEnv env(const Registry& registry,
               const std::vector<std::pair<std::string, std::string>>& bindings = {});

}  // namespace axiotome::bench
