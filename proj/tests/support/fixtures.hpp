#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "axiotome/ast.hpp"
#include "axiotome/diagnostics.hpp"
#include "axiotome/rewrite.hpp"
#include "axiotome/typesys.hpp"

namespace axiotome::testing {

std::string corpus_path(std::string_view name);
std::string read_text(const std::string& path);

// Every fixture listed in the corpus manifest, in manifest order.
std::vector<std::string> fixture_names();
std::vector<std::string> fixture_libs(const std::string& name);
std::map<std::string, std::string> fixture_operators(const std::string& name);

// Fixtures whose theorems verify as written.
inline const std::vector<std::string> kAcceptedTheoremFixtures = {
    "not_not_false.axm",          "and_left_false.axm",
    "de_morgan_corrected.axm",  "not_not_false_corrected.axm",
    "or_commutates.axm",        "and_commutates.axm",
    "triple_negation.axm",
};

struct Loaded {
  Program program;  // the fixture itself, without its libraries
  std::optional<Registry> registry;
  std::vector<Diagnostic> diagnostics;  // parse, registry and well-formedness

  std::vector<const TheoremDecl*> theorems() const;
  const Registry& reg() const { return *registry; }
};

// Parses a fixture with its manifest libraries and operators.
Loaded load_fixture(const std::string& name);

// Parses `extra` (may be empty) on top of the named corpus files.
Loaded load_sources(const std::vector<std::string>& corpus_files,
                    std::string_view extra = "",
                    const std::map<std::string, std::string>& operators = {});

// The Boolean library: types, not, and, or, if.
Loaded boolean_library(std::string_view extra = "");

// Parses a term and turns the named identifiers into metavariables.
Term term(std::string_view text, const std::vector<std::string>& vars = {});

RewriteEnv env_for(const Registry& registry,
                   const std::vector<std::pair<std::string, std::string>>&
                       bindings = {});

Justification via(std::string_view text);

// A justified step of a registered proof with the environment it is
// checked in.
struct Transition {
  Term prev;
  Term next;
  Justification via;
  RewriteEnv env;
  std::string where;  // theorem name and step index
};

std::vector<Transition> transitions(const TheoremEntry& theorem,
                                    const Registry& registry);

}  // namespace axiotome::testing
