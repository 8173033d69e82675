#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "axiotome/ast.hpp"
#include "axiotome/rewrite.hpp"
#include "axiotome/term.hpp"

namespace axiotome::testing {

// Truth-table semantics of the Boolean fragment, computed directly rather
// than by rewriting. nullopt for anything outside the fragment.
std::optional<bool> truth_value(const Term& term,
                                const std::map<std::string, bool>& vars = {});

// Every ground Boolean term of depth at most `depth` over not, and, or and
// optionally if.
std::vector<Term> boolean_terms(std::size_t depth, bool with_if);

// Plain breadth-first distance over successors(); nullopt if beyond
// `max_depth`.
std::optional<std::size_t> bfs_distance(const Term& from, const Term& to,
                                        const RewriteEnv& env,
                                        std::size_t max_depth);

// First axiom name, in registry order, that check_justified_step accepts.
std::optional<std::string> first_certifying_axiom(const Term& prev,
                                                  const Term& next,
                                                  const RewriteEnv& env);

}  // namespace axiotome::testing
