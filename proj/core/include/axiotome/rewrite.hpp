#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "axiotome/ast.hpp"
#include "axiotome/diagnostics.hpp"
#include "axiotome/term.hpp"
#include "axiotome/typesys.hpp"

namespace axiotome {

// Metavariable name -> term. Kept in idempotent form: bound terms never
// mention a name bound by the same substitution.
using Substitution = std::map<std::string, Term>;

enum class RuleSource { kAxiom, kFormulaic, kTheorem, kCaseRange };
enum class Direction { kForward, kBackward };

struct RewriteRule {
  RuleSource source = RuleSource::kAxiom;
  std::string name;  // axiom, function or theorem name; empty for ranges
  Term lhs;
  Term rhs;
  Direction direction = Direction::kForward;
  // Case-range rules only: metavariable and its ground constructor term.
  std::vector<std::pair<std::string, Term>> binding_quantifiers;

  // The side that must match the input, and the side that replaces it.
  const Term& from() const {
    return direction == Direction::kForward ? lhs : rhs;
  }
  const Term& to() const {
    return direction == Direction::kForward ? rhs : lhs;
  }
  RewriteRule reversed() const;
};

// A case range in force: `∀var ∈ type`, with `type`'s nullary constructor.
struct CaseBinding {
  std::string var;
  TypeExpr type;
  Term constructor;
  friend bool operator==(const CaseBinding&, const CaseBinding&) = default;
};

// Everything a justification may refer to at one point of a proof.
struct RewriteEnv {
  const Registry* registry = nullptr;
  std::vector<CaseBinding> bindings;
  // Theorems with registry order below this limit may justify steps.
  std::size_t theorem_limit = 0;
  // Types of the metavariables in scope; lets search reject ill-typed gaps.
  std::map<std::string, TypeExpr> metavar_types;

  const CaseBinding* binding(std::string_view var) const;
  Substitution case_substitution() const;
};

struct RuleApplication {
  Position position;
  RewriteRule rule;
  Substitution substitution;
};

struct StepVerdict {
  bool justified = false;
  std::vector<RuleApplication> witness;
  std::optional<Diagnostic> failure;
};

std::optional<Substitution> match(const Term& pattern, const Term& subject);
// Extends `bindings`; fails on any conflict with an existing binding.
bool match_into(const Term& pattern, const Term& subject,
                Substitution& bindings);

Term apply_substitution(const Substitution& substitution, const Term& term);

// Results in leftmost-outermost order. Rules whose output side mentions a
// metavariable the input side does not bind produce nothing.
std::vector<std::pair<Position, Term>> enumerate_rewrites(
    const Term& term, const RewriteRule& rule);

// Forward-oriented rules a rule name denotes: one axiom, every axiom of an
// equational function, a formulaic function's unfolding, or a theorem.
// Empty if the name is unknown or not usable in `env`.
std::vector<RewriteRule> rules_named(const std::string& name,
                                     const RewriteEnv& env);

RewriteRule axiom_rule(const AxiomEntry& axiom);
RewriteRule unfold_rule(const FunctionDecl& function);
RewriteRule theorem_rule(const TheoremEntry& theorem);

// Whether `rule` (forward or backward) rewrites `prev` into `next` by one
// application at `position`, which must exist in both terms.
std::optional<RuleApplication> certify_at(const Term& prev, const Term& next,
                                          const Position& position,
                                          const RewriteRule& rule);

// Positions where prev and next begin to differ, in pre-order. Empty if
// the terms are equal.
std::vector<Position> difference_roots(const Term& prev, const Term& next);

StepVerdict check_justified_step(const Term& prev, const Term& next,
                                 const Justification& justification,
                                 const RewriteEnv& env);

// Case-range substitution for `ranges`, or a diagnostic when a range is not
// an active binding of `env`.
Result<Substitution> range_substitution(const std::vector<Quantifier>& ranges,
                                        const RewriteEnv& env);

}  // namespace axiotome
