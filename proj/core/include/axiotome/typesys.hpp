#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "axiotome/ast.hpp"
#include "axiotome/diagnostics.hpp"
#include "axiotome/term.hpp"

namespace axiotome {

struct AxiomEntry {
  Axiom axiom;  // lhs/rhs with metavariables bound
  std::string function;
  std::size_t order = 0;
  // Metavariable names of the axiom (parameters and annotated names).
  std::map<std::string, TypeExpr> metavar_types;
};

struct TheoremEntry {
  TheoremDecl decl;  // all terms with metavariables bound
  // Explicit quantifiers followed by implicit ones (case subjects that the
  // assertion uses without a `∀`).
  std::vector<Quantifier> quantifiers;
  std::vector<Quantifier> implicit;
  std::size_t order = 0;
};

struct ConstructorSignature {
  std::vector<std::string> type_params;
  std::vector<Field> fields;
  TypeExpr result_type;
};

struct TypingContext {
  std::map<std::string, TypeExpr> metavar_types;
  std::set<std::string> type_params;
};

// Immutable declaration registry built from a whole program.
class Registry {
 public:
  const TypeDecl* find_type(std::string_view name) const;
  const FunctionDecl* find_function(std::string_view name) const;
  const AxiomEntry* find_axiom(std::string_view name) const;
  const TheoremEntry* find_theorem(std::string_view name) const;
  std::optional<std::string> operator_function(std::string_view glyph) const;

  bool is_constructor(std::string_view name) const;
  bool is_term_head(std::string_view name) const;

  const std::vector<TypeDecl>& types() const { return types_; }
  const std::vector<FunctionDecl>& functions() const { return functions_; }
  const std::vector<AxiomEntry>& axioms() const { return axioms_; }
  const std::vector<TheoremEntry>& theorems() const { return theorems_; }
  const std::vector<OperatorDecl>& operators() const { return operators_; }

  // Formulaic bodies and axioms use bound metavariables; this is the
  // parameter name list of a function for rule construction.
  std::vector<std::string> parameter_names(const FunctionDecl& f) const;

 private:
  friend Result<Registry> build_registry(const Program& program);

  std::vector<TypeDecl> types_;
  std::vector<FunctionDecl> functions_;
  std::vector<AxiomEntry> axioms_;
  std::vector<TheoremEntry> theorems_;
  std::vector<OperatorDecl> operators_;
  std::map<std::string, std::size_t, std::less<>> type_index_;
  std::map<std::string, std::size_t, std::less<>> function_index_;
  std::map<std::string, std::size_t, std::less<>> axiom_index_;
  std::map<std::string, std::size_t, std::less<>> theorem_index_;
};

// Two passes: collect every name, then resolve bodies, so declarations may
// refer forward. Duplicate and unresolved names are diagnosed.
Result<Registry> build_registry(const Program& program);

std::vector<Diagnostic> check_well_formed(const Registry& registry);

Result<TypeExpr> infer_type(const Term& term, const TypingContext& ctx,
                            const Registry& registry);

bool conforms(const TypeExpr& sub, const TypeExpr& super,
              const Registry& registry);

Result<ConstructorSignature> constructor_signature(std::string_view name,
                                                   const Registry& registry);

// Binds the theorem's quantified and case-subject metavariables throughout
// its assertion and proof; case subjects without a quantifier become
// implicit quantifiers. `order` is left at zero.
TheoremEntry bind_theorem(const TheoremDecl& decl, const Registry& registry);

// Replaces nullary applications named in `names` by metavariables.
Term bind_metavars(const Term& term, const std::set<std::string>& names);

TypeExpr substitute_type(const TypeExpr& type,
                         const std::map<std::string, TypeExpr>& bindings);

// Smallest declared type every candidate conforms to, if any.
std::optional<TypeExpr> join_types(const std::vector<TypeExpr>& candidates,
                                   const Registry& registry);

}  // namespace axiotome
