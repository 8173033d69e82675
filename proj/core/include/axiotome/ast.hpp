#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "axiotome/diagnostics.hpp"
#include "axiotome/term.hpp"

namespace axiotome {

// Comments carried through parse and format. Like spans, trivia never
// affects AST equality.
struct Trivia {
  std::vector<std::string> leading;  // own-line comments before the node
  std::string trailing;              // comment at the end of the node's line

  friend bool operator==(const Trivia&, const Trivia&) { return true; }
};

struct Field {
  std::string label;
  TypeExpr type;
  friend bool operator==(const Field&, const Field&) = default;
};

struct ProductBody {
  std::vector<Field> fields;
  friend bool operator==(const ProductBody&, const ProductBody&) = default;
};

struct SumBody {
  std::vector<TypeExpr> summands;
  friend bool operator==(const SumBody&, const SumBody&) = default;
};

struct TypeDecl {
  std::string name;
  std::vector<std::string> params;
  std::variant<ProductBody, SumBody> body;
  Span span;
  Trivia trivia;

  bool is_product() const { return std::holds_alternative<ProductBody>(body); }
  bool is_sum() const { return std::holds_alternative<SumBody>(body); }
  const ProductBody& product() const { return std::get<ProductBody>(body); }
  const SumBody& sum() const { return std::get<SumBody>(body); }
  friend bool operator==(const TypeDecl&, const TypeDecl&) = default;
};

struct Param {
  std::string name;
  TypeExpr type;
  friend bool operator==(const Param&, const Param&) = default;
};

struct Axiom {
  std::string name;  // `$`-prefixed, `°`-separated
  Term lhs;
  Term rhs;
  std::map<std::string, TypeExpr> metavar_types;  // inline annotations
  Span span;
  Trivia trivia;
  friend bool operator==(const Axiom&, const Axiom&) = default;
};

struct Equational {
  std::vector<Axiom> axioms;
  friend bool operator==(const Equational&, const Equational&) = default;
};

struct Formulaic {
  Term body;
  friend bool operator==(const Formulaic&, const Formulaic&) = default;
};

struct FunctionDecl {
  std::string name;
  std::vector<std::string> type_params;
  std::vector<Param> params;
  TypeExpr return_type;
  std::variant<Equational, Formulaic> body;
  Span span;
  Trivia trivia;

  bool is_equational() const {
    return std::holds_alternative<Equational>(body);
  }
  const Equational& equational() const { return std::get<Equational>(body); }
  const Formulaic& formulaic() const { return std::get<Formulaic>(body); }
  friend bool operator==(const FunctionDecl&, const FunctionDecl&) = default;
};

struct OperatorDecl {
  std::string glyph;
  std::string function;
  Span span;
  Trivia trivia;
  friend bool operator==(const OperatorDecl&, const OperatorDecl&) = default;
};

// `∀a ∈ A`
struct Quantifier {
  std::string var;
  TypeExpr type;
  Span span;
  friend bool operator==(const Quantifier&, const Quantifier&) = default;
};

struct RuleRef {
  std::string name;  // `$ax°name`, `¶theorem`, or a function name
  Span span;
  friend bool operator==(const RuleRef&, const RuleRef&) = default;
};

// The `via` clause: rules (one, or a tuple) or case ranges.
struct Justification {
  std::vector<RuleRef> rules;
  std::vector<Quantifier> ranges;
  Span span;

  bool is_ranges() const { return !ranges.empty(); }
  friend bool operator==(const Justification&, const Justification&) = default;
};

std::string to_string(const Justification& justification);

struct ProofStep {
  int index = 0;
  Term term;
  std::optional<Justification> via;
  Span span;
  Trivia trivia;
  friend bool operator==(const ProofStep&, const ProofStep&) = default;
};

struct CaseBlock;

struct Decomposition {
  TypeExpr sum;
  std::vector<TypeExpr> summands;
  Span span;
  friend bool operator==(const Decomposition&, const Decomposition&) = default;
};

struct ByCases {
  std::vector<std::string> subjects;
  Decomposition decomposition;
  std::vector<CaseBlock> cases;
  Span span;
  Trivia trivia;
  friend bool operator==(const ByCases&, const ByCases&) = default;
};

struct LinearProof {
  std::vector<ProofStep> steps;
  friend bool operator==(const LinearProof&, const LinearProof&) = default;
};

using ProofBody = std::variant<LinearProof, ByCases>;

struct Assertion {
  Term lhs;
  Term rhs;
  friend bool operator==(const Assertion&, const Assertion&) = default;
};

struct CaseBlock {
  std::optional<std::string> label;
  std::vector<Quantifier> ranges;
  std::optional<Assertion> restated;
  // Boxed; ProofBody is recursive.
  std::shared_ptr<ProofBody> body;
  Span span;
  Trivia trivia;

  friend bool operator==(const CaseBlock& a, const CaseBlock& b);
};

struct TheoremDecl {
  std::string name;  // `¶`-prefixed
  std::vector<Quantifier> quantifiers;
  Term lhs;
  Term rhs;
  ProofBody proof;
  Span span;
  Trivia trivia;
  Trivia proof_trivia;  // comment on the `proof` line
  friend bool operator==(const TheoremDecl&, const TheoremDecl&) = default;
};

using Statement =
    std::variant<TypeDecl, FunctionDecl, OperatorDecl, TheoremDecl>;

const Span& statement_span(const Statement& statement);

struct Program {
  std::string source_name;
  std::vector<Statement> statements;
  std::vector<std::string> trailing_comments;

  friend bool operator==(const Program& a, const Program& b) {
    return a.statements == b.statements;
  }
};

// Concatenates programs in order; the result's source name is the first's.
Program merge_programs(const std::vector<Program>& programs);

// Every metavariable name bound anywhere in a proof by `proof by cases of`.
std::vector<std::string> case_subjects(const ProofBody& body);

}  // namespace axiotome
