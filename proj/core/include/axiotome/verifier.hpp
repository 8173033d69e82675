#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "axiotome/ast.hpp"
#include "axiotome/diagnostics.hpp"
#include "axiotome/rewrite.hpp"
#include "axiotome/typesys.hpp"

namespace axiotome {

struct VerifyOptions {
  // Justifications that had to be inferred become errors.
  bool strict = false;
};

// Index of the case taken at each nesting level, outermost first.
using CasePath = std::vector<std::size_t>;

struct InferredJustification {
  CasePath case_path;
  int step = 0;
  Justification via;
};

// A maximal run of consecutive unjustified transitions: steps
// `first`..`last` of the linear proof at `case_path`.
struct FailureRun {
  CasePath case_path;
  int first = 0;
  int last = 0;
  std::vector<CaseBinding> bindings;
};

enum class Status { kAccepted, kRejected };

struct VerificationReport {
  std::string theorem;
  Status status = Status::kRejected;
  std::vector<Diagnostic> diagnostics;
  std::vector<InferredJustification> inferred;
  std::vector<FailureRun> failures;

  bool accepted() const { return status == Status::kAccepted; }
};

VerificationReport verify_theorem(const TheoremDecl& theorem,
                                  const Registry& registry,
                                  const VerifyOptions& options = {});

// Checks a linear proof of lhs ↔ rhs whose terms already have their
// metavariables bound.
std::vector<Diagnostic> verify_linear(const Term& lhs, const Term& rhs,
                                      const std::vector<ProofStep>& steps,
                                      const RewriteEnv& env,
                                      const VerifyOptions& options = {});

std::vector<Diagnostic> check_case_coverage(
    const Decomposition& decomposition,
    const std::vector<std::string>& subjects,
    const std::vector<CaseBlock>& cases, const Registry& registry);

struct CaseEntry {
  // Acceptable step-0 terms and final terms, unsubstituted first.
  std::vector<Term> premisses;
  std::vector<Term> endpoints;
  RewriteEnv env;  // with this case's ranges added to the bindings
  std::vector<Diagnostic> diagnostics;
};

CaseEntry enter_case(const CaseBlock& block, const ByCases& parent,
                     const Term& lhs, const Term& rhs, const RewriteEnv& env);

// The nullary constructor term of `type`, if it has one.
std::optional<Term> nullary_constructor(const TypeExpr& type,
                                        const Registry& registry);

// The linear proof reached by following `path` through nested cases.
const LinearProof* find_linear(const ProofBody& body, const CasePath& path);
LinearProof* find_linear(ProofBody& body, const CasePath& path);

}  // namespace axiotome
