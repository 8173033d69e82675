#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "axiotome/ast.hpp"
#include "axiotome/rewrite.hpp"
#include "axiotome/term.hpp"
#include "axiotome/verifier.hpp"

namespace axiotome {

struct SearchBudget {
  std::size_t max_depth = 4;       // chain length
  std::size_t max_nodes = 50'000;  // expanded terms per search
};

struct ChainLink {
  Term term;
  Justification via;
};

struct JustifiedChain {
  Term from;
  Term to;
  std::vector<ChainLink> steps;  // the last step's term is `to`
};

// One justified rewrite of a term.
struct Successor {
  Term term;
  Justification via;
};

// Every single-step successor, in the fixed preference order: axioms in
// registry order (forward, then backward, positions leftmost-outermost),
// case-range introduction and elimination, formulaic unfold and fold,
// earlier theorems, then pairs of axiom applications at disjoint positions.
std::vector<Successor> successors(const Term& term, const RewriteEnv& env);

struct InferOptions {
  bool allow_ranges = true;
};

// First justification, in preference order, that certifies prev -> next.
std::optional<Justification> infer_step_justification(
    const Term& prev, const Term& next, const RewriteEnv& env,
    const InferOptions& options = {});

// Shortest chain from `from` to `to` within the budget. Bidirectional
// iterative deepening; every link is re-checked before it is returned.
std::optional<JustifiedChain> fill_gap(const Term& from, const Term& to,
                                       const RewriteEnv& env,
                                       const SearchBudget& budget = {});

struct RepairResult {
  // The patched theorem, or the input when there was nothing to repair.
  std::optional<TheoremDecl> theorem;
  bool changed = false;
  // N-REPAIR-INSERTED / N-NOTHING-TO-REPAIR notes and irreparable findings.
  std::vector<Diagnostic> diagnostics;
};

// Splices justified chains over every unjustified run of `report`.
// Original step terms are kept; the patch must re-verify as accepted.
RepairResult repair_proof(const TheoremDecl& theorem,
                          const VerificationReport& report,
                          const Registry& registry,
                          const SearchBudget& budget = {});

}  // namespace axiotome
