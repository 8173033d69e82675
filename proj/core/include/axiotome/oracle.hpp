#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "axiotome/ast.hpp"
#include "axiotome/term.hpp"
#include "axiotome/typesys.hpp"

namespace axiotome {

struct DomainEnumeration {
  TypeExpr type;
  std::vector<Term> inhabitants;  // empty unless finite
  bool finite = false;
};

// Finite iff the constructor graph below `type` is acyclic and every field
// type is finite. Enumeration gives up (reports infinite) past `cap`.
DomainEnumeration enumerable_domain(const TypeExpr& type,
                                    const Registry& registry,
                                    std::size_t cap = 100'000);

enum class Strategy { kLeftmostOutermost, kLeftmostInnermost };

struct NormalizationResult {
  Term normal_form;
  std::size_t steps = 0;
  bool exhausted_budget = false;
};

inline constexpr std::size_t kDefaultBudget = 10'000;

// Rule index built once per registry, for normalizing many terms.
class Normalizer {
 public:
  explicit Normalizer(const Registry& registry);
  ~Normalizer();
  Normalizer(Normalizer&&) noexcept;
  Normalizer& operator=(Normalizer&&) noexcept;

  NormalizationResult operator()(
      const Term& term, std::size_t budget = kDefaultBudget,
      Strategy strategy = Strategy::kLeftmostOutermost) const;

 private:
  struct Index;
  std::unique_ptr<Index> index_;
};

// Rewrites with axioms left to right and formulaic definitions unfolded,
// one redex at a time, until no redex remains or the budget is spent.
NormalizationResult normalize(
    const Term& term, const Registry& registry,
    std::size_t budget = kDefaultBudget,
    Strategy strategy = Strategy::kLeftmostOutermost);

struct ValidationVerdict {
  enum class Kind { kValid, kInvalid, kInconclusive };
  Kind kind = Kind::kInconclusive;
  // For kInvalid: the first failing assignment in lexicographic order.
  std::vector<std::pair<std::string, Term>> counterexample;
  std::string reason;  // for kInconclusive
  std::size_t assignments = 0;  // assignments checked

  bool valid() const { return kind == Kind::kValid; }
};

std::string_view verdict_name(ValidationVerdict::Kind kind);

// Checks lhs ↔ rhs under every assignment of inhabitants to the quantified
// metavariables by comparing normal forms. The terms must have their
// quantified metavariables bound.
ValidationVerdict brute_force_validate(const std::vector<Quantifier>& quantifiers,
                                       const Term& lhs, const Term& rhs,
                                       const Registry& registry,
                                       std::size_t budget = kDefaultBudget);

}  // namespace axiotome
