#include "axiotome/oracle.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <unordered_map>
#include <unordered_set>

namespace axiotome {

namespace {

// Private matcher, independent of the rewrite engine.
using Bindings = std::map<std::string, Term>;

bool bind(const Term& pattern, const Term& subject, Bindings& out) {
  if (pattern.is_var()) {
    auto [it, inserted] = out.emplace(pattern.head(), subject);
    return inserted || it->second == subject;
  }
  if (subject.is_var() || pattern.head() != subject.head() ||
      pattern.args().size() != subject.args().size())
    return false;
  if (!pattern.type_args().empty() &&
      pattern.type_args() != subject.type_args())
    return false;
  for (std::size_t i = 0; i < pattern.args().size(); ++i)
    if (!bind(pattern.args()[i], subject.args()[i], out)) return false;
  return true;
}

std::optional<Term> instantiate(const Term& term, const Bindings& b) {
  if (term.is_var()) {
    auto it = b.find(term.head());
    if (it == b.end()) return std::nullopt;
    return it->second;
  }
  if (term.args().empty()) return term;
  std::vector<Term> args;
  for (const auto& arg : term.args()) {
    auto a = instantiate(arg, b);
    if (!a) return std::nullopt;
    args.push_back(std::move(*a));
  }
  return term.with_args(std::move(args));
}

Term instantiate_open(const Term& term, const Bindings& b) {
  if (term.is_var()) {
    auto it = b.find(term.head());
    return it == b.end() ? term : it->second;
  }
  if (term.is_ground()) return term;
  std::vector<Term> args;
  for (const auto& arg : term.args()) args.push_back(instantiate_open(arg, b));
  return term.with_args(std::move(args));
}

struct Directed {
  Term lhs;
  Term rhs;
};

class Rules {
 public:
  explicit Rules(const Registry& reg) {
    for (const auto& a : reg.axioms())
      if (!a.axiom.lhs.is_var())
        by_head_[a.axiom.lhs.head()].push_back({a.axiom.lhs, a.axiom.rhs});
    for (const auto& f : reg.functions()) {
      if (f.is_equational()) continue;
      std::vector<Term> params;
      for (const auto& p : f.params) params.push_back(Term::var(p.name));
      by_head_[f.name].push_back(
          {Term::apply(f.name, std::move(params)), f.formulaic().body});
    }
  }

  std::optional<Term> at_root(const Term& t) const {
    if (t.is_var()) return std::nullopt;
    auto it = by_head_.find(t.head());
    if (it == by_head_.end()) return std::nullopt;
    for (const auto& rule : it->second) {
      Bindings b;
      if (!bind(rule.lhs, t, b)) continue;
      if (auto out = instantiate(rule.rhs, b)) return out;
    }
    return std::nullopt;
  }

 private:
  std::unordered_map<std::string, std::vector<Directed>> by_head_;
};

std::optional<Term> step_outermost(const Term& t, const Rules& rules) {
  if (auto r = rules.at_root(t)) return r;
  for (std::size_t i = 0; i < t.args().size(); ++i) {
    if (auto r = step_outermost(t.args()[i], rules)) {
      std::vector<Term> args(t.args().begin(), t.args().end());
      args[i] = std::move(*r);
      return t.with_args(std::move(args));
    }
  }
  return std::nullopt;
}

// Leftmost-innermost: arguments left to right, then the root, until stable.
bool innermost(Term& t, const Rules& rules, std::size_t budget,
               std::size_t& steps) {
  for (;;) {
    if (!t.args().empty()) {
      std::vector<Term> args(t.args().begin(), t.args().end());
      bool changed = false;
      for (auto& arg : args) {
        Term before = arg;
        if (!innermost(arg, rules, budget, steps)) {
          t = t.with_args(std::move(args));
          return false;
        }
        changed = changed || arg != before;
      }
      if (changed) t = t.with_args(std::move(args));
    }
    auto r = rules.at_root(t);
    if (!r) return true;
    if (steps == budget) return false;
    t = std::move(*r);
    ++steps;
  }
}

NormalizationResult run(const Term& term, const Rules& rules,
                        std::size_t budget, Strategy strategy) {
  NormalizationResult out;
  out.normal_form = term;
  if (strategy == Strategy::kLeftmostInnermost) {
    out.exhausted_budget =
        !innermost(out.normal_form, rules, budget, out.steps);
    return out;
  }
  for (;;) {
    auto next = step_outermost(out.normal_form, rules);
    if (!next) break;
    if (out.steps == budget) {
      out.exhausted_budget = true;
      break;
    }
    out.normal_form = std::move(*next);
    ++out.steps;
  }
  return out;
}

class Enumerator {
 public:
  Enumerator(const Registry& reg, std::size_t cap) : reg_(reg), cap_(cap) {}

  bool enumerate(const TypeExpr& type, std::vector<Term>& out) {
    const TypeDecl* decl = reg_.find_type(type.name);
    if (!decl || decl->params.size() != type.args.size()) return false;
    for (const auto& arg : type.args)
      if (arg.is_symbolic() || !reg_.find_type(arg.name)) return false;
    std::string key = to_string(type);
    if (!visiting_.insert(key).second) return false;
    bool finite = decl->is_product() ? product(*decl, type, out)
                                     : sum(*decl, type, out);
    visiting_.erase(key);
    return finite;
  }

 private:
  std::map<std::string, TypeExpr> bindings(const TypeDecl& decl,
                                           const TypeExpr& type) {
    std::map<std::string, TypeExpr> b;
    for (std::size_t i = 0; i < decl.params.size(); ++i)
      b[decl.params[i]] = type.args[i];
    return b;
  }

  bool product(const TypeDecl& decl, const TypeExpr& type,
               std::vector<Term>& out) {
    auto b = bindings(decl, type);
    std::vector<std::vector<Term>> fields;
    std::size_t total = 1;
    for (const auto& field : decl.product().fields) {
      std::vector<Term> domain;
      if (!enumerate(substitute_type(field.type, b), domain)) return false;
      total *= domain.size();
      if (total > cap_) return false;
      fields.push_back(std::move(domain));
    }
    if (total == 0) return true;
    std::vector<std::size_t> index(fields.size(), 0);
    for (;;) {
      std::vector<Term> args;
      for (std::size_t i = 0; i < fields.size(); ++i)
        args.push_back(fields[i][index[i]]);
      out.push_back(Term::apply(decl.name, std::move(args), type.args));
      std::size_t i = fields.size();
      while (i > 0) {
        --i;
        if (++index[i] < fields[i].size()) break;
        index[i] = 0;
        if (i == 0) return true;
      }
      if (fields.empty()) return true;
    }
  }

  bool sum(const TypeDecl& decl, const TypeExpr& type, std::vector<Term>& out) {
    auto b = bindings(decl, type);
    std::unordered_set<Term, TermHash> seen(out.begin(), out.end());
    for (const auto& summand : decl.sum().summands) {
      std::vector<Term> domain;
      if (!enumerate(substitute_type(summand, b), domain)) return false;
      for (auto& t : domain)
        if (seen.insert(t).second) out.push_back(std::move(t));
      if (out.size() > cap_) return false;
    }
    return true;
  }

  const Registry& reg_;
  std::size_t cap_;
  std::set<std::string> visiting_;
};

std::string quantifier_text(const Quantifier& q) {
  return "∀" + q.var + " ∈ " + to_string(q.type);
}

}  // namespace

DomainEnumeration enumerable_domain(const TypeExpr& type,
                                    const Registry& registry,
                                    std::size_t cap) {
  DomainEnumeration out;
  out.type = type;
  std::vector<Term> inhabitants;
  out.finite = Enumerator(registry, cap).enumerate(type, inhabitants);
  if (out.finite) out.inhabitants = std::move(inhabitants);
  return out;
}

struct Normalizer::Index {
  Rules rules;
};

Normalizer::Normalizer(const Registry& registry)
    : index_(std::make_unique<Index>(Index{Rules(registry)})) {}
Normalizer::~Normalizer() = default;
Normalizer::Normalizer(Normalizer&&) noexcept = default;
Normalizer& Normalizer::operator=(Normalizer&&) noexcept = default;

NormalizationResult Normalizer::operator()(const Term& term,
                                           std::size_t budget,
                                           Strategy strategy) const {
  return run(term, index_->rules, budget, strategy);
}

NormalizationResult normalize(const Term& term, const Registry& registry,
                              std::size_t budget, Strategy strategy) {
  return run(term, Rules(registry), budget, strategy);
}

std::string_view verdict_name(ValidationVerdict::Kind kind) {
  switch (kind) {
    case ValidationVerdict::Kind::kValid:
      return "valid";
    case ValidationVerdict::Kind::kInvalid:
      return "invalid";
    case ValidationVerdict::Kind::kInconclusive:
      return "inconclusive";
  }
  return "inconclusive";
}

ValidationVerdict brute_force_validate(
    const std::vector<Quantifier>& quantifiers, const Term& lhs,
    const Term& rhs, const Registry& registry, std::size_t budget) {
  ValidationVerdict verdict;
  std::vector<std::vector<Term>> domains;
  for (const auto& q : quantifiers) {
    auto d = enumerable_domain(q.type, registry);
    if (!d.finite) {
      verdict.reason = quantifier_text(q) + " ranges over an infinite domain";
      return verdict;
    }
    if (d.inhabitants.empty()) {
      verdict.kind = ValidationVerdict::Kind::kValid;
      return verdict;
    }
    domains.push_back(std::move(d.inhabitants));
  }

  Rules rules(registry);
  std::vector<std::size_t> index(domains.size(), 0);
  for (;;) {
    Bindings b;
    for (std::size_t i = 0; i < domains.size(); ++i)
      b[quantifiers[i].var] = domains[i][index[i]];
    auto l = instantiate_open(lhs, b);
    auto r = instantiate_open(rhs, b);
    ++verdict.assignments;
    auto nl = run(l, rules, budget, Strategy::kLeftmostOutermost);
    auto nr = run(r, rules, budget, Strategy::kLeftmostOutermost);
    if (nl.exhausted_budget || nr.exhausted_budget) {
      verdict.kind = ValidationVerdict::Kind::kInconclusive;
      verdict.reason = "normalization budget of " + std::to_string(budget) +
                       " steps exhausted";
      return verdict;
    }
    if (!nl.normal_form.is_ground() || !nr.normal_form.is_ground()) {
      verdict.kind = ValidationVerdict::Kind::kInconclusive;
      verdict.reason = "the assertion mentions unquantified metavariables";
      return verdict;
    }
    if (nl.normal_form != nr.normal_form) {
      verdict.kind = ValidationVerdict::Kind::kInvalid;
      for (std::size_t i = 0; i < domains.size(); ++i)
        verdict.counterexample.emplace_back(quantifiers[i].var,
                                            domains[i][index[i]]);
      return verdict;
    }
    std::size_t i = domains.size();
    bool done = true;
    while (i > 0) {
      --i;
      if (++index[i] < domains[i].size()) {
        done = false;
        break;
      }
      index[i] = 0;
    }
    if (done) break;
  }
  verdict.kind = ValidationVerdict::Kind::kValid;
  return verdict;
}

}  // namespace axiotome
