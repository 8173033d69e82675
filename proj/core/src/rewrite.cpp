#include "axiotome/rewrite.hpp"

#include <algorithm>
#include <functional>

namespace axiotome {

RewriteRule RewriteRule::reversed() const {
  RewriteRule out = *this;
  out.direction = direction == Direction::kForward ? Direction::kBackward
                                                   : Direction::kForward;
  return out;
}

const CaseBinding* RewriteEnv::binding(std::string_view var) const {
  for (auto it = bindings.rbegin(); it != bindings.rend(); ++it)
    if (it->var == var) return &*it;
  return nullptr;
}

Substitution RewriteEnv::case_substitution() const {
  Substitution out;
  for (const auto& b : bindings) out[b.var] = b.constructor;
  return out;
}

// --- matching ---------------------------------------------------------------

bool match_into(const Term& pattern, const Term& subject,
                Substitution& bindings) {
  if (pattern.is_var()) {
    auto [it, inserted] = bindings.emplace(pattern.head(), subject);
    return inserted || it->second == subject;
  }
  if (subject.is_var() || pattern.head() != subject.head() ||
      pattern.args().size() != subject.args().size())
    return false;
  if (!pattern.type_args().empty() &&
      pattern.type_args() != subject.type_args())
    return false;
  for (std::size_t i = 0; i < pattern.args().size(); ++i)
    if (!match_into(pattern.args()[i], subject.args()[i], bindings))
      return false;
  return true;
}

std::optional<Substitution> match(const Term& pattern, const Term& subject) {
  Substitution out;
  if (!match_into(pattern, subject, out)) return std::nullopt;
  return out;
}

Term apply_substitution(const Substitution& substitution, const Term& term) {
  if (substitution.empty() || term.is_ground()) return term;
  if (term.is_var()) {
    auto it = substitution.find(term.head());
    return it == substitution.end() ? term : it->second;
  }
  std::vector<Term> args;
  args.reserve(term.args().size());
  for (const auto& arg : term.args())
    args.push_back(apply_substitution(substitution, arg));
  return term.with_args(std::move(args));
}

namespace {

bool binds_all(const Substitution& s, const Term& term) {
  std::vector<std::string> vars;
  term.collect_vars(vars);
  return std::all_of(vars.begin(), vars.end(),
                     [&s](const std::string& v) { return s.count(v) > 0; });
}

std::string range_text(const Quantifier& q) {
  return "∀" + q.var + " ∈ " + to_string(q.type);
}

std::string describe_rule(const std::string& name, const Registry& reg) {
  if (!name.empty() && name.front() == '$') return "axiom " + name;
  if (name.rfind("¶", 0) == 0) return "theorem " + name;
  if (reg.find_function(name)) return "function " + name;
  return "theorem ¶" + name;
}

void collect_prefixes(const Position& p, std::vector<Position>& out) {
  Position prefix;
  out.push_back(prefix);
  for (std::size_t step : p.path) {
    prefix.path.push_back(step);
    out.push_back(prefix);
  }
}

Position common_prefix(const std::vector<Position>& positions) {
  Position out = positions.front();
  for (const auto& p : positions) {
    std::size_t n = 0;
    while (n < out.path.size() && n < p.path.size() &&
           out.path[n] == p.path[n])
      ++n;
    out.path.resize(n);
  }
  return out;
}

void difference_rec(const Term& a, const Term& b, Position& at,
                    std::vector<Position>& out) {
  if (a == b) return;
  if (a.kind() != b.kind() || a.head() != b.head() ||
      a.args().size() != b.args().size() || a.type_args() != b.type_args()) {
    out.push_back(at);
    return;
  }
  for (std::size_t i = 0; i < a.args().size(); ++i) {
    at.path.push_back(i);
    difference_rec(a.args()[i], b.args()[i], at, out);
    at.path.pop_back();
  }
}

StepVerdict fail(Code code, std::string message, const Span& span) {
  StepVerdict v;
  v.failure = make_error(code, std::move(message), span);
  return v;
}

StepVerdict check_ranges(const Term& prev, const Term& next,
                         const Justification& j, const RewriteEnv& env) {
  std::string text = j.ranges.size() == 1 ? range_text(j.ranges.front())
                                          : to_string(j);
  auto sigma = range_substitution(j.ranges, env);
  if (!sigma) {
    auto d = sigma.errors().front();
    d.span = j.span;
    StepVerdict v;
    v.failure = d;
    return v;
  }
  std::vector<std::string> vars;
  prev.collect_vars(vars);
  next.collect_vars(vars);
  bool mentioned = std::any_of(j.ranges.begin(), j.ranges.end(),
                               [&vars](const Quantifier& q) {
                                 return std::find(vars.begin(), vars.end(),
                                                  q.var) != vars.end();
                               });
  if (!mentioned)
    return fail(Code::kUnjustifiedStep,
                "case range " + text + " names no metavariable of " +
                    to_string(prev) + " or " + to_string(next),
                j.span);

  RewriteRule rule;
  rule.source = RuleSource::kCaseRange;
  for (const auto& [var, constructor] : *sigma) {
    rule.binding_quantifiers.emplace_back(var, constructor);
  }
  if (prev != next) {
    if (apply_substitution(*sigma, prev) == next) {
      StepVerdict v;
      v.justified = true;
      v.witness.push_back({Position{}, rule, *sigma});
      return v;
    }
    if (apply_substitution(*sigma, next) == prev) {
      rule.direction = Direction::kBackward;
      StepVerdict v;
      v.justified = true;
      v.witness.push_back({Position{}, rule, *sigma});
      return v;
    }
  }
  return fail(Code::kUnjustifiedStep,
              "case range " + text + " does not relate " + to_string(prev) +
                  " and " + to_string(next),
              j.span);
}

}  // namespace

std::vector<std::pair<Position, Term>> enumerate_rewrites(
    const Term& term, const RewriteRule& rule) {
  std::vector<std::pair<Position, Term>> out;
  for (const auto& p : term.positions()) {
    auto s = match(rule.from(), term.at(p));
    if (!s || !binds_all(*s, rule.to())) continue;
    out.emplace_back(p, term.replace_at(p, apply_substitution(*s, rule.to())));
  }
  return out;
}

RewriteRule axiom_rule(const AxiomEntry& axiom) {
  RewriteRule r;
  r.source = RuleSource::kAxiom;
  r.name = axiom.axiom.name;
  r.lhs = axiom.axiom.lhs;
  r.rhs = axiom.axiom.rhs;
  return r;
}

RewriteRule unfold_rule(const FunctionDecl& function) {
  RewriteRule r;
  r.source = RuleSource::kFormulaic;
  r.name = function.name;
  std::vector<Term> params;
  for (const auto& p : function.params) params.push_back(Term::var(p.name));
  r.lhs = Term::apply(function.name, std::move(params));
  r.rhs = function.formulaic().body;
  return r;
}

RewriteRule theorem_rule(const TheoremEntry& theorem) {
  RewriteRule r;
  r.source = RuleSource::kTheorem;
  r.name = theorem.decl.name;
  r.lhs = theorem.decl.lhs;
  r.rhs = theorem.decl.rhs;
  return r;
}

std::vector<RewriteRule> rules_named(const std::string& name,
                                     const RewriteEnv& env) {
  const Registry& reg = *env.registry;
  std::vector<RewriteRule> out;
  if (!name.empty() && name.front() == '$') {
    if (const AxiomEntry* a = reg.find_axiom(name)) out.push_back(axiom_rule(*a));
    return out;
  }
  if (name.rfind("¶", 0) != 0) {
    if (const FunctionDecl* f = reg.find_function(name)) {
      if (f->is_equational()) {
        for (const auto& a : reg.axioms())
          if (a.function == f->name) out.push_back(axiom_rule(a));
      } else {
        out.push_back(unfold_rule(*f));
      }
      return out;
    }
  }
  std::string theorem = name.rfind("¶", 0) == 0 ? name : "¶" + name;
  if (const TheoremEntry* t = reg.find_theorem(theorem))
    if (t->order < env.theorem_limit) out.push_back(theorem_rule(*t));
  return out;
}

std::optional<RuleApplication> certify_at(const Term& prev, const Term& next,
                                          const Position& position,
                                          const RewriteRule& rule) {
  if (!prev.has_position(position) || !next.has_position(position))
    return std::nullopt;
  const Term& a = prev.at(position);
  const Term& b = next.at(position);
  for (Direction d : {Direction::kForward, Direction::kBackward}) {
    RewriteRule oriented = rule;
    oriented.direction = d;
    Substitution s;
    if (match_into(oriented.from(), a, s) && match_into(oriented.to(), b, s))
      return RuleApplication{position, oriented, s};
  }
  return std::nullopt;
}

std::vector<Position> difference_roots(const Term& prev, const Term& next) {
  std::vector<Position> out;
  Position at;
  difference_rec(prev, next, at, out);
  return out;
}

Result<Substitution> range_substitution(const std::vector<Quantifier>& ranges,
                                        const RewriteEnv& env) {
  Substitution out;
  for (const auto& q : ranges) {
    const CaseBinding* b = env.binding(q.var);
    if (!b || !(b->type == q.type))
      return make_error(Code::kUnjustifiedStep,
                        "case range " + range_text(q) + " is not in force here",
                        q.span);
    out[q.var] = b->constructor;
  }
  return out;
}

StepVerdict check_justified_step(const Term& prev, const Term& next,
                                 const Justification& justification,
                                 const RewriteEnv& env) {
  if (justification.is_ranges())
    return check_ranges(prev, next, justification, env);

  const auto& refs = justification.rules;
  std::vector<std::vector<RewriteRule>> rule_sets;
  for (const auto& ref : refs) {
    auto rules = rules_named(ref.name, env);
    if (rules.empty()) {
      std::string message = "unknown rule '" + ref.name + "'";
      std::string theorem =
          ref.name.rfind("¶", 0) == 0 ? ref.name : "¶" + ref.name;
      if (ref.name.front() != '$' && env.registry->find_theorem(theorem))
        message = "theorem " + theorem +
                  " cannot justify a step before it is stated";
      return fail(Code::kUnknownRule, message,
                  ref.span.valid() ? ref.span : justification.span);
    }
    rule_sets.push_back(std::move(rules));
  }

  auto diffs = difference_roots(prev, next);
  std::string subject = to_string(prev);
  std::string object = to_string(next);

  if (refs.size() == 1) {
    std::string what = describe_rule(refs.front().name, *env.registry);
    if (diffs.empty())
      return fail(Code::kUnjustifiedStep,
                  what + " cannot justify repeating " + subject,
                  justification.span);
    std::vector<Position> candidates;
    collect_prefixes(common_prefix(diffs), candidates);
    for (const auto& p : candidates) {
      for (const auto& rule : rule_sets.front()) {
        if (auto app = certify_at(prev, next, p, rule)) {
          StepVerdict v;
          v.justified = true;
          v.witness.push_back(std::move(*app));
          return v;
        }
      }
    }
    return fail(Code::kUnjustifiedStep,
                what + " does not transform " + subject + " into " + object,
                justification.span);
  }

  std::string what = "rules " + to_string(justification);
  if (diffs.empty())
    return fail(Code::kUnjustifiedStep,
                what + " cannot justify repeating " + subject,
                justification.span);

  std::vector<Position> candidates;
  for (const auto& d : diffs) collect_prefixes(d, candidates);
  std::sort(candidates.begin(), candidates.end());
  candidates.erase(std::unique(candidates.begin(), candidates.end()),
                   candidates.end());

  // certs[i][c]: application of tuple element i at candidate c, if any.
  std::vector<std::vector<std::optional<RuleApplication>>> certs(refs.size());
  for (std::size_t i = 0; i < refs.size(); ++i) {
    certs[i].resize(candidates.size());
    for (std::size_t c = 0; c < candidates.size(); ++c) {
      for (const auto& rule : rule_sets[i]) {
        if (auto app = certify_at(prev, next, candidates[c], rule)) {
          certs[i][c] = std::move(app);
          break;
        }
      }
    }
  }

  std::vector<std::size_t> chosen;
  std::function<bool(std::size_t)> assign = [&](std::size_t i) -> bool {
    if (i == refs.size()) {
      return std::all_of(diffs.begin(), diffs.end(), [&](const Position& d) {
        return std::any_of(chosen.begin(), chosen.end(), [&](std::size_t c) {
          return candidates[c].is_prefix_of(d);
        });
      });
    }
    for (std::size_t c = 0; c < candidates.size(); ++c) {
      if (!certs[i][c]) continue;
      bool disjoint = std::all_of(chosen.begin(), chosen.end(),
                                  [&](std::size_t o) {
                                    return candidates[o].disjoint_from(
                                        candidates[c]);
                                  });
      if (!disjoint) continue;
      chosen.push_back(c);
      if (assign(i + 1)) return true;
      chosen.pop_back();
    }
    return false;
  };
  if (assign(0)) {
    StepVerdict v;
    v.justified = true;
    for (std::size_t i = 0; i < chosen.size(); ++i)
      v.witness.push_back(*certs[i][chosen[i]]);
    return v;
  }
  return fail(Code::kUnjustifiedStep,
              what + " do not transform " + subject + " into " + object,
              justification.span);
}

}  // namespace axiotome
