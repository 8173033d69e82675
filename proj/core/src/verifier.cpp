#include "axiotome/verifier.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "axiotome/search.hpp"

namespace axiotome {

namespace {

std::string range_text(const Quantifier& q) {
  return "∀" + q.var + " ∈ " + to_string(q.type);
}

std::string ranges_text(const std::vector<Quantifier>& ranges) {
  std::string out;
  for (std::size_t i = 0; i < ranges.size(); ++i)
    out += (i ? ", " : "") + range_text(ranges[i]);
  return out;
}

// `term`, then `term` under each growing prefix of `bindings`.
std::vector<Term> substituted_forms(const Term& term,
                                    const std::vector<CaseBinding>& bindings) {
  std::vector<Term> out{term};
  Substitution s;
  for (const auto& b : bindings) {
    s[b.var] = b.constructor;
    Term t = apply_substitution(s, term);
    if (std::find(out.begin(), out.end(), t) == out.end()) out.push_back(t);
  }
  return out;
}

bool contains(const std::vector<Term>& terms, const Term& t) {
  return std::find(terms.begin(), terms.end(), t) != terms.end();
}

struct Sink {
  std::vector<Diagnostic> diagnostics;
  std::vector<InferredJustification> inferred;
  std::vector<FailureRun> failures;
};

struct LinearInput {
  const std::vector<ProofStep>* steps;
  std::vector<Term> premisses;
  std::vector<Term> endpoints;
  const RewriteEnv* env;
  CasePath path;
  std::string case_note;  // empty outside cases
  Span case_span;
};

void check_linear(const LinearInput& in, const VerifyOptions& options,
                  Sink& sink) {
  const auto& steps = *in.steps;
  const RewriteEnv& env = *in.env;
  const Registry& reg = *env.registry;
  auto& out = sink.diagnostics;
  auto with_case = [&in](Diagnostic d) {
    if (!in.case_note.empty()) d.related.push_back({in.case_span, in.case_note});
    return d;
  };

  if (steps.empty()) {
    out.push_back(with_case(make_error(Code::kPremissMismatch,
                                       "proof has no steps", in.case_span)));
    return;
  }

  for (std::size_t i = 0; i < steps.size(); ++i) {
    if (steps[i].index != static_cast<int>(i)) {
      out.push_back(with_case(make_error(
          Code::kStepNumbering,
          "step numbered " + std::to_string(steps[i].index) + " where " +
              std::to_string(i) + " was expected",
          steps[i].span)));
      break;
    }
  }

  TypingContext typing;
  typing.metavar_types = env.metavar_types;
  for (const auto& step : steps) {
    auto t = infer_type(step.term, typing, reg);
    if (!t)
      for (auto d : t.errors()) {
        if (!d.span.valid()) d.span = step.span;
        out.push_back(with_case(std::move(d)));
      }
  }

  const ProofStep& first = steps.front();
  if (first.via)
    out.push_back(with_case(make_error(Code::kPremissMismatch,
                                       "the premiss needs no justification",
                                       first.via->span)));
  if (!contains(in.premisses, first.term))
    out.push_back(with_case(make_error(
        Code::kPremissMismatch,
        "premiss " + to_string(first.term) + " is not the left-hand side " +
            to_string(in.premisses.front()),
        first.span)));

  const Severity inferred_severity =
      options.strict ? Severity::kError : Severity::kWarning;
  auto inferred = [&](const ProofStep& step, const Justification& via,
                      std::string message, const Span& span) {
    Diagnostic d = make_warning(Code::kInferredVia, std::move(message), span);
    d.severity = inferred_severity;
    out.push_back(with_case(std::move(d)));
    sink.inferred.push_back({in.path, step.index, via});
  };

  struct Failed {
    int step;
    Diagnostic diagnostic;
  };
  std::vector<Failed> failed;

  for (std::size_t i = 1; i < steps.size(); ++i) {
    const Term& prev = steps[i - 1].term;
    const Term& next = steps[i].term;
    const ProofStep& step = steps[i];
    if (!step.via) {
      if (auto j = infer_step_justification(prev, next, env)) {
        inferred(step, *j,
                 "step " + std::to_string(i) +
                     " has no justification; inferred " + to_string(*j),
                 step.span);
        continue;
      }
      failed.push_back({static_cast<int>(i),
                        make_error(Code::kUnjustifiedStep,
                                   "no single rule transforms " +
                                       to_string(prev) + " into " +
                                       to_string(next),
                                   step.span)});
      continue;
    }
    StepVerdict v = check_justified_step(prev, next, *step.via, env);
    if (v.justified) continue;
    if (v.failure->code == Code::kUnknownRule) {
      out.push_back(with_case(*v.failure));
      continue;
    }
    if (step.via->is_ranges()) {
      // A range step that also evaluates: accept when the substituted terms
      // are one rewrite apart.
      auto sigma = range_substitution(step.via->ranges, env);
      if (sigma) {
        Term sp = apply_substitution(*sigma, prev);
        Term sn = apply_substitution(*sigma, next);
        InferOptions no_ranges;
        no_ranges.allow_ranges = false;
        if (sp != sn) {
          if (auto j = infer_step_justification(sp, sn, env, no_ranges)) {
            Justification combined = *j;
            inferred(step, combined,
                     "case range " + ranges_text(step.via->ranges) +
                         " does not relate " + to_string(prev) + " and " +
                         to_string(next) + " directly; after substitution " +
                         to_string(*j) + " transforms " + to_string(sp) +
                         " into " + to_string(sn),
                     step.via->span);
            continue;
          }
        }
      }
    }
    failed.push_back({static_cast<int>(i), *v.failure});
  }

  for (std::size_t k = 0; k < failed.size();) {
    std::size_t e = k;
    while (e + 1 < failed.size() && failed[e + 1].step == failed[e].step + 1)
      ++e;
    Diagnostic d = failed[k].diagnostic;
    for (std::size_t m = k + 1; m <= e; ++m)
      d.related.push_back({failed[m].diagnostic.span,
                           "step " + std::to_string(failed[m].step) +
                               " is also unjustified: " +
                               failed[m].diagnostic.message});
    out.push_back(with_case(std::move(d)));
    sink.failures.push_back(
        {in.path, failed[k].step, failed[e].step, env.bindings});
    k = e + 1;
  }

  const ProofStep& last = steps.back();
  if (!contains(in.endpoints, last.term))
    out.push_back(with_case(make_error(
        Code::kEndpointMismatch,
        "final term " + to_string(last.term) + " is not the right-hand side " +
            to_string(in.endpoints.front()),
        last.span)));
}

struct Verifier {
  const Registry& reg;
  const VerifyOptions& options;
  const std::vector<Quantifier>& quantifiers;
  Term lhs;
  Term rhs;
  Sink sink;

  void body(const ProofBody& proof, const RewriteEnv& env,
            const CasePath& path, std::vector<Term> premisses,
            std::vector<Term> endpoints, const std::string& note,
            const Span& case_span) {
    if (const auto* linear = std::get_if<LinearProof>(&proof)) {
      LinearInput in{&linear->steps, std::move(premisses),
                     std::move(endpoints), &env, path, note, case_span};
      check_linear(in, options, sink);
      return;
    }
    const auto& cases = std::get<ByCases>(proof);
    auto coverage = check_case_coverage(cases.decomposition, cases.subjects,
                                        cases.cases, reg);
    sink.diagnostics.insert(sink.diagnostics.end(), coverage.begin(),
                            coverage.end());
    for (const auto& subject : cases.subjects) {
      auto it = std::find_if(
          quantifiers.begin(), quantifiers.end(),
          [&subject](const Quantifier& q) { return q.var == subject; });
      if (it == quantifiers.end()) continue;
      if (!conforms(cases.decomposition.sum, it->type, reg) &&
          !conforms(it->type, cases.decomposition.sum, reg))
        sink.diagnostics.push_back(make_error(
            Code::kCoverage,
            subject + " ranges over " + to_string(it->type) +
                " but the cases split " + to_string(cases.decomposition.sum),
            cases.decomposition.span));
    }
    for (std::size_t k = 0; k < cases.cases.size(); ++k) {
      const CaseBlock& block = cases.cases[k];
      CaseEntry entry = enter_case(block, cases, lhs, rhs, env);
      sink.diagnostics.insert(sink.diagnostics.end(),
                              entry.diagnostics.begin(),
                              entry.diagnostics.end());
      if (!block.body) continue;
      CasePath sub = path;
      sub.push_back(k);
      std::string label = "in case ";
      if (block.label) label += *block.label + ": ";
      label += ranges_text(block.ranges);
      body(*block.body, entry.env, sub, std::move(entry.premisses),
           std::move(entry.endpoints), label, block.span);
    }
  }
};

}  // namespace

std::optional<Term> nullary_constructor(const TypeExpr& type,
                                        const Registry& registry) {
  const TypeDecl* decl = registry.find_type(type.name);
  if (!decl || !decl->is_product() || !decl->product().fields.empty() ||
      decl->params.size() != type.args.size())
    return std::nullopt;
  return Term::apply(decl->name, {}, type.args);
}

std::vector<Diagnostic> check_case_coverage(
    const Decomposition& decomposition,
    const std::vector<std::string>& subjects,
    const std::vector<CaseBlock>& cases, const Registry& registry) {
  std::vector<Diagnostic> out;
  const Span& span = decomposition.span;
  const TypeDecl* decl = registry.find_type(decomposition.sum.name);
  if (!decl || !decl->is_sum() ||
      decl->params.size() != decomposition.sum.args.size()) {
    out.push_back(make_error(
        Code::kCoverage,
        to_string(decomposition.sum) + " is not a declared sum type", span));
    return out;
  }
  std::map<std::string, TypeExpr> b;
  for (std::size_t i = 0; i < decl->params.size(); ++i)
    b[decl->params[i]] = decomposition.sum.args[i];
  std::vector<TypeExpr> summands;
  for (const auto& s : decl->sum().summands)
    summands.push_back(substitute_type(s, b));

  std::string stated;
  for (std::size_t i = 0; i < decomposition.summands.size(); ++i)
    stated += (i ? " U " : "") + to_string(decomposition.summands[i]);
  std::vector<std::string> a, r;
  for (const auto& t : decomposition.summands) a.push_back(to_string(t));
  for (const auto& t : summands) r.push_back(to_string(t));
  std::sort(a.begin(), a.end());
  std::sort(r.begin(), r.end());
  if (a != r) {
    std::string declared;
    for (std::size_t i = 0; i < summands.size(); ++i)
      declared += (i ? ", " : "") + to_string(summands[i]);
    out.push_back(make_error(Code::kCoverage,
                             "decomposition " + to_string(decomposition.sum) +
                                 " = " + stated + " does not match Sum[" +
                                 declared + "]",
                             span));
  }

  auto combo_text = [&subjects](const std::vector<std::string>& combo) {
    std::string t;
    for (std::size_t i = 0; i < combo.size(); ++i)
      t += (i ? ", ∀" : "∀") + subjects[i] + " ∈ " + combo[i];
    return t;
  };

  std::map<std::vector<std::string>, int> seen;
  for (const auto& block : cases) {
    std::vector<std::string> combo;
    bool complete = true;
    for (const auto& subject : subjects) {
      auto it = std::find_if(block.ranges.begin(), block.ranges.end(),
                             [&subject](const Quantifier& q) {
                               return q.var == subject;
                             });
      if (it == block.ranges.end()) {
        out.push_back(make_error(
            Code::kCoverage, "case gives no range for " + subject, block.span));
        complete = false;
        break;
      }
      combo.push_back(to_string(it->type));
    }
    if (!complete) continue;
    if (++seen[combo] == 2)
      out.push_back(make_error(Code::kCoverage,
                               "case " + combo_text(combo) +
                                   " is covered more than once",
                               block.span));
  }

  if (summands.empty() || subjects.empty()) return out;
  std::vector<std::size_t> index(subjects.size(), 0);
  for (;;) {
    std::vector<std::string> combo;
    for (std::size_t i = 0; i < subjects.size(); ++i)
      combo.push_back(to_string(summands[index[i]]));
    if (!seen.count(combo))
      out.push_back(make_error(Code::kCoverage,
                               "no case covers " + combo_text(combo), span));
    std::size_t i = subjects.size();
    bool done = true;
    while (i > 0) {
      --i;
      if (++index[i] < summands.size()) {
        done = false;
        break;
      }
      index[i] = 0;
    }
    if (done) break;
  }
  return out;
}

CaseEntry enter_case(const CaseBlock& block, const ByCases& parent,
                     const Term& lhs, const Term& rhs, const RewriteEnv& env) {
  CaseEntry entry;
  entry.env = env;
  const Registry& reg = *env.registry;
  if (block.restated &&
      (block.restated->lhs != lhs || block.restated->rhs != rhs))
    entry.diagnostics.push_back(make_error(
        Code::kRestatement,
        "case restates " + to_string(block.restated->lhs) + " ↔ " +
            to_string(block.restated->rhs) + " but the theorem asserts " +
            to_string(lhs) + " ↔ " + to_string(rhs),
        block.span));

  for (const auto& q : block.ranges) {
    const auto& subjects = parent.subjects;
    if (std::find(subjects.begin(), subjects.end(), q.var) == subjects.end()) {
      entry.diagnostics.push_back(make_error(
          Code::kCoverage,
          "case range " + range_text(q) +
              " does not split a subject of the enclosing proof by cases",
          q.span.valid() ? q.span : block.span));
      continue;
    }
    const auto& summands = parent.decomposition.summands;
    if (std::find(summands.begin(), summands.end(), q.type) == summands.end()) {
      entry.diagnostics.push_back(make_error(
          Code::kCoverage,
          "case range " + range_text(q) + " is not a summand of " +
              to_string(parent.decomposition.sum),
          q.span.valid() ? q.span : block.span));
      continue;
    }
    auto constructor = nullary_constructor(q.type, reg);
    if (!constructor) {
      entry.diagnostics.push_back(make_error(
          Code::kNoConstructor,
          "case range " + range_text(q) +
              " needs a type with a nullary constructor",
          q.span.valid() ? q.span : block.span));
      continue;
    }
    entry.env.bindings.push_back({q.var, q.type, *constructor});
  }
  entry.premisses = substituted_forms(lhs, entry.env.bindings);
  entry.endpoints = substituted_forms(rhs, entry.env.bindings);
  return entry;
}

std::vector<Diagnostic> verify_linear(const Term& lhs, const Term& rhs,
                                      const std::vector<ProofStep>& steps,
                                      const RewriteEnv& env,
                                      const VerifyOptions& options) {
  Sink sink;
  LinearInput in{&steps,
                 substituted_forms(lhs, env.bindings),
                 substituted_forms(rhs, env.bindings),
                 &env,
                 {},
                 {},
                 {}};
  check_linear(in, options, sink);
  return sink.diagnostics;
}

VerificationReport verify_theorem(const TheoremDecl& theorem,
                                  const Registry& registry,
                                  const VerifyOptions& options) {
  VerificationReport report;
  report.theorem = theorem.name;
  TheoremEntry entry = bind_theorem(theorem, registry);
  const TheoremEntry* known = registry.find_theorem(theorem.name);
  std::size_t order = known ? known->order : registry.theorems().size();

  std::vector<Diagnostic> diags;
  for (const auto& q : entry.implicit)
    diags.push_back(make_warning(Code::kImplicitQuantifier,
                                 q.var + " is not quantified; taken as " +
                                     range_text(q) +
                                     " from the proof by cases",
                                 theorem.span));

  TypingContext typing;
  for (const auto& q : entry.quantifiers) typing.metavar_types[q.var] = q.type;
  auto lt = infer_type(entry.decl.lhs, typing, registry);
  auto rt = infer_type(entry.decl.rhs, typing, registry);
  for (const auto* r : {&lt, &rt})
    if (!*r)
      for (auto d : r->errors()) {
        if (!d.span.valid()) d.span = theorem.span;
        diags.push_back(std::move(d));
      }
  if (lt && rt && !conforms(*lt, *rt, registry) &&
      !conforms(*rt, *lt, registry) && !join_types({*lt, *rt}, registry))
    diags.push_back(make_error(Code::kTypeMismatch,
                               "the sides of " + theorem.name + " have types " +
                                   to_string(*lt) + " and " + to_string(*rt),
                               theorem.span));

  RewriteEnv env;
  env.registry = &registry;
  env.theorem_limit = order;
  env.metavar_types = typing.metavar_types;

  Verifier v{registry, options, entry.quantifiers, entry.decl.lhs,
             entry.decl.rhs, {}};
  v.body(entry.decl.proof, env, {}, {entry.decl.lhs}, {entry.decl.rhs}, {},
         {});
  diags.insert(diags.end(), v.sink.diagnostics.begin(),
               v.sink.diagnostics.end());
  sort_diagnostics(diags);
  report.diagnostics = std::move(diags);
  report.inferred = std::move(v.sink.inferred);
  report.failures = std::move(v.sink.failures);
  report.status =
      has_errors(report.diagnostics) ? Status::kRejected : Status::kAccepted;
  return report;
}

const LinearProof* find_linear(const ProofBody& body, const CasePath& path) {
  const ProofBody* at = &body;
  for (std::size_t k : path) {
    const auto* cases = std::get_if<ByCases>(at);
    if (!cases || k >= cases->cases.size() || !cases->cases[k].body)
      return nullptr;
    at = cases->cases[k].body.get();
  }
  return std::get_if<LinearProof>(at);
}

LinearProof* find_linear(ProofBody& body, const CasePath& path) {
  ProofBody* at = &body;
  for (std::size_t k : path) {
    auto* cases = std::get_if<ByCases>(at);
    if (!cases || k >= cases->cases.size() || !cases->cases[k].body)
      return nullptr;
    // Bodies are shared between copies; detach before handing out.
    auto& slot = cases->cases[k].body;
    slot = std::make_shared<ProofBody>(*slot);
    at = slot.get();
  }
  return std::get_if<LinearProof>(at);
}

}  // namespace axiotome
