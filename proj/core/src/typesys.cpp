#include "axiotome/typesys.hpp"

#include <algorithm>
#include <functional>

namespace axiotome {

// --- Registry lookups -------------------------------------------------------

const TypeDecl* Registry::find_type(std::string_view name) const {
  auto it = type_index_.find(name);
  return it == type_index_.end() ? nullptr : &types_[it->second];
}

const FunctionDecl* Registry::find_function(std::string_view name) const {
  auto it = function_index_.find(name);
  return it == function_index_.end() ? nullptr : &functions_[it->second];
}

const AxiomEntry* Registry::find_axiom(std::string_view name) const {
  auto it = axiom_index_.find(name);
  return it == axiom_index_.end() ? nullptr : &axioms_[it->second];
}

const TheoremEntry* Registry::find_theorem(std::string_view name) const {
  auto it = theorem_index_.find(name);
  return it == theorem_index_.end() ? nullptr : &theorems_[it->second];
}

std::optional<std::string> Registry::operator_function(
    std::string_view glyph) const {
  for (const auto& op : operators_)
    if (op.glyph == glyph) return op.function;
  return std::nullopt;
}

bool Registry::is_constructor(std::string_view name) const {
  const TypeDecl* t = find_type(name);
  return t && t->is_product();
}

bool Registry::is_term_head(std::string_view name) const {
  return is_constructor(name) || find_function(name) != nullptr;
}

std::vector<std::string> Registry::parameter_names(
    const FunctionDecl& f) const {
  std::vector<std::string> out;
  for (const auto& p : f.params) out.push_back(p.name);
  return out;
}

// --- helpers ----------------------------------------------------------------

Term bind_metavars(const Term& term, const std::set<std::string>& names) {
  if (term.is_var()) return term;
  if (term.args().empty()) {
    if (term.type_args().empty() && names.count(term.head()))
      return Term::var(term.head(), term.span());
    return term;
  }
  std::vector<Term> args;
  args.reserve(term.args().size());
  bool changed = false;
  for (const auto& arg : term.args()) {
    args.push_back(bind_metavars(arg, names));
    changed = changed || args.back() != arg;
  }
  if (!changed) return term;
  return term.with_args(std::move(args));
}

TypeExpr substitute_type(const TypeExpr& type,
                         const std::map<std::string, TypeExpr>& bindings) {
  if (type.args.empty()) {
    auto it = bindings.find(type.name);
    if (it != bindings.end()) return it->second;
    return type;
  }
  TypeExpr out(type.name);
  for (const auto& arg : type.args)
    out.args.push_back(substitute_type(arg, bindings));
  return out;
}

namespace {

std::set<std::string> to_set(const std::vector<std::string>& v) {
  return {v.begin(), v.end()};
}

void bind_body(ProofBody& body, const std::set<std::string>& names);

void bind_steps(LinearProof& proof, const std::set<std::string>& names) {
  for (auto& step : proof.steps) step.term = bind_metavars(step.term, names);
}

void bind_body(ProofBody& body, const std::set<std::string>& names) {
  if (auto* linear = std::get_if<LinearProof>(&body)) {
    bind_steps(*linear, names);
    return;
  }
  auto& cases = std::get<ByCases>(body);
  for (auto& block : cases.cases) {
    if (block.restated) {
      block.restated->lhs = bind_metavars(block.restated->lhs, names);
      block.restated->rhs = bind_metavars(block.restated->rhs, names);
    }
    if (block.body) {
      auto copy = std::make_shared<ProofBody>(*block.body);
      bind_body(*copy, names);
      block.body = std::move(copy);
    }
  }
}

// Sum type of the `proof by cases` that splits on `subject`, outermost first.
std::optional<TypeExpr> subject_type(const ProofBody& body,
                                     const std::string& subject) {
  const auto* cases = std::get_if<ByCases>(&body);
  if (!cases) return std::nullopt;
  if (std::find(cases->subjects.begin(), cases->subjects.end(), subject) !=
      cases->subjects.end())
    return cases->decomposition.sum;
  for (const auto& block : cases->cases) {
    if (!block.body) continue;
    if (auto t = subject_type(*block.body, subject)) return t;
  }
  return std::nullopt;
}

void collect_body_types(const ProofBody& body, std::vector<const TypeExpr*>& out,
                        std::vector<Span>& spans) {
  const auto* cases = std::get_if<ByCases>(&body);
  if (!cases) return;
  out.push_back(&cases->decomposition.sum);
  spans.push_back(cases->decomposition.span);
  for (const auto& s : cases->decomposition.summands) {
    out.push_back(&s);
    spans.push_back(cases->decomposition.span);
  }
  for (const auto& block : cases->cases) {
    for (const auto& r : block.ranges) {
      out.push_back(&r.type);
      spans.push_back(r.span);
    }
    if (block.body) collect_body_types(*block.body, out, spans);
  }
}

class Resolver {
 public:
  explicit Resolver(std::vector<Diagnostic>& diags) : diags_(diags) {}

  void check(const TypeExpr& type, const std::set<std::string>& params,
             const std::function<bool(const std::string&)>& declared,
             const Span& span) {
    if (type.args.empty() && params.count(type.name)) return;
    if (!declared(type.name))
      diags_.push_back(make_error(Code::kUnresolved,
                                  "reference to undeclared type '" +
                                      type.name + "'",
                                  span));
    for (const auto& arg : type.args) check(arg, params, declared, span);
  }

 private:
  std::vector<Diagnostic>& diags_;
};

}  // namespace

TheoremEntry bind_theorem(const TheoremDecl& decl, const Registry& reg) {
  TheoremEntry entry;
  entry.decl = decl;
  TheoremDecl& th = entry.decl;
  std::set<std::string> names;
  for (const auto& q : th.quantifiers)
    if (!reg.is_term_head(q.var)) names.insert(q.var);
  entry.quantifiers = th.quantifiers;
  for (const auto& subject : case_subjects(th.proof)) {
    if (names.count(subject) || reg.is_term_head(subject)) continue;
    names.insert(subject);
    Quantifier q;
    q.var = subject;
    q.type = *subject_type(th.proof, subject);
    q.span = th.span;
    entry.implicit.push_back(q);
    entry.quantifiers.push_back(q);
  }
  th.lhs = bind_metavars(th.lhs, names);
  th.rhs = bind_metavars(th.rhs, names);
  bind_body(th.proof, names);
  return entry;
}

// --- build_registry ---------------------------------------------------------

Result<Registry> build_registry(const Program& program) {
  Registry reg;
  std::vector<Diagnostic> diags;

  auto dup = [&](const std::string& what, const std::string& name,
                 const Span& span) {
    diags.push_back(make_error(Code::kDupName,
                               "duplicate " + what + " '" + name + "'", span));
  };

  // Pass 1: collect names.
  for (const auto& statement : program.statements) {
    if (const auto* t = std::get_if<TypeDecl>(&statement)) {
      if (reg.type_index_.count(t->name)) {
        dup("type", t->name, t->span);
        continue;
      }
      reg.type_index_.emplace(t->name, reg.types_.size());
      reg.types_.push_back(*t);
    } else if (const auto* f = std::get_if<FunctionDecl>(&statement)) {
      if (reg.function_index_.count(f->name)) {
        dup("function", f->name, f->span);
        continue;
      }
      reg.function_index_.emplace(f->name, reg.functions_.size());
      reg.functions_.push_back(*f);
    } else if (const auto* o = std::get_if<OperatorDecl>(&statement)) {
      auto existing = reg.operator_function(o->glyph);
      if (existing && *existing != o->function) {
        dup("operator", o->glyph, o->span);
        continue;
      }
      if (!existing) reg.operators_.push_back(*o);
    } else if (const auto* th = std::get_if<TheoremDecl>(&statement)) {
      if (reg.theorem_index_.count(th->name)) {
        dup("theorem", th->name, th->span);
        continue;
      }
      reg.theorem_index_.emplace(th->name, reg.theorems_.size());
      TheoremEntry entry;
      entry.decl = *th;
      entry.order = reg.theorems_.size();
      reg.theorems_.push_back(std::move(entry));
    }
  }

  for (const auto& f : reg.functions_) {
    const TypeDecl* clash = reg.find_type(f.name);
    if (clash && clash->is_product())
      dup("name (function and constructor)", f.name, f.span);
  }

  auto declared = [&reg](const std::string& name) {
    return reg.find_type(name) != nullptr;
  };
  Resolver resolver(diags);

  // Pass 2: resolve type references and bind metavariables.
  for (const auto& t : reg.types_) {
    std::set<std::string> params = to_set(t.params);
    if (t.is_product()) {
      std::set<std::string> labels;
      for (const auto& field : t.product().fields) {
        if (!labels.insert(field.label).second)
          dup("field label", field.label, t.span);
        resolver.check(field.type, params, declared, t.span);
      }
    } else {
      for (const auto& s : t.sum().summands)
        resolver.check(s, params, declared, t.span);
    }
  }

  for (auto& f : reg.functions_) {
    std::set<std::string> tparams = to_set(f.type_params);
    for (const auto& p : f.params)
      resolver.check(p.type, tparams, declared, f.span);
    resolver.check(f.return_type, tparams, declared, f.span);
    std::set<std::string> names;
    for (const auto& p : f.params)
      if (!reg.is_term_head(p.name)) names.insert(p.name);
    if (f.is_equational()) {
      Equational body = f.equational();
      std::set<std::string> local_names;
      for (auto& axiom : body.axioms) {
        std::set<std::string> bound = names;
        for (const auto& [name, type] : axiom.metavar_types) {
          resolver.check(type, tparams, declared, axiom.span);
          if (reg.is_term_head(name))
            dup("name (metavariable and constructor)", name, axiom.span);
          else
            bound.insert(name);
        }
        axiom.lhs = bind_metavars(axiom.lhs, bound);
        axiom.rhs = bind_metavars(axiom.rhs, bound);
        if (!local_names.insert(axiom.name).second ||
            reg.axiom_index_.count(axiom.name)) {
          dup("axiom", axiom.name, axiom.span);
          continue;
        }
        AxiomEntry entry;
        entry.axiom = axiom;
        entry.function = f.name;
        entry.order = reg.axioms_.size();
        for (const auto& p : f.params)
          if (names.count(p.name)) entry.metavar_types[p.name] = p.type;
        for (const auto& [name, type] : axiom.metavar_types)
          entry.metavar_types[name] = type;
        reg.axiom_index_.emplace(axiom.name, reg.axioms_.size());
        reg.axioms_.push_back(std::move(entry));
      }
      f.body = std::move(body);
    } else {
      f.body = Formulaic{bind_metavars(f.formulaic().body, names)};
    }
  }

  for (auto& entry : reg.theorems_) {
    const TheoremDecl& th = entry.decl;
    for (const auto& q : th.quantifiers) {
      resolver.check(q.type, {}, declared, q.span);
      if (reg.is_term_head(q.var))
        dup("name (metavariable and constructor)", q.var, q.span);
    }
    std::vector<const TypeExpr*> body_types;
    std::vector<Span> body_spans;
    collect_body_types(th.proof, body_types, body_spans);
    for (std::size_t i = 0; i < body_types.size(); ++i)
      resolver.check(*body_types[i], {}, declared, body_spans[i]);
    std::size_t order = entry.order;
    entry = bind_theorem(th, reg);
    entry.order = order;
  }

  for (const auto& op : reg.operators_)
    if (!reg.find_function(op.function))
      diags.push_back(make_error(Code::kUnresolved,
                                 "operator '" + op.glyph +
                                     "' names undeclared function '" +
                                     op.function + "'",
                                 op.span));

  if (has_errors(diags)) return diags;
  return reg;
}

// --- conformance and inference ---------------------------------------------

namespace {

bool same_modulo_symbolic(const TypeExpr& a, const TypeExpr& b) {
  if (a.is_symbolic() || b.is_symbolic()) return true;
  if (a.name != b.name || a.args.size() != b.args.size()) return false;
  for (std::size_t i = 0; i < a.args.size(); ++i)
    if (!same_modulo_symbolic(a.args[i], b.args[i])) return false;
  return true;
}

bool conforms_rec(const TypeExpr& sub, const TypeExpr& super,
                  const Registry& reg, int depth) {
  if (same_modulo_symbolic(sub, super)) return true;
  if (depth > 32) return false;
  const TypeDecl* decl = reg.find_type(super.name);
  if (!decl || !decl->is_sum()) return false;
  if (decl->params.size() != super.args.size()) return false;
  std::map<std::string, TypeExpr> bindings;
  for (std::size_t i = 0; i < decl->params.size(); ++i)
    bindings[decl->params[i]] = super.args[i];
  for (const auto& summand : decl->sum().summands)
    if (conforms_rec(sub, substitute_type(summand, bindings), reg, depth + 1))
      return true;
  return false;
}

// Collects candidate bindings for `vars` by matching `pattern` against
// `actual`, looking through sum types in `pattern` when heads differ.
void unify(const TypeExpr& pattern, const TypeExpr& actual,
           const std::set<std::string>& vars,
           std::map<std::string, std::vector<TypeExpr>>& candidates,
           const Registry& reg, int depth) {
  if (depth > 16 || actual.is_symbolic()) return;
  if (pattern.args.empty() && vars.count(pattern.name)) {
    candidates[pattern.name].push_back(actual);
    return;
  }
  if (pattern.name == actual.name && pattern.args.size() == actual.args.size()) {
    for (std::size_t i = 0; i < pattern.args.size(); ++i)
      unify(pattern.args[i], actual.args[i], vars, candidates, reg, depth + 1);
    return;
  }
  const TypeDecl* decl = reg.find_type(pattern.name);
  if (!decl || !decl->is_sum() || decl->params.size() != pattern.args.size())
    return;
  std::map<std::string, TypeExpr> bindings;
  for (std::size_t i = 0; i < decl->params.size(); ++i)
    bindings[decl->params[i]] = pattern.args[i];
  for (const auto& summand : decl->sum().summands) {
    TypeExpr s = substitute_type(summand, bindings);
    if (s.name == actual.name ||
        (reg.find_type(s.name) && reg.find_type(s.name)->is_sum())) {
      std::map<std::string, std::vector<TypeExpr>> local;
      unify(s, actual, vars, local, reg, depth + 1);
      if (!local.empty()) {
        for (auto& [k, v] : local)
          candidates[k].insert(candidates[k].end(), v.begin(), v.end());
        return;
      }
    }
  }
}

std::string describe(const Term& term) { return to_string(term); }

}  // namespace

bool conforms(const TypeExpr& sub, const TypeExpr& super,
              const Registry& registry) {
  return conforms_rec(sub, super, registry, 0);
}

std::optional<TypeExpr> join_types(const std::vector<TypeExpr>& candidates,
                                   const Registry& registry) {
  if (candidates.empty()) return std::nullopt;
  auto all_conform = [&](const TypeExpr& target) {
    return std::all_of(candidates.begin(), candidates.end(),
                       [&](const TypeExpr& c) {
                         return conforms(c, target, registry);
                       });
  };
  for (const auto& c : candidates)
    if (all_conform(c)) return c;
  std::optional<TypeExpr> best;
  for (const auto& decl : registry.types()) {
    if (!decl.params.empty() || !decl.is_sum()) continue;
    TypeExpr t(decl.name);
    if (!all_conform(t)) continue;
    if (!best || conforms(t, *best, registry)) best = t;
  }
  return best;
}

Result<TypeExpr> infer_type(const Term& term, const TypingContext& ctx,
                            const Registry& reg) {
  if (term.is_var() || (term.args().empty() && term.type_args().empty() &&
                        ctx.metavar_types.count(term.head()) &&
                        !reg.is_term_head(term.head()))) {
    auto it = ctx.metavar_types.find(term.head());
    if (it == ctx.metavar_types.end())
      return make_error(Code::kUnresolved,
                        "metavariable '" + term.head() + "' has no type",
                        term.span());
    return it->second;
  }

  std::vector<std::string> type_params;
  std::vector<TypeExpr> param_types;
  TypeExpr result;
  std::string what;
  if (const TypeDecl* t = reg.find_type(term.head())) {
    if (t->is_sum())
      return make_error(Code::kNoConstructor,
                        "'" + t->name +
                            "' is a sum type and has no constructor",
                        term.span());
    type_params = t->params;
    for (const auto& f : t->product().fields) param_types.push_back(f.type);
    result = TypeExpr(t->name);
    for (const auto& p : t->params) result.args.emplace_back(p);
    what = "constructor";
  } else if (const FunctionDecl* f = reg.find_function(term.head())) {
    type_params = f->type_params;
    for (const auto& p : f->params) param_types.push_back(p.type);
    result = f->return_type;
    what = "function";
  } else {
    return make_error(Code::kUnresolved,
                      "unknown function or constructor '" + term.head() + "'",
                      term.span());
  }

  if (term.args().size() != param_types.size())
    return make_error(Code::kArity,
                      what + " '" + term.head() + "' expects " +
                          std::to_string(param_types.size()) +
                          " argument(s) but was given " +
                          std::to_string(term.args().size()),
                      term.span());
  if (!term.type_args().empty() &&
      term.type_args().size() != type_params.size())
    return make_error(Code::kArity,
                      what + " '" + term.head() + "' expects " +
                          std::to_string(type_params.size()) +
                          " type argument(s)",
                      term.span());

  std::vector<TypeExpr> arg_types;
  for (const auto& arg : term.args()) {
    auto t = infer_type(arg, ctx, reg);
    if (!t) return t.errors();
    arg_types.push_back(*t);
  }

  std::map<std::string, TypeExpr> bindings;
  if (!term.type_args().empty()) {
    for (std::size_t i = 0; i < type_params.size(); ++i)
      bindings[type_params[i]] = term.type_args()[i];
  } else if (!type_params.empty()) {
    std::set<std::string> vars(type_params.begin(), type_params.end());
    std::map<std::string, std::vector<TypeExpr>> candidates;
    for (std::size_t i = 0; i < param_types.size(); ++i)
      unify(param_types[i], arg_types[i], vars, candidates, reg, 0);
    for (const auto& p : type_params) {
      auto it = candidates.find(p);
      if (it == candidates.end() || it->second.empty()) {
        bindings[p] = TypeExpr("?" + p);
        continue;
      }
      auto joined = join_types(it->second, reg);
      bindings[p] = joined ? *joined : it->second.front();
    }
  }

  for (std::size_t i = 0; i < param_types.size(); ++i) {
    TypeExpr expected = substitute_type(param_types[i], bindings);
    if (!conforms(arg_types[i], expected, reg))
      return make_error(Code::kTypeMismatch,
                        "argument " + std::to_string(i + 1) + " of '" +
                            term.head() + "': " + describe(term.args()[i]) +
                            " has type " + to_string(arg_types[i]) +
                            ", which does not conform to " +
                            to_string(expected),
                        term.args()[i].span().valid() ? term.args()[i].span()
                                                      : term.span());
  }
  return substitute_type(result, bindings);
}

Result<ConstructorSignature> constructor_signature(std::string_view name,
                                                   const Registry& reg) {
  const TypeDecl* t = reg.find_type(name);
  if (!t) {
    if (reg.find_function(name))
      return make_error(Code::kNoConstructor,
                        "'" + std::string(name) +
                            "' is a function, not a constructor");
    return make_error(Code::kUnresolved,
                      "unknown constructor '" + std::string(name) + "'");
  }
  if (t->is_sum())
    return make_error(Code::kNoConstructor,
                      "'" + t->name +
                          "' is a sum type and has no constructor",
                      t->span);
  ConstructorSignature sig;
  sig.type_params = t->params;
  sig.fields = t->product().fields;
  sig.result_type = TypeExpr(t->name);
  for (const auto& p : t->params) sig.result_type.args.emplace_back(p);
  return sig;
}

// --- well-formedness --------------------------------------------------------

namespace {

void check_type_arity(const TypeExpr& type, const std::set<std::string>& params,
                      const Registry& reg, const Span& span,
                      std::vector<Diagnostic>& out) {
  if (type.args.empty() && params.count(type.name)) return;
  if (const TypeDecl* decl = reg.find_type(type.name)) {
    if (decl->params.size() != type.args.size())
      out.push_back(make_error(
          Code::kArity,
          "type '" + decl->name + "' expects " +
              std::to_string(decl->params.size()) +
              " type argument(s) but was given " +
              std::to_string(type.args.size()),
          span));
  }
  for (const auto& arg : type.args) check_type_arity(arg, params, reg, span, out);
}

// Product types that reach themselves through product fields only.
void check_inhabitation(const Registry& reg, std::vector<Diagnostic>& out) {
  for (const auto& start : reg.types()) {
    if (!start.is_product()) continue;
    std::vector<std::string> stack{start.name};
    std::set<std::string> seen;
    bool cyclic = false;
    while (!stack.empty() && !cyclic) {
      std::string name = stack.back();
      stack.pop_back();
      const TypeDecl* decl = reg.find_type(name);
      if (!decl || !decl->is_product()) continue;
      for (const auto& field : decl->product().fields) {
        const TypeDecl* target = reg.find_type(field.type.name);
        if (!target || !target->is_product()) continue;
        if (target->name == start.name) {
          cyclic = true;
          break;
        }
        if (seen.insert(target->name).second) stack.push_back(target->name);
      }
    }
    if (cyclic)
      out.push_back(make_warning(
          Code::kInhabitation,
          "product type '" + start.name +
              "' contains itself through product fields only and has no "
              "finite inhabitant",
          start.span));
  }
}

}  // namespace

std::vector<Diagnostic> check_well_formed(const Registry& reg) {
  std::vector<Diagnostic> out;

  for (const auto& t : reg.types()) {
    std::set<std::string> params(t.params.begin(), t.params.end());
    if (t.is_product()) {
      for (const auto& f : t.product().fields)
        check_type_arity(f.type, params, reg, t.span, out);
    } else {
      for (const auto& s : t.sum().summands)
        check_type_arity(s, params, reg, t.span, out);
    }
  }
  check_inhabitation(reg, out);

  for (const auto& f : reg.functions()) {
    std::set<std::string> tparams(f.type_params.begin(), f.type_params.end());
    for (const auto& p : f.params)
      check_type_arity(p.type, tparams, reg, f.span, out);
    check_type_arity(f.return_type, tparams, reg, f.span, out);

    TypingContext base;
    base.type_params = tparams;
    for (const auto& p : f.params) base.metavar_types[p.name] = p.type;

    if (!f.is_equational()) {
      auto body = infer_type(f.formulaic().body, base, reg);
      if (!body) {
        out.insert(out.end(), body.errors().begin(), body.errors().end());
      } else if (!conforms(*body, f.return_type, reg)) {
        out.push_back(make_error(
            Code::kTypeMismatch,
            "body of '" + f.name + "' has type " + to_string(*body) +
                ", which does not conform to the return type " +
                to_string(f.return_type),
            f.span));
      }
      continue;
    }

    for (const auto& axiom : f.equational().axioms) {
      const AxiomEntry* entry = reg.find_axiom(axiom.name);
      if (!entry || entry->function != f.name) continue;
      const Term& lhs = entry->axiom.lhs;
      const Term& rhs = entry->axiom.rhs;
      if (lhs.is_var() || lhs.head() != f.name) {
        out.push_back(make_error(Code::kTypeMismatch,
                                 "left-hand side of axiom " + axiom.name +
                                     " must apply '" + f.name + "'",
                                 axiom.span));
        continue;
      }
      if (lhs.args().size() != f.params.size()) {
        out.push_back(make_error(
            Code::kArity,
            "axiom " + axiom.name + " applies '" + f.name + "' to " +
                std::to_string(lhs.args().size()) + " argument(s); '" +
                f.name + "' takes " + std::to_string(f.params.size()),
            axiom.span));
        continue;
      }
      std::vector<std::string> lhs_vars, rhs_vars;
      lhs.collect_vars(lhs_vars);
      rhs.collect_vars(rhs_vars);
      for (const auto& v : rhs_vars) {
        if (std::find(lhs_vars.begin(), lhs_vars.end(), v) == lhs_vars.end() &&
            !axiom.metavar_types.count(v))
          out.push_back(make_error(Code::kUnresolved,
                                   "metavariable '" + v + "' of axiom " +
                                       axiom.name +
                                       " occurs only on the right-hand side",
                                   axiom.span));
      }
      TypingContext ctx = base;
      ctx.metavar_types = entry->metavar_types;
      auto lt = infer_type(lhs, ctx, reg);
      auto rt = infer_type(rhs, ctx, reg);
      if (!lt) {
        for (auto d : lt.errors()) {
          if (!d.span.valid()) d.span = axiom.span;
          out.push_back(std::move(d));
        }
        continue;
      }
      if (!rt) {
        for (auto d : rt.errors()) {
          if (!d.span.valid()) d.span = axiom.span;
          out.push_back(std::move(d));
        }
        continue;
      }
      if (!conforms(*rt, *lt, reg))
        out.push_back(make_error(
            Code::kTypeMismatch,
            "axiom " + axiom.name + ": right-hand side has type " +
                to_string(*rt) + ", which does not conform to " +
                to_string(*lt),
            axiom.span));
    }
  }
  return out;
}

}  // namespace axiotome
