#include "axiotome/search.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <unordered_map>
#include <unordered_set>

namespace axiotome {

namespace {

Justification rule_via(std::vector<std::string> names) {
  Justification j;
  for (auto& n : names) j.rules.push_back(RuleRef{std::move(n), {}});
  return j;
}

Quantifier range_of(const CaseBinding& b) {
  Quantifier q;
  q.var = b.var;
  q.type = b.type;
  return q;
}

struct Single {
  Position position;
  Term replacement;
  std::string name;
};

class Expander {
 public:
  Expander(const Term& term, const RewriteEnv& env) : term_(term), env_(env) {}

  std::vector<Successor> run() {
    const Registry& reg = *env_.registry;
    std::vector<Single> singles;
    for (const auto& a : reg.axioms()) {
      RewriteRule rule = axiom_rule(a);
      for (Direction d : {Direction::kForward, Direction::kBackward}) {
        rule.direction = d;
        for (auto& [p, t] : enumerate_rewrites(term_, rule)) {
          singles.push_back({p, t.at(p), a.axiom.name});
          add(std::move(t), rule_via({a.axiom.name}));
        }
      }
    }
    ranges();
    for (const auto& f : reg.functions()) {
      if (f.is_equational()) continue;
      RewriteRule rule = unfold_rule(f);
      for (Direction d : {Direction::kForward, Direction::kBackward}) {
        rule.direction = d;
        for (auto& [p, t] : enumerate_rewrites(term_, rule))
          add(std::move(t), rule_via({f.name}));
      }
    }
    for (const auto& th : reg.theorems()) {
      if (th.order >= env_.theorem_limit) break;
      RewriteRule rule = theorem_rule(th);
      for (Direction d : {Direction::kForward, Direction::kBackward}) {
        rule.direction = d;
        for (auto& [p, t] : enumerate_rewrites(term_, rule))
          add(std::move(t), rule_via({th.decl.name}));
      }
    }
    for (std::size_t i = 0; i < singles.size(); ++i) {
      for (std::size_t j = i + 1; j < singles.size(); ++j) {
        const Single* x = &singles[i];
        const Single* y = &singles[j];
        if (!x->position.disjoint_from(y->position)) continue;
        if (y->position < x->position) std::swap(x, y);
        Term t = term_.replace_at(x->position, x->replacement)
                     .replace_at(y->position, y->replacement);
        add(std::move(t), rule_via({x->name, y->name}));
      }
    }
    return std::move(out_);
  }

 private:
  void add(Term t, Justification via) {
    if (t == term_ || !seen_.insert(t).second) return;
    out_.push_back({std::move(t), std::move(via)});
  }

  void ranges() {
    if (env_.bindings.empty()) return;
    std::vector<std::string> vars;
    term_.collect_vars(vars);
    Substitution intro;
    Justification intro_via;
    for (const auto& b : env_.bindings) {
      if (std::find(vars.begin(), vars.end(), b.var) == vars.end()) continue;
      if (intro.count(b.var)) continue;
      intro[b.var] = b.constructor;
      intro_via.ranges.push_back(range_of(b));
    }
    if (!intro.empty()) add(apply_substitution(intro, term_), intro_via);

    // Elimination: each occurrence of a bound constructor either stays or
    // becomes one of the variables bound to it.
    std::vector<Position> sites;
    std::vector<std::vector<const CaseBinding*>> options;
    for (const auto& p : term_.positions()) {
      std::vector<const CaseBinding*> opts;
      for (const auto& b : env_.bindings)
        if (term_.at(p) == b.constructor && env_.binding(b.var) == &b)
          opts.push_back(&b);
      if (opts.empty()) continue;
      sites.push_back(p);
      options.push_back(std::move(opts));
    }
    if (sites.empty()) return;
    std::size_t combos = 1;
    for (const auto& o : options) {
      combos *= o.size() + 1;
      if (combos > 4096) return;
    }
    std::vector<std::size_t> choice(sites.size(), 0);
    for (std::size_t n = 1; n < combos; ++n) {
      std::size_t rest = n;
      for (std::size_t i = sites.size(); i-- > 0;) {
        choice[i] = rest % (options[i].size() + 1);
        rest /= options[i].size() + 1;
      }
      Term t = term_;
      std::vector<const CaseBinding*> used;
      for (std::size_t i = 0; i < sites.size(); ++i) {
        if (choice[i] == 0) continue;
        const CaseBinding* b = options[i][choice[i] - 1];
        t = t.replace_at(sites[i], Term::var(b->var));
        if (std::find(used.begin(), used.end(), b) == used.end())
          used.push_back(b);
      }
      Justification via;
      for (const auto& b : env_.bindings)
        if (std::find(used.begin(), used.end(), &b) != used.end())
          via.ranges.push_back(range_of(b));
      add(std::move(t), std::move(via));
    }
  }

  const Term& term_;
  const RewriteEnv& env_;
  std::vector<Successor> out_;
  std::unordered_set<Term, TermHash> seen_;
};

bool comparable_types(const Term& a, const Term& b, const RewriteEnv& env) {
  TypingContext ctx;
  ctx.metavar_types = env.metavar_types;
  auto ta = infer_type(a, ctx, *env.registry);
  auto tb = infer_type(b, ctx, *env.registry);
  if (!ta || !tb) return true;
  return conforms(*ta, *tb, *env.registry) ||
         conforms(*tb, *ta, *env.registry) ||
         join_types({*ta, *tb}, *env.registry).has_value();
}

struct BackInfo {
  std::size_t distance;
  Term parent;
  Justification via;
};

class GapSearch {
 public:
  GapSearch(const Term& from, const Term& to, const RewriteEnv& env,
            const SearchBudget& budget)
      : from_(from), to_(to), env_(env), budget_(budget) {}

  std::optional<JustifiedChain> run() {
    if (from_ == to_) return JustifiedChain{from_, to_, {}};
    if (!comparable_types(from_, to_, env_)) return std::nullopt;
    for (std::size_t d = 1; d <= budget_.max_depth; ++d) {
      std::size_t back_depth = d / 2;
      std::size_t forward_depth = d - back_depth;
      if (!build_back(back_depth)) return std::nullopt;
      path_.clear();
      on_path_.clear();
      on_path_.insert(from_);
      found_.reset();
      if (!forward(from_, 0, forward_depth, back_depth) && exhausted_)
        return std::nullopt;
      if (found_) return found_;
    }
    return std::nullopt;
  }

 private:
  bool expand_allowed() {
    if (nodes_ >= budget_.max_nodes) {
      exhausted_ = true;
      return false;
    }
    ++nodes_;
    return true;
  }

  bool build_back(std::size_t depth) {
    back_.clear();
    back_.emplace(to_, BackInfo{0, to_, {}});
    std::vector<Term> layer{to_};
    for (std::size_t level = 0; level < depth; ++level) {
      std::vector<Term> next;
      for (const auto& t : layer) {
        if (!expand_allowed()) return false;
        for (auto& s : successors(t, env_)) {
          if (back_.count(s.term)) continue;
          back_.emplace(s.term, BackInfo{level + 1, t, s.via});
          next.push_back(std::move(s.term));
        }
      }
      layer = std::move(next);
    }
    return true;
  }

  // Returns true when a chain has been found (stored in found_).
  bool forward(const Term& t, std::size_t depth, std::size_t limit,
               std::size_t back_depth) {
    if (depth == limit) {
      auto it = back_.find(t);
      if (it == back_.end() || it->second.distance != back_depth) return false;
      return accept(t);
    }
    if (!expand_allowed()) return false;
    for (auto& s : successors(t, env_)) {
      if (on_path_.count(s.term)) continue;
      path_.push_back({s.term, s.via});
      on_path_.insert(s.term);
      bool hit = forward(path_.back().term, depth + 1, limit, back_depth);
      on_path_.erase(path_.back().term);
      if (hit) return true;
      path_.pop_back();
      if (exhausted_) return false;
    }
    return false;
  }

  bool accept(const Term& meet) {
    JustifiedChain chain{from_, to_, path_};
    Term at = meet;
    while (!(at == to_)) {
      const BackInfo& info = back_.at(at);
      chain.steps.push_back({info.parent, info.via});
      at = info.parent;
    }
    Term prev = from_;
    for (const auto& link : chain.steps) {
      if (!check_justified_step(prev, link.term, link.via, env_).justified)
        return false;
      prev = link.term;
    }
    found_ = std::move(chain);
    return true;
  }

  Term from_;
  Term to_;
  const RewriteEnv& env_;
  SearchBudget budget_;
  std::size_t nodes_ = 0;
  bool exhausted_ = false;
  std::unordered_map<Term, BackInfo, TermHash> back_;
  std::vector<ChainLink> path_;
  std::unordered_set<Term, TermHash> on_path_;
  std::optional<JustifiedChain> found_;
};

std::string chain_text(const JustifiedChain& chain) {
  std::string out;
  for (std::size_t i = 0; i < chain.steps.size(); ++i) {
    if (i) out += "; ";
    out += to_string(chain.steps[i].term) + " via " +
           to_string(chain.steps[i].via);
  }
  return out;
}

}  // namespace

std::vector<Successor> successors(const Term& term, const RewriteEnv& env) {
  return Expander(term, env).run();
}

std::optional<Justification> infer_step_justification(
    const Term& prev, const Term& next, const RewriteEnv& env,
    const InferOptions& options) {
  const Registry& reg = *env.registry;
  auto certifies = [&](const Justification& j) {
    return check_justified_step(prev, next, j, env).justified;
  };
  for (const auto& a : reg.axioms()) {
    Justification j = rule_via({a.axiom.name});
    if (certifies(j)) return j;
  }
  if (options.allow_ranges && !env.bindings.empty()) {
    std::vector<std::string> vars;
    prev.collect_vars(vars);
    next.collect_vars(vars);
    Justification j;
    for (const auto& b : env.bindings)
      if (std::find(vars.begin(), vars.end(), b.var) != vars.end() &&
          env.binding(b.var) == &b)
        j.ranges.push_back(range_of(b));
    if (!j.ranges.empty() && certifies(j)) return j;
  }
  for (const auto& f : reg.functions()) {
    if (f.is_equational()) continue;
    Justification j = rule_via({f.name});
    if (certifies(j)) return j;
  }
  for (const auto& th : reg.theorems()) {
    if (th.order >= env.theorem_limit) break;
    Justification j = rule_via({th.decl.name});
    if (certifies(j)) return j;
  }
  return std::nullopt;
}

std::optional<JustifiedChain> fill_gap(const Term& from, const Term& to,
                                       const RewriteEnv& env,
                                       const SearchBudget& budget) {
  return GapSearch(from, to, env, budget).run();
}

RepairResult repair_proof(const TheoremDecl& theorem,
                          const VerificationReport& report,
                          const Registry& registry,
                          const SearchBudget& budget) {
  RepairResult result;
  if (report.accepted()) {
    result.theorem = theorem;
    result.diagnostics.push_back(make_note(
        Code::kNothingToRepair,
        theorem.name + " is already accepted; nothing to repair",
        theorem.span));
    return result;
  }
  bool gaps_only = !report.failures.empty() &&
                   std::none_of(report.diagnostics.begin(),
                                report.diagnostics.end(),
                                [](const Diagnostic& d) {
                                  return d.is_error() &&
                                         d.code != Code::kUnjustifiedStep;
                                });
  if (!gaps_only) {
    result.diagnostics.push_back(make_note(
        Code::kNothingToRepair,
        theorem.name +
            " has findings other than unjustified steps; repair only "
            "inserts steps",
        theorem.span));
    return result;
  }

  TheoremEntry entry = bind_theorem(theorem, registry);
  const TheoremEntry* known = registry.find_theorem(theorem.name);
  RewriteEnv base;
  base.registry = &registry;
  base.theorem_limit = known ? known->order : registry.theorems().size();
  for (const auto& q : entry.quantifiers) base.metavar_types[q.var] = q.type;

  TheoremDecl patched = entry.decl;
  std::vector<FailureRun> runs = report.failures;
  // Splice from the last run backwards.
  std::sort(runs.begin(), runs.end(),
            [](const FailureRun& a, const FailureRun& b) {
              if (a.case_path != b.case_path) return a.case_path < b.case_path;
              return a.first > b.first;
            });

  bool ok = true;
  std::vector<Diagnostic> notes;
  for (const auto& run : runs) {
    LinearProof* proof = find_linear(patched.proof, run.case_path);
    if (!proof || run.first < 1 ||
        run.last >= static_cast<int>(proof->steps.size())) {
      ok = false;
      continue;
    }
    auto& steps = proof->steps;
    RewriteEnv env = base;
    env.bindings = run.bindings;

    std::vector<JustifiedChain> chains;
    std::size_t total = 0;
    bool bridged = true;
    for (int i = run.first; i <= run.last; ++i) {
      auto chain = fill_gap(steps[i - 1].term, steps[i].term, env, budget);
      if (!chain || chain->steps.empty()) {
        result.diagnostics.push_back(make_error(
            Code::kUnjustifiedStep,
            "no chain of at most " + std::to_string(budget.max_depth) +
                " justified steps connects " + to_string(steps[i - 1].term) +
                " and " + to_string(steps[i].term),
            steps[i].span));
        bridged = false;
        break;
      }
      total += chain->steps.size();
      chains.push_back(std::move(*chain));
    }
    if (!bridged) {
      ok = false;
      continue;
    }
    std::size_t run_length = static_cast<std::size_t>(run.last - run.first + 1);
    if (total <= run_length) {
      for (int i = run.first; i <= run.last; ++i) {
        std::string message = "step " + std::to_string(i) +
                              " is irreparable by insertion";
        if (auto j = infer_step_justification(steps[i - 1].term,
                                              steps[i].term, env))
          message += "; replacing its justification with " + to_string(*j) +
                     " would justify it";
        const Span& span = steps[i].via ? steps[i].via->span : steps[i].span;
        result.diagnostics.push_back(
            make_error(Code::kUnjustifiedStep, message, span));
      }
      ok = false;
      continue;
    }

    std::vector<ProofStep> spliced(steps.begin(), steps.begin() + run.first);
    std::string inserted;
    for (std::size_t c = 0; c < chains.size(); ++c) {
      const auto& links = chains[c].steps;
      for (std::size_t l = 0; l + 1 < links.size(); ++l) {
        ProofStep s;
        s.term = links[l].term;
        s.via = links[l].via;
        spliced.push_back(std::move(s));
      }
      ProofStep original = steps[run.first + c];
      original.via = links.back().via;
      spliced.push_back(std::move(original));
      if (c) inserted += "; ";
      inserted += chain_text(chains[c]);
    }
    spliced.insert(spliced.end(), steps.begin() + run.last + 1, steps.end());
    for (std::size_t i = 0; i < spliced.size(); ++i)
      spliced[i].index = static_cast<int>(i);

    notes.push_back(make_note(
        Code::kRepairInserted,
        "replaced steps " + std::to_string(run.first) + ".." +
            std::to_string(run.last) + " of " + theorem.name + " by " +
            std::to_string(total) + " justified steps: " + inserted,
        steps[run.first].span));
    steps = std::move(spliced);
  }

  if (!ok) return result;

  VerificationReport again = verify_theorem(patched, registry);
  if (!again.accepted()) {
    result.diagnostics.push_back(make_error(
        Code::kUnjustifiedStep,
        "the repaired proof of " + theorem.name + " does not verify",
        theorem.span));
    return result;
  }
  std::sort(notes.begin(), notes.end(),
            [](const Diagnostic& a, const Diagnostic& b) {
              return a.span.line < b.span.line;
            });
  result.diagnostics.insert(result.diagnostics.end(), notes.begin(),
                            notes.end());
  result.theorem = std::move(patched);
  result.changed = true;
  return result;
}

}  // namespace axiotome
