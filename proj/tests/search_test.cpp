#include "doctest.h"

#include <algorithm>
#include <variant>

#include "axiotome/search.hpp"
#include "axiotome/syntax.hpp"
#include "support/fixtures.hpp"
#include "support/oracles.hpp"

using namespace axiotome;
using axiotome::testing::boolean_library;
using axiotome::testing::env_for;
using axiotome::testing::load_fixture;
using axiotome::testing::load_sources;
using axiotome::testing::term;

namespace {

const testing::Loaded& lib() {
  static const testing::Loaded loaded = boolean_library();
  return loaded;
}

std::string via_text(const std::optional<Justification>& j) {
  return j ? to_string(*j) : "<none>";
}

std::vector<const LinearProof*> case_bodies(const TheoremDecl& th) {
  std::vector<const LinearProof*> out;
  const auto& cases = std::get<ByCases>(th.proof);
  for (const auto& c : cases.cases)
    out.push_back(&std::get<LinearProof>(*c.body));
  return out;
}

}  // namespace

TEST_CASE("infer_step_justification") {
  auto env = env_for(lib().reg());
  CHECK(via_text(infer_step_justification(term("not(True)"), term("False"),
                                          env)) == "$not°T");
  CHECK(via_text(infer_step_justification(term("True"), term("or(True, True)"),
                                          env)) == "$or°TT");
  CHECK(via_text(infer_step_justification(term("not(not(False))"),
                                          term("not(True)"), env)) == "$not°F");

  auto ands = load_sources({"boolean_types.axm", "supplement.axm", "and.axm"});
  REQUIRE(ands.registry);
  CHECK_FALSE(infer_step_justification(term("False"), term("True"),
                                       env_for(ands.reg())));
}

TEST_CASE("inference prefers axioms in registry order") {
  auto env = env_for(lib().reg());
  std::size_t compared = 0;
  for (const auto& t : testing::boolean_terms(2, true)) {
    for (const auto& s : successors(t, env)) {
      if (s.via.is_ranges() || s.via.rules.size() != 1) continue;
      auto inferred = infer_step_justification(t, s.term, env);
      auto oracle = testing::first_certifying_axiom(t, s.term, env);
      REQUIRE(inferred);
      if (oracle) {
        CHECK(to_string(*inferred) == *oracle);
        ++compared;
      }
    }
  }
  CHECK(compared > 100);
}

TEST_CASE("ranges are inferred after axioms") {
  auto env = env_for(lib().reg(), {{"a", "False"}});
  auto j = infer_step_justification(term("not(a)", {"a"}), term("not(False)"),
                                    env);
  REQUIRE(j);
  CHECK(j->is_ranges());
  CHECK_FALSE(infer_step_justification(term("not(a)", {"a"}),
                                       term("not(False)"), env,
                                       InferOptions{false}));
}

TEST_CASE("fill_gap finds the missing disjunction steps") {
  auto env = env_for(lib().reg(), {{"a", "False"}, {"b", "False"}});
  auto chain = fill_gap(term("True"), term("or(not(a), not(b))", {"a", "b"}),
                        env, SearchBudget{3, 50'000});
  REQUIRE(chain);
  REQUIRE(chain->steps.size() == 3);
  CHECK(format(chain->steps[0].term) == "or(True, True)");
  CHECK(to_string(chain->steps[0].via) == "$or°TT");
  CHECK(format(chain->steps[1].term) == "or(not(False), not(False))");
  CHECK(to_string(chain->steps[1].via) == "($not°F, $not°F)");
  CHECK(format(chain->steps[2].term) == "or(not(a), not(b))");
  CHECK(to_string(chain->steps[2].via) == "(∀a ∈ False, ∀b ∈ False)");
}

TEST_CASE("fill_gap trivial and impossible gaps") {
  auto env = env_for(lib().reg());
  auto same = fill_gap(term("not(False)"), term("not(False)"), env);
  REQUIRE(same);
  CHECK(same->steps.empty());
  CHECK_FALSE(fill_gap(term("False"), term("Zero"), env));
  CHECK_FALSE(fill_gap(term("False"), term("True"), env, SearchBudget{4, 5000}));
}

TEST_CASE("every returned link is justified") {
  auto env = env_for(lib().reg());
  const char* pairs[][2] = {
      {"not(not(False))", "False"},
      {"and(True, or(False, True))", "True"},
      {"True", "not(and(True, False))"},
      {"if(False, True, False)", "not(True)"},
      {"or(False, False)", "and(True, False)"},
  };
  for (const auto& p : pairs) {
    CAPTURE(p[0]);
    auto chain = fill_gap(term(p[0]), term(p[1]), env);
    REQUIRE(chain);
    Term prev = chain->from;
    for (const auto& link : chain->steps) {
      CHECK(check_justified_step(prev, link.term, link.via, env).justified);
      prev = link.term;
    }
    CHECK(prev == term(p[1]));
  }
}

TEST_CASE("fill_gap chains are shortest") {
  auto env = env_for(lib().reg());
  std::size_t compared = 0;
  for (const auto& from : testing::boolean_terms(2, false)) {
    std::vector<Term> frontier = {from};
    std::vector<Term> targets;
    for (int layer = 0; layer < 2; ++layer) {
      std::vector<Term> next;
      for (const auto& t : frontier)
        for (const auto& s : successors(t, env)) next.push_back(s.term);
      targets.insert(targets.end(), next.begin(), next.end());
      frontier = std::move(next);
    }
    std::sort(targets.begin(), targets.end(), [](const Term& a, const Term& b) {
      return to_string(a) < to_string(b);
    });
    targets.erase(std::unique(targets.begin(), targets.end()), targets.end());
    for (std::size_t i = 0; i < targets.size(); i += 97) {
      const auto& to = targets[i];
      auto expected = testing::bfs_distance(from, to, env, 3);
      REQUIRE(expected);
      auto chain = fill_gap(from, to, env, SearchBudget{3, 50'000});
      REQUIRE(chain);
      CHECK(chain->steps.size() == *expected);
      ++compared;
    }
  }
  CHECK(compared > 200);
}

TEST_CASE("distance three gaps are found at their BFS distance") {
  auto env = env_for(lib().reg());
  const char* pairs[][2] = {
      {"False", "not(or(True, False))"},
      {"True", "and(not(False), not(False))"},
      {"not(True)", "and(or(True, False), False)"},
  };
  for (const auto& p : pairs) {
    CAPTURE(p[0]);
    auto expected = testing::bfs_distance(term(p[0]), term(p[1]), env, 3);
    auto chain = fill_gap(term(p[0]), term(p[1]), env, SearchBudget{3, 50'000});
    REQUIRE(expected.has_value() == chain.has_value());
    if (chain) CHECK(chain->steps.size() == *expected);
  }
}

TEST_CASE("search is deterministic") {
  auto env = env_for(lib().reg(), {{"a", "True"}, {"b", "False"}});
  auto a = fill_gap(term("True"), term("or(not(a), not(b))", {"a", "b"}), env);
  auto b = fill_gap(term("True"), term("or(not(a), not(b))", {"a", "b"}), env);
  REQUIRE(a);
  REQUIRE(b);
  REQUIRE(a->steps.size() == b->steps.size());
  for (std::size_t i = 0; i < a->steps.size(); ++i) {
    CHECK(a->steps[i].term == b->steps[i].term);
    CHECK(to_string(a->steps[i].via) == to_string(b->steps[i].via));
  }
}

TEST_CASE("repair of the De Morgan proof") {
  auto loaded = load_fixture("de_morgan.axm");
  REQUIRE(loaded.registry);
  const auto& th = *loaded.theorems()[0];
  auto report = verify_theorem(th, loaded.reg());
  REQUIRE_FALSE(report.accepted());
  auto repaired = repair_proof(th, report, loaded.reg(), SearchBudget{3, 50'000});
  REQUIRE(repaired.theorem);
  CHECK(repaired.changed);
  CHECK(count_code(repaired.diagnostics, Code::kRepairInserted) == 4);
  CHECK_FALSE(has_errors(repaired.diagnostics));
  CHECK(verify_theorem(*repaired.theorem, loaded.reg()).accepted());

  auto originals = case_bodies(th);
  auto patched = case_bodies(*repaired.theorem);
  REQUIRE(patched.size() == 4);
  const char* expected_or[] = {"or(True, True)", "or(True, False)",
                               "or(False, True)", "or(False, False)"};
  const char* expected_ax[] = {"$or°TT", "$or°TF", "$or°FT", "$or°FF"};
  for (std::size_t c = 0; c < 4; ++c) {
    CAPTURE(c);
    const auto& steps = patched[c]->steps;
    REQUIRE(steps.size() == 7);
    for (std::size_t i = 0; i < steps.size(); ++i)
      CHECK(steps[i].index == static_cast<int>(i));
    CHECK(format(steps[4].term) == expected_or[c]);
    CHECK(to_string(*steps[4].via) == expected_ax[c]);
    // Original terms survive, in order.
    std::size_t k = 0;
    for (const auto& s : steps)
      if (k < originals[c]->steps.size() &&
          format(s.term) == format(originals[c]->steps[k].term))
        ++k;
    CHECK(k == originals[c]->steps.size());
  }
}

TEST_CASE("repair leaves accepted proofs alone") {
  auto loaded = load_fixture("triple_negation.axm");
  REQUIRE(loaded.registry);
  const auto& th = *loaded.theorems()[0];
  auto report = verify_theorem(th, loaded.reg());
  auto r = repair_proof(th, report, loaded.reg());
  REQUIRE(r.theorem);
  CHECK_FALSE(r.changed);
  CHECK(*r.theorem == th);
  CHECK(count_code(r.diagnostics, Code::kNothingToRepair) == 1);
}

TEST_CASE("repair refuses non-gap failures") {
  auto loaded = boolean_library(
      "theorem ¶t: not(not(False)) ↔ False\nproof\n  0. not(not(False))\n"
      "  1. not(True) via $not°F\n");
  REQUIRE(loaded.registry);
  const auto& th = *loaded.theorems()[0];
  auto report = verify_theorem(th, loaded.reg());
  REQUIRE(count_code(report.diagnostics, Code::kEndpointMismatch) == 1);
  auto r = repair_proof(th, report, loaded.reg());
  CHECK_FALSE(r.theorem);
}

TEST_CASE("a wrong via is irreparable by insertion") {
  auto loaded = load_fixture("notnotfalse_bad.axm");
  REQUIRE(loaded.registry);
  const auto& th = *loaded.theorems()[0];
  auto r = repair_proof(th, verify_theorem(th, loaded.reg()), loaded.reg());
  CHECK_FALSE(r.theorem);
  REQUIRE(count_code(r.diagnostics, Code::kUnjustifiedStep) == 1);
  const Diagnostic* d = nullptr;
  for (const auto& x : r.diagnostics)
    if (x.code == Code::kUnjustifiedStep) d = &x;
  CHECK(d->message.find("irreparable") != std::string::npos);
  CHECK(d->message.find("$not°F") != std::string::npos);
}

TEST_CASE("a small budget leaves the gap unfilled") {
  auto loaded = load_fixture("de_morgan.axm");
  REQUIRE(loaded.registry);
  const auto& th = *loaded.theorems()[0];
  auto r = repair_proof(th, verify_theorem(th, loaded.reg()), loaded.reg(),
                        SearchBudget{1, 50'000});
  CHECK_FALSE(r.theorem);
  CHECK(has_errors(r.diagnostics));
}
