#include "doctest.h"

#include "axiotome/verifier.hpp"
#include "support/fixtures.hpp"

using namespace axiotome;
using axiotome::testing::boolean_library;
using axiotome::testing::env_for;
using axiotome::testing::kAcceptedTheoremFixtures;
using axiotome::testing::load_fixture;
using axiotome::testing::load_sources;
using axiotome::testing::term;

namespace {

VerificationReport verify_fixture(const std::string& name,
                                  VerifyOptions options = {}) {
  auto loaded = load_fixture(name);
  REQUIRE(loaded.registry);
  REQUIRE(loaded.theorems().size() == 1);
  return verify_theorem(*loaded.theorems()[0], loaded.reg(), options);
}

VerificationReport verify_source(std::string_view source,
                                 VerifyOptions options = {}) {
  auto loaded = boolean_library(source);
  REQUIRE(loaded.registry);
  REQUIRE(loaded.theorems().size() == 1);
  return verify_theorem(*loaded.theorems()[0], loaded.reg(), options);
}

std::size_t errors(const VerificationReport& r) {
  std::size_t n = 0;
  for (const auto& d : r.diagnostics) n += d.is_error();
  return n;
}

const char* kDeMorganHead =
    "theorem ¶dm: ∀a ∈ Boolean, ∀b ∈ Boolean: not(and(a, b)) ↔ "
    "or(not(a), not(b))\n"
    "proof by cases of (a, b) using (Boolean = False U True)²\n";

std::string de_morgan_case(const char* a, const char* b) {
  std::string A = a, B = b;
  std::string ranges = "(∀a ∈ " + A + ", ∀b ∈ " + B + ")";
  return "  case ∀a ∈ " + A + ", ∀b ∈ " + B + ":\n" +
         "    0. not(and(a, b))\n" +
         "    1. not(and(" + A + ", " + B + ")) via " + ranges + "\n" +
         "    2. or(not(" + A + "), not(" + B + ")) via ¶nope\n" +
         "    3. or(not(a), not(b)) via " + ranges + "\n";
}

}  // namespace

TEST_CASE("worked examples") {
  auto corrected = verify_fixture("not_not_false_corrected.axm");
  CHECK(corrected.accepted());
  CHECK(corrected.diagnostics.empty());

  auto bad = verify_fixture("notnotfalse_bad.axm");
  CHECK_FALSE(bad.accepted());
  CHECK(errors(bad) == 1);
  REQUIRE(count_code(bad.diagnostics, Code::kUnjustifiedStep) == 1);
  const auto& d = bad.diagnostics.front();
  CHECK(d.code == Code::kUnjustifiedStep);
  CHECK(d.span.line == 4);
  CHECK(d.span.column == 17);
  CHECK(d.message.find("$not°T") != std::string::npos);

  auto dm = verify_fixture("de_morgan.axm");
  CHECK_FALSE(dm.accepted());
  CHECK(errors(dm) == 4);
  CHECK(count_code(dm.diagnostics, Code::kUnjustifiedStep) == 4);
  std::vector<int> lines;
  for (const auto& x : dm.diagnostics) lines.push_back(x.span.line);
  CHECK(lines == std::vector<int>{8, 16, 24, 32});
  REQUIRE(dm.failures.size() == 4);
  for (const auto& run : dm.failures) {
    CHECK(run.first == 4);
    CHECK(run.last == 5);
    CHECK(run.bindings.size() == 2);
  }

  CHECK(verify_fixture("triple_negation.axm").accepted());
}

TEST_CASE("every accepted corpus proof verifies") {
  for (const auto& name : kAcceptedTheoremFixtures) {
    CAPTURE(name);
    auto report = verify_fixture(name);
    CHECK(report.accepted());
    CHECK(errors(report) == 0);
  }
}

TEST_CASE("missing via is inferred, or rejected in strict mode") {
  auto lenient = verify_fixture("not_not_false.axm");
  CHECK(lenient.accepted());
  REQUIRE(lenient.inferred.size() == 1);
  CHECK(lenient.inferred[0].step == 2);
  CHECK(to_string(lenient.inferred[0].via) == "$not°T");
  REQUIRE(count_code(lenient.diagnostics, Code::kInferredVia) == 1);
  CHECK(lenient.diagnostics.front().severity == Severity::kWarning);

  auto strict = verify_fixture("not_not_false.axm", {true});
  CHECK_FALSE(strict.accepted());
  REQUIRE(count_code(strict.diagnostics, Code::kInferredVia) == 1);
  CHECK(strict.diagnostics.front().is_error());
}

TEST_CASE("uninferable missing via") {
  auto r = verify_source(
      "theorem ¶t: not(not(False)) ↔ False\nproof\n"
      "  0. not(not(False))\n  1. False\n");
  CHECK_FALSE(r.accepted());
  REQUIRE(count_code(r.diagnostics, Code::kUnjustifiedStep) == 1);
}

TEST_CASE("verify_linear") {
  auto lib = boolean_library();
  REQUIRE(lib.registry);
  auto env = env_for(lib.reg(), {{"a", "False"}});
  std::vector<ProofStep> steps(3);
  steps[0].term = term("and(False, a)", {"a"});
  steps[1] = {1, term("and(False, False)"), testing::via("∀a ∈ False"), {}, {}};
  steps[2] = {2, term("False"), testing::via("$and.FF"), {}, {}};
  CHECK(verify_linear(term("and(False, a)", {"a"}), term("False"), steps, env)
            .empty());

  std::vector<ProofStep> single(1);
  single[0].term = term("False");
  CHECK(verify_linear(term("False"), term("False"), single, env).empty());

  auto gap = steps;
  gap.erase(gap.begin() + 1);
  gap[1].index = 2;
  gap[1].via = testing::via("$and°FF");
  auto d = verify_linear(term("and(False, False)"), term("False"), gap, env);
  CHECK(count_code(d, Code::kStepNumbering) == 1);
}

TEST_CASE("endpoints") {
  auto premiss = verify_source(
      "theorem ¶t: not(False) ↔ True\nproof\n  0. not(True)\n"
      "  1. False via $not°T\n");
  CHECK(count_code(premiss.diagnostics, Code::kPremissMismatch) == 1);
  auto endpoint = verify_source(
      "theorem ¶t: not(not(False)) ↔ False\nproof\n  0. not(not(False))\n"
      "  1. not(True) via $not°F\n");
  CHECK(count_code(endpoint.diagnostics, Code::kEndpointMismatch) == 1);
  auto reflexive = verify_source(
      "theorem ¶t: not(False) ↔ not(False)\nproof\n  0. not(False)\n");
  CHECK(reflexive.accepted());
}

TEST_CASE("a justified premiss is reported") {
  auto r = verify_source(
      "theorem ¶t: not(False) ↔ True\nproof\n  0. not(False) via $not°F\n"
      "  1. True via $not°F\n");
  CHECK(count_code(r.diagnostics, Code::kPremissMismatch) == 1);
}

TEST_CASE("unknown rule in a proof") {
  auto r = verify_source(
      "theorem ¶t: not(False) ↔ True\nproof\n  0. not(False)\n"
      "  1. True via $not°Q\n");
  CHECK_FALSE(r.accepted());
  CHECK(count_code(r.diagnostics, Code::kUnknownRule) == 1);
  CHECK(count_code(r.diagnostics, Code::kUnjustifiedStep) == 0);
}

TEST_CASE("case coverage") {
  std::string full = kDeMorganHead;
  for (auto [a, b] : {std::pair{"False", "False"}, {"False", "True"},
                      {"True", "False"}, {"True", "True"}})
    full += de_morgan_case(a, b);
  auto lib = boolean_library(full);
  REQUIRE(lib.registry);
  const auto& cases = std::get<ByCases>(lib.theorems()[0]->proof);
  CHECK(check_case_coverage(cases.decomposition, cases.subjects, cases.cases,
                            lib.reg())
            .empty());

  auto missing = cases.cases;
  missing.pop_back();
  auto m = check_case_coverage(cases.decomposition, cases.subjects, missing,
                               lib.reg());
  REQUIRE(m.size() == 1);
  CHECK(m[0].code == Code::kCoverage);
  CHECK(m[0].message.find("∀a ∈ True, ∀b ∈ True") != std::string::npos);

  auto dup = cases.cases;
  dup.push_back(cases.cases.front());
  CHECK(count_code(check_case_coverage(cases.decomposition, cases.subjects, dup,
                                       lib.reg()),
                   Code::kCoverage) == 1);

  auto wrong = cases.decomposition;
  wrong.summands = {TypeExpr("False"), TypeExpr("False")};
  CHECK(count_code(check_case_coverage(wrong, cases.subjects, cases.cases,
                                       lib.reg()),
                   Code::kCoverage) >= 1);
}

TEST_CASE("range over a non-subject is a coverage error") {
  auto r = verify_source(
      "theorem ¶t: ∀a ∈ Boolean, ∀b ∈ Boolean: and(a, b) ↔ and(a, b)\n"
      "proof by cases of a using Boolean = False U True\n"
      "case ∀b ∈ False:\n  0. and(a, b)\n"
      "case ∀a ∈ True:\n  0. and(a, b)\n");
  CHECK(count_code(r.diagnostics, Code::kCoverage) >= 1);
}

TEST_CASE("range type without a nullary constructor") {
  auto loaded = load_sources(
      {"natural_numbers.axm"},
      "function isZero(n: NaturalNumber) : NaturalNumber\n"
      "  allowing $z°Z: isZero(Zero) ↔ Zero\n"
      "theorem ¶t: ∀n ∈ NaturalNumber: isZero(n) ↔ isZero(n)\n"
      "proof by cases of n using NaturalNumber = Zero U Successor\n"
      "case ∀n ∈ Zero:\n  0. isZero(n)\n"
      "case ∀n ∈ Successor:\n  0. isZero(n)\n");
  REQUIRE(loaded.registry);
  auto r = verify_theorem(*loaded.theorems()[0], loaded.reg());
  CHECK(count_code(r.diagnostics, Code::kNoConstructor) == 1);
}

TEST_CASE("restated assertions") {
  auto ok = verify_fixture("or_commutates.axm");
  CHECK(ok.accepted());
  CHECK(count_code(ok.diagnostics, Code::kImplicitQuantifier) == 2);

  auto loaded = load_sources(
      {"boolean_types.axm", "supplement.axm", "or.axm"},
      "theorem ¶t: a ∨ b ↔ b ∨ a\n"
      "proof by cases of a using Boolean = False U True\n"
      "case A: ∀a ∈ False: a ∨ b ↔ a ∨ b\n"
      "proof by cases of b using Boolean = False U True\n"
      "case A1: ∀b ∈ False:\n  0. a ∨ b\n"
      "  1. False ∨ False via ∀a ∈ False, ∀b ∈ False\n"
      "  2. b ∨ a via ∀a ∈ False, ∀b ∈ False\n"
      "case A2: ∀b ∈ True:\n  0. a ∨ b\n"
      "  1. False ∨ True via ∀a ∈ False, ∀b ∈ True\n"
      "  2. True via $or°FT\n  3. True ∨ False via $or°TF\n"
      "  4. b ∨ a via ∀a ∈ False, ∀b ∈ True\n"
      "case B: ∀a ∈ True:\n"
      "proof by cases of b using Boolean = False U True\n"
      "case B1: ∀b ∈ False:\n  0. a ∨ b\n"
      "  1. True ∨ False via ∀a ∈ True, ∀b ∈ False\n"
      "  2. True via $or°TF\n  3. False ∨ True via $or°FT\n"
      "  4. b ∨ a via ∀a ∈ True, ∀b ∈ False\n"
      "case B2: ∀b ∈ True:\n  0. a ∨ b\n"
      "  1. True ∨ True via ∀a ∈ True, ∀b ∈ True\n"
      "  2. b ∨ a via ∀a ∈ True, ∀b ∈ True\n",
      {{"∨", "or"}});
  REQUIRE(loaded.registry);
  auto r = verify_theorem(*loaded.theorems()[0], loaded.reg());
  CHECK_FALSE(r.accepted());
  CHECK(count_code(r.diagnostics, Code::kRestatement) == 1);
}

TEST_CASE("enter_case accepts both premiss forms") {
  auto lib = boolean_library(
      "theorem ¶t: ∀a ∈ Boolean: and(False, a) ↔ False\n"
      "proof by cases of a using Boolean = False U True\n"
      "case ∀a ∈ False:\n  0. and(False, False)\n  1. False via $and°FF\n"
      "case ∀a ∈ True:\n  0. and(False, a)\n"
      "  1. and(False, True) via ∀a ∈ True\n  2. False via $and°FT\n");
  REQUIRE(lib.registry);
  const auto* entry = lib.reg().find_theorem("¶t");
  REQUIRE(entry != nullptr);
  const auto& cases = std::get<ByCases>(entry->decl.proof);
  auto env = env_for(lib.reg());
  auto c = enter_case(cases.cases[0], cases, entry->decl.lhs, entry->decl.rhs,
                      env);
  CHECK(c.diagnostics.empty());
  REQUIRE(c.premisses.size() == 2);
  CHECK(c.premisses[0] == entry->decl.lhs);
  CHECK(c.premisses[1] == term("and(False, False)"));
  REQUIRE(c.env.bindings.size() == 1);
  CHECK(c.env.bindings[0].constructor == term("False"));
  CHECK(verify_theorem(entry->decl, lib.reg()).accepted());
}

TEST_CASE("nested cases verify like their flattening") {
  auto nested = verify_fixture("or_commutates.axm");
  auto loaded = load_sources(
      {"boolean_types.axm", "supplement.axm", "or.axm"},
      "theorem ¶or°Commutates: a ∨ b ↔ b ∨ a\n"
      "proof by cases of (a, b) using (Boolean = False U True)²\n"
      "case ∀a ∈ False, ∀b ∈ False:\n  0. a ∨ b\n"
      "  1. False ∨ False via ∀a ∈ False, ∀b ∈ False\n"
      "  2. b ∨ a via ∀a ∈ False, ∀b ∈ False\n"
      "case ∀a ∈ False, ∀b ∈ True:\n  0. a ∨ b\n"
      "  1. False ∨ True via ∀a ∈ False, ∀b ∈ True\n"
      "  2. True via $or°FT\n  3. True ∨ False via $or°TF\n"
      "  4. b ∨ a via ∀a ∈ False, ∀b ∈ True\n"
      "case ∀a ∈ True, ∀b ∈ False:\n  0. a ∨ b\n"
      "  1. True ∨ False via ∀a ∈ True, ∀b ∈ False\n"
      "  2. True via $or°TF\n  3. False ∨ True via $or°FT\n"
      "  4. b ∨ a via ∀a ∈ True, ∀b ∈ False\n"
      "case ∀a ∈ True, ∀b ∈ True:\n  0. a ∨ b\n"
      "  1. True ∨ True via ∀a ∈ True, ∀b ∈ True\n"
      "  2. b ∨ a via ∀a ∈ True, ∀b ∈ True\n",
      {{"∨", "or"}});
  REQUIRE(loaded.registry);
  auto flat = verify_theorem(*loaded.theorems()[0], loaded.reg());
  CHECK(nested.accepted() == flat.accepted());
  CHECK(errors(nested) == errors(flat));
  CHECK(flat.accepted());
}

TEST_CASE("unjustified runs inside nested cases carry their case path") {
  std::string source = kDeMorganHead;
  for (auto [a, b] : {std::pair{"False", "False"}, {"False", "True"},
                      {"True", "False"}, {"True", "True"}})
    source += de_morgan_case(a, b);
  auto r = verify_source(source);
  CHECK(count_code(r.diagnostics, Code::kUnknownRule) == 4);
  CHECK(r.failures.empty());
}

TEST_CASE("verification is deterministic") {
  auto a = verify_fixture("de_morgan.axm");
  auto b = verify_fixture("de_morgan.axm");
  REQUIRE(a.diagnostics.size() == b.diagnostics.size());
  for (std::size_t i = 0; i < a.diagnostics.size(); ++i)
    CHECK(render_human(a.diagnostics[i]) == render_human(b.diagnostics[i]));
}

TEST_CASE("find_linear follows case paths") {
  auto loaded = load_fixture("or_commutates.axm");
  REQUIRE(loaded.registry);
  const auto& proof = loaded.theorems()[0]->proof;
  const auto* b2 = find_linear(proof, {1, 1});
  REQUIRE(b2 != nullptr);
  CHECK(b2->steps.size() == 3);
  CHECK(find_linear(proof, {0}) == nullptr);
  CHECK(find_linear(proof, {2, 0}) == nullptr);
}
