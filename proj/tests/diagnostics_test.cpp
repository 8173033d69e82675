#include "doctest.h"

#include <algorithm>
#include <set>
#include <sstream>

#include "axiotome/diagnostics.hpp"
#include "axiotome/search.hpp"
#include "axiotome/verifier.hpp"
#include "support/fixtures.hpp"

using namespace axiotome;
using axiotome::testing::load_fixture;
using axiotome::testing::load_sources;

namespace {

Span at(std::string file, int line, int column) {
  Span s;
  s.file = std::move(file);
  s.line = line;
  s.column = column;
  s.length = 1;
  return s;
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::string field;
  std::istringstream in(text);
  while (std::getline(in, field, sep)) out.push_back(field);
  return out;
}

char severity_prefix(Severity s) {
  return s == Severity::kError ? 'E' : s == Severity::kWarning ? 'W' : 'N';
}

// Everything the kernel says about the corpus, plus a handful of broken inputs.
std::vector<Diagnostic> kernel_output() {
  std::vector<Diagnostic> all;
  auto take = [&](const std::vector<Diagnostic>& ds) {
    all.insert(all.end(), ds.begin(), ds.end());
  };
  for (const auto& name : testing::fixture_names()) {
    auto loaded = load_fixture(name);
    take(loaded.diagnostics);
    if (!loaded.registry) continue;
    for (const auto* th : loaded.theorems()) {
      auto report = verify_theorem(*th, loaded.reg());
      take(report.diagnostics);
      if (!report.accepted() || name == "triple_negation.axm")
        take(repair_proof(*th, report, loaded.reg()).diagnostics);
    }
  }
  const char* broken[] = {
      "type X ≡ Sum[Missing]\n",
      "type Loop ≡ Product[next: Loop]\n",
      "function id(b: Boolean) : Boolean\n  allowing $x: id(False, True) ↔ True\n",
      "theorem ¶t: not(False) ↔ True\nproof\n  0. not(False)\n  2. True via $not°F\n",
      "theorem ¶t: not(False) ↔ True\nproof\n  0. not(False)\n  1. True via $nope\n",
      "theorem ¶u: not(a) ↔ not(a)\nproof\n  0. not(a)\n",
      "theorem ¶v: ∀a ∈ Boolean: not(a) ↔ not(a)\n"
      "proof by cases of a using Boolean = False U True\n"
      "case ∀a ∈ False:\n  0. not(a)\n",
      "type",
  };
  for (const char* source : broken) {
    auto loaded = load_sources({"boolean_types.axm", "supplement.axm", "not.axm"},
                               source);
    take(loaded.diagnostics);
    if (!loaded.registry) continue;
    for (const auto* th : loaded.theorems())
      take(verify_theorem(*th, loaded.reg()).diagnostics);
  }
  return all;
}

}  // namespace

TEST_CASE("code set is closed and names round trip") {
  std::set<std::string_view> names;
  for (Code c : all_codes()) {
    auto name = code_name(c);
    CHECK(name != "E-UNKNOWN");
    CHECK(names.insert(name).second);
    CHECK(code_from_name(name) == c);
  }
  CHECK(names.size() == all_codes().size());
  for (const char* published :
       {"E-SYNTAX", "E-DUP-NAME", "E-UNRESOLVED", "E-ARITY", "E-TYPE-MISMATCH",
        "E-NO-CONSTRUCTOR", "E-UNJUSTIFIED-STEP", "E-UNKNOWN-RULE",
        "E-PREMISS-MISMATCH", "E-ENDPOINT-MISMATCH", "E-COVERAGE",
        "E-STEP-NUMBERING", "E-RESTATEMENT", "W-INFERRED-VIA",
        "W-INHABITATION", "W-IMPLICIT-QUANTIFIER"})
    CHECK(code_from_name(published).has_value());
  CHECK_FALSE(code_from_name("E-NOPE"));
}

TEST_CASE("every kernel-emitted code belongs to the closed set") {
  auto emitted = kernel_output();
  REQUIRE(emitted.size() > 20);
  std::set<Code> seen;
  for (const auto& d : emitted) {
    auto name = code_name(d.code);
    CAPTURE(d.message);
    CHECK(code_from_name(name) == d.code);
    CHECK(name.front() == severity_prefix(d.severity));
    seen.insert(d.code);
  }
  for (Code c : {Code::kSyntax, Code::kUnresolved, Code::kArity,
                 Code::kUnjustifiedStep, Code::kUnknownRule,
                 Code::kStepNumbering, Code::kCoverage, Code::kInferredVia,
                 Code::kInhabitation, Code::kImplicitQuantifier,
                 Code::kRepairInserted, Code::kNothingToRepair})
    CHECK_MESSAGE(seen.count(c) == 1, code_name(c));
}

TEST_CASE("kernel spans point into real source") {
  for (const auto& d : kernel_output()) {
    if (d.span.file.empty()) continue;
    CAPTURE(d.message);
    CHECK(d.span.valid());
    CHECK(d.span.column >= 1);
  }
}

TEST_CASE("render_human for the faulty double negation") {
  auto loaded = load_fixture("notnotfalse_bad.axm");
  REQUIRE(loaded.registry);
  auto report = verify_theorem(*loaded.theorems()[0], loaded.reg());
  std::string error, warning;
  for (const auto& d : report.diagnostics) {
    if (d.code == Code::kUnjustifiedStep) error = render_human(d);
    if (d.code == Code::kInferredVia) warning = render_human(d);
  }
  CHECK(error.substr(0, error.find('\n')) ==
        "notnotfalse_bad.axm:4:17: error[E-UNJUSTIFIED-STEP]: axiom $not°T does "
        "not transform not(not(False)) into not(True)");
  CHECK(warning.find("[W-INFERRED-VIA]") != std::string::npos);
}

TEST_CASE("render_human details") {
  auto note = make_note(Code::kNothingToRepair, "fine", at("x.axm", 2, 3));
  CHECK(render_human(note) == "x.axm:2:3: note[N-NOTHING-TO-REPAIR]: fine\n");

  auto d = make_error(Code::kCoverage, "gap", at("x.axm", 1, 1));
  d.related.push_back({at("x.axm", 5, 2), "see here"});
  d.related.push_back({{}, "unlocated"});
  auto text = render_human(d);
  auto lines = split(text, '\n');
  REQUIRE(lines.size() == 3);
  CHECK(lines[1] == "    x.axm:5:2: see here");
  CHECK(lines[2] == "    unlocated");

  auto colored = render_human(d, true);
  CHECK(colored.find("\x1b[") != std::string::npos);
  CHECK(text.find("\x1b[") == std::string::npos);
}

TEST_CASE("render_machine") {
  CHECK(render_machine({}).empty());

  auto one = render_machine({make_error(Code::kArity, "bad\targs", at("a.axm", 3, 7))});
  CHECK(one == "E-ARITY\terror\ta.axm\t3\t7\tbad args\n");
  CHECK(split(one.substr(0, one.size() - 1), '\t').size() == 6);

  std::vector<Diagnostic> ds{
      make_warning(Code::kInferredVia, "w", at("b.axm", 1, 1)),
      make_error(Code::kSyntax, "late", at("a.axm", 9, 1)),
      make_error(Code::kSyntax, "early col", at("a.axm", 2, 5)),
      make_error(Code::kSyntax, "early", at("a.axm", 2, 1)),
      make_note(Code::kRepairInserted, "multi\nline", at("a.axm", 2, 1)),
  };
  auto text = render_machine(ds);
  auto lines = split(text, '\n');
  REQUIRE(lines.size() == ds.size());
  CHECK(lines[0] == "E-SYNTAX\terror\ta.axm\t2\t1\tearly");
  CHECK(lines[1] == "N-REPAIR-INSERTED\tnote\ta.axm\t2\t1\tmulti line");
  CHECK(lines[2] == "E-SYNTAX\terror\ta.axm\t2\t5\tearly col");
  CHECK(lines[3] == "E-SYNTAX\terror\ta.axm\t9\t1\tlate");
  CHECK(lines[4] == "W-INFERRED-VIA\twarning\tb.axm\t1\t1\tw");
  for (const auto& line : lines) CHECK(split(line, '\t').size() == 6);
}

TEST_CASE("machine line count equals diagnostic count over kernel output") {
  auto emitted = kernel_output();
  auto text = render_machine(emitted);
  CHECK(static_cast<std::size_t>(std::count(text.begin(), text.end(), '\n')) ==
        emitted.size());
}

TEST_CASE("helpers") {
  std::vector<Diagnostic> ds{make_warning(Code::kInferredVia, "w"),
                             make_note(Code::kRepairInserted, "n")};
  CHECK_FALSE(has_errors(ds));
  ds.push_back(make_error(Code::kCoverage, "e"));
  CHECK(has_errors(ds));
  CHECK(count_code(ds, Code::kCoverage) == 1);
  CHECK(severity_name(Severity::kNote) == "note");
}
