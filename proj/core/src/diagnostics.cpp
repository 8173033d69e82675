#include "axiotome/diagnostics.hpp"

#include <algorithm>
#include <array>
#include <sstream>

namespace axiotome {

namespace {

struct CodeEntry {
  Code code;
  std::string_view name;
};

constexpr std::array<CodeEntry, 18> kCodes{{
    {Code::kSyntax, "E-SYNTAX"},
    {Code::kDupName, "E-DUP-NAME"},
    {Code::kUnresolved, "E-UNRESOLVED"},
    {Code::kArity, "E-ARITY"},
    {Code::kTypeMismatch, "E-TYPE-MISMATCH"},
    {Code::kNoConstructor, "E-NO-CONSTRUCTOR"},
    {Code::kUnjustifiedStep, "E-UNJUSTIFIED-STEP"},
    {Code::kUnknownRule, "E-UNKNOWN-RULE"},
    {Code::kPremissMismatch, "E-PREMISS-MISMATCH"},
    {Code::kEndpointMismatch, "E-ENDPOINT-MISMATCH"},
    {Code::kCoverage, "E-COVERAGE"},
    {Code::kStepNumbering, "E-STEP-NUMBERING"},
    {Code::kRestatement, "E-RESTATEMENT"},
    {Code::kInferredVia, "W-INFERRED-VIA"},
    {Code::kInhabitation, "W-INHABITATION"},
    {Code::kImplicitQuantifier, "W-IMPLICIT-QUANTIFIER"},
    {Code::kRepairInserted, "N-REPAIR-INSERTED"},
    {Code::kNothingToRepair, "N-NOTHING-TO-REPAIR"},
}};

constexpr std::array<Code, kCodes.size()> kCodeList = [] {
  std::array<Code, kCodes.size()> out{};
  for (std::size_t i = 0; i < kCodes.size(); ++i) out[i] = kCodes[i].code;
  return out;
}();

}  // namespace

std::string_view code_name(Code code) {
  for (const auto& entry : kCodes)
    if (entry.code == code) return entry.name;
  return "E-UNKNOWN";
}

std::span<const Code> all_codes() { return kCodeList; }

std::optional<Code> code_from_name(std::string_view name) {
  for (const auto& entry : kCodes)
    if (entry.name == name) return entry.code;
  return std::nullopt;
}

std::string_view severity_name(Severity severity) {
  switch (severity) {
    case Severity::kError:
      return "error";
    case Severity::kWarning:
      return "warning";
    case Severity::kNote:
      return "note";
  }
  return "error";
}

Diagnostic make_error(Code code, std::string message, Span span) {
  return Diagnostic{Severity::kError, code, std::move(message), std::move(span),
                    {}};
}

Diagnostic make_warning(Code code, std::string message, Span span) {
  return Diagnostic{Severity::kWarning, code, std::move(message),
                    std::move(span), {}};
}

Diagnostic make_note(Code code, std::string message, Span span) {
  return Diagnostic{Severity::kNote, code, std::move(message), std::move(span),
                    {}};
}

bool has_errors(std::span<const Diagnostic> diagnostics) {
  return std::any_of(diagnostics.begin(), diagnostics.end(),
                     [](const Diagnostic& d) { return d.is_error(); });
}

std::size_t count_code(std::span<const Diagnostic> diagnostics, Code code) {
  return static_cast<std::size_t>(
      std::count_if(diagnostics.begin(), diagnostics.end(),
                    [code](const Diagnostic& d) { return d.code == code; }));
}

void sort_diagnostics(std::vector<Diagnostic>& diagnostics) {
  std::stable_sort(diagnostics.begin(), diagnostics.end(),
                   [](const Diagnostic& a, const Diagnostic& b) {
                     if (a.span.file != b.span.file)
                       return a.span.file < b.span.file;
                     if (a.span.line != b.span.line)
                       return a.span.line < b.span.line;
                     return a.span.column < b.span.column;
                   });
}

static std::string location(const Span& span) {
  std::ostringstream out;
  out << (span.file.empty() ? "<input>" : span.file);
  if (span.valid()) out << ':' << span.line << ':' << span.column;
  return out.str();
}

std::string render_human(const Diagnostic& d, bool color) {
  std::ostringstream out;
  out << location(d.span) << ": ";
  if (color) {
    switch (d.severity) {
      case Severity::kError:
        out << "\x1b[1;31m";
        break;
      case Severity::kWarning:
        out << "\x1b[1;33m";
        break;
      case Severity::kNote:
        out << "\x1b[1;36m";
        break;
    }
  }
  out << severity_name(d.severity) << '[' << code_name(d.code) << ']';
  if (color) out << "\x1b[0m";
  out << ": " << d.message << '\n';
  for (const auto& note : d.related) {
    out << "    ";
    if (note.span.valid()) out << location(note.span) << ": ";
    out << note.text << '\n';
  }
  return out.str();
}

// Tabs and newlines become spaces.
static std::string flatten(std::string_view text) {
  std::string out(text);
  std::replace(out.begin(), out.end(), '\t', ' ');
  std::replace(out.begin(), out.end(), '\n', ' ');
  return out;
}

std::string render_machine(std::vector<Diagnostic> diagnostics) {
  sort_diagnostics(diagnostics);
  std::ostringstream out;
  for (const auto& d : diagnostics) {
    out << code_name(d.code) << '\t' << severity_name(d.severity) << '\t'
        << flatten(d.span.file) << '\t' << d.span.line << '\t'
        << d.span.column << '\t' << flatten(d.message) << '\n';
  }
  return out.str();
}

}  // namespace axiotome
