#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

namespace axiotome {

// Source location. operator== is true for any pair, which keeps spans out
// of AST equality; compare fields directly when needed.
struct Span {
  std::string file;
  int line = 0;
  int column = 0;
  int length = 0;

  bool valid() const { return line > 0; }
  friend bool operator==(const Span&, const Span&) { return true; }
};

enum class Severity { kError, kWarning, kNote };

// The published closed set of diagnostic codes.
enum class Code {
  kSyntax,
  kDupName,
  kUnresolved,
  kArity,
  kTypeMismatch,
  kNoConstructor,
  kUnjustifiedStep,
  kUnknownRule,
  kPremissMismatch,
  kEndpointMismatch,
  kCoverage,
  kStepNumbering,
  kRestatement,
  kInferredVia,
  kInhabitation,
  kImplicitQuantifier,
  kRepairInserted,
  kNothingToRepair,
};

std::string_view code_name(Code code);
std::span<const Code> all_codes();
std::optional<Code> code_from_name(std::string_view name);
std::string_view severity_name(Severity severity);

struct RelatedNote {
  Span span;
  std::string text;
};

struct Diagnostic {
  Severity severity = Severity::kError;
  Code code = Code::kSyntax;
  std::string message;
  Span span;
  std::vector<RelatedNote> related;

  bool is_error() const { return severity == Severity::kError; }
};

Diagnostic make_error(Code code, std::string message, Span span = {});
Diagnostic make_warning(Code code, std::string message, Span span = {});
Diagnostic make_note(Code code, std::string message, Span span = {});

bool has_errors(std::span<const Diagnostic> diagnostics);
std::size_t count_code(std::span<const Diagnostic> diagnostics, Code code);

// Sorts by (file, line, column); stable for equal locations.
void sort_diagnostics(std::vector<Diagnostic>& diagnostics);

// `file:line:col: severity[CODE]: message`, related notes indented below.
// With `color`, the severity token is wrapped in ANSI escapes.
std::string render_human(const Diagnostic& diagnostic, bool color = false);

// One tab-separated record per diagnostic:
// code, severity, file, line, column, message. Sorted by location.
std::string render_machine(std::vector<Diagnostic> diagnostics);

// Value-or-diagnostics result used across the kernel.
template <typename T>
class Result {
 public:
  Result(T value) : data_(std::move(value)) {}  // NOLINT
  Result(std::vector<Diagnostic> errors) : data_(std::move(errors)) {}  // NOLINT
  Result(Diagnostic error)  // NOLINT
      : data_(std::vector<Diagnostic>{std::move(error)}) {}

  bool ok() const { return std::holds_alternative<T>(data_); }
  explicit operator bool() const { return ok(); }

  const T& value() const& { return std::get<T>(data_); }
  T& value() & { return std::get<T>(data_); }
  T&& value() && { return std::get<T>(std::move(data_)); }
  const T& operator*() const& { return value(); }
  const T* operator->() const { return &value(); }

  const std::vector<Diagnostic>& errors() const {
    return std::get<std::vector<Diagnostic>>(data_);
  }

 private:
  std::variant<T, std::vector<Diagnostic>> data_;
};

}  // namespace axiotome
