#include "axiotome/ast.hpp"

#include <algorithm>

namespace axiotome {

bool operator==(const CaseBlock& a, const CaseBlock& b) {
  if (a.label != b.label || a.ranges != b.ranges || a.restated != b.restated)
    return false;
  if (!a.body || !b.body) return a.body == b.body;
  return *a.body == *b.body;
}

std::string to_string(const Justification& j) {
  std::string out;
  if (j.is_ranges()) {
    if (j.ranges.size() > 1) out += '(';
    for (std::size_t i = 0; i < j.ranges.size(); ++i) {
      if (i) out += ", ";
      out += "∀" + j.ranges[i].var + " ∈ " +
             to_string(j.ranges[i].type);
    }
    if (j.ranges.size() > 1) out += ')';
    return out;
  }
  if (j.rules.size() > 1) out += '(';
  for (std::size_t i = 0; i < j.rules.size(); ++i) {
    if (i) out += ", ";
    out += j.rules[i].name;
  }
  if (j.rules.size() > 1) out += ')';
  return out;
}

const Span& statement_span(const Statement& statement) {
  return std::visit([](const auto& s) -> const Span& { return s.span; },
                    statement);
}

Program merge_programs(const std::vector<Program>& programs) {
  Program merged;
  if (!programs.empty()) merged.source_name = programs.front().source_name;
  for (const auto& program : programs)
    merged.statements.insert(merged.statements.end(),
                             program.statements.begin(),
                             program.statements.end());
  return merged;
}

static void collect_subjects(const ProofBody& body,
                             std::vector<std::string>& out) {
  const auto* cases = std::get_if<ByCases>(&body);
  if (!cases) return;
  for (const auto& subject : cases->subjects)
    if (std::find(out.begin(), out.end(), subject) == out.end())
      out.push_back(subject);
  for (const auto& block : cases->cases)
    if (block.body) collect_subjects(*block.body, out);
}

std::vector<std::string> case_subjects(const ProofBody& body) {
  std::vector<std::string> out;
  collect_subjects(body, out);
  return out;
}

}  // namespace axiotome
