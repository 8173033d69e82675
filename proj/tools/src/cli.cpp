#include "axiotome/cli.hpp"

#include <fstream>
#include <future>
#include <iostream>
#include <sstream>
#include <utility>

#include "axiotome/syntax.hpp"
#include "axiotome/typesys.hpp"
#include "axiotome/verifier.hpp"

namespace axiotome::cli {

namespace {

struct Source {
  std::string path;
  std::string text;
};

struct Workspace {
  std::vector<Source> sources;
  std::vector<Program> programs;  // parallel to sources; empty on parse error
  std::vector<Diagnostic> diagnostics;
  std::optional<Registry> registry;
};

std::optional<std::string> read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return std::nullopt;
  std::ostringstream buffer;
  buffer << in.rdbuf();
  if (in.bad()) return std::nullopt;
  return buffer.str();
}

bool write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  out << text;
  return static_cast<bool>(out);
}

ParseOptions parse_options(const Flags& flags) {
  ParseOptions options;
  options.operators = flags.operators;
  return options;
}

// Reads libs then paths, parses them concurrently and builds the joint
// registry. Returns nullopt after reporting an unreadable file.
std::optional<Workspace> load(const std::vector<std::string>& paths,
                              const Flags& flags, std::ostream& err) {
  Workspace ws;
  auto add = [&](const std::string& path) {
    auto text = read_file(path);
    if (!text) {
      err << "axiotome: cannot read '" << path << "'\n";
      return false;
    }
    ws.sources.push_back({path, std::move(*text)});
    return true;
  };
  for (const auto& path : flags.libs)
    if (!add(path)) return std::nullopt;
  for (const auto& path : paths)
    if (!add(path)) return std::nullopt;

  auto options = parse_options(flags);
  std::vector<std::future<Result<Program>>> parses;
  for (const auto& src : ws.sources)
    parses.push_back(std::async(std::launch::async, [&src, &options] {
      return parse_program(src.text, src.path, options);
    }));
  bool parsed = true;
  for (auto& f : parses) {
    auto result = f.get();
    if (result) {
      ws.programs.push_back(std::move(result).value());
    } else {
      parsed = false;
      ws.programs.emplace_back();
      for (const auto& d : result.errors()) ws.diagnostics.push_back(d);
    }
  }
  if (!parsed) return ws;

  auto reg = build_registry(merge_programs(ws.programs));
  if (!reg) {
    for (const auto& d : reg.errors()) ws.diagnostics.push_back(d);
    return ws;
  }
  ws.registry = std::move(reg).value();
  for (auto& d : check_well_formed(*ws.registry))
    ws.diagnostics.push_back(std::move(d));
  return ws;
}

std::vector<const TheoremDecl*> theorems_of(const Workspace& ws) {
  std::vector<const TheoremDecl*> out;
  for (const auto& program : ws.programs)
    for (const auto& st : program.statements)
      if (const auto* th = std::get_if<TheoremDecl>(&st)) out.push_back(th);
  return out;
}

std::vector<VerificationReport> verify_all(
    const std::vector<const TheoremDecl*>& theorems, const Registry& reg,
    const VerifyOptions& options) {
  std::vector<std::future<VerificationReport>> jobs;
  for (const auto* th : theorems)
    jobs.push_back(std::async(std::launch::async, [th, &reg, &options] {
      return verify_theorem(*th, reg, options);
    }));
  std::vector<VerificationReport> reports;
  for (auto& job : jobs) reports.push_back(job.get());
  return reports;
}

void render(std::vector<Diagnostic> diags, const Flags& flags,
            std::ostream& out) {
  if (flags.machine) {
    out << render_machine(std::move(diags));
    return;
  }
  sort_diagnostics(diags);
  for (const auto& d : diags) out << render_human(d, flags.color);
}

std::string render_assignment(
    const std::vector<std::pair<std::string, Term>>& assignment) {
  std::string text;
  for (const auto& [var, value] : assignment) {
    if (!text.empty()) text += ", ";
    text += var + " = " + format(value);
  }
  return text;
}

}  // namespace

bool add_operator(Flags& flags, const std::string& mapping) {
  auto eq = mapping.find('=');
  if (eq == std::string::npos || eq == 0 || eq + 1 == mapping.size())
    return false;
  flags.operators[mapping.substr(0, eq)] = mapping.substr(eq + 1);
  return true;
}

int cmd_check(const std::vector<std::string>& paths, const Flags& flags,
              std::ostream& out, std::ostream& err) {
  auto ws = load(paths, flags, err);
  if (!ws) return kOperational;
  auto diags = ws->diagnostics;
  std::vector<std::string> summary;
  if (ws->registry && !has_errors(diags)) {
    auto reports = verify_all(theorems_of(*ws), *ws->registry,
                              VerifyOptions{flags.strict});
    for (auto& report : reports) {
      std::size_t errors = 0;
      for (const auto& d : report.diagnostics) errors += d.is_error();
      std::string line = report.theorem + ": ";
      line += report.accepted() ? "accepted" : "rejected";
      if (errors)
        line += " (" + std::to_string(errors) +
                (errors == 1 ? " error)" : " errors)");
      summary.push_back(std::move(line));
      for (auto& d : report.diagnostics) diags.push_back(std::move(d));
    }
  }
  render(diags, flags, out);
  if (!flags.machine)
    for (const auto& line : summary) out << line << '\n';
  return has_errors(diags) ? kFindings : kClean;
}

int cmd_validate(const std::vector<std::string>& paths, const Flags& flags,
                 std::ostream& out, std::ostream& err) {
  auto ws = load(paths, flags, err);
  if (!ws) return kOperational;
  if (!ws->registry || has_errors(ws->diagnostics)) {
    render(ws->diagnostics, flags, out);
    return kFindings;
  }
  bool invalid = false;
  for (const auto& entry : ws->registry->theorems()) {
    const auto& decl = entry.decl;
    auto verdict = brute_force_validate(entry.quantifiers, decl.lhs, decl.rhs,
                                        *ws->registry, flags.budget);
    std::string detail;
    switch (verdict.kind) {
      case ValidationVerdict::Kind::kValid:
        detail = std::to_string(verdict.assignments) + " assignments";
        break;
      case ValidationVerdict::Kind::kInvalid:
        invalid = true;
        detail = "counterexample " + render_assignment(verdict.counterexample);
        break;
      case ValidationVerdict::Kind::kInconclusive:
        detail = verdict.reason;
        break;
    }
    if (flags.machine)
      out << decl.name << '\t' << verdict_name(verdict.kind) << '\t' << detail
          << '\n';
    else
      out << decl.name << ": " << verdict_name(verdict.kind) << " (" << detail
          << ")\n";
  }
  return invalid ? kFindings : kClean;
}

int cmd_eval(const std::string& expression,
             const std::vector<std::string>& paths, const Flags& flags,
             std::ostream& out, std::ostream& err) {
  auto ws = load(paths, flags, err);
  if (!ws) return kOperational;
  if (!ws->registry || has_errors(ws->diagnostics)) {
    render(ws->diagnostics, flags, out);
    return kFindings;
  }
  auto options = parse_options(flags);
  for (const auto& op : ws->registry->operators())
    options.operators.emplace(op.glyph, op.function);
  auto term = parse_term(expression, "<expression>", options);
  if (!term) {
    render(term.errors(), flags, out);
    return kFindings;
  }
  auto type = infer_type(*term, TypingContext{}, *ws->registry);
  if (!type) {
    render(type.errors(), flags, out);
    return kFindings;
  }
  auto result = normalize(*term, *ws->registry, flags.budget);
  out << format(result.normal_form) << '\n';
  if (result.exhausted_budget) {
    err << "axiotome: normalization budget of " << flags.budget
        << " steps exhausted\n";
    return kFindings;
  }
  return kClean;
}

int cmd_fill(const std::string& path, const Flags& flags, std::ostream& out,
             std::ostream& err) {
  if (!flags.in_place && !flags.output) {
    err << "axiotome: fill needs --in-place or -o PATH\n";
    return kOperational;
  }
  auto ws = load({path}, flags, err);
  if (!ws) return kOperational;
  if (!ws->registry || has_errors(ws->diagnostics)) {
    render(ws->diagnostics, flags, out);
    return kFindings;
  }

  Program& target = ws->programs.back();
  std::vector<TheoremDecl*> theorems;
  for (auto& st : target.statements)
    if (auto* th = std::get_if<TheoremDecl>(&st)) theorems.push_back(th);
  std::vector<const TheoremDecl*> view(theorems.begin(), theorems.end());
  VerifyOptions options{flags.strict};
  auto reports = verify_all(view, *ws->registry, options);

  std::vector<std::future<RepairResult>> jobs;
  for (std::size_t i = 0; i < theorems.size(); ++i)
    jobs.push_back(std::async(std::launch::async, [&, i] {
      return repair_proof(*theorems[i], reports[i], *ws->registry,
                          flags.search);
    }));
  std::vector<Diagnostic> diags;
  bool repaired = true;
  for (std::size_t i = 0; i < theorems.size(); ++i) {
    auto result = jobs[i].get();
    if (result.theorem)
      *theorems[i] = std::move(*result.theorem);
    else
      repaired = false;
    for (auto& d : result.diagnostics) diags.push_back(std::move(d));
  }

  std::string text = format(target);
  std::string dest = flags.in_place ? path : *flags.output;
  if (dest == "-") {
    out << text;
  } else if (!write_file(dest, text)) {
    err << "axiotome: cannot write '" << dest << "'\n";
    return kOperational;
  }
  render(diags, flags, dest == "-" ? err : out);
  return repaired && !has_errors(diags) ? kClean : kFindings;
}

int cmd_fmt(const std::vector<std::string>& paths, const Flags& flags,
            std::ostream& out, std::ostream& err) {
  auto options = parse_options(flags);
  bool findings = false;
  for (const auto& path : paths) {
    auto text = read_file(path);
    if (!text) {
      err << "axiotome: cannot read '" << path << "'\n";
      return kOperational;
    }
    auto program = parse_program(*text, path, options);
    if (!program) {
      render(program.errors(), flags, out);
      findings = true;
      continue;
    }
    std::string formatted = format(*program);
    if (flags.check) {
      if (formatted != *text) {
        out << path << ": not formatted\n";
        findings = true;
      }
    } else if (flags.in_place) {
      if (formatted != *text && !write_file(path, formatted)) {
        err << "axiotome: cannot write '" << path << "'\n";
        return kOperational;
      }
    } else {
      out << formatted;
    }
  }
  return findings ? kFindings : kClean;
}

}  // namespace axiotome::cli
