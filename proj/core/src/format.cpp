#include <sstream>

#include "axiotome/syntax.hpp"

namespace axiotome {

namespace {

class TermPrinter {
 public:
  explicit TermPrinter(std::map<std::string, TypeExpr> annotations = {})
      : pending_(std::move(annotations)) {}

  std::string print(const Term& term) {
    std::string out;
    emit(term, out);
    return out;
  }

 private:
  static bool is_infix(const Term& term) {
    return !term.infix().empty() && term.args().size() == 2 &&
           term.type_args().empty();
  }

  void emit(const Term& term, std::string& out) {
    if (is_infix(term)) {
      const std::string& glyph = term.infix();
      const Term& left = term.args()[0];
      const Term& right = term.args()[1];
      bool paren_left = is_infix(left) && left.infix() != glyph;
      bool paren_right = is_infix(right);
      emit_wrapped(left, paren_left, out);
      out += ' ' + glyph + ' ';
      emit_wrapped(right, paren_right, out);
      return;
    }
    out += term.head();
    if (!term.type_args().empty()) {
      out += '[';
      for (std::size_t i = 0; i < term.type_args().size(); ++i) {
        if (i) out += ", ";
        out += to_string(term.type_args()[i]);
      }
      out += ']';
    }
    if (!term.args().empty()) {
      out += '(';
      for (std::size_t i = 0; i < term.args().size(); ++i) {
        if (i) out += ", ";
        emit(term.args()[i], out);
      }
      out += ')';
      return;
    }
    if (term.type_args().empty()) {
      auto it = pending_.find(term.head());
      if (it != pending_.end()) {
        out += ": " + to_string(it->second);
        pending_.erase(it);
      }
    }
  }

  void emit_wrapped(const Term& term, bool wrap, std::string& out) {
    if (wrap) out += '(';
    emit(term, out);
    if (wrap) out += ')';
  }

  std::map<std::string, TypeExpr> pending_;
};

std::string comment(const std::string& text) {
  return text.empty() ? "//" : "// " + text;
}

void leading(std::ostringstream& out, const Trivia& trivia,
             const std::string& indent) {
  for (const auto& c : trivia.leading) out << indent << comment(c) << '\n';
}

void trailing(std::ostringstream& out, const Trivia& trivia) {
  if (!trivia.trailing.empty()) out << "  " << comment(trivia.trailing);
  out << '\n';
}

std::string type_params(const std::vector<std::string>& params) {
  if (params.empty()) return {};
  std::string out = "[";
  for (std::size_t i = 0; i < params.size(); ++i) {
    if (i) out += ", ";
    out += params[i];
  }
  return out + "]";
}

std::string quantifiers(const std::vector<Quantifier>& qs) {
  std::string out;
  for (std::size_t i = 0; i < qs.size(); ++i) {
    if (i) out += ", ";
    out += "∀" + qs[i].var + " ∈ " + to_string(qs[i].type);
  }
  return out;
}

void emit_body(std::ostringstream& out, const ProofBody& body,
               const std::string& indent, bool nested);

void emit_cases(std::ostringstream& out, const ByCases& cases,
                const std::string& indent, bool nested, const Trivia& trivia) {
  out << (nested ? indent : "") << (nested ? "proof " : "") << "by cases of ";
  if (cases.subjects.size() == 1) {
    out << cases.subjects.front();
  } else {
    out << '(';
    for (std::size_t i = 0; i < cases.subjects.size(); ++i)
      out << (i ? ", " : "") << cases.subjects[i];
    out << ')';
  }
  std::size_t arity = cases.subjects.size();
  out << " using " << (arity > 1 ? "(" : "")
      << to_string(cases.decomposition.sum) << " = ";
  for (std::size_t i = 0; i < cases.decomposition.summands.size(); ++i)
    out << (i ? " U " : "") << to_string(cases.decomposition.summands[i]);
  if (arity == 2) out << ")²";
  if (arity == 3) out << ")³";
  if (arity > 3) out << ")^" << arity;
  trailing(out, trivia);

  std::string case_indent = nested ? indent + "  " : "  ";
  for (const auto& block : cases.cases) {
    leading(out, block.trivia, case_indent);
    out << case_indent << "case ";
    if (block.label) out << *block.label << ": ";
    out << quantifiers(block.ranges) << ':';
    if (block.restated) {
      TermPrinter p;
      out << ' ' << p.print(block.restated->lhs) << " ↔ "
          << p.print(block.restated->rhs);
    }
    trailing(out, block.trivia);
    if (block.body) emit_body(out, *block.body, case_indent + "  ", true);
  }
}

void emit_body(std::ostringstream& out, const ProofBody& body,
               const std::string& indent, bool nested) {
  if (const auto* cases = std::get_if<ByCases>(&body)) {
    emit_cases(out, *cases, indent, nested, cases->trivia);
    return;
  }
  for (const auto& step : std::get<LinearProof>(body).steps) {
    leading(out, step.trivia, indent);
    TermPrinter p;
    out << indent << step.index << ". " << p.print(step.term);
    if (step.via) out << " via " << to_string(*step.via);
    trailing(out, step.trivia);
  }
}

void emit_statement(std::ostringstream& out, const Statement& statement) {
  std::visit(
      [&out](const auto& s) {
        using T = std::decay_t<decltype(s)>;
        leading(out, s.trivia, "");
        if constexpr (std::is_same_v<T, TypeDecl>) {
          out << "type " << s.name << type_params(s.params) << " ≡ ";
          if (s.is_product()) {
            out << "Product[";
            const auto& fields = s.product().fields;
            for (std::size_t i = 0; i < fields.size(); ++i)
              out << (i ? ", " : "") << fields[i].label << ": "
                  << to_string(fields[i].type);
            out << ']';
          } else {
            out << "Sum[";
            const auto& summands = s.sum().summands;
            for (std::size_t i = 0; i < summands.size(); ++i)
              out << (i ? ", " : "") << to_string(summands[i]);
            out << ']';
          }
          trailing(out, s.trivia);
        } else if constexpr (std::is_same_v<T, FunctionDecl>) {
          out << "function " << s.name << type_params(s.type_params);
          if (!s.params.empty()) {
            out << '(';
            for (std::size_t i = 0; i < s.params.size(); ++i)
              out << (i ? ", " : "") << s.params[i].name << ": "
                  << to_string(s.params[i].type);
            out << ')';
          }
          out << " : " << to_string(s.return_type);
          if (!s.is_equational()) {
            out << " ≡ " << TermPrinter().print(s.formulaic().body);
            trailing(out, s.trivia);
            return;
          }
          trailing(out, s.trivia);
          const std::string head = "  allowing ";
          const std::string pad(head.size(), ' ');
          bool first = true;
          for (const auto& axiom : s.equational().axioms) {
            leading(out, axiom.trivia, first ? "  " : pad);
            TermPrinter p(axiom.metavar_types);
            out << (first ? head : pad) << axiom.name << ": "
                << p.print(axiom.lhs) << " ↔ " << p.print(axiom.rhs);
            trailing(out, axiom.trivia);
            first = false;
          }
        } else if constexpr (std::is_same_v<T, OperatorDecl>) {
          out << "operator " << s.glyph << " ≡ " << s.function;
          trailing(out, s.trivia);
        } else {
          TermPrinter p;
          out << "theorem " << s.name << ": ";
          if (!s.quantifiers.empty()) out << quantifiers(s.quantifiers) << ": ";
          out << p.print(s.lhs) << " ↔ " << p.print(s.rhs);
          trailing(out, s.trivia);
          out << "proof";
          if (std::holds_alternative<ByCases>(s.proof)) {
            out << ' ';
            emit_cases(out, std::get<ByCases>(s.proof), "", false,
                       s.proof_trivia);
          } else {
            trailing(out, s.proof_trivia);
            emit_body(out, s.proof, "  ", false);
          }
        }
      },
      statement);
}

bool is_multiline(const Statement& statement) {
  if (std::holds_alternative<TheoremDecl>(statement)) return true;
  if (const auto* f = std::get_if<FunctionDecl>(&statement))
    return f->is_equational();
  return false;
}

}  // namespace

std::string format(const Term& term) { return TermPrinter().print(term); }

std::string format(const Statement& statement) {
  std::ostringstream out;
  emit_statement(out, statement);
  return out.str();
}

std::string format(const Program& program) {
  std::ostringstream out;
  for (std::size_t i = 0; i < program.statements.size(); ++i) {
    const auto& s = program.statements[i];
    if (i > 0 && (is_multiline(s) || is_multiline(program.statements[i - 1])))
      out << '\n';
    emit_statement(out, s);
  }
  if (!program.trailing_comments.empty()) {
    if (!program.statements.empty()) out << '\n';
    for (const auto& c : program.trailing_comments) out << comment(c) << '\n';
  }
  return out.str();
}

}  // namespace axiotome
