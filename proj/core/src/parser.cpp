#include <algorithm>
#include <set>

#include "axiotome/syntax.hpp"
#include "lexer_internal.hpp"

namespace axiotome {

namespace {

struct ParseError {
  Diagnostic diagnostic;
};

class Parser {
 public:
  Parser(std::vector<Token> tokens, std::string_view source_name,
         const ParseOptions& options)
      : tokens_(std::move(tokens)),
        source_name_(source_name),
        operators_(options.operators) {}

  Program program() {
    Program out;
    out.source_name = std::string(source_name_);
    skip_semicolons();
    while (!at_end()) {
      out.statements.push_back(statement());
      if (!at_end() && !is_symbol(";") && !peek().line_start)
        fail("expected a newline or ';' after the statement");
      skip_semicolons();
    }
    return out;
  }

  Term lone_term() {
    if (at_end()) fail("expected a term");
    Term term = parse_term(nullptr);
    if (!at_end()) fail("unexpected '" + peek().lexeme + "' after the term");
    return term;
  }

 private:
  // --- token access -------------------------------------------------------

  bool at_end() const { return pos_ >= tokens_.size(); }
  const Token& peek(std::size_t ahead = 0) const {
    static const Token kEof{TokenKind::kSymbol, "<end of input>", {}, true,
                            {}, {}};
    return pos_ + ahead < tokens_.size() ? tokens_[pos_ + ahead] : kEof;
  }
  bool is_symbol(std::string_view s, std::size_t ahead = 0) const {
    const Token& t = peek(ahead);
    return pos_ + ahead < tokens_.size() && t.kind == TokenKind::kSymbol &&
           t.lexeme == s;
  }
  bool is_keyword(std::string_view s, std::size_t ahead = 0) const {
    const Token& t = peek(ahead);
    return pos_ + ahead < tokens_.size() && t.kind == TokenKind::kKeyword &&
           t.lexeme == s;
  }
  bool is_kind(TokenKind kind, std::size_t ahead = 0) const {
    return pos_ + ahead < tokens_.size() && peek(ahead).kind == kind;
  }

  const Token& next() {
    if (at_end()) fail("unexpected end of input");
    return tokens_[pos_++];
  }
  const Token& previous() const { return tokens_[pos_ - 1]; }

  [[noreturn]] void fail(std::string message) const {
    Span span = at_end() ? end_span() : peek().span;
    throw ParseError{make_error(Code::kSyntax, std::move(message), span)};
  }
  [[noreturn]] void fail_at(std::string message, Span span) const {
    throw ParseError{make_error(Code::kSyntax, std::move(message), span)};
  }

  Span end_span() const {
    if (tokens_.empty()) return Span{std::string(source_name_), 1, 1, 0};
    Span s = tokens_.back().span;
    s.column += s.length;
    s.length = 0;
    return s;
  }

  const Token& expect_symbol(std::string_view s) {
    if (!is_symbol(s))
      fail("expected '" + std::string(s) + "' but found '" + peek().lexeme +
           "'");
    return next();
  }
  const Token& expect_keyword(std::string_view s) {
    if (!is_keyword(s))
      fail("expected '" + std::string(s) + "' but found '" + peek().lexeme +
           "'");
    return next();
  }
  const Token& expect_identifier(std::string_view what) {
    if (!is_kind(TokenKind::kIdentifier))
      fail("expected " + std::string(what) + " but found '" + peek().lexeme +
           "'");
    return next();
  }

  void skip_semicolons() {
    while (is_symbol(";")) ++pos_;
  }

  // Trailing comment of the most recently consumed token, claimed once.
  std::string take_trailing() {
    if (pos_ == 0) return {};
    return std::exchange(tokens_[pos_ - 1].trailing_comment, {});
  }
  std::vector<std::string> take_leading() {
    if (at_end()) return {};
    return std::exchange(tokens_[pos_].leading_comments, {});
  }

  Span span_from(const Span& start) const {
    Span s = start;
    if (pos_ == 0) return s;
    const Span& last = previous().span;
    if (last.line == start.line)
      s.length = last.column + last.length - start.column;
    return s;
  }

  // --- statements ---------------------------------------------------------

  Statement statement() {
    if (is_keyword("type")) return type_decl();
    if (is_keyword("function")) return function_decl();
    if (is_keyword("operator")) return operator_decl();
    if (is_keyword("theorem")) return theorem_decl();
    fail("expected a statement ('type', 'function', 'operator' or "
         "'theorem') but found '" +
         peek().lexeme + "'");
  }

  std::vector<std::string> bracketed_names() {
    std::vector<std::string> names;
    if (!is_symbol("[")) return names;
    next();
    if (!is_symbol("]")) {
      do {
        names.push_back(expect_identifier("a type parameter").lexeme);
      } while (is_symbol(",") && (next(), true));
    }
    expect_symbol("]");
    return names;
  }

  TypeDecl type_decl() {
    TypeDecl decl;
    decl.trivia.leading = take_leading();
    expect_keyword("type");
    const Token& name = expect_identifier("a type name");
    decl.name = name.lexeme;
    decl.span = name.span;
    decl.params = bracketed_names();
    expect_symbol("≡");
    if (is_keyword("Product")) {
      next();
      expect_symbol("[");
      ProductBody body;
      if (!is_symbol("]")) {
        do {
          Field field;
          field.label = expect_identifier("a field label").lexeme;
          expect_symbol(":");
          field.type = type_expr();
          body.fields.push_back(std::move(field));
        } while (is_symbol(",") && (next(), true));
      }
      expect_symbol("]");
      decl.body = std::move(body);
    } else if (is_keyword("Sum")) {
      next();
      expect_symbol("[");
      SumBody body;
      if (!is_symbol("]")) {
        do {
          body.summands.push_back(type_expr());
        } while (is_symbol(",") && (next(), true));
      }
      expect_symbol("]");
      decl.body = std::move(body);
    } else {
      fail("expected 'Product' or 'Sum' but found '" + peek().lexeme + "'");
    }
    decl.trivia.trailing = take_trailing();
    return decl;
  }

  FunctionDecl function_decl() {
    FunctionDecl decl;
    decl.trivia.leading = take_leading();
    expect_keyword("function");
    const Token& name = expect_identifier("a function name");
    decl.name = name.lexeme;
    decl.span = name.span;
    decl.type_params = bracketed_names();
    if (is_symbol("(")) {
      next();
      if (!is_symbol(")")) {
        do {
          Param param;
          param.name = expect_identifier("a parameter name").lexeme;
          expect_symbol(":");
          param.type = type_expr();
          decl.params.push_back(std::move(param));
        } while (is_symbol(",") && (next(), true));
      }
      expect_symbol(")");
    }
    expect_symbol(":");
    decl.return_type = type_expr();
    if (is_symbol("≡")) {
      next();
      decl.body = Formulaic{parse_term(nullptr)};
      decl.trivia.trailing = take_trailing();
      return decl;
    }
    decl.trivia.trailing = take_trailing();
    std::vector<std::string> first_leading = take_leading();
    expect_keyword("allowing");
    Equational body;
    do {
      skip_semicolons();
      Axiom axiom = axiom_decl();
      if (body.axioms.empty())
        axiom.trivia.leading.insert(axiom.trivia.leading.begin(),
                                    first_leading.begin(),
                                    first_leading.end());
      body.axioms.push_back(std::move(axiom));
    } while (is_kind(TokenKind::kAxiomName) ||
             (is_symbol(";") && is_kind(TokenKind::kAxiomName, 1)));
    decl.body = std::move(body);
    return decl;
  }

  Axiom axiom_decl() {
    Axiom axiom;
    axiom.trivia.leading = take_leading();
    if (!is_kind(TokenKind::kAxiomName))
      fail("expected an axiom name ('$name') but found '" + peek().lexeme +
           "'");
    const Token& name = next();
    axiom.name = name.lexeme;
    axiom.span = name.span;
    expect_symbol(":");
    axiom.lhs = parse_term(&axiom.metavar_types);
    expect_symbol("↔");
    axiom.rhs = parse_term(&axiom.metavar_types);
    axiom.trivia.trailing = take_trailing();
    return axiom;
  }

  OperatorDecl operator_decl() {
    OperatorDecl decl;
    decl.trivia.leading = take_leading();
    expect_keyword("operator");
    if (!is_kind(TokenKind::kSymbol) || is_symbol("≡"))
      fail("expected an operator glyph");
    const Token& glyph = next();
    decl.glyph = glyph.lexeme;
    decl.span = glyph.span;
    expect_symbol("≡");
    decl.function = expect_identifier("a function name").lexeme;
    decl.trivia.trailing = take_trailing();
    operators_[decl.glyph] = decl.function;
    return decl;
  }

  std::string theorem_name() {
    if (is_kind(TokenKind::kTheoremName)) return next().lexeme;
    if (is_kind(TokenKind::kIdentifier)) return "¶" + next().lexeme;
    fail("expected a theorem name but found '" + peek().lexeme + "'");
  }

  TheoremDecl theorem_decl() {
    TheoremDecl decl;
    decl.trivia.leading = take_leading();
    expect_keyword("theorem");
    Span name_span = peek().span;
    decl.name = theorem_name();
    decl.span = name_span;
    expect_symbol(":");
    if (is_symbol("∀")) {
      decl.quantifiers = quantifier_list(false);
      expect_symbol(":");
    }
    decl.lhs = parse_term(nullptr);
    expect_symbol("↔");
    decl.rhs = parse_term(nullptr);
    decl.trivia.trailing = take_trailing();
    expect_keyword("proof");
    subject_stack_.clear();
    decl.proof = proof_body(&decl.proof_trivia);
    return decl;
  }

  Quantifier quantifier() {
    Quantifier q;
    q.span = expect_symbol("∀").span;
    q.var = expect_identifier("a metavariable").lexeme;
    expect_symbol("∈");
    q.type = type_expr();
    return q;
  }

  // `∀a ∈ A, ∀b ∈ B`, optionally parenthesized.
  std::vector<Quantifier> quantifier_list(bool allow_parens) {
    std::vector<Quantifier> out;
    bool parens = allow_parens && is_symbol("(") && is_symbol("∀", 1);
    if (parens) next();
    out.push_back(quantifier());
    while (is_symbol(",") && is_symbol("∀", 1)) {
      next();
      out.push_back(quantifier());
    }
    if (parens) expect_symbol(")");
    return out;
  }

  // Body after `proof` (the keyword itself already consumed).
  ProofBody proof_body(Trivia* trivia) {
    if (is_keyword("by")) return by_cases(trivia);
    if (trivia) trivia->trailing = take_trailing();
    return linear_proof();
  }

  bool at_step() const {
    return is_kind(TokenKind::kNumber) && is_symbol(".", 1);
  }

  LinearProof linear_proof() {
    LinearProof proof;
    if (!at_step()) fail("expected a proof step ('0. term')");
    while (at_step()) {
      proof.steps.push_back(step());
      skip_semicolons();
    }
    return proof;
  }

  ProofStep step() {
    ProofStep s;
    s.trivia.leading = take_leading();
    const Token& number = next();
    s.span = number.span;
    s.index = std::stoi(number.lexeme);
    expect_symbol(".");
    s.term = parse_term(nullptr);
    if (is_keyword("via")) s.via = justification();
    s.trivia.trailing = take_trailing();
    return s;
  }

  Justification justification() {
    Justification j;
    Span start = expect_keyword("via").span;
    if (is_symbol("∀") || (is_symbol("(") && is_symbol("∀", 1))) {
      j.ranges = quantifier_list(true);
    } else if (is_symbol("(")) {
      next();
      do {
        j.rules.push_back(rule_ref());
      } while (is_symbol(",") && (next(), true));
      expect_symbol(")");
    } else {
      j.rules.push_back(rule_ref());
    }
    j.span = span_from(start);
    return j;
  }

  RuleRef rule_ref() {
    if (is_kind(TokenKind::kAxiomName) || is_kind(TokenKind::kTheoremName) ||
        is_kind(TokenKind::kIdentifier)) {
      const Token& t = next();
      return RuleRef{t.lexeme, t.span};
    }
    fail("expected an axiom, function or theorem name but found '" +
         peek().lexeme + "'");
  }

  ByCases by_cases(Trivia* trivia) {
    ByCases out;
    out.span = expect_keyword("by").span;
    expect_keyword("cases");
    expect_keyword("of");
    if (is_symbol("(")) {
      next();
      do {
        out.subjects.push_back(expect_identifier("a metavariable").lexeme);
      } while (is_symbol(",") && (next(), true));
      expect_symbol(")");
    } else {
      out.subjects.push_back(expect_identifier("a metavariable").lexeme);
    }
    expect_keyword("using");
    out.decomposition = decomposition();
    std::string trailing = take_trailing();
    if (trivia)
      trivia->trailing = trailing;
    else
      out.trivia.trailing = trailing;

    subject_stack_.push_back(out.subjects);
    if (!is_keyword("case")) fail("expected 'case'");
    while (is_keyword("case") && case_belongs_here()) {
      out.cases.push_back(case_block());
      skip_semicolons();
    }
    subject_stack_.pop_back();
    return out;
  }

  Decomposition decomposition() {
    Decomposition d;
    d.span = peek().span;
    bool parens = is_symbol("(");
    if (parens) next();
    d.sum = type_expr();
    expect_symbol("=");
    d.summands.push_back(type_expr());
    while ((is_kind(TokenKind::kIdentifier) && peek().lexeme == "U") ||
           is_symbol("∪")) {
      next();
      d.summands.push_back(type_expr());
    }
    if (parens) expect_symbol(")");
    // Exponent-style annotation such as `^2`, `²` or a trailing digit; it
    // carries no meaning and is discarded.
    if (is_symbol("^")) {
      next();
      if (!is_kind(TokenKind::kNumber)) fail("expected a number after '^'");
      next();
    } else if (is_symbol("²") || is_symbol("³")) {
      next();
    } else if (is_kind(TokenKind::kNumber) && !peek().line_start &&
               !is_symbol(".", 1)) {
      next();
    }
    d.span = span_from(d.span);
    return d;
  }

  // Metavariables ranged over by the `case` header at the cursor.
  std::vector<std::string> peek_case_vars() const {
    std::vector<std::string> vars;
    std::size_t i = 1;
    if (is_kind(TokenKind::kIdentifier, i) && is_symbol(":", i + 1)) i += 2;
    int depth = 0;
    for (; pos_ + i < tokens_.size(); ++i) {
      const Token& t = peek(i);
      if (t.kind == TokenKind::kSymbol) {
        if (t.lexeme == "(" || t.lexeme == "[") ++depth;
        if (t.lexeme == ")" || t.lexeme == "]") --depth;
        if (t.lexeme == ":" && depth <= 0) break;
        if (t.lexeme == "∀" && is_kind(TokenKind::kIdentifier, i + 1))
          vars.push_back(peek(i + 1).lexeme);
      }
      if (t.kind == TokenKind::kKeyword || t.kind == TokenKind::kNumber) break;
    }
    return vars;
  }

  // Indentation is not significant, so a `case` closes the innermost
  // `proof by cases` when it ranges only over an enclosing one's subjects.
  bool case_belongs_here() const {
    if (subject_stack_.size() < 2) return true;
    auto vars = peek_case_vars();
    auto covered = [&](const std::vector<std::string>& subjects) {
      return !vars.empty() &&
             std::all_of(vars.begin(), vars.end(), [&](const auto& v) {
               return std::find(subjects.begin(), subjects.end(), v) !=
                      subjects.end();
             });
    };
    if (covered(subject_stack_.back())) return true;
    for (std::size_t i = 0; i + 1 < subject_stack_.size(); ++i)
      if (covered(subject_stack_[i])) return false;
    return true;
  }

  CaseBlock case_block() {
    CaseBlock block;
    block.trivia.leading = take_leading();
    block.span = expect_keyword("case").span;
    if (is_kind(TokenKind::kIdentifier) && is_symbol(":", 1)) {
      block.label = next().lexeme;
      next();
    }
    block.ranges = quantifier_list(true);
    expect_symbol(":");
    if (!at_step() && !is_keyword("proof") && !is_keyword("by")) {
      Assertion restated;
      restated.lhs = parse_term(nullptr);
      expect_symbol("↔");
      restated.rhs = parse_term(nullptr);
      block.restated = std::move(restated);
    }
    block.trivia.trailing = take_trailing();
    if (is_keyword("proof")) next();
    block.body = std::make_shared<ProofBody>(proof_body(nullptr));
    return block;
  }

  // --- types and terms ----------------------------------------------------

  TypeExpr type_expr() {
    TypeExpr type;
    type.name = expect_identifier("a type name").lexeme;
    if (is_symbol("[")) {
      next();
      if (!is_symbol("]")) {
        do {
          type.args.push_back(type_expr());
        } while (is_symbol(",") && (next(), true));
      }
      expect_symbol("]");
    }
    return type;
  }

  bool is_infix_glyph() const {
    return is_kind(TokenKind::kSymbol) &&
           (peek().lexeme == "∨" || peek().lexeme == "∧" ||
            operators_.count(peek().lexeme));
  }

  // `annotations` is non-null inside axioms, where `name: Type` may appear.
  Term parse_term(std::map<std::string, TypeExpr>* annotations) {
    Term lhs = primary(annotations);
    std::string chain_glyph;
    while (is_infix_glyph()) {
      const Token& glyph = peek();
      if (!chain_glyph.empty() && glyph.lexeme != chain_glyph)
        fail("mixing infix operators '" + chain_glyph + "' and '" +
             glyph.lexeme + "' requires parentheses");
      auto it = operators_.find(glyph.lexeme);
      if (it == operators_.end())
        fail("infix '" + glyph.lexeme +
             "' used with no operator declaration in scope");
      chain_glyph = glyph.lexeme;
      Span span = lhs.span();
      next();
      Term rhs = primary(annotations);
      lhs = Term::apply(it->second, {lhs, rhs}, {}, span_from(span))
                .with_infix(chain_glyph);
    }
    return lhs;
  }

  Term primary(std::map<std::string, TypeExpr>* annotations) {
    if (is_symbol("(")) {
      next();
      Term inner = parse_term(annotations);
      expect_symbol(")");
      return inner;
    }
    const Token& head = expect_identifier("a term");
    Span start = head.span;
    std::string name = head.lexeme;
    std::vector<TypeExpr> type_args;
    if (is_symbol("[")) {
      next();
      if (!is_symbol("]")) {
        do {
          type_args.push_back(type_expr());
        } while (is_symbol(",") && (next(), true));
      }
      expect_symbol("]");
    }
    std::vector<Term> args;
    bool called = false;
    if (is_symbol("(")) {
      called = true;
      next();
      if (!is_symbol(")")) {
        do {
          args.push_back(parse_term(annotations));
        } while (is_symbol(",") && (next(), true));
      }
      expect_symbol(")");
    }
    if (annotations && !called && type_args.empty() && is_symbol(":") &&
        is_kind(TokenKind::kIdentifier, 1)) {
      next();
      TypeExpr type = type_expr();
      auto [it, inserted] = annotations->emplace(name, type);
      if (!inserted && it->second != type)
        fail_at("conflicting annotations for metavariable '" + name + "'",
                start);
    }
    return Term::apply(std::move(name), std::move(args), std::move(type_args),
                       span_from(start));
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  std::string_view source_name_;
  std::map<std::string, std::string> operators_;
  std::vector<std::vector<std::string>> subject_stack_;
};

}  // namespace

Result<Program> parse_program(std::string_view source,
                              std::string_view source_name,
                              const ParseOptions& options) {
  LexResult lexed = lex(source, source_name);
  if (!lexed.diagnostics.empty()) return std::move(lexed.diagnostics);
  Parser parser(std::move(lexed.tokens), source_name, options);
  try {
    Program program = parser.program();
    program.trailing_comments = std::move(lexed.eof_comments);
    return program;
  } catch (const ParseError& error) {
    return error.diagnostic;
  }
}

Result<Term> parse_term(std::string_view source, std::string_view source_name,
                        const ParseOptions& options) {
  LexResult lexed = lex(source, source_name);
  if (!lexed.diagnostics.empty()) return std::move(lexed.diagnostics);
  Parser parser(std::move(lexed.tokens), source_name, options);
  try {
    return parser.lone_term();
  } catch (const ParseError& error) {
    return error.diagnostic;
  }
}

}  // namespace axiotome
