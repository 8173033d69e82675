#pragma once

#include <cstddef>
#include <functional>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "axiotome/diagnostics.hpp"

namespace axiotome {

// A type expression such as `Boolean` or `Pair[A, B]`.
struct TypeExpr {
  std::string name;
  std::vector<TypeExpr> args;

  TypeExpr() = default;
  explicit TypeExpr(std::string n, std::vector<TypeExpr> a = {})
      : name(std::move(n)), args(std::move(a)) {}

  // Type parameters left unconstrained by inference are spelled `?A`.
  bool is_symbolic() const { return !name.empty() && name.front() == '?'; }

  friend bool operator==(const TypeExpr&, const TypeExpr&) = default;
};

std::string to_string(const TypeExpr& type);

// Child-index path from the root of a term.
struct Position {
  std::vector<std::size_t> path;

  bool is_prefix_of(const Position& other) const;
  bool disjoint_from(const Position& other) const {
    return !is_prefix_of(other) && !other.is_prefix_of(*this);
  }
  friend bool operator==(const Position&, const Position&) = default;
  friend auto operator<=>(const Position&, const Position&) = default;
};

std::string to_string(const Position& position);

// Immutable, structurally shared term tree. An application names a
// constructor or function; a variable is a metavariable. Parsing yields only
// applications; registry binding turns metavariable names into variables.
class Term {
 public:
  enum class Kind { kApply, kVar };

  Term();  // the nullary application `?`; only useful as a placeholder

  static Term apply(std::string head, std::vector<Term> args = {},
                    std::vector<TypeExpr> type_args = {}, Span span = {});
  static Term var(std::string name, Span span = {});

  Kind kind() const;
  bool is_var() const { return kind() == Kind::kVar; }
  const std::string& head() const;
  std::span<const Term> args() const;
  const std::vector<TypeExpr>& type_args() const;
  const Span& span() const;
  // Infix glyph the term was written with, if any. Presentation only.
  const std::string& infix() const;
  std::size_t hash() const;

  Term with_args(std::vector<Term> args) const;
  Term with_infix(std::string glyph) const;
  Term with_span(Span span) const;

  std::size_t size() const;   // node count
  std::size_t depth() const;  // a leaf has depth 1
  bool is_ground() const;

  // Subterm at `position`; the position must address an existing subterm.
  const Term& at(const Position& position) const;
  Term replace_at(const Position& position, Term replacement) const;
  bool has_position(const Position& position) const;

  // Positions in leftmost-outermost (pre-order) order.
  std::vector<Position> positions() const;
  void collect_vars(std::vector<std::string>& out) const;
  bool contains(const Term& sub) const;

  friend bool operator==(const Term& a, const Term& b);
  friend bool operator!=(const Term& a, const Term& b) { return !(a == b); }

 private:
  struct Node;
  explicit Term(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

// Canonical prefix rendering such as `f(a, b)` or `Nil[Boolean]`.
std::string to_string(const Term& term);

struct TermHash {
  std::size_t operator()(const Term& term) const { return term.hash(); }
};

// Lexicographic structural order; used only for deterministic tie-breaking.
bool term_less(const Term& a, const Term& b);

}  // namespace axiotome
