#include "axiotome/term.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>

namespace axiotome {

std::string to_string(const TypeExpr& type) {
  std::string out = type.name;
  if (!type.args.empty()) {
    out += '[';
    for (std::size_t i = 0; i < type.args.size(); ++i) {
      if (i) out += ", ";
      out += to_string(type.args[i]);
    }
    out += ']';
  }
  return out;
}

bool Position::is_prefix_of(const Position& other) const {
  return path.size() <= other.path.size() &&
         std::equal(path.begin(), path.end(), other.path.begin());
}

std::string to_string(const Position& position) {
  std::string out = "[";
  for (std::size_t i = 0; i < position.path.size(); ++i) {
    if (i) out += ", ";
    out += std::to_string(position.path[i]);
  }
  return out + "]";
}

struct Term::Node {
  Kind kind = Kind::kApply;
  std::string head;
  std::vector<Term> args;
  std::vector<TypeExpr> type_args;
  Span span;
  std::string infix;
  std::size_t hash = 0;
  std::size_t size = 1;
  std::size_t depth = 1;
  bool ground = true;
};

namespace {

std::size_t mix(std::size_t seed, std::size_t value) {
  return seed ^ (value + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

std::size_t hash_type(const TypeExpr& type) {
  std::size_t h = std::hash<std::string>{}(type.name);
  for (const auto& arg : type.args) h = mix(h, hash_type(arg));
  return h;
}

void finish(Term::Kind kind, const std::vector<Term>& args,
            const std::vector<TypeExpr>& type_args, const std::string& head,
            std::size_t& hash, std::size_t& size, std::size_t& depth,
            bool& ground) {
  hash = mix(std::hash<std::string>{}(head),
             kind == Term::Kind::kVar ? 0x51ULL : 0x17ULL);
  for (const auto& type : type_args) hash = mix(hash, hash_type(type));
  size = 1;
  depth = 1;
  ground = kind != Term::Kind::kVar;
  for (const auto& arg : args) {
    hash = mix(hash, arg.hash());
    size += arg.size();
    depth = std::max(depth, arg.depth() + 1);
    ground = ground && arg.is_ground();
  }
}

const std::vector<TypeExpr> kNoTypes;
const std::string kEmpty;

}  // namespace

Term::Term() : Term(apply("?")) {}

Term Term::apply(std::string head, std::vector<Term> args,
                 std::vector<TypeExpr> type_args, Span span) {
  auto node = std::make_shared<Node>();
  node->kind = Kind::kApply;
  node->head = std::move(head);
  node->args = std::move(args);
  node->type_args = std::move(type_args);
  node->span = std::move(span);
  finish(node->kind, node->args, node->type_args, node->head, node->hash,
         node->size, node->depth, node->ground);
  return Term(std::move(node));
}

Term Term::var(std::string name, Span span) {
  auto node = std::make_shared<Node>();
  node->kind = Kind::kVar;
  node->head = std::move(name);
  node->span = std::move(span);
  finish(node->kind, node->args, node->type_args, node->head, node->hash,
         node->size, node->depth, node->ground);
  return Term(std::move(node));
}

Term::Kind Term::kind() const { return node_->kind; }
const std::string& Term::head() const { return node_->head; }
std::span<const Term> Term::args() const { return node_->args; }
const std::vector<TypeExpr>& Term::type_args() const {
  return node_->type_args;
}
const Span& Term::span() const { return node_->span; }
const std::string& Term::infix() const { return node_->infix; }
std::size_t Term::hash() const { return node_->hash; }
std::size_t Term::size() const { return node_->size; }
std::size_t Term::depth() const { return node_->depth; }
bool Term::is_ground() const { return node_->ground; }

Term Term::with_args(std::vector<Term> args) const {
  auto node = std::make_shared<Node>();
  node->kind = node_->kind;
  node->head = node_->head;
  node->type_args = node_->type_args;
  node->span = node_->span;
  node->infix = node_->infix;
  node->args = std::move(args);
  finish(node->kind, node->args, node->type_args, node->head, node->hash,
         node->size, node->depth, node->ground);
  return Term(std::move(node));
}

Term Term::with_infix(std::string glyph) const {
  auto node = std::make_shared<Node>(*node_);
  node->infix = std::move(glyph);
  return Term(std::move(node));
}

Term Term::with_span(Span span) const {
  auto node = std::make_shared<Node>(*node_);
  node->span = std::move(span);
  return Term(std::move(node));
}

const Term& Term::at(const Position& position) const {
  const Term* current = this;
  for (std::size_t index : position.path) {
    assert(index < current->node_->args.size());
    current = &current->node_->args[index];
  }
  return *current;
}

bool Term::has_position(const Position& position) const {
  const Term* current = this;
  for (std::size_t index : position.path) {
    if (index >= current->node_->args.size()) return false;
    current = &current->node_->args[index];
  }
  return true;
}

static Term replace_rec(const Term& term, const std::vector<std::size_t>& path,
                        std::size_t depth, const Term& replacement) {
  if (depth == path.size()) return replacement;
  std::vector<Term> args(term.args().begin(), term.args().end());
  args[path[depth]] = replace_rec(args[path[depth]], path, depth + 1,
                                  replacement);
  return term.with_args(std::move(args));
}

Term Term::replace_at(const Position& position, Term replacement) const {
  return replace_rec(*this, position.path, 0, replacement);
}

static void positions_rec(const Term& term, Position& current,
                          std::vector<Position>& out) {
  out.push_back(current);
  for (std::size_t i = 0; i < term.args().size(); ++i) {
    current.path.push_back(i);
    positions_rec(term.args()[i], current, out);
    current.path.pop_back();
  }
}

std::vector<Position> Term::positions() const {
  std::vector<Position> out;
  Position root;
  positions_rec(*this, root, out);
  return out;
}

void Term::collect_vars(std::vector<std::string>& out) const {
  if (is_var()) {
    if (std::find(out.begin(), out.end(), head()) == out.end())
      out.push_back(head());
    return;
  }
  for (const auto& arg : args()) arg.collect_vars(out);
}

bool Term::contains(const Term& sub) const {
  if (*this == sub) return true;
  for (const auto& arg : args())
    if (arg.contains(sub)) return true;
  return false;
}

bool operator==(const Term& a, const Term& b) {
  if (a.node_ == b.node_) return true;
  const auto& x = *a.node_;
  const auto& y = *b.node_;
  if (x.hash != y.hash || x.kind != y.kind || x.head != y.head ||
      x.args.size() != y.args.size() || x.type_args != y.type_args)
    return false;
  for (std::size_t i = 0; i < x.args.size(); ++i)
    if (x.args[i] != y.args[i]) return false;
  return true;
}

std::string to_string(const Term& term) {
  std::string out = term.head();
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
      out += to_string(term.args()[i]);
    }
    out += ')';
  }
  return out;
}

bool term_less(const Term& a, const Term& b) {
  if (a.kind() != b.kind()) return a.kind() < b.kind();
  if (a.head() != b.head()) return a.head() < b.head();
  if (a.args().size() != b.args().size())
    return a.args().size() < b.args().size();
  for (std::size_t i = 0; i < a.args().size(); ++i) {
    if (term_less(a.args()[i], b.args()[i])) return true;
    if (term_less(b.args()[i], a.args()[i])) return false;
  }
  return false;
}

}  // namespace axiotome
