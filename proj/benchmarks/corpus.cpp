#include "corpus.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "axiotome/syntax.hpp"

namespace axiotome::bench {

namespace {

[[noreturn]] void die(const std::string& what) {
  std::fprintf(stderr, "axiotome_bench: %s\n", what.c_str());
  std::exit(2);
}

}  // namespace

std::string read_corpus(const std::string& name) {
  std::ifstream in(std::string(AXIOTOME_CORPUS_DIR) + "/" + name);
  if (!in) die("cannot read " + name);
  std::ostringstream text;
  text << in.rdbuf();
  return text.str();
}

Registry load(const std::vector<std::string>& files,
              const std::map<std::string, std::string>& operators) {
  ParseOptions options;
  options.operators = operators;
  std::vector<Program> programs;
  for (const auto& file : files) {
    auto parsed = parse_program(read_corpus(file), file, options);
    if (!parsed) die(file + " does not parse");
    programs.push_back(std::move(parsed).value());
  }
  auto reg = build_registry(merge_programs(programs));
  if (!reg) die("registry failed");
  return std::move(reg).value();
}

Registry boolean_library() {
  return load({"boolean_types.axm", "supplement.axm", "not.axm", "and.axm",
               "or.axm", "if.axm"});
}

Term term(std::string_view text, const std::vector<std::string>& vars) {
  auto parsed = parse_term(text);
  if (!parsed) die("bad term " + std::string(text));
  return bind_metavars(*parsed, {vars.begin(), vars.end()});
}

RewriteEnv env(const Registry& registry,
               const std::vector<std::pair<std::string, std::string>>& bindings) {
  RewriteEnv out;
  out.registry = &registry;
  out.theorem_limit = registry.theorems().size();
  for (const auto& [var, type] : bindings) {
    TypeExpr t(type);
    auto constructor = nullary_constructor(t, registry);
    if (!constructor) die("no constructor for " + type);
    out.bindings.push_back({var, t, *constructor});
    out.metavar_types[var] = TypeExpr("Boolean");
  }
  return out;
}

}  // namespace axiotome::bench
