#include "fixtures.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <variant>

#include "axiotome/syntax.hpp"
#include "axiotome/verifier.hpp"
#include "json.hpp"

namespace axiotome::testing {

namespace {

const nlohmann::ordered_json& manifest() {
  static const nlohmann::ordered_json data =
      nlohmann::ordered_json::parse(read_text(corpus_path("manifest.json")));
  return data;
}

const nlohmann::ordered_json& entry(const std::string& name) {
  const auto& fixtures = manifest().at("fixtures");
  if (!fixtures.contains(name))
    throw std::runtime_error("fixture not in manifest: " + name);
  return fixtures.at(name);
}

Loaded build(std::vector<std::pair<std::string, std::string>> sources,
             const std::map<std::string, std::string>& operators) {
  Loaded out;
  ParseOptions options;
  options.operators = operators;
  std::vector<Program> programs;
  for (const auto& [name, text] : sources) {
    auto parsed = parse_program(text, name, options);
    if (!parsed) {
      out.diagnostics = parsed.errors();
      return out;
    }
    programs.push_back(std::move(parsed).value());
  }
  out.program = programs.back();
  auto reg = build_registry(merge_programs(programs));
  if (!reg) {
    out.diagnostics = reg.errors();
    return out;
  }
  out.registry = std::move(reg).value();
  out.diagnostics = check_well_formed(*out.registry);
  return out;
}

}  // namespace

std::string corpus_path(std::string_view name) {
  return std::string(AXIOTOME_CORPUS_DIR) + "/" + std::string(name);
}

std::string read_text(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

std::vector<std::string> fixture_names() {
  std::vector<std::string> names;
  for (const auto& [name, value] : manifest().at("fixtures").items())
    names.push_back(name);
  return names;
}

std::vector<std::string> fixture_libs(const std::string& name) {
  return entry(name).at("libs").get<std::vector<std::string>>();
}

std::map<std::string, std::string> fixture_operators(const std::string& name) {
  const auto& e = entry(name);
  if (!e.contains("operators")) return {};
  return e.at("operators").get<std::map<std::string, std::string>>();
}

std::vector<const TheoremDecl*> Loaded::theorems() const {
  std::vector<const TheoremDecl*> out;
  for (const auto& st : program.statements)
    if (const auto* th = std::get_if<TheoremDecl>(&st)) out.push_back(th);
  return out;
}

Loaded load_fixture(const std::string& name) {
  std::vector<std::pair<std::string, std::string>> sources;
  for (const auto& lib : fixture_libs(name))
    sources.emplace_back(lib, read_text(corpus_path(lib)));
  sources.emplace_back(name, read_text(corpus_path(name)));
  return build(std::move(sources), fixture_operators(name));
}

Loaded load_sources(const std::vector<std::string>& corpus_files,
                    std::string_view extra,
                    const std::map<std::string, std::string>& operators) {
  std::vector<std::pair<std::string, std::string>> sources;
  for (const auto& file : corpus_files)
    sources.emplace_back(file, read_text(corpus_path(file)));
  sources.emplace_back("<test>", std::string(extra));
  return build(std::move(sources), operators);
}

Loaded boolean_library(std::string_view extra) {
  return load_sources({"boolean_types.axm", "supplement.axm", "not.axm",
                       "and.axm", "or.axm", "if.axm"},
                      extra);
}

Term term(std::string_view text, const std::vector<std::string>& vars) {
  auto parsed = parse_term(text, "<term>");
  if (!parsed) throw std::runtime_error("bad term: " + std::string(text));
  return bind_metavars(*parsed, {vars.begin(), vars.end()});
}

RewriteEnv env_for(
    const Registry& registry,
    const std::vector<std::pair<std::string, std::string>>& bindings) {
  RewriteEnv env;
  env.registry = &registry;
  env.theorem_limit = registry.theorems().size();
  for (const auto& [var, type] : bindings) {
    TypeExpr t(type);
    auto constructor = nullary_constructor(t, registry);
    if (!constructor) throw std::runtime_error("no constructor for " + type);
    env.bindings.push_back({var, t, *constructor});
    env.metavar_types[var] = TypeExpr("Boolean");
  }
  return env;
}

Justification via(std::string_view text) {
  std::string source = "theorem ¶probe: False ↔ False\nproof\n  0. False\n"
                       "  1. False via " +
                       std::string(text) + "\n";
  auto parsed = parse_program(source, "<via>");
  if (!parsed) throw std::runtime_error("bad via: " + std::string(text));
  const auto& th = std::get<TheoremDecl>(parsed->statements.front());
  return *std::get<LinearProof>(th.proof).steps.at(1).via;
}

namespace {

void walk(const ProofBody& body, const RewriteEnv& env, const std::string& name,
          std::vector<Transition>& out) {
  if (const auto* linear = std::get_if<LinearProof>(&body)) {
    for (std::size_t i = 1; i < linear->steps.size(); ++i) {
      const auto& step = linear->steps[i];
      if (!step.via) continue;
      out.push_back({linear->steps[i - 1].term, step.term, *step.via, env,
                     name + " step " + std::to_string(step.index)});
    }
    return;
  }
  const auto& cases = std::get<ByCases>(body);
  for (const auto& block : cases.cases) {
    RewriteEnv inner = env;
    for (const auto& range : block.ranges) {
      auto constructor = nullary_constructor(range.type, *env.registry);
      if (constructor)
        inner.bindings.push_back({range.var, range.type, *constructor});
    }
    walk(*block.body, inner, name, out);
  }
}

}  // namespace

std::vector<Transition> transitions(const TheoremEntry& theorem,
                                    const Registry& registry) {
  RewriteEnv env;
  env.registry = &registry;
  env.theorem_limit = theorem.order;
  for (const auto& q : theorem.quantifiers) env.metavar_types[q.var] = q.type;
  std::vector<Transition> out;
  walk(theorem.decl.proof, env, theorem.decl.name, out);
  return out;
}

}  // namespace axiotome::testing
