#include <unistd.h>

#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "axiotome/cli.hpp"

int main(int argc, char** argv) {
  namespace cli = axiotome::cli;
  CLI::App app{"Axiotome formal-system kernel"};
  app.require_subcommand(1);

  cli::Flags flags;
  std::vector<std::string> operators;
  std::vector<std::string> paths;
  std::string expression;
  std::string output;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--operator", operators,
                    "Infix operator mapping, e.g. ∨=or")
        ->type_name("G=F")
        ->allow_extra_args(false);
    sub->add_option("--lib", flags.libs, "Extra module loaded first")
        ->check(CLI::ExistingFile)
        ->allow_extra_args(false);
    sub->add_flag("--machine", flags.machine, "Tab-separated output");
  };

  auto* check = app.add_subcommand("check", "Verify every theorem");
  add_common(check);
  check->add_flag("--strict", flags.strict,
                  "Treat inferred justifications as errors");
  check->add_option("paths", paths, "Source files")->required();

  auto* validate =
      app.add_subcommand("validate", "Brute-force validate theorem statements");
  add_common(validate);
  validate->add_option("--budget", flags.budget, "Normalization step budget");
  validate->add_option("paths", paths, "Source files")->required();

  auto* eval = app.add_subcommand("eval", "Normalize a term");
  add_common(eval);
  eval->add_option("--budget", flags.budget, "Normalization step budget");
  eval->add_option("expression", expression, "Term to normalize")->required();
  eval->add_option("paths", paths, "Modules defining the term's symbols");

  auto* fill = app.add_subcommand("fill", "Insert missing proof steps");
  add_common(fill);
  fill->add_flag("--strict", flags.strict,
                 "Treat inferred justifications as errors");
  fill->add_option("--max-depth", flags.search.max_depth,
                   "Longest inserted chain");
  fill->add_option("--max-nodes", flags.search.max_nodes,
                   "Terms expanded per gap");
  fill->add_flag("--in-place", flags.in_place, "Rewrite the file");
  fill->add_option("-o,--output", output, "Write the patched source here");
  std::string fill_path;
  fill->add_option("path", fill_path, "Source file")->required();

  auto* fmt = app.add_subcommand("fmt", "Format source files");
  add_common(fmt);
  fmt->add_flag("--check", flags.check, "Report unformatted files only");
  fmt->add_flag("--in-place", flags.in_place, "Rewrite the files");
  fmt->add_option("paths", paths, "Source files")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : cli::kOperational;
  }

  for (const auto& mapping : operators) {
    if (!cli::add_operator(flags, mapping)) {
      std::cerr << "axiotome: malformed --operator '" << mapping
                << "', expected G=F\n";
      return cli::kOperational;
    }
  }
  if (!output.empty()) flags.output = output;
  flags.color = std::getenv("NO_COLOR") == nullptr && isatty(STDOUT_FILENO);

  if (*check) return cli::cmd_check(paths, flags, std::cout, std::cerr);
  if (*validate) return cli::cmd_validate(paths, flags, std::cout, std::cerr);
  if (*eval)
    return cli::cmd_eval(expression, paths, flags, std::cout, std::cerr);
  if (*fill) return cli::cmd_fill(fill_path, flags, std::cout, std::cerr);
  return cli::cmd_fmt(paths, flags, std::cout, std::cerr);
}
