// Part of the cmtt proof checker, under the Apache License v2.0.
// SPDX-License-Identifier: Apache-2.0
//
// Command-line entry point.
//   cmtt check <files...> [--mode-theory SEL] [--json] [--dump-core] [--strict-mod-eq]
//   cmtt normalize <file> --decl NAME [--mode-theory SEL] [--json]

#include <iostream>

#include "CLI11.hpp"
#include "cmtt/driver.hpp"

int main(int argc, char** argv) {
  CLI::App app{"cmtt: a proof checker for cubical multimodal type theory"};
  app.require_subcommand(1);

  cmtt::DriverOptions opt;
  std::vector<std::string> files;
  std::string decl;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--mode-theory", opt.mode_theory,
                    "builtin name (guarded, trivial) or presentation file");
    cmd->add_flag("--json", opt.json, "machine-readable output");
    cmd->add_flag("--strict-mod-eq", opt.strict_mod_eq,
                  "compare boxed values structurally instead of by payload");
  };

  CLI::App* check = app.add_subcommand("check", "check declarations");
  check->add_option("files", files, "input .cmtt files")->required()->expected(-1);
  check->add_flag("--dump-core", opt.dump_core, "print elaborated core as s-expressions");
  add_common(check);

  CLI::App* norm = app.add_subcommand("normalize", "print a definition's normal form");
  norm->add_option("file", files, "input .cmtt file")->required()->expected(1);
  norm->add_option("--decl", decl, "definition to normalize")->required();
  add_common(norm);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;  // bad invocation is a configuration error
  }

  if (check->parsed()) return cmtt::run_check(files, opt, std::cout, std::cerr);
  return cmtt::run_normalize(files[0], decl, opt, std::cout, std::cerr);
}
