// Part of the cmtt proof checker, under the Apache License v2.0.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <ostream>

#include "cmtt/elaborate.hpp"

namespace cmtt {

struct DriverOptions {
  std::string mode_theory = "guarded";  // builtin name or presentation file
  bool json = false;
  bool dump_core = false;
  bool strict_mod_eq = false;
};

// Resolves "guarded"/"trivial" to the builtins, anything else as a file path.
ModeTheory load_mode_theory(const std::string& selector);

// Pretty-prints core syntax in the surface grammar; used by normalize and
// the diagnostics. Binder names are invented (x0, x1, ... / i0, i1, ...).
std::string pretty_tm(const ModeTheory& th, const TmPtr& e);
std::string pretty_ty(const ModeTheory& th, const TyPtr& t);

// Check every declaration of every file, in order, against one signature.
// Returns the process exit code: 0 ok, 1 check failure, 2 configuration
// error, 3 resource cap.
int run_check(const std::vector<std::string>& files, const DriverOptions& opt, std::ostream& out,
              std::ostream& errs);

// Check the file, then print the beta-normal form of one definition.
int run_normalize(const std::string& file, const std::string& decl, const DriverOptions& opt,
                  std::ostream& out, std::ostream& errs);

}  // namespace cmtt
