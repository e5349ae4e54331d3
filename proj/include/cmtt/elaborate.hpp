// Part of the cmtt proof checker, under the Apache License v2.0.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "cmtt/surface.hpp"
#include "cmtt/typecheck.hpp"

namespace cmtt {

// Turns a parsed declaration into annotated core syntax against the
// declarations elaborated so far. The result still goes through check_decl;
// the elaborator types as it goes only to fill in the annotations the core
// demands (path endpoints, crossing words, letmod motives).
Decl elaborate_decl(const ModeTheory& th, const Signature& sig, const SDecl& sd,
                    bool strict_mod_eq);

}  // namespace cmtt
