// Part of the cmtt proof checker, under the Apache License v2.0.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <string>

// Shared property suites. Each returns a short stats line on success and
// throws std::runtime_error on the first violated expectation; the same
// suites back the unit binaries and the acceptance runner.

namespace tt::props {

// Interval equality vs the diamond-valuation and rewrite-normal-form
// oracles, exhaustively over every term with at most three variables and
// four connectives.
std::string int_oracle_exhaustive();
// Randomized larger interval pairs, half of them semantics-preserving
// mutations of one another.
std::string int_oracle_random(int pairs, uint64_t seed);
// Same, over annotated atoms in the guarded theory, including non-normal
// annotation spellings.
std::string int_oracle_annotated(int pairs, uint64_t seed);
// Face canonicalization and entailment vs brute-force clause containment,
// exhaustively over small formulas.
std::string face_oracle_exhaustive();

// The guarded mode theory: the four presented laws, the normal-form
// inventory up to the given word length, and preorder/whiskering closure of
// derivable 2-cells.
std::string modeg_laws();
std::string modeg_nf_enumeration(int maxlen);
std::string modeg_preorder();

// Composition at modal types: a generated family of instances where the
// boxed inner composite and the composite at the modal type are checked,
// compared, and reduced on the tube faces.
std::string comp_mod_family();

// Randomized well-typed instances.
std::string subst_functorial(int n, uint64_t seed);
std::string quote_eval_idempotent(int n, uint64_t seed);
std::string split_soundness(int n, uint64_t seed);

}  // namespace tt::props
