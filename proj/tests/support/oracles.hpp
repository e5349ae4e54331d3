// Part of the cmtt proof checker, under the Apache License v2.0.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <map>
#include <set>

#include "harness.hpp"

// Reference implementations the kernel is tested against. Everything here is
// written from the algebraic definitions and shares no code with src/: the
// diamond algebra has its own tables, the normal forms their own rewriting.

namespace tt::oracle {

using cmtt::FPtr;
using cmtt::IPtr;
using cmtt::ModeTheory;
using cmtt::Word;

// --- the four-point De Morgan diamond ---------------------------------------
// 0 < a, b < 1 with a, b incomparable and both fixed by negation.
enum class V4 : uint8_t { O = 0, A = 1, B = 2, I = 3 };
V4 v4_neg(V4 x);
V4 v4_meet(V4 x, V4 y);
V4 v4_join(V4 x, V4 y);

// Valuation atom: variable index plus normalized crossing word.
struct Atom {
  int var;
  Word ann;
  auto operator<=>(const Atom&) const = default;
};

// Structural evaluation under an assignment; missing atoms throw.
V4 eval_ival(const ModeTheory& th, const IPtr& r, const std::map<Atom, V4>& asg);
void collect_atoms(const ModeTheory& th, const IPtr& r, std::set<Atom>& out);

// Equality as functions over the diamond: all |atoms|^4 assignments.
bool dm4_equal(const ModeTheory& th, const IPtr& a, const IPtr& b);

// --- rewrite normal form ------------------------------------------------------
// A literal is an atom with a polarity (false: the atom, true: its negation);
// an element of the free algebra is an antichain of clauses (sorted literal
// sets) under containment. {} is bottom, {{}} is top.
struct Lit {
  Atom at;
  bool neg;
  auto operator<=>(const Lit&) const = default;
};
using NClause = std::set<Lit>;
using Nf = std::set<NClause>;

Nf ival_nf(const ModeTheory& th, const IPtr& r);
bool nf_equal(const ModeTheory& th, const IPtr& a, const IPtr& b);

// --- faces ---------------------------------------------------------------------
// Clause: consistent conjunction of endpoint pins. The canonical form is the
// antichain of minimal clauses; entailment is brute-force containment.
struct FPin {
  Atom at;
  bool one;  // pinned endpoint
  auto operator<=>(const FPin&) const = default;
};
using FClause = std::set<FPin>;
using FSet = std::set<FClause>;

FSet face_nf(const ModeTheory& th, const FPtr& f);
bool face_entails_naive(const FSet& ctx, const FSet& phi);

// --- guarded-theory words ------------------------------------------------------
// Independent normalizer for the builtin guarded presentation, by exhaustive
// application of its two rewrites.
Word modeg_nf(const ModeTheory& th, Word w);
// Normal-form shape predicate: l^a, l^a.d.g, g, l^a.d, or empty.
bool modeg_nf_shape(const ModeTheory& th, const Word& w, int dom_mode);

// --- random structure generators ------------------------------------------------
cmtt::IPtr rand_ival(Rng& rng, int nvars, int depth,
                     const std::vector<cmtt::Modality>& anns);
cmtt::FPtr rand_face(Rng& rng, int nvars, int depth);

}  // namespace tt::oracle
