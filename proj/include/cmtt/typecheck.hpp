// Part of the cmtt proof checker, under the Apache License v2.0.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "cmtt/eval.hpp"

namespace cmtt {

// One telescope entry. Locks and restrictions bind nothing; they gate what
// the variables to their left may be used for.
struct CtxEntry {
  enum class Kind { Lock, TmVar, IntVar, Restrict } kind;
  Modality mu;      // Lock: the lock; TmVar: the binder annotation
  VPtr type;        // TmVar: type value, evaluated at its binder depth
  FaceDnf phi;      // Restrict
  ModeId mode_at;   // ambient mode just inside this entry
};

// Checking context. Extension returns a copy; entries parallel the semantic
// environment and the ambient Ev (mode, faces, levels).
struct Ctx {
  std::vector<CtxEntry> entries;
  Env env;
  Ev ev;

  static Ctx make(const ModeTheory& th, const Signature& sig, ModeId mode, bool strict_mod_eq);
  Ctx push_lock(const Modality& mu) const;
  Ctx push_tmvar(const Modality& ann, VPtr type) const;
  Ctx push_intvar() const;
  Ctx push_restrict(const FaceDnf& phi) const;

  const ModeTheory& th() const { return *ev.th; }
};

struct TmVarInfo {
  Modality ann;    // binder annotation
  VPtr type;
  Modality locks;  // composite of the locks between use and binder
};
struct IVarInfo {
  std::vector<GenId> word;  // raw crossing word from use to binder
  ModeId binder_mode;
};

TmVarInfo lookup_tm_var(const Ctx& G, int ix);
IVarInfo lookup_int_var(const Ctx& G, int ix);

struct TypeResult {
  VPtr v;
  int level;
};

// Bidirectional kernel. check_type returns the evaluated type and its
// universe level; infer_tm returns the evaluated type of the term.
TypeResult check_type(const Ctx& G, const TyPtr& t);
VPtr infer_tm(const Ctx& G, const TmPtr& e);
void check_tm(const Ctx& G, const TmPtr& e, const VPtr& ty);
void check_int(const Ctx& G, const IPtr& r);
FaceDnf check_face(const Ctx& G, const FPtr& f);

// Checks a declaration against an already-checked signature and installs it.
// Axioms with an unfolding equation are installed before the equation's
// right-hand side is checked, so the equation may mention the axiom.
void check_decl(const ModeTheory& th, Signature& sig, const Decl& d, bool strict_mod_eq);

}  // namespace cmtt
