// Part of the cmtt proof checker, under the Apache License v2.0.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "cmtt/value.hpp"

namespace cmtt {

// Ambient evaluation data. Copied freely; the two budget pointers are shared
// across one conversion query so nested comparisons drain the same allowance.
struct Ev {
  const ModeTheory* th = nullptr;
  const Signature* sig = nullptr;
  ModeId mode = 0;
  FaceDnf faces = dnf_top();
  int tlvl = 0;                // bound term levels
  int ilvl = 0;                // bound interval levels
  std::vector<ModeId> ivm;     // binder mode per interval level
  bool strict_mod_eq = false;
  int* fuel = nullptr;    // axiom unfolding budget, conversion only
  int* splits = nullptr;  // face-splitting budget, conversion only
};

Ev cross(const Ev& E, const Modality& mu);   // step through a lock
Ev refine(const Ev& E, const FaceDnf& phi);  // conjoin a face restriction
Ev bind_tm(const Ev& E);
Ev bind_iv(const Ev& E);
VPtr fresh_tvar(const Ev& E);  // level E.tlvl
IPtr fresh_ivar(const Ev& E);  // level E.ilvl, identity annotation at E.mode

// Environment mapping every level in scope to itself. Closing a quoted open
// term over this environment gives a level-safe closure: applying it later at
// any depth re-resolves free occurrences to their original levels.
Env id_env(const Ev& E);

// Evaluation. Terms and types land in the same value domain (codes carry
// types through the universe); intervals and faces evaluate to the level
// representation described in value.hpp.
VPtr eval_tm(const Ev& E, const TmPtr& e, const Env& env);
VPtr eval_ty(const Ev& E, const TyPtr& e, const Env& env);
IPtr eval_int(const Ev& E, const IPtr& r, const Env& env);
FaceDnf eval_face(const Ev& E, const FPtr& f, const Env& env);

// Closure application and thunk forcing.
VPtr clos_app(const Ev& E, const TmClosT& c, const VPtr& a);
VPtr clos_iapp(const Ev& E, const TmClosI& c, const IPtr& r);
VPtr tyclos_app(const Ev& E, const TyClosT& c, const VPtr& a);
VPtr tyclos_iapp(const Ev& E, const TyClosI& c, const IPtr& r);
VPtr force_tm(const Ev& E, const TmThunk& t);
VPtr force_ty(const Ev& E, const TyThunk& t);

// Semantic eliminators.
VPtr do_app(const Ev& E, const VPtr& f, const VPtr& a);
VPtr do_papp(const Ev& E, const VPtr& p, const IPtr& r, const VPtr& e0, const VPtr& e1);
VPtr do_fst(const Ev& E, const VPtr& p);
VPtr do_snd(const Ev& E, const VPtr& p);
VPtr do_letmod(const Ev& E, const Modality& nu, const Modality& mu, const TyClosT& motive,
               const VPtr& scrut, const TmClosT& branch);
VPtr do_boolelim(const Ev& E, const TyClosT& motive, const VPtr& tt, const VPtr& ff,
                 const VPtr& scrut);
VPtr do_spine(const Ev& E, const VPtr& head, const std::vector<Spine>& spine);

// Retries stuck forms against the current face context: selects an entailed
// system branch, re-dispatches a stuck composition.
VPtr whnf(const Ev& E, const VPtr& v);

// Readback; levels convert to indices against E's counters. Quotation is
// structural (beta-normal), conversion handles eta.
TmPtr quote_tm(const Ev& E, const VPtr& v);
TyPtr quote_ty(const Ev& E, const VPtr& v);
IPtr quote_int(const Ev& E, const IPtr& r);
FPtr quote_dnf(const Ev& E, const FaceDnf& f);

// Definitional equality. equal_tm is directed by the type for eta; both entry
// points install fresh unfolding and splitting budgets when none are set.
bool equal_tm(const Ev& E, const VPtr& ty, const VPtr& a, const VPtr& b);
bool equal_ty(const Ev& E, const VPtr& a, const VPtr& b);

}  // namespace cmtt
