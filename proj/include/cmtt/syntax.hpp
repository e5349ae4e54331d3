// Part of the cmtt proof checker, under the Apache License v2.0.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>
#include <string>
#include <utility>

#include "cmtt/interval.hpp"

namespace cmtt {

struct TyExpr;
struct TmExpr;
using TyPtr = std::shared_ptr<const TyExpr>;
using TmPtr = std::shared_ptr<const TmExpr>;

// Term-variable indices count term binders only; interval indices count
// interval binders only. Locks and restrictions are transparent to indexing;
// the typechecker enforces the lock discipline.

struct TyExpr {
  struct Pi {  // type/pi; cod binds one term variable
    Modality mu;
    TyPtr dom, cod;
  };
  struct Sigma {  // snd binds one term variable at the identity annotation
    TyPtr fst, snd;
  };
  struct Path {  // type/path; line binds one interval variable
    TyPtr line;
    TmPtr a0, a1;
  };
  struct Modal {  // type/mod; inner lives under the mu-lock
    Modality mu;
    TyPtr inner;
  };
  struct Sys {  // type/sys
    std::vector<std::pair<FPtr, TyPtr>> branches;
  };
  struct Bool {};
  struct Univ {
    int level;
  };
  struct El {  // decodes a universe element
    TmPtr code;
  };
  struct Sub {  // type/sb
    TyPtr a;
    SubstPtr s;
  };
  std::variant<Pi, Sigma, Path, Modal, Sys, Bool, Univ, El, Sub> v;
  Span span;
};

// Record of the 2-cell used by an elaborated variable access: a cell
// src => dst where src is the binder annotation and dst the lock composite.
struct VarKey {
  Modality src, dst;
  bool operator==(const VarKey&) const = default;
};

struct TmExpr {
  struct Var {  // term/var
    int ix;
    std::optional<VarKey> key;
  };
  struct Lam {  // term/pi-lam; binds one term variable
    TmPtr body;
  };
  struct App {  // term/pi-app
    TmPtr f, a;
  };
  struct PathAbs {  // term/path-abs; binds one interval variable
    TmPtr body;
  };
  struct PathApp {  // term/path-app; endpoint fields may be null on raw terms
    TmPtr p;
    IPtr r;
    TmPtr end0, end1;
  };
  struct MkBox {  // term/mod-mod; body lives under the mu-lock
    Modality mu;
    TmPtr body;
  };
  struct LetMod {  // term/mod-let; motive binds x:(mu|<nu|A>), branch binds y:(mu∘nu|A)
    Modality nu, mu;
    TyPtr motive;
    TmPtr scrut;  // lives under the mu-lock
    TmPtr branch;
  };
  struct SysT {  // term/sys
    std::vector<std::pair<FPtr, TmPtr>> branches;
  };
  struct Comp {  // term/comp; line and tube bind one interval variable
    TyPtr line;
    FPtr phi;
    TmPtr tube;  // meaningful under phi
    TmPtr cap;
  };
  struct Pair {
    TmPtr fst, snd;
  };
  struct Fst {
    TmPtr p;
  };
  struct Snd {
    TmPtr p;
  };
  struct True {};
  struct False {};
  struct BoolElim {  // motive binds one term variable of type Bool
    TyPtr motive;
    TmPtr tt, ff, scrut;
  };
  struct Code {  // universe introduction
    TyPtr ty;
  };
  struct Const {  // reference to a signature declaration
    std::string name;
  };
  struct Sub {  // term/sb
    TmPtr a;
    SubstPtr s;
  };
  std::variant<Var, Lam, App, PathAbs, PathApp, MkBox, LetMod, SysT, Comp, Pair, Fst, Snd,
               True, False, BoolElim, Code, Const, Sub>
      v;
  Span span;
};

// Explicit substitutions, constructed by the frontend and by rule-level
// tests; the kernel computes them away eagerly with apply_subst.
struct SubstExpr {
  struct Id {};     // sb/id
  struct Comp {     // sb/comp: e[Comp{outer,inner}] = e[outer][inner]
    SubstPtr outer, inner;
  };
  struct Empty {};  // sb/emp
  struct WkTm {};   // sb/weak-type : Γ,x:(mu|A) → Γ
  struct WkInt {};  // sb/weak-int  : Γ,𝕀 → Γ
  struct WkRes {};  // sb/weak-res  : Γ,φ → Γ
  struct Lock {     // sb/lock : Γ,lock_mu → Δ,lock_mu from s : Γ → Δ
    Modality mu;
    SubstPtr s;
  };
  struct Key {      // sb/key from a cell src => dst : Γ,lock_dst → Γ,lock_src
    Modality src, dst;
  };
  struct ExtTm {    // sb/ext-type
    SubstPtr s;
    TmPtr a;
  };
  struct ExtInt {   // sb/ext-int
    SubstPtr s;
    IPtr r;
  };
  struct Restrict {  // sb/face-res : Γ,φ[s] → Δ,φ from s : Γ → Δ
    SubstPtr s;
  };
  struct ExcIntInv {   // sb/exc-int-inv : (Γ,lock_mu),𝕀 → (Γ,𝕀),lock_mu
    Modality mu;
  };
  struct ExcFaceInv {  // sb/exc-face-inv : (Γ,lock_mu),⇑φ → (Γ,φ),lock_mu
    Modality mu;
    FPtr phi;
  };
  std::variant<Id, Comp, Empty, WkTm, WkInt, WkRes, Lock, Key, ExtTm, ExtInt, Restrict,
               ExcIntInv, ExcFaceInv>
      v;
};

// constructors
TyPtr ty_pi(Modality mu, TyPtr dom, TyPtr cod);
TyPtr ty_sigma(TyPtr fst, TyPtr snd);
TyPtr ty_path(TyPtr line, TmPtr a0, TmPtr a1);
TyPtr ty_modal(Modality mu, TyPtr inner);
TyPtr ty_sys(std::vector<std::pair<FPtr, TyPtr>> branches);
TyPtr ty_bool();
TyPtr ty_univ(int level);
TyPtr ty_el(TmPtr code);
TyPtr ty_sub(TyPtr a, SubstPtr s);

TmPtr tm_var(int ix);
TmPtr tm_var_keyed(int ix, VarKey key);
TmPtr tm_lam(TmPtr body);
TmPtr tm_app(TmPtr f, TmPtr a);
TmPtr tm_pathabs(TmPtr body);
TmPtr tm_pathapp(TmPtr p, IPtr r);
TmPtr tm_pathapp_ann(TmPtr p, IPtr r, TmPtr e0, TmPtr e1);
TmPtr tm_box(Modality mu, TmPtr body);
TmPtr tm_letmod(Modality nu, Modality mu, TyPtr motive, TmPtr scrut, TmPtr branch);
TmPtr tm_sys(std::vector<std::pair<FPtr, TmPtr>> branches);
TmPtr tm_comp(TyPtr line, FPtr phi, TmPtr tube, TmPtr cap);
TmPtr tm_pair(TmPtr fst, TmPtr snd);
TmPtr tm_fst(TmPtr p);
TmPtr tm_snd(TmPtr p);
TmPtr tm_true();
TmPtr tm_false();
TmPtr tm_boolelim(TyPtr motive, TmPtr tt, TmPtr ff, TmPtr scrut);
TmPtr tm_code(TyPtr ty);
TmPtr tm_const(std::string name);
TmPtr tm_sub(TmPtr a, SubstPtr s);

SubstPtr sb_id();
SubstPtr sb_comp(SubstPtr outer, SubstPtr inner);
SubstPtr sb_empty();
SubstPtr sb_wk_tm();
SubstPtr sb_wk_int();
SubstPtr sb_wk_res();
SubstPtr sb_lock(Modality mu, SubstPtr s);
SubstPtr sb_key(Modality src, Modality dst);
SubstPtr sb_ext_tm(SubstPtr s, TmPtr a);
SubstPtr sb_ext_int(SubstPtr s, IPtr r);
SubstPtr sb_restrict(SubstPtr s);
SubstPtr sb_exc_int_inv(Modality mu);
SubstPtr sb_exc_face_inv(Modality mu, FPtr phi);
// derived forms
SubstPtr sb_exc_int(const Modality& mu);                 // sb/exc-int  = ⟨Wk_I.lock, ⇑q⟩
SubstPtr sb_exc_face(const Modality& mu, const FPtr& f); // sb/exc-face = restrict(Wk_φ.lock)
SubstPtr sb_plus_int(SubstPtr s);                        // sb/plus-int = ⟨s∘Wk_I, q⟩

// Hereditary application: the result contains no Sub nodes. Implements the
// sb-eq laws as computation.
TmPtr apply_subst(const ModeTheory& th, const SubstPtr& s, const TmPtr& e);
TyPtr apply_subst_ty(const ModeTheory& th, const SubstPtr& s, const TyPtr& e);
IPtr apply_subst_int(const ModeTheory& th, const SubstPtr& s, const IPtr& e);
FPtr apply_subst_face(const ModeTheory& th, const SubstPtr& s, const FPtr& e);

// Free-variable shifts (used by the engine and by the elaborator).
TmPtr shift_tm(const ModeTheory& th, const TmPtr& e, int dt, int di);
TyPtr shift_ty(const ModeTheory& th, const TyPtr& e, int dt, int di);

// Structural equality of raw syntax (modalities compared as written).
bool syn_equal(const TmPtr& a, const TmPtr& b);
bool syn_equal_ty(const TyPtr& a, const TyPtr& b);
bool syn_equal_int(const IPtr& a, const IPtr& b);
bool syn_equal_face(const FPtr& a, const FPtr& b);

// s-expression rendering with one head symbol per constructor
std::string sexpr_tm(const ModeTheory& th, const TmPtr& e);
std::string sexpr_ty(const ModeTheory& th, const TyPtr& e);
std::string sexpr_int(const ModeTheory& th, const IPtr& e);
std::string sexpr_face(const ModeTheory& th, const FPtr& e);
std::string sexpr_subst(const ModeTheory& th, const SubstPtr& s);

}  // namespace cmtt
