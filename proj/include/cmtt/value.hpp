// Part of the cmtt proof checker, under the Apache License v2.0.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <functional>
#include <map>

#include "cmtt/diagnostics.hpp"
#include "cmtt/syntax.hpp"

namespace cmtt {

// Semantic domain for normalization by evaluation.
//
// Interval values reuse IPtr with a level convention: IExpr::Var::ix is an
// absolute level into the ambient interval telescope, and the annotation is
// the raw word of locks the occurrence looks through. Environments bind
// innermost entries last and contain no lock markers; evaluation exchanges
// the ambient face context instead when it steps through a lock.

struct Value;
using VPtr = std::shared_ptr<const Value>;

struct Env {
  std::vector<VPtr> terms;
  std::vector<IPtr> ivals;

  const VPtr& tm(int ix) const {
    if (static_cast<size_t>(ix) >= terms.size())
      fail(Err::Internal, "term/sb", "term index escapes the environment");
    return terms[terms.size() - 1 - static_cast<size_t>(ix)];
  }
  const IPtr& iv(int ix) const {
    if (static_cast<size_t>(ix) >= ivals.size())
      fail(Err::Internal, "term/sb", "interval index escapes the environment");
    return ivals[ivals.size() - 1 - static_cast<size_t>(ix)];
  }
  Env push_tm(VPtr v) const {
    Env e = *this;
    e.terms.push_back(std::move(v));
    return e;
  }
  Env push_iv(IPtr r) const {
    Env e = *this;
    e.ivals.push_back(std::move(r));
    return e;
  }
};

// Closures pair a body with its captured environment; a null body means the
// value is computed by the host function instead (used by the Kan operations).
struct TmClosT {  // term body, one term binder
  TmPtr body;
  Env env;
  std::function<VPtr(const VPtr&)> host;
};
struct TmClosI {  // term body, one interval binder
  TmPtr body;
  Env env;
  std::function<VPtr(const IPtr&)> host;
};
struct TyClosT {  // type body, one term binder
  TyPtr body;
  Env env;
  std::function<VPtr(const VPtr&)> host;
};
struct TyClosI {  // type body, one interval binder
  TyPtr body;
  Env env;
  std::function<VPtr(const IPtr&)> host;
};
struct TmThunk {  // term body, no binder; forced where its face holds
  TmPtr body;
  Env env;
};
struct TyThunk {  // type body, no binder
  TyPtr body;
  Env env;
};

// Neutral heads. Besides variables and signature constants, a head may be a
// term system none of whose faces is decided yet, or a composition stuck on
// an unstructured line; both can make progress once the ambient face context
// is refined, so eliminators pile up in the spine uniformly.
struct HVar {
  int lvl;
};
struct HConst {
  std::string name;
};
struct HSplit {
  std::vector<std::pair<FaceDnf, TmThunk>> branches;
};
struct HComp {
  TyClosI line;
  FaceDnf phi;
  TmClosI tube;
  VPtr cap;
};

struct SApp {
  VPtr arg;
};
struct SPathApp {
  IPtr r;
  VPtr e0, e1;  // endpoint values, null when the syntax carried none
};
struct SFst {};
struct SSnd {};
struct SLetMod {  // the neutral this is applied to is the scrutinee
  Modality nu, mu;
  TyClosT motive;
  TmClosT branch;
};
struct SBoolElim {
  TyClosT motive;
  VPtr tt, ff;
};
using Spine = std::variant<SApp, SPathApp, SFst, SSnd, SLetMod, SBoolElim>;

struct Neutral {
  std::variant<HVar, HConst, HSplit, HComp> head;
  std::vector<Spine> spine;
};

struct Value {
  // type values
  struct VPi {
    Modality mu;
    VPtr dom;  // evaluated under the mu-exchanged ambient
    TyClosT cod;
  };
  struct VSigma {
    VPtr fst;
    TyClosT snd;
  };
  struct VPath {
    TyClosI line;
    VPtr a0, a1;
  };
  struct VModal {
    Modality mu;
    VPtr inner;  // evaluated under the mu-exchanged ambient
  };
  struct VSysTy {  // no branch face entailed yet; branches stay unevaluated
    std::vector<std::pair<FaceDnf, TyThunk>> branches;
  };
  struct VBool {};
  struct VUniv {
    int level;
  };
  // term values
  struct VLam {
    TmClosT body;
  };
  struct VPathAbs {
    TmClosI body;
  };
  struct VBox {
    Modality mu;
    VPtr body;  // evaluated under the mu-exchanged ambient
  };
  struct VPair {
    VPtr fst, snd;
  };
  struct VTrue {};
  struct VFalse {};
  struct VCode {
    VPtr ty;
  };
  struct VNeut {
    Neutral n;
  };

  std::variant<VPi, VSigma, VPath, VModal, VSysTy, VBool, VUniv, VLam, VPathAbs, VBox, VPair,
               VTrue, VFalse, VCode, VNeut>
      v;
};

VPtr mkv(Value::VPi x);
VPtr mkv(Value::VSigma x);
VPtr mkv(Value::VPath x);
VPtr mkv(Value::VModal x);
VPtr mkv(Value::VSysTy x);
VPtr mkv(Value::VBool x);
VPtr mkv(Value::VUniv x);
VPtr mkv(Value::VLam x);
VPtr mkv(Value::VPathAbs x);
VPtr mkv(Value::VBox x);
VPtr mkv(Value::VPair x);
VPtr mkv(Value::VTrue x);
VPtr mkv(Value::VFalse x);
VPtr mkv(Value::VCode x);
VPtr mkv(Value::VNeut x);
VPtr mk_nvar(int lvl);

// Signature of checked declarations. Definitions unfold during evaluation;
// axioms stay neutral, except that an axiom with an unfolding equation may be
// expanded a bounded number of times during conversion.
struct Decl {
  std::string name;
  ModeId mode = 0;
  TyPtr type;
  TmPtr body;    // null for axioms
  TmPtr unfold;  // optional: right-hand side the constant may step to
};

struct Signature {
  std::vector<Decl> decls;
  std::map<std::string, size_t> index;

  const Decl* find(const std::string& n) const {
    auto it = index.find(n);
    return it == index.end() ? nullptr : &decls[it->second];
  }
  void add(Decl d) {
    index[d.name] = decls.size();
    decls.push_back(std::move(d));
  }
};

}  // namespace cmtt
