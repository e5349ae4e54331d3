// Part of the cmtt proof checker, under the Apache License v2.0.
// SPDX-License-Identifier: Apache-2.0
//
// Evaluation, readback and definitional equality. Decisions that depend on
// the face context are monotone under refinement, so values computed under a
// coarser context stay valid when conversion splits into face cases; stuck
// forms are retried by whnf instead of being rebuilt.
#include "cmtt/eval.hpp"

#include "cmtt/diagnostics.hpp"
#include "cmtt/kan.hpp"

namespace cmtt {

namespace {
bool eq_ty_i(const Ev& E, const VPtr& a, const VPtr& b);
bool eq_tm_i(const Ev& E, const VPtr& ty, const VPtr& a, const VPtr& b);
bool eq_val(const Ev& E, const VPtr& a, const VPtr& b);
}  // namespace

Ev cross(const Ev& E, const Modality& mu) {
  Ev e = E;
  e.mode = mu.dom;
  e.faces = exc_face_dnf(*E.th, mu, E.faces);
  return e;
}

Ev refine(const Ev& E, const FaceDnf& phi) {
  Ev e = E;
  e.faces = dnf_and(E.faces, phi);
  return e;
}

Ev bind_tm(const Ev& E) {
  Ev e = E;
  e.tlvl += 1;
  return e;
}

Ev bind_iv(const Ev& E) {
  Ev e = E;
  e.ivm.resize(static_cast<size_t>(e.ilvl), e.mode);
  e.ivm.push_back(e.mode);
  e.ilvl += 1;
  return e;
}

VPtr fresh_tvar(const Ev& E) { return mk_nvar(E.tlvl); }
IPtr fresh_ivar(const Ev& E) { return mk_ivar(E.ilvl, Modality{E.mode, E.mode, {}}); }

Env id_env(const Ev& E) {
  Env e;
  e.terms.reserve(static_cast<size_t>(E.tlvl));
  e.ivals.reserve(static_cast<size_t>(E.ilvl));
  for (int t = 0; t < E.tlvl; ++t) e.terms.push_back(mk_nvar(t));
  for (int i = 0; i < E.ilvl; ++i) {
    ModeId m = i < static_cast<int>(E.ivm.size()) ? E.ivm[static_cast<size_t>(i)] : E.mode;
    e.ivals.push_back(mk_ivar(i, Modality{m, m, {}}));
  }
  return e;
}

// --- evaluation ----------------------------------------------------------------

IPtr eval_int(const Ev& E, const IPtr& r, const Env& env) {
  return std::visit(
      [&](auto&& n) -> IPtr {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, IExpr::Zero> || std::is_same_v<T, IExpr::One>)
          return r;
        else if constexpr (std::is_same_v<T, IExpr::Var>) {
          const IPtr& v = env.iv(n.ix);
          return n.ann.word.empty() ? v : exc_int(*E.th, n.ann, v);
        } else if constexpr (std::is_same_v<T, IExpr::Neg>)
          return mk_ineg(eval_int(E, n.r, env));
        else if constexpr (std::is_same_v<T, IExpr::Meet>)
          return mk_imeet(eval_int(E, n.a, env), eval_int(E, n.b, env));
        else if constexpr (std::is_same_v<T, IExpr::Join>)
          return mk_ijoin(eval_int(E, n.a, env), eval_int(E, n.b, env));
        else
          return eval_int(E, apply_subst_int(*E.th, n.s, n.r), env);
      },
      r->v);
}

FaceDnf eval_face(const Ev& E, const FPtr& f, const Env& env) {
  return std::visit(
      [&](auto&& n) -> FaceDnf {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, FExpr::Bot>)
          return dnf_bot();
        else if constexpr (std::is_same_v<T, FExpr::Top>)
          return dnf_top();
        else if constexpr (std::is_same_v<T, FExpr::Eq0>)
          return dnf_eq0(*E.th, eval_int(E, n.r, env));
        else if constexpr (std::is_same_v<T, FExpr::Eq1>)
          return dnf_eq1(*E.th, eval_int(E, n.r, env));
        else if constexpr (std::is_same_v<T, FExpr::Meet>)
          return dnf_and(eval_face(E, n.a, env), eval_face(E, n.b, env));
        else if constexpr (std::is_same_v<T, FExpr::Join>)
          return dnf_or(eval_face(E, n.a, env), eval_face(E, n.b, env));
        else
          return eval_face(E, apply_subst_face(*E.th, n.s, n.f), env);
      },
      f->v);
}

VPtr clos_app(const Ev& E, const TmClosT& c, const VPtr& a) {
  if (c.host) return c.host(a);
  return eval_tm(E, c.body, c.env.push_tm(a));
}
VPtr clos_iapp(const Ev& E, const TmClosI& c, const IPtr& r) {
  if (c.host) return c.host(r);
  return eval_tm(E, c.body, c.env.push_iv(r));
}
VPtr tyclos_app(const Ev& E, const TyClosT& c, const VPtr& a) {
  if (c.host) return c.host(a);
  return eval_ty(E, c.body, c.env.push_tm(a));
}
VPtr tyclos_iapp(const Ev& E, const TyClosI& c, const IPtr& r) {
  if (c.host) return c.host(r);
  return eval_ty(E, c.body, c.env.push_iv(r));
}
VPtr force_tm(const Ev& E, const TmThunk& t) { return eval_tm(E, t.body, t.env); }
VPtr force_ty(const Ev& E, const TyThunk& t) { return eval_ty(E, t.body, t.env); }

VPtr do_app(const Ev& E, const VPtr& f, const VPtr& a) {
  VPtr fw = whnf(E, f);
  if (auto* l = std::get_if<Value::VLam>(&fw->v)) return clos_app(E, l->body, a);
  if (auto* n = std::get_if<Value::VNeut>(&fw->v)) {
    Neutral m = n->n;
    m.spine.push_back(SApp{a});
    return mkv(Value::VNeut{std::move(m)});
  }
  fail(Err::Internal, "term/pi-app", "application head is not a function value");
}

VPtr do_papp(const Ev& E, const VPtr& p, const IPtr& r, const VPtr& e0, const VPtr& e1) {
  VPtr pw = whnf(E, p);
  if (auto* l = std::get_if<Value::VPathAbs>(&pw->v)) return clos_iapp(E, l->body, r);
  if (auto* n = std::get_if<Value::VNeut>(&pw->v)) {
    if (e0 && int_is_zero(*E.th, E.faces, r)) return e0;
    if (e1 && int_is_one(*E.th, E.faces, r)) return e1;
    Neutral m = n->n;
    m.spine.push_back(SPathApp{r, e0, e1});
    return mkv(Value::VNeut{std::move(m)});
  }
  fail(Err::Internal, "term/path-app", "path application head is not a path value");
}

VPtr do_fst(const Ev& E, const VPtr& p) {
  VPtr pw = whnf(E, p);
  if (auto* x = std::get_if<Value::VPair>(&pw->v)) return x->fst;
  if (auto* n = std::get_if<Value::VNeut>(&pw->v)) {
    Neutral m = n->n;
    m.spine.push_back(SFst{});
    return mkv(Value::VNeut{std::move(m)});
  }
  fail(Err::Internal, "term/fst", "projection head is not a pair value");
}

VPtr do_snd(const Ev& E, const VPtr& p) {
  VPtr pw = whnf(E, p);
  if (auto* x = std::get_if<Value::VPair>(&pw->v)) return x->snd;
  if (auto* n = std::get_if<Value::VNeut>(&pw->v)) {
    Neutral m = n->n;
    m.spine.push_back(SSnd{});
    return mkv(Value::VNeut{std::move(m)});
  }
  fail(Err::Internal, "term/snd", "projection head is not a pair value");
}

VPtr do_letmod(const Ev& E, const Modality& nu, const Modality& mu, const TyClosT& motive,
               const VPtr& scrut, const TmClosT& branch) {
  VPtr sw = whnf(cross(E, mu), scrut);
  if (auto* b = std::get_if<Value::VBox>(&sw->v)) return clos_app(E, branch, b->body);
  if (auto* n = std::get_if<Value::VNeut>(&sw->v)) {
    Neutral m = n->n;
    m.spine.push_back(SLetMod{nu, mu, motive, branch});
    return mkv(Value::VNeut{std::move(m)});
  }
  fail(Err::Internal, "term/mod-let", "scrutinee is not a boxed value");
}

VPtr do_boolelim(const Ev& E, const TyClosT& motive, const VPtr& tt, const VPtr& ff,
                 const VPtr& scrut) {
  VPtr sw = whnf(E, scrut);
  if (std::holds_alternative<Value::VTrue>(sw->v)) return tt;
  if (std::holds_alternative<Value::VFalse>(sw->v)) return ff;
  if (auto* n = std::get_if<Value::VNeut>(&sw->v)) {
    Neutral m = n->n;
    m.spine.push_back(SBoolElim{motive, tt, ff});
    return mkv(Value::VNeut{std::move(m)});
  }
  fail(Err::Internal, "term/bool-elim", "scrutinee is not a boolean value");
}

// Ambient at each spine position. A letmod item's scrutinee (everything to
// its left, including the head) sits one lock deeper than the item itself.
static std::vector<Ev> spine_ambients(const Ev& E, const std::vector<Spine>& spine, Ev& head) {
  std::vector<Ev> amb(spine.size(), E);
  Ev cur = E;
  for (size_t k = spine.size(); k-- > 0;) {
    amb[k] = cur;
    if (auto* lm = std::get_if<SLetMod>(&spine[k])) cur = cross(cur, lm->mu);
  }
  head = cur;
  return amb;
}

VPtr do_spine(const Ev& E, const VPtr& head, const std::vector<Spine>& spine) {
  Ev eh = E;
  std::vector<Ev> amb = spine_ambients(E, spine, eh);
  VPtr acc = head;
  for (size_t k = 0; k < spine.size(); ++k) {
    const Ev& A = amb[k];
    acc = std::visit(
        [&](auto&& it) -> VPtr {
          using T = std::decay_t<decltype(it)>;
          if constexpr (std::is_same_v<T, SApp>)
            return do_app(A, acc, it.arg);
          else if constexpr (std::is_same_v<T, SPathApp>)
            return do_papp(A, acc, it.r, it.e0, it.e1);
          else if constexpr (std::is_same_v<T, SFst>)
            return do_fst(A, acc);
          else if constexpr (std::is_same_v<T, SSnd>)
            return do_snd(A, acc);
          else if constexpr (std::is_same_v<T, SLetMod>)
            return do_letmod(A, it.nu, it.mu, it.motive, acc, it.branch);
          else
            return do_boolelim(A, it.motive, it.tt, it.ff, acc);
        },
        spine[k]);
  }
  return acc;
}

VPtr whnf(const Ev& E, const VPtr& v) {
  if (auto* sy = std::get_if<Value::VSysTy>(&v->v)) {
    for (auto& [phi, th] : sy->branches)
      if (!phi.is_false() && face_entails(*E.th, E.faces, phi))
        return whnf(E, force_ty(E, th));
    return v;
  }
  auto* ne = std::get_if<Value::VNeut>(&v->v);
  if (!ne) return v;
  const Neutral& n = ne->n;
  Ev eh = E;
  std::vector<Ev> amb = spine_ambients(E, n.spine, eh);
  if (auto* hs = std::get_if<HSplit>(&n.head)) {
    for (auto& [phi, th] : hs->branches)
      if (!phi.is_false() && face_entails(*eh.th, eh.faces, phi))
        return whnf(E, do_spine(E, force_tm(eh, th), n.spine));
  } else if (auto* hc = std::get_if<HComp>(&n.head)) {
    VPtr r = eval_comp(eh, hc->line, hc->phi, hc->tube, hc->cap);
    bool still = false;
    if (auto* rn = std::get_if<Value::VNeut>(&r->v))
      still = std::holds_alternative<HComp>(rn->n.head) && rn->n.spine.empty();
    if (!still) return whnf(E, do_spine(E, r, n.spine));
  }
  for (size_t k = 0; k < n.spine.size(); ++k) {
    auto* pa = std::get_if<SPathApp>(&n.spine[k]);
    if (!pa) continue;
    if ((pa->e0 && int_is_zero(*E.th, amb[k].faces, pa->r)) ||
        (pa->e1 && int_is_one(*E.th, amb[k].faces, pa->r)))
      return whnf(E, do_spine(E, mkv(Value::VNeut{Neutral{n.head, {}}}), n.spine));
  }
  return v;
}

VPtr eval_tm(const Ev& E, const TmPtr& e, const Env& env) {
  return std::visit(
      [&](auto&& n) -> VPtr {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, TmExpr::Var>)
          return env.tm(n.ix);
        else if constexpr (std::is_same_v<T, TmExpr::Lam>)
          return mkv(Value::VLam{TmClosT{n.body, env, nullptr}});
        else if constexpr (std::is_same_v<T, TmExpr::App>)
          return do_app(E, eval_tm(E, n.f, env), eval_tm(E, n.a, env));
        else if constexpr (std::is_same_v<T, TmExpr::PathAbs>)
          return mkv(Value::VPathAbs{TmClosI{n.body, env, nullptr}});
        else if constexpr (std::is_same_v<T, TmExpr::PathApp>) {
          VPtr e0 = n.end0 ? eval_tm(E, n.end0, env) : nullptr;
          VPtr e1 = n.end1 ? eval_tm(E, n.end1, env) : nullptr;
          return do_papp(E, eval_tm(E, n.p, env), eval_int(E, n.r, env), e0, e1);
        } else if constexpr (std::is_same_v<T, TmExpr::MkBox>)
          return mkv(Value::VBox{n.mu, eval_tm(cross(E, n.mu), n.body, env)});
        else if constexpr (std::is_same_v<T, TmExpr::LetMod>)
          return do_letmod(E, n.nu, n.mu, TyClosT{n.motive, env, nullptr},
                           eval_tm(cross(E, n.mu), n.scrut, env),
                           TmClosT{n.branch, env, nullptr});
        else if constexpr (std::is_same_v<T, TmExpr::SysT>) {
          std::vector<std::pair<FaceDnf, TmThunk>> bs;
          for (auto& [f, t] : n.branches) {
            FaceDnf fd = eval_face(E, f, env);
            if (face_entails(*E.th, E.faces, fd)) return eval_tm(E, t, env);
            if (!fd.is_false()) bs.emplace_back(std::move(fd), TmThunk{t, env});
          }
          return mkv(Value::VNeut{Neutral{HSplit{std::move(bs)}, {}}});
        } else if constexpr (std::is_same_v<T, TmExpr::Comp>)
          return eval_comp(E, TyClosI{n.line, env, nullptr}, eval_face(E, n.phi, env),
                           TmClosI{n.tube, env, nullptr}, eval_tm(E, n.cap, env));
        else if constexpr (std::is_same_v<T, TmExpr::Pair>)
          return mkv(Value::VPair{eval_tm(E, n.fst, env), eval_tm(E, n.snd, env)});
        else if constexpr (std::is_same_v<T, TmExpr::Fst>)
          return do_fst(E, eval_tm(E, n.p, env));
        else if constexpr (std::is_same_v<T, TmExpr::Snd>)
          return do_snd(E, eval_tm(E, n.p, env));
        else if constexpr (std::is_same_v<T, TmExpr::True>)
          return mkv(Value::VTrue{});
        else if constexpr (std::is_same_v<T, TmExpr::False>)
          return mkv(Value::VFalse{});
        else if constexpr (std::is_same_v<T, TmExpr::BoolElim>)
          return do_boolelim(E, TyClosT{n.motive, env, nullptr}, eval_tm(E, n.tt, env),
                             eval_tm(E, n.ff, env), eval_tm(E, n.scrut, env));
        else if constexpr (std::is_same_v<T, TmExpr::Code>)
          return mkv(Value::VCode{eval_ty(E, n.ty, env)});
        else if constexpr (std::is_same_v<T, TmExpr::Const>) {
          const Decl* d = E.sig->find(n.name);
          if (!d) fail(Err::UnknownName, "term/var", "unknown constant " + n.name);
          if (d->body) return eval_tm(E, d->body, Env{});
          return mkv(Value::VNeut{Neutral{HConst{n.name}, {}}});
        } else
          return eval_tm(E, apply_subst(*E.th, n.s, n.a), env);
      },
      e->v);
}

VPtr eval_ty(const Ev& E, const TyPtr& e, const Env& env) {
  return std::visit(
      [&](auto&& n) -> VPtr {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, TyExpr::Pi>)
          return mkv(Value::VPi{n.mu, eval_ty(cross(E, n.mu), n.dom, env),
                                TyClosT{n.cod, env, nullptr}});
        else if constexpr (std::is_same_v<T, TyExpr::Sigma>)
          return mkv(Value::VSigma{eval_ty(E, n.fst, env), TyClosT{n.snd, env, nullptr}});
        else if constexpr (std::is_same_v<T, TyExpr::Path>)
          return mkv(Value::VPath{TyClosI{n.line, env, nullptr}, eval_tm(E, n.a0, env),
                                  eval_tm(E, n.a1, env)});
        else if constexpr (std::is_same_v<T, TyExpr::Modal>)
          return mkv(Value::VModal{n.mu, eval_ty(cross(E, n.mu), n.inner, env)});
        else if constexpr (std::is_same_v<T, TyExpr::Sys>) {
          std::vector<std::pair<FaceDnf, TyThunk>> bs;
          for (auto& [f, t] : n.branches) {
            FaceDnf fd = eval_face(E, f, env);
            if (face_entails(*E.th, E.faces, fd)) return eval_ty(E, t, env);
            if (!fd.is_false()) bs.emplace_back(std::move(fd), TyThunk{t, env});
          }
          return mkv(Value::VSysTy{std::move(bs)});
        } else if constexpr (std::is_same_v<T, TyExpr::Bool>)
          return mkv(Value::VBool{});
        else if constexpr (std::is_same_v<T, TyExpr::Univ>)
          return mkv(Value::VUniv{n.level});
        else if constexpr (std::is_same_v<T, TyExpr::El>) {
          VPtr c = whnf(E, eval_tm(E, n.code, env));
          if (auto* k = std::get_if<Value::VCode>(&c->v)) return k->ty;
          if (std::holds_alternative<Value::VNeut>(c->v)) return c;
          fail(Err::Internal, "type/el", "code does not evaluate to a universe element");
        } else
          return eval_ty(E, apply_subst_ty(*E.th, n.s, n.a), env);
      },
      e->v);
}

// --- readback ------------------------------------------------------------------

IPtr quote_int(const Ev& E, const IPtr& r) {
  return std::visit(
      [&](auto&& n) -> IPtr {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, IExpr::Zero> || std::is_same_v<T, IExpr::One>)
          return r;
        else if constexpr (std::is_same_v<T, IExpr::Var>)
          return mk_ivar(E.ilvl - 1 - n.ix, n.ann);
        else if constexpr (std::is_same_v<T, IExpr::Neg>)
          return mk_ineg(quote_int(E, n.r));
        else if constexpr (std::is_same_v<T, IExpr::Meet>)
          return mk_imeet(quote_int(E, n.a), quote_int(E, n.b));
        else if constexpr (std::is_same_v<T, IExpr::Join>)
          return mk_ijoin(quote_int(E, n.a), quote_int(E, n.b));
        else
          fail(Err::Internal, "int/sb", "explicit substitution in an interval value");
      },
      r->v);
}

FPtr quote_dnf(const Ev& E, const FaceDnf& f) {
  if (f.is_false()) return mk_fbot();
  if (f.is_true()) return mk_ftop();
  FPtr out;
  for (auto& c : f.clauses) {
    FPtr cl;
    for (auto& a : c.atoms) {
      IPtr v = mk_ivar(E.ilvl - 1 - a.var, a.ann);
      FPtr eq = a.one ? mk_feq1(v) : mk_feq0(v);
      cl = cl ? mk_fmeet(cl, eq) : eq;
    }
    if (!cl) cl = mk_ftop();
    out = out ? mk_fjoin(out, cl) : cl;
  }
  return out;
}

static TmPtr quote_neutral(const Ev& E, const Neutral& n) {
  Ev eh = E;
  std::vector<Ev> amb = spine_ambients(E, n.spine, eh);
  TmPtr t = std::visit(
      [&](auto&& h) -> TmPtr {
        using T = std::decay_t<decltype(h)>;
        if constexpr (std::is_same_v<T, HVar>) {
          if (h.lvl >= eh.tlvl)
            fail(Err::Internal, "term/sb", "variable level escapes the quoting depth");
          return tm_var(eh.tlvl - 1 - h.lvl);
        }
        else if constexpr (std::is_same_v<T, HConst>)
          return tm_const(h.name);
        else if constexpr (std::is_same_v<T, HSplit>) {
          std::vector<std::pair<FPtr, TmPtr>> bs;
          for (auto& [phi, th] : h.branches) {
            Ev er = refine(eh, phi);
            bs.emplace_back(quote_dnf(eh, phi), quote_tm(er, force_tm(er, th)));
          }
          return tm_sys(std::move(bs));
        } else {
          Ev ei = bind_iv(eh);
          TyPtr line = quote_ty(ei, tyclos_iapp(ei, h.line, fresh_ivar(eh)));
          TmPtr tube = quote_tm(ei, clos_iapp(ei, h.tube, fresh_ivar(eh)));
          return tm_comp(line, quote_dnf(eh, h.phi), tube, quote_tm(eh, h.cap));
        }
      },
      n.head);
  for (size_t k = 0; k < n.spine.size(); ++k) {
    const Ev& A = amb[k];
    t = std::visit(
        [&](auto&& it) -> TmPtr {
          using T = std::decay_t<decltype(it)>;
          if constexpr (std::is_same_v<T, SApp>)
            return tm_app(t, quote_tm(A, it.arg));
          else if constexpr (std::is_same_v<T, SPathApp>)
            return tm_pathapp_ann(t, quote_int(A, it.r),
                                  it.e0 ? quote_tm(A, it.e0) : nullptr,
                                  it.e1 ? quote_tm(A, it.e1) : nullptr);
          else if constexpr (std::is_same_v<T, SFst>)
            return tm_fst(t);
          else if constexpr (std::is_same_v<T, SSnd>)
            return tm_snd(t);
          else if constexpr (std::is_same_v<T, SLetMod>) {
            Ev eb = bind_tm(A);
            TyPtr motive = quote_ty(eb, tyclos_app(eb, it.motive, fresh_tvar(A)));
            TmPtr branch = quote_tm(eb, clos_app(eb, it.branch, fresh_tvar(A)));
            return tm_letmod(it.nu, it.mu, motive, t, branch);
          } else {
            Ev eb = bind_tm(A);
            TyPtr motive = quote_ty(eb, tyclos_app(eb, it.motive, fresh_tvar(A)));
            return tm_boolelim(motive, quote_tm(A, it.tt), quote_tm(A, it.ff), t);
          }
        },
        n.spine[k]);
  }
  return t;
}

TmPtr quote_tm(const Ev& E, const VPtr& v) {
  return std::visit(
      [&](auto&& n) -> TmPtr {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, Value::VLam>)
          return tm_lam(quote_tm(bind_tm(E), clos_app(bind_tm(E), n.body, fresh_tvar(E))));
        else if constexpr (std::is_same_v<T, Value::VPathAbs>)
          return tm_pathabs(quote_tm(bind_iv(E), clos_iapp(bind_iv(E), n.body, fresh_ivar(E))));
        else if constexpr (std::is_same_v<T, Value::VBox>)
          return tm_box(n.mu, quote_tm(cross(E, n.mu), n.body));
        else if constexpr (std::is_same_v<T, Value::VPair>)
          return tm_pair(quote_tm(E, n.fst), quote_tm(E, n.snd));
        else if constexpr (std::is_same_v<T, Value::VTrue>)
          return tm_true();
        else if constexpr (std::is_same_v<T, Value::VFalse>)
          return tm_false();
        else if constexpr (std::is_same_v<T, Value::VCode>)
          return tm_code(quote_ty(E, n.ty));
        else if constexpr (std::is_same_v<T, Value::VNeut>)
          return quote_neutral(E, n.n);
        else
          fail(Err::Internal, "term/sb", "type value quoted in term position");
      },
      v->v);
}

TyPtr quote_ty(const Ev& E, const VPtr& v) {
  return std::visit(
      [&](auto&& n) -> TyPtr {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, Value::VPi>)
          return ty_pi(n.mu, quote_ty(cross(E, n.mu), n.dom),
                       quote_ty(bind_tm(E), tyclos_app(bind_tm(E), n.cod, fresh_tvar(E))));
        else if constexpr (std::is_same_v<T, Value::VSigma>)
          return ty_sigma(quote_ty(E, n.fst),
                          quote_ty(bind_tm(E), tyclos_app(bind_tm(E), n.snd, fresh_tvar(E))));
        else if constexpr (std::is_same_v<T, Value::VPath>)
          return ty_path(quote_ty(bind_iv(E), tyclos_iapp(bind_iv(E), n.line, fresh_ivar(E))),
                         quote_tm(E, n.a0), quote_tm(E, n.a1));
        else if constexpr (std::is_same_v<T, Value::VModal>)
          return ty_modal(n.mu, quote_ty(cross(E, n.mu), n.inner));
        else if constexpr (std::is_same_v<T, Value::VSysTy>) {
          std::vector<std::pair<FPtr, TyPtr>> bs;
          for (auto& [phi, th] : n.branches) {
            Ev er = refine(E, phi);
            bs.emplace_back(quote_dnf(E, phi), quote_ty(er, force_ty(er, th)));
          }
          return ty_sys(std::move(bs));
        } else if constexpr (std::is_same_v<T, Value::VBool>)
          return ty_bool();
        else if constexpr (std::is_same_v<T, Value::VUniv>)
          return ty_univ(n.level);
        else if constexpr (std::is_same_v<T, Value::VNeut>)
          return ty_el(quote_neutral(E, n.n));
        else
          fail(Err::Internal, "type/sb", "term value quoted in type position");
      },
      v->v);
}

// --- definitional equality -------------------------------------------------------

namespace {

// A neutral whose head is an undecided system and whose spine crosses no
// lock can be compared by splitting the ambient context on its faces.
const HSplit* head_split_unlocked(const VPtr& v) {
  auto* n = std::get_if<Value::VNeut>(&v->v);
  if (!n) return nullptr;
  auto* hs = std::get_if<HSplit>(&n->n.head);
  if (!hs) return nullptr;
  for (auto& it : n->n.spine)
    if (std::holds_alternative<SLetMod>(it)) return nullptr;
  return hs;
}

bool split_cases(const Ev& E, const std::vector<FaceDnf>& faces,
                 const std::function<bool(const Ev&)>& k) {
  FaceDnf cover = dnf_bot();
  for (auto& f : faces) cover = dnf_or(cover, f);
  if (!face_entails(*E.th, E.faces, cover)) return false;
  for (auto& f : faces) {
    Ev e2 = refine(E, f);
    if (e2.faces.is_false()) continue;
    if (E.splits) {
      if (*E.splits <= 0)
        fail(Err::ClauseBudget, "term-eq/sys-top", "face splitting budget exhausted");
      --*E.splits;
    }
    if (!k(e2)) return false;
  }
  return true;
}

std::vector<FaceDnf> branch_faces_ty(const Value::VSysTy& s) {
  std::vector<FaceDnf> fs;
  for (auto& [f, t] : s.branches) fs.push_back(f);
  return fs;
}
std::vector<FaceDnf> branch_faces_split(const HSplit& s) {
  std::vector<FaceDnf> fs;
  for (auto& [f, t] : s.branches) fs.push_back(f);
  return fs;
}

// Expands a neutral headed by a constant with an unfolding equation; returns
// null when the value is not unfoldable. Consumes shared fuel.
VPtr try_unfold(const Ev& E, const VPtr& v) {
  auto* n = std::get_if<Value::VNeut>(&v->v);
  if (!n) return nullptr;
  auto* hc = std::get_if<HConst>(&n->n.head);
  if (!hc) return nullptr;
  const Decl* d = E.sig->find(hc->name);
  if (!d || !d->unfold || !E.fuel) return nullptr;
  if (*E.fuel <= 0)
    fail(Err::UnfoldFuel, "conv/unfold", "axiom unfolding budget exhausted");
  --*E.fuel;
  Ev eh = E;
  spine_ambients(E, n->n.spine, eh);
  return whnf(E, do_spine(E, eval_tm(eh, d->unfold, Env{}), n->n.spine));
}

bool eq_tyclos_t(const Ev& E, const TyClosT& a, const TyClosT& b) {
  VPtr x = fresh_tvar(E);
  return eq_ty_i(bind_tm(E), tyclos_app(bind_tm(E), a, x), tyclos_app(bind_tm(E), b, x));
}
bool eq_tyclos_i(const Ev& E, const TyClosI& a, const TyClosI& b) {
  IPtr i = fresh_ivar(E);
  return eq_ty_i(bind_iv(E), tyclos_iapp(bind_iv(E), a, i), tyclos_iapp(bind_iv(E), b, i));
}
bool eq_tmclos_t(const Ev& E, const TmClosT& a, const TmClosT& b) {
  VPtr x = fresh_tvar(E);
  return eq_val(bind_tm(E), clos_app(bind_tm(E), a, x), clos_app(bind_tm(E), b, x));
}

bool eq_neutral(const Ev& E, const Neutral& a, const Neutral& b) {
  if (a.spine.size() != b.spine.size()) return false;
  Ev eh = E;
  std::vector<Ev> amb = spine_ambients(E, a.spine, eh);
  // heads
  bool heads = std::visit(
      [&](auto&& ha) -> bool {
        using T = std::decay_t<decltype(ha)>;
        auto* hb = std::get_if<T>(&b.head);
        if (!hb) return false;
        if constexpr (std::is_same_v<T, HVar>)
          return ha.lvl == hb->lvl;
        else if constexpr (std::is_same_v<T, HConst>)
          return ha.name == hb->name;
        else if constexpr (std::is_same_v<T, HSplit>) {
          if (ha.branches.size() != hb->branches.size()) return false;
          for (size_t k = 0; k < ha.branches.size(); ++k) {
            if (!face_equal_under(*eh.th, eh.faces, ha.branches[k].first,
                                  hb->branches[k].first))
              return false;
            Ev er = refine(eh, ha.branches[k].first);
            if (er.faces.is_false()) continue;
            if (!eq_val(er, force_tm(er, ha.branches[k].second),
                        force_tm(er, hb->branches[k].second)))
              return false;
          }
          return true;
        } else {
          if (!eq_tyclos_i(eh, ha.line, hb->line)) return false;
          if (!face_equal_under(*eh.th, eh.faces, ha.phi, hb->phi)) return false;
          Ev ei = refine(bind_iv(eh), ha.phi);
          IPtr i = fresh_ivar(eh);
          if (!ei.faces.is_false() &&
              !eq_val(ei, clos_iapp(ei, ha.tube, i), clos_iapp(ei, hb->tube, i)))
            return false;
          return eq_val(eh, ha.cap, hb->cap);
        }
      },
      a.head);
  if (!heads) return false;
  for (size_t k = 0; k < a.spine.size(); ++k) {
    const Ev& A = amb[k];
    bool ok = std::visit(
        [&](auto&& ia) -> bool {
          using T = std::decay_t<decltype(ia)>;
          auto* ib = std::get_if<T>(&b.spine[k]);
          if (!ib) return false;
          if constexpr (std::is_same_v<T, SApp>)
            return eq_val(A, ia.arg, ib->arg);
          else if constexpr (std::is_same_v<T, SPathApp>)
            return int_equal(*A.th, A.faces, ia.r, ib->r);
          else if constexpr (std::is_same_v<T, SFst> || std::is_same_v<T, SSnd>)
            return true;
          else if constexpr (std::is_same_v<T, SLetMod>)
            return A.th->mod_equal(ia.nu, ib->nu) && A.th->mod_equal(ia.mu, ib->mu) &&
                   eq_tyclos_t(A, ia.motive, ib->motive) && eq_tmclos_t(A, ia.branch, ib->branch);
          else
            return eq_tyclos_t(A, ia.motive, ib->motive) && eq_val(A, ia.tt, ib->tt) &&
                   eq_val(A, ia.ff, ib->ff);
        },
        a.spine[k]);
    if (!ok) return false;
  }
  return true;
}

bool is_type_form(const VPtr& v) {
  return std::holds_alternative<Value::VPi>(v->v) || std::holds_alternative<Value::VSigma>(v->v) ||
         std::holds_alternative<Value::VPath>(v->v) ||
         std::holds_alternative<Value::VModal>(v->v) ||
         std::holds_alternative<Value::VSysTy>(v->v) ||
         std::holds_alternative<Value::VBool>(v->v) || std::holds_alternative<Value::VUniv>(v->v);
}

bool eq_val(const Ev& E, const VPtr& a, const VPtr& b) {
  if (E.faces.is_false()) return true;
  VPtr x = whnf(E, a), y = whnf(E, b);
  if (auto* hs = head_split_unlocked(x))
    return split_cases(E, branch_faces_split(*hs), [&](const Ev& e2) { return eq_val(e2, x, y); });
  if (auto* hs = head_split_unlocked(y))
    return split_cases(E, branch_faces_split(*hs), [&](const Ev& e2) { return eq_val(e2, x, y); });
  // eta
  if (std::holds_alternative<Value::VLam>(x->v) || std::holds_alternative<Value::VLam>(y->v)) {
    VPtr f = fresh_tvar(E);
    return eq_val(bind_tm(E), do_app(bind_tm(E), x, f), do_app(bind_tm(E), y, f));
  }
  if (std::holds_alternative<Value::VPathAbs>(x->v) ||
      std::holds_alternative<Value::VPathAbs>(y->v)) {
    IPtr i = fresh_ivar(E);
    return eq_val(bind_iv(E), do_papp(bind_iv(E), x, i, nullptr, nullptr),
                  do_papp(bind_iv(E), y, i, nullptr, nullptr));
  }
  if (std::holds_alternative<Value::VPair>(x->v) || std::holds_alternative<Value::VPair>(y->v))
    return eq_val(E, do_fst(E, x), do_fst(E, y)) && eq_val(E, do_snd(E, x), do_snd(E, y));
  if (is_type_form(x) || is_type_form(y) || std::holds_alternative<Value::VCode>(x->v) ||
      std::holds_alternative<Value::VCode>(y->v)) {
    VPtr tx = x, ty_ = y;
    if (auto* c = std::get_if<Value::VCode>(&x->v)) tx = c->ty;
    if (auto* c = std::get_if<Value::VCode>(&y->v)) ty_ = c->ty;
    return eq_ty_i(E, tx, ty_);
  }
  auto* nx = std::get_if<Value::VNeut>(&x->v);
  auto* ny = std::get_if<Value::VNeut>(&y->v);
  if (nx && ny && eq_neutral(E, nx->n, ny->n)) return true;
  if (auto* bx = std::get_if<Value::VBox>(&x->v)) {
    if (auto* by = std::get_if<Value::VBox>(&y->v)) {
      if (!E.th->mod_equal(bx->mu, by->mu)) return false;
      Ev ei = cross(E, bx->mu);
      if (E.strict_mod_eq) return syn_equal(quote_tm(ei, bx->body), quote_tm(ei, by->body));
      return eq_val(ei, bx->body, by->body);
    }
  }
  if (std::holds_alternative<Value::VTrue>(x->v) && std::holds_alternative<Value::VTrue>(y->v))
    return true;
  if (std::holds_alternative<Value::VFalse>(x->v) && std::holds_alternative<Value::VFalse>(y->v))
    return true;
  if (VPtr xu = try_unfold(E, x)) return eq_val(E, xu, y);
  if (VPtr yu = try_unfold(E, y)) return eq_val(E, x, yu);
  return false;
}

bool eq_ty_i(const Ev& E, const VPtr& a, const VPtr& b) {
  if (E.faces.is_false()) return true;
  VPtr x = whnf(E, a), y = whnf(E, b);
  if (auto* s = std::get_if<Value::VSysTy>(&x->v))
    return split_cases(E, branch_faces_ty(*s), [&](const Ev& e2) { return eq_ty_i(e2, x, y); });
  if (auto* s = std::get_if<Value::VSysTy>(&y->v))
    return split_cases(E, branch_faces_ty(*s), [&](const Ev& e2) { return eq_ty_i(e2, x, y); });
  if (auto* hs = head_split_unlocked(x))
    return split_cases(E, branch_faces_split(*hs),
                       [&](const Ev& e2) { return eq_ty_i(e2, x, y); });
  if (auto* hs = head_split_unlocked(y))
    return split_cases(E, branch_faces_split(*hs),
                       [&](const Ev& e2) { return eq_ty_i(e2, x, y); });
  if (auto* px = std::get_if<Value::VPi>(&x->v)) {
    auto* py = std::get_if<Value::VPi>(&y->v);
    if (!py) return false;
    if (!E.th->mod_equal(px->mu, py->mu)) return false;
    return eq_ty_i(cross(E, px->mu), px->dom, py->dom) && eq_tyclos_t(E, px->cod, py->cod);
  }
  if (auto* sx = std::get_if<Value::VSigma>(&x->v)) {
    auto* sy = std::get_if<Value::VSigma>(&y->v);
    if (!sy) return false;
    return eq_ty_i(E, sx->fst, sy->fst) && eq_tyclos_t(E, sx->snd, sy->snd);
  }
  if (auto* px = std::get_if<Value::VPath>(&x->v)) {
    auto* py = std::get_if<Value::VPath>(&y->v);
    if (!py) return false;
    if (!eq_tyclos_i(E, px->line, py->line)) return false;
    return eq_tm_i(E, tyclos_iapp(E, px->line, mk_i0()), px->a0, py->a0) &&
           eq_tm_i(E, tyclos_iapp(E, px->line, mk_i1()), px->a1, py->a1);
  }
  if (auto* mx = std::get_if<Value::VModal>(&x->v)) {
    auto* my = std::get_if<Value::VModal>(&y->v);
    if (!my) return false;
    if (!E.th->mod_equal(mx->mu, my->mu)) return false;
    return eq_ty_i(cross(E, mx->mu), mx->inner, my->inner);
  }
  if (std::holds_alternative<Value::VBool>(x->v))
    return std::holds_alternative<Value::VBool>(y->v);
  if (auto* ux = std::get_if<Value::VUniv>(&x->v)) {
    auto* uy = std::get_if<Value::VUniv>(&y->v);
    return uy && ux->level == uy->level;
  }
  auto* nx = std::get_if<Value::VNeut>(&x->v);
  auto* ny = std::get_if<Value::VNeut>(&y->v);
  if (nx && ny && eq_neutral(E, nx->n, ny->n)) return true;
  if (VPtr xu = try_unfold(E, x)) return eq_ty_i(E, xu, y);
  if (VPtr yu = try_unfold(E, y)) return eq_ty_i(E, x, yu);
  return false;
}

bool eq_tm_i(const Ev& E, const VPtr& ty, const VPtr& a, const VPtr& b) {
  if (E.faces.is_false()) return true;
  VPtr T = whnf(E, ty);
  if (auto* s = std::get_if<Value::VSysTy>(&T->v))
    return split_cases(E, branch_faces_ty(*s),
                       [&](const Ev& e2) { return eq_tm_i(e2, T, a, b); });
  if (auto* p = std::get_if<Value::VPi>(&T->v)) {
    VPtr x = fresh_tvar(E);
    return eq_tm_i(bind_tm(E), tyclos_app(bind_tm(E), p->cod, x), do_app(bind_tm(E), a, x),
                   do_app(bind_tm(E), b, x));
  }
  if (auto* s = std::get_if<Value::VSigma>(&T->v)) {
    VPtr fa = do_fst(E, a);
    if (!eq_tm_i(E, s->fst, fa, do_fst(E, b))) return false;
    return eq_tm_i(E, tyclos_app(E, s->snd, fa), do_snd(E, a), do_snd(E, b));
  }
  if (auto* p = std::get_if<Value::VPath>(&T->v)) {
    IPtr i = fresh_ivar(E);
    return eq_tm_i(bind_iv(E), tyclos_iapp(bind_iv(E), p->line, i),
                   do_papp(bind_iv(E), a, i, p->a0, p->a1),
                   do_papp(bind_iv(E), b, i, p->a0, p->a1));
  }
  if (auto* m = std::get_if<Value::VModal>(&T->v)) {
    VPtr x = whnf(E, a), y = whnf(E, b);
    auto* bx = std::get_if<Value::VBox>(&x->v);
    auto* by = std::get_if<Value::VBox>(&y->v);
    if (bx && by) {
      Ev ei = cross(E, m->mu);
      if (E.strict_mod_eq) return syn_equal(quote_tm(ei, bx->body), quote_tm(ei, by->body));
      return eq_tm_i(ei, m->inner, bx->body, by->body);
    }
    return eq_val(E, x, y);
  }
  return eq_val(E, whnf(E, a), whnf(E, b));
}

}  // namespace

bool equal_tm(const Ev& E0, const VPtr& ty, const VPtr& a, const VPtr& b) {
  Ev E = E0;
  int fuel = 32, splits = 64;
  if (!E.fuel) E.fuel = &fuel;
  if (!E.splits) E.splits = &splits;
  return eq_tm_i(E, ty, a, b);
}

bool equal_ty(const Ev& E0, const VPtr& a, const VPtr& b) {
  Ev E = E0;
  int fuel = 32, splits = 64;
  if (!E.fuel) E.fuel = &fuel;
  if (!E.splits) E.splits = &splits;
  return eq_ty_i(E, a, b);
}

}  // namespace cmtt
