// Part of the cmtt proof checker, under the Apache License v2.0.
// SPDX-License-Identifier: Apache-2.0
//
// Bidirectional elaboration from surface to core. Subterms that need a type
// to elaborate get it from the kernel as they are built; the finished
// declaration is still re-checked from scratch by check_decl, so nothing
// here is trusted.

#include "cmtt/elaborate.hpp"

namespace cmtt {
namespace {

// Kernel context plus the source names of its binders; locks and
// restrictions keep an empty slot so the vectors stay parallel.
struct EC {
  Ctx G;
  std::vector<std::string> names;

  EC lock(const Modality& mu) const {
    EC e{G.push_lock(mu), names};
    e.names.emplace_back();
    return e;
  }
  EC tmvar(const std::string& n, const Modality& ann, VPtr ty) const {
    EC e{G.push_tmvar(ann, std::move(ty)), names};
    e.names.push_back(n);
    return e;
  }
  EC intvar(const std::string& n) const {
    EC e{G.push_intvar(), names};
    e.names.push_back(n);
    return e;
  }
  EC restr(const FaceDnf& phi) const {
    EC e{G.push_restrict(phi), names};
    e.names.emplace_back();
    return e;
  }
};

[[noreturn]] void err_at(Err c, const std::string& rule, const std::string& msg, Span sp) {
  CmttError e(c, rule, msg);
  e.span = std::move(sp);
  throw e;
}

// Index of the nearest term (or interval) binder named `id`, counting only
// binders of that kind, as the core's de Bruijn indices do.
std::optional<int> find_var(const EC& E, const std::string& id, bool interval) {
  int ix = 0;
  for (size_t k = E.names.size(); k-- > 0;) {
    auto kind = E.G.entries[k].kind;
    bool match_kind = interval ? kind == CtxEntry::Kind::IntVar : kind == CtxEntry::Kind::TmVar;
    if (!match_kind) continue;
    if (E.names[k] == id) return ix;
    ix++;
  }
  return std::nullopt;
}

bool is_var(const EC& E, const std::string& id, bool interval) {
  return find_var(E, id, interval).has_value();
}

Modality elab_word(const EC& E, const SWord& w, Span sp) {
  try {
    return E.G.th().from_names_compose_order(w, E.G.ev.mode);
  } catch (CmttError& e) {
    if (e.span.line == 0) e.span = sp;
    throw;
  }
}

// Wraps a computation so kernel errors raised while elaborating `sp` carry
// that position.
template <class F>
auto spanned(Span sp, F f) -> decltype(f()) {
  try {
    return f();
  } catch (CmttError& e) {
    if (e.span.line == 0) e.span = std::move(sp);
    throw;
  }
}

TmPtr chk(const EC& E, const SPtr& s, const VPtr& ty);
std::pair<TmPtr, VPtr> inf(const EC& E, const SPtr& s);
TyPtr chk_ty(const EC& E, const SPtr& s);
IPtr chk_int(const EC& E, const SPtr& s);
FPtr chk_face(const EC& E, const SPtr& s);

bool is_type_former(const SPtr& s) {
  return std::holds_alternative<SExpr::Arrow>(s->v) || std::holds_alternative<SExpr::SigmaT>(s->v) ||
         std::holds_alternative<SExpr::PathT>(s->v) || std::holds_alternative<SExpr::ModalT>(s->v) ||
         std::holds_alternative<SExpr::BoolT>(s->v) || std::holds_alternative<SExpr::UnivE>(s->v) ||
         std::holds_alternative<SExpr::ElE>(s->v);
}

IPtr chk_int(const EC& E, const SPtr& s) {
  Span sp = s->span;
  if (auto* n = std::get_if<SExpr::Num>(&s->v)) return n->v == 0 ? mk_i0() : mk_i1();
  if (auto* nm = std::get_if<SExpr::Name>(&s->v)) {
    auto ix = find_var(E, nm->id, true);
    if (!ix) {
      if (is_var(E, nm->id, false))
        err_at(Err::ScopeError, "elab/interval", "'" + nm->id + "' is a term variable, not an interval variable", sp);
      err_at(Err::UnknownName, "elab/interval", "unknown interval variable '" + nm->id + "'", sp);
    }
    IVarInfo info = lookup_int_var(E.G, *ix);
    Modality ann{E.G.ev.mode, info.binder_mode, info.word};
    if (nm->has_ann) {
      Modality written = elab_word(E, nm->ann, sp);
      if (!E.G.th().mod_equal(written, ann))
        err_at(Err::LockMismatch, "int/var",
               "occurrence of '" + nm->id + "' crosses " + E.G.th().show(ann) + ", not " +
                   E.G.th().show(written),
               sp);
    }
    return mk_ivar(*ix, ann);
  }
  if (auto* ng = std::get_if<SExpr::Neg>(&s->v)) return mk_ineg(chk_int(E, ng->r));
  if (auto* mt = std::get_if<SExpr::Meet>(&s->v))
    return mk_imeet(chk_int(E, mt->a), chk_int(E, mt->b));
  if (auto* jn = std::get_if<SExpr::Join>(&s->v))
    return mk_ijoin(chk_int(E, jn->a), chk_int(E, jn->b));
  err_at(Err::TypeMismatch, "elab/interval", "expected an interval expression", sp);
}

FPtr chk_face(const EC& E, const SPtr& s) {
  Span sp = s->span;
  if (auto* fe = std::get_if<SExpr::FaceEq>(&s->v)) {
    IPtr r = chk_int(E, fe->r);
    return fe->end == 0 ? mk_feq0(std::move(r)) : mk_feq1(std::move(r));
  }
  if (auto* fl = std::get_if<SExpr::FaceLit>(&s->v)) return fl->top ? mk_ftop() : mk_fbot();
  if (auto* mt = std::get_if<SExpr::Meet>(&s->v))
    return mk_fmeet(chk_face(E, mt->a), chk_face(E, mt->b));
  if (auto* jn = std::get_if<SExpr::Join>(&s->v))
    return mk_fjoin(chk_face(E, jn->a), chk_face(E, jn->b));
  err_at(Err::TypeMismatch, "elab/face", "expected a face formula", sp);
}

TyPtr chk_ty(const EC& E, const SPtr& s) {
  Span sp = s->span;
  return spanned(sp, [&]() -> TyPtr {
    if (auto* ar = std::get_if<SExpr::Arrow>(&s->v)) {
      Modality mu = elab_word(E, ar->mu, sp);
      EC el = E.lock(mu);
      TyPtr dom = chk_ty(el, ar->dom);
      TypeResult dv = check_type(el.G, dom);
      EC eb = E.tmvar(ar->x, mu, dv.v);
      TyPtr cod = chk_ty(eb, ar->cod);
      return ty_pi(mu, dom, cod);
    }
    if (auto* sg = std::get_if<SExpr::SigmaT>(&s->v)) {
      TyPtr fst = chk_ty(E, sg->fst);
      TypeResult fv = check_type(E.G, fst);
      EC eb = E.tmvar(sg->x, E.G.th().identity(E.G.ev.mode), fv.v);
      TyPtr snd = chk_ty(eb, sg->snd);
      return ty_sigma(fst, snd);
    }
    if (auto* pt = std::get_if<SExpr::PathT>(&s->v)) {
      TyPtr line;
      if (pt->i.empty()) {
        TyPtr c = chk_ty(E, pt->line);
        check_type(E.G, c);
        line = shift_ty(E.G.th(), c, 0, 1);
      } else {
        EC ei = E.intvar(pt->i);
        line = chk_ty(ei, pt->line);
        check_type(ei.G, line);
      }
      VPtr at0 = eval_ty(E.G.ev, line, E.G.env.push_iv(mk_i0()));
      VPtr at1 = eval_ty(E.G.ev, line, E.G.env.push_iv(mk_i1()));
      TmPtr a0 = chk(E, pt->a0, at0);
      TmPtr a1 = chk(E, pt->a1, at1);
      return ty_path(line, a0, a1);
    }
    if (auto* md = std::get_if<SExpr::ModalT>(&s->v)) {
      Modality mu = elab_word(E, md->mu, sp);
      TyPtr inner = chk_ty(E.lock(mu), md->inner);
      return ty_modal(mu, inner);
    }
    if (auto* sy = std::get_if<SExpr::Sys>(&s->v)) {
      std::vector<std::pair<FPtr, TyPtr>> out;
      for (auto& [phis, rhs] : sy->branches) {
        FPtr phi = chk_face(E, phis);
        FaceDnf d = check_face(E.G, phi);
        out.emplace_back(phi, chk_ty(E.restr(d), rhs));
      }
      return ty_sys(std::move(out));
    }
    if (std::holds_alternative<SExpr::BoolT>(s->v)) return ty_bool();
    if (auto* u = std::get_if<SExpr::UnivE>(&s->v)) return ty_univ(u->level);
    if (auto* el = std::get_if<SExpr::ElE>(&s->v)) {
      auto [code, cty] = inf(E, el->e);
      VPtr w = whnf(E.G.ev, cty);
      if (!std::holds_alternative<Value::VUniv>(w->v))
        err_at(Err::NotAUniverse, "type/el", "El expects a universe element", sp);
      return ty_el(code);
    }
    // Anything term-shaped decodes through the universe.
    auto [code, cty] = inf(E, s);
    VPtr w = whnf(E.G.ev, cty);
    if (!std::holds_alternative<Value::VUniv>(w->v))
      err_at(Err::NotAUniverse, "type/el", "expected a type here", sp);
    return ty_el(code);
  });
}

std::pair<TmPtr, VPtr> inf(const EC& E, const SPtr& s) {
  Span sp = s->span;
  return spanned(sp, [&]() -> std::pair<TmPtr, VPtr> {
    if (auto* nm = std::get_if<SExpr::Name>(&s->v)) {
      if (auto ix = find_var(E, nm->id, false)) {
        TmPtr core = tm_var(*ix);
        return {core, infer_tm(E.G, core)};
      }
      if (is_var(E, nm->id, true))
        err_at(Err::ScopeError, "elab/term",
               "'" + nm->id + "' is an interval variable, not a term", sp);
      if (E.G.ev.sig->find(nm->id)) {
        TmPtr core = tm_const(nm->id);
        return {core, infer_tm(E.G, core)};
      }
      err_at(Err::UnknownName, "term/var", "unknown name '" + nm->id + "'", sp);
    }
    if (auto* ap = std::get_if<SExpr::App>(&s->v)) {
      auto [fe, fty] = inf(E, ap->f);
      VPtr w = whnf(E.G.ev, fty);
      auto* pi = std::get_if<Value::VPi>(&w->v);
      if (!pi)
        err_at(Err::NotAFunction, "term/pi-app", "application head is not a function", sp);
      TmPtr ae = chk(E.lock(pi->mu), ap->a, pi->dom);
      TmPtr core = tm_app(fe, ae);
      return {core, infer_tm(E.G, core)};
    }
    if (auto* pa = std::get_if<SExpr::PathApp>(&s->v)) {
      auto [pe, pty] = inf(E, pa->p);
      VPtr w = whnf(E.G.ev, pty);
      auto* path = std::get_if<Value::VPath>(&w->v);
      if (!path) err_at(Err::NotAPath, "term/path-app", "@ applies paths", sp);
      IPtr r = chk_int(E, pa->r);
      TmPtr core = tm_pathapp_ann(pe, r, quote_tm(E.G.ev, path->a0), quote_tm(E.G.ev, path->a1));
      return {core, infer_tm(E.G, core)};
    }
    if (auto* pr = std::get_if<SExpr::Proj>(&s->v)) {
      auto [pe, pty] = inf(E, pr->p);
      VPtr w = whnf(E.G.ev, pty);
      if (!std::holds_alternative<Value::VSigma>(w->v))
        err_at(Err::NotAPair, "term/sigma-fst", "projection from a non-pair", sp);
      TmPtr core = pr->which == 1 ? tm_fst(pe) : tm_snd(pe);
      return {core, infer_tm(E.G, core)};
    }
    if (auto* bx = std::get_if<SExpr::Box>(&s->v)) {
      Modality mu = elab_word(E, bx->mu, sp);
      auto [be, bty] = inf(E.lock(mu), bx->body);
      TmPtr core = tm_box(mu, be);
      return {core, infer_tm(E.G, core)};
    }
    if (auto* cp = std::get_if<SExpr::Comp>(&s->v)) {
      EC ei = E.intvar(cp->i);
      TyPtr line = chk_ty(ei, cp->line);
      TypeResult lv = check_type(ei.G, line);
      FPtr phi;
      TmPtr tube;
      if (cp->tube.empty()) {
        phi = mk_fbot();
        tube = tm_sys({});
      } else {
        // The joined face lives outside the binder; the per-branch faces of a
        // multi-branch tube live inside it, one interval index deeper.
        std::vector<std::pair<FPtr, TmPtr>> branches;
        for (auto& [phis, rhs] : cp->tube) {
          FPtr f_out = chk_face(E, phis);
          FPtr f_in = chk_face(ei, phis);
          FaceDnf d = check_face(E.G, f_out);
          branches.emplace_back(f_in, chk(ei.restr(d), rhs, lv.v));
          phi = phi ? mk_fjoin(phi, f_out) : f_out;
        }
        tube = branches.size() == 1 ? branches[0].second : tm_sys(std::move(branches));
      }
      VPtr at0 = eval_ty(E.G.ev, line, E.G.env.push_iv(mk_i0()));
      TmPtr cap = chk(E, cp->cap, at0);
      TmPtr core = tm_comp(line, phi, tube, cap);
      return {core, infer_tm(E.G, core)};
    }
    if (auto* be = std::get_if<SExpr::BoolElim>(&s->v)) {
      EC eb = E.tmvar(be->x, E.G.th().identity(E.G.ev.mode), mkv(Value::VBool{}));
      TyPtr motive = chk_ty(eb, be->motive);
      check_type(eb.G, motive);
      VPtr mt = eval_ty(E.G.ev, motive, E.G.env.push_tm(mkv(Value::VTrue{})));
      VPtr mf = eval_ty(E.G.ev, motive, E.G.env.push_tm(mkv(Value::VFalse{})));
      TmPtr tt = chk(E, be->tt, mt);
      TmPtr ff = chk(E, be->ff, mf);
      TmPtr scrut = chk(E, be->scrut, mkv(Value::VBool{}));
      TmPtr core = tm_boolelim(motive, tt, ff, scrut);
      return {core, infer_tm(E.G, core)};
    }
    if (std::holds_alternative<SExpr::TrueE>(s->v)) return {tm_true(), mkv(Value::VBool{})};
    if (std::holds_alternative<SExpr::FalseE>(s->v)) return {tm_false(), mkv(Value::VBool{})};
    if (is_type_former(s) || std::holds_alternative<SExpr::Sys>(s->v)) {
      TyPtr t = chk_ty(E, s);
      TypeResult tv = check_type(E.G, t);
      return {tm_code(t), mkv(Value::VUniv{tv.level})};
    }
    if (std::holds_alternative<SExpr::Lam>(s->v))
      err_at(Err::TypeMismatch, "term/pi-lam", "lambda needs an expected function type", sp);
    if (std::holds_alternative<SExpr::PathAbs>(s->v))
      err_at(Err::TypeMismatch, "term/path-abs", "path binder needs an expected path type", sp);
    if (std::holds_alternative<SExpr::LetMod>(s->v))
      err_at(Err::TypeMismatch, "term/mod-let", "let box needs an expected type", sp);
    if (std::holds_alternative<SExpr::PairE>(s->v))
      err_at(Err::TypeMismatch, "term/sigma-pair", "pair needs an expected pair type", sp);
    err_at(Err::TypeMismatch, "elab/term", "expected a term here", sp);
  });
}

TmPtr chk(const EC& E, const SPtr& s, const VPtr& ty) {
  Span sp = s->span;
  return spanned(sp, [&]() -> TmPtr {
    VPtr w = whnf(E.G.ev, ty);
    if (auto* lm = std::get_if<SExpr::Lam>(&s->v)) {
      auto* pi = std::get_if<Value::VPi>(&w->v);
      if (!pi)
        err_at(Err::TypeMismatch, "term/pi-lam", "lambda checked against a non-function type", sp);
      EC eb = E.tmvar(lm->params[0], pi->mu, pi->dom);
      VPtr bty = tyclos_app(bind_tm(E.G.ev), pi->cod, mk_nvar(E.G.ev.tlvl));
      SPtr body = lm->body;
      if (lm->params.size() > 1) {
        auto rest = *lm;
        rest.params.erase(rest.params.begin());
        body = mk_s(rest, s->span);
      }
      return tm_lam(chk(eb, body, bty));
    }
    if (auto* pb = std::get_if<SExpr::PathAbs>(&s->v)) {
      auto* path = std::get_if<Value::VPath>(&w->v);
      if (!path)
        err_at(Err::TypeMismatch, "term/path-abs", "path binder checked against a non-path type",
               sp);
      EC ei = E.intvar(pb->i);
      VPtr bty = tyclos_iapp(bind_iv(E.G.ev), path->line, fresh_ivar(E.G.ev));
      TmPtr body = chk(ei, pb->body, bty);
      TmPtr core = tm_pathabs(body);
      check_tm(E.G, core, ty);  // endpoint conditions
      return core;
    }
    if (auto* pr = std::get_if<SExpr::PairE>(&s->v)) {
      auto* sg = std::get_if<Value::VSigma>(&w->v);
      if (!sg)
        err_at(Err::TypeMismatch, "term/sigma-pair", "pair checked against a non-pair type", sp);
      TmPtr a = chk(E, pr->a, sg->fst);
      VPtr av = eval_tm(E.G.ev, a, E.G.env);
      TmPtr b = chk(E, pr->b, tyclos_app(E.G.ev, sg->snd, av));
      return tm_pair(a, b);
    }
    if (auto* bx = std::get_if<SExpr::Box>(&s->v)) {
      auto* md = std::get_if<Value::VModal>(&w->v);
      if (!md)
        err_at(Err::TypeMismatch, "term/mod-mod", "box checked against a non-modal type", sp);
      Modality mu = bx->mu.empty() ? md->mu : elab_word(E, bx->mu, sp);
      if (!E.G.th().mod_equal(mu, md->mu))
        err_at(Err::ModeMismatch, "term/mod-mod",
               "box modality " + E.G.th().show(mu) + " does not match " + E.G.th().show(md->mu),
               sp);
      TmPtr body = chk(E.lock(md->mu), bx->body, md->inner);
      return tm_box(md->mu, body);
    }
    if (auto* lt = std::get_if<SExpr::LetMod>(&s->v)) {
      Modality mu = elab_word(E, lt->outer, sp);
      auto [se, sty] = inf(E.lock(mu), lt->scrut);
      VPtr sw = whnf(cross(E.G.ev, mu), sty);
      auto* md = std::get_if<Value::VModal>(&sw->v);
      if (!md)
        err_at(Err::NotModal, "term/mod-let", "let box scrutinee is not boxed", sp);
      if (!lt->boxed.empty()) {
        Modality nu = elab_word(E.lock(mu), lt->boxed, sp);
        if (!E.G.th().mod_equal(nu, md->mu))
          err_at(Err::ModeMismatch, "term/mod-let",
                 "scrutinee is boxed by " + E.G.th().show(md->mu) + ", not " + E.G.th().show(nu),
                 sp);
      }
      TyPtr motive = quote_ty(bind_tm(E.G.ev), ty);
      EC eb = E.tmvar(lt->x, E.G.th().compose(mu, md->mu), md->inner);
      TmPtr body = chk(eb, lt->body, ty);
      return tm_letmod(md->mu, mu, motive, se, body);
    }
    if (auto* sy = std::get_if<SExpr::Sys>(&s->v)) {
      std::vector<std::pair<FPtr, TmPtr>> out;
      for (auto& [phis, rhs] : sy->branches) {
        FPtr phi = chk_face(E, phis);
        FaceDnf d = check_face(E.G, phi);
        out.emplace_back(phi, chk(E.restr(d), rhs, ty));
      }
      TmPtr core = tm_sys(std::move(out));
      check_tm(E.G, core, ty);  // cover and overlap conditions
      return core;
    }
    if (is_type_former(s)) {
      TyPtr t = chk_ty(E, s);
      TmPtr core = tm_code(t);
      check_tm(E.G, core, ty);  // level agreement
      return core;
    }
    auto [core, ity] = inf(E, s);
    (void)ity;
    check_tm(E.G, core, ty);
    return core;
  });
}

}  // namespace

Decl elaborate_decl(const ModeTheory& th, const Signature& sig, const SDecl& sd,
                    bool strict_mod_eq) {
  ModeId mode = 0;
  if (!sd.mode.empty()) {
    auto m = th.find_mode(sd.mode);
    if (!m) err_at(Err::Config, "elab/mode", "unknown mode '" + sd.mode + "'", sd.span);
    mode = *m;
  } else if (th.modes.empty()) {
    err_at(Err::Config, "elab/mode", "mode theory declares no modes", sd.span);
  }

  EC root{Ctx::make(th, sig, mode, strict_mod_eq), {}};
  TyPtr tysyn = chk_ty(root, sd.type);
  TypeResult T = check_type(root.G, tysyn);

  Decl d;
  d.name = sd.name;
  d.mode = mode;
  d.type = tysyn;
  if (sd.body) d.body = chk(root, sd.body, T.v);
  if (sd.unfold) {
    // The axiom may appear in its own unfolding equation.
    Signature tmp = sig;
    tmp.add(Decl{sd.name, mode, tysyn, nullptr, nullptr});
    EC root2{Ctx::make(th, tmp, mode, strict_mod_eq), {}};
    d.unfold = chk(root2, sd.unfold, T.v);
  }
  return d;
}

}  // namespace cmtt
