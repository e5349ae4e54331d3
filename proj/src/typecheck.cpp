// Part of the cmtt proof checker, under the Apache License v2.0.
// SPDX-License-Identifier: Apache-2.0
//
// Bidirectional kernel. Types are checked against the telescope discipline:
// locks gate variable access through 2-cells, interval variables must carry
// the exact crossing word of the locks between use and binder, and face
// restrictions refine the ambient context. Explicit substitutions are
// computed away before checking.
#include "cmtt/typecheck.hpp"

#include <algorithm>

#include "cmtt/diagnostics.hpp"

namespace cmtt {

Ctx Ctx::make(const ModeTheory& th, const Signature& sig, ModeId mode, bool strict_mod_eq) {
  Ctx g;
  g.ev.th = &th;
  g.ev.sig = &sig;
  g.ev.mode = mode;
  g.ev.strict_mod_eq = strict_mod_eq;
  return g;
}

Ctx Ctx::push_lock(const Modality& mu) const {
  if (mu.cod != ev.mode)
    fail(Err::ModeMismatch, "cx/lock", "lock does not land in the ambient mode");
  Ctx g = *this;
  g.entries.push_back({CtxEntry::Kind::Lock, mu, nullptr, FaceDnf{}, mu.dom});
  g.ev = cross(ev, mu);
  return g;
}

Ctx Ctx::push_tmvar(const Modality& ann, VPtr type) const {
  Ctx g = *this;
  g.entries.push_back({CtxEntry::Kind::TmVar, ann, std::move(type), FaceDnf{}, ev.mode});
  g.env = env.push_tm(fresh_tvar(ev));
  g.ev = bind_tm(ev);
  return g;
}

Ctx Ctx::push_intvar() const {
  Ctx g = *this;
  g.entries.push_back({CtxEntry::Kind::IntVar, Modality{}, nullptr, FaceDnf{}, ev.mode});
  g.env = env.push_iv(fresh_ivar(ev));
  g.ev = bind_iv(ev);
  return g;
}

Ctx Ctx::push_restrict(const FaceDnf& phi) const {
  Ctx g = *this;
  g.entries.push_back({CtxEntry::Kind::Restrict, Modality{}, nullptr, phi, ev.mode});
  g.ev = refine(ev, phi);
  return g;
}

TmVarInfo lookup_tm_var(const Ctx& G, int ix) {
  Modality acc = G.th().identity(G.ev.mode);
  int want = ix;
  for (auto it = G.entries.rbegin(); it != G.entries.rend(); ++it) {
    if (it->kind == CtxEntry::Kind::Lock)
      acc = G.th().compose(it->mu, acc);
    else if (it->kind == CtxEntry::Kind::TmVar) {
      if (want == 0) return {it->mu, it->type, acc};
      --want;
    }
  }
  fail(Err::ScopeError, "term/var", "term variable index out of scope");
}

IVarInfo lookup_int_var(const Ctx& G, int ix) {
  std::vector<GenId> w;
  int want = ix;
  for (auto it = G.entries.rbegin(); it != G.entries.rend(); ++it) {
    if (it->kind == CtxEntry::Kind::Lock)
      w.insert(w.end(), it->mu.word.begin(), it->mu.word.end());
    else if (it->kind == CtxEntry::Kind::IntVar) {
      if (want == 0) return {std::move(w), it->mode_at};
      --want;
    }
  }
  fail(Err::ScopeError, "int/var", "interval variable index out of scope");
}

namespace {

// The substitution engine reports malformed annotation words as internal
// errors; surfaced through the checker they are the user's problem.
template <class F>
auto applied(F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (CmttError& e) {
    if (e.code == Err::Internal) e.code = Err::MalformedSubstitution;
    throw;
  }
}

std::string show_ty(const Ctx& G, const VPtr& v) { return sexpr_ty(G.th(), quote_ty(G.ev, v)); }

void validate_int(const Ctx& G, const IPtr& r) {
  std::visit(
      [&](auto&& n) {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, IExpr::Var>) {
          IVarInfo vi = lookup_int_var(G, n.ix);
          if (n.ann.word != vi.word || n.ann.cod != vi.binder_mode || n.ann.dom != G.ev.mode)
            fail(Err::LockMismatch, "int/var",
                 "interval variable annotation does not match the locks it crosses");
        } else if constexpr (std::is_same_v<T, IExpr::Neg>)
          validate_int(G, n.r);
        else if constexpr (std::is_same_v<T, IExpr::Meet> || std::is_same_v<T, IExpr::Join>) {
          validate_int(G, n.a);
          validate_int(G, n.b);
        } else if constexpr (std::is_same_v<T, IExpr::Sub>)
          validate_int(G, applied([&] { return apply_subst_int(G.th(), n.s, n.r); }));
      },
      r->v);
}

void validate_face(const Ctx& G, const FPtr& f) {
  std::visit(
      [&](auto&& n) {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, FExpr::Eq0> || std::is_same_v<T, FExpr::Eq1>)
          validate_int(G, n.r);
        else if constexpr (std::is_same_v<T, FExpr::Meet> || std::is_same_v<T, FExpr::Join>) {
          validate_face(G, n.a);
          validate_face(G, n.b);
        } else if constexpr (std::is_same_v<T, FExpr::Sub>)
          validate_face(G, applied([&] { return apply_subst_face(G.th(), n.s, n.f); }));
      },
      f->v);
}

}  // namespace

void check_int(const Ctx& G, const IPtr& r) { validate_int(G, r); }

FaceDnf check_face(const Ctx& G, const FPtr& f) {
  validate_face(G, f);
  return eval_face(G.ev, f, G.env);
}

TypeResult check_type(const Ctx& G, const TyPtr& t) {
  return std::visit(
      [&](auto&& n) -> TypeResult {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, TyExpr::Pi>) {
          if (n.mu.cod != G.ev.mode)
            fail(Err::ModeMismatch, "type/pi", "domain annotation does not land in this mode");
          TypeResult d = check_type(G.push_lock(n.mu), n.dom);
          TypeResult c = check_type(G.push_tmvar(n.mu, d.v), n.cod);
          return {eval_ty(G.ev, t, G.env), std::max(d.level, c.level)};
        } else if constexpr (std::is_same_v<T, TyExpr::Sigma>) {
          TypeResult f = check_type(G, n.fst);
          TypeResult s = check_type(G.push_tmvar(G.th().identity(G.ev.mode), f.v), n.snd);
          return {eval_ty(G.ev, t, G.env), std::max(f.level, s.level)};
        } else if constexpr (std::is_same_v<T, TyExpr::Path>) {
          TypeResult l = check_type(G.push_intvar(), n.line);
          TyClosI lc{n.line, G.env, nullptr};
          check_tm(G, n.a0, tyclos_iapp(G.ev, lc, mk_i0()));
          check_tm(G, n.a1, tyclos_iapp(G.ev, lc, mk_i1()));
          return {eval_ty(G.ev, t, G.env), l.level};
        } else if constexpr (std::is_same_v<T, TyExpr::Modal>) {
          if (n.mu.cod != G.ev.mode)
            fail(Err::ModeMismatch, "type/mod", "modal annotation does not land in this mode");
          TypeResult in = check_type(G.push_lock(n.mu), n.inner);
          return {eval_ty(G.ev, t, G.env), in.level};
        } else if constexpr (std::is_same_v<T, TyExpr::Sys>) {
          int lvl = 0;
          FaceDnf cover = dnf_bot();
          std::vector<FaceDnf> fs;
          for (auto& [f, a] : n.branches) {
            FaceDnf fd = check_face(G, f);
            cover = dnf_or(cover, fd);
            lvl = std::max(lvl, check_type(G.push_restrict(fd), a).level);
            fs.push_back(std::move(fd));
          }
          if (!face_entails(G.th(), G.ev.faces, cover))
            fail(Err::CoverNotTotal, "type/sys", "system faces do not cover the context");
          for (size_t i = 0; i < fs.size(); ++i)
            for (size_t j = i + 1; j < fs.size(); ++j) {
              Ctx gij = G.push_restrict(dnf_and(fs[i], fs[j]));
              if (gij.ev.faces.is_false()) continue;
              VPtr ai = eval_ty(gij.ev, n.branches[i].second, G.env);
              VPtr aj = eval_ty(gij.ev, n.branches[j].second, G.env);
              if (!equal_ty(gij.ev, ai, aj))
                fail(Err::OverlapMismatch, "type/sys",
                     "system branches disagree where their faces overlap");
            }
          return {eval_ty(G.ev, t, G.env), lvl};
        } else if constexpr (std::is_same_v<T, TyExpr::Bool>)
          return {eval_ty(G.ev, t, G.env), 0};
        else if constexpr (std::is_same_v<T, TyExpr::Univ>)
          return {eval_ty(G.ev, t, G.env), n.level + 1};
        else if constexpr (std::is_same_v<T, TyExpr::El>) {
          VPtr ct = whnf(G.ev, infer_tm(G, n.code));
          auto* u = std::get_if<Value::VUniv>(&ct->v);
          if (!u)
            fail(Err::NotAUniverse, "type/el",
                 "decoded term is not a universe element, its type is " + show_ty(G, ct));
          return {eval_ty(G.ev, t, G.env), u->level};
        } else
          return check_type(G, applied([&] { return apply_subst_ty(G.th(), n.s, n.a); }));
      },
      t->v);
}

VPtr infer_tm(const Ctx& G, const TmPtr& e) {
  return std::visit(
      [&](auto&& n) -> VPtr {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, TmExpr::Var>) {
          TmVarInfo vi = lookup_tm_var(G, n.ix);
          if (n.key &&
              (!G.th().mod_equal(n.key->src, vi.ann) || !G.th().mod_equal(n.key->dst, vi.locks)))
            fail(Err::LockMismatch, "term/var",
                 "variable key does not match its binder annotation and lock composite");
          if (!G.th().cell_exists(vi.ann, vi.locks))
            fail(Err::LockMismatch, "term/var",
                 "no 2-cell from the binder annotation " + G.th().show(vi.ann) +
                     " to the lock composite " + G.th().show(vi.locks));
          return vi.type;
        } else if constexpr (std::is_same_v<T, TmExpr::Lam>)
          fail(Err::TypeMismatch, "term/pi-lam", "cannot infer the type of a bare function");
        else if constexpr (std::is_same_v<T, TmExpr::App>) {
          VPtr ft = whnf(G.ev, infer_tm(G, n.f));
          auto* p = std::get_if<Value::VPi>(&ft->v);
          if (!p)
            fail(Err::NotAFunction, "term/pi-app",
                 "application head has non-function type " + show_ty(G, ft));
          check_tm(G.push_lock(p->mu), n.a, p->dom);
          return tyclos_app(G.ev, p->cod, eval_tm(G.ev, n.a, G.env));
        } else if constexpr (std::is_same_v<T, TmExpr::PathAbs>)
          fail(Err::TypeMismatch, "term/path-abs", "cannot infer the type of a bare path");
        else if constexpr (std::is_same_v<T, TmExpr::PathApp>) {
          VPtr pt = whnf(G.ev, infer_tm(G, n.p));
          auto* pa = std::get_if<Value::VPath>(&pt->v);
          if (!pa)
            fail(Err::NotAPath, "term/path-app",
                 "path application head has non-path type " + show_ty(G, pt));
          check_int(G, n.r);
          if (n.end0 &&
              !equal_tm(G.ev, tyclos_iapp(G.ev, pa->line, mk_i0()),
                        eval_tm(G.ev, n.end0, G.env), pa->a0))
            fail(Err::EndpointMismatch, "term/path-app",
                 "annotated left endpoint disagrees with the path type");
          if (n.end1 &&
              !equal_tm(G.ev, tyclos_iapp(G.ev, pa->line, mk_i1()),
                        eval_tm(G.ev, n.end1, G.env), pa->a1))
            fail(Err::EndpointMismatch, "term/path-app",
                 "annotated right endpoint disagrees with the path type");
          return tyclos_iapp(G.ev, pa->line, eval_int(G.ev, n.r, G.env));
        } else if constexpr (std::is_same_v<T, TmExpr::MkBox>) {
          if (n.mu.cod != G.ev.mode)
            fail(Err::ModeMismatch, "term/mod-mod", "box does not land in this mode");
          return mkv(Value::VModal{n.mu, infer_tm(G.push_lock(n.mu), n.body)});
        } else if constexpr (std::is_same_v<T, TmExpr::LetMod>) {
          if (n.mu.cod != G.ev.mode)
            fail(Err::ModeMismatch, "term/mod-let", "outer annotation does not land in this mode");
          if (n.nu.cod != n.mu.dom)
            fail(Err::ModeMismatch, "term/mod-let",
                 "boxed annotation does not compose with the outer one");
          Ctx gl = G.push_lock(n.mu);
          VPtr st = whnf(gl.ev, infer_tm(gl, n.scrut));
          auto* md = std::get_if<Value::VModal>(&st->v);
          if (!md || !G.th().mod_equal(md->mu, n.nu))
            fail(Err::NotModal, "term/mod-let",
                 "scrutinee type is not the expected modal type: " + show_ty(gl, st));
          check_type(G.push_tmvar(n.mu, st), n.motive);
          TyClosT mot{n.motive, G.env, nullptr};
          VPtr yv = fresh_tvar(G.ev);
          Ctx gb = G.push_tmvar(G.th().compose(n.mu, n.nu), md->inner);
          check_tm(gb, n.branch, tyclos_app(gb.ev, mot, mkv(Value::VBox{n.nu, yv})));
          return tyclos_app(G.ev, mot, eval_tm(cross(G.ev, n.mu), n.scrut, G.env));
        } else if constexpr (std::is_same_v<T, TmExpr::SysT>)
          fail(Err::TypeMismatch, "term/sys-bin", "cannot infer the type of a system");
        else if constexpr (std::is_same_v<T, TmExpr::Comp>) {
          Ctx gi = G.push_intvar();
          check_type(gi, n.line);
          FaceDnf fv = check_face(G, n.phi);
          check_tm(gi.push_restrict(fv), n.tube, eval_ty(gi.ev, n.line, gi.env));
          TyClosI lc{n.line, G.env, nullptr};
          VPtr a0 = tyclos_iapp(G.ev, lc, mk_i0());
          check_tm(G, n.cap, a0);
          Ctx gp = G.push_restrict(fv);
          if (!gp.ev.faces.is_false()) {
            TmClosI tc{n.tube, G.env, nullptr};
            VPtr t0 = clos_iapp(gp.ev, tc, mk_i0());
            VPtr cv = eval_tm(gp.ev, n.cap, G.env);
            if (!equal_tm(gp.ev, a0, t0, cv))
              fail(Err::BoundaryMismatch, "term/comp",
                   "tube disagrees with the cap where its face holds");
          }
          return tyclos_iapp(G.ev, lc, mk_i1());
        } else if constexpr (std::is_same_v<T, TmExpr::Pair>)
          fail(Err::TypeMismatch, "term/sigma-pair", "cannot infer the type of a bare pair");
        else if constexpr (std::is_same_v<T, TmExpr::Fst>) {
          VPtr pt = whnf(G.ev, infer_tm(G, n.p));
          auto* s = std::get_if<Value::VSigma>(&pt->v);
          if (!s)
            fail(Err::NotAPair, "term/sigma-fst",
                 "projection head has non-pair type " + show_ty(G, pt));
          return s->fst;
        } else if constexpr (std::is_same_v<T, TmExpr::Snd>) {
          VPtr pt = whnf(G.ev, infer_tm(G, n.p));
          auto* s = std::get_if<Value::VSigma>(&pt->v);
          if (!s)
            fail(Err::NotAPair, "term/sigma-snd",
                 "projection head has non-pair type " + show_ty(G, pt));
          return tyclos_app(G.ev, s->snd, do_fst(G.ev, eval_tm(G.ev, n.p, G.env)));
        } else if constexpr (std::is_same_v<T, TmExpr::True> || std::is_same_v<T, TmExpr::False>)
          return mkv(Value::VBool{});
        else if constexpr (std::is_same_v<T, TmExpr::BoolElim>) {
          check_tm(G, n.scrut, mkv(Value::VBool{}));
          check_type(G.push_tmvar(G.th().identity(G.ev.mode), mkv(Value::VBool{})), n.motive);
          TyClosT mc{n.motive, G.env, nullptr};
          check_tm(G, n.tt, tyclos_app(G.ev, mc, mkv(Value::VTrue{})));
          check_tm(G, n.ff, tyclos_app(G.ev, mc, mkv(Value::VFalse{})));
          return tyclos_app(G.ev, mc, eval_tm(G.ev, n.scrut, G.env));
        } else if constexpr (std::is_same_v<T, TmExpr::Code>)
          return mkv(Value::VUniv{check_type(G, n.ty).level});
        else if constexpr (std::is_same_v<T, TmExpr::Const>) {
          const Decl* d = G.ev.sig->find(n.name);
          if (!d) fail(Err::UnknownName, "term/var", "unknown constant " + n.name);
          if (d->mode != G.ev.mode)
            fail(Err::ModeMismatch, "term/var", "constant " + n.name + " used at the wrong mode");
          return eval_ty(G.ev, d->type, Env{});
        } else
          return infer_tm(G, applied([&] { return apply_subst(G.th(), n.s, n.a); }));
      },
      e->v);
}

void check_tm(const Ctx& G, const TmPtr& e, const VPtr& ty) {
  VPtr T = whnf(G.ev, ty);
  if (auto* sy = std::get_if<Value::VSysTy>(&T->v)) {
    // the type was checked total at formation: check under each face
    for (auto& [phi, th_] : sy->branches) {
      Ctx gr = G.push_restrict(phi);
      if (gr.ev.faces.is_false()) continue;
      check_tm(gr, e, force_ty(gr.ev, th_));
    }
    return;
  }
  if (auto* lam = std::get_if<TmExpr::Lam>(&e->v)) {
    auto* p = std::get_if<Value::VPi>(&T->v);
    if (!p)
      fail(Err::TypeMismatch, "term/pi-lam",
           "function checked against non-function type " + show_ty(G, T));
    VPtr xv = fresh_tvar(G.ev);
    Ctx gb = G.push_tmvar(p->mu, p->dom);
    check_tm(gb, lam->body, tyclos_app(gb.ev, p->cod, xv));
    return;
  }
  if (auto* pab = std::get_if<TmExpr::PathAbs>(&e->v)) {
    auto* p = std::get_if<Value::VPath>(&T->v);
    if (!p)
      fail(Err::TypeMismatch, "term/path-abs",
           "path checked against non-path type " + show_ty(G, T));
    Ctx gi = G.push_intvar();
    check_tm(gi, pab->body, tyclos_iapp(gi.ev, p->line, fresh_ivar(G.ev)));
    TmClosI bc{pab->body, G.env, nullptr};
    if (!equal_tm(G.ev, tyclos_iapp(G.ev, p->line, mk_i0()), clos_iapp(G.ev, bc, mk_i0()),
                  p->a0))
      fail(Err::EndpointMismatch, "term/path-abs", "left endpoint of the path does not match");
    if (!equal_tm(G.ev, tyclos_iapp(G.ev, p->line, mk_i1()), clos_iapp(G.ev, bc, mk_i1()),
                  p->a1))
      fail(Err::EndpointMismatch, "term/path-abs", "right endpoint of the path does not match");
    return;
  }
  if (auto* bx = std::get_if<TmExpr::MkBox>(&e->v)) {
    auto* m = std::get_if<Value::VModal>(&T->v);
    if (!m || !G.th().mod_equal(bx->mu, m->mu))
      fail(Err::TypeMismatch, "term/mod-mod",
           "box checked against incompatible type " + show_ty(G, T));
    check_tm(G.push_lock(m->mu), bx->body, m->inner);
    return;
  }
  if (auto* pr = std::get_if<TmExpr::Pair>(&e->v)) {
    auto* s = std::get_if<Value::VSigma>(&T->v);
    if (!s)
      fail(Err::TypeMismatch, "term/sigma-pair",
           "pair checked against non-pair type " + show_ty(G, T));
    check_tm(G, pr->fst, s->fst);
    check_tm(G, pr->snd, tyclos_app(G.ev, s->snd, eval_tm(G.ev, pr->fst, G.env)));
    return;
  }
  if (auto* sy = std::get_if<TmExpr::SysT>(&e->v)) {
    FaceDnf cover = dnf_bot();
    std::vector<FaceDnf> fs;
    for (auto& [f, b] : sy->branches) {
      FaceDnf fd = check_face(G, f);
      cover = dnf_or(cover, fd);
      Ctx gr = G.push_restrict(fd);
      check_tm(gr, b, T);
      fs.push_back(std::move(fd));
    }
    if (!face_entails(G.th(), G.ev.faces, cover))
      fail(Err::CoverNotTotal, sy->branches.empty() ? "term/sys-null" : "term/sys-bin",
           "system faces do not cover the context");
    for (size_t i = 0; i < fs.size(); ++i)
      for (size_t j = i + 1; j < fs.size(); ++j) {
        Ctx gij = G.push_restrict(dnf_and(fs[i], fs[j]));
        if (gij.ev.faces.is_false()) continue;
        VPtr bi = eval_tm(gij.ev, sy->branches[i].second, G.env);
        VPtr bj = eval_tm(gij.ev, sy->branches[j].second, G.env);
        if (!equal_tm(gij.ev, T, bi, bj))
          fail(Err::OverlapMismatch, "term/sys-bin",
               "system branches disagree where their faces overlap");
      }
    return;
  }
  VPtr it = infer_tm(G, e);
  if (!equal_ty(G.ev, it, T))
    fail(Err::TypeMismatch, "conv/check",
         "expected " + show_ty(G, T) + " but the term has type " + show_ty(G, it));
}

void check_decl(const ModeTheory& th, Signature& sig, const Decl& d, bool strict_mod_eq) {
  if (sig.find(d.name)) fail(Err::DuplicateName, "cx/emp", "duplicate declaration " + d.name);
  Ctx g = Ctx::make(th, sig, d.mode, strict_mod_eq);
  TypeResult tr = check_type(g, d.type);
  if (d.body) {
    check_tm(g, d.body, tr.v);
    sig.add(d);
    return;
  }
  Decl base = d;
  base.unfold = nullptr;
  sig.add(base);
  if (d.unfold) {
    Ctx g2 = Ctx::make(th, sig, d.mode, strict_mod_eq);
    check_tm(g2, d.unfold, tr.v);
    sig.decls[sig.index.at(d.name)].unfold = d.unfold;
  }
}

}  // namespace cmtt
