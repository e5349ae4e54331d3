// Part of the cmtt proof checker, under the Apache License v2.0.
// SPDX-License-Identifier: Apache-2.0
//
// Composition. The line is probed at a fresh level to pick a reduction rule;
// reductions that need new binders are rebuilt as open syntax closed over an
// identity environment, which keeps later applications level-safe. Lines of
// modal types compose under the lock: the quoted payload is re-indexed by the
// interval exchange inverse so the direction binder moves inside.
#include "cmtt/kan.hpp"

#include "cmtt/diagnostics.hpp"

namespace cmtt {

namespace {

VPtr stuck_comp(const TyClosI& line, const FaceDnf& phi, const TmClosI& tube, const VPtr& cap) {
  return mkv(Value::VNeut{Neutral{HComp{line, phi, tube, cap}, {}}});
}

Modality idm(ModeId m) { return Modality{m, m, {}}; }

}  // namespace

VPtr eval_comp(const Ev& E, const TyClosI& line, const FaceDnf& phi, const TmClosI& tube,
               const VPtr& cap) {
  const ModeTheory& th = *E.th;
  if (face_entails(th, E.faces, phi)) return clos_iapp(E, tube, mk_i1());

  Ev ei = bind_iv(E);
  IPtr iv = fresh_ivar(E);
  VPtr lw = whnf(ei, tyclos_iapp(ei, line, iv));

  if (std::holds_alternative<Value::VBool>(lw->v)) {
    VPtr c = whnf(E, cap);
    bool ct = std::holds_alternative<Value::VTrue>(c->v);
    bool cf = std::holds_alternative<Value::VFalse>(c->v);
    if (ct || cf) {
      Ev ep = refine(E, phi);
      if (ep.faces.is_false()) return c;
      VPtr u1 = whnf(ep, clos_iapp(ep, tube, mk_i1()));
      if (ct && std::holds_alternative<Value::VTrue>(u1->v)) return c;
      if (cf && std::holds_alternative<Value::VFalse>(u1->v)) return c;
    }
    return stuck_comp(line, phi, tube, cap);
  }

  if (auto* pa = std::get_if<Value::VPath>(&lw->v)) {
    (void)pa;
    // comp at a line of path types: abstract the path argument j and compose
    // inside, joining the endpoint constraints onto the tube.
    Ev ej = bind_iv(E);
    IPtr jv = fresh_ivar(E);
    Ev eij = bind_iv(ej);
    IPtr iv2 = fresh_ivar(ej);
    VPtr l2 = whnf(eij, tyclos_iapp(eij, line, iv2));
    auto* p2 = std::get_if<Value::VPath>(&l2->v);
    if (!p2) return stuck_comp(line, phi, tube, cap);
    TyPtr aline = quote_ty(eij, tyclos_iapp(eij, p2->line, jv));
    TmPtr a0q = quote_tm(eij, p2->a0);
    TmPtr a1q = quote_tm(eij, p2->a1);
    Ev er = refine(eij, phi);
    TmPtr tq = a0q;
    if (!er.faces.is_false())
      tq = quote_tm(er, do_papp(er, clos_iapp(er, tube, iv2), jv, p2->a0, p2->a1));
    FaceDnf j0 = dnf_eq0(th, jv);
    FaceDnf j1 = dnf_eq1(th, jv);
    TmPtr sys = tm_sys({{quote_dnf(eij, phi), tq},
                        {quote_dnf(eij, j0), a0q},
                        {quote_dnf(eij, j1), a1q}});
    FPtr fall = quote_dnf(ej, dnf_or(phi, dnf_or(j0, j1)));
    VPtr l0 = whnf(ej, tyclos_iapp(ej, line, mk_i0()));
    auto* p0 = std::get_if<Value::VPath>(&l0->v);
    TmPtr capq = quote_tm(ej, do_papp(ej, cap, jv, p0 ? p0->a0 : nullptr, p0 ? p0->a1 : nullptr));
    TmPtr body = tm_comp(aline, fall, sys, capq);
    return mkv(Value::VPathAbs{TmClosI{body, id_env(E), nullptr}});
  }

  if (auto* sg = std::get_if<Value::VSigma>(&lw->v)) {
    // componentwise: the second component composes over the line at the
    // filler of the first.
    Ev er = refine(ei, phi);
    VPtr cfst = do_fst(E, cap);
    VPtr csnd = do_snd(E, cap);
    TyClosI lfst{quote_ty(ei, sg->fst), id_env(E), nullptr};
    TmPtr ft = er.faces.is_false()
                   ? shift_tm(th, quote_tm(E, cfst), 0, 1)
                   : quote_tm(er, do_fst(er, clos_iapp(er, tube, iv)));
    TmClosI tfst{ft, id_env(E), nullptr};
    VPtr c1 = eval_comp(E, lfst, phi, tfst, cfst);
    VPtr wi = hfill(ei, lfst, phi, tfst, cfst, iv);
    TyClosI lsnd{quote_ty(ei, tyclos_app(ei, sg->snd, wi)), id_env(E), nullptr};
    TmPtr st = er.faces.is_false()
                   ? shift_tm(th, quote_tm(E, csnd), 0, 1)
                   : quote_tm(er, do_snd(er, clos_iapp(er, tube, iv)));
    TmClosI tsnd{st, id_env(E), nullptr};
    VPtr c2 = eval_comp(E, lsnd, phi, tsnd, csnd);
    return mkv(Value::VPair{c1, c2});
  }

  if (auto* pi = std::get_if<Value::VPi>(&lw->v)) {
    // The result takes an argument, transports it backward along the domain
    // line, composes the applications over the codomain at the transport.
    const Modality mu = pi->mu;
    Modality im = idm(E.mode);
    Ev exA = bind_tm(E);
    Ev em = bind_iv(exA);
    IPtr mv = fresh_ivar(exA);
    VPtr lm = whnf(em, tyclos_iapp(em, line, mv));
    auto* pm = std::get_if<Value::VPi>(&lm->v);
    if (!pm) return stuck_comp(line, phi, tube, cap);
    TyPtr dsyn = apply_subst_ty(th, sb_exc_int_inv(mu), quote_ty(cross(em, mu), pm->dom));
    // v(i) = comp^k dom(~k \/ i) [(i=1) -> x] x, the backward transport of
    // the bound argument x (term index 0 throughout the body).
    auto v_at = [&](const IPtr& i_in, const FPtr& face) -> TmPtr {
      IPtr img = i_in ? mk_ijoin(mk_ineg(mk_ivar(0, im)), i_in) : mk_ineg(mk_ivar(0, im));
      TyPtr ln = apply_subst_ty(th, sb_ext_int(sb_wk_int(), img), dsyn);
      return tm_comp(ln, face, tm_var(0), tm_var(0));
    };
    Ev eiA = bind_iv(exA);
    IPtr ivA = fresh_ivar(exA);
    VPtr li = whnf(eiA, tyclos_iapp(eiA, line, ivA));
    auto* pA = std::get_if<Value::VPi>(&li->v);
    if (!pA) return stuck_comp(line, phi, tube, cap);
    Ev ey = bind_tm(eiA);
    VPtr yv = fresh_tvar(eiA);
    TyPtr csyn = quote_ty(ey, tyclos_app(ey, pA->cod, yv));
    TmPtr vcur = v_at(mk_ivar(1, im), mk_feq1(mk_ivar(0, im)));
    TyPtr bline = apply_subst_ty(th, sb_ext_tm(sb_id(), vcur), csyn);
    TmPtr capq = quote_tm(exA, cap);
    Ev er = refine(eiA, phi);
    TmPtr uq = er.faces.is_false() ? shift_tm(th, capq, 0, 1)
                                   : quote_tm(er, clos_iapp(er, tube, ivA));
    TmPtr tub = tm_app(uq, vcur);
    TmPtr capT = tm_app(capq, v_at(nullptr, mk_fbot()));
    TmPtr body = tm_comp(bline, quote_dnf(exA, phi), tub, capT);
    return mkv(Value::VLam{TmClosT{body, id_env(E), nullptr}});
  }

  if (auto* md = std::get_if<Value::VModal>(&lw->v)) {
    // compose under the lock: strip the boxes, exchange the direction and the
    // constraint to the inside, rebox the inner composite.
    const Modality mu = md->mu;
    VPtr capw = whnf(E, cap);
    auto* cb = std::get_if<Value::VBox>(&capw->v);
    if (!cb || !th.mod_equal(cb->mu, mu)) return stuck_comp(line, phi, tube, cap);
    Ev ec = cross(E, mu);
    TyPtr ax =
        apply_subst_ty(th, sb_exc_int_inv(mu), quote_ty(cross(ei, mu), md->inner));
    TmPtr cq = quote_tm(ec, cb->body);
    Ev er = refine(ei, phi);
    FaceDnf phix = exc_face_dnf(th, mu, phi);
    TmPtr ux;
    if (er.faces.is_false()) {
      phix = dnf_bot();
      ux = shift_tm(th, cq, 0, 1);
    } else {
      VPtr tw = whnf(er, clos_iapp(er, tube, iv));
      auto* tb = std::get_if<Value::VBox>(&tw->v);
      if (!tb || !th.mod_equal(tb->mu, mu)) return stuck_comp(line, phi, tube, cap);
      ux = apply_subst(th, sb_exc_int_inv(mu), quote_tm(cross(er, mu), tb->body));
    }
    TmPtr inner = tm_comp(ax, quote_dnf(ec, phix), ux, cq);
    return mkv(Value::VBox{mu, eval_tm(ec, inner, id_env(E))});
  }

  return stuck_comp(line, phi, tube, cap);
}

VPtr hfill(const Ev& E, const TyClosI& line, const FaceDnf& phi, const TmClosI& tube,
           const VPtr& cap, const IPtr& r) {
  const ModeTheory& th = *E.th;
  if (int_is_zero(th, E.faces, r)) return cap;
  if (int_is_one(th, E.faces, r)) return eval_comp(E, line, phi, tube, cap);
  // comp^k line(r /\ k) [phi -> tube(r /\ k), (r=0) -> cap] cap
  Ev ek = bind_iv(E);
  IPtr kv = fresh_ivar(E);
  IPtr rq1 = quote_int(ek, r);
  SubstPtr adj = sb_ext_int(sb_wk_int(), mk_imeet(rq1, mk_ivar(0, idm(E.mode))));
  TyPtr lq = apply_subst_ty(th, adj, quote_ty(ek, tyclos_iapp(ek, line, kv)));
  TmPtr capq = quote_tm(E, cap);
  TmPtr cap1 = quote_tm(ek, cap);
  Ev er = refine(ek, phi);
  TmPtr tq = er.faces.is_false()
                 ? cap1
                 : apply_subst(th, adj, quote_tm(er, clos_iapp(er, tube, kv)));
  FaceDnf r0 = dnf_eq0(th, r);
  TmPtr sys = tm_sys({{quote_dnf(ek, phi), tq}, {quote_dnf(ek, r0), cap1}});
  FPtr fall = quote_dnf(E, dnf_or(phi, r0));
  TmPtr c = tm_comp(lq, fall, sys, capq);
  return eval_tm(E, c, id_env(E));
}

}  // namespace cmtt
