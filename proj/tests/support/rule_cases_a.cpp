// Part of the cmtt proof checker, under the Apache License v2.0.
// SPDX-License-Identifier: Apache-2.0
//
// Registry cases for context formation and the substitution calculus. Action
// equations are asserted syntactically with apply_subst; typed uses go
// through explicit Sub nodes so the checker computes the same action.
#include "rule_common.hpp"

namespace tt {

namespace {

// Word [l, g] reads left to right in application order: l first, then g.
Modality mod_lg() {
  return raw_mod(g_l().dom, g_g().cod, Word{g_l().word[0], g_g().word[0]});
}

void same_tm(const TmPtr& a, const TmPtr& b, const std::string& what) {
  req(syn_equal(a, b), what + ": terms differ");
}
void same_int(const IPtr& a, const IPtr& b, const std::string& what) {
  req(syn_equal_int(a, b), what + ": intervals differ");
}

}  // namespace

void add_ctx_subst_cases(std::vector<RuleCase>& out) {
  out.push_back({"cx/emp",
                 [] {
                   Jig jt(guarded());
                   req(check_type(jt.ctx, ty_bool()).level == 0, "cx/emp: Bool at t");
                   Jig js(guarded(), "s");
                   req(check_type(js.ctx, ty_bool()).level == 0, "cx/emp: Bool at s");
                 },
                 [] {
                   expect_fail(
                       [] {
                         Jig j(guarded());
                         j.decls("def a0 : U0 := Bool\ndef a0 : U0 := Bool");
                       },
                       Err::DuplicateName, "cx/emp");
                 }});

  out.push_back({"cx/lock",
                 [] {
                   Jig j(guarded(), "s");
                   Ctx g0 = j.ctx.push_tmvar(mod_lg(), vty(j.ctx.push_lock(mod_lg()), ty_bool()));
                   Ctx g2 = g0.push_lock(g_g()).push_lock(g_l());
                   req(g2.ev.mode == g_l().dom, "cx/lock: ambient mode steps through the locks");
                   TmVarInfo vi = lookup_tm_var(g2, 0);
                   req(guarded().mod_equal(vi.locks, mod_lg()), "cx/lock: lock composite");
                   VPtr t = infer_tm(g2, tm_var(0));
                   req(equal_ty(g2.ev, t, vty(g2, ty_bool())), "cx/lock: access through both locks");
                 },
                 [] {
                   expect_fail(
                       [] {
                         Jig j(guarded());
                         j.ctx.push_lock(g_g());
                       },
                       Err::ModeMismatch, "cx/lock");
                 }});

  out.push_back({"cx/ext-type",
                 [] {
                   Jig j(guarded());
                   Ctx g1 = j.ctx.push_tmvar(g_l(), vty(j.ctx.push_lock(g_l()), ty_bool()));
                   Ctx g2 = g1.push_lock(g_l());
                   VPtr t = infer_tm(g2, tm_var(0));
                   req(equal_ty(g2.ev, t, vty(g2, ty_bool())),
                       "cx/ext-type: annotated binder usable under its lock");
                 },
                 {}});

  out.push_back({"cx/ext-int",
                 [] {
                   Jig j(guarded());
                   Ctx g1 = j.ctx.push_intvar();
                   check_int(g1, iv(0));
                   check_type(g1, ty_path(ty_bool(), tm_true(), tm_false()));
                   Ctx g2 = g1.push_lock(g_l());
                   check_int(g2, ivm(0, g_l()));
                 },
                 {}});

  out.push_back({"cx/face-res",
                 [] {
                   Jig j(guarded());
                   Ctx g1 = j.ctx.push_intvar();
                   Ctx g2 = g1.push_restrict(dnf_eq0(guarded(), iv(0)));
                   req(face_entails(guarded(), g2.ev.faces, dnf_eq0(guarded(), iv(0))),
                       "cx/face-res: restriction lands in the ambient faces");
                   check_tm(g2, tm_sys({{mk_feq0(iv(0)), tm_true()}}), vty(g2, ty_bool()));
                 },
                 {}});

  out.push_back({"cx-eq/comp-lock",
                 [] {
                   const ModeTheory& th = guarded();
                   // Non-collapsing pair: the fused word is the concatenation.
                   Jig jt(guarded());
                   Ctx a = jt.ctx.push_intvar().push_lock(g_l()).push_lock(g_l());
                   Ctx b = jt.ctx.push_intvar().push_lock(g_ll());
                   check_int(a, ivm(0, g_ll()));
                   check_int(b, ivm(0, g_ll()));
                   // Collapsing pair: the fused crossing normalizes; each
                   // spelling checks against its own presentation and the two
                   // words are equal in the theory.
                   Jig js(guarded(), "s");
                   Ctx a2 = js.ctx.push_intvar().push_lock(g_g()).push_lock(g_l());
                   Modality fused = th.compose(g_g(), g_l());
                   Ctx b2 = js.ctx.push_intvar().push_lock(fused);
                   req(a2.ev.mode == b2.ev.mode, "cx-eq/comp-lock: same ambient mode");
                   check_int(a2, ivm(0, mod_lg()));
                   check_int(b2, ivm(0, fused));
                   req(th.mod_equal(mod_lg(), fused), "cx-eq/comp-lock: crossings agree");
                 },
                 {}});

  out.push_back({"cx-eq/id-lock",
                 [] {
                   Jig j(guarded());
                   Ctx g1 = j.ctx.push_tmvar(g_id_t(), vty(j.ctx, ty_bool())).push_intvar();
                   Ctx g2 = g1.push_lock(g_id_t());
                   req(g2.ev.mode == g1.ev.mode, "cx-eq/id-lock: mode unchanged");
                   check_int(g2, iv(0));
                   VPtr t = infer_tm(g2, tm_var(0));
                   req(equal_ty(g2.ev, t, vty(g2, ty_bool())), "cx-eq/id-lock: access unchanged");
                 },
                 {}});

  out.push_back({"sb/comp",
                 [] {
                   const ModeTheory& th = guarded();
                   SubstPtr s = sb_comp(sb_wk_tm(), sb_ext_tm(sb_id(), tm_true()));
                   same_tm(apply_subst(th, s, tm_var(0)),
                           apply_subst(th, sb_ext_tm(sb_id(), tm_true()),
                                       apply_subst(th, sb_wk_tm(), tm_var(0))),
                           "sb/comp: staged application");
                   Jig j(guarded());
                   Ctx g1 = j.ctx.push_tmvar(g_id_t(), vty(j.ctx, ty_bool()));
                   expect_checks(g1, tm_sub(tm_var(0), s), ty_bool());
                 },
                 {}});

  out.push_back({"sb/id",
                 [] {
                   const ModeTheory& th = guarded();
                   TmPtr es[] = {tm_var(3), tm_lam(tm_var(0)), tm_box(g_l(), tm_true()),
                                 tm_pathabs(tm_pathapp(tm_var(0), iv(0)))};
                   for (const TmPtr& e : es)
                     same_tm(apply_subst(th, sb_id(), e), e, "sb/id: identity action");
                   Jig j(guarded());
                   Ctx g1 = j.ctx.push_tmvar(g_id_t(), vty(j.ctx, ty_bool()));
                   expect_checks(g1, tm_sub(tm_var(0), sb_id()), ty_bool());
                 },
                 {}});

  out.push_back({"sb/emp",
                 [] {
                   const ModeTheory& th = guarded();
                   TmPtr closed = tm_lam(tm_var(0));
                   same_tm(apply_subst(th, sb_empty(), closed), closed, "sb/emp: closed terms");
                   Jig j(guarded());
                   Ctx g1 = j.ctx.push_tmvar(g_id_t(), vty(j.ctx, ty_bool()));
                   expect_checks(g1, tm_sub(tm_true(), sb_empty()), ty_bool());
                 },
                 [] {
                   expect_fail([] { apply_subst(guarded(), sb_empty(), tm_var(0)); },
                               Err::Internal, "sb/emp");
                 }});

  out.push_back({"sb/weak-type",
                 [] {
                   const ModeTheory& th = guarded();
                   same_tm(apply_subst(th, sb_wk_tm(), tm_var(0)), tm_var(1),
                           "sb/weak-type: free index shifts");
                   same_tm(apply_subst(th, sb_wk_tm(), tm_lam(tm_app(tm_var(0), tm_var(1)))),
                           tm_lam(tm_app(tm_var(0), tm_var(2))),
                           "sb/weak-type: bound index fixed");
                   same_int(apply_subst_int(th, sb_wk_tm(), iv(0)), iv(0),
                            "sb/weak-type: interval variables untouched");
                   Jig j(guarded());
                   Ctx g2 = j.ctx.push_tmvar(g_id_t(), vty(j.ctx, ty_bool()))
                                .push_tmvar(g_id_t(), vty(j.ctx, ty_sigma(ty_bool(), ty_bool())));
                   VPtr t = infer_tm(g2, tm_sub(tm_var(0), sb_wk_tm()));
                   req(equal_ty(g2.ev, t, vty(g2, ty_bool())), "sb/weak-type: picks the outer var");
                 },
                 {}});

  out.push_back({"sb/weak-int",
                 [] {
                   const ModeTheory& th = guarded();
                   same_int(apply_subst_int(th, sb_wk_int(), iv(0)), iv(1),
                            "sb/weak-int: free interval shifts");
                   same_tm(apply_subst(th, sb_wk_int(), tm_var(0)), tm_var(0),
                           "sb/weak-int: term variables untouched");
                   same_tm(apply_subst(th, sb_wk_int(), tm_pathabs(tm_pathapp(tm_var(0), iv(0)))),
                           tm_pathabs(tm_pathapp(tm_var(0), iv(0))),
                           "sb/weak-int: bound interval fixed");
                   Jig j(guarded());
                   Ctx g2 = j.ctx.push_intvar().push_intvar();
                   check_int(g2, mk_isub(iv(0), sb_wk_int()));
                 },
                 {}});

  out.push_back({"sb/weak-res",
                 [] {
                   const ModeTheory& th = guarded();
                   same_tm(apply_subst(th, sb_wk_res(), tm_var(2)), tm_var(2),
                           "sb/weak-res: identity on variables");
                   Jig j(guarded());
                   Ctx g1 = j.ctx.push_intvar().push_restrict(dnf_eq0(guarded(), iv(0)));
                   expect_checks(g1, tm_sub(tm_true(), sb_wk_res()), ty_bool());
                 },
                 {}});

  out.push_back({"sb/lock",
                 [] {
                   const ModeTheory& th = guarded();
                   SubstPtr s = sb_lock(g_l(), sb_wk_tm());
                   same_tm(apply_subst(th, s, tm_var(0)), tm_var(1),
                           "sb/lock: inherits the base action");
                   SubstPtr si = sb_lock(g_l(), sb_wk_int());
                   same_int(apply_subst_int(th, si, ivm(0, g_l())), ivm(1, g_l()),
                            "sb/lock: annotation preserved across the lock");
                 },
                 {}});

  out.push_back({"sb/key",
                 [] {
                   const ModeTheory& th = guarded();
                   req(th.cell_exists(g_id_t(), g_l()), "sb/key: generating cell present");
                   same_int(apply_subst_int(th, sb_key(g_id_t(), g_l()), iv(0)), ivm(0, g_l()),
                            "sb/key: rewrites the crossing segment");
                   Jig j(guarded());
                   Ctx g1 = j.ctx.push_intvar().push_lock(g_l());
                   check_int(g1, mk_isub(iv(0), sb_key(g_id_t(), g_l())));
                 },
                 [] {
                   expect_fail(
                       [] { apply_subst_int(guarded(), sb_key(g_l(), g_id_t()), iv(0)); },
                       Err::Internal, "sb/key");
                   expect_fail([] { guarded().cell_exists(g_g(), g_l()); }, Err::ModeMismatch,
                               "sb/key");
                 }});

  out.push_back({"sb/ext-type",
                 [] {
                   const ModeTheory& th = guarded();
                   SubstPtr s = sb_ext_tm(sb_id(), tm_true());
                   same_tm(apply_subst(th, s, tm_var(0)), tm_true(), "sb/ext-type: head image");
                   same_tm(apply_subst(th, s, tm_var(1)), tm_var(0), "sb/ext-type: tail shifts");
                   Jig j(guarded());
                   Ctx g1 = j.ctx.push_tmvar(g_id_t(), vty(j.ctx, ty_bool()));
                   VPtr t = infer_tm(g1, tm_sub(tm_var(1), s));
                   req(equal_ty(g1.ev, t, vty(g1, ty_bool())), "sb/ext-type: typed use");
                 },
                 [] {
                   // Placement under a crossed lock validates the image's own
                   // crossings; here the image's interval annotation is stale.
                   TmPtr bad = tm_box(g_l(), tm_pathapp(tm_var(0), iv(0)));
                   expect_fail(
                       [&] {
                         apply_subst(guarded(), sb_ext_tm(sb_id(), bad),
                                     tm_box(g_l(), tm_var(0)));
                       },
                       Err::Internal, "sb/ext-type");
                 }});

  out.push_back({"sb/ext-int",
                 [] {
                   const ModeTheory& th = guarded();
                   IPtr r = mk_ineg(iv(0));
                   SubstPtr s = sb_ext_int(sb_id(), r);
                   same_int(apply_subst_int(th, s, iv(0)), r, "sb/ext-int: head image");
                   same_int(apply_subst_int(th, s, iv(1)), iv(0), "sb/ext-int: tail shifts");
                   // Under a crossed lock the image is exchanged by the annotation.
                   TmPtr e = tm_box(g_l(), tm_pathapp(tm_var(0), ivm(0, g_l())));
                   same_tm(apply_subst(th, s, e),
                           tm_box(g_l(), tm_pathapp(tm_var(0), mk_ineg(ivm(0, g_l())))),
                           "sb/ext-int: image exchanged through the lock");
                 },
                 [] {
                   TmPtr stale = tm_box(g_l(), tm_pathapp(tm_var(0), iv(0)));
                   expect_fail(
                       [&] {
                         apply_subst(guarded(), sb_ext_int(sb_id(), mk_i0()), stale);
                       },
                       Err::Internal, "sb/ext-int");
                 }});

  out.push_back({"sb/face-res",
                 [] {
                   const ModeTheory& th = guarded();
                   SubstPtr s = sb_restrict(sb_wk_tm());
                   same_tm(apply_subst(th, s, tm_var(0)), tm_var(1),
                           "sb/face-res: restriction is transparent to the action");
                   same_int(apply_subst_int(th, s, iv(0)), iv(0), "sb/face-res: intervals kept");
                 },
                 {}});

  out.push_back({"sb/exc-int-inv",
                 [] {
                   const ModeTheory& th = guarded();
                   SubstPtr s = sb_exc_int_inv(g_l());
                   same_int(apply_subst_int(th, s, ivm(0, g_l())), iv(0),
                            "sb/exc-int-inv: strips the exchanged lock");
                   Modality ll = raw_mod(0, 0, Word{g_l().word[0], g_l().word[0]});
                   same_tm(apply_subst(th, s, tm_box(g_l(), tm_pathapp(tm_var(0), ivm(0, ll)))),
                           tm_box(g_l(), tm_pathapp(tm_var(0), ivm(0, g_l()))),
                           "sb/exc-int-inv: strips under a crossed lock");
                   Jig j(guarded());
                   Ctx g1 = j.ctx.push_lock(g_l()).push_intvar();
                   check_int(g1, mk_isub(ivm(0, g_l()), s));
                 },
                 [] {
                   expect_fail(
                       [] { apply_subst_int(guarded(), sb_exc_int_inv(g_l()), iv(0)); },
                       Err::Internal, "sb/exc-int-inv");
                 }});

  out.push_back({"sb/exc-face-inv",
                 [] {
                   const ModeTheory& th = guarded();
                   SubstPtr s = sb_exc_face_inv(g_l(), mk_feq0(ivm(0, g_l())));
                   same_int(apply_subst_int(th, s, ivm(0, g_l())), ivm(0, g_l()),
                            "sb/exc-face-inv: identity on interval variables");
                   same_tm(apply_subst(th, s, tm_var(0)), tm_var(0),
                           "sb/exc-face-inv: identity on term variables");
                   FPtr f = mk_fjoin(mk_feq0(ivm(0, g_l())), mk_feq1(ivm(0, g_l())));
                   req(syn_equal_face(apply_subst_face(th, s, f), f),
                       "sb/exc-face-inv: identity on faces");
                 },
                 {}});

  out.push_back({"sb-eq/comp-lock",
                 [] {
                   const ModeTheory& th = guarded();
                   Modality lg = th.compose(g_g(), g_l());
                   SubstPtr one = sb_lock(lg, sb_wk_int());
                   SubstPtr two = sb_lock(g_l(), sb_lock(g_g(), sb_wk_int()));
                   IPtr e = ivm(0, raw_mod(g_l().dom, g_g().cod, lg.word));
                   IPtr want = ivm(1, raw_mod(g_l().dom, g_g().cod, lg.word));
                   same_int(apply_subst_int(th, one, e), want, "sb-eq/comp-lock: fused lock");
                   same_int(apply_subst_int(th, two, e), want, "sb-eq/comp-lock: stacked locks");
                 },
                 {}});

  out.push_back({"sb-eq/id-lock",
                 [] {
                   const ModeTheory& th = guarded();
                   SubstPtr s = sb_lock(g_id_t(), sb_wk_tm());
                   same_tm(apply_subst(th, s, tm_var(0)),
                           apply_subst(th, sb_wk_tm(), tm_var(0)), "sb-eq/id-lock: term action");
                   same_int(apply_subst_int(th, s, iv(0)),
                            apply_subst_int(th, sb_wk_tm(), iv(0)),
                            "sb-eq/id-lock: interval action");
                 },
                 {}});

  out.push_back({"sb-eq/lock-comp",
                 [] {
                   const ModeTheory& th = guarded();
                   SubstPtr sig = sb_wk_int();
                   SubstPtr del = sb_ext_int(sb_id(), mk_i0());
                   SubstPtr lhs = sb_lock(g_l(), sb_comp(sig, del));
                   SubstPtr rhs = sb_comp(sb_lock(g_l(), sig), sb_lock(g_l(), del));
                   IPtr e = ivm(0, g_l());
                   same_int(apply_subst_int(th, lhs, e), apply_subst_int(th, rhs, e),
                            "sb-eq/lock-comp: lock distributes over composition");
                 },
                 {}});

  out.push_back({"sb-eq/lock-id",
                 [] {
                   const ModeTheory& th = guarded();
                   SubstPtr s = sb_lock(g_l(), sb_id());
                   same_int(apply_subst_int(th, s, ivm(0, g_l())), ivm(0, g_l()),
                            "sb-eq/lock-id: interval action");
                   same_tm(apply_subst(th, s, tm_var(2)), tm_var(2), "sb-eq/lock-id: term action");
                 },
                 {}});

  out.push_back({"sb-eq/id-key",
                 [] {
                   const ModeTheory& th = guarded();
                   same_int(apply_subst_int(th, sb_key(g_l(), g_l()), ivm(0, g_l())), ivm(0, g_l()),
                            "sb-eq/id-key: identity cell acts trivially");
                 },
                 {}});

  out.push_back({"sb-eq/nat-key",
                 [] {
                   const ModeTheory& th = guarded();
                   SubstPtr key = sb_key(g_id_t(), g_l());
                   SubstPtr lhs = sb_comp(key, sb_lock(g_l(), sb_wk_int()));
                   SubstPtr rhs = sb_comp(sb_lock(g_id_t(), sb_wk_int()), key);
                   IPtr e = iv(0);
                   same_int(apply_subst_int(th, lhs, e), ivm(1, g_l()),
                            "sb-eq/nat-key: key then locked weakening");
                   same_int(apply_subst_int(th, rhs, e), ivm(1, g_l()),
                            "sb-eq/nat-key: locked weakening then key");
                 },
                 {}});

  out.push_back({"sb-eq/comp-key",
                 [] {
                   const ModeTheory& th = guarded();
                   SubstPtr pasted = sb_key(g_id_t(), g_ll());
                   SubstPtr staged = sb_comp(sb_key(g_id_t(), g_l()), sb_key(g_l(), g_ll()));
                   IPtr e = iv(0);
                   same_int(apply_subst_int(th, pasted, e), apply_subst_int(th, staged, e),
                            "sb-eq/comp-key: vertical pasting");
                   same_int(apply_subst_int(th, pasted, e), ivm(0, g_ll()),
                            "sb-eq/comp-key: expected rewrite");
                 },
                 {}});

  out.push_back({"sb-eq/whisk-key",
                 [] {
                   const ModeTheory& th = guarded();
                   SubstPtr whisk = sb_lock(g_l(), sb_key(g_id_t(), g_l()));
                   SubstPtr fused = sb_key(th.compose(g_id_t(), g_l()), th.compose(g_l(), g_l()));
                   IPtr e = ivm(0, g_l());
                   same_int(apply_subst_int(th, whisk, e), ivm(0, g_ll()),
                            "sb-eq/whisk-key: whiskered action");
                   same_int(apply_subst_int(th, fused, e), ivm(0, g_ll()),
                            "sb-eq/whisk-key: fused action");
                 },
                 {}});

  out.push_back({"sb-eq/ext-type-beta",
                 [] {
                   const ModeTheory& th = guarded();
                   TmPtr u = tm_pathapp(tm_var(0), iv(0));
                   same_tm(apply_subst(th, sb_ext_tm(sb_id(), u), tm_var(0)), u,
                           "sb-eq/ext-type-beta: head projects the image");
                   // Placing the image under a lock shifts indices and splices
                   // the crossing into interval annotations.
                   same_tm(apply_subst(th, sb_ext_tm(sb_id(), u), tm_box(g_l(), tm_var(0))),
                           tm_box(g_l(), tm_pathapp(tm_var(0), ivm(0, g_l()))),
                           "sb-eq/ext-type-beta: image re-indexed under the lock");
                 },
                 {}});

  out.push_back({"sb-eq/ext-type-eta",
                 [] {
                   const ModeTheory& th = guarded();
                   SubstPtr eta = sb_ext_tm(sb_wk_tm(), tm_var(0));
                   for (int ix : {0, 1, 3}) {
                     same_tm(apply_subst(th, eta, tm_var(ix)), tm_var(ix),
                             "sb-eq/ext-type-eta: agrees with the identity");
                   }
                   same_tm(apply_subst(th, eta, tm_lam(tm_var(1))), tm_lam(tm_var(1)),
                           "sb-eq/ext-type-eta: under a binder");
                 },
                 {}});

  out.push_back({"sb-eq/ext-int-beta",
                 [] {
                   const ModeTheory& th = guarded();
                   IPtr r = mk_imeet(iv(0), mk_ineg(iv(1)));
                   same_int(apply_subst_int(th, sb_ext_int(sb_id(), r), iv(0)), r,
                            "sb-eq/ext-int-beta: head projects the image");
                   same_tm(apply_subst(th, sb_ext_int(sb_id(), r),
                                       tm_pathapp(tm_var(1), iv(0))),
                           tm_pathapp(tm_var(1), r),
                           "sb-eq/ext-int-beta: inside a term");
                 },
                 {}});

  out.push_back({"sb-eq/ext-int-eta",
                 [] {
                   const ModeTheory& th = guarded();
                   SubstPtr eta = sb_ext_int(sb_wk_int(), iv(0));
                   same_int(apply_subst_int(th, eta, iv(0)), iv(0),
                            "sb-eq/ext-int-eta: head is the top variable");
                   same_int(apply_subst_int(th, eta, iv(2)), iv(2),
                            "sb-eq/ext-int-eta: tail agrees with the identity");
                   same_tm(apply_subst(th, eta, tm_var(1)), tm_var(1),
                           "sb-eq/ext-int-eta: terms untouched");
                 },
                 {}});

  out.push_back({"sb-eq/exc-int-left-inv",
                 [] {
                   const ModeTheory& th = guarded();
                   SubstPtr s = sb_comp(sb_exc_int(g_l()), sb_exc_int_inv(g_l()));
                   same_int(apply_subst_int(th, s, iv(0)), iv(0),
                            "sb-eq/exc-int-left-inv: round trip on the direction");
                   same_tm(apply_subst(th, s, tm_var(0)), tm_var(0),
                           "sb-eq/exc-int-left-inv: round trip on terms");
                 },
                 {}});

  out.push_back({"sb-eq/exc-int-right-inv",
                 [] {
                   const ModeTheory& th = guarded();
                   SubstPtr s = sb_comp(sb_exc_int_inv(g_l()), sb_exc_int(g_l()));
                   same_int(apply_subst_int(th, s, ivm(0, g_l())), ivm(0, g_l()),
                            "sb-eq/exc-int-right-inv: round trip on the direction");
                   same_tm(apply_subst(th, s, tm_var(0)), tm_var(0),
                           "sb-eq/exc-int-right-inv: round trip on terms");
                 },
                 {}});

  out.push_back({"sb-eq/exc-face-left-inv",
                 [] {
                   const ModeTheory& th = guarded();
                   FPtr phi = mk_feq0(ivm(0, g_l()));
                   SubstPtr s = sb_comp(sb_exc_face(g_l(), phi), sb_exc_face_inv(g_l(), phi));
                   same_int(apply_subst_int(th, s, ivm(0, g_l())), ivm(0, g_l()),
                            "sb-eq/exc-face-left-inv: intervals fixed");
                   same_tm(apply_subst(th, s, tm_var(1)), tm_var(1),
                           "sb-eq/exc-face-left-inv: terms fixed");
                 },
                 {}});

  out.push_back({"sb-eq/exc-face-right-inv",
                 [] {
                   const ModeTheory& th = guarded();
                   FPtr phi = mk_feq0(ivm(0, g_l()));
                   SubstPtr s = sb_comp(sb_exc_face_inv(g_l(), phi), sb_exc_face(g_l(), phi));
                   same_int(apply_subst_int(th, s, ivm(0, g_l())), ivm(0, g_l()),
                            "sb-eq/exc-face-right-inv: intervals fixed");
                   same_tm(apply_subst(th, s, tm_var(1)), tm_var(1),
                           "sb-eq/exc-face-right-inv: terms fixed");
                 },
                 {}});

  out.push_back({"sb-eq/face-res-uniq",
                 [] {
                   const ModeTheory& th = guarded();
                   same_tm(apply_subst(th, sb_restrict(sb_wk_tm()), tm_var(0)),
                           apply_subst(th, sb_wk_tm(), tm_var(0)),
                           "sb-eq/face-res-uniq: restriction adds nothing to the action");
                   same_int(apply_subst_int(th, sb_restrict(sb_ext_int(sb_id(), mk_i1())), iv(0)),
                            mk_i1(), "sb-eq/face-res-uniq: interval action preserved");
                 },
                 {}});

  out.push_back({"sb-eq/face-res-bin",
                 [] {
                   Jig j(guarded());
                   const ModeTheory& th = guarded();
                   Ctx gi = j.ctx.push_intvar();
                   FaceDnf f0 = dnf_eq0(th, iv(0));
                   FaceDnf f1 = dnf_eq1(th, iv(0));
                   TmPtr sys = tm_sys({{mk_feq0(iv(0)), tm_true()}, {mk_feq1(iv(0)), tm_false()}});
                   check_tm(gi.push_restrict(dnf_or(f0, f1)), sys,
                            vty(gi.push_restrict(dnf_or(f0, f1)), ty_bool()));
                   // Checking transports along each disjunct's inclusion.
                   TmPtr moved = apply_subst(th, sb_wk_res(), sys);
                   check_tm(gi.push_restrict(f0), moved, vty(gi.push_restrict(f0), ty_bool()));
                   check_tm(gi.push_restrict(f1), moved, vty(gi.push_restrict(f1), ty_bool()));
                 },
                 {}});

  out.push_back({"sb-eq/face-res-null",
                 [] {
                   Jig j(guarded());
                   Ctx gb = j.ctx.push_restrict(dnf_bot());
                   check_tm(gb, tm_sys({}), vty(gb, ty_bool()));
                   req(conv_tm(gb, ty_bool(), tm_true(), tm_false()),
                       "sb-eq/face-res-null: judgments collapse under the empty face");
                 },
                 {}});
}

}  // namespace tt
