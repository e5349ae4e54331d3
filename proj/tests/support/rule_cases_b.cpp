// Part of the cmtt proof checker, under the Apache License v2.0.
// SPDX-License-Identifier: Apache-2.0
//
// Registry cases for interval expressions and faces. Equational rules go
// through int_equal / face_canon / face_entails; formation rules through
// check_int / check_face in concrete contexts.
#include "rule_common.hpp"

namespace tt {

namespace {

void same_int(const IPtr& a, const IPtr& b, const std::string& what) {
  req(syn_equal_int(a, b), what + ": intervals differ");
}
void same_dnf(const FaceDnf& a, const FaceDnf& b, const std::string& what) {
  const ModeTheory& th = guarded();
  req(face_entails(th, a, b) && face_entails(th, b, a), what + ": faces differ");
}

}  // namespace

void add_interval_cases(std::vector<RuleCase>& out) {
  out.push_back({"int/join",
                 [] {
                   const ModeTheory& th = guarded();
                   Jig j(guarded());
                   Ctx g1 = j.ctx.push_intvar();
                   check_int(g1, mk_ijoin(iv(0), mk_i0()));
                   req(int_equal(th, dnf_top(), mk_ijoin(iv(0), mk_i0()), iv(0)),
                       "int/join: zero is neutral");
                   req(int_equal(th, dnf_top(), mk_ijoin(iv(0), mk_i1()), mk_i1()),
                       "int/join: one absorbs");
                 },
                 [] {
                   expect_fail(
                       [] {
                         Jig j(guarded());
                         check_int(j.ctx, mk_ijoin(iv(0), mk_i0()));
                       },
                       Err::ScopeError, "int/var");
                 }});

  out.push_back({"int/meet",
                 [] {
                   const ModeTheory& th = guarded();
                   Jig j(guarded());
                   Ctx g1 = j.ctx.push_intvar();
                   check_int(g1, mk_imeet(iv(0), mk_i1()));
                   req(int_equal(th, dnf_top(), mk_imeet(iv(0), mk_i1()), iv(0)),
                       "int/meet: one is neutral");
                   req(int_equal(th, dnf_top(), mk_imeet(iv(0), mk_i0()), mk_i0()),
                       "int/meet: zero absorbs");
                 },
                 [] {
                   expect_fail(
                       [] {
                         Jig j(guarded());
                         check_int(j.ctx, mk_imeet(iv(0), mk_i1()));
                       },
                       Err::ScopeError, "int/var");
                 }});

  out.push_back({"int/bot",
                 [] {
                   const ModeTheory& th = guarded();
                   Jig j(guarded());
                   check_int(j.ctx, mk_i0());
                   req(int_is_zero(th, dnf_top(), mk_i0()), "int/bot: endpoint recognized");
                   req(int_equal(th, dnf_top(), mk_ineg(mk_i0()), mk_i1()),
                       "int/bot: negation flips to the other endpoint");
                 },
                 {}});

  out.push_back({"int/top",
                 [] {
                   const ModeTheory& th = guarded();
                   Jig j(guarded());
                   check_int(j.ctx, mk_i1());
                   req(int_is_one(th, dnf_top(), mk_i1()), "int/top: endpoint recognized");
                   req(int_equal(th, dnf_top(), mk_ineg(mk_i1()), mk_i0()),
                       "int/top: negation flips to the other endpoint");
                 },
                 {}});

  out.push_back({"int/inv",
                 [] {
                   const ModeTheory& th = guarded();
                   Jig j(guarded());
                   Ctx g2 = j.ctx.push_intvar().push_intvar();
                   check_int(g2, mk_ineg(mk_imeet(iv(0), iv(1))));
                   req(int_equal(th, dnf_top(), mk_ineg(mk_ineg(iv(0))), iv(0)),
                       "int/inv: involution");
                   req(int_equal(th, dnf_top(), mk_ineg(mk_imeet(iv(0), iv(1))),
                                 mk_ijoin(mk_ineg(iv(0)), mk_ineg(iv(1)))),
                       "int/inv: negation distributes across meet");
                 },
                 [] {
                   expect_fail(
                       [] {
                         Jig j(guarded());
                         check_int(j.ctx, mk_ineg(iv(0)));
                       },
                       Err::ScopeError, "int/var");
                 }});

  out.push_back({"int/exc",
                 [] {
                   const ModeTheory& th = guarded();
                   IPtr e = mk_imeet(iv(0), mk_ineg(iv(1)));
                   same_int(exc_int(th, g_l(), e),
                            mk_imeet(ivm(0, g_l()), mk_ineg(ivm(1, g_l()))),
                            "int/exc: homomorphic on connectives");
                   same_int(exc_int(th, g_l(), mk_i0()), mk_i0(), "int/exc: endpoints fixed");
                   Jig j(guarded());
                   Ctx g1 = j.ctx.push_intvar().push_lock(g_l());
                   check_int(g1, exc_int(th, g_l(), iv(0)));
                 },
                 [] {
                   expect_fail([] { exc_int(guarded(), g_g(), iv(0)); }, Err::ModeMismatch,
                               "int/exc");
                 }});

  out.push_back({"int/var",
                 [] {
                   Jig j(guarded());
                   Ctx g1 = j.ctx.push_intvar();
                   check_int(g1, iv(0));
                   check_int(g1.push_lock(g_l()), ivm(0, g_l()));
                 },
                 [] {
                   expect_fail(
                       [] {
                         Jig j(guarded());
                         check_int(j.ctx.push_intvar(), iv(1));
                       },
                       Err::ScopeError, "int/var");
                   expect_fail(
                       [] {
                         Jig j(guarded());
                         check_int(j.ctx.push_intvar(), ivm(0, g_l()));
                       },
                       Err::LockMismatch, "int/var");
                 }});

  out.push_back({"int/sb",
                 [] {
                   const ModeTheory& th = guarded();
                   Jig j(guarded());
                   Ctx g2 = j.ctx.push_intvar().push_intvar();
                   check_int(g2, mk_isub(iv(0), sb_wk_int()));
                   req(int_equal(th, dnf_top(), apply_subst_int(th, sb_wk_int(), iv(0)), iv(1)),
                       "int/sb: substitution computes before comparison");
                 },
                 [] {
                   expect_fail(
                       [] {
                         Jig j(guarded());
                         check_int(j.ctx.push_intvar(), mk_isub(iv(0), sb_empty()));
                       },
                       Err::MalformedSubstitution, "sb/emp");
                 }});

  out.push_back({"int-eq/ext-int-beta",
                 [] {
                   const ModeTheory& th = guarded();
                   IPtr r = mk_ijoin(iv(0), mk_ineg(iv(1)));
                   same_int(apply_subst_int(th, sb_ext_int(sb_id(), r), iv(0)), r,
                            "int-eq/ext-int-beta: syntactic");
                   req(int_equal(th, dnf_top(), apply_subst_int(th, sb_ext_int(sb_id(), r), iv(0)),
                                 r),
                       "int-eq/ext-int-beta: judgmental");
                 },
                 {}});

  out.push_back({"int-eq/res-eq",
                 [] {
                   const ModeTheory& th = guarded();
                   FaceDnf at0 = dnf_eq0(th, iv(0));
                   req(int_equal(th, at0, iv(0), mk_i0()), "int-eq/res-eq: restricted endpoint");
                   req(int_equal(th, dnf_eq1(th, iv(0)), mk_imeet(iv(0), iv(1)), iv(1)),
                       "int-eq/res-eq: restriction simplifies a meet");
                   req(!int_equal(th, dnf_top(), iv(0), mk_i0()),
                       "int-eq/res-eq: no equation without the restriction");
                 },
                 {}});

  out.push_back({"int-eq/exc-comp",
                 [] {
                   const ModeTheory& th = guarded();
                   IPtr e = mk_imeet(iv(0), mk_ineg(iv(1)));
                   same_int(exc_int(th, g_ll(), e), exc_int(th, g_l(), exc_int(th, g_l(), e)),
                            "int-eq/exc-comp: composite crossing equals staged crossings");
                 },
                 {}});

  out.push_back({"int-eq/exc-id",
                 [] {
                   const ModeTheory& th = guarded();
                   IPtr e = mk_ijoin(iv(0), iv(1));
                   same_int(exc_int(th, g_id_t(), e), e, "int-eq/exc-id: identity crossing");
                 },
                 {}});

  out.push_back({"int-eq/exc-key",
                 [] {
                   const ModeTheory& th = guarded();
                   same_int(apply_subst_int(th, sb_key(g_id_t(), g_l()), iv(0)),
                            exc_int(th, g_l(), iv(0)),
                            "int-eq/exc-key: key action matches the exchange");
                 },
                 {}});

  out.push_back({"inte-eq/exc-sub",
                 [] {
                   const ModeTheory& th = guarded();
                   IPtr e = iv(0);
                   IPtr lhs = exc_int(th, g_l(), apply_subst_int(th, sb_wk_int(), e));
                   IPtr rhs = apply_subst_int(th, sb_lock(g_l(), sb_wk_int()),
                                              exc_int(th, g_l(), e));
                   same_int(lhs, rhs, "inte-eq/exc-sub: exchange commutes with weakening");
                 },
                 {}});

  out.push_back({"int-eq/face-res-bin",
                 [] {
                   const ModeTheory& th = guarded();
                   FaceDnf bound = dnf_or(dnf_eq0(th, iv(0)), dnf_eq1(th, iv(0)));
                   IPtr diag = mk_imeet(iv(0), mk_ineg(iv(0)));
                   req(!int_equal(th, dnf_top(), diag, mk_i0()),
                       "int-eq/face-res-bin: not an unrestricted law");
                   req(int_equal(th, bound, diag, mk_i0()),
                       "int-eq/face-res-bin: holds on each disjunct, hence on the join");
                 },
                 {}});

  out.push_back({"int-eq/face-res-null",
                 [] {
                   const ModeTheory& th = guarded();
                   req(int_equal(th, dnf_bot(), mk_i0(), mk_i1()),
                       "int-eq/face-res-null: everything collapses under the empty face");
                 },
                 {}});

  out.push_back({"face/eq",
                 [] {
                   const ModeTheory& th = guarded();
                   Jig j(guarded());
                   Ctx g1 = j.ctx.push_intvar();
                   same_dnf(check_face(g1, mk_feq0(iv(0))), dnf_eq0(th, iv(0)), "face/eq: zero");
                   same_dnf(check_face(g1, mk_feq1(iv(0))), dnf_eq1(th, iv(0)), "face/eq: one");
                 },
                 [] {
                   expect_fail(
                       [] {
                         Jig j(guarded());
                         check_face(j.ctx, mk_feq0(iv(0)));
                       },
                       Err::ScopeError, "int/var");
                 }});

  out.push_back({"face/join",
                 [] {
                   const ModeTheory& th = guarded();
                   Jig j(guarded());
                   Ctx g1 = j.ctx.push_intvar();
                   FaceDnf d = check_face(g1, mk_fjoin(mk_feq0(iv(0)), mk_fbot()));
                   same_dnf(d, dnf_eq0(th, iv(0)), "face/join: bottom is neutral");
                 },
                 [] {
                   expect_fail(
                       [] {
                         Jig j(guarded());
                         check_face(j.ctx, mk_fjoin(mk_feq0(iv(0)), mk_fbot()));
                       },
                       Err::ScopeError, "int/var");
                 }});

  out.push_back({"face/meet",
                 [] {
                   Jig j(guarded());
                   Ctx g2 = j.ctx.push_intvar().push_intvar();
                   FaceDnf d = check_face(g2, mk_fmeet(mk_feq0(iv(0)), mk_feq1(iv(1))));
                   same_dnf(d, dnf_and(check_face(g2, mk_feq0(iv(0))),
                                       check_face(g2, mk_feq1(iv(1)))),
                            "face/meet: conjunction of constraints");
                 },
                 [] {
                   expect_fail(
                       [] {
                         Jig j(guarded());
                         check_face(j.ctx, mk_fmeet(mk_feq0(iv(0)), mk_ftop()));
                       },
                       Err::ScopeError, "int/var");
                 }});

  out.push_back({"face/bot",
                 [] {
                   Jig j(guarded());
                   FaceDnf d = check_face(j.ctx, mk_fbot());
                   req(d.clauses.empty(), "face/bot: empty disjunction");
                 },
                 {}});

  out.push_back({"face/top",
                 [] {
                   const ModeTheory& th = guarded();
                   Jig j(guarded());
                   FaceDnf d = check_face(j.ctx, mk_ftop());
                   req(face_entails(th, dnf_top(), d) && face_entails(th, d, dnf_top()),
                       "face/top: the full face");
                 },
                 {}});

  out.push_back({"face/exc",
                 [] {
                   const ModeTheory& th = guarded();
                   same_dnf(exc_face_dnf(th, g_l(), dnf_eq0(th, iv(0))),
                            dnf_eq0(th, ivm(0, g_l())),
                            "face/exc: crossing lands on the atoms");
                   Jig j(guarded());
                   Ctx g1 = j.ctx.push_intvar().push_lock(g_l());
                   check_face(g1, exc_face(th, g_l(), mk_feq0(iv(0))));
                 },
                 [] {
                   expect_fail([] { exc_face(guarded(), g_g(), mk_feq0(iv(0))); },
                               Err::ModeMismatch, "int/exc");
                 }});

  out.push_back({"face/sb",
                 [] {
                   Jig j(guarded());
                   Ctx g2 = j.ctx.push_intvar().push_intvar();
                   FaceDnf d = check_face(g2, mk_fsub(mk_feq0(iv(0)), sb_wk_int()));
                   same_dnf(d, check_face(g2, mk_feq0(iv(1))), "face/sb: substitution computes");
                 },
                 [] {
                   expect_fail(
                       [] {
                         Jig j(guarded());
                         check_face(j.ctx.push_intvar(), mk_fsub(mk_feq0(iv(0)), sb_empty()));
                       },
                       Err::MalformedSubstitution, "sb/emp");
                 }});

  out.push_back({"face-eq/non-contr",
                 [] {
                   const ModeTheory& th = guarded();
                   FaceDnf d = dnf_and(dnf_eq0(th, iv(0)), dnf_eq1(th, iv(0)));
                   req(d.clauses.empty(), "face-eq/non-contr: opposite constraints cancel");
                   same_dnf(dnf_and(dnf_eq0(th, iv(0)),
                                    dnf_or(dnf_eq1(th, iv(0)), dnf_eq0(th, iv(0)))),
                            dnf_eq0(th, iv(0)), "face-eq/non-contr: inside a join");
                 },
                 {}});

  out.push_back({"face-eq/exc-comp",
                 [] {
                   const ModeTheory& th = guarded();
                   FaceDnf d = dnf_or(dnf_eq0(th, iv(0)), dnf_eq1(th, iv(1)));
                   same_dnf(exc_face_dnf(th, g_ll(), d),
                            exc_face_dnf(th, g_l(), exc_face_dnf(th, g_l(), d)),
                            "face-eq/exc-comp: staged crossings");
                 },
                 {}});

  out.push_back({"face-eq/exc-id",
                 [] {
                   const ModeTheory& th = guarded();
                   FaceDnf d = dnf_eq1(th, iv(0));
                   same_dnf(exc_face_dnf(th, g_id_t(), d), d, "face-eq/exc-id: identity");
                 },
                 {}});

  out.push_back({"face-eq/exc-key",
                 [] {
                   const ModeTheory& th = guarded();
                   FaceDnf keyed = face_canon(th, apply_subst_face(th, sb_key(g_id_t(), g_l()),
                                                                   mk_feq0(iv(0))));
                   same_dnf(keyed, exc_face_dnf(th, g_l(), dnf_eq0(th, iv(0))),
                            "face-eq/exc-key: key action matches the exchange");
                 },
                 {}});

  out.push_back({"face-eq/exc-eq",
                 [] {
                   const ModeTheory& th = guarded();
                   IPtr r = mk_imeet(iv(0), mk_ineg(iv(1)));
                   same_dnf(exc_face_dnf(th, g_l(), dnf_eq0(th, r)),
                            dnf_eq0(th, exc_int(th, g_l(), r)),
                            "face-eq/exc-eq: exchange commutes with the constraint former");
                 },
                 {}});

  out.push_back({"face-eq/exc-sub",
                 [] {
                   const ModeTheory& th = guarded();
                   FaceDnf d = dnf_eq0(th, iv(0));
                   FaceDnf lhs = exc_face_dnf(
                       th, g_l(), face_canon(th, apply_subst_face(th, sb_wk_int(),
                                                                  dnf_to_face(d))));
                   FaceDnf rhs = face_canon(
                       th, apply_subst_face(th, sb_lock(g_l(), sb_wk_int()),
                                            dnf_to_face(exc_face_dnf(th, g_l(), d))));
                   same_dnf(lhs, rhs, "face-eq/exc-sub: exchange commutes with weakening");
                 },
                 {}});

  out.push_back({"face-eq/res-eq-top",
                 [] {
                   const ModeTheory& th = guarded();
                   FaceDnf phi = dnf_or(dnf_eq0(th, iv(0)), dnf_eq1(th, iv(1)));
                   req(face_entails(th, phi, phi), "face-eq/res-eq-top: self entailment");
                   req(face_equal_under(th, phi, phi, dnf_top()),
                       "face-eq/res-eq-top: a face is full under its own restriction");
                 },
                 {}});

  out.push_back({"face-eq/eq-zero",
                 [] {
                   const ModeTheory& th = guarded();
                   same_dnf(face_canon(th, mk_feq0(mk_i0())), dnf_top(),
                            "face-eq/eq-zero: trivially true constraint");
                   same_dnf(face_canon(th, mk_feq0(mk_i1())), dnf_bot(),
                            "face-eq/eq-zero: trivially false constraint");
                   same_dnf(face_canon(th, mk_feq0(mk_ineg(iv(0)))), dnf_eq1(th, iv(0)),
                            "face-eq/eq-zero: negation flips the side");
                 },
                 {}});

  out.push_back({"face-eq/face-res-bin",
                 [] {
                   const ModeTheory& th = guarded();
                   FaceDnf e0 = dnf_eq0(th, iv(0));
                   FaceDnf e1 = dnf_eq1(th, iv(0));
                   req(!face_entails(th, dnf_or(e0, e1), e0),
                       "face-eq/face-res-bin: a join only entails what both sides do");
                   req(face_entails(th, dnf_or(e0, e1), dnf_or(e0, e1)),
                       "face-eq/face-res-bin: the join itself is entailed");
                   req(face_entails(th, e0, dnf_or(e0, e1)) &&
                           face_entails(th, e1, dnf_or(e0, e1)),
                       "face-eq/face-res-bin: each disjunct entails the join");
                 },
                 {}});

  out.push_back({"face-eq/face-res-null",
                 [] {
                   const ModeTheory& th = guarded();
                   req(face_entails(th, dnf_bot(), dnf_bot()) &&
                           face_entails(th, dnf_bot(), dnf_eq0(th, iv(0))),
                       "face-eq/face-res-null: the empty restriction entails everything");
                   req(face_equal_under(th, dnf_bot(), dnf_top(), dnf_bot()),
                       "face-eq/face-res-null: all faces agree under it");
                 },
                 {}});
}

}  // namespace tt
