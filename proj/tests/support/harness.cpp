// Part of the cmtt proof checker, under the Apache License v2.0.
// SPDX-License-Identifier: Apache-2.0
#include "harness.hpp"

#ifndef CMTT_REPO_DIR
#error "CMTT_REPO_DIR must point at the repository root"
#endif

namespace tt {

void bail(const std::string& msg) { throw std::runtime_error(msg); }

void req(bool ok, const std::string& msg) {
  if (!ok) bail(msg);
}

const ModeTheory& guarded() {
  static ModeTheory t = ModeTheory::builtin_guarded();
  return t;
}

const ModeTheory& trivial() {
  static ModeTheory t = ModeTheory::builtin_trivial();
  return t;
}

static Modality from_names(std::initializer_list<const char*> names) {
  std::vector<std::string> v;
  for (const char* n : names) v.emplace_back(n);
  return guarded().from_names_compose_order(v, guarded().mode_id("t"));
}

Modality g_id_t() { return guarded().identity(guarded().mode_id("t")); }
Modality g_id_s() { return guarded().identity(guarded().mode_id("s")); }
Modality g_l() { return from_names({"l"}); }
Modality g_g() { return from_names({"g"}); }
Modality g_d() { return from_names({"d"}); }
Modality g_ll() { return from_names({"l", "l"}); }
Modality g_dg() { return from_names({"d", "g"}); }
Modality g_gd() { return from_names({"g", "d"}); }

Jig::Jig(const ModeTheory& t, const std::string& mode, bool strict) : th(&t) {
  ModeId m = mode.empty() ? 0 : t.mode_id(mode);
  ctx = Ctx::make(t, sig, m, strict);
  ctx.ev.sig = &sig;
}

Jig& Jig::decls(const std::string& src) {
  SFile f = parse_file(src, "<jig>");
  for (const SDecl& sd : f.decls) {
    Decl d = elaborate_decl(*th, sig, sd, ctx.ev.strict_mod_eq);
    check_decl(*th, sig, d, ctx.ev.strict_mod_eq);
  }
  return *this;
}

Signature check_src(const ModeTheory& th, const std::string& src, bool strict) {
  Signature sig;
  SFile f = parse_file(src, "<test>");
  for (const SDecl& sd : f.decls) {
    Decl d = elaborate_decl(th, sig, sd, strict);
    check_decl(th, sig, d, strict);
  }
  return sig;
}

void expect_fail(const std::function<void()>& f, Err code, const std::string& rule) {
  try {
    f();
  } catch (const CmttError& e) {
    if (e.code != code)
      bail("expected error code " + std::string(err_name(code)) + ", got " +
           err_name(e.code) + " [" + e.rule + "] " + e.message);
    if (e.rule != rule)
      bail("expected rule " + rule + ", got " + e.rule + ": " + e.message);
    return;
  }
  bail("expected failure [" + rule + "] but the check passed");
}

void expect_src_fail(const ModeTheory& th, const std::string& src, Err code,
                     const std::string& rule) {
  expect_fail([&] { check_src(th, src); }, code, rule);
}

bool conv_tm(const Ctx& G, const TyPtr& ty, const TmPtr& a, const TmPtr& b) {
  TypeResult tr = check_type(G, ty);
  check_tm(G, a, tr.v);
  check_tm(G, b, tr.v);
  VPtr va = eval_tm(G.ev, a, G.env);
  VPtr vb = eval_tm(G.ev, b, G.env);
  return equal_tm(G.ev, tr.v, va, vb);
}

bool conv_ty(const Ctx& G, const TyPtr& a, const TyPtr& b) {
  VPtr va = check_type(G, a).v;
  VPtr vb = check_type(G, b).v;
  return equal_ty(G.ev, va, vb);
}

void expect_checks(const Ctx& G, const TmPtr& e, const TyPtr& ty) {
  TypeResult tr = check_type(G, ty);
  check_tm(G, e, tr.v);
}

std::string nf_tm(const Ctx& G, const TmPtr& e, const TyPtr& ty) {
  TypeResult tr = check_type(G, ty);
  check_tm(G, e, tr.v);
  VPtr v = eval_tm(G.ev, e, G.env);
  return sexpr_tm(*G.ev.th, quote_tm(G.ev, v));
}

std::string decl_type_pretty(const ModeTheory& th, const Signature& sig, const std::string& n) {
  const Decl* d = sig.find(n);
  req(d != nullptr, "unknown declaration " + n);
  return pretty_ty(th, d->type);
}

std::string repo_path(const std::string& rel) {
  return std::string(CMTT_REPO_DIR) + "/" + rel;
}

}  // namespace tt
