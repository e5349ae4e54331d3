// Part of the cmtt proof checker, under the Apache License v2.0.
// SPDX-License-Identifier: Apache-2.0
#include "cmtt/syntax.hpp"

namespace cmtt {

TyPtr ty_pi(Modality mu, TyPtr dom, TyPtr cod) {
  return std::make_shared<TyExpr>(TyExpr{TyExpr::Pi{std::move(mu), std::move(dom), std::move(cod)}, {}});
}
TyPtr ty_sigma(TyPtr fst, TyPtr snd) {
  return std::make_shared<TyExpr>(TyExpr{TyExpr::Sigma{std::move(fst), std::move(snd)}, {}});
}
TyPtr ty_path(TyPtr line, TmPtr a0, TmPtr a1) {
  return std::make_shared<TyExpr>(
      TyExpr{TyExpr::Path{std::move(line), std::move(a0), std::move(a1)}, {}});
}
TyPtr ty_modal(Modality mu, TyPtr inner) {
  return std::make_shared<TyExpr>(TyExpr{TyExpr::Modal{std::move(mu), std::move(inner)}, {}});
}
TyPtr ty_sys(std::vector<std::pair<FPtr, TyPtr>> branches) {
  return std::make_shared<TyExpr>(TyExpr{TyExpr::Sys{std::move(branches)}, {}});
}
TyPtr ty_bool() {
  static TyPtr b = std::make_shared<TyExpr>(TyExpr{TyExpr::Bool{}, {}});
  return b;
}
TyPtr ty_univ(int level) { return std::make_shared<TyExpr>(TyExpr{TyExpr::Univ{level}, {}}); }
TyPtr ty_el(TmPtr code) { return std::make_shared<TyExpr>(TyExpr{TyExpr::El{std::move(code)}, {}}); }
TyPtr ty_sub(TyPtr a, SubstPtr s) {
  return std::make_shared<TyExpr>(TyExpr{TyExpr::Sub{std::move(a), std::move(s)}, {}});
}

TmPtr tm_var(int ix) { return std::make_shared<TmExpr>(TmExpr{TmExpr::Var{ix, {}}, {}}); }
TmPtr tm_var_keyed(int ix, VarKey key) {
  return std::make_shared<TmExpr>(TmExpr{TmExpr::Var{ix, std::move(key)}, {}});
}
TmPtr tm_lam(TmPtr body) {
  return std::make_shared<TmExpr>(TmExpr{TmExpr::Lam{std::move(body)}, {}});
}
TmPtr tm_app(TmPtr f, TmPtr a) {
  return std::make_shared<TmExpr>(TmExpr{TmExpr::App{std::move(f), std::move(a)}, {}});
}
TmPtr tm_pathabs(TmPtr body) {
  return std::make_shared<TmExpr>(TmExpr{TmExpr::PathAbs{std::move(body)}, {}});
}
TmPtr tm_pathapp(TmPtr p, IPtr r) {
  return std::make_shared<TmExpr>(
      TmExpr{TmExpr::PathApp{std::move(p), std::move(r), nullptr, nullptr}, {}});
}
TmPtr tm_pathapp_ann(TmPtr p, IPtr r, TmPtr e0, TmPtr e1) {
  return std::make_shared<TmExpr>(
      TmExpr{TmExpr::PathApp{std::move(p), std::move(r), std::move(e0), std::move(e1)}, {}});
}
TmPtr tm_box(Modality mu, TmPtr body) {
  return std::make_shared<TmExpr>(TmExpr{TmExpr::MkBox{std::move(mu), std::move(body)}, {}});
}
TmPtr tm_letmod(Modality nu, Modality mu, TyPtr motive, TmPtr scrut, TmPtr branch) {
  return std::make_shared<TmExpr>(TmExpr{
      TmExpr::LetMod{std::move(nu), std::move(mu), std::move(motive), std::move(scrut),
                     std::move(branch)},
      {}});
}
TmPtr tm_sys(std::vector<std::pair<FPtr, TmPtr>> branches) {
  return std::make_shared<TmExpr>(TmExpr{TmExpr::SysT{std::move(branches)}, {}});
}
TmPtr tm_comp(TyPtr line, FPtr phi, TmPtr tube, TmPtr cap) {
  return std::make_shared<TmExpr>(TmExpr{
      TmExpr::Comp{std::move(line), std::move(phi), std::move(tube), std::move(cap)}, {}});
}
TmPtr tm_pair(TmPtr fst, TmPtr snd) {
  return std::make_shared<TmExpr>(TmExpr{TmExpr::Pair{std::move(fst), std::move(snd)}, {}});
}
TmPtr tm_fst(TmPtr p) { return std::make_shared<TmExpr>(TmExpr{TmExpr::Fst{std::move(p)}, {}}); }
TmPtr tm_snd(TmPtr p) { return std::make_shared<TmExpr>(TmExpr{TmExpr::Snd{std::move(p)}, {}}); }
TmPtr tm_true() {
  static TmPtr t = std::make_shared<TmExpr>(TmExpr{TmExpr::True{}, {}});
  return t;
}
TmPtr tm_false() {
  static TmPtr f = std::make_shared<TmExpr>(TmExpr{TmExpr::False{}, {}});
  return f;
}
TmPtr tm_boolelim(TyPtr motive, TmPtr tt, TmPtr ff, TmPtr scrut) {
  return std::make_shared<TmExpr>(TmExpr{
      TmExpr::BoolElim{std::move(motive), std::move(tt), std::move(ff), std::move(scrut)}, {}});
}
TmPtr tm_code(TyPtr ty) {
  return std::make_shared<TmExpr>(TmExpr{TmExpr::Code{std::move(ty)}, {}});
}
TmPtr tm_const(std::string name) {
  return std::make_shared<TmExpr>(TmExpr{TmExpr::Const{std::move(name)}, {}});
}
TmPtr tm_sub(TmPtr a, SubstPtr s) {
  return std::make_shared<TmExpr>(TmExpr{TmExpr::Sub{std::move(a), std::move(s)}, {}});
}

SubstPtr sb_id() {
  static SubstPtr s = std::make_shared<SubstExpr>(SubstExpr{SubstExpr::Id{}});
  return s;
}
SubstPtr sb_comp(SubstPtr outer, SubstPtr inner) {
  return std::make_shared<SubstExpr>(SubstExpr{SubstExpr::Comp{std::move(outer), std::move(inner)}});
}
SubstPtr sb_empty() {
  static SubstPtr s = std::make_shared<SubstExpr>(SubstExpr{SubstExpr::Empty{}});
  return s;
}
SubstPtr sb_wk_tm() {
  static SubstPtr s = std::make_shared<SubstExpr>(SubstExpr{SubstExpr::WkTm{}});
  return s;
}
SubstPtr sb_wk_int() {
  static SubstPtr s = std::make_shared<SubstExpr>(SubstExpr{SubstExpr::WkInt{}});
  return s;
}
SubstPtr sb_wk_res() {
  static SubstPtr s = std::make_shared<SubstExpr>(SubstExpr{SubstExpr::WkRes{}});
  return s;
}
SubstPtr sb_lock(Modality mu, SubstPtr s) {
  return std::make_shared<SubstExpr>(SubstExpr{SubstExpr::Lock{std::move(mu), std::move(s)}});
}
SubstPtr sb_key(Modality src, Modality dst) {
  return std::make_shared<SubstExpr>(SubstExpr{SubstExpr::Key{std::move(src), std::move(dst)}});
}
SubstPtr sb_ext_tm(SubstPtr s, TmPtr a) {
  return std::make_shared<SubstExpr>(SubstExpr{SubstExpr::ExtTm{std::move(s), std::move(a)}});
}
SubstPtr sb_ext_int(SubstPtr s, IPtr r) {
  return std::make_shared<SubstExpr>(SubstExpr{SubstExpr::ExtInt{std::move(s), std::move(r)}});
}
SubstPtr sb_restrict(SubstPtr s) {
  return std::make_shared<SubstExpr>(SubstExpr{SubstExpr::Restrict{std::move(s)}});
}
SubstPtr sb_exc_int_inv(Modality mu) {
  return std::make_shared<SubstExpr>(SubstExpr{SubstExpr::ExcIntInv{std::move(mu)}});
}
SubstPtr sb_exc_face_inv(Modality mu, FPtr phi) {
  return std::make_shared<SubstExpr>(
      SubstExpr{SubstExpr::ExcFaceInv{std::move(mu), std::move(phi)}});
}

SubstPtr sb_exc_int(const Modality& mu) {
  // ⟨Wk_I.lock_mu, ⇑^mu q⟩ : (Γ,𝕀),lock_mu → (Γ,lock_mu),𝕀
  return sb_ext_int(sb_lock(mu, sb_wk_int()), mk_ivar(0, Modality{mu.dom, mu.cod, mu.word}));
}
SubstPtr sb_exc_face(const Modality& mu, const FPtr&) {
  // restriction of Wk_φ.lock_mu by the exchanged face
  return sb_restrict(sb_lock(mu, sb_wk_res()));
}
SubstPtr sb_plus_int(SubstPtr s) {
  return sb_ext_int(sb_comp(std::move(s), sb_wk_int()), mk_ivar(0, Modality{}));
}

// --- structural equality -----------------------------------------------------

bool syn_equal_int(const IPtr& a, const IPtr& b) {
  if (a == b) return true;
  if (a->v.index() != b->v.index()) return false;
  return std::visit(
      [&](auto&& x) -> bool {
        using T = std::decay_t<decltype(x)>;
        const T& y = std::get<T>(b->v);
        if constexpr (std::is_same_v<T, IExpr::Zero> || std::is_same_v<T, IExpr::One>)
          return true;
        else if constexpr (std::is_same_v<T, IExpr::Var>)
          return x.ix == y.ix && x.ann == y.ann;
        else if constexpr (std::is_same_v<T, IExpr::Neg>)
          return syn_equal_int(x.r, y.r);
        else if constexpr (std::is_same_v<T, IExpr::Meet> || std::is_same_v<T, IExpr::Join>)
          return syn_equal_int(x.a, y.a) && syn_equal_int(x.b, y.b);
        else
          return false;  // Sub nodes are never compared structurally
      },
      a->v);
}

bool syn_equal_face(const FPtr& a, const FPtr& b) {
  if (a == b) return true;
  if (a->v.index() != b->v.index()) return false;
  return std::visit(
      [&](auto&& x) -> bool {
        using T = std::decay_t<decltype(x)>;
        const T& y = std::get<T>(b->v);
        if constexpr (std::is_same_v<T, FExpr::Bot> || std::is_same_v<T, FExpr::Top>)
          return true;
        else if constexpr (std::is_same_v<T, FExpr::Eq0> || std::is_same_v<T, FExpr::Eq1>)
          return syn_equal_int(x.r, y.r);
        else if constexpr (std::is_same_v<T, FExpr::Meet> || std::is_same_v<T, FExpr::Join>)
          return syn_equal_face(x.a, y.a) && syn_equal_face(x.b, y.b);
        else
          return false;
      },
      a->v);
}

bool syn_equal_ty(const TyPtr& a, const TyPtr& b) {
  if (a == b) return true;
  if (a->v.index() != b->v.index()) return false;
  return std::visit(
      [&](auto&& x) -> bool {
        using T = std::decay_t<decltype(x)>;
        const T& y = std::get<T>(b->v);
        if constexpr (std::is_same_v<T, TyExpr::Pi>)
          return x.mu == y.mu && syn_equal_ty(x.dom, y.dom) && syn_equal_ty(x.cod, y.cod);
        else if constexpr (std::is_same_v<T, TyExpr::Sigma>)
          return syn_equal_ty(x.fst, y.fst) && syn_equal_ty(x.snd, y.snd);
        else if constexpr (std::is_same_v<T, TyExpr::Path>)
          return syn_equal_ty(x.line, y.line) && syn_equal(x.a0, y.a0) && syn_equal(x.a1, y.a1);
        else if constexpr (std::is_same_v<T, TyExpr::Modal>)
          return x.mu == y.mu && syn_equal_ty(x.inner, y.inner);
        else if constexpr (std::is_same_v<T, TyExpr::Sys>) {
          if (x.branches.size() != y.branches.size()) return false;
          for (size_t i = 0; i < x.branches.size(); ++i)
            if (!syn_equal_face(x.branches[i].first, y.branches[i].first) ||
                !syn_equal_ty(x.branches[i].second, y.branches[i].second))
              return false;
          return true;
        } else if constexpr (std::is_same_v<T, TyExpr::Bool>)
          return true;
        else if constexpr (std::is_same_v<T, TyExpr::Univ>)
          return x.level == y.level;
        else if constexpr (std::is_same_v<T, TyExpr::El>)
          return syn_equal(x.code, y.code);
        else
          return false;
      },
      a->v);
}

bool syn_equal(const TmPtr& a, const TmPtr& b) {
  if (a == b) return true;
  if (a->v.index() != b->v.index()) return false;
  return std::visit(
      [&](auto&& x) -> bool {
        using T = std::decay_t<decltype(x)>;
        const T& y = std::get<T>(b->v);
        if constexpr (std::is_same_v<T, TmExpr::Var>)
          return x.ix == y.ix && x.key == y.key;
        else if constexpr (std::is_same_v<T, TmExpr::Lam>)
          return syn_equal(x.body, y.body);
        else if constexpr (std::is_same_v<T, TmExpr::App>)
          return syn_equal(x.f, y.f) && syn_equal(x.a, y.a);
        else if constexpr (std::is_same_v<T, TmExpr::PathAbs>)
          return syn_equal(x.body, y.body);
        else if constexpr (std::is_same_v<T, TmExpr::PathApp>)
          return syn_equal(x.p, y.p) && syn_equal_int(x.r, y.r);
        else if constexpr (std::is_same_v<T, TmExpr::MkBox>)
          return x.mu == y.mu && syn_equal(x.body, y.body);
        else if constexpr (std::is_same_v<T, TmExpr::LetMod>)
          return x.nu == y.nu && x.mu == y.mu && syn_equal_ty(x.motive, y.motive) &&
                 syn_equal(x.scrut, y.scrut) && syn_equal(x.branch, y.branch);
        else if constexpr (std::is_same_v<T, TmExpr::SysT>) {
          if (x.branches.size() != y.branches.size()) return false;
          for (size_t i = 0; i < x.branches.size(); ++i)
            if (!syn_equal_face(x.branches[i].first, y.branches[i].first) ||
                !syn_equal(x.branches[i].second, y.branches[i].second))
              return false;
          return true;
        } else if constexpr (std::is_same_v<T, TmExpr::Comp>)
          return syn_equal_ty(x.line, y.line) && syn_equal_face(x.phi, y.phi) &&
                 syn_equal(x.tube, y.tube) && syn_equal(x.cap, y.cap);
        else if constexpr (std::is_same_v<T, TmExpr::Pair>)
          return syn_equal(x.fst, y.fst) && syn_equal(x.snd, y.snd);
        else if constexpr (std::is_same_v<T, TmExpr::Fst> || std::is_same_v<T, TmExpr::Snd>)
          return syn_equal(x.p, y.p);
        else if constexpr (std::is_same_v<T, TmExpr::True> || std::is_same_v<T, TmExpr::False>)
          return true;
        else if constexpr (std::is_same_v<T, TmExpr::BoolElim>)
          return syn_equal_ty(x.motive, y.motive) && syn_equal(x.tt, y.tt) &&
                 syn_equal(x.ff, y.ff) && syn_equal(x.scrut, y.scrut);
        else if constexpr (std::is_same_v<T, TmExpr::Code>)
          return syn_equal_ty(x.ty, y.ty);
        else if constexpr (std::is_same_v<T, TmExpr::Const>)
          return x.name == y.name;
        else
          return false;
      },
      a->v);
}

// --- s-expressions -------------------------------------------------------------

namespace {
std::string smod(const ModeTheory& th, const Modality& m) { return th.show(m); }
}

std::string sexpr_int(const ModeTheory& th, const IPtr& e) {
  return std::visit(
      [&](auto&& n) -> std::string {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, IExpr::Zero>) return "(int/bot)";
        else if constexpr (std::is_same_v<T, IExpr::One>) return "(int/top)";
        else if constexpr (std::is_same_v<T, IExpr::Var>) {
          std::string core = "(int/var " + std::to_string(n.ix) + ")";
          if (n.ann.word.empty()) return core;
          return "(int/exc " + smod(th, n.ann) + " " + core + ")";
        } else if constexpr (std::is_same_v<T, IExpr::Neg>)
          return "(int/inv " + sexpr_int(th, n.r) + ")";
        else if constexpr (std::is_same_v<T, IExpr::Meet>)
          return "(int/meet " + sexpr_int(th, n.a) + " " + sexpr_int(th, n.b) + ")";
        else if constexpr (std::is_same_v<T, IExpr::Join>)
          return "(int/join " + sexpr_int(th, n.a) + " " + sexpr_int(th, n.b) + ")";
        else
          return "(int/sb " + sexpr_int(th, n.r) + " " + sexpr_subst(th, n.s) + ")";
      },
      e->v);
}

std::string sexpr_face(const ModeTheory& th, const FPtr& e) {
  return std::visit(
      [&](auto&& n) -> std::string {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, FExpr::Bot>) return "(face/bot)";
        else if constexpr (std::is_same_v<T, FExpr::Top>) return "(face/top)";
        else if constexpr (std::is_same_v<T, FExpr::Eq0>)
          return "(face/eq " + sexpr_int(th, n.r) + " 0)";
        else if constexpr (std::is_same_v<T, FExpr::Eq1>)
          return "(face/eq " + sexpr_int(th, n.r) + " 1)";
        else if constexpr (std::is_same_v<T, FExpr::Meet>)
          return "(face/meet " + sexpr_face(th, n.a) + " " + sexpr_face(th, n.b) + ")";
        else if constexpr (std::is_same_v<T, FExpr::Join>)
          return "(face/join " + sexpr_face(th, n.a) + " " + sexpr_face(th, n.b) + ")";
        else
          return "(face/sb " + sexpr_face(th, n.f) + " " + sexpr_subst(th, n.s) + ")";
      },
      e->v);
}

std::string sexpr_subst(const ModeTheory& th, const SubstPtr& s) {
  return std::visit(
      [&](auto&& n) -> std::string {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, SubstExpr::Id>) return "(sb/id)";
        else if constexpr (std::is_same_v<T, SubstExpr::Comp>)
          return "(sb/comp " + sexpr_subst(th, n.outer) + " " + sexpr_subst(th, n.inner) + ")";
        else if constexpr (std::is_same_v<T, SubstExpr::Empty>) return "(sb/emp)";
        else if constexpr (std::is_same_v<T, SubstExpr::WkTm>) return "(sb/weak-type)";
        else if constexpr (std::is_same_v<T, SubstExpr::WkInt>) return "(sb/weak-int)";
        else if constexpr (std::is_same_v<T, SubstExpr::WkRes>) return "(sb/weak-res)";
        else if constexpr (std::is_same_v<T, SubstExpr::Lock>)
          return "(sb/lock " + smod(th, n.mu) + " " + sexpr_subst(th, n.s) + ")";
        else if constexpr (std::is_same_v<T, SubstExpr::Key>)
          return "(sb/key " + smod(th, n.src) + " " + smod(th, n.dst) + ")";
        else if constexpr (std::is_same_v<T, SubstExpr::ExtTm>)
          return "(sb/ext-type " + sexpr_subst(th, n.s) + " " + sexpr_tm(th, n.a) + ")";
        else if constexpr (std::is_same_v<T, SubstExpr::ExtInt>)
          return "(sb/ext-int " + sexpr_subst(th, n.s) + " " + sexpr_int(th, n.r) + ")";
        else if constexpr (std::is_same_v<T, SubstExpr::Restrict>)
          return "(sb/face-res " + sexpr_subst(th, n.s) + ")";
        else if constexpr (std::is_same_v<T, SubstExpr::ExcIntInv>)
          return "(sb/exc-int-inv " + smod(th, n.mu) + ")";
        else
          return "(sb/exc-face-inv " + smod(th, n.mu) + ")";
      },
      s->v);
}

std::string sexpr_ty(const ModeTheory& th, const TyPtr& e) {
  return std::visit(
      [&](auto&& n) -> std::string {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, TyExpr::Pi>)
          return "(type/pi " + smod(th, n.mu) + " " + sexpr_ty(th, n.dom) + " " +
                 sexpr_ty(th, n.cod) + ")";
        else if constexpr (std::is_same_v<T, TyExpr::Sigma>)
          return "(type/sigma " + sexpr_ty(th, n.fst) + " " + sexpr_ty(th, n.snd) + ")";
        else if constexpr (std::is_same_v<T, TyExpr::Path>)
          return "(type/path " + sexpr_ty(th, n.line) + " " + sexpr_tm(th, n.a0) + " " +
                 sexpr_tm(th, n.a1) + ")";
        else if constexpr (std::is_same_v<T, TyExpr::Modal>)
          return "(type/mod " + smod(th, n.mu) + " " + sexpr_ty(th, n.inner) + ")";
        else if constexpr (std::is_same_v<T, TyExpr::Sys>) {
          std::string s = "(type/sys";
          for (auto& [f, t] : n.branches)
            s += " (" + sexpr_face(th, f) + " " + sexpr_ty(th, t) + ")";
          return s + ")";
        } else if constexpr (std::is_same_v<T, TyExpr::Bool>)
          return "(type/bool)";
        else if constexpr (std::is_same_v<T, TyExpr::Univ>)
          return "(type/univ " + std::to_string(n.level) + ")";
        else if constexpr (std::is_same_v<T, TyExpr::El>)
          return "(type/el " + sexpr_tm(th, n.code) + ")";
        else
          return "(type/sb " + sexpr_ty(th, n.a) + " " + sexpr_subst(th, n.s) + ")";
      },
      e->v);
}

std::string sexpr_tm(const ModeTheory& th, const TmPtr& e) {
  return std::visit(
      [&](auto&& n) -> std::string {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, TmExpr::Var>) {
          std::string s = "(term/var " + std::to_string(n.ix);
          if (n.key)
            s += " (sb/key " + smod(th, n.key->src) + " " + smod(th, n.key->dst) + ")";
          return s + ")";
        } else if constexpr (std::is_same_v<T, TmExpr::Lam>)
          return "(term/pi-lam " + sexpr_tm(th, n.body) + ")";
        else if constexpr (std::is_same_v<T, TmExpr::App>)
          return "(term/pi-app " + sexpr_tm(th, n.f) + " " + sexpr_tm(th, n.a) + ")";
        else if constexpr (std::is_same_v<T, TmExpr::PathAbs>)
          return "(term/path-abs " + sexpr_tm(th, n.body) + ")";
        else if constexpr (std::is_same_v<T, TmExpr::PathApp>)
          return "(term/path-app " + sexpr_tm(th, n.p) + " " + sexpr_int(th, n.r) + ")";
        else if constexpr (std::is_same_v<T, TmExpr::MkBox>)
          return "(term/mod-mod " + smod(th, n.mu) + " " + sexpr_tm(th, n.body) + ")";
        else if constexpr (std::is_same_v<T, TmExpr::LetMod>)
          return "(term/mod-let " + smod(th, n.nu) + " " + smod(th, n.mu) + " " +
                 sexpr_ty(th, n.motive) + " " + sexpr_tm(th, n.scrut) + " " +
                 sexpr_tm(th, n.branch) + ")";
        else if constexpr (std::is_same_v<T, TmExpr::SysT>) {
          std::string s = "(term/sys";
          for (auto& [f, t] : n.branches)
            s += " (" + sexpr_face(th, f) + " " + sexpr_tm(th, t) + ")";
          return s + ")";
        } else if constexpr (std::is_same_v<T, TmExpr::Comp>)
          return "(term/comp " + sexpr_ty(th, n.line) + " " + sexpr_face(th, n.phi) + " " +
                 sexpr_tm(th, n.tube) + " " + sexpr_tm(th, n.cap) + ")";
        else if constexpr (std::is_same_v<T, TmExpr::Pair>)
          return "(term/pair " + sexpr_tm(th, n.fst) + " " + sexpr_tm(th, n.snd) + ")";
        else if constexpr (std::is_same_v<T, TmExpr::Fst>)
          return "(term/fst " + sexpr_tm(th, n.p) + ")";
        else if constexpr (std::is_same_v<T, TmExpr::Snd>)
          return "(term/snd " + sexpr_tm(th, n.p) + ")";
        else if constexpr (std::is_same_v<T, TmExpr::True>)
          return "(term/true)";
        else if constexpr (std::is_same_v<T, TmExpr::False>)
          return "(term/false)";
        else if constexpr (std::is_same_v<T, TmExpr::BoolElim>)
          return "(term/bool-elim " + sexpr_ty(th, n.motive) + " " + sexpr_tm(th, n.tt) + " " +
                 sexpr_tm(th, n.ff) + " " + sexpr_tm(th, n.scrut) + ")";
        else if constexpr (std::is_same_v<T, TmExpr::Code>)
          return "(term/code " + sexpr_ty(th, n.ty) + ")";
        else if constexpr (std::is_same_v<T, TmExpr::Const>)
          return "(term/const " + n.name + ")";
        else
          return "(term/sb " + sexpr_tm(th, n.a) + " " + sexpr_subst(th, n.s) + ")";
      },
      e->v);
}

}  // namespace cmtt
