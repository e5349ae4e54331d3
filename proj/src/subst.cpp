// Part of the cmtt proof checker, under the Apache License v2.0.
// SPDX-License-Identifier: Apache-2.0
//
// Hereditary substitution. A substitution is applied by one traversal that
// tracks how many term/interval binders and which locks have been crossed;
// each substitution constructor only has to say what it does to a free
// variable occurrence. Annotation words list crossed locks nearest-use first,
// so the locally crossed word is always a raw prefix of a free occurrence's
// annotation.
#include "cmtt/diagnostics.hpp"
#include "cmtt/syntax.hpp"

namespace cmtt {
namespace {

struct St {
  int tm = 0;     // term binders crossed
  int iv = 0;     // interval binders crossed
  Word locks;     // locks crossed, nearest-use first
};

Word concat(const Word& a, const Word& b) {
  Word w = a;
  w.insert(w.end(), b.begin(), b.end());
  return w;
}

bool has_prefix(const Word& w, const Word& pre, size_t at) {
  if (w.size() < at + pre.size()) return false;
  for (size_t i = 0; i < pre.size(); ++i)
    if (w[at + i] != pre[i]) return false;
  return true;
}

struct Hooks {
  virtual ~Hooks() = default;
  // Called only on free occurrences: v.ix >= st.tm resp. st.iv.
  virtual TmPtr on_tm(const TmExpr::Var& v, const St& st) const = 0;
  virtual IPtr on_iv(const IExpr::Var& v, const St& st) const = 0;
};

TmPtr go_tm(const ModeTheory& th, const Hooks& h, const TmPtr& e, const St& st);
TyPtr go_ty(const ModeTheory& th, const Hooks& h, const TyPtr& e, const St& st);
IPtr go_int(const ModeTheory& th, const Hooks& h, const IPtr& e, const St& st);
FPtr go_face(const ModeTheory& th, const Hooks& h, const FPtr& e, const St& st);

TmPtr svar_tm(const ModeTheory& th, const SubstPtr& s, const TmExpr::Var& v, const St& st);
IPtr svar_iv(const ModeTheory& th, const SubstPtr& s, const IExpr::Var& v, const St& st);

struct SubstHooks final : Hooks {
  const ModeTheory& th;
  const SubstPtr& s;
  SubstHooks(const ModeTheory& t, const SubstPtr& sb) : th(t), s(sb) {}
  TmPtr on_tm(const TmExpr::Var& v, const St& st) const override { return svar_tm(th, s, v, st); }
  IPtr on_iv(const IExpr::Var& v, const St& st) const override { return svar_iv(th, s, v, st); }
};

// Relocates a term: shifts free indices and records that the insertion site
// sits under `under` extra locks. Those locks land between the crossings that
// are internal to the relocated term and the crossings beyond its root, so
// `under.word` is spliced in right after the locally crossed prefix.
struct PlaceHooks final : Hooks {
  const ModeTheory& th;
  int dt, di;
  Modality under;
  PlaceHooks(const ModeTheory& t, int dtm, int div, Modality u)
      : th(t), dt(dtm), di(div), under(std::move(u)) {}

  TmPtr on_tm(const TmExpr::Var& v, const St&) const override {
    return std::make_shared<TmExpr>(TmExpr{TmExpr::Var{v.ix + dt, v.key}, {}});
  }
  IPtr on_iv(const IExpr::Var& v, const St& st) const override {
    if (under.word.empty())
      return mk_ivar(v.ix + di, v.ann);
    if (!has_prefix(v.ann.word, st.locks, 0))
      fail(Err::Internal, "sb/ext-type",
           "annotation does not match the crossed locks: " +
               th.show_word(v.ann.word, v.ann.dom));
    Word w(v.ann.word.begin(), v.ann.word.begin() + static_cast<long>(st.locks.size()));
    w = concat(concat(w, under.word),
               Word(v.ann.word.begin() + static_cast<long>(st.locks.size()), v.ann.word.end()));
    ModeId dom = (st.locks.empty() && !under.word.empty()) ? under.dom : v.ann.dom;
    return mk_ivar(v.ix + di, Modality{dom, v.ann.cod, std::move(w)});
  }
};

TmPtr place_tm(const ModeTheory& th, const TmPtr& a, const St& at) {
  Modality under{0, 0, at.locks};
  return go_tm(th, PlaceHooks(th, at.tm, at.iv, std::move(under)), a, St{});
}

TmPtr svar_tm(const ModeTheory& th, const SubstPtr& s, const TmExpr::Var& v, const St& st) {
  return std::visit(
      [&](auto&& n) -> TmPtr {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, SubstExpr::Id> || std::is_same_v<T, SubstExpr::WkInt> ||
                      std::is_same_v<T, SubstExpr::WkRes> || std::is_same_v<T, SubstExpr::Key> ||
                      std::is_same_v<T, SubstExpr::ExcIntInv> ||
                      std::is_same_v<T, SubstExpr::ExcFaceInv>)
          return std::make_shared<TmExpr>(TmExpr{v, {}});
        else if constexpr (std::is_same_v<T, SubstExpr::Comp>)
          return go_tm(th, SubstHooks(th, n.inner), svar_tm(th, n.outer, v, st), st);
        else if constexpr (std::is_same_v<T, SubstExpr::Empty>) {
          fail(Err::Internal, "sb/emp", "free variable under the empty substitution");
        } else if constexpr (std::is_same_v<T, SubstExpr::WkTm>)
          return std::make_shared<TmExpr>(TmExpr{TmExpr::Var{v.ix + 1, v.key}, {}});
        else if constexpr (std::is_same_v<T, SubstExpr::Lock>) {
          St st2 = st;
          st2.locks = concat(st.locks, n.mu.word);
          return svar_tm(th, n.s, v, st2);
        } else if constexpr (std::is_same_v<T, SubstExpr::ExtTm>) {
          if (v.ix == st.tm) return place_tm(th, n.a, st);
          return svar_tm(th, n.s, TmExpr::Var{v.ix - 1, v.key}, st);
        } else if constexpr (std::is_same_v<T, SubstExpr::ExtInt> ||
                             std::is_same_v<T, SubstExpr::Restrict>)
          return svar_tm(th, n.s, v, st);
        else
          return std::make_shared<TmExpr>(TmExpr{v, {}});
      },
      s->v);
}

IPtr svar_iv(const ModeTheory& th, const SubstPtr& s, const IExpr::Var& v, const St& st) {
  return std::visit(
      [&](auto&& n) -> IPtr {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, SubstExpr::Id> || std::is_same_v<T, SubstExpr::WkTm> ||
                      std::is_same_v<T, SubstExpr::WkRes> ||
                      std::is_same_v<T, SubstExpr::ExcFaceInv>)
          return mk_ivar(v.ix, v.ann);
        else if constexpr (std::is_same_v<T, SubstExpr::Comp>)
          return go_int(th, SubstHooks(th, n.inner), svar_iv(th, n.outer, v, st), st);
        else if constexpr (std::is_same_v<T, SubstExpr::Empty>) {
          fail(Err::Internal, "sb/emp", "free interval variable under the empty substitution");
        } else if constexpr (std::is_same_v<T, SubstExpr::WkInt>)
          return mk_ivar(v.ix + 1, v.ann);
        else if constexpr (std::is_same_v<T, SubstExpr::Lock>) {
          St st2 = st;
          st2.locks = concat(st.locks, n.mu.word);
          return svar_iv(th, n.s, v, st2);
        } else if constexpr (std::is_same_v<T, SubstExpr::Key>) {
          // Γ,lock_dst → Γ,lock_src: the boundary segment of every free
          // occurrence reads src and is rewritten to dst, verbatim.
          if (!has_prefix(v.ann.word, st.locks, 0) ||
              !has_prefix(v.ann.word, n.src.word, st.locks.size()))
            fail(Err::Internal, "sb/key",
                 "annotation does not cross the keyed lock: " +
                     th.show_word(v.ann.word, v.ann.dom));
          Word w(v.ann.word.begin(), v.ann.word.begin() + static_cast<long>(st.locks.size()));
          w = concat(w, n.dst.word);
          w.insert(w.end(),
                   v.ann.word.begin() + static_cast<long>(st.locks.size() + n.src.word.size()),
                   v.ann.word.end());
          return mk_ivar(v.ix, Modality{v.ann.dom, v.ann.cod, std::move(w)});
        } else if constexpr (std::is_same_v<T, SubstExpr::ExtTm> ||
                             std::is_same_v<T, SubstExpr::Restrict>)
          return svar_iv(th, n.s, v, st);
        else if constexpr (std::is_same_v<T, SubstExpr::ExtInt>) {
          if (v.ix == st.iv) {
            if (v.ann.word != st.locks)
              fail(Err::Internal, "sb/ext-int",
                   "boundary occurrence carries a stale annotation: " +
                       th.show_word(v.ann.word, v.ann.dom));
            // The image replaces an occurrence seen through v.ann's locks, so
            // it is exchanged by that whole word.
            return go_int(th, PlaceHooks(th, 0, st.iv, v.ann), n.r, St{});
          }
          return svar_iv(th, n.s, IExpr::Var{v.ix - 1, v.ann}, st);
        } else if constexpr (std::is_same_v<T, SubstExpr::ExcIntInv>) {
          if (v.ix != st.iv) return mk_ivar(v.ix, v.ann);
          if (v.ann.word != concat(st.locks, n.mu.word))
            fail(Err::Internal, "sb/exc-int-inv",
                 "boundary occurrence does not cross the exchanged lock: " +
                     th.show_word(v.ann.word, v.ann.dom));
          return mk_ivar(v.ix, Modality{v.ann.dom, n.mu.dom, st.locks});
        } else
          return mk_ivar(v.ix, v.ann);
      },
      s->v);
}

// --- generic traversal -------------------------------------------------------

IPtr go_int(const ModeTheory& th, const Hooks& h, const IPtr& e, const St& st) {
  return std::visit(
      [&](auto&& n) -> IPtr {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, IExpr::Zero> || std::is_same_v<T, IExpr::One>)
          return e;
        else if constexpr (std::is_same_v<T, IExpr::Var>)
          return n.ix < st.iv ? e : h.on_iv(n, st);
        else if constexpr (std::is_same_v<T, IExpr::Neg>)
          return mk_ineg(go_int(th, h, n.r, st));
        else if constexpr (std::is_same_v<T, IExpr::Meet>)
          return mk_imeet(go_int(th, h, n.a, st), go_int(th, h, n.b, st));
        else if constexpr (std::is_same_v<T, IExpr::Join>)
          return mk_ijoin(go_int(th, h, n.a, st), go_int(th, h, n.b, st));
        else
          return go_int(th, h, apply_subst_int(th, n.s, n.r), st);
      },
      e->v);
}

FPtr go_face(const ModeTheory& th, const Hooks& h, const FPtr& e, const St& st) {
  return std::visit(
      [&](auto&& n) -> FPtr {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, FExpr::Bot> || std::is_same_v<T, FExpr::Top>)
          return e;
        else if constexpr (std::is_same_v<T, FExpr::Eq0>)
          return mk_feq0(go_int(th, h, n.r, st));
        else if constexpr (std::is_same_v<T, FExpr::Eq1>)
          return mk_feq1(go_int(th, h, n.r, st));
        else if constexpr (std::is_same_v<T, FExpr::Meet>)
          return mk_fmeet(go_face(th, h, n.a, st), go_face(th, h, n.b, st));
        else if constexpr (std::is_same_v<T, FExpr::Join>)
          return mk_fjoin(go_face(th, h, n.a, st), go_face(th, h, n.b, st));
        else
          return go_face(th, h, apply_subst_face(th, n.s, n.f), st);
      },
      e->v);
}

St cross_lock(const St& st, const Modality& mu) {
  St st2 = st;
  st2.locks = concat(mu.word, st.locks);
  return st2;
}

TyPtr go_ty(const ModeTheory& th, const Hooks& h, const TyPtr& e, const St& st) {
  St tm1 = st;
  tm1.tm += 1;
  St iv1 = st;
  iv1.iv += 1;
  return std::visit(
      [&](auto&& n) -> TyPtr {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, TyExpr::Pi>)
          return ty_pi(n.mu, go_ty(th, h, n.dom, cross_lock(st, n.mu)), go_ty(th, h, n.cod, tm1));
        else if constexpr (std::is_same_v<T, TyExpr::Sigma>)
          return ty_sigma(go_ty(th, h, n.fst, st), go_ty(th, h, n.snd, tm1));
        else if constexpr (std::is_same_v<T, TyExpr::Path>)
          return ty_path(go_ty(th, h, n.line, iv1), go_tm(th, h, n.a0, st),
                         go_tm(th, h, n.a1, st));
        else if constexpr (std::is_same_v<T, TyExpr::Modal>)
          return ty_modal(n.mu, go_ty(th, h, n.inner, cross_lock(st, n.mu)));
        else if constexpr (std::is_same_v<T, TyExpr::Sys>) {
          std::vector<std::pair<FPtr, TyPtr>> bs;
          bs.reserve(n.branches.size());
          for (auto& [f, t] : n.branches)
            bs.emplace_back(go_face(th, h, f, st), go_ty(th, h, t, st));
          return ty_sys(std::move(bs));
        } else if constexpr (std::is_same_v<T, TyExpr::Bool> || std::is_same_v<T, TyExpr::Univ>)
          return e;
        else if constexpr (std::is_same_v<T, TyExpr::El>)
          return ty_el(go_tm(th, h, n.code, st));
        else
          return go_ty(th, h, apply_subst_ty(th, n.s, n.a), st);
      },
      e->v);
}

TmPtr go_tm(const ModeTheory& th, const Hooks& h, const TmPtr& e, const St& st) {
  St tm1 = st;
  tm1.tm += 1;
  St iv1 = st;
  iv1.iv += 1;
  return std::visit(
      [&](auto&& n) -> TmPtr {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, TmExpr::Var>)
          return n.ix < st.tm ? e : h.on_tm(n, st);
        else if constexpr (std::is_same_v<T, TmExpr::Lam>)
          return tm_lam(go_tm(th, h, n.body, tm1));
        else if constexpr (std::is_same_v<T, TmExpr::App>)
          return tm_app(go_tm(th, h, n.f, st), go_tm(th, h, n.a, st));
        else if constexpr (std::is_same_v<T, TmExpr::PathAbs>)
          return tm_pathabs(go_tm(th, h, n.body, iv1));
        else if constexpr (std::is_same_v<T, TmExpr::PathApp>) {
          TmPtr e0 = n.end0 ? go_tm(th, h, n.end0, st) : nullptr;
          TmPtr e1 = n.end1 ? go_tm(th, h, n.end1, st) : nullptr;
          return std::make_shared<TmExpr>(TmExpr{
              TmExpr::PathApp{go_tm(th, h, n.p, st), go_int(th, h, n.r, st), e0, e1}, {}});
        } else if constexpr (std::is_same_v<T, TmExpr::MkBox>)
          return tm_box(n.mu, go_tm(th, h, n.body, cross_lock(st, n.mu)));
        else if constexpr (std::is_same_v<T, TmExpr::LetMod>)
          return tm_letmod(n.nu, n.mu, go_ty(th, h, n.motive, tm1),
                           go_tm(th, h, n.scrut, cross_lock(st, n.mu)),
                           go_tm(th, h, n.branch, tm1));
        else if constexpr (std::is_same_v<T, TmExpr::SysT>) {
          std::vector<std::pair<FPtr, TmPtr>> bs;
          bs.reserve(n.branches.size());
          for (auto& [f, t] : n.branches)
            bs.emplace_back(go_face(th, h, f, st), go_tm(th, h, t, st));
          return tm_sys(std::move(bs));
        } else if constexpr (std::is_same_v<T, TmExpr::Comp>)
          return tm_comp(go_ty(th, h, n.line, iv1), go_face(th, h, n.phi, st),
                         go_tm(th, h, n.tube, iv1), go_tm(th, h, n.cap, st));
        else if constexpr (std::is_same_v<T, TmExpr::Pair>)
          return tm_pair(go_tm(th, h, n.fst, st), go_tm(th, h, n.snd, st));
        else if constexpr (std::is_same_v<T, TmExpr::Fst>)
          return tm_fst(go_tm(th, h, n.p, st));
        else if constexpr (std::is_same_v<T, TmExpr::Snd>)
          return tm_snd(go_tm(th, h, n.p, st));
        else if constexpr (std::is_same_v<T, TmExpr::True> || std::is_same_v<T, TmExpr::False> ||
                           std::is_same_v<T, TmExpr::Const>)
          return e;
        else if constexpr (std::is_same_v<T, TmExpr::BoolElim>)
          return tm_boolelim(go_ty(th, h, n.motive, tm1), go_tm(th, h, n.tt, st),
                             go_tm(th, h, n.ff, st), go_tm(th, h, n.scrut, st));
        else if constexpr (std::is_same_v<T, TmExpr::Code>)
          return tm_code(go_ty(th, h, n.ty, st));
        else
          return go_tm(th, h, apply_subst(th, n.s, n.a), st);
      },
      e->v);
}

}  // namespace

TmPtr apply_subst(const ModeTheory& th, const SubstPtr& s, const TmPtr& e) {
  if (std::holds_alternative<SubstExpr::Id>(s->v)) return e;
  if (auto* c = std::get_if<SubstExpr::Comp>(&s->v))
    return apply_subst(th, c->inner, apply_subst(th, c->outer, e));
  return go_tm(th, SubstHooks(th, s), e, St{});
}

TyPtr apply_subst_ty(const ModeTheory& th, const SubstPtr& s, const TyPtr& e) {
  if (std::holds_alternative<SubstExpr::Id>(s->v)) return e;
  if (auto* c = std::get_if<SubstExpr::Comp>(&s->v))
    return apply_subst_ty(th, c->inner, apply_subst_ty(th, c->outer, e));
  return go_ty(th, SubstHooks(th, s), e, St{});
}

IPtr apply_subst_int(const ModeTheory& th, const SubstPtr& s, const IPtr& e) {
  if (std::holds_alternative<SubstExpr::Id>(s->v)) return e;
  if (auto* c = std::get_if<SubstExpr::Comp>(&s->v))
    return apply_subst_int(th, c->inner, apply_subst_int(th, c->outer, e));
  return go_int(th, SubstHooks(th, s), e, St{});
}

FPtr apply_subst_face(const ModeTheory& th, const SubstPtr& s, const FPtr& e) {
  if (std::holds_alternative<SubstExpr::Id>(s->v)) return e;
  if (auto* c = std::get_if<SubstExpr::Comp>(&s->v))
    return apply_subst_face(th, c->inner, apply_subst_face(th, c->outer, e));
  return go_face(th, SubstHooks(th, s), e, St{});
}

TmPtr shift_tm(const ModeTheory& th, const TmPtr& e, int dt, int di) {
  if (dt == 0 && di == 0) return e;
  return go_tm(th, PlaceHooks(th, dt, di, Modality{}), e, St{});
}

TyPtr shift_ty(const ModeTheory& th, const TyPtr& e, int dt, int di) {
  if (dt == 0 && di == 0) return e;
  return go_ty(th, PlaceHooks(th, dt, di, Modality{}), e, St{});
}

}  // namespace cmtt
