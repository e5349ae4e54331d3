// Part of the cmtt proof checker, under the Apache License v2.0.
// SPDX-License-Identifier: Apache-2.0
#include "cmtt/interval.hpp"

#include <algorithm>

namespace cmtt {

IPtr mk_i0() {
  static IPtr z = std::make_shared<IExpr>(IExpr{IExpr::Zero{}});
  return z;
}
IPtr mk_i1() {
  static IPtr o = std::make_shared<IExpr>(IExpr{IExpr::One{}});
  return o;
}
IPtr mk_ivar(int ix, Modality ann) {
  return std::make_shared<IExpr>(IExpr{IExpr::Var{ix, std::move(ann)}});
}
IPtr mk_ineg(IPtr r) {
  if (std::holds_alternative<IExpr::Zero>(r->v)) return mk_i1();
  if (std::holds_alternative<IExpr::One>(r->v)) return mk_i0();
  if (auto* n = std::get_if<IExpr::Neg>(&r->v)) return n->r;
  return std::make_shared<IExpr>(IExpr{IExpr::Neg{std::move(r)}});
}
IPtr mk_imeet(IPtr a, IPtr b) {
  if (std::holds_alternative<IExpr::Zero>(a->v)) return mk_i0();
  if (std::holds_alternative<IExpr::Zero>(b->v)) return mk_i0();
  if (std::holds_alternative<IExpr::One>(a->v)) return b;
  if (std::holds_alternative<IExpr::One>(b->v)) return a;
  return std::make_shared<IExpr>(IExpr{IExpr::Meet{std::move(a), std::move(b)}});
}
IPtr mk_ijoin(IPtr a, IPtr b) {
  if (std::holds_alternative<IExpr::One>(a->v) || std::holds_alternative<IExpr::One>(b->v))
    return mk_i1();
  if (std::holds_alternative<IExpr::Zero>(a->v)) return b;
  if (std::holds_alternative<IExpr::Zero>(b->v)) return a;
  return std::make_shared<IExpr>(IExpr{IExpr::Join{std::move(a), std::move(b)}});
}
IPtr mk_isub(IPtr r, SubstPtr s) {
  return std::make_shared<IExpr>(IExpr{IExpr::Sub{std::move(r), std::move(s)}});
}

FPtr mk_fbot() {
  static FPtr b = std::make_shared<FExpr>(FExpr{FExpr::Bot{}});
  return b;
}
FPtr mk_ftop() {
  static FPtr t = std::make_shared<FExpr>(FExpr{FExpr::Top{}});
  return t;
}
FPtr mk_feq0(IPtr r) { return std::make_shared<FExpr>(FExpr{FExpr::Eq0{std::move(r)}}); }
FPtr mk_feq1(IPtr r) { return std::make_shared<FExpr>(FExpr{FExpr::Eq1{std::move(r)}}); }
FPtr mk_fmeet(FPtr a, FPtr b) {
  return std::make_shared<FExpr>(FExpr{FExpr::Meet{std::move(a), std::move(b)}});
}
FPtr mk_fjoin(FPtr a, FPtr b) {
  return std::make_shared<FExpr>(FExpr{FExpr::Join{std::move(a), std::move(b)}});
}
FPtr mk_fsub(FPtr f, SubstPtr s) {
  return std::make_shared<FExpr>(FExpr{FExpr::Sub{std::move(f), std::move(s)}});
}

// --- DM4 ------------------------------------------------------------------

Dm4 dm4_neg(Dm4 x) {
  switch (x) {
    case Dm4::D0: return Dm4::D1;
    case Dm4::D1: return Dm4::D0;
    default: return x;  // both middle elements are negation fixpoints
  }
}
Dm4 dm4_meet(Dm4 x, Dm4 y) {
  if (x == y) return x;
  if (x == Dm4::D0 || y == Dm4::D0) return Dm4::D0;
  if (x == Dm4::D1) return y;
  if (y == Dm4::D1) return x;
  return Dm4::D0;  // the two middle elements are incomparable
}
Dm4 dm4_join(Dm4 x, Dm4 y) {
  if (x == y) return x;
  if (x == Dm4::D1 || y == Dm4::D1) return Dm4::D1;
  if (x == Dm4::D0) return y;
  if (y == Dm4::D0) return x;
  return Dm4::D1;
}

void ival_atoms(const ModeTheory& th, const IPtr& r, std::set<AtomKey>& out) {
  std::visit(
      [&](auto&& n) {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, IExpr::Var>) {
          out.insert(AtomKey{n.ix, th.normalize_word(n.ann.word, n.ann.dom)});
        } else if constexpr (std::is_same_v<T, IExpr::Neg>) {
          ival_atoms(th, n.r, out);
        } else if constexpr (std::is_same_v<T, IExpr::Meet> || std::is_same_v<T, IExpr::Join>) {
          ival_atoms(th, n.a, out);
          ival_atoms(th, n.b, out);
        } else if constexpr (std::is_same_v<T, IExpr::Sub>) {
          fail(Err::Internal, "int/sb",
               "explicit substitution reached the interval algebra unapplied");
        }
      },
      r->v);
}

Dm4 ival_eval(const ModeTheory& th, const IPtr& r, const std::map<AtomKey, Dm4>& asg) {
  return std::visit(
      [&](auto&& n) -> Dm4 {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, IExpr::Zero>) return Dm4::D0;
        else if constexpr (std::is_same_v<T, IExpr::One>) return Dm4::D1;
        else if constexpr (std::is_same_v<T, IExpr::Var>) {
          auto it = asg.find(AtomKey{n.ix, th.normalize_word(n.ann.word, n.ann.dom)});
          if (it == asg.end())
            fail(Err::Internal, "int/var", "interval valuation misses an atom");
          return it->second;
        } else if constexpr (std::is_same_v<T, IExpr::Neg>) {
          return dm4_neg(ival_eval(th, n.r, asg));
        } else if constexpr (std::is_same_v<T, IExpr::Meet>) {
          return dm4_meet(ival_eval(th, n.a, asg), ival_eval(th, n.b, asg));
        } else if constexpr (std::is_same_v<T, IExpr::Join>) {
          return dm4_join(ival_eval(th, n.a, asg), ival_eval(th, n.b, asg));
        } else {
          fail(Err::Internal, "int/sb",
               "explicit substitution reached the interval algebra unapplied");
        }
      },
      r->v);
}

// --- DNF ------------------------------------------------------------------

FaceDnf dnf_bot() { return FaceDnf{}; }
FaceDnf dnf_top() { return FaceDnf{{Clause{}}}; }

namespace {

constexpr size_t kClauseCap = 4096;

// union of two consistent sorted clauses; nullopt when contradictory
std::optional<Clause> clause_meet(const Clause& a, const Clause& b) {
  Clause out;
  out.atoms.reserve(a.atoms.size() + b.atoms.size());
  std::merge(a.atoms.begin(), a.atoms.end(), b.atoms.begin(), b.atoms.end(),
             std::back_inserter(out.atoms));
  out.atoms.erase(std::unique(out.atoms.begin(), out.atoms.end()), out.atoms.end());
  for (size_t i = 0; i + 1 < out.atoms.size(); ++i) {
    const FaceAtom& x = out.atoms[i];
    const FaceAtom& y = out.atoms[i + 1];
    if (x.var == y.var && x.ann == y.ann && x.one != y.one) return std::nullopt;
  }
  return out;
}

bool clause_subset(const Clause& small, const Clause& big) {
  return std::includes(big.atoms.begin(), big.atoms.end(), small.atoms.begin(),
                       small.atoms.end());
}

FaceDnf antichain(std::vector<Clause> cs) {
  std::sort(cs.begin(), cs.end());
  cs.erase(std::unique(cs.begin(), cs.end()), cs.end());
  FaceDnf out;
  for (size_t i = 0; i < cs.size(); ++i) {
    bool subsumed = false;
    for (size_t j = 0; j < cs.size() && !subsumed; ++j)
      if (i != j && cs[j].atoms.size() < cs[i].atoms.size() && clause_subset(cs[j], cs[i]))
        subsumed = true;  // a strictly weaker clause absorbs it
    if (!subsumed) out.clauses.push_back(cs[i]);
  }
  return out;
}

}  // namespace

FaceDnf dnf_or(const FaceDnf& a, const FaceDnf& b) {
  std::vector<Clause> cs = a.clauses;
  cs.insert(cs.end(), b.clauses.begin(), b.clauses.end());
  if (cs.size() > kClauseCap)
    fail(Err::ClauseBudget, "face/join", "face normal form exceeded clause budget");
  return antichain(std::move(cs));
}

FaceDnf dnf_and(const FaceDnf& a, const FaceDnf& b) {
  std::vector<Clause> cs;
  for (const Clause& x : a.clauses)
    for (const Clause& y : b.clauses) {
      if (auto m = clause_meet(x, y)) cs.push_back(std::move(*m));
      if (cs.size() > kClauseCap)
        fail(Err::ClauseBudget, "face/meet", "face normal form exceeded clause budget");
    }
  return antichain(std::move(cs));
}

FaceDnf dnf_eq0(const ModeTheory& th, const IPtr& r) {
  return std::visit(
      [&](auto&& n) -> FaceDnf {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, IExpr::Zero>) return dnf_top();
        else if constexpr (std::is_same_v<T, IExpr::One>) return dnf_bot();
        else if constexpr (std::is_same_v<T, IExpr::Var>) {
          Modality ann = n.ann;
          ann.word = th.normalize_word(ann.word, ann.dom);
          return FaceDnf{{Clause{{FaceAtom{n.ix, ann, false}}}}};
        } else if constexpr (std::is_same_v<T, IExpr::Neg>) {
          return dnf_eq1(th, n.r);
        } else if constexpr (std::is_same_v<T, IExpr::Meet>) {
          return dnf_or(dnf_eq0(th, n.a), dnf_eq0(th, n.b));
        } else if constexpr (std::is_same_v<T, IExpr::Join>) {
          return dnf_and(dnf_eq0(th, n.a), dnf_eq0(th, n.b));
        } else {
          fail(Err::Internal, "int/sb",
               "explicit substitution reached face canonicalization unapplied");
        }
      },
      r->v);
}

FaceDnf dnf_eq1(const ModeTheory& th, const IPtr& r) {
  return std::visit(
      [&](auto&& n) -> FaceDnf {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, IExpr::Zero>) return dnf_bot();
        else if constexpr (std::is_same_v<T, IExpr::One>) return dnf_top();
        else if constexpr (std::is_same_v<T, IExpr::Var>) {
          Modality ann = n.ann;
          ann.word = th.normalize_word(ann.word, ann.dom);
          return FaceDnf{{Clause{{FaceAtom{n.ix, ann, true}}}}};
        } else if constexpr (std::is_same_v<T, IExpr::Neg>) {
          return dnf_eq0(th, n.r);
        } else if constexpr (std::is_same_v<T, IExpr::Meet>) {
          return dnf_and(dnf_eq1(th, n.a), dnf_eq1(th, n.b));
        } else if constexpr (std::is_same_v<T, IExpr::Join>) {
          return dnf_or(dnf_eq1(th, n.a), dnf_eq1(th, n.b));
        } else {
          fail(Err::Internal, "int/sb",
               "explicit substitution reached face canonicalization unapplied");
        }
      },
      r->v);
}

FaceDnf face_canon(const ModeTheory& th, const FPtr& f) {
  return std::visit(
      [&](auto&& n) -> FaceDnf {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, FExpr::Bot>) return dnf_bot();
        else if constexpr (std::is_same_v<T, FExpr::Top>) return dnf_top();
        else if constexpr (std::is_same_v<T, FExpr::Eq0>) return dnf_eq0(th, n.r);
        else if constexpr (std::is_same_v<T, FExpr::Eq1>) return dnf_eq1(th, n.r);
        else if constexpr (std::is_same_v<T, FExpr::Meet>)
          return dnf_and(face_canon(th, n.a), face_canon(th, n.b));
        else if constexpr (std::is_same_v<T, FExpr::Join>)
          return dnf_or(face_canon(th, n.a), face_canon(th, n.b));
        else
          fail(Err::Internal, "face/sb",
               "explicit substitution reached face canonicalization unapplied");
      },
      f->v);
}

bool face_entails(const ModeTheory&, const FaceDnf& ctx, const FaceDnf& phi) {
  for (const Clause& c : ctx.clauses) {
    bool some = false;
    for (const Clause& d : phi.clauses)
      if (clause_subset(d, c)) {
        some = true;
        break;
      }
    if (!some) return false;
  }
  return true;  // vacuous for the inconsistent (bottom) context
}

bool face_equal_under(const ModeTheory& th, const FaceDnf& ctx, const FaceDnf& a,
                      const FaceDnf& b) {
  return face_entails(th, dnf_and(ctx, a), b) && face_entails(th, dnf_and(ctx, b), a);
}

// --- exchange ---------------------------------------------------------------

IPtr exc_int(const ModeTheory& th, const Modality& mu, const IPtr& r) {
  return std::visit(
      [&](auto&& n) -> IPtr {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, IExpr::Zero>) return mk_i0();
        else if constexpr (std::is_same_v<T, IExpr::One>) return mk_i1();
        else if constexpr (std::is_same_v<T, IExpr::Var>) {
          if (n.ann.dom != mu.cod)
            fail(Err::ModeMismatch, "int/exc",
                 "exchange " + th.show(mu) + " applied to a variable at mode " +
                     th.mode_name(n.ann.dom));
          Modality ann{mu.dom, n.ann.cod, mu.word};
          ann.word.insert(ann.word.end(), n.ann.word.begin(), n.ann.word.end());
          return mk_ivar(n.ix, std::move(ann));
        } else if constexpr (std::is_same_v<T, IExpr::Neg>) {
          return mk_ineg(exc_int(th, mu, n.r));
        } else if constexpr (std::is_same_v<T, IExpr::Meet>) {
          return mk_imeet(exc_int(th, mu, n.a), exc_int(th, mu, n.b));
        } else if constexpr (std::is_same_v<T, IExpr::Join>) {
          return mk_ijoin(exc_int(th, mu, n.a), exc_int(th, mu, n.b));
        } else {
          fail(Err::Internal, "int/exc", "exchange applied to an unapplied substitution");
        }
      },
      r->v);
}

FPtr exc_face(const ModeTheory& th, const Modality& mu, const FPtr& f) {
  return std::visit(
      [&](auto&& n) -> FPtr {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, FExpr::Bot>) return mk_fbot();
        else if constexpr (std::is_same_v<T, FExpr::Top>) return mk_ftop();
        else if constexpr (std::is_same_v<T, FExpr::Eq0>) return mk_feq0(exc_int(th, mu, n.r));
        else if constexpr (std::is_same_v<T, FExpr::Eq1>) return mk_feq1(exc_int(th, mu, n.r));
        else if constexpr (std::is_same_v<T, FExpr::Meet>)
          return mk_fmeet(exc_face(th, mu, n.a), exc_face(th, mu, n.b));
        else if constexpr (std::is_same_v<T, FExpr::Join>)
          return mk_fjoin(exc_face(th, mu, n.a), exc_face(th, mu, n.b));
        else
          fail(Err::Internal, "face/exc", "exchange applied to an unapplied substitution");
      },
      f->v);
}

FaceDnf exc_face_dnf(const ModeTheory& th, const Modality& mu, const FaceDnf& f) {
  std::vector<Clause> cs;
  for (const Clause& c : f.clauses) {
    Clause out;
    for (const FaceAtom& a : c.atoms) {
      Modality ann{mu.dom, a.ann.cod, mu.word};
      ann.word.insert(ann.word.end(), a.ann.word.begin(), a.ann.word.end());
      ann.word = th.normalize_word(ann.word, ann.dom);
      out.atoms.push_back(FaceAtom{a.var, std::move(ann), a.one});
    }
    std::sort(out.atoms.begin(), out.atoms.end());
    out.atoms.erase(std::unique(out.atoms.begin(), out.atoms.end()), out.atoms.end());
    bool consistent = true;
    for (size_t i = 0; i + 1 < out.atoms.size(); ++i)
      if (out.atoms[i].var == out.atoms[i + 1].var &&
          out.atoms[i].ann == out.atoms[i + 1].ann &&
          out.atoms[i].one != out.atoms[i + 1].one)
        consistent = false;
    if (consistent) cs.push_back(std::move(out));
  }
  return antichain(std::move(cs));
}

// --- decision under context --------------------------------------------------

namespace {

constexpr int kFreeAtomCap = 10;

bool equal_under_clause(const ModeTheory& th, const Clause& c, const IPtr& r, const IPtr& s) {
  std::set<AtomKey> keys;
  ival_atoms(th, r, keys);
  ival_atoms(th, s, keys);
  std::map<AtomKey, Dm4> asg;
  for (const FaceAtom& a : c.atoms)
    asg[AtomKey{a.var, a.ann.word}] = a.one ? Dm4::D1 : Dm4::D0;
  std::vector<AtomKey> free;
  for (const AtomKey& k : keys)
    if (!asg.count(k)) free.push_back(k);
  if (static_cast<int>(free.size()) > kFreeAtomCap)
    fail(Err::ClauseBudget, "int-eq/res-eq",
         "interval comparison exceeded the free-atom budget");
  size_t total = size_t(1) << (2 * free.size());  // 4^n assignments
  for (size_t mask = 0; mask < total; ++mask) {
    size_t m = mask;
    for (const AtomKey& k : free) {
      asg[k] = static_cast<Dm4>(m & 3);
      m >>= 2;
    }
    if (ival_eval(th, r, asg) != ival_eval(th, s, asg)) return false;
  }
  return true;
}

}  // namespace

bool int_equal(const ModeTheory& th, const FaceDnf& ctx, const IPtr& r, const IPtr& s) {
  for (const Clause& c : ctx.clauses)
    if (!equal_under_clause(th, c, r, s)) return false;
  return true;  // bottom context entails everything
}

bool int_is_zero(const ModeTheory& th, const FaceDnf& ctx, const IPtr& r) {
  return int_equal(th, ctx, r, mk_i0());
}
bool int_is_one(const ModeTheory& th, const FaceDnf& ctx, const IPtr& r) {
  return int_equal(th, ctx, r, mk_i1());
}

// --- printing ----------------------------------------------------------------

FPtr dnf_to_face(const FaceDnf& f) {
  if (f.is_false()) return mk_fbot();
  FPtr out;
  for (const Clause& c : f.clauses) {
    FPtr cl;
    for (const FaceAtom& a : c.atoms) {
      IPtr v = mk_ivar(a.var, a.ann);
      FPtr at = a.one ? mk_feq1(v) : mk_feq0(v);
      cl = cl ? mk_fmeet(cl, at) : at;
    }
    if (!cl) cl = mk_ftop();
    out = out ? mk_fjoin(out, cl) : cl;
  }
  return out;
}

std::string show_ival(const ModeTheory& th, const IPtr& r) {
  return std::visit(
      [&](auto&& n) -> std::string {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, IExpr::Zero>) return "0";
        else if constexpr (std::is_same_v<T, IExpr::One>) return "1";
        else if constexpr (std::is_same_v<T, IExpr::Var>) {
          std::string s = "i" + std::to_string(n.ix);
          if (!n.ann.word.empty()) s += "^(" + th.show(n.ann) + ")";
          return s;
        } else if constexpr (std::is_same_v<T, IExpr::Neg>)
          return "~" + show_ival(th, n.r);
        else if constexpr (std::is_same_v<T, IExpr::Meet>)
          return "(" + show_ival(th, n.a) + " /\\ " + show_ival(th, n.b) + ")";
        else if constexpr (std::is_same_v<T, IExpr::Join>)
          return "(" + show_ival(th, n.a) + " \\/ " + show_ival(th, n.b) + ")";
        else
          return "(_[sub])";
      },
      r->v);
}

std::string show_face(const ModeTheory& th, const FPtr& f) {
  return std::visit(
      [&](auto&& n) -> std::string {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, FExpr::Bot>) return "⊥";
        else if constexpr (std::is_same_v<T, FExpr::Top>) return "⊤";
        else if constexpr (std::is_same_v<T, FExpr::Eq0>)
          return "(" + show_ival(th, n.r) + "=0)";
        else if constexpr (std::is_same_v<T, FExpr::Eq1>)
          return "(" + show_ival(th, n.r) + "=1)";
        else if constexpr (std::is_same_v<T, FExpr::Meet>)
          return "(" + show_face(th, n.a) + " /\\ " + show_face(th, n.b) + ")";
        else if constexpr (std::is_same_v<T, FExpr::Join>)
          return "(" + show_face(th, n.a) + " \\/ " + show_face(th, n.b) + ")";
        else
          return "(_[sub])";
      },
      f->v);
}

std::string show_clause(const ModeTheory& th, const Clause& c) {
  if (c.atoms.empty()) return "⊤";
  std::string s;
  for (const FaceAtom& a : c.atoms) {
    if (!s.empty()) s += " /\\ ";
    s += "(i" + std::to_string(a.var);
    if (!a.ann.word.empty()) s += "^(" + th.show(a.ann) + ")";
    s += a.one ? "=1)" : "=0)";
  }
  return s;
}

std::string show_dnf(const ModeTheory& th, const FaceDnf& f) {
  if (f.is_false()) return "⊥";
  std::string s;
  for (const Clause& c : f.clauses) {
    if (!s.empty()) s += " \\/ ";
    s += show_clause(th, c);
  }
  return s;
}

}  // namespace cmtt
