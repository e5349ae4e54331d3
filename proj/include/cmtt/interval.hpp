// Part of the cmtt proof checker, under the Apache License v2.0.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <memory>
#include <variant>
#include <vector>

#include "cmtt/mode_theory.hpp"

namespace cmtt {

struct SubstExpr;  // defined in syntax.hpp
using SubstPtr = std::shared_ptr<const SubstExpr>;

// Interval terms. `Var.ix` counts interval binders only: a de Bruijn index in
// core syntax, a level in semantic values. `Var.ann` is the accumulated
// exchange modality between binder and use, kept as written; equality of
// atoms always normalizes it through the mode theory.
struct IExpr;
using IPtr = std::shared_ptr<const IExpr>;
struct IExpr {
  struct Zero {};
  struct One {};
  struct Var {
    int ix;
    Modality ann;
  };
  struct Neg {
    IPtr r;
  };
  struct Meet {
    IPtr a, b;
  };
  struct Join {
    IPtr a, b;
  };
  struct Sub {  // int/sb: explicit substitution, computed away by apply_subst
    IPtr r;
    SubstPtr s;
  };
  std::variant<Zero, One, Var, Neg, Meet, Join, Sub> v;
};

IPtr mk_i0();
IPtr mk_i1();
IPtr mk_ivar(int ix, Modality ann);
IPtr mk_ineg(IPtr r);
IPtr mk_imeet(IPtr a, IPtr b);
IPtr mk_ijoin(IPtr a, IPtr b);
IPtr mk_isub(IPtr r, SubstPtr s);

// Face (cofibration) formulas.
struct FExpr;
using FPtr = std::shared_ptr<const FExpr>;
struct FExpr {
  struct Bot {};
  struct Top {};
  struct Eq0 {
    IPtr r;
  };
  struct Eq1 {
    IPtr r;
  };
  struct Meet {
    FPtr a, b;
  };
  struct Join {
    FPtr a, b;
  };
  struct Sub {  // face/sb
    FPtr f;
    SubstPtr s;
  };
  std::variant<Bot, Top, Eq0, Eq1, Meet, Join, Sub> v;
};

FPtr mk_fbot();
FPtr mk_ftop();
FPtr mk_feq0(IPtr r);
FPtr mk_feq1(IPtr r);
FPtr mk_fmeet(FPtr a, FPtr b);
FPtr mk_fjoin(FPtr a, FPtr b);
FPtr mk_fsub(FPtr f, SubstPtr s);

// Canonical disjunctive normal form. Atoms pin an annotated variable to an
// endpoint; clauses are sorted, consistent meets; the clause set is an
// antichain under containment. Annotations inside a DNF are rewrite-normal.
struct FaceAtom {
  int var;
  Modality ann;  // normalized
  bool one;      // false: (var^ann = 0), true: (var^ann = 1)
  bool operator==(const FaceAtom&) const = default;
  bool operator<(const FaceAtom& o) const {
    if (var != o.var) return var < o.var;
    if (ann != o.ann) return ann < o.ann;
    return one < o.one;
  }
};
struct Clause {
  std::vector<FaceAtom> atoms;  // sorted
  bool operator==(const Clause&) const = default;
  bool operator<(const Clause& o) const { return atoms < o.atoms; }
};
struct FaceDnf {
  std::vector<Clause> clauses;  // sorted antichain; empty = bottom
  bool is_false() const { return clauses.empty(); }
  bool is_true() const { return clauses.size() == 1 && clauses[0].atoms.empty(); }
  bool operator==(const FaceDnf&) const = default;
};

FaceDnf dnf_bot();
FaceDnf dnf_top();
FaceDnf dnf_and(const FaceDnf& a, const FaceDnf& b);
FaceDnf dnf_or(const FaceDnf& a, const FaceDnf& b);
// (r = 0) / (r = 1) reduced to atoms: Eq0 maps joins to meets, meets to
// joins, negation to the opposite endpoint.
FaceDnf dnf_eq0(const ModeTheory& th, const IPtr& r);
FaceDnf dnf_eq1(const ModeTheory& th, const IPtr& r);

// Canonicalizes a face expression; rejects embedded explicit substitutions
// (apply them first).
FaceDnf face_canon(const ModeTheory& th, const FPtr& f);
// ctx entails phi: every ctx clause contains some phi clause.
bool face_entails(const ModeTheory& th, const FaceDnf& ctx, const FaceDnf& phi);
// Equality of faces as a restriction of the ambient context.
bool face_equal_under(const ModeTheory& th, const FaceDnf& ctx, const FaceDnf& a,
                      const FaceDnf& b);

// Exchange: the De Morgan homomorphism crossing one lock. Composes mu onto
// every variable annotation (new crossing is applied first).
IPtr exc_int(const ModeTheory& th, const Modality& mu, const IPtr& r);
FaceDnf exc_face_dnf(const ModeTheory& th, const Modality& mu, const FaceDnf& f);
FPtr exc_face(const ModeTheory& th, const Modality& mu, const FPtr& f);

// Interval equality under face assumptions, decided by valuation in the
// four-element De Morgan algebra over the free annotated atoms. ctx and both
// terms must sit at the same mode position (callers exchange the context when
// crossing locks). A bottom ctx entails everything.
bool int_equal(const ModeTheory& th, const FaceDnf& ctx, const IPtr& r, const IPtr& s);
bool int_is_zero(const ModeTheory& th, const FaceDnf& ctx, const IPtr& r);
bool int_is_one(const ModeTheory& th, const FaceDnf& ctx, const IPtr& r);

// DNF -> formula (joins of meets), for quoting values back to syntax.
FPtr dnf_to_face(const FaceDnf& f);

std::string show_ival(const ModeTheory& th, const IPtr& r);
std::string show_face(const ModeTheory& th, const FPtr& f);
std::string show_clause(const ModeTheory& th, const Clause& c);
std::string show_dnf(const ModeTheory& th, const FaceDnf& f);

// The four-element De Morgan algebra: bottom, two incomparable negation
// fixpoints, top. Exposed for the test oracles.
enum class Dm4 : uint8_t { D0 = 0, Da = 1, Db = 2, D1 = 3 };
Dm4 dm4_neg(Dm4 x);
Dm4 dm4_meet(Dm4 x, Dm4 y);
Dm4 dm4_join(Dm4 x, Dm4 y);

// Atom identity used by valuations: variable plus normalized annotation word.
struct AtomKey {
  int var;
  Word ann;
  bool operator<(const AtomKey& o) const {
    if (var != o.var) return var < o.var;
    return ann < o.ann;
  }
  bool operator==(const AtomKey&) const = default;
};
// Evaluates an interval term under an atom assignment; missing atoms fault.
Dm4 ival_eval(const ModeTheory& th, const IPtr& r, const std::map<AtomKey, Dm4>& asg);
// Collects the atom keys of a term.
void ival_atoms(const ModeTheory& th, const IPtr& r, std::set<AtomKey>& out);

}  // namespace cmtt
