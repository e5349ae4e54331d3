// Part of the cmtt proof checker, under the Apache License v2.0.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <memory>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "cmtt/diagnostics.hpp"

namespace cmtt {

// Surface expressions. One grammar covers types, terms, intervals and faces;
// the elaborator sorts them out by position and expected type.
struct SExpr;
using SPtr = std::shared_ptr<SExpr>;

// A modality written in the source: generator names in composition order
// (rightmost applied first), empty for the identity.
using SWord = std::vector<std::string>;

struct SExpr {
  struct Name {  // variable or constant; optional explicit crossing word
    std::string id;
    bool has_ann = false;
    SWord ann;
  };
  struct Num {  // interval endpoint 0 or 1
    int v;
  };
  struct Lam {  // \x y. e
    std::vector<std::string> params;
    SPtr body;
  };
  struct App {
    SPtr f, a;
  };
  struct Arrow {  // (x : [w] A) -> B, or A -> B with x == "_"
    std::string x;
    SWord mu;
    SPtr dom, cod;
  };
  struct SigmaT {  // (x : A) * B
    std::string x;
    SPtr fst, snd;
  };
  struct PathT {  // Path^i A a b; i empty for a constant line
    std::string i;
    SPtr line, a0, a1;
  };
  struct ModalT {  // <w | A>
    SWord mu;
    SPtr inner;
  };
  struct Box {  // box[w] e
    SWord mu;
    SPtr body;
  };
  struct LetMod {  // let[outer] box[boxed] x := e in b
    SWord outer, boxed;
    std::string x;
    SPtr scrut, body;
  };
  struct PathAbs {  // <i> e
    std::string i;
    SPtr body;
  };
  struct PathApp {  // e @ r
    SPtr p, r;
  };
  struct Neg {  // ~r
    SPtr r;
  };
  struct Meet {  // a /\ b, interval or face
    SPtr a, b;
  };
  struct Join {  // a \/ b
    SPtr a, b;
  };
  struct FaceEq {  // (r = 0), (r = 1)
    SPtr r;
    int end;
  };
  struct FaceLit {  // 0f / 1f
    bool top;
  };
  struct Sys {  // [ phi -> e | ... ]
    std::vector<std::pair<SPtr, SPtr>> branches;
  };
  struct Comp {  // comp^i A [ phi -> u | ... ] cap
    std::string i;
    SPtr line;
    std::vector<std::pair<SPtr, SPtr>> tube;
    SPtr cap;
  };
  struct PairE {  // (a, b)
    SPtr a, b;
  };
  struct Proj {  // e.1 / e.2
    SPtr p;
    int which;
  };
  struct UnivE {  // U0, U1, ...
    int level;
  };
  struct BoolT {};
  struct TrueE {};
  struct FalseE {};
  struct BoolElim {  // boolelim (x. P) t f e
    std::string x;
    SPtr motive, tt, ff, scrut;
  };
  struct ElE {  // El e, explicit decode
    SPtr e;
  };

  std::variant<Name, Num, Lam, App, Arrow, SigmaT, PathT, ModalT, Box, LetMod, PathAbs, PathApp,
               Neg, Meet, Join, FaceEq, FaceLit, Sys, Comp, PairE, Proj, UnivE, BoolT, TrueE,
               FalseE, BoolElim, ElE>
      v;
  Span span;
};

template <class T>
SPtr mk_s(T node, Span sp) {
  return std::make_shared<SExpr>(SExpr{std::move(node), std::move(sp)});
}

struct SDecl {
  enum class Kind { Def, Axiom, Theorem } kind = Kind::Def;
  std::string name;
  std::string mode;  // empty: the theory's first mode
  SPtr type;
  SPtr body;    // null for axioms
  SPtr unfold;  // optional unfolding equation right-hand side (axioms only)
  Span span;
};

struct SFile {
  std::vector<SDecl> decls;
};

// Parses a source buffer; fails with Err::ParseError on bad input.
SFile parse_file(const std::string& src, const std::string& filename);

// Canonical printer; parse(print(parse(s))) prints identically to parse(s).
std::string print_surface(const SPtr& e);
std::string print_surface(const SFile& f);

}  // namespace cmtt
