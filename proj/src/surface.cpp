// Part of the cmtt proof checker, under the Apache License v2.0.
// SPDX-License-Identifier: Apache-2.0
//
// Surface lexer and recursive-descent parser. The lexer folds the unicode
// spellings onto their ascii tokens so both dialects parse identically.

#include "cmtt/surface.hpp"

#include <cctype>
#include <cstring>
#include <map>

namespace cmtt {
namespace {

enum class Tok {
  Ident,
  Number,
  Univ,
  KwDef,
  KwAxiom,
  KwTheorem,
  KwUnfold,
  KwPath,
  KwComp,
  KwBox,
  KwLet,
  KwIn,
  KwBool,
  KwTrue,
  KwFalse,
  KwBoolElim,
  KwEl,
  LParen,
  RParen,
  LBrack,
  RBrack,
  LAngle,
  RAngle,
  Lambda,
  Dot,
  Comma,
  Colon,
  ColonEq,
  Arrow,
  Star,
  At,
  Tilde,
  Wedge,
  Vee,
  Eq,
  Pipe,
  Caret,
  Zap,
  FaceBot,
  FaceTop,
  End,
};

struct Token {
  Tok k;
  std::string text;
  int num = 0;
  int line = 1, col = 1;
};

const std::map<std::string, Tok>& keywords() {
  static const std::map<std::string, Tok> kw = {
      {"def", Tok::KwDef},       {"axiom", Tok::KwAxiom},   {"theorem", Tok::KwTheorem},
      {"unfold", Tok::KwUnfold}, {"Path", Tok::KwPath},     {"comp", Tok::KwComp},
      {"box", Tok::KwBox},       {"let", Tok::KwLet},       {"in", Tok::KwIn},
      {"Bool", Tok::KwBool},     {"true", Tok::KwTrue},     {"false", Tok::KwFalse},
      {"boolelim", Tok::KwBoolElim}, {"El", Tok::KwEl},
  };
  return kw;
}

struct Lexer {
  const std::string& s;
  std::string file;
  size_t i = 0;
  int line = 1, col = 1;

  Lexer(const std::string& src, std::string f) : s(src), file(std::move(f)) {}

  [[noreturn]] void err(const std::string& msg) {
    CmttError e(Err::ParseError, "parse", msg);
    e.span = Span{file, line, col};
    throw e;
  }

  void adv(size_t bytes, int cols = 1) {
    i += bytes;
    col += cols;
  }

  bool lit(const char* u) {
    size_t n = std::strlen(u);
    if (s.compare(i, n, u) == 0) {
      adv(n);
      return true;
    }
    return false;
  }

  void skip() {
    for (;;) {
      if (i >= s.size()) return;
      char c = s[i];
      if (c == '\n') {
        i++;
        line++;
        col = 1;
      } else if (c == ' ' || c == '\t' || c == '\r') {
        adv(1);
      } else if (c == '-' && i + 1 < s.size() && s[i + 1] == '-') {
        while (i < s.size() && s[i] != '\n') i++;
      } else {
        return;
      }
    }
  }

  std::vector<Token> run() {
    std::vector<Token> out;
    for (;;) {
      skip();
      Token t;
      t.line = line;
      t.col = col;
      if (i >= s.size()) {
        t.k = Tok::End;
        out.push_back(t);
        return out;
      }
      char c = s[i];
      auto push = [&](Tok k, std::string text = "") {
        t.k = k;
        t.text = std::move(text);
        out.push_back(t);
      };
      // unicode spellings first
      if (lit("\xce\xbb")) { push(Tok::Lambda); continue; }             // lambda
      if (lit("\xe2\x86\x92")) { push(Tok::Arrow); continue; }          // right arrow
      if (lit("\xe2\x86\xa6")) { push(Tok::Arrow); continue; }          // maps-to
      if (lit("\xe2\x9f\xa8")) { push(Tok::LAngle); continue; }         // mathematical angle
      if (lit("\xe2\x9f\xa9")) { push(Tok::RAngle); continue; }
      if (lit("\xe2\x88\x98")) { push(Tok::Dot); continue; }            // ring operator
      if (lit("\xe2\x84\x93")) { push(Tok::Ident, "l"); continue; }     // script ell
      if (lit("\xce\xb3")) { push(Tok::Ident, "g"); continue; }         // gamma
      if (lit("\xce\xb4")) { push(Tok::Ident, "d"); continue; }         // delta
      if (lit("\xe2\x96\xb7")) { push(Tok::Ident, "Later"); continue; } // triangle
      if (lit("\xe2\x8a\x9b")) { push(Tok::Zap); continue; }            // circled star
      if (lit("\xe2\x88\xa7")) { push(Tok::Wedge); continue; }
      if (lit("\xe2\x88\xa8")) { push(Tok::Vee); continue; }
      if (lit("\xc2\xac")) { push(Tok::Tilde); continue; }
      if (lit("\xe2\x8a\xa5")) { push(Tok::FaceBot); continue; }
      if (lit("\xe2\x8a\xa4")) { push(Tok::FaceTop); continue; }
      if (c == ':' && i + 1 < s.size() && s[i + 1] == '=') { adv(2, 2); push(Tok::ColonEq); continue; }
      if (c == '-' && i + 1 < s.size() && s[i + 1] == '>') { adv(2, 2); push(Tok::Arrow); continue; }
      if (c == '/' && i + 1 < s.size() && s[i + 1] == '\\') { adv(2, 2); push(Tok::Wedge); continue; }
      if (c == '\\' && i + 1 < s.size() && s[i + 1] == '/') { adv(2, 2); push(Tok::Vee); continue; }
      if (c == '\\') { adv(1); push(Tok::Lambda); continue; }
      switch (c) {
        case '(': adv(1); push(Tok::LParen); continue;
        case ')': adv(1); push(Tok::RParen); continue;
        case '[': adv(1); push(Tok::LBrack); continue;
        case ']': adv(1); push(Tok::RBrack); continue;
        case '<': adv(1); push(Tok::LAngle); continue;
        case '>': adv(1); push(Tok::RAngle); continue;
        case '.': adv(1); push(Tok::Dot); continue;
        case ',': adv(1); push(Tok::Comma); continue;
        case ':': adv(1); push(Tok::Colon); continue;
        case '*': adv(1); push(Tok::Star); continue;
        case '@': adv(1); push(Tok::At); continue;
        case '~': adv(1); push(Tok::Tilde); continue;
        case '=': adv(1); push(Tok::Eq); continue;
        case '|': adv(1); push(Tok::Pipe); continue;
        case '^': adv(1); push(Tok::Caret); continue;
        default: break;
      }
      if (std::isdigit(static_cast<unsigned char>(c))) {
        size_t j = i;
        while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) j++;
        std::string digits = s.substr(i, j - i);
        if (j < s.size() && s[j] == 'f' &&
            (j + 1 >= s.size() || !std::isalnum(static_cast<unsigned char>(s[j + 1])))) {
          adv(j - i + 1, static_cast<int>(j - i + 1));
          if (digits == "0") { push(Tok::FaceBot); continue; }
          if (digits == "1") { push(Tok::FaceTop); continue; }
          err("only 0f and 1f are face literals");
        }
        adv(j - i, static_cast<int>(j - i));
        t.k = Tok::Number;
        t.num = std::stoi(digits);
        t.text = digits;
        out.push_back(t);
        continue;
      }
      if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
        size_t j = i;
        while (j < s.size() &&
               (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_' || s[j] == '\''))
          j++;
        std::string word = s.substr(i, j - i);
        adv(j - i, static_cast<int>(j - i));
        if (word.size() > 1 && word[0] == 'U' &&
            word.find_first_not_of("0123456789", 1) == std::string::npos) {
          t.k = Tok::Univ;
          t.num = std::stoi(word.substr(1));
          t.text = word;
          out.push_back(t);
          continue;
        }
        auto it = keywords().find(word);
        if (it != keywords().end()) { push(it->second, word); continue; }
        push(Tok::Ident, word);
        continue;
      }
      err("stray character in input");
    }
  }
};

struct Parser {
  std::vector<Token> ts;
  std::string file;
  size_t p = 0;

  const Token& cur() const { return ts[p]; }
  const Token& peek(size_t n = 1) const { return ts[std::min(p + n, ts.size() - 1)]; }
  bool at(Tok k) const { return cur().k == k; }
  Span here() const { return Span{file, cur().line, cur().col}; }

  [[noreturn]] void err(const std::string& msg) {
    CmttError e(Err::ParseError, "parse", msg);
    e.span = here();
    throw e;
  }

  Token eat() { return ts[p++]; }

  Token expect(Tok k, const char* what) {
    if (!at(k)) err(std::string("expected ") + what);
    return eat();
  }

  bool opt(Tok k) {
    if (at(k)) {
      p++;
      return true;
    }
    return false;
  }

  std::string ident(const char* what) { return expect(Tok::Ident, what).text; }

  // A modality word: IDENT ('.' IDENT)*, or the literal 1 for the identity.
  SWord word() {
    SWord w;
    if (at(Tok::Number) && cur().num == 1) {
      eat();
      return w;
    }
    w.push_back(ident("modality generator"));
    while (at(Tok::Dot) && peek().k == Tok::Ident) {
      eat();
      w.push_back(ident("modality generator"));
    }
    return w;
  }

  // Is `[` at p the start of a modality prefix `[w]`? Words never contain
  // arrows or pipes, so scan for the closing bracket.
  bool bracket_is_word() const {
    size_t q = p + 1;
    if (ts[q].k == Tok::Number && ts[q].num == 1 && ts[q + 1].k == Tok::RBrack) return true;
    while (ts[q].k == Tok::Ident) {
      q++;
      if (ts[q].k == Tok::RBrack) return true;
      if (ts[q].k != Tok::Dot) return false;
      q++;
    }
    return false;
  }

  SWord bracket_word() {
    expect(Tok::LBrack, "[");
    SWord w = word();
    expect(Tok::RBrack, "]");
    return w;
  }

  // `box_l`, `box_` followed by a unicode generator, or `box` with an
  // optional bracket word. Returns false when the cursor is not a box head.
  bool box_head(SWord& w) {
    if (at(Tok::KwBox)) {
      eat();
      if (at(Tok::LBrack)) w = bracket_word();
      return true;
    }
    if (at(Tok::Ident) && cur().text.rfind("box_", 0) == 0) {
      std::string suffix = eat().text.substr(4);
      if (suffix.empty())
        w.push_back(ident("modality generator"));
      else if (suffix != "1")
        w.push_back(suffix);
      while (at(Tok::Dot) && peek().k == Tok::Ident) {
        eat();
        w.push_back(eat().text);
      }
      return true;
    }
    return false;
  }

  SPtr expr() { return arrow(); }

  // Right-associative function space, with optional binder groups and
  // modality-annotated domains.
  SPtr arrow() {
    Span sp = here();
    if (at(Tok::LBrack) && bracket_is_word()) {
      SWord mu = bracket_word();
      SPtr dom = sigma();
      expect(Tok::Arrow, "-> after modal domain");
      SPtr cod = arrow();
      return mk_s(SExpr::Arrow{"_", std::move(mu), dom, cod}, sp);
    }
    if (at(Tok::LParen) && binder_group_ahead()) return binder_group();
    SPtr lhs = sigma();
    if (opt(Tok::Arrow)) {
      SPtr cod = arrow();
      return mk_s(SExpr::Arrow{"_", {}, lhs, cod}, sp);
    }
    return lhs;
  }

  // `(x y : ...` introduces binders; anything else after `(` is an ordinary
  // parenthesized form.
  bool binder_group_ahead() const {
    size_t q = p + 1;
    if (ts[q].k != Tok::Ident) return false;
    while (ts[q].k == Tok::Ident) q++;
    return ts[q].k == Tok::Colon;
  }

  SPtr binder_group() {
    Span sp = here();
    expect(Tok::LParen, "(");
    std::vector<std::string> names;
    while (at(Tok::Ident)) names.push_back(eat().text);
    expect(Tok::Colon, ": in binder");
    SWord mu;
    if (at(Tok::LBrack) && bracket_is_word()) mu = bracket_word();
    SPtr dom = expr();
    expect(Tok::RParen, ") closing binder");
    if (opt(Tok::Arrow)) {
      SPtr cod = arrow();
      for (auto it = names.rbegin(); it != names.rend(); ++it)
        cod = mk_s(SExpr::Arrow{*it, mu, dom, cod}, sp);
      return cod;
    }
    if (opt(Tok::Star)) {
      if (names.size() != 1) err("pair type binds exactly one name");
      if (!mu.empty()) err("pair components carry no modality");
      SPtr snd = arrow();
      return mk_s(SExpr::SigmaT{names[0], dom, snd}, sp);
    }
    err("binder group must be followed by -> or *");
  }

  SPtr sigma() {
    Span sp = here();
    SPtr a = join();
    if (opt(Tok::Star)) {
      SPtr b = sigma();
      return mk_s(SExpr::SigmaT{"_", a, b}, sp);
    }
    return a;
  }

  SPtr join() {
    Span sp = here();
    SPtr a = meet();
    while (opt(Tok::Vee)) {
      SPtr b = meet();
      a = mk_s(SExpr::Join{a, b}, sp);
    }
    return a;
  }

  SPtr meet() {
    Span sp = here();
    SPtr a = papp();
    while (opt(Tok::Wedge)) {
      SPtr b = papp();
      a = mk_s(SExpr::Meet{a, b}, sp);
    }
    return a;
  }

  SPtr papp() {
    Span sp = here();
    SPtr a = app();
    while (opt(Tok::At)) {
      SPtr r = app();
      a = mk_s(SExpr::PathApp{a, r}, sp);
    }
    return a;
  }

  bool starts_atom() const {
    switch (cur().k) {
      case Tok::Ident:
      case Tok::Number:
      case Tok::Univ:
      case Tok::FaceBot:
      case Tok::FaceTop:
      case Tok::KwBool:
      case Tok::KwTrue:
      case Tok::KwFalse:
      case Tok::KwPath:
      case Tok::KwComp:
      case Tok::KwBox:
      case Tok::KwLet:
      case Tok::KwBoolElim:
      case Tok::KwEl:
      case Tok::LParen:
      case Tok::LAngle:
      case Tok::LBrack:
      case Tok::Lambda:
      case Tok::Tilde:
        return true;
      default:
        return false;
    }
  }

  SPtr app() {
    Span sp = here();
    SPtr a = prefix();
    for (;;) {
      if (at(Tok::Zap)) {
        Span zs = here();
        eat();
        SPtr b = prefix();
        SPtr z = mk_s(SExpr::Name{"zapp", false, {}}, zs);
        a = mk_s(SExpr::App{mk_s(SExpr::App{z, a}, zs), b}, zs);
        continue;
      }
      if (!starts_atom()) return a;
      // `<` only continues an application when it opens a path abstraction
      // or modal type, which both parse as atoms; fine either way.
      SPtr b = prefix();
      a = mk_s(SExpr::App{a, b}, sp);
    }
  }

  SPtr prefix() {
    Span sp = here();
    if (opt(Tok::Tilde)) {
      SPtr r = prefix();
      return mk_s(SExpr::Neg{r}, sp);
    }
    return postfix();
  }

  SPtr postfix() {
    SPtr a = atom();
    for (;;) {
      Span sp = here();
      if (at(Tok::Dot) && peek().k == Tok::Number) {
        int n = peek(1).num;
        if (n != 1 && n != 2) err("projection must be .1 or .2");
        eat();
        eat();
        a = mk_s(SExpr::Proj{a, n}, sp);
        continue;
      }
      if (at(Tok::Caret)) {
        // explicit crossing annotation on a variable occurrence
        eat();
        SWord w;
        if (at(Tok::LBrack))
          w = bracket_word();
        else
          w = word();
        auto* nm = std::get_if<SExpr::Name>(&a->v);
        if (!nm) err("^ annotates a variable occurrence");
        nm->has_ann = true;
        nm->ann = std::move(w);
        continue;
      }
      return a;
    }
  }

  std::vector<std::pair<SPtr, SPtr>> branches() {
    std::vector<std::pair<SPtr, SPtr>> out;
    if (at(Tok::RBrack)) return out;
    for (;;) {
      SPtr phi = join();
      expect(Tok::Arrow, "-> in system branch");
      SPtr rhs = expr();
      out.emplace_back(phi, rhs);
      if (!opt(Tok::Pipe)) return out;
    }
  }

  SPtr atom() {
    Span sp = here();
    switch (cur().k) {
      case Tok::Ident: {
        if (cur().text.rfind("box_", 0) == 0) {
          SWord mu;
          box_head(mu);
          SPtr body = postfix();
          return mk_s(SExpr::Box{std::move(mu), body}, sp);
        }
        Token t = eat();
        return mk_s(SExpr::Name{t.text, false, {}}, sp);
      }
      case Tok::Number: {
        Token t = eat();
        if (t.num != 0 && t.num != 1) err("only the endpoints 0 and 1 are interval literals");
        return mk_s(SExpr::Num{t.num}, sp);
      }
      case Tok::Univ: {
        Token t = eat();
        return mk_s(SExpr::UnivE{t.num}, sp);
      }
      case Tok::FaceBot: eat(); return mk_s(SExpr::FaceLit{false}, sp);
      case Tok::FaceTop: eat(); return mk_s(SExpr::FaceLit{true}, sp);
      case Tok::KwBool: eat(); return mk_s(SExpr::BoolT{}, sp);
      case Tok::KwTrue: eat(); return mk_s(SExpr::TrueE{}, sp);
      case Tok::KwFalse: eat(); return mk_s(SExpr::FalseE{}, sp);
      case Tok::KwEl: {
        eat();
        SPtr e = postfix();
        return mk_s(SExpr::ElE{e}, sp);
      }
      case Tok::Lambda: {
        eat();
        std::vector<std::string> params;
        while (at(Tok::Ident)) params.push_back(eat().text);
        if (params.empty()) err("lambda needs at least one parameter");
        expect(Tok::Dot, ". after lambda parameters");
        SPtr body = expr();
        return mk_s(SExpr::Lam{std::move(params), body}, sp);
      }
      case Tok::KwPath: {
        eat();
        std::string iv;
        if (opt(Tok::Caret)) iv = ident("line binder");
        SPtr line = postfix();
        SPtr a0 = postfix();
        SPtr a1 = postfix();
        return mk_s(SExpr::PathT{iv, line, a0, a1}, sp);
      }
      case Tok::KwComp: {
        eat();
        expect(Tok::Caret, "^ after comp");
        std::string iv = ident("composition binder");
        SPtr line = postfix();
        expect(Tok::LBrack, "[ opening tube");
        auto tube = branches();
        expect(Tok::RBrack, "] closing tube");
        SPtr cap = postfix();
        return mk_s(SExpr::Comp{iv, line, std::move(tube), cap}, sp);
      }
      case Tok::KwBox: {
        SWord mu;
        box_head(mu);
        SPtr body = postfix();
        return mk_s(SExpr::Box{std::move(mu), body}, sp);
      }
      case Tok::KwLet: {
        eat();
        SWord outer;
        if (at(Tok::LBrack)) outer = bracket_word();
        SWord boxed;
        if (!box_head(boxed)) err("expected box after let");
        std::string x = ident("bound name");
        if (!opt(Tok::ColonEq) && !opt(Tok::Eq)) err("expected = in let");
        SPtr scrut = expr();
        expect(Tok::KwIn, "in");
        SPtr body = expr();
        return mk_s(SExpr::LetMod{std::move(outer), std::move(boxed), x, scrut, body}, sp);
      }
      case Tok::KwBoolElim: {
        eat();
        expect(Tok::LParen, "( opening motive");
        std::string x = ident("motive binder");
        expect(Tok::Dot, ". in motive");
        SPtr motive = expr();
        expect(Tok::RParen, ") closing motive");
        SPtr tt = postfix();
        SPtr ff = postfix();
        SPtr scrut = postfix();
        return mk_s(SExpr::BoolElim{x, motive, tt, ff, scrut}, sp);
      }
      case Tok::LBrack: {
        eat();
        auto br = branches();
        expect(Tok::RBrack, "] closing system");
        return mk_s(SExpr::Sys{std::move(br)}, sp);
      }
      case Tok::LAngle: {
        eat();
        // <i> e / <i j> e is a path binder; <w | A> is a modal type.
        if (at(Tok::Number) && cur().num == 1) {
          eat();
          expect(Tok::Pipe, "| in modal type");
          SPtr inner = expr();
          expect(Tok::RAngle, "> closing modal type");
          return mk_s(SExpr::ModalT{{}, inner}, sp);
        }
        std::vector<std::string> names;
        names.push_back(ident("interval binder or modality"));
        if (at(Tok::Dot) || at(Tok::Pipe)) {
          SWord w;
          w.push_back(names[0]);
          while (opt(Tok::Dot)) w.push_back(ident("modality generator"));
          expect(Tok::Pipe, "| in modal type");
          SPtr inner = expr();
          expect(Tok::RAngle, "> closing modal type");
          return mk_s(SExpr::ModalT{std::move(w), inner}, sp);
        }
        while (at(Tok::Ident)) names.push_back(eat().text);
        expect(Tok::RAngle, "> closing path binder");
        SPtr body = papp();
        for (auto it = names.rbegin(); it != names.rend(); ++it)
          body = mk_s(SExpr::PathAbs{*it, body}, sp);
        return body;
      }
      case Tok::LParen: {
        eat();
        SPtr a = expr();
        if (opt(Tok::RParen)) return a;
        if (opt(Tok::Comma)) {
          SPtr b = expr();
          while (opt(Tok::Comma)) {
            SPtr c = expr();
            b = mk_s(SExpr::PairE{b, c}, sp);
          }
          expect(Tok::RParen, ") closing pair");
          return mk_s(SExpr::PairE{a, b}, sp);
        }
        if (opt(Tok::Eq)) {
          Token t = expect(Tok::Number, "0 or 1 in face constraint");
          if (t.num != 0 && t.num != 1) err("faces equate against 0 or 1");
          expect(Tok::RParen, ") closing face constraint");
          return mk_s(SExpr::FaceEq{a, t.num}, sp);
        }
        err("unterminated parenthesized form");
      }
      default:
        err("expected an expression");
    }
  }

  SDecl decl() {
    SDecl d;
    d.span = here();
    if (opt(Tok::KwDef))
      d.kind = SDecl::Kind::Def;
    else if (opt(Tok::KwAxiom))
      d.kind = SDecl::Kind::Axiom;
    else if (opt(Tok::KwTheorem))
      d.kind = SDecl::Kind::Theorem;
    else
      err("expected def, axiom or theorem");
    d.name = ident("declaration name");
    if (opt(Tok::At)) d.mode = ident("mode name");
    // parameter telescope, sugar for leading Pi types and lambdas
    std::vector<std::pair<std::string, std::pair<SWord, SPtr>>> tel;
    while (at(Tok::LParen) && binder_group_ahead()) {
      Span gs = here();
      eat();
      std::vector<std::string> names;
      while (at(Tok::Ident)) names.push_back(eat().text);
      expect(Tok::Colon, ": in parameter");
      SWord mu;
      if (at(Tok::LBrack) && bracket_is_word()) mu = bracket_word();
      SPtr dom = expr();
      expect(Tok::RParen, ") closing parameter");
      (void)gs;
      for (auto& n : names) tel.emplace_back(n, std::make_pair(mu, dom));
    }
    expect(Tok::Colon, ": before declaration type");
    d.type = expr();
    for (auto it = tel.rbegin(); it != tel.rend(); ++it)
      d.type = mk_s(SExpr::Arrow{it->first, it->second.first, it->second.second, d.type}, d.span);
    if (d.kind == SDecl::Kind::Axiom) {
      if (opt(Tok::KwUnfold)) {
        if (!opt(Tok::ColonEq) && !opt(Tok::Eq)) err("expected := after unfold");
        d.unfold = expr();
      }
    } else {
      expect(Tok::ColonEq, ":= before declaration body");
      d.body = expr();
      if (!tel.empty()) {
        std::vector<std::string> params;
        for (auto& [n, _] : tel) params.push_back(n);
        d.body = mk_s(SExpr::Lam{std::move(params), d.body}, d.span);
      }
    }
    return d;
  }
};

// Canonical printing. Precedence levels mirror the parser: 0 arrow/lambda,
// 1 sigma, 2 join, 3 meet, 4 path application, 5 application and the prefix
// keyword forms, 6 negation, 7 postfix, 8 atoms.
std::string show_sword(const SWord& w) {
  if (w.empty()) return "1";
  std::string out = w[0];
  for (size_t k = 1; k < w.size(); k++) out += "." + w[k];
  return out;
}

std::string pr(const SPtr& e, int prec);

std::string wrap(int mine, int prec, const std::string& s) {
  return mine < prec ? "(" + s + ")" : s;
}

std::string pr_branches(const std::vector<std::pair<SPtr, SPtr>>& br) {
  std::string out = "[";
  for (size_t k = 0; k < br.size(); k++) {
    if (k) out += " |";
    out += " " + pr(br[k].first, 2) + " -> " + pr(br[k].second, 0);
  }
  return out + (br.empty() ? "]" : " ]");
}

std::string pr(const SPtr& e, int prec) {
  return std::visit(
      [&](const auto& n) -> std::string {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, SExpr::Name>) {
          std::string s = n.id;
          if (n.has_ann) s += "^" + show_sword(n.ann);
          return s;
        } else if constexpr (std::is_same_v<T, SExpr::Num>) {
          return std::to_string(n.v);
        } else if constexpr (std::is_same_v<T, SExpr::Lam>) {
          std::string s = "\\";
          for (size_t k = 0; k < n.params.size(); k++) s += (k ? " " : "") + n.params[k];
          return wrap(0, prec, s + ". " + pr(n.body, 0));
        } else if constexpr (std::is_same_v<T, SExpr::App>) {
          return wrap(5, prec, pr(n.f, 5) + " " + pr(n.a, 6));
        } else if constexpr (std::is_same_v<T, SExpr::Arrow>) {
          std::string dom = n.mu.empty() ? pr(n.dom, 0) : "[" + show_sword(n.mu) + "] " + pr(n.dom, 0);
          return wrap(0, prec, "(" + n.x + " : " + dom + ") -> " + pr(n.cod, 0));
        } else if constexpr (std::is_same_v<T, SExpr::SigmaT>) {
          return wrap(0, prec, "(" + n.x + " : " + pr(n.fst, 0) + ") * " + pr(n.snd, 0));
        } else if constexpr (std::is_same_v<T, SExpr::PathT>) {
          std::string head = n.i.empty() ? "Path" : "Path^" + n.i;
          return wrap(5, prec,
                      head + " " + pr(n.line, 7) + " " + pr(n.a0, 7) + " " + pr(n.a1, 7));
        } else if constexpr (std::is_same_v<T, SExpr::ModalT>) {
          return "<" + show_sword(n.mu) + " | " + pr(n.inner, 0) + ">";
        } else if constexpr (std::is_same_v<T, SExpr::Box>) {
          return wrap(5, prec, "box[" + show_sword(n.mu) + "] " + pr(n.body, 7));
        } else if constexpr (std::is_same_v<T, SExpr::LetMod>) {
          std::string s = "let";
          if (!n.outer.empty()) s += "[" + show_sword(n.outer) + "]";
          s += " box";
          if (!n.boxed.empty()) s += "[" + show_sword(n.boxed) + "]";
          s += " " + n.x + " := " + pr(n.scrut, 0) + " in " + pr(n.body, 0);
          return wrap(0, prec, s);
        } else if constexpr (std::is_same_v<T, SExpr::PathAbs>) {
          return wrap(0, prec, "<" + n.i + "> " + pr(n.body, 4));
        } else if constexpr (std::is_same_v<T, SExpr::PathApp>) {
          return wrap(4, prec, pr(n.p, 4) + " @ " + pr(n.r, 5));
        } else if constexpr (std::is_same_v<T, SExpr::Neg>) {
          return wrap(6, prec, "~" + pr(n.r, 6));
        } else if constexpr (std::is_same_v<T, SExpr::Meet>) {
          return wrap(3, prec, pr(n.a, 3) + " /\\ " + pr(n.b, 4));
        } else if constexpr (std::is_same_v<T, SExpr::Join>) {
          return wrap(2, prec, pr(n.a, 2) + " \\/ " + pr(n.b, 3));
        } else if constexpr (std::is_same_v<T, SExpr::FaceEq>) {
          return "(" + pr(n.r, 2) + " = " + std::to_string(n.end) + ")";
        } else if constexpr (std::is_same_v<T, SExpr::FaceLit>) {
          return n.top ? "1f" : "0f";
        } else if constexpr (std::is_same_v<T, SExpr::Sys>) {
          return pr_branches(n.branches);
        } else if constexpr (std::is_same_v<T, SExpr::Comp>) {
          return wrap(5, prec, "comp^" + n.i + " " + pr(n.line, 7) + " " + pr_branches(n.tube) +
                                   " " + pr(n.cap, 7));
        } else if constexpr (std::is_same_v<T, SExpr::PairE>) {
          return "(" + pr(n.a, 0) + ", " + pr(n.b, 0) + ")";
        } else if constexpr (std::is_same_v<T, SExpr::Proj>) {
          return wrap(7, prec, pr(n.p, 7) + "." + std::to_string(n.which));
        } else if constexpr (std::is_same_v<T, SExpr::UnivE>) {
          return "U" + std::to_string(n.level);
        } else if constexpr (std::is_same_v<T, SExpr::BoolT>) {
          return "Bool";
        } else if constexpr (std::is_same_v<T, SExpr::TrueE>) {
          return "true";
        } else if constexpr (std::is_same_v<T, SExpr::FalseE>) {
          return "false";
        } else if constexpr (std::is_same_v<T, SExpr::BoolElim>) {
          return wrap(5, prec, "boolelim (" + n.x + ". " + pr(n.motive, 0) + ") " +
                                   pr(n.tt, 7) + " " + pr(n.ff, 7) + " " + pr(n.scrut, 7));
        } else {
          static_assert(std::is_same_v<T, SExpr::ElE>);
          return wrap(5, prec, "El " + pr(n.e, 7));
        }
      },
      e->v);
}

}  // namespace

SFile parse_file(const std::string& src, const std::string& filename) {
  Lexer lx(src, filename);
  Parser ps;
  ps.ts = lx.run();
  ps.file = filename;
  SFile f;
  while (!ps.at(Tok::End)) f.decls.push_back(ps.decl());
  return f;
}

std::string print_surface(const SPtr& e) { return pr(e, 0); }

std::string print_surface(const SFile& f) {
  std::string out;
  for (auto& d : f.decls) {
    switch (d.kind) {
      case SDecl::Kind::Def: out += "def "; break;
      case SDecl::Kind::Axiom: out += "axiom "; break;
      case SDecl::Kind::Theorem: out += "theorem "; break;
    }
    out += d.name;
    if (!d.mode.empty()) out += " @ " + d.mode;
    out += " : " + pr(d.type, 0);
    if (d.body) out += " := " + pr(d.body, 0);
    if (d.unfold) out += " unfold := " + pr(d.unfold, 0);
    out += "\n";
  }
  return out;
}

}  // namespace cmtt
