// Part of the cmtt proof checker, under the Apache License v2.0.
// SPDX-License-Identifier: Apache-2.0
//
// Check/normalize jobs, diagnostics rendering, and the core pretty-printer.

#include "cmtt/driver.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace cmtt {
namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(Err::Config, "driver/io", "cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Modality in the surface bracket spelling: generator names in composition
// order, "1" for identities.
std::string sword(const ModeTheory& th, const Modality& mu) {
  if (mu.word.empty()) return "1";
  std::string out;
  for (auto it = mu.word.rbegin(); it != mu.word.rend(); ++it) {
    if (!out.empty()) out += ".";
    out += th.gens[static_cast<size_t>(*it)].name;
  }
  return out;
}

// Precedence levels as in the surface parser: 0 arrow/binder forms, 2 join,
// 3 meet, 4 path application, 5 application/keyword forms, 6 prefix,
// 7 postfix, 8 atoms.
struct Pp {
  const ModeTheory& th;
  std::vector<std::string> tn, in;

  static std::string wrap(int mine, int prec, const std::string& s) {
    return mine < prec ? "(" + s + ")" : s;
  }

  std::string tvar(int ix) const {
    if (ix < 0 || static_cast<size_t>(ix) >= tn.size()) return "x?" + std::to_string(ix);
    return tn[tn.size() - 1 - static_cast<size_t>(ix)];
  }
  std::string ivar(int ix) const {
    if (ix < 0 || static_cast<size_t>(ix) >= in.size()) return "i?" + std::to_string(ix);
    return in[in.size() - 1 - static_cast<size_t>(ix)];
  }
  std::string fresh_t() { return "x" + std::to_string(tn.size()); }
  std::string fresh_i() { return "i" + std::to_string(in.size()); }

  std::string pint(const IPtr& r, int prec) {
    return std::visit(
        [&](const auto& n) -> std::string {
          using T = std::decay_t<decltype(n)>;
          if constexpr (std::is_same_v<T, IExpr::Zero>) return "0";
          else if constexpr (std::is_same_v<T, IExpr::One>) return "1";
          else if constexpr (std::is_same_v<T, IExpr::Var>) {
            std::string s = ivar(n.ix);
            if (!n.ann.is_identity_word()) s += "^" + sword(th, n.ann);
            return s;
          } else if constexpr (std::is_same_v<T, IExpr::Neg>)
            return wrap(6, prec, "~" + pint(n.r, 6));
          else if constexpr (std::is_same_v<T, IExpr::Meet>)
            return wrap(3, prec, pint(n.a, 3) + " /\\ " + pint(n.b, 4));
          else if constexpr (std::is_same_v<T, IExpr::Join>)
            return wrap(2, prec, pint(n.a, 2) + " \\/ " + pint(n.b, 3));
          else
            return sexpr_int(th, mk_isub(n.r, n.s));
        },
        r->v);
  }

  std::string pface(const FPtr& f, int prec) {
    return std::visit(
        [&](const auto& n) -> std::string {
          using T = std::decay_t<decltype(n)>;
          if constexpr (std::is_same_v<T, FExpr::Bot>) return "0f";
          else if constexpr (std::is_same_v<T, FExpr::Top>) return "1f";
          else if constexpr (std::is_same_v<T, FExpr::Eq0>)
            return "(" + pint(n.r, 2) + " = 0)";
          else if constexpr (std::is_same_v<T, FExpr::Eq1>)
            return "(" + pint(n.r, 2) + " = 1)";
          else if constexpr (std::is_same_v<T, FExpr::Meet>)
            return wrap(3, prec, pface(n.a, 3) + " /\\ " + pface(n.b, 4));
          else if constexpr (std::is_same_v<T, FExpr::Join>)
            return wrap(2, prec, pface(n.a, 2) + " \\/ " + pface(n.b, 3));
          else
            return sexpr_face(th, mk_fsub(n.f, n.s));
        },
        f->v);
  }

  template <class Branches>
  std::string pbranches(const Branches& br, bool tube_binder) {
    std::string out = "[";
    for (size_t k = 0; k < br.size(); k++) {
      if (k) out += " |";
      out += " " + pface(br[k].first, 2) + " -> ";
      if constexpr (std::is_same_v<std::decay_t<decltype(br[k].second)>, TmPtr>)
        out += ptm(br[k].second, 0);
      else
        out += pty(br[k].second, 0);
    }
    (void)tube_binder;
    return out + (br.empty() ? "]" : " ]");
  }

  std::string pty(const TyPtr& t, int prec) {
    return std::visit(
        [&](const auto& n) -> std::string {
          using T = std::decay_t<decltype(n)>;
          if constexpr (std::is_same_v<T, TyExpr::Pi>) {
            std::string x = fresh_t();
            std::string dom = pty(n.dom, 0);
            if (!n.mu.is_identity_word()) dom = "[" + sword(th, n.mu) + "] " + dom;
            tn.push_back(x);
            std::string cod = pty(n.cod, 0);
            tn.pop_back();
            return wrap(0, prec, "(" + x + " : " + dom + ") -> " + cod);
          } else if constexpr (std::is_same_v<T, TyExpr::Sigma>) {
            std::string x = fresh_t();
            std::string fst = pty(n.fst, 0);
            tn.push_back(x);
            std::string snd = pty(n.snd, 0);
            tn.pop_back();
            return wrap(0, prec, "(" + x + " : " + fst + ") * " + snd);
          } else if constexpr (std::is_same_v<T, TyExpr::Path>) {
            std::string i = fresh_i();
            in.push_back(i);
            std::string line = pty(n.line, 7);
            in.pop_back();
            return wrap(5, prec, "Path^" + i + " " + line + " " + ptm(n.a0, 7) + " " +
                                     ptm(n.a1, 7));
          } else if constexpr (std::is_same_v<T, TyExpr::Modal>) {
            return "<" + sword(th, n.mu) + " | " + pty(n.inner, 0) + ">";
          } else if constexpr (std::is_same_v<T, TyExpr::Sys>) {
            return pbranches(n.branches, false);
          } else if constexpr (std::is_same_v<T, TyExpr::Bool>) {
            return "Bool";
          } else if constexpr (std::is_same_v<T, TyExpr::Univ>) {
            return "U" + std::to_string(n.level);
          } else if constexpr (std::is_same_v<T, TyExpr::El>) {
            return wrap(5, prec, "El " + ptm(n.code, 7));
          } else {
            static_assert(std::is_same_v<T, TyExpr::Sub>);
            return sexpr_ty(th, ty_sub(n.a, n.s));
          }
        },
        t->v);
  }

  std::string ptm(const TmPtr& e, int prec) {
    return std::visit(
        [&](const auto& n) -> std::string {
          using T = std::decay_t<decltype(n)>;
          if constexpr (std::is_same_v<T, TmExpr::Var>) {
            return tvar(n.ix);
          } else if constexpr (std::is_same_v<T, TmExpr::Lam>) {
            std::string params;
            TmPtr body = e;
            size_t pushed = 0;
            while (auto* lm = std::get_if<TmExpr::Lam>(&body->v)) {
              std::string x = fresh_t();
              tn.push_back(x);
              pushed++;
              params += (params.empty() ? "" : " ") + x;
              body = lm->body;
            }
            std::string b = ptm(body, 0);
            for (; pushed; pushed--) tn.pop_back();
            return wrap(0, prec, "\\" + params + ". " + b);
          } else if constexpr (std::is_same_v<T, TmExpr::App>) {
            return wrap(5, prec, ptm(n.f, 5) + " " + ptm(n.a, 6));
          } else if constexpr (std::is_same_v<T, TmExpr::PathAbs>) {
            std::string i = fresh_i();
            in.push_back(i);
            std::string b = ptm(n.body, 4);
            in.pop_back();
            return wrap(0, prec, "<" + i + "> " + b);
          } else if constexpr (std::is_same_v<T, TmExpr::PathApp>) {
            return wrap(4, prec, ptm(n.p, 4) + " @ " + pint(n.r, 5));
          } else if constexpr (std::is_same_v<T, TmExpr::MkBox>) {
            return wrap(5, prec, "box[" + sword(th, n.mu) + "] " + ptm(n.body, 7));
          } else if constexpr (std::is_same_v<T, TmExpr::LetMod>) {
            std::string s = "let";
            if (!n.mu.is_identity_word()) s += "[" + sword(th, n.mu) + "]";
            s += " box[" + sword(th, n.nu) + "]";
            std::string x = fresh_t();
            std::string scrut = ptm(n.scrut, 0);
            tn.push_back(x);
            std::string branch = ptm(n.branch, 0);
            tn.pop_back();
            return wrap(0, prec, s + " " + x + " := " + scrut + " in " + branch);
          } else if constexpr (std::is_same_v<T, TmExpr::SysT>) {
            return pbranches(n.branches, false);
          } else if constexpr (std::is_same_v<T, TmExpr::Comp>) {
            std::string i = fresh_i();
            std::string phi = pface(n.phi, 2);
            in.push_back(i);
            std::string line = pty(n.line, 7);
            std::string tube = ptm(n.tube, 0);
            in.pop_back();
            std::string cap = ptm(n.cap, 7);
            return wrap(5, prec,
                        "comp^" + i + " " + line + " [ " + phi + " -> " + tube + " ] " + cap);
          } else if constexpr (std::is_same_v<T, TmExpr::Pair>) {
            return "(" + ptm(n.fst, 0) + ", " + ptm(n.snd, 0) + ")";
          } else if constexpr (std::is_same_v<T, TmExpr::Fst>) {
            return wrap(7, prec, ptm(n.p, 7) + ".1");
          } else if constexpr (std::is_same_v<T, TmExpr::Snd>) {
            return wrap(7, prec, ptm(n.p, 7) + ".2");
          } else if constexpr (std::is_same_v<T, TmExpr::True>) {
            return "true";
          } else if constexpr (std::is_same_v<T, TmExpr::False>) {
            return "false";
          } else if constexpr (std::is_same_v<T, TmExpr::BoolElim>) {
            std::string x = fresh_t();
            tn.push_back(x);
            std::string motive = pty(n.motive, 0);
            tn.pop_back();
            return wrap(5, prec, "boolelim (" + x + ". " + motive + ") " + ptm(n.tt, 7) + " " +
                                     ptm(n.ff, 7) + " " + ptm(n.scrut, 7));
          } else if constexpr (std::is_same_v<T, TmExpr::Code>) {
            return pty(n.ty, prec);
          } else if constexpr (std::is_same_v<T, TmExpr::Const>) {
            return n.name;
          } else {
            static_assert(std::is_same_v<T, TmExpr::Sub>);
            return sexpr_tm(th, tm_sub(n.a, n.s));
          }
        },
        e->v);
  }
};

void report(CmttError& e, const DriverOptions& opt, std::ostream& errs) {
  if (opt.json) {
    nlohmann::json j = {
        {"status", "error"},   {"code", err_name(e.code)}, {"rule", e.rule},
        {"message", e.message}, {"decl", e.decl},           {"mode", e.mode},
        {"clause", e.clause},   {"file", e.span.file},      {"line", e.span.line},
        {"col", e.span.col},
    };
    errs << j.dump() << "\n";
    return;
  }
  if (e.span.line > 0) errs << e.span.file << ":" << e.span.line << ":" << e.span.col << ": ";
  errs << "error[" << (e.rule.empty() ? "?" : e.rule) << "] " << err_name(e.code) << ": "
       << e.message;
  std::string tail;
  if (!e.decl.empty()) tail += "decl " + e.decl;
  if (!e.mode.empty()) tail += (tail.empty() ? "" : ", ") + std::string("mode ") + e.mode;
  if (!e.clause.empty()) tail += (tail.empty() ? "" : ", ") + std::string("clause ") + e.clause;
  if (!tail.empty()) errs << " (" << tail << ")";
  errs << "\n";
}

// Parse + elaborate + kernel-check every declaration of every file into sig.
// Declaration names that succeed are appended to `checked`.
void check_files(const ModeTheory& th, Signature& sig, const std::vector<std::string>& files,
                 const DriverOptions& opt, std::vector<std::string>& checked, std::ostream& out) {
  for (auto& path : files) {
    SFile f = parse_file(read_file(path), path);
    for (auto& sd : f.decls) {
      try {
        Decl d = elaborate_decl(th, sig, sd, opt.strict_mod_eq);
        check_decl(th, sig, d, opt.strict_mod_eq);
        checked.push_back(sd.name);
        if (opt.dump_core) {
          const Decl& nd = sig.decls[sig.index.at(sd.name)];
          out << "(decl " << nd.name << " @ " << th.mode_name(nd.mode) << "\n";
          out << "  (type " << sexpr_ty(th, nd.type) << ")";
          if (nd.body) out << "\n  (body " << sexpr_tm(th, nd.body) << ")";
          if (nd.unfold) out << "\n  (unfold " << sexpr_tm(th, nd.unfold) << ")";
          out << ")\n";
        } else if (!opt.json) {
          out << "checked " << sd.name << "\n";
        }
      } catch (CmttError& e) {
        if (e.decl.empty()) e.decl = sd.name;
        if (e.mode.empty()) {
          if (!sd.mode.empty())
            e.mode = sd.mode;
          else if (!th.modes.empty())
            e.mode = th.mode_name(0);
        }
        if (e.span.line == 0) e.span = sd.span;
        throw;
      }
    }
  }
}

}  // namespace

ModeTheory load_mode_theory(const std::string& selector) {
  if (selector == "guarded") return ModeTheory::builtin_guarded();
  if (selector == "trivial") return ModeTheory::builtin_trivial();
  return ModeTheory::from_file(selector);
}

std::string pretty_tm(const ModeTheory& th, const TmPtr& e) {
  Pp p{th, {}, {}};
  return p.ptm(e, 0);
}

std::string pretty_ty(const ModeTheory& th, const TyPtr& t) {
  Pp p{th, {}, {}};
  return p.pty(t, 0);
}

int run_check(const std::vector<std::string>& files, const DriverOptions& opt, std::ostream& out,
              std::ostream& errs) {
  try {
    ModeTheory th = load_mode_theory(opt.mode_theory);
    Signature sig;
    std::vector<std::string> checked;
    check_files(th, sig, files, opt, checked, out);
    if (opt.json) {
      nlohmann::json j = {{"status", "ok"}, {"checked", checked}};
      out << j.dump() << "\n";
    } else {
      out << "ok: " << checked.size() << (checked.size() == 1 ? " declaration" : " declarations")
          << "\n";
    }
    return 0;
  } catch (CmttError& e) {
    report(e, opt, errs);
    return exit_code_for(e.code);
  }
}

int run_normalize(const std::string& file, const std::string& decl, const DriverOptions& opt,
                  std::ostream& out, std::ostream& errs) {
  try {
    ModeTheory th = load_mode_theory(opt.mode_theory);
    Signature sig;
    std::vector<std::string> checked;
    std::ostringstream quiet;
    check_files(th, sig, {file}, opt, checked, quiet);
    const Decl* d = sig.find(decl);
    if (!d) fail(Err::Config, "driver/normalize", "no declaration named '" + decl + "'");
    if (!d->body)
      fail(Err::Config, "driver/normalize", "'" + decl + "' is an axiom; nothing to normalize");
    Ev E;
    E.th = &th;
    E.sig = &sig;
    E.mode = d->mode;
    E.strict_mod_eq = opt.strict_mod_eq;
    VPtr v = eval_tm(E, d->body, Env{});
    TmPtr nf = quote_tm(E, v);
    if (opt.json) {
      nlohmann::json j = {{"status", "ok"}, {"decl", decl}, {"normal", pretty_tm(th, nf)}};
      out << j.dump() << "\n";
    } else {
      out << pretty_tm(th, nf) << "\n";
    }
    return 0;
  } catch (CmttError& e) {
    report(e, opt, errs);
    return exit_code_for(e.code);
  }
}

}  // namespace cmtt
