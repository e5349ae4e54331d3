// Part of the cmtt proof checker, under the Apache License v2.0.
// SPDX-License-Identifier: Apache-2.0
#include "cmtt/mode_theory.hpp"

#include <algorithm>
#include <deque>
#include <fstream>
#include <sstream>

namespace cmtt {

const char* err_name(Err e) {
  switch (e) {
    case Err::Config: return "config";
    case Err::SaturationBound: return "saturation-bound";
    case Err::ClauseBudget: return "clause-budget";
    case Err::UnfoldFuel: return "unfold-fuel";
    case Err::ModeMismatch: return "mode-mismatch";
    case Err::UnknownName: return "unknown-name";
    case Err::ScopeError: return "scope-error";
    case Err::LockMismatch: return "lock-mismatch";
    case Err::TypeMismatch: return "type-mismatch";
    case Err::NotAFunction: return "not-a-function";
    case Err::NotAPath: return "not-a-path";
    case Err::NotModal: return "not-modal";
    case Err::NotAPair: return "not-a-pair";
    case Err::NotAUniverse: return "not-a-universe";
    case Err::LevelMismatch: return "level-mismatch";
    case Err::CoverNotTotal: return "cover-not-total";
    case Err::OverlapMismatch: return "overlap-mismatch";
    case Err::BoundaryMismatch: return "boundary-mismatch";
    case Err::EndpointMismatch: return "endpoint-mismatch";
    case Err::MalformedSubstitution: return "malformed-substitution";
    case Err::FaceInconsistent: return "face-inconsistent";
    case Err::ParseError: return "parse-error";
    case Err::DuplicateName: return "duplicate-name";
    case Err::Internal: return "internal";
  }
  return "unknown";
}

ModeTheory& ModeTheory::operator=(const ModeTheory& o) {
  if (this == &o) return *this;
  name = o.name;
  modes = o.modes;
  gens = o.gens;
  rules = o.rules;
  cells = o.cells;
  saturation_bound = o.saturation_bound;
  complete_within_bound = o.complete_within_bound;
  memo_ = std::make_shared<Memo>();
  return *this;
}

std::optional<ModeId> ModeTheory::find_mode(const std::string& n) const {
  for (size_t i = 0; i < modes.size(); ++i)
    if (modes[i] == n) return static_cast<ModeId>(i);
  return std::nullopt;
}

ModeId ModeTheory::mode_id(const std::string& n) const {
  if (auto m = find_mode(n)) return *m;
  fail(Err::Config, "", "unknown mode '" + n + "' in mode theory '" + name + "'");
}

std::optional<GenId> ModeTheory::find_gen(const std::string& n) const {
  for (size_t i = 0; i < gens.size(); ++i)
    if (gens[i].name == n) return static_cast<GenId>(i);
  return std::nullopt;
}

const std::string& ModeTheory::mode_name(ModeId m) const {
  static const std::string bad = "?";
  if (m < 0 || m >= static_cast<ModeId>(modes.size())) return bad;
  return modes[m];
}

Modality ModeTheory::gen_mod(GenId g) const {
  const Generator& gn = gens.at(g);
  return Modality{gn.dom, gn.cod, {g}};
}

ModeId ModeTheory::word_cod(const Word& w, ModeId dom) const {
  ModeId at = dom;
  for (GenId g : w) {
    const Generator& gn = gens.at(g);
    if (gn.dom != at)
      fail(Err::ModeMismatch, "",
           "word does not compose: generator '" + gn.name + "' expects mode " +
               mode_name(gn.dom) + " but is applied at " + mode_name(at));
    at = gn.cod;
  }
  return at;
}

Word ModeTheory::normalize_word(Word w, ModeId dom) const {
  word_cod(w, dom);  // composability check
  long budget = static_cast<long>(saturation_bound) * (static_cast<long>(w.size()) + 2);
  long steps = 0;
  bool changed = true;
  while (changed) {
    changed = false;
    // leftmost-innermost: scan positions left to right, rules in declaration order
    for (size_t pos = 0; pos < w.size() + 1 && !changed; ++pos) {
      for (const RewriteRule& r : rules) {
        if (pos + r.lhs.size() > w.size()) continue;
        if (r.lhs.empty()) continue;  // identity-expanding rules would loop
        if (!std::equal(r.lhs.begin(), r.lhs.end(), w.begin() + pos)) continue;
        Word next(w.begin(), w.begin() + pos);
        next.insert(next.end(), r.rhs.begin(), r.rhs.end());
        next.insert(next.end(), w.begin() + pos + r.lhs.size(), w.end());
        w = std::move(next);
        changed = true;
        if (++steps > budget)
          fail(Err::Config, "",
               "rewriting in mode theory '" + name + "' exceeded " + std::to_string(budget) +
                   " steps; presentation is rejected as non-terminating");
        break;
      }
    }
  }
  return w;
}

Modality ModeTheory::normalize(const Modality& mu) const {
  return Modality{mu.dom, mu.cod, normalize_word(mu.word, mu.dom)};
}

Modality ModeTheory::compose(const Modality& mu, const Modality& nu) const {
  if (nu.cod != mu.dom)
    fail(Err::ModeMismatch, "sb-eq/comp-lock",
         "cannot compose " + show(mu) + " with " + show(nu) + ": codomain " +
             mode_name(nu.cod) + " != domain " + mode_name(mu.dom));
  Word w = nu.word;
  w.insert(w.end(), mu.word.begin(), mu.word.end());
  return Modality{nu.dom, mu.cod, normalize_word(w, nu.dom)};
}

bool ModeTheory::mod_equal(const Modality& mu, const Modality& nu) const {
  if (mu.dom != nu.dom || mu.cod != nu.cod) return false;
  return normalize_word(mu.word, mu.dom) == normalize_word(nu.word, nu.dom);
}

std::string ModeTheory::show_word(const Word& w, ModeId dom) const {
  if (w.empty()) return "1_" + mode_name(dom);
  std::string out;
  // composition order: last applied first
  for (auto it = w.rbegin(); it != w.rend(); ++it) {
    if (!out.empty()) out += "∘";
    out += gens.at(*it).name;
  }
  return out;
}

std::string ModeTheory::show(const Modality& mu) const { return show_word(mu.word, mu.dom); }

Modality ModeTheory::from_names_compose_order(const std::vector<std::string>& names,
                                              ModeId fallback_mode) const {
  // names as written left to right in "a∘b∘c", so application order is reversed
  Word w;
  for (auto it = names.rbegin(); it != names.rend(); ++it) {
    if (auto g = find_gen(*it)) {
      w.push_back(*g);
    } else if (it->rfind("1_", 0) == 0) {
      mode_id(it->substr(2));  // identity segment: contributes nothing, but must name a mode
    } else if (*it == "1") {
      // bare identity
    } else {
      fail(Err::UnknownName, "", "unknown modality generator '" + *it + "'");
    }
  }
  ModeId dom = fallback_mode;
  if (!w.empty()) dom = gens.at(w.front()).dom;
  ModeId cod = word_cod(w, dom);
  return Modality{dom, cod, w};
}

// Derived 2-cells: one step rewrites an occurrence of a generating cell's
// source word to its target word (this is whiskering by the surrounding
// context); reflexivity and transitivity come from the graph search. All
// intermediate words are kept rewrite-normal.
const ModeTheory::Closure& ModeTheory::closure_from(const Word& src, ModeId dom) const {
  std::lock_guard<std::mutex> lk(memo_->mu);
  auto key = std::make_pair(dom, src);
  auto it = memo_->closures.find(key);
  if (it != memo_->closures.end()) return it->second;

  Closure cl;
  std::deque<Word> queue;
  queue.push_back(src);
  cl.reachable.insert(src);
  const size_t node_cap = 200000;
  while (!queue.empty()) {
    Word w = queue.front();
    queue.pop_front();
    // modes at each boundary position of w
    std::vector<ModeId> at(w.size() + 1);
    at[0] = dom;
    for (size_t i = 0; i < w.size(); ++i) at[i + 1] = gens.at(w[i]).cod;
    for (const CellGen& c : cells) {
      for (size_t pos = 0; !c.src.empty() && pos + c.src.size() <= w.size(); ++pos) {
        if (!std::equal(c.src.begin(), c.src.end(), w.begin() + pos)) continue;
        if (at[pos] != c.dom) continue;  // occurrence must sit at the cell's mode
        Word next(w.begin(), w.begin() + pos);
        next.insert(next.end(), c.dst.begin(), c.dst.end());
        next.insert(next.end(), w.begin() + pos + c.src.size(), w.end());
        next = normalize_word(next, dom);
        if (static_cast<int>(next.size()) > saturation_bound) {
          cl.pruned = true;
          continue;
        }
        if (cl.reachable.insert(next).second) {
          if (cl.reachable.size() > node_cap)
            fail(Err::SaturationBound, "sb/key",
                 "cell saturation in mode theory '" + name + "' exceeded " +
                     std::to_string(node_cap) + " words");
          queue.push_back(next);
        }
      }
      // insertion of an identity-sourced cell at any boundary of matching mode
      if (c.src.empty()) {
        for (size_t pos = 0; pos <= w.size(); ++pos) {
          if (at[pos] != c.dom) continue;
          Word next(w.begin(), w.begin() + pos);
          next.insert(next.end(), c.dst.begin(), c.dst.end());
          next.insert(next.end(), w.begin() + pos, w.end());
          next = normalize_word(next, dom);
          if (static_cast<int>(next.size()) > saturation_bound) {
            cl.pruned = true;
            continue;
          }
          if (cl.reachable.insert(next).second) {
            if (cl.reachable.size() > node_cap)
              fail(Err::SaturationBound, "sb/key",
                   "cell saturation in mode theory '" + name + "' exceeded " +
                       std::to_string(node_cap) + " words");
            queue.push_back(next);
          }
        }
      }
    }
  }
  auto [ins, ok] = memo_->closures.emplace(key, std::move(cl));
  (void)ok;
  return ins->second;
}

bool ModeTheory::cell_exists(const Modality& src, const Modality& dst) const {
  if (src.dom != dst.dom || src.cod != dst.cod)
    fail(Err::ModeMismatch, "sb/key",
         "cell query between non-parallel modalities " + show(src) + " and " + show(dst));
  Word s = normalize_word(src.word, src.dom);
  Word d = normalize_word(dst.word, dst.dom);
  if (s == d) return true;  // reflexivity
  const Closure& cl = closure_from(s, src.dom);
  if (cl.reachable.count(d)) return true;
  if (cl.pruned && !complete_within_bound)
    fail(Err::SaturationBound, "sb/key",
         "cell search for " + show(src) + " => " + show(dst) + " in mode theory '" + name +
             "' hit the saturation bound " + std::to_string(saturation_bound) +
             "; answer unknown");
  return false;
}

void ModeTheory::validate() const {
  if (modes.empty()) fail(Err::Config, "", "mode theory '" + name + "' declares no modes");
  if (saturation_bound < 1)
    fail(Err::Config, "", "mode theory '" + name + "' has bound < 1");
  for (const Generator& g : gens) {
    if (g.dom < 0 || g.dom >= static_cast<ModeId>(modes.size()) || g.cod < 0 ||
        g.cod >= static_cast<ModeId>(modes.size()))
      fail(Err::Config, "", "generator '" + g.name + "' mentions an undeclared mode");
  }
  auto check_parallel = [&](const Word& a, const Word& b, ModeId dom, ModeId cod,
                            const char* what) {
    if (word_cod(a, dom) != cod || word_cod(b, dom) != cod)
      fail(Err::Config, "", std::string(what) + " sides are not parallel in '" + name + "'");
  };
  for (const RewriteRule& r : rules) check_parallel(r.lhs, r.rhs, r.dom, r.cod, "rule");
  for (const CellGen& c : cells) check_parallel(c.src, c.dst, c.dom, c.cod, "cell");
}

ModeTheory ModeTheory::builtin_trivial() {
  ModeTheory t;
  t.name = "trivial";
  t.modes = {"m"};
  t.complete_within_bound = true;
  t.validate();
  return t;
}

ModeTheory ModeTheory::builtin_guarded() {
  ModeTheory t;
  t.name = "guarded";
  t.modes = {"t", "s"};
  const ModeId mt = 0, ms = 1;
  t.gens = {
      {"l", mt, mt},  // the later modality
      {"g", mt, ms},  // global sections
      {"d", ms, mt},  // discrete inclusion
  };
  const GenId l = 0, g = 1, d = 2;
  // composition order g∘d = 1_s reads: d first, then g
  t.rules = {
      RewriteRule{{d, g}, {}, ms, ms},    // g∘d = 1_s
      RewriteRule{{l, g}, {g}, mt, ms},   // g∘l = g
  };
  t.cells = {
      CellGen{{g, d}, {}, mt, mt},  // d∘g <= 1_t
      CellGen{{}, {l}, mt, mt},     // 1_t <= l
  };
  t.saturation_bound = 16;
  t.complete_within_bound = true;
  t.validate();
  return t;
}

// ---------------------------------------------------------------------------
// presentation files:
//   mode t;  gen l : t -> t;  rule g ∘ d = 1_s;  cell 1_t <= l;  bound 16;
// Words are ∘- or .-separated generator names, or 1_<mode>.

namespace {

struct PLexer {
  std::string text;
  size_t pos = 0;
  std::string origin;
  int line = 1;

  void skip_ws() {
    while (pos < text.size()) {
      if (text[pos] == '\n') ++line, ++pos;
      else if (isspace(static_cast<unsigned char>(text[pos]))) ++pos;
      else if (text.compare(pos, 2, "--") == 0) {
        while (pos < text.size() && text[pos] != '\n') ++pos;
      } else break;
    }
  }

  [[noreturn]] void err(const std::string& msg) {
    CmttError e(Err::Config, "", origin + ":" + std::to_string(line) + ": " + msg);
    e.span = {origin, line, 1};
    throw e;
  }

  bool ident_char(char c) {
    unsigned char u = static_cast<unsigned char>(c);
    return isalnum(u) || c == '_' || c == '\'' || u >= 0x80;
  }

  std::string next_token() {
    skip_ws();
    if (pos >= text.size()) return "";
    char c = text[pos];
    if (std::string(";:=<>.-").find(c) != std::string::npos || c == '(' || c == ')') {
      // multi-char tokens: -> <=
      if (text.compare(pos, 2, "->") == 0) { pos += 2; return "->"; }
      if (text.compare(pos, 2, "<=") == 0) { pos += 2; return "<="; }
      ++pos;
      return std::string(1, c);
    }
    if (text.compare(pos, 3, "∘") == 0) { pos += 3; return "."; }
    if (!ident_char(c)) err(std::string("unexpected character '") + c + "'");
    size_t start = pos;
    while (pos < text.size() && ident_char(text[pos])) ++pos;
    return text.substr(start, pos - start);
  }

  std::string peek() {
    size_t p = pos;
    int l = line;
    std::string t = next_token();
    pos = p;
    line = l;
    return t;
  }

  void expect(const std::string& t) {
    std::string got = next_token();
    if (got != t) err("expected '" + t + "', got '" + (got.empty() ? "<eof>" : got) + "'");
  }
};

// parses a word written in composition order; returns (word, dom) where word
// is in application order
std::pair<Word, ModeId> parse_word(PLexer& lx, const ModeTheory& t) {
  std::vector<std::string> parts;
  parts.push_back(lx.next_token());
  while (lx.peek() == ".") {
    lx.next_token();
    parts.push_back(lx.next_token());
  }
  Word w;
  std::optional<ModeId> dom;
  for (auto it = parts.rbegin(); it != parts.rend(); ++it) {
    if (it->rfind("1_", 0) == 0) {
      ModeId m = -1;
      if (auto mm = t.find_mode(it->substr(2))) m = *mm;
      else lx.err("unknown mode in '" + *it + "'");
      if (!dom) dom = m;
      continue;
    }
    auto g = t.find_gen(*it);
    if (!g) lx.err("unknown generator '" + *it + "'");
    if (!dom) dom = t.gens[*g].dom;
    w.push_back(*g);
  }
  if (!dom) lx.err("empty word");
  return {w, *dom};
}

}  // namespace

ModeTheory ModeTheory::from_string(const std::string& text, const std::string& origin) {
  ModeTheory t;
  t.name = origin;
  PLexer lx{text, 0, origin, 1};
  // two passes: modes and generators first so rule/cell words can resolve names
  {
    PLexer scan = lx;
    for (std::string tok = scan.next_token(); !tok.empty(); tok = scan.next_token()) {
      if (tok == "mode") {
        std::string n = scan.next_token();
        if (t.find_mode(n)) scan.err("duplicate mode '" + n + "'");
        t.modes.push_back(n);
        scan.expect(";");
      } else if (tok == "gen") {
        std::string n = scan.next_token();
        scan.expect(":");
        std::string dm = scan.next_token();
        scan.expect("->");
        std::string cm = scan.next_token();
        scan.expect(";");
        if (t.find_gen(n)) scan.err("duplicate generator '" + n + "'");
        auto d = t.find_mode(dm), c = t.find_mode(cm);
        if (!d || !c) scan.err("generator '" + n + "' mentions an undeclared mode");
        t.gens.push_back({n, *d, *c});
      } else {
        // skip to ';'
        while (!tok.empty() && tok != ";") tok = scan.next_token();
      }
    }
  }
  for (std::string tok = lx.next_token(); !tok.empty(); tok = lx.next_token()) {
    if (tok == "mode" || tok == "gen") {
      while (!tok.empty() && tok != ";") tok = lx.next_token();
    } else if (tok == "rule") {
      auto [lhs, dl] = parse_word(lx, t);
      lx.expect("=");
      auto [rhs, dr] = parse_word(lx, t);
      lx.expect(";");
      ModeId cod = t.word_cod(lhs, dl);
      if (dr != dl || t.word_cod(rhs, dr) != cod) lx.err("rule sides are not parallel");
      t.rules.push_back({lhs, rhs, dl, cod});
    } else if (tok == "cell") {
      auto [src, ds] = parse_word(lx, t);
      lx.expect("<=");
      auto [dst, dd] = parse_word(lx, t);
      lx.expect(";");
      ModeId cod = t.word_cod(src, ds);
      if (dd != ds || t.word_cod(dst, dd) != cod) lx.err("cell sides are not parallel");
      t.cells.push_back({src, dst, ds, cod});
    } else if (tok == "bound") {
      std::string n = lx.next_token();
      lx.expect(";");
      try {
        t.saturation_bound = std::stoi(n);
      } catch (...) {
        lx.err("bad bound '" + n + "'");
      }
    } else {
      lx.err("unknown statement '" + tok + "'");
    }
  }
  t.validate();
  return t;
}

ModeTheory ModeTheory::from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(Err::Config, "", "cannot open mode theory file '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return from_string(ss.str(), path);
}

}  // namespace cmtt
