// Part of the cmtt proof checker, under the Apache License v2.0.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "cmtt/diagnostics.hpp"

namespace cmtt {

using ModeId = int;
using GenId = int;
using Word = std::vector<GenId>;

// A 1-cell of the mode theory. `word` is stored in application order:
// word[0] is the first arrow out of `dom`, word.back() lands in `cod`.
// Composition mu∘nu (nu applied first) therefore concatenates nu.word ++ mu.word.
// The empty word is the identity (dom == cod).
struct Modality {
  ModeId dom = 0;
  ModeId cod = 0;
  Word word;

  bool is_identity_word() const { return word.empty(); }
  bool operator==(const Modality& o) const = default;
  bool operator<(const Modality& o) const {
    if (dom != o.dom) return dom < o.dom;
    if (cod != o.cod) return cod < o.cod;
    return word < o.word;
  }
};

struct Generator {
  std::string name;
  ModeId dom, cod;
};

// Directed word rewrite lhs -> rhs; both sides parallel (same endpoints).
struct RewriteRule {
  Word lhs, rhs;
  ModeId dom, cod;
};

// Generating 2-cell src <= dst between parallel words.
struct CellGen {
  Word src, dst;
  ModeId dom, cod;
};

// A finitely presented, poset-enriched 2-category. Immutable once built;
// the derived-cell memo is guarded so instances can be shared across threads.
class ModeTheory {
 public:
  std::string name = "custom";
  std::vector<std::string> modes;
  std::vector<Generator> gens;
  std::vector<RewriteRule> rules;
  std::vector<CellGen> cells;
  int saturation_bound = 16;
  // Builtin presentations have length-bounded normal forms, so exhausting the
  // bounded cell search answers `false` definitively. Custom theories get the
  // conservative behavior (SaturationBound error) when the search was pruned.
  bool complete_within_bound = false;

  static ModeTheory builtin_trivial();
  static ModeTheory builtin_guarded();
  static ModeTheory from_file(const std::string& path);
  static ModeTheory from_string(const std::string& text, const std::string& origin);

  // Throws Err::Config on malformed presentations (dangling modes, rule sides
  // that do not compose or are non-parallel, bound < 1).
  void validate() const;

  ModeId mode_id(const std::string& n) const;
  std::optional<ModeId> find_mode(const std::string& n) const;
  std::optional<GenId> find_gen(const std::string& n) const;
  const std::string& mode_name(ModeId m) const;

  Modality identity(ModeId m) const { return Modality{m, m, {}}; }
  Modality gen_mod(GenId g) const;
  // Builds a modality from generator names listed in composition order
  // (first name applied last); used by the surface parser.
  Modality from_names_compose_order(const std::vector<std::string>& names, ModeId fallback_mode) const;

  // mu∘nu, nu applied first. Requires nu.cod == mu.dom. Result is normalized.
  Modality compose(const Modality& mu, const Modality& nu) const;
  Modality normalize(const Modality& mu) const;
  Word normalize_word(Word w, ModeId dom) const;
  bool mod_equal(const Modality& mu, const Modality& nu) const;
  // True iff a 2-cell src => dst is derivable. Requires parallel arguments.
  bool cell_exists(const Modality& src, const Modality& dst) const;

  std::string show(const Modality& mu) const;  // composition order, "1_m" for identities
  std::string show_word(const Word& w, ModeId dom) const;

  // Mode of the word's endpoint starting from `dom`; checks composability.
  ModeId word_cod(const Word& w, ModeId dom) const;

  ModeTheory() = default;
  // Copies get a fresh memo so a copied-and-edited presentation cannot see
  // stale derived cells.
  ModeTheory(const ModeTheory& o) { *this = o; }
  ModeTheory& operator=(const ModeTheory& o);

 private:
  struct Closure {
    std::set<Word> reachable;
    bool pruned = false;
  };
  const Closure& closure_from(const Word& src, ModeId dom) const;

  struct Memo {
    std::mutex mu;
    std::map<std::pair<ModeId, Word>, Closure> closures;
  };
  std::shared_ptr<Memo> memo_ = std::make_shared<Memo>();
};

}  // namespace cmtt
