// Part of the cmtt proof checker, under the Apache License v2.0.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <functional>
#include <stdexcept>
#include <string>

#include "cmtt/driver.hpp"
#include "cmtt/kan.hpp"

// Shared fixtures for the kernel test binaries. Failed expectations throw
// std::runtime_error so the same cases drive doctest and the acceptance
// runner.

namespace tt {

using namespace cmtt;

[[noreturn]] void bail(const std::string& msg);
void req(bool ok, const std::string& msg);

const ModeTheory& guarded();
const ModeTheory& trivial();

// Generator/modality shorthands for the guarded theory.
Modality g_id_t();
Modality g_id_s();
Modality g_l();   // t -> t
Modality g_g();   // t -> s
Modality g_d();   // s -> t
Modality g_ll();  // l . l
Modality g_dg();  // d . g : t -> t
Modality g_gd();  // g . d : s -> s (rewrites to 1_s)

// A checking context over its own signature.
struct Jig {
  const ModeTheory* th;
  Signature sig;
  Ctx ctx;

  explicit Jig(const ModeTheory& t, const std::string& mode = "", bool strict = false);

  // Parses, elaborates and kernel-checks declarations into the signature.
  Jig& decls(const std::string& src);

  Ev ev() const { return ctx.ev; }
};

// Full surface pipeline over a fresh signature; throws on any failure.
Signature check_src(const ModeTheory& th, const std::string& src, bool strict = false);

// Runs `f`, requiring a CmttError with the given code and rule.
void expect_fail(const std::function<void()>& f, Err code, const std::string& rule);
// Same via the surface pipeline.
void expect_src_fail(const ModeTheory& th, const std::string& src, Err code,
                     const std::string& rule);

// Typed conversion judgments in a context. `ty` is checked first.
bool conv_tm(const Ctx& G, const TyPtr& ty, const TmPtr& a, const TmPtr& b);
bool conv_ty(const Ctx& G, const TyPtr& a, const TyPtr& b);

// check_type followed by check_tm.
void expect_checks(const Ctx& G, const TmPtr& e, const TyPtr& ty);

// Normal form of a term as an s-expression, for golden comparisons.
std::string nf_tm(const Ctx& G, const TmPtr& e, const TyPtr& ty);

// Type of a signature constant rendered by the driver pretty-printer.
std::string decl_type_pretty(const ModeTheory& th, const Signature& sig, const std::string& n);

// Repository root (compile-time constant) for data and corpus paths.
std::string repo_path(const std::string& rel);

// Deterministic splitmix64; all randomized suites derive from fixed seeds.
struct Rng {
  uint64_t state;
  explicit Rng(uint64_t seed) : state(seed) {}
  uint64_t next() {
    uint64_t z = (state += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }
  int below(int n) { return static_cast<int>(next() % static_cast<uint64_t>(n)); }
  bool flip() { return (next() & 1) != 0; }
};

}  // namespace tt
