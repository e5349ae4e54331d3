// Part of the cmtt proof checker, under the Apache License v2.0.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <exception>
#include <string>

namespace cmtt {

// Source location, 1-based. line == 0 means "no span available".
struct Span {
  std::string file;
  int line = 0;
  int col = 0;
};

enum class Err {
  // configuration / presentation problems (CLI exit code 2)
  Config,
  // resource caps (CLI exit code 3)
  SaturationBound,
  ClauseBudget,
  UnfoldFuel,
  // everything below is an ordinary check failure (CLI exit code 1)
  ModeMismatch,
  UnknownName,
  ScopeError,
  LockMismatch,
  TypeMismatch,
  NotAFunction,
  NotAPath,
  NotModal,
  NotAPair,
  NotAUniverse,
  LevelMismatch,
  CoverNotTotal,
  OverlapMismatch,
  BoundaryMismatch,
  EndpointMismatch,
  MalformedSubstitution,
  FaceInconsistent,
  ParseError,
  DuplicateName,
  Internal,
};

const char* err_name(Err e);

// Every kernel/front-end failure is thrown as one of these. `rule` names the
// judgment-level rule whose premise failed, when one applies; diagnostics
// render it verbatim, and the negative golden tests match on it.
class CmttError : public std::exception {
 public:
  Err code;
  std::string rule;     // e.g. "term/var", "term-eq/pi-beta"
  std::string message;
  std::string decl;     // declaration being checked, if any
  std::string mode;     // mode at the failure point, if known
  std::string clause;   // face clause under which the failure happened
  Span span;

  CmttError(Err c, std::string rule_, std::string msg)
      : code(c), rule(std::move(rule_)), message(std::move(msg)) {}

  const char* what() const noexcept override { return message.c_str(); }
};

[[noreturn]] inline void fail(Err c, const std::string& rule, const std::string& msg) {
  throw CmttError(c, rule, msg);
}

// Exit-code classification used by the CLI.
inline int exit_code_for(Err e) {
  switch (e) {
    case Err::Config: return 2;
    case Err::SaturationBound:
    case Err::ClauseBudget:
    case Err::UnfoldFuel: return 3;
    default: return 1;
  }
}

}  // namespace cmtt
