// Part of the cmtt proof checker, under the Apache License v2.0.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "cmtt/eval.hpp"

namespace cmtt {

// Composition comp^i line [phi -> tube] cap. line and tube close over the
// direction variable; phi does not mention it. Dispatches on the shape of the
// line at a fresh level and returns a stuck neutral when nothing applies.
VPtr eval_comp(const Ev& E, const TyClosI& line, const FaceDnf& phi, const TmClosI& tube,
               const VPtr& cap);

// Filling: the partial composite from the cap to r along the line. At r = 0
// it returns the cap, at r = 1 the full composite.
VPtr hfill(const Ev& E, const TyClosI& line, const FaceDnf& phi, const TmClosI& tube,
           const VPtr& cap, const IPtr& r);

}  // namespace cmtt
