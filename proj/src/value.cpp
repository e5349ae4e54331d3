// Part of the cmtt proof checker, under the Apache License v2.0.
// SPDX-License-Identifier: Apache-2.0
#include "cmtt/value.hpp"

namespace cmtt {

namespace {
template <class T>
VPtr wrap(T&& x) {
  return std::make_shared<Value>(Value{std::forward<T>(x)});
}
}  // namespace

VPtr mkv(Value::VPi x) { return wrap(std::move(x)); }
VPtr mkv(Value::VSigma x) { return wrap(std::move(x)); }
VPtr mkv(Value::VPath x) { return wrap(std::move(x)); }
VPtr mkv(Value::VModal x) { return wrap(std::move(x)); }
VPtr mkv(Value::VSysTy x) { return wrap(std::move(x)); }
VPtr mkv(Value::VBool x) { return wrap(std::move(x)); }
VPtr mkv(Value::VUniv x) { return wrap(std::move(x)); }
VPtr mkv(Value::VLam x) { return wrap(std::move(x)); }
VPtr mkv(Value::VPathAbs x) { return wrap(std::move(x)); }
VPtr mkv(Value::VBox x) { return wrap(std::move(x)); }
VPtr mkv(Value::VPair x) { return wrap(std::move(x)); }
VPtr mkv(Value::VTrue x) { return wrap(std::move(x)); }
VPtr mkv(Value::VFalse x) { return wrap(std::move(x)); }
VPtr mkv(Value::VCode x) { return wrap(std::move(x)); }
VPtr mkv(Value::VNeut x) { return wrap(std::move(x)); }

VPtr mk_nvar(int lvl) { return mkv(Value::VNeut{Neutral{HVar{lvl}, {}}}); }

}  // namespace cmtt
