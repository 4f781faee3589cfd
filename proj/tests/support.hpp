// Copyright 2026 The qdouble Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#pragma once

// Readable failure output for the library's value types.

#include "doctest.h"
#include "qdouble/nc_element.hpp"
#include "qdouble/scalar.hpp"

namespace doctest {

template <>
struct StringMaker<qdouble::Scalar> {
  static String convert(const qdouble::Scalar& s) { return s.str().c_str(); }
};

template <class F>
struct StringMaker<qdouble::NCElement<F>> {
  static String convert(const qdouble::NCElement<F>& x) { return x.str().c_str(); }
};

}  // namespace doctest
