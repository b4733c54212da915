// Copyright 2026 The tensorcomb Authors.
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

#ifndef TENSORCOMB_RATIONAL_H_
#define TENSORCOMB_RATIONAL_H_

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace tensorcomb {

using Rational = mpq_class;
using Integer = mpz_class;

// Accepts "a", "a/b" and plain decimals such as "-0.25" or "1e-3".
Rational parse_rational(std::string_view text);

// "a" when the denominator is one, "a/b" otherwise.
std::string to_string(const Rational& q);

}  // namespace tensorcomb

#endif  // TENSORCOMB_RATIONAL_H_
