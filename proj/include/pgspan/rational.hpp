// Copyright 2026 The pgspan Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace pgspan {

/// Arbitrary-precision exact fraction.
using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

/// "a" for integers, "a/b" otherwise.
std::string to_string(const Rational& r);

/// Accepts "a", "-a", "a/b" and finite decimals such as "0.25".
/// Throws InputError on anything else.
Rational parse_rational(std::string_view text);

double to_double(const Rational& r);

/// Smallest integer >= r.
BigInt ceil(const Rational& r);

}  // namespace pgspan
