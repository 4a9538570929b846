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

#include "pgspan/rational.hpp"

#include <cctype>

#include "pgspan/errors.hpp"

namespace pgspan {

std::string to_string(const Rational& r) {
  if (boost::multiprecision::denominator(r) == 1) {
    return boost::multiprecision::numerator(r).str();
  }
  return boost::multiprecision::numerator(r).str() + "/" +
         boost::multiprecision::denominator(r).str();
}

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

BigInt parse_int(std::string_view s) { return BigInt(std::string(s)); }

}  // namespace

Rational parse_rational(std::string_view text) {
  const std::string_view original = text;
  bool negative = false;
  if (!text.empty() && (text.front() == '-' || text.front() == '+')) {
    negative = text.front() == '-';
    text.remove_prefix(1);
  }
  Rational value;
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    auto num = text.substr(0, slash);
    auto den = text.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) {
      throw InputError("not a rational: '" + std::string(original) + "'");
    }
    BigInt d = parse_int(den);
    if (d == 0) throw InputError("zero denominator: '" + std::string(original) + "'");
    value = Rational(parse_int(num), d);
  } else if (auto dot = text.find('.'); dot != std::string_view::npos) {
    auto whole = text.substr(0, dot);
    auto frac = text.substr(dot + 1);
    if ((!whole.empty() && !all_digits(whole)) || !all_digits(frac)) {
      throw InputError("not a rational: '" + std::string(original) + "'");
    }
    BigInt scale = boost::multiprecision::pow(BigInt(10), static_cast<unsigned>(frac.size()));
    BigInt w = whole.empty() ? BigInt(0) : parse_int(whole);
    value = Rational(w * scale + parse_int(frac), scale);
  } else {
    if (!all_digits(text)) throw InputError("not a rational: '" + std::string(original) + "'");
    value = Rational(parse_int(text));
  }
  return negative ? Rational(-value) : value;
}

double to_double(const Rational& r) { return r.convert_to<double>(); }

BigInt ceil(const Rational& r) {
  const BigInt& num = boost::multiprecision::numerator(r);
  const BigInt& den = boost::multiprecision::denominator(r);
  BigInt q = num / den;  // truncates toward zero
  if (q * den < num) ++q;
  return q;
}

}  // namespace pgspan
