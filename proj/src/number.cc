// Copyright 2026 The PTE Solver Authors.
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

#include "pte/number.h"

#include <cctype>
#include <limits>

namespace pte {

using boost::multiprecision::cpp_int;

std::optional<Number> Number::Parse(std::string_view text) {
  std::size_t pos = 0;
  bool negative = false;
  if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) {
    negative = text[pos] == '-';
    ++pos;
  }
  std::string digits;
  std::size_t fraction_digits = 0;
  bool seen_point = false;
  std::size_t int_digits = 0;
  for (; pos < text.size(); ++pos) {
    const char c = text[pos];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      digits.push_back(c);
      if (seen_point) {
        ++fraction_digits;
      } else {
        ++int_digits;
      }
    } else if (c == '.' && !seen_point) {
      seen_point = true;
    } else {
      return std::nullopt;
    }
  }
  if (int_digits == 0 || (seen_point && fraction_digits == 0)) {
    return std::nullopt;
  }
  // cpp_int reads a leading zero as an octal prefix.
  const std::size_t first = digits.find_first_not_of('0');
  cpp_int numerator(first == std::string::npos ? std::string("0")
                                               : digits.substr(first));
  cpp_int denominator = 1;
  for (std::size_t i = 0; i < fraction_digits; ++i) denominator *= 10;
  if (negative) numerator = -numerator;
  return Number(Rational(numerator, denominator));
}

bool Number::IsInteger() const {
  return boost::multiprecision::denominator(value_) == 1;
}

std::optional<std::int64_t> Number::ToInt64() const {
  if (!IsInteger()) return std::nullopt;
  const cpp_int n = boost::multiprecision::numerator(value_);
  if (n > std::numeric_limits<std::int64_t>::max() ||
      n < std::numeric_limits<std::int64_t>::min()) {
    return std::nullopt;
  }
  return n.convert_to<std::int64_t>();
}

int Number::Sign() const { return value_.sign(); }

std::string Number::ToString() const {
  const cpp_int num = boost::multiprecision::numerator(value_);
  const cpp_int den = boost::multiprecision::denominator(value_);
  if (den == 1) return num.str();

  // A finite decimal exists iff den = 2^a 5^b.
  cpp_int rest = den;
  int twos = 0;
  int fives = 0;
  while (rest % 2 == 0) {
    rest /= 2;
    ++twos;
  }
  while (rest % 5 == 0) {
    rest /= 5;
    ++fives;
  }
  if (rest != 1) return num.str() + "/" + den.str();

  const int places = std::max(twos, fives);
  cpp_int scale = 1;
  for (int i = 0; i < places; ++i) scale *= 10;
  const cpp_int scaled = num * (scale / den);
  const bool negative = scaled < 0;
  std::string digits = (negative ? cpp_int(-scaled) : scaled).str();
  if (digits.size() <= static_cast<std::size_t>(places)) {
    digits.insert(0, places - digits.size() + 1, '0');
  }
  digits.insert(digits.size() - places, ".");
  return negative ? "-" + digits : digits;
}

}  // namespace pte
