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

#ifndef PTE_NUMBER_H_
#define PTE_NUMBER_H_

#include <compare>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace pte {

// Exact rational number used for payoffs and spacetime coordinates.
//
// Payoffs are only ever compared, so equality here is the tie test the
// equilibrium theorems depend on. Coordinates go through +, - and * when
// computing squared intervals; no division is exposed.
class Number {
 public:
  Number() = default;
  Number(std::int64_t value) : value_(value) {}  // NOLINT: implicit by intent

  // Accepts an optional sign, decimal digits and an optional fractional part:
  // "3", "-12", "2.50", "-0.125". Returns nullopt for anything else.
  static std::optional<Number> Parse(std::string_view text);

  bool IsInteger() const;
  // Only valid when IsInteger() and the value fits.
  std::optional<std::int64_t> ToInt64() const;
  int Sign() const;

  // Shortest exact decimal rendering ("3", "2.5"). Falls back to "p/q" for
  // values with no finite decimal expansion.
  std::string ToString() const;

  friend Number operator+(const Number& a, const Number& b) {
    return Number(a.value_ + b.value_);
  }
  friend Number operator-(const Number& a, const Number& b) {
    return Number(a.value_ - b.value_);
  }
  friend Number operator*(const Number& a, const Number& b) {
    return Number(a.value_ * b.value_);
  }
  Number operator-() const { return Number(-value_); }

  friend bool operator==(const Number& a, const Number& b) {
    return a.value_ == b.value_;
  }
  friend std::strong_ordering operator<=>(const Number& a, const Number& b) {
    const int c = a.value_.compare(b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater
                          : std::strong_ordering::equal);
  }

 private:
  using Rational = boost::multiprecision::cpp_rational;
  explicit Number(Rational value) : value_(std::move(value)) {}

  Rational value_;
};

inline std::ostream& operator<<(std::ostream& os, const Number& n) {
  return os << n.ToString();
}

}  // namespace pte

#endif  // PTE_NUMBER_H_
