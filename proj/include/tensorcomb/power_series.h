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

#ifndef TENSORCOMB_POWER_SERIES_H_
#define TENSORCOMB_POWER_SERIES_H_

#include <string>
#include <vector>

#include "tensorcomb/rational.h"

namespace tensorcomb {

// Truncated power series sum_{i <= order} a_i x^i with exact rational
// coefficients. Binary operations truncate to the smaller order.
class PowerSeries {
 public:
  PowerSeries() = default;
  explicit PowerSeries(int order, std::string variable = "t");
  PowerSeries(std::vector<Rational> coefficients, std::string variable);

  static PowerSeries constant(const Rational& c, int order, std::string variable = "t");
  static PowerSeries identity(int order, std::string variable = "t");

  int order() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::string& variable() const { return variable_; }
  const std::vector<Rational>& coefficients() const { return coeffs_; }
  const Rational& operator[](int i) const { return coeffs_[i]; }
  Rational& operator[](int i) { return coeffs_[i]; }

  PowerSeries truncated(int order) const;
  bool is_zero() const;

  PowerSeries operator-() const;
  PowerSeries& operator+=(const PowerSeries& other);
  PowerSeries& operator-=(const PowerSeries& other);
  PowerSeries& operator*=(const Rational& c);

  friend PowerSeries operator+(PowerSeries a, const PowerSeries& b) { return a += b; }
  friend PowerSeries operator-(PowerSeries a, const PowerSeries& b) { return a -= b; }
  friend PowerSeries operator*(const PowerSeries& a, const PowerSeries& b);
  friend PowerSeries operator*(PowerSeries a, const Rational& c) { return a *= c; }
  friend PowerSeries operator*(const Rational& c, PowerSeries a) { return a *= c; }
  friend PowerSeries operator+(PowerSeries a, const Rational& c);

  // Multiplicative inverse; needs a nonzero constant term.
  PowerSeries reciprocal() const;
  PowerSeries pow(int n) const;
  PowerSeries derivative() const;
  // this(inner(x)); needs inner(0) = 0.
  PowerSeries compose(const PowerSeries& inner) const;
  // Compositional inverse g with f(g(x)) = x; needs f(0) = 0, f'(0) != 0.
  static PowerSeries revert(const PowerSeries& f);

  std::string to_string() const;

 private:
  std::string variable_ = "t";
  std::vector<Rational> coeffs_;
};

}  // namespace tensorcomb

#endif  // TENSORCOMB_POWER_SERIES_H_
