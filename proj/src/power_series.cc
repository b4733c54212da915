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

#include "tensorcomb/power_series.h"

#include <algorithm>
#include <utility>

#include "tensorcomb/error.h"

namespace tensorcomb {

PowerSeries::PowerSeries(int order, std::string variable)
    : variable_(std::move(variable)), coeffs_(std::max(order, 0) + 1) {
  if (order < 0) throw Error("invalid_argument", "series order must be nonnegative");
}

PowerSeries::PowerSeries(std::vector<Rational> coefficients, std::string variable)
    : variable_(std::move(variable)), coeffs_(std::move(coefficients)) {
  if (coeffs_.empty()) coeffs_.resize(1);
}

PowerSeries PowerSeries::constant(const Rational& c, int order, std::string variable) {
  PowerSeries s(order, std::move(variable));
  s[0] = c;
  return s;
}

PowerSeries PowerSeries::identity(int order, std::string variable) {
  PowerSeries s(order, std::move(variable));
  if (order >= 1) s[1] = 1;
  return s;
}

PowerSeries PowerSeries::truncated(int order) const {
  PowerSeries s(order, variable_);
  for (int i = 0; i <= std::min(order, this->order()); ++i) s[i] = coeffs_[i];
  return s;
}

bool PowerSeries::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return c == 0; });
}

PowerSeries PowerSeries::operator-() const {
  PowerSeries s = *this;
  for (Rational& c : s.coeffs_) c = -c;
  return s;
}

PowerSeries& PowerSeries::operator+=(const PowerSeries& other) {
  coeffs_.resize(std::min(coeffs_.size(), other.coeffs_.size()));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  return *this;
}

PowerSeries& PowerSeries::operator-=(const PowerSeries& other) {
  coeffs_.resize(std::min(coeffs_.size(), other.coeffs_.size()));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
  return *this;
}

PowerSeries& PowerSeries::operator*=(const Rational& c) {
  for (Rational& x : coeffs_) x *= c;
  return *this;
}

PowerSeries operator*(const PowerSeries& a, const PowerSeries& b) {
  const int n = std::min(a.order(), b.order());
  PowerSeries out(n, a.variable_);
  Rational term;
  for (int i = 0; i <= n; ++i) {
    if (a[i] == 0) continue;
    for (int j = 0; i + j <= n; ++j) {
      if (b[j] == 0) continue;
      term = a[i] * b[j];
      out[i + j] += term;
    }
  }
  return out;
}

PowerSeries operator+(PowerSeries a, const Rational& c) {
  a[0] += c;
  return a;
}

PowerSeries PowerSeries::reciprocal() const {
  if (coeffs_[0] == 0) throw Error("not_invertible", "series with zero constant term");
  const int n = order();
  PowerSeries g = constant(1 / coeffs_[0], 0, variable_);
  for (int m = 1; m < n + 1;) {
    m = std::min(2 * m, n + 1);
    PowerSeries gm = g.truncated(m - 1);
    PowerSeries correction = constant(2, m - 1, variable_) - truncated(m - 1) * gm;
    g = gm * correction;
  }
  return g.truncated(n);
}

PowerSeries PowerSeries::pow(int n) const {
  if (n < 0) return reciprocal().pow(-n);
  PowerSeries result = constant(1, order(), variable_);
  PowerSeries base = *this;
  while (n > 0) {
    if (n & 1) result = result * base;
    n >>= 1;
    if (n) base = base * base;
  }
  return result;
}

PowerSeries PowerSeries::derivative() const {
  PowerSeries s(std::max(order() - 1, 0), variable_);
  for (int i = 1; i <= order(); ++i) s[i - 1] = coeffs_[i] * i;
  return s;
}

PowerSeries PowerSeries::compose(const PowerSeries& inner) const {
  if (inner[0] != 0) throw Error("invalid_argument", "inner series must vanish at zero");
  const int n = std::min(order(), inner.order());
  PowerSeries x = inner.truncated(n);
  PowerSeries result = constant(coeffs_[n], n, inner.variable_);
  for (int i = n - 1; i >= 0; --i) {
    result = result * x;
    result[0] += coeffs_[i];
  }
  return result;
}

PowerSeries PowerSeries::revert(const PowerSeries& f) {
  if (f[0] != 0 || f.order() < 1 || f[1] == 0) {
    throw Error("invalid_argument", "reversion needs f(0) = 0 and f'(0) != 0");
  }
  const int n = f.order();
  PowerSeries g(1, f.variable_);
  g[1] = 1 / f[1];
  PowerSeries df = f.derivative();
  for (int m = 1; m < n;) {
    m = std::min(2 * m, n);
    PowerSeries gm = g.truncated(m);
    PowerSeries residual = f.truncated(m).compose(gm) - identity(m, f.variable_);
    PowerSeries slope = df.truncated(m).compose(gm);
    g = gm - residual * slope.reciprocal();
  }
  return g.truncated(n);
}

std::string PowerSeries::to_string() const {
  std::string out;
  for (int i = 0; i <= order(); ++i) {
    if (coeffs_[i] == 0) continue;
    std::string c = tensorcomb::to_string(coeffs_[i]);
    if (!out.empty()) {
      if (c[0] == '-') {
        out += " - ";
        c.erase(0, 1);
      } else {
        out += " + ";
      }
    }
    if (i == 0) {
      out += c;
    } else {
      if (c != "1") out += (c == "-1" ? "-" : c + "*");
      out += variable_;
      if (i > 1) out += "^" + std::to_string(i);
    }
  }
  if (out.empty()) out = "0";
  out += " + O(" + variable_ + "^" + std::to_string(order() + 1) + ")";
  return out;
}

}  // namespace tensorcomb
