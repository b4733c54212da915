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

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <optional>
#include <string>

#include "tensorcomb/error.h"
#include "tensorcomb/quartic_gf.h"

namespace tensorcomb {

namespace {

constexpr int kDefaultDigits = 50;
constexpr int kMinDigits = 30;

int initial_digits() {
  const char* env = std::getenv("TENSOR_PRECISION_DIGITS");
  if (env == nullptr || *env == '\0') return kDefaultDigits;
  char* end = nullptr;
  long value = std::strtol(env, &end, 10);
  if (*end != '\0' || value < kMinDigits || value > 10000) {
    throw Error("invalid_precision", "TENSOR_PRECISION_DIGITS must be an integer >= 30");
  }
  return static_cast<int>(value);
}

int& digits_slot() {
  static int digits = initial_digits();
  return digits;
}

void apply_precision() { Real::default_precision(precision_digits()); }

Real to_real(const Rational& q) {
  return Real(q.get_num().get_str()) / Real(q.get_den().get_str());
}

// Coefficients in ascending order.
using Poly = std::vector<Real>;

Real eval(const Poly& p, const Real& x) {
  Real acc = 0;
  for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Poly derivative(const Poly& p) {
  Poly d;
  for (std::size_t i = 1; i < p.size(); ++i) d.push_back(p[i] * static_cast<int>(i));
  return d;
}

Real tolerance() {
  return boost::multiprecision::pow(Real(10), -(precision_digits() * 3) / 4);
}

Real bisect(const Poly& p, Real lo, Real hi) {
  bool lo_negative = eval(p, lo) < 0;
  const int iterations = precision_digits() * 4;
  for (int i = 0; i < iterations; ++i) {
    Real mid = (lo + hi) / 2;
    Real v = eval(p, mid);
    if (v == 0) return mid;
    if ((v < 0) == lo_negative) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return (lo + hi) / 2;
}

// Real roots of p in the open interval (a, b), ascending. Splits at the roots
// of p' so each piece is monotone; tangent roots are picked up there.
std::vector<Real> real_roots(Poly p, const Real& a, const Real& b) {
  while (!p.empty() && p.back() == 0) p.pop_back();
  if (p.size() <= 1) return {};
  if (p.size() == 2) {
    Real r = -p[0] / p[1];
    if (r > a && r < b) return {r};
    return {};
  }
  std::vector<Real> cuts{a};
  for (const Real& r : real_roots(derivative(p), a, b)) cuts.push_back(r);
  cuts.push_back(b);
  std::vector<Real> roots;
  const Real tol = tolerance();
  auto push = [&roots, &tol](const Real& r) {
    if (roots.empty() || boost::multiprecision::abs(roots.back() - r) > tol) roots.push_back(r);
  };
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    const Real& lo = cuts[i];
    const Real& hi = cuts[i + 1];
    Real vlo = eval(p, lo);
    Real vhi = eval(p, hi);
    if (i > 0 && boost::multiprecision::abs(vlo) < tol) push(lo);
    if ((vlo < 0 && vhi > 0) || (vlo > 0 && vhi < 0)) push(bisect(p, lo, hi));
  }
  return roots;
}

struct System {
  Rational k;
  Rational lambda;
  Poly f;
  Poly g;
};

System make_system(const Rational& k, const Rational& lambda) {
  Real kr = to_real(k);
  Real lr = to_real(lambda);
  System s{k, lambda, {}, {}};
  s.f = {Real(1), 2 * kr + lr, -(3 * kr + 2 * lr), lr};
  s.g = {Real(1), -(2 * kr + lr), kr + 2 * lr, -lr};
  return s;
}

Real t_of_u(const System& s, const Real& u) {
  Real f = eval(s.f, u);
  return u * (1 - u) * (1 - u) / (f * f);
}

Real residual(const System& s, const Real& t, const Real& f, const Real& u) {
  using boost::multiprecision::abs;
  Real k = to_real(s.k);
  Real l = to_real(s.lambda);
  Real r1 = t * f * f - u * (1 - u) * (1 - u);
  Real r2 = f - (k * (1 - u) * (1 + 3 * u) - k + 1 + l * u * (1 - u) * (1 - u));
  Real r3 = (1 - 3 * u) * (1 - u - 2 * (2 * k + l * (1 - u)) * t * f);
  return std::max({abs(r1), abs(r2), abs(r3)});
}

CriticalPoint make_point(const System& s, const Real& u, bool planar_line, bool coalescent) {
  CriticalPoint p;
  p.k = s.k;
  p.lambda = s.lambda;
  p.u = u;
  p.f = eval(s.f, u);
  p.t = t_of_u(s, u);
  p.on_planar_line = planar_line;
  p.coalescent = coalescent;
  p.regime = !planar_line ? Regime::kTree : coalescent ? Regime::kBabyUniverse : Regime::kPlanar;
  p.residual = residual(s, p.t, p.f, u);
  return p;
}

}  // namespace

int precision_digits() { return digits_slot(); }

void set_precision_digits(int digits) {
  if (digits < kMinDigits) throw Error("invalid_precision", "precision must be at least 30 digits");
  digits_slot() = digits;
}

std::string regime_name(Regime r) {
  switch (r) {
    case Regime::kPlanar:
      return "planar";
    case Regime::kTree:
      return "tree";
    case Regime::kBabyUniverse:
      return "baby-universe";
    case Regime::kUnclassified:
      break;
  }
  return "unclassified";
}

double regime_exponent(Regime r) {
  switch (r) {
    case Regime::kPlanar:
      return 1.5;
    case Regime::kTree:
      return 0.5;
    case Regime::kBabyUniverse:
      return 2.0 / 3.0;
    case Regime::kUnclassified:
      break;
  }
  return std::nan("");
}

std::vector<CriticalPoint> critical_points(const Rational& k, const Rational& lambda) {
  apply_precision();
  System s = make_system(k, lambda);
  const Real third = Real(1) / 3;
  const Real tol = tolerance();
  const bool coalescent = 27 - 15 * k - 4 * lambda == 0;
  std::vector<CriticalPoint> points;
  if (eval(s.f, third) > 0) points.push_back(make_point(s, third, true, coalescent));
  // g has a double root at u = 1 when k = 1, which bisection only resolves
  // to half precision.
  const Real edge = Real(1) - boost::multiprecision::sqrt(tol);
  for (const Real& u : real_roots(s.g, Real(0), edge)) {
    if (boost::multiprecision::abs(u - third) <= tol) continue;
    if (eval(s.f, u) <= 0) continue;
    points.push_back(make_point(s, u, false, false));
  }
  std::sort(points.begin(), points.end(),
            [](const CriticalPoint& a, const CriticalPoint& b) { return a.u < b.u; });
  for (CriticalPoint& p : points) {
    if (real_roots(s.f, Real(0), p.u).empty()) {
      p.dominant = true;
      break;
    }
  }
  return points;
}

CriticalPoint dominant_critical_point(const Rational& k, const Rational& lambda) {
  for (CriticalPoint& p : critical_points(k, lambda)) {
    if (p.dominant) return p;
  }
  throw Error("no_critical_point", "no dominant critical point for k = " + to_string(k) +
                                       ", lambda = " + to_string(lambda));
}

ExponentEstimate singular_exponent(const Rational& k, const Rational& lambda) {
  ExponentEstimate out;
  out.point = dominant_critical_point(k, lambda);
  apply_precision();
  System s = make_system(k, lambda);
  const CriticalPoint& c = out.point;
  constexpr int kRungs = 17;
  std::vector<Real> h(kRungs);
  Real eps = Real(1) / 1000;
  const int iterations = precision_digits() * 4;
  for (int j = 0; j < kRungs; ++j, eps /= 2) {
    // t(u) increases on [0, u_c]; bisect for t(u) = t_c - eps.
    Real target = c.t - eps;
    Real lo = 0;
    Real hi = c.u;
    for (int i = 0; i < iterations; ++i) {
      Real mid = (lo + hi) / 2;
      if (t_of_u(s, mid) < target) {
        lo = mid;
      } else {
        hi = mid;
      }
    }
    h[j] = boost::multiprecision::abs(c.f - eval(s.f, (lo + hi) / 2));
  }
  // Differences cancel the analytic linear term.
  std::vector<Real> diff(kRungs - 1);
  for (int j = 0; j + 1 < kRungs; ++j) diff[j] = h[j] - 2 * h[j + 1];
  for (int j = 0; j + 1 < static_cast<int>(diff.size()); ++j) {
    Real ratio = diff[j] / diff[j + 1];
    out.ladder.push_back(static_cast<double>(boost::multiprecision::log2(ratio)));
  }
  const std::size_t n = out.ladder.size();
  double a = out.ladder[n - 3];
  double b = out.ladder[n - 2];
  double e = out.ladder[n - 1];
  double denom = e - 2 * b + a;
  out.estimate = std::abs(denom) > 1e-14 ? e - (e - b) * (e - b) / denom : e;
  if (!std::isfinite(out.estimate)) out.estimate = e;
  for (Regime r : {Regime::kPlanar, Regime::kTree, Regime::kBabyUniverse}) {
    if (std::abs(out.estimate - regime_exponent(r)) <= 0.05) {
      out.regime = r;
      out.classified = true;
    }
  }
  return out;
}

std::vector<PhaseCell> phase_diagram(const Rational& k_min, const Rational& k_max, int k_steps,
                                     const Rational& lambda_min, const Rational& lambda_max,
                                     int lambda_steps) {
  if (k_steps < 1 || lambda_steps < 1) {
    throw Error("invalid_argument", "grid step counts must be positive");
  }
  auto grid = [](const Rational& lo, const Rational& hi, int steps) {
    std::vector<Rational> values;
    for (int i = 0; i < steps; ++i) {
      Rational v = steps == 1 ? Rational(lo) : Rational(lo + (hi - lo) * i / (steps - 1));
      v.canonicalize();
      values.push_back(v);
    }
    return values;
  };
  std::vector<PhaseCell> cells;
  for (const Rational& k : grid(k_min, k_max, k_steps)) {
    if (k <= 0) throw Error("invalid_argument", "k must be positive");
    for (const Rational& l : grid(lambda_min, lambda_max, lambda_steps)) {
      PhaseCell cell;
      cell.k = k;
      cell.lambda = l;
      cell.point = dominant_critical_point(k, l);
      cell.conjectural = !(k == 1 || l == 0);
      cells.push_back(std::move(cell));
    }
  }
  return cells;
}

}  // namespace tensorcomb
