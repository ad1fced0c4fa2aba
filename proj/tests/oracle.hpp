/* Copyright (C) 2026 The vgw Authors
 * This program is Licensed under the Apache License, Version 2.0
 * (the "License"); you may not use this file except in compliance
 * with the License. You may obtain a copy of the License at
 *   http://www.apache.org/licenses/LICENSE-2.0
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License. See accompanying LICENSE file.
 */

// Test-only oracles. Nothing here calls the residue or pairing code paths it
// is used to check.
#pragma once

#include "vgw/symbolic.hpp"

#include <map>
#include <random>
#include <string>
#include <vector>

namespace oracle {

using vgw::Rat;

// Truncated Laurent series in one variable: coefficients from `low` upward.
struct Laurent {
  int low = 0;
  std::vector<Rat> c;

  Rat at(int e) const {
    int i = e - low;
    if (i < 0 || i >= static_cast<int>(c.size())) return 0;
    return c[static_cast<std::size_t>(i)];
  }
};

inline Laurent multiply(const Laurent& a, const Laurent& b, int keep_upto) {
  Laurent out;
  out.low = a.low + b.low;
  int n = keep_upto - out.low + 1;
  if (n <= 0) return out;
  out.c.assign(static_cast<std::size_t>(n), Rat(0));
  for (std::size_t i = 0; i < a.c.size(); ++i)
    for (std::size_t j = 0; j < b.c.size(); ++j) {
      std::size_t k = i + j;
      if (k < out.c.size()) out.c[k] += a.c[i] * b.c[j];
    }
  return out;
}

inline Rat eval_poly(const vgw::Poly& p, const std::map<std::string, Rat>& point) {
  Rat s = 0;
  for (const auto& [m, c] : p.terms()) {
    Rat t = c;
    for (const auto& [prm, e] : m.factors()) {
      Rat x = point.at(prm.name);
      for (int i = 0; i < e; ++i) t *= x;
    }
    s += t;
  }
  return s;
}

inline Rat eval_form(const vgw::LinForm& f, const std::map<std::string, Rat>& point) {
  Rat s = 0;
  for (const auto& [prm, c] : f.terms()) s += c * point.at(prm.name);
  return s;
}

// Numeric value of a class; the denominator must not vanish at the point.
inline Rat eval_class(const vgw::CohClass& c, const std::map<std::string, Rat>& point) {
  Rat v = eval_poly(c.numerator(), point);
  for (const auto& [f, m] : c.denominator())
    for (int i = 0; i < m; ++i) v /= eval_form(f, point);
  return v;
}

// Coefficient of v^-1 of numerator / prod(forms) expanded around v = 0 by
// geometric series, with every other parameter fixed to a number.
inline Rat brute_residue(const vgw::Poly& numerator, const std::vector<vgw::LinForm>& forms, const std::string& v,
                         std::map<std::string, Rat> point) {
  point[v] = 0;
  // Pole order bound decides how far the series must run.
  int pole = 0;
  for (const auto& f : forms)
    if (eval_form(f, point) == 0) ++pole;
  int need = pole + 1;
  Laurent acc;
  acc.low = 0;
  {
    int deg = numerator.degree_in(v);
    acc.c.assign(static_cast<std::size_t>(deg) + 1, Rat(0));
    for (const auto& [m, c] : numerator.terms()) {
      Rat t = c;
      for (const auto& [prm, e] : m.factors()) {
        if (prm.name == v) continue;
        for (int i = 0; i < e; ++i) t *= point.at(prm.name);
      }
      acc.c[static_cast<std::size_t>(m.exponent(v))] += t;
    }
  }
  for (const auto& f : forms) {
    Rat a = eval_form(f, point);
    Rat b = f.coefficient(v);
    Laurent inv;
    if (a == 0) {
      inv.low = -1;
      inv.c = {Rat(1) / b};
    } else {
      inv.low = 0;
      Rat term = Rat(1) / a;
      for (int n = 0; n <= need + 8; ++n) {
        inv.c.push_back(term);
        term *= -b / a;
      }
    }
    acc = multiply(acc, inv, need + 8);
  }
  return acc.at(-1);
}

// Plain univariate polynomial interpolation, used to check extrapolation.
inline Rat lagrange_eval(const std::vector<std::pair<Rat, Rat>>& pts, const Rat& x) {
  Rat s = 0;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    Rat t = pts[i].second;
    for (std::size_t j = 0; j < pts.size(); ++j)
      if (j != i) t *= (x - pts[j].first) / (pts[i].first - pts[j].first);
    s += t;
  }
  return s;
}

}  // namespace oracle
