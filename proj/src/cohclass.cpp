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

#include "vgw/symbolic.hpp"

#include <algorithm>

namespace vgw {

namespace {

// Largest total nilpotent degree a product of these params can carry.
int nilpotent_bound(const Poly& p) {
  int n = 0;
  for (const auto& prm : p.params())
    if (prm.nilpotent()) n += prm.order;
  return n;
}

void merge_into(CohClass::Denominator& den, const LinForm& form, int mult) {
  auto it = std::lower_bound(den.begin(), den.end(), form,
                             [](const auto& e, const LinForm& f) { return e.first < f; });
  if (it != den.end() && it->first == form) {
    it->second += mult;
  } else {
    den.insert(it, {form, mult});
  }
}

// 1/(base + eps)^p = sum_n binom(-p, n) eps^n / base^(p+n), truncated by
// nilpotency of eps. Returns the numerator over base^(p+N).
std::pair<Poly, int> expand_inverse(const LinForm& base, const Poly& eps, int p) {
  int n_max = nilpotent_bound(eps);
  Poly base_poly = Poly::from_form(base);
  Poly acc;
  Poly eps_pow(1);
  std::vector<Poly> base_pows{Poly(1)};
  for (int n = 1; n <= n_max; ++n) base_pows.push_back(base_pows.back() * base_poly);
  for (int n = 0; n <= n_max; ++n) {
    if (eps_pow.is_zero()) break;
    acc += eps_pow * base_pows[static_cast<std::size_t>(n_max - n)] * binomial(-p, n);
    eps_pow = eps_pow * eps;
  }
  return {acc, p + n_max};
}

}  // namespace

CohClass::CohClass(Poly numerator) : num_(std::move(numerator)) {}

CohClass CohClass::fraction(const Poly& numerator, const std::vector<std::pair<LinForm, int>>& den) {
  Poly num = numerator;
  Denominator out;
  for (const auto& [form, mult] : den) {
    if (mult == 0) continue;
    if (form.is_zero()) throw Error(ErrorKind::ZeroEuler, "zero linear form in a denominator");
    if (mult < 0) {
      num = num * Poly::from_form(form).pow(-mult);
      continue;
    }
    LinForm regular = form.regular_part();
    if (regular.is_zero())
      throw Error(ErrorKind::ZeroEuler, "non-invertible Euler factor: '" + form.str() + "' is nilpotent");
    LinForm base = regular;
    int power = mult;
    if (form.has_nilpotent()) {
      auto [factor, p] = expand_inverse(regular, Poly::from_form(form.nilpotent_part()), mult);
      num = num * factor;
      power = p;
    }
    Rat lc = base.leading();
    num = num * vgw::pow(Rat(1 / lc), power);
    merge_into(out, base * Rat(1 / lc), power);
  }
  CohClass c(std::move(num), std::move(out));
  if (c.num_.is_zero()) c.den_.clear();
  return c;
}

CohClass CohClass::inverse_power(const LinForm& form, int multiplicity) {
  return fraction(Poly(1), {{form, multiplicity}});
}

std::optional<Rat> CohClass::constant_value() const {
  if (num_.is_zero()) return Rat(0);
  if (!den_.empty()) return std::nullopt;
  return num_.constant_value();
}

std::vector<Param> CohClass::params() const {
  std::map<std::string, Param> seen;
  for (const auto& p : num_.params()) seen.emplace(p.name, p);
  for (const auto& [f, m] : den_)
    for (const auto& t : f.terms()) seen.emplace(t.first.name, t.first);
  std::vector<Param> out;
  for (auto& kv : seen) out.push_back(kv.second);
  return out;
}

bool CohClass::has_param(const std::string& name) const {
  if (num_.has_param(name)) return true;
  for (const auto& [f, m] : den_)
    if (f.coefficient(name) != 0) return true;
  return false;
}

CohClass CohClass::operator+(const CohClass& o) const {
  if (o.num_.is_zero()) return *this;
  if (num_.is_zero()) return o;
  Denominator common;
  Poly a = num_, b = o.num_;
  auto ia = den_.begin(), ib = o.den_.begin();
  while (ia != den_.end() || ib != o.den_.end()) {
    if (ib == o.den_.end() || (ia != den_.end() && ia->first < ib->first)) {
      b = b * Poly::from_form(ia->first).pow(ia->second);
      common.push_back(*ia++);
    } else if (ia == den_.end() || ib->first < ia->first) {
      a = a * Poly::from_form(ib->first).pow(ib->second);
      common.push_back(*ib++);
    } else {
      int m = std::max(ia->second, ib->second);
      if (ia->second < m) a = a * Poly::from_form(ia->first).pow(m - ia->second);
      if (ib->second < m) b = b * Poly::from_form(ib->first).pow(m - ib->second);
      common.emplace_back(ia->first, m);
      ++ia;
      ++ib;
    }
  }
  return CohClass(a + b, std::move(common)).reduced();
}

CohClass& CohClass::operator+=(const CohClass& o) {
  *this = *this + o;
  return *this;
}

CohClass CohClass::operator-() const { return *this * Rat(-1); }

CohClass CohClass::operator-(const CohClass& o) const { return *this + (-o); }

CohClass CohClass::operator*(const CohClass& o) const {
  Poly num = num_ * o.num_;
  if (num.is_zero()) return CohClass();
  Denominator den = den_;
  for (const auto& [f, m] : o.den_) merge_into(den, f, m);
  return CohClass(std::move(num), std::move(den)).reduced();
}

CohClass CohClass::operator*(const Rat& c) const {
  if (c == 0) return CohClass();
  return CohClass(num_ * c, den_);
}

CohClass CohClass::pow(int n) const {
  if (n < 0) throw Error(ErrorKind::Argument, "negative power of a class; use inverse_power");
  CohClass result(1), base = *this;
  while (n > 0) {
    if (n & 1) result = result * base;
    n >>= 1;
    if (n) base = base * base;
  }
  return result;
}

bool CohClass::operator==(const CohClass& o) const {
  Poly lhs = num_, rhs = o.num_;
  for (const auto& [f, m] : o.den_) lhs = lhs * Poly::from_form(f).pow(m);
  for (const auto& [f, m] : den_) rhs = rhs * Poly::from_form(f).pow(m);
  return lhs == rhs;
}

CohClass CohClass::reduced() const {
  if (num_.is_zero()) return CohClass();
  Poly num = num_;
  Denominator den;
  for (const auto& [f, m] : den_) {
    int left = m;
    while (left > 0) {
      auto q = num.divide_exact(f);
      if (!q) break;
      num = std::move(*q);
      --left;
    }
    if (left > 0) den.emplace_back(f, left);
  }
  return CohClass(std::move(num), std::move(den));
}

std::string CohClass::str() const {
  if (den_.empty()) return num_.str();
  std::string s = "(" + num_.str() + ")/(";
  bool first = true;
  for (const auto& [f, m] : den_) {
    if (!first) s += "*";
    first = false;
    s += "(" + f.str() + ")";
    if (m != 1) s += "^" + std::to_string(m);
  }
  return s + ")";
}

// ---------------------------------------------------------------- residues

CohClass residue_at_zero(const CohClass& c, const Param& v) {
  if (v.nilpotent())
    throw Error(ErrorKind::Domain, "residue in nilpotent parameter '" + v.name + "'");
  if (c.is_zero()) return CohClass();

  // Split the denominator: pure powers of v, forms depending on v with a
  // v-free part, and forms independent of v.
  int pole = 0;
  struct Moving {
    LinForm rest;
    Rat slope;
    int mult;
  };
  std::vector<Moving> moving;
  CohClass::Denominator fixed;
  for (const auto& [f, m] : c.denominator()) {
    Rat slope = f.coefficient(v.name);
    if (slope == 0) {
      fixed.emplace_back(f, m);
      continue;
    }
    LinForm rest = f.without(v.name);
    if (rest.is_zero()) {
      pole += m;  // monic, so f == v
      continue;
    }
    if (!rest.regular_part().is_zero()) {
      moving.push_back({rest, slope, m});
    } else {
      throw Error(ErrorKind::Domain, "residue branch undefined for denominator '" + f.str() + "' in " + v.name);
    }
  }
  if (pole <= 0) return CohClass();
  const int order = pole - 1;

  // Coefficient of v^order in P(v) * prod_j (rest_j + slope_j v)^(-mult_j),
  // all over prod_j rest_j^(mult_j + order).
  std::vector<Poly> series = c.numerator().split(v.name);
  series.resize(static_cast<std::size_t>(order) + 1);
  for (const auto& mv : moving) {
    Poly rest = Poly::from_form(mv.rest);
    std::vector<Poly> rest_pows{Poly(1)};
    for (int n = 1; n <= order; ++n) rest_pows.push_back(rest_pows.back() * rest);
    std::vector<Poly> factor(static_cast<std::size_t>(order) + 1);
    for (int n = 0; n <= order; ++n)
      factor[static_cast<std::size_t>(n)] =
          rest_pows[static_cast<std::size_t>(order - n)] * (binomial(-mv.mult, n) * pow(mv.slope, n));
    std::vector<Poly> next(static_cast<std::size_t>(order) + 1);
    for (int i = 0; i <= order; ++i) {
      if (series[static_cast<std::size_t>(i)].is_zero()) continue;
      for (int j = 0; i + j <= order; ++j)
        next[static_cast<std::size_t>(i + j)] += series[static_cast<std::size_t>(i)] * factor[static_cast<std::size_t>(j)];
    }
    series = std::move(next);
  }
  std::vector<std::pair<LinForm, int>> den(fixed.begin(), fixed.end());
  for (const auto& mv : moving) den.emplace_back(mv.rest, mv.mult + order);
  return CohClass::fraction(series[static_cast<std::size_t>(order)], den).reduced();
}

CohClass iterated_residue(const CohClass& c, const std::vector<Param>& vars) {
  CohClass acc = c;
  for (const auto& v : vars) acc = residue_at_zero(acc, v);
  return acc;
}

CohClass derivative(const CohClass& c, const Param& v) {
  if (v.nilpotent()) throw Error(ErrorKind::Domain, "derivative in nilpotent parameter");
  Poly dnum;
  for (const auto& [m, coef] : c.numerator().terms()) {
    int e = m.exponent(v.name);
    if (e == 0) continue;
    Poly t = Poly::monomial(m.without(v.name), coef * e);
    dnum += t * Poly::var(v).pow(e - 1);
  }
  std::vector<std::pair<LinForm, int>> den(c.denominator().begin(), c.denominator().end());
  CohClass result = CohClass::fraction(dnum, den);
  for (std::size_t j = 0; j < den.size(); ++j) {
    Rat slope = den[j].first.coefficient(v.name);
    if (slope == 0) continue;
    auto d2 = den;
    d2[j].second += 1;
    result = result + CohClass::fraction(c.numerator() * (slope * -den[j].second), d2);
  }
  return result;
}

// ---------------------------------------------------------------- substitution

Poly substitute(const Poly& p, const Substitution& map) {
  std::map<std::string, std::vector<Poly>> pow_cache;
  auto power = [&](const std::string& name, const Poly& image, int e) -> const Poly& {
    auto& pows = pow_cache[name];
    if (pows.empty()) pows.push_back(Poly(1));
    while (static_cast<int>(pows.size()) <= e) pows.push_back(pows.back() * image);
    return pows[static_cast<std::size_t>(e)];
  };
  Poly out;
  for (const auto& [m, c] : p.terms()) {
    Poly term(c);
    Monomial kept;
    for (const auto& [prm, e] : m.factors()) {
      auto it = map.find(prm.name);
      if (it == map.end()) {
        if (auto t = kept.times(Monomial(prm, e))) {
          kept = *t;
        } else {
          term = Poly();
        }
      } else {
        term = term * power(prm.name, it->second, e);
      }
      if (term.is_zero()) break;
    }
    if (!term.is_zero()) out += term * Poly::monomial(kept, 1);
  }
  return out;
}

CohClass substitute(const CohClass& c, const Substitution& map) {
  Poly num = substitute(c.numerator(), map);
  if (num.is_zero()) return CohClass();
  CohClass result(num);
  for (const auto& [f, m] : c.denominator()) {
    Poly image = substitute(Poly::from_form(f), map);
    LinForm regular;
    Poly eps;
    for (const auto& [mono, coef] : image.terms()) {
      const auto& fs = mono.factors();
      bool all_nil = !fs.empty() && std::all_of(fs.begin(), fs.end(), [](const auto& x) { return x.first.nilpotent(); });
      if (fs.size() == 1 && fs[0].second == 1 && !fs[0].first.nilpotent()) {
        regular = regular + LinForm(fs[0].first, coef);
      } else if (all_nil) {
        eps += Poly::monomial(mono, coef);
      } else {
        throw Error(ErrorKind::ZeroEuler,
                    "substitution image of denominator '" + f.str() + "' is not an Euler factor: " + image.str());
      }
    }
    if (regular.is_zero())
      throw Error(ErrorKind::ZeroEuler, "denominator '" + f.str() + "' maps to a zero or nilpotent form: " +
                                            image.str());
    if (eps.is_zero()) {
      result = result * CohClass::inverse_power(regular, m);
    } else {
      auto [factor, p] = expand_inverse(regular, eps, m);
      result = result * CohClass::fraction(factor, {{regular, p}});
    }
  }
  return result.reduced();
}

// ---------------------------------------------------------------- integration

CohClass top_coefficient(const CohClass& c, const NilpotentSpec& spec) {
  for (const auto& g : spec.generators)
    if (!g.nilpotent()) throw Error(ErrorKind::Domain, "base generator '" + g.name + "' is not nilpotent");
  if (!spec.empty() && spec.normalization == 0)
    throw Error(ErrorKind::Domain, "zero normalization for a nonempty base");
  Poly coef;
  for (const auto& [m, k] : c.numerator().terms()) {
    Monomial rest = m;
    bool match = true;
    for (const auto& g : spec.generators) {
      if (m.exponent(g.name) != g.order) {
        match = false;
        break;
      }
      rest = rest.without(g.name);
    }
    if (!match) continue;
    for (const auto& [prm, e] : rest.factors())
      if (prm.nilpotent())
        throw Error(ErrorKind::Domain, "nilpotent parameter '" + prm.name + "' is not part of the base");
    coef += Poly::monomial(rest, k);
  }
  std::vector<std::pair<LinForm, int>> den(c.denominator().begin(), c.denominator().end());
  return CohClass::fraction(coef * (spec.empty() ? Rat(1) : spec.normalization), den).reduced();
}

Rat integrate_top(const CohClass& c, const NilpotentSpec& spec) {
  if (!c.is_polynomial()) throw Error(ErrorKind::Domain, "integration of a class with denominators");
  for (const auto& p : c.params())
    if (!p.nilpotent()) throw Error(ErrorKind::Domain, "residual equivariant parameter '" + p.name + "' in integrand");
  if (spec.empty()) {
    auto v = c.constant_value();
    if (!v) throw Error(ErrorKind::Domain, "non-constant integrand over a point");
    return *v;
  }
  auto v = top_coefficient(c, spec).constant_value();
  return v ? *v : Rat(0);
}

}  // namespace vgw
