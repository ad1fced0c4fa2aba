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
#include <sstream>

namespace vgw {

void check_compatible(const Param& a, const Param& b) {
  if (a.name != b.name) return;
  if (a.kind != b.kind || a.order != b.order)
    throw Error(ErrorKind::Context, "parameter '" + a.name + "' declared with two different kinds or orders");
}

// ---------------------------------------------------------------- Monomial

Monomial::Monomial(const Param& p, int exponent) {
  if (exponent > 0) factors_.emplace_back(p, exponent);
}

int Monomial::exponent(const std::string& name) const {
  for (const auto& [p, e] : factors_)
    if (p.name == name) return e;
  return 0;
}

int Monomial::degree() const {
  int d = 0;
  for (const auto& f : factors_) d += f.second;
  return d;
}

std::optional<Monomial> Monomial::times(const Monomial& o) const {
  Monomial out;
  out.factors_.reserve(factors_.size() + o.factors_.size());
  auto a = factors_.begin(), b = o.factors_.begin();
  auto push = [&](const Param& p, int e) -> bool {
    if (p.nilpotent() && e > p.order) return false;
    out.factors_.emplace_back(p, e);
    return true;
  };
  while (a != factors_.end() || b != o.factors_.end()) {
    if (b == o.factors_.end() || (a != factors_.end() && a->first.name < b->first.name)) {
      if (!push(a->first, a->second)) return std::nullopt;
      ++a;
    } else if (a == factors_.end() || b->first.name < a->first.name) {
      if (!push(b->first, b->second)) return std::nullopt;
      ++b;
    } else {
      check_compatible(a->first, b->first);
      if (!push(a->first, a->second + b->second)) return std::nullopt;
      ++a;
      ++b;
    }
  }
  return out;
}

Monomial Monomial::without(const std::string& name) const {
  Monomial out;
  for (const auto& f : factors_)
    if (f.first.name != name) out.factors_.push_back(f);
  return out;
}

std::string Monomial::str() const {
  std::string s;
  for (const auto& [p, e] : factors_) {
    if (!s.empty()) s += "*";
    s += p.name;
    if (e != 1) s += "^" + std::to_string(e);
  }
  return s.empty() ? "1" : s;
}

bool Monomial::operator<(const Monomial& o) const {
  std::size_t n = std::min(factors_.size(), o.factors_.size());
  for (std::size_t i = 0; i < n; ++i) {
    const auto& [pa, ea] = factors_[i];
    const auto& [pb, eb] = o.factors_[i];
    if (pa.name != pb.name) return pa.name < pb.name;
    if (ea != eb) return ea > eb;
  }
  return factors_.size() > o.factors_.size();
}

bool Monomial::operator==(const Monomial& o) const {
  if (factors_.size() != o.factors_.size()) return false;
  for (std::size_t i = 0; i < factors_.size(); ++i)
    if (factors_[i].first.name != o.factors_[i].first.name || factors_[i].second != o.factors_[i].second)
      return false;
  return true;
}

// ---------------------------------------------------------------- LinForm

LinForm::LinForm(const Param& p, const Rat& c) {
  if (c != 0) terms_.emplace_back(p, c);
}

LinForm LinForm::from_terms(const std::vector<std::pair<Param, Rat>>& terms) {
  LinForm out;
  for (const auto& [p, c] : terms) out = out + LinForm(p, c);
  return out;
}

Rat LinForm::coefficient(const std::string& name) const {
  for (const auto& [p, c] : terms_)
    if (p.name == name) return c;
  return 0;
}

LinForm LinForm::without(const std::string& name) const {
  LinForm out;
  for (const auto& t : terms_)
    if (t.first.name != name) out.terms_.push_back(t);
  return out;
}

bool LinForm::has_nilpotent() const {
  return std::any_of(terms_.begin(), terms_.end(), [](const auto& t) { return t.first.nilpotent(); });
}

LinForm LinForm::nilpotent_part() const {
  LinForm out;
  for (const auto& t : terms_)
    if (t.first.nilpotent()) out.terms_.push_back(t);
  return out;
}

LinForm LinForm::regular_part() const {
  LinForm out;
  for (const auto& t : terms_)
    if (!t.first.nilpotent()) out.terms_.push_back(t);
  return out;
}

LinForm LinForm::operator+(const LinForm& o) const {
  LinForm out;
  auto a = terms_.begin(), b = o.terms_.begin();
  while (a != terms_.end() || b != o.terms_.end()) {
    if (b == o.terms_.end() || (a != terms_.end() && a->first.name < b->first.name)) {
      out.terms_.push_back(*a++);
    } else if (a == terms_.end() || b->first.name < a->first.name) {
      out.terms_.push_back(*b++);
    } else {
      check_compatible(a->first, b->first);
      Rat c = a->second + b->second;
      if (c != 0) out.terms_.emplace_back(a->first, c);
      ++a;
      ++b;
    }
  }
  return out;
}

LinForm LinForm::operator-(const LinForm& o) const { return *this + o * Rat(-1); }

LinForm LinForm::operator*(const Rat& c) const {
  LinForm out;
  if (c == 0) return out;
  out.terms_ = terms_;
  for (auto& t : out.terms_) t.second *= c;
  return out;
}

bool LinForm::operator==(const LinForm& o) const {
  if (terms_.size() != o.terms_.size()) return false;
  for (std::size_t i = 0; i < terms_.size(); ++i)
    if (terms_[i].first.name != o.terms_[i].first.name || terms_[i].second != o.terms_[i].second) return false;
  return true;
}

bool LinForm::operator<(const LinForm& o) const {
  std::size_t n = std::min(terms_.size(), o.terms_.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (terms_[i].first.name != o.terms_[i].first.name) return terms_[i].first.name < o.terms_[i].first.name;
    if (terms_[i].second != o.terms_[i].second) return terms_[i].second < o.terms_[i].second;
  }
  return terms_.size() < o.terms_.size();
}

std::string LinForm::str() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (const auto& [p, c] : terms_) {
    Rat mag = abs(c);
    if (s.empty()) {
      if (c < 0) s += "-";
    } else {
      s += c < 0 ? " - " : " + ";
    }
    if (mag != 1) s += to_string(mag) + "*";
    s += p.name;
  }
  return s;
}

// ---------------------------------------------------------------- Poly

Poly::Poly(const Rat& c) {
  if (c != 0) terms_.emplace(Monomial(), c);
}

Poly Poly::var(const Param& p) {
  Poly out;
  if (p.nilpotent() && p.order < 1) return out;
  out.terms_.emplace(Monomial(p), Rat(1));
  return out;
}

Poly Poly::from_form(const LinForm& f) {
  Poly out;
  for (const auto& [p, c] : f.terms()) out += var(p) * c;
  return out;
}

Poly Poly::monomial(const Monomial& m, const Rat& c) {
  Poly out;
  out.add_term(m, c);
  return out;
}

void Poly::add_term(const Monomial& m, const Rat& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

std::optional<Rat> Poly::constant_value() const {
  if (terms_.empty()) return Rat(0);
  if (terms_.size() == 1 && terms_.begin()->first.is_one()) return terms_.begin()->second;
  return std::nullopt;
}

Rat Poly::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rat(0) : it->second;
}

std::vector<Param> Poly::params() const {
  std::map<std::string, Param> seen;
  for (const auto& t : terms_)
    for (const auto& f : t.first.factors()) seen.emplace(f.first.name, f.first);
  std::vector<Param> out;
  for (auto& kv : seen) out.push_back(kv.second);
  return out;
}

bool Poly::has_param(const std::string& name) const {
  for (const auto& t : terms_)
    if (t.first.exponent(name) > 0) return true;
  return false;
}

int Poly::degree_in(const std::string& name) const {
  int d = 0;
  for (const auto& t : terms_) d = std::max(d, t.first.exponent(name));
  return d;
}

std::vector<Poly> Poly::split(const std::string& name) const {
  std::vector<Poly> out(static_cast<std::size_t>(degree_in(name)) + 1);
  for (const auto& [m, c] : terms_) out[static_cast<std::size_t>(m.exponent(name))].add_term(m.without(name), c);
  return out;
}

Poly Poly::operator+(const Poly& o) const {
  Poly out = *this;
  out += o;
  return out;
}

Poly& Poly::operator+=(const Poly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

Poly Poly::operator-(const Poly& o) const {
  Poly out = *this;
  out -= o;
  return out;
}

Poly Poly::operator-() const { return *this * Rat(-1); }

Poly Poly::operator*(const Poly& o) const {
  Poly out;
  for (const auto& [ma, ca] : terms_)
    for (const auto& [mb, cb] : o.terms_)
      if (auto m = ma.times(mb)) out.add_term(*m, ca * cb);
  return out;
}

Poly Poly::operator*(const Rat& c) const {
  Poly out;
  if (c == 0) return out;
  out.terms_ = terms_;
  for (auto& t : out.terms_) t.second *= c;
  return out;
}

Poly Poly::pow(int n) const {
  if (n < 0) throw Error(ErrorKind::Argument, "negative power of a polynomial");
  Poly result(1), base = *this;
  while (n > 0) {
    if (n & 1) result = result * base;
    n >>= 1;
    if (n) base = base * base;
  }
  return result;
}

std::optional<Poly> Poly::divide_exact(const LinForm& f) const {
  if (f.is_zero()) return std::nullopt;
  const Param& lead = f.terms().front().first;
  Rat lc = f.leading();
  Poly rest = Poly::from_form(f.without(lead.name)) * Rat(1 / lc);
  // this = lc * (lead + rest) * Q
  std::vector<Poly> parts = split(lead.name);
  int d = static_cast<int>(parts.size()) - 1;
  if (d == 0) return is_zero() ? std::optional<Poly>(Poly()) : std::nullopt;
  std::vector<Poly> q(static_cast<std::size_t>(d));
  // parts[i] = q[i-1] + rest*q[i]  (q[d] = 0)
  q[static_cast<std::size_t>(d - 1)] = parts[static_cast<std::size_t>(d)];
  for (int i = d - 1; i >= 1; --i)
    q[static_cast<std::size_t>(i - 1)] = parts[static_cast<std::size_t>(i)] - rest * q[static_cast<std::size_t>(i)];
  if (!(parts[0] - rest * q[0]).is_zero()) return std::nullopt;
  Poly out;
  Poly lead_pow(1), x = var(lead);
  for (int i = 0; i < d; ++i) {
    out += q[static_cast<std::size_t>(i)] * lead_pow;
    lead_pow = lead_pow * x;
  }
  return out * Rat(1 / lc);
}

std::string Poly::str() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (const auto& [m, c] : terms_) {
    Rat mag = abs(c);
    if (s.empty()) {
      if (c < 0) s += "-";
    } else {
      s += c < 0 ? " - " : " + ";
    }
    if (m.is_one()) {
      s += to_string(mag);
    } else {
      if (mag != 1) s += to_string(mag) + "*";
      s += m.str();
    }
  }
  return s;
}

int NilpotentSpec::dimension() const {
  int d = 0;
  for (const auto& g : generators) d += g.order;
  return d;
}

Monomial NilpotentSpec::top() const {
  Monomial m;
  for (const auto& g : generators)
    if (auto t = m.times(Monomial(g, g.order))) m = *t;
  return m;
}

}  // namespace vgw
