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
#pragma once

// Exact arithmetic on equivariant cohomology classes: polynomials in
// equivariant (xi), auxiliary (theta) and nilpotent (omega) parameters over a
// multiset of linear-form denominators, with residue extraction.

#include "vgw/error.hpp"
#include "vgw/rational.hpp"

#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace vgw {

enum class ParamKind { Equivariant, Nilpotent, Auxiliary };

/// A named parameter. Nilpotent parameters carry their truncation order n,
/// meaning p^(n+1) = 0.
struct Param {
  std::string name;
  ParamKind kind = ParamKind::Equivariant;
  int order = 0;

  static Param xi(std::string name) { return {std::move(name), ParamKind::Equivariant, 0}; }
  static Param theta(std::string name) { return {std::move(name), ParamKind::Auxiliary, 0}; }
  static Param omega(std::string name, int order) {
    return {std::move(name), ParamKind::Nilpotent, order};
  }

  bool nilpotent() const { return kind == ParamKind::Nilpotent; }
  bool operator==(const Param& o) const {
    return name == o.name && kind == o.kind && order == o.order;
  }
};

// Throws ErrorKind::Context when two declarations of one name disagree.
void check_compatible(const Param& a, const Param& b);

/// Monomial: sorted by parameter name, positive exponents.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(const Param& p, int exponent = 1);

  const std::vector<std::pair<Param, int>>& factors() const { return factors_; }
  bool is_one() const { return factors_.empty(); }
  int exponent(const std::string& name) const;
  int degree() const;
  // Product, or nullopt when a nilpotent parameter overflows its order.
  std::optional<Monomial> times(const Monomial& o) const;
  Monomial without(const std::string& name) const;
  std::string str() const;

  // Lexicographic by name, larger exponent first, shorter monomial last.
  bool operator<(const Monomial& o) const;
  bool operator==(const Monomial& o) const;

 private:
  std::vector<std::pair<Param, int>> factors_;
};

/// Linear form with rational coefficients; zero coefficients are dropped.
class LinForm {
 public:
  LinForm() = default;
  LinForm(const Param& p, const Rat& c);
  static LinForm from_terms(const std::vector<std::pair<Param, Rat>>& terms);

  const std::vector<std::pair<Param, Rat>>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Rat coefficient(const std::string& name) const;
  LinForm without(const std::string& name) const;
  bool has_nilpotent() const;
  LinForm nilpotent_part() const;
  LinForm regular_part() const;
  // Leading (first by name) coefficient; the form must be nonzero.
  const Rat& leading() const { return terms_.front().second; }

  LinForm operator+(const LinForm& o) const;
  LinForm operator-(const LinForm& o) const;
  LinForm operator*(const Rat& c) const;
  bool operator==(const LinForm& o) const;
  bool operator<(const LinForm& o) const;
  std::string str() const;

 private:
  std::vector<std::pair<Param, Rat>> terms_;
};

/// Polynomial over Rat with eager nilpotent truncation.
class Poly {
 public:
  Poly() = default;
  Poly(const Rat& c);  // NOLINT(google-explicit-constructor)
  Poly(long c) : Poly(Rat(c)) {}  // NOLINT(google-explicit-constructor)
  static Poly var(const Param& p);
  static Poly from_form(const LinForm& f);
  static Poly monomial(const Monomial& m, const Rat& c);

  const std::map<Monomial, Rat>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::optional<Rat> constant_value() const;
  Rat coefficient(const Monomial& m) const;
  std::vector<Param> params() const;
  bool has_param(const std::string& name) const;
  int degree_in(const std::string& name) const;
  // Coefficients of powers of one parameter: result[e] multiplies name^e.
  std::vector<Poly> split(const std::string& name) const;

  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator-() const;
  Poly operator*(const Poly& o) const;
  Poly operator*(const Rat& c) const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly pow(int n) const;
  bool operator==(const Poly& o) const { return terms_ == o.terms_; }

  // Exact quotient by a nonzero form free of nilpotents; nullopt if not divisible.
  std::optional<Poly> divide_exact(const LinForm& f) const;

  std::string str() const;

 private:
  void add_term(const Monomial& m, const Rat& c);
  std::map<Monomial, Rat> terms_;
};

/// Truncation data for the cohomology of a fixed-point base.
struct NilpotentSpec {
  std::vector<Param> generators;  // nilpotent params, each with its order
  Rat normalization = 1;          // integral of the top monomial

  bool empty() const { return generators.empty(); }
  int dimension() const;  // complex dimension = sum of orders
  Monomial top() const;
};

/// numerator / prod(form^mult). Denominator forms are monic (leading
/// coefficient 1), free of nilpotent parameters, sorted and merged.
class CohClass {
 public:
  using Denominator = std::vector<std::pair<LinForm, int>>;

  CohClass() = default;
  CohClass(Poly numerator);  // NOLINT(google-explicit-constructor)
  CohClass(const Rat& c) : CohClass(Poly(c)) {}  // NOLINT(google-explicit-constructor)
  CohClass(long c) : CohClass(Poly(c)) {}  // NOLINT(google-explicit-constructor)

  // General constructor. Multiplicities may be negative (moved to the
  // numerator). Forms with nilpotent parts are expanded; a form whose regular
  // part vanishes throws ErrorKind::ZeroEuler.
  static CohClass fraction(const Poly& numerator,
                           const std::vector<std::pair<LinForm, int>>& den);
  // form^(-multiplicity)
  static CohClass inverse_power(const LinForm& form, int multiplicity);

  const Poly& numerator() const { return num_; }
  const Denominator& denominator() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.empty(); }
  std::optional<Rat> constant_value() const;
  std::vector<Param> params() const;
  bool has_param(const std::string& name) const;

  CohClass operator+(const CohClass& o) const;
  CohClass operator-(const CohClass& o) const;
  CohClass operator-() const;
  CohClass operator*(const CohClass& o) const;
  CohClass operator*(const Rat& c) const;
  CohClass& operator+=(const CohClass& o);
  CohClass pow(int n) const;
  // Cross-multiplied comparison.
  bool operator==(const CohClass& o) const;

  // Cancels denominator forms dividing the numerator.
  CohClass reduced() const;

  std::string str() const;

 private:
  CohClass(Poly num, Denominator den) : num_(std::move(num)), den_(std::move(den)) {}
  Poly num_;
  Denominator den_;
};

/// Coefficient of v^-1 of the Laurent expansion at v = 0 with v smallest.
CohClass residue_at_zero(const CohClass& c, const Param& v);

/// Residues innermost (smallest) first.
CohClass iterated_residue(const CohClass& c, const std::vector<Param>& vars);

using Substitution = std::map<std::string, Poly>;

/// Linear substitution. Images used inside denominators must be a nonzero
/// regular linear form plus a nilpotent polynomial without constant term.
CohClass substitute(const CohClass& c, const Substitution& map);
Poly substitute(const Poly& p, const Substitution& map);

/// Integral over the base: coefficient of the top nilpotent monomial times
/// the normalization. Requires a polynomial with only nilpotent parameters.
Rat integrate_top(const CohClass& c, const NilpotentSpec& spec);

/// Same, but other parameters and denominators may remain.
CohClass top_coefficient(const CohClass& c, const NilpotentSpec& spec);

/// Derivative with respect to a non-nilpotent parameter.
CohClass derivative(const CohClass& c, const Param& v);

}  // namespace vgw
