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
#include "vgw/classical.hpp"

#include "vgw/parallel.hpp"

namespace vgw {

namespace detail {

Rat require_constant(const CohClass& c, const std::string& what) {
  if (auto v = c.reduced().constant_value()) return *v;
  throw Error(ErrorKind::Domain, what + " is not a number: " + c.str());
}

CohClass wall_class(const TorusAction& action, const Wall& wall, const std::vector<std::int64_t>& mult,
                    const CohClass& beta, const std::vector<Param>& vars, int depth,
                    const std::optional<RatVec>& sigma) {
  Residual res = residual_action(action, wall, sigma);
  const auto& d = res.descent;

  // Fixed moduli: support weights, repeated by multiplicity.
  std::vector<IntVec> fixed;
  for (std::size_t n = 0; n < wall.support.size(); ++n) {
    auto i = wall.support[n];
    if (mult[i] < 0)
      throw Error(ErrorKind::Unsupported, "weight " + std::to_string(i + 1) +
                                              " on the fixed locus has negative multiplicity " +
                                              std::to_string(mult[i]) + "; virtual fixed moduli are not modelled");
    for (std::int64_t c = 0; c < mult[i]; ++c) fixed.push_back(res.action.weights[n]);
  }
  TorusAction fixed_action = TorusAction::make(res.action.rank, std::move(fixed));

  Param u = Param::xi("zeta@" + std::to_string(depth));
  std::vector<Param> ys;
  for (int j = 0; j < res.action.rank; ++j)
    ys.push_back(Param::xi("eta@" + std::to_string(depth) + "_" + std::to_string(j + 1)));

  Substitution sub;
  for (std::size_t a = 0; a < vars.size(); ++a) {
    RatVec e(vars.size(), Rat(0));
    e[a] = 1;
    sub[vars[a].name] = Poly::from_form(d.image(e, u, ys));
  }
  std::vector<std::pair<LinForm, int>> euler;
  for (auto i : wall.moving) {
    if (mult[i] == 0) continue;
    euler.emplace_back(d.image(to_rat(action.weights[i]), u, ys), static_cast<int>(mult[i]));
  }
  CohClass integrand = substitute(beta, sub) * CohClass::fraction(Poly(1), euler);
  CohClass inner = pair_class(fixed_action, res.chi, integrand, ys, depth + 1, PairingOptions{});
  return residue_at_zero(inner, u);
}

CohClass pair_class(const TorusAction& action, const RatVec& chi, const CohClass& beta,
                    const std::vector<Param>& vars, int depth, const PairingOptions& opts) {
  if (action.rank == 0) {
    if (action.size() > 0)
      throw Error(ErrorKind::Unsupported, std::to_string(action.size()) +
                                              " coordinates with trivial action make the quotient noncompact");
    return beta;
  }
  if (!quotient_nonempty(action, chi)) return CohClass();
  RatVec chi0 = opts.reference ? *opts.reference : reference_character(action, chi);
  if (quotient_nonempty(action, chi0))
    throw Error(ErrorKind::Argument, "reference character must have an empty quotient");
  auto walls = enumerate_walls(action, PolPath{chi0, chi});
  std::vector<std::int64_t> ones(action.size(), 1);
  std::vector<CohClass> terms(walls.size());
  parallel_for(walls.size(), depth == 0 ? opts.jobs : 1, [&](std::size_t i) {
    terms[i] = wall_class(action, walls[i], ones, beta, vars, depth, depth == 0 ? opts.sigma : std::nullopt);
  });
  CohClass sum;
  for (const auto& t : terms) sum += t;
  return sum.reduced();
}

}  // namespace detail

Rat wall_term(const TorusAction& action, const Wall& wall, const Poly& alpha, const std::optional<RatVec>& sigma) {
  std::vector<std::int64_t> ones(action.size(), 1);
  auto c = detail::wall_class(action, wall, ones, CohClass(alpha), xi_params(action.rank), 0, sigma);
  return detail::require_constant(c, "wall term");
}

CohClass classical_pairing_class(const TorusAction& action, const RatVec& chi, const Poly& alpha,
                                 const PairingOptions& opts) {
  if (static_cast<int>(chi.size()) != action.rank)
    throw Error(ErrorKind::Argument, "character must have " + std::to_string(action.rank) + " entries");
  return detail::pair_class(action, chi, CohClass(alpha), xi_params(action.rank), 0, opts);
}

Rat classical_pairing(const TorusAction& action, const RatVec& chi, const Poly& alpha, const PairingOptions& opts) {
  return detail::require_constant(classical_pairing_class(action, chi, alpha, opts), "pairing");
}

// ------------------------------------------------------------ abstract data

std::optional<Rat> FixedPointDatum::time() const {
  if (t) return t;
  if (!moments) return std::nullopt;
  auto [wm, wp] = *moments;
  if (wm == wp)
    throw Error(ErrorKind::Argument, "datum '" + label + "': equal moment values never cross zero");
  return (wm + wp) / (wm - wp);
}

CohClass FixedPointDatum::localized() const {
  if (orbifold < 1) throw Error(ErrorKind::Argument, "datum '" + label + "': orbifold order must be >= 1");
  Poly prod(1);
  for (const auto& f : num) prod = prod * Poly::from_form(f);
  std::vector<std::pair<LinForm, int>> dens;
  for (const auto& f : den) {
    if (f.is_zero()) throw Error(ErrorKind::ZeroEuler, "datum '" + label + "': zero denominator weight");
    dens.emplace_back(f, 1);
  }
  CohClass c = restriction * CohClass::fraction(prod, dens);
  return top_coefficient(c, base) * (weyl / Rat(orbifold));
}

Rat abstract_wall_term(const std::vector<FixedPointDatum>& data, const Param& residue_param) {
  std::optional<Rat> common;
  CohClass sum;
  for (const auto& d : data) {
    if (auto t = d.time()) {
      if (common && *common != *t)
        throw Error(ErrorKind::Argument, "datum '" + d.label + "' sits at t = " + to_string(*t) +
                                             ", not at the common wall time " + to_string(*common));
      common = t;
    }
    sum += residue_at_zero(d.localized(), residue_param);
  }
  return detail::require_constant(sum, "abstract wall term");
}

CohClass abstract_localization(const std::vector<FixedPointDatum>& data) {
  CohClass sum;
  for (const auto& d : data) sum += d.localized();
  return sum.reduced();
}

KalkmanReport kalkman_verify(const TorusAction& action, const PolPath& path, const Poly& alpha,
                             const PairingOptions& opts) {
  KalkmanReport rep;
  rep.walls = enumerate_walls(action, path);
  rep.terms.resize(rep.walls.size());
  parallel_for(rep.walls.size(), opts.jobs,
               [&](std::size_t i) { rep.terms[i] = wall_term(action, rep.walls[i], alpha, opts.sigma); });
  PairingOptions inner = opts;
  inner.sigma.reset();
  inner.jobs = 1;
  rep.pairing_minus = classical_pairing(action, path.chi_minus, alpha, inner);
  rep.pairing_plus = classical_pairing(action, path.chi_plus, alpha, inner);
  rep.wall_sum = 0;
  for (const auto& t : rep.terms) rep.wall_sum += t;
  rep.holds = rep.pairing_plus - rep.pairing_minus == rep.wall_sum;
  return rep;
}

}  // namespace vgw
