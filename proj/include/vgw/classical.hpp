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

// Kalkman wall-crossing for linear torus actions: wall terms by residues,
// pairings by recursion from an empty chamber, and an abstract mode driven
// by user-supplied fixed-point data.

#include "vgw/geometry.hpp"
#include "vgw/symbolic.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace vgw {

/// xi1..xir
std::vector<Param> xi_params(int rank);
LinForm weight_form(const IntVec& mu, const std::vector<Param>& xs);
LinForm weight_form(const RatVec& mu, const std::vector<Param>& xs);

/// Insertion grammar: rationals, xi1..xir (xi when r = 1), theta-prefixed
/// auxiliaries, + - * ^ and parentheses, and the helpers c1, chern(j),
/// chern_total built from the weights of `action`.
Poly parse_insertion(std::string_view text, const TorusAction& action);

/// Same grammar without the action helpers; identifiers are looked up in
/// `vars` (theta-prefixed names are always accepted).
Poly parse_polynomial(std::string_view text, const std::vector<Param>& vars);
LinForm parse_linear_form(std::string_view text, const std::vector<Param>& vars);

struct PairingOptions {
  std::optional<RatVec> reference;  // empty-chamber start; chosen if absent
  std::optional<RatVec> sigma;      // descent section at top-level walls
  int jobs = 1;                     // top-level wall fan-out
};

Rat wall_term(const TorusAction& action, const Wall& wall, const Poly& alpha,
              const std::optional<RatVec>& sigma = std::nullopt);

Rat classical_pairing(const TorusAction& action, const RatVec& chi, const Poly& alpha,
                      const PairingOptions& opts = {});

/// Same, keeping auxiliary parameters that survive.
CohClass classical_pairing_class(const TorusAction& action, const RatVec& chi, const Poly& alpha,
                                 const PairingOptions& opts = {});

struct FixedPointDatum {
  std::string label;
  std::optional<Rat> t;
  std::optional<std::pair<Rat, Rat>> moments;  // (w_minus, w_plus)
  std::vector<LinForm> num;
  std::vector<LinForm> den;
  CohClass restriction = CohClass(Rat(1));
  Rat weyl = 1;
  std::int64_t orbifold = 1;
  NilpotentSpec base;

  // Wall time; from the moments when t is not given.
  std::optional<Rat> time() const;
  // weyl/orbifold * integral over the base of restriction * num / den.
  CohClass localized() const;
};

Rat abstract_wall_term(const std::vector<FixedPointDatum>& data, const Param& residue_param);
CohClass abstract_localization(const std::vector<FixedPointDatum>& data);

struct KalkmanReport {
  std::vector<Wall> walls;
  std::vector<Rat> terms;
  Rat pairing_minus;
  Rat pairing_plus;
  Rat wall_sum;
  bool holds = false;
};

KalkmanReport kalkman_verify(const TorusAction& action, const PolPath& path, const Poly& alpha,
                             const PairingOptions& opts = {});

namespace detail {

// Pairing over the quotient at chi of a class in `vars` (one per character
// coordinate); other parameters ride along as units.
CohClass pair_class(const TorusAction& action, const RatVec& chi, const CohClass& beta,
                    const std::vector<Param>& vars, int depth, const PairingOptions& opts);

// Residue term at one wall. mult[i] is the Euler exponent of weight i:
// moving weights may be negative (moved to the numerator); support weights
// are repeated mult[i] times in the fixed moduli and must be >= 0.
CohClass wall_class(const TorusAction& action, const Wall& wall, const std::vector<std::int64_t>& mult,
                    const CohClass& beta, const std::vector<Param>& vars, int depth,
                    const std::optional<RatVec>& sigma);

Rat require_constant(const CohClass& c, const std::string& what);

}  // namespace detail

}  // namespace vgw
