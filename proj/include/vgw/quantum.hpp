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

// Quantum wall-crossing for linear torus models. Degree-d gauged maps from
// the projective line are modelled by the section space, in which weight
// mu_i appears <mu_i,d> + 1 times.

#include "vgw/classical.hpp"

#include <map>

namespace vgw {

struct IndexWeights {
  std::vector<IntVec> weights;
  std::vector<std::int64_t> mult;  // <mu_i,d> + 1, possibly <= 0
};

IndexWeights index_weights(const TorusAction& action, const IntVec& d);

/// Each weight repeated <mu_i,d> + 1 times; negative multiplicities throw.
TorusAction section_action(const TorusAction& action, const IntVec& d);

Rat quantum_pairing(const TorusAction& action, const RatVec& chi, const IntVec& d, const Poly& alpha,
                    const PairingOptions& opts = {});

Rat quantum_wall_term(const TorusAction& action, const Wall& wall, const IntVec& d, const Poly& alpha,
                      const std::optional<RatVec>& sigma = std::nullopt);

enum class EndpointStatus {
  Computed,  // pairing of the section-space quotient
  Absent,    // q^d does not occur on this side: the term is zero
  OneSided,  // not computable here; value implied by the other side
  Unavailable,  // no empty reference chamber (noncompact); not evaluated
};
const char* to_string(EndpointStatus s);

struct QuantumReport {
  IntVec degree;
  std::vector<Wall> walls;
  std::vector<Rat> terms;
  Rat wall_sum;
  EndpointStatus status_minus = EndpointStatus::Computed;
  EndpointStatus status_plus = EndpointStatus::Computed;
  Rat pairing_minus;  // implied when one-sided
  Rat pairing_plus;
  std::optional<bool> holds;  // empty unless both sides are computed or absent
};

QuantumReport quantum_kalkman_verify(const TorusAction& action, const PolPath& path, const IntVec& d,
                                     const Poly& alpha, const PairingOptions& opts = {});

bool crepant_check(const TorusAction& action, const Wall& wall);

/// prod over moving weights of <mu_i,zeta>^<mu_i,zeta>. One unit of Picard
/// shift along zeta adds <mu_i,zeta> copies of each moving direction to the
/// inverted Euler class, so wall terms scale by the inverse of this base;
/// multiplying by base^r undoes it.
Rat picard_base(const TorusAction& action, const Wall& wall);

Rat picard_ratio(const TorusAction& action, const Wall& wall, const IntVec& d, std::int64_t r, const Poly& alpha);

enum class DistributionTag { IdenticallyZero, AeZero, Inconclusive };
const char* to_string(DistributionTag t);

struct NovikovWindow {
  IntVec direction;  // degree shift per step
  IntVec base;       // d_0
  int radius = 0;
  Rat picard_base = 1;  // values are normalized by picard_base^r
  bool isolated = true;
  std::map<std::int64_t, Rat> values;
  DistributionTag tag = DistributionTag::Inconclusive;
};

/// Wall terms at d_0 + r zeta for r in [-R, R], classified.
NovikovWindow novikov_window(const TorusAction& action, const Wall& wall, const IntVec& d0, int radius,
                             const Poly& alpha, int jobs = 1);

DistributionTag classify_distribution(const NovikovWindow& window);

}  // namespace vgw
