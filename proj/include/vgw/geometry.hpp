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

// Linear torus actions on affine space, polarization paths, cone
// membership, wall enumeration and descent to the residual torus.

#include "vgw/rational.hpp"
#include "vgw/symbolic.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace vgw {

using IndexSet = std::vector<std::size_t>;

/// Rank-r torus acting on C^k with weights mu_1..mu_k (repeats kept).
struct TorusAction {
  int rank = 0;
  std::vector<IntVec> weights;

  // Validates entry counts; rank 0 is allowed only for internal recursion.
  static TorusAction make(int rank, std::vector<IntVec> weights);
  std::size_t size() const { return weights.size(); }
  std::vector<IntVec> select(const IndexSet& s) const;
};

/// chi_t = ((1-t)/2) chi_minus + ((1+t)/2) chi_plus, t in [-1,1].
struct PolPath {
  RatVec chi_minus;
  RatVec chi_plus;

  RatVec at(const Rat& t) const;
  RatVec velocity() const;  // d chi_t / dt
};

struct Wall {
  Rat t;
  IntVec zeta;       // primitive, <velocity, zeta> > 0
  IndexSet support;  // <mu_i, zeta> == 0
  IndexSet moving;
  RatVec chi;        // chi_{t*}
};

/// Splitting of the character lattice at a wall. A character lambda maps to
/// <lambda,zeta> u + sum_j c_j(lambda) y_j where c are coordinates of
/// lambda - <lambda,zeta> sigma in a basis of the residual lattice.
struct DescentData {
  IntVec zeta;
  RatVec sigma;                 // <sigma, zeta> == 1
  std::vector<IntVec> basis;    // r-1 rows spanning zeta-perp in Z^r
  std::vector<RatVec> inverse;  // inverse of [sigma0; basis], sigma0 integral

  Rat wall_coefficient(const RatVec& lambda) const;
  RatVec residual_coords(const RatVec& lambda) const;
  LinForm image(const RatVec& lambda, const Param& u, const std::vector<Param>& ys) const;
  // Replace sigma; any s with <s,zeta> != 0 works and is rescaled.
  DescentData with_sigma(const RatVec& s) const;
};

struct Residual {
  TorusAction action;  // rank r-1, weights of the support in the basis
  RatVec chi;          // coordinates of chi_{t*}
  DescentData descent;
};

// chi in Cone(gens); the empty cone is {0}.
bool cone_contains(const std::vector<IntVec>& gens, const RatVec& chi);
// Segment [a,b] meets Cone(gens).
bool cone_meets_segment(const std::vector<IntVec>& gens, const RatVec& a, const RatVec& b);

bool is_semistable_support(const TorusAction& action, const RatVec& chi, const IndexSet& s);
bool quotient_nonempty(const TorusAction& action, const RatVec& chi);

/// Walls crossed by the path, sorted by t. Throws ErrorKind::Degenerate when
/// stable != semistable somewhere on the path, including the endpoints.
std::vector<Wall> enumerate_walls(const TorusAction& action, const PolPath& path);

Residual residual_action(const TorusAction& action, const Wall& wall,
                         const std::optional<RatVec>& sigma = std::nullopt);

/// A character with empty quotient from which the path to chi is generic.
/// Throws ErrorKind::NoEmptyChamber when Cone(mu) is all of Q^r.
RatVec reference_character(const TorusAction& action, const RatVec& chi);

// Lattice helpers.
IntVec primitive(const IntVec& v);
int rank_of(const std::vector<RatVec>& rows);

}  // namespace vgw
