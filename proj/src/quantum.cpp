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
#include "vgw/quantum.hpp"

#include "vgw/parallel.hpp"

#include <algorithm>

namespace vgw {

namespace {

void check_degree(const TorusAction& action, const IntVec& d) {
  if (static_cast<int>(d.size()) != action.rank)
    throw Error(ErrorKind::Argument, "degree must have " + std::to_string(action.rank) + " entries");
}

IntVec shifted(const IntVec& d, const IntVec& dir, std::int64_t r) {
  IntVec out = d;
  for (std::size_t i = 0; i < out.size(); ++i) out[i] += r * dir[i];
  return out;
}

// Lagrange interpolation through (x_i, y_i), evaluated at x.
Rat interpolate(const std::vector<std::pair<Rat, Rat>>& pts, const Rat& x) {
  Rat s = 0;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    Rat t = pts[i].second;
    for (std::size_t j = 0; j < pts.size(); ++j)
      if (j != i) t *= (x - pts[j].first) / (pts[i].first - pts[j].first);
    s += t;
  }
  return s;
}

}  // namespace

IndexWeights index_weights(const TorusAction& action, const IntVec& d) {
  check_degree(action, d);
  IndexWeights iw;
  iw.weights = action.weights;
  for (const auto& w : action.weights) iw.mult.push_back(to_int64(dot(w, d)) + 1);
  return iw;
}

TorusAction section_action(const TorusAction& action, const IntVec& d) {
  auto iw = index_weights(action, d);
  std::vector<IntVec> out;
  for (std::size_t i = 0; i < iw.weights.size(); ++i) {
    if (iw.mult[i] < 0)
      throw Error(ErrorKind::Unsupported, "weight " + std::to_string(i + 1) + " has negative multiplicity " +
                                              std::to_string(iw.mult[i]) + " in degree " +
                                              [&] {
                                                std::string s;
                                                for (std::size_t a = 0; a < d.size(); ++a)
                                                  s += (a ? "," : "") + std::to_string(d[a]);
                                                return s;
                                              }() +
                                              "; the section space is virtual");
    for (std::int64_t c = 0; c < iw.mult[i]; ++c) out.push_back(iw.weights[i]);
  }
  return TorusAction::make(action.rank, std::move(out));
}

Rat quantum_pairing(const TorusAction& action, const RatVec& chi, const IntVec& d, const Poly& alpha,
                    const PairingOptions& opts) {
  return classical_pairing(section_action(action, d), chi, alpha, opts);
}

Rat quantum_wall_term(const TorusAction& action, const Wall& wall, const IntVec& d, const Poly& alpha,
                      const std::optional<RatVec>& sigma) {
  auto iw = index_weights(action, d);
  auto c = detail::wall_class(action, wall, iw.mult, CohClass(alpha), xi_params(action.rank), 0, sigma);
  return detail::require_constant(c, "quantum wall term");
}

const char* to_string(EndpointStatus s) {
  switch (s) {
    case EndpointStatus::Computed: return "computed";
    case EndpointStatus::Absent: return "absent";
    case EndpointStatus::OneSided: return "one-sided";
    case EndpointStatus::Unavailable: return "unavailable";
  }
  return "?";
}

QuantumReport quantum_kalkman_verify(const TorusAction& action, const PolPath& path, const IntVec& d,
                                     const Poly& alpha, const PairingOptions& opts) {
  QuantumReport rep;
  rep.degree = d;
  rep.walls = enumerate_walls(action, path);
  rep.terms.resize(rep.walls.size());
  parallel_for(rep.walls.size(), opts.jobs, [&](std::size_t i) {
    rep.terms[i] = quantum_wall_term(action, rep.walls[i], d, alpha, opts.sigma);
  });
  rep.wall_sum = 0;
  for (const auto& t : rep.terms) rep.wall_sum += t;

  auto iw = index_weights(action, d);
  bool virtual_space = std::any_of(iw.mult.begin(), iw.mult.end(), [](std::int64_t m) { return m < 0; });
  std::vector<IntVec> positive;
  for (std::size_t i = 0; i < iw.mult.size(); ++i)
    if (iw.mult[i] > 0) positive.push_back(iw.weights[i]);
  PairingOptions inner = opts;
  inner.sigma.reset();
  inner.jobs = 1;
  auto endpoint = [&](const RatVec& chi, Rat& value) {
    if (!virtual_space) {
      try {
        value = quantum_pairing(action, chi, d, alpha, inner);
      } catch (const Error& e) {
        if (e.kind() != ErrorKind::NoEmptyChamber) throw;
        value = 0;
        return EndpointStatus::Unavailable;
      }
      return EndpointStatus::Computed;
    }
    value = 0;
    if (!cone_contains(positive, chi)) return EndpointStatus::Absent;
    return EndpointStatus::OneSided;
  };
  rep.status_minus = endpoint(path.chi_minus, rep.pairing_minus);
  rep.status_plus = endpoint(path.chi_plus, rep.pairing_plus);
  auto known = [](EndpointStatus s) { return s == EndpointStatus::Computed || s == EndpointStatus::Absent; };
  bool km = known(rep.status_minus), kp = known(rep.status_plus);
  if (km && kp) {
    rep.holds = rep.pairing_plus - rep.pairing_minus == rep.wall_sum;
  } else if (kp && rep.status_minus == EndpointStatus::OneSided) {
    rep.pairing_minus = rep.pairing_plus - rep.wall_sum;
  } else if (km && rep.status_plus == EndpointStatus::OneSided) {
    rep.pairing_plus = rep.pairing_minus + rep.wall_sum;
  }
  return rep;
}

bool crepant_check(const TorusAction& action, const Wall& wall) {
  Rat s = 0;
  for (auto i : wall.moving) s += dot(action.weights[i], wall.zeta);
  return s == 0;
}

Rat picard_base(const TorusAction& action, const Wall& wall) {
  Rat b = 1;
  for (auto i : wall.moving) {
    auto m = to_int64(dot(action.weights[i], wall.zeta));
    b *= pow(Rat(m), m);
  }
  return b;
}

Rat picard_ratio(const TorusAction& action, const Wall& wall, const IntVec& d, std::int64_t r, const Poly& alpha) {
  check_degree(action, d);
  if (!wall.support.empty())
    throw Error(ErrorKind::Unsupported, "Picard ratio needs an isolated fixed locus; the wall has " +
                                            std::to_string(wall.support.size()) + " fixed coordinates");
  return quantum_wall_term(action, wall, shifted(d, wall.zeta, r), alpha) * pow(picard_base(action, wall), r);
}

const char* to_string(DistributionTag t) {
  switch (t) {
    case DistributionTag::IdenticallyZero: return "identically-zero";
    case DistributionTag::AeZero: return "ae-zero";
    case DistributionTag::Inconclusive: return "inconclusive";
  }
  return "?";
}

NovikovWindow novikov_window(const TorusAction& action, const Wall& wall, const IntVec& d0, int radius,
                             const Poly& alpha, int jobs) {
  check_degree(action, d0);
  if (radius < 3) throw Error(ErrorKind::Argument, "window radius must be at least 3");
  NovikovWindow w;
  w.direction = wall.zeta;
  w.base = d0;
  w.radius = radius;
  w.isolated = wall.support.empty();
  w.picard_base = picard_base(action, wall);
  std::vector<Rat> vals(static_cast<std::size_t>(2 * radius + 1));
  parallel_for(vals.size(), jobs, [&](std::size_t i) {
    auto r = static_cast<std::int64_t>(i) - radius;
    vals[i] = quantum_wall_term(action, wall, shifted(d0, wall.zeta, r), alpha);
  });
  for (std::size_t i = 0; i < vals.size(); ++i) w.values[static_cast<std::int64_t>(i) - radius] = vals[i];
  w.tag = classify_distribution(w);
  return w;
}

DistributionTag classify_distribution(const NovikovWindow& window) {
  if (window.radius < 3) throw Error(ErrorKind::Argument, "window radius must be at least 3");
  for (std::int64_t r = -window.radius; r <= window.radius; ++r)
    if (!window.values.count(r)) throw Error(ErrorKind::Argument, "window is missing r = " + std::to_string(r));
  bool zero = std::all_of(window.values.begin(), window.values.end(), [](const auto& kv) { return kv.second == 0; });
  if (zero) return DistributionTag::IdenticallyZero;
  if (!window.isolated) return DistributionTag::Inconclusive;
  auto normalized = [&](std::int64_t r) -> Rat { return window.values.at(r) * pow(window.picard_base, r); };
  std::int64_t half = window.radius / 2;
  std::vector<std::pair<Rat, Rat>> pts;
  for (std::int64_t r = -half; r <= half; ++r) pts.emplace_back(Rat(r), normalized(r));
  for (std::int64_t r = -window.radius; r <= window.radius; ++r) {
    if (r >= -half && r <= half) continue;
    if (interpolate(pts, Rat(r)) != normalized(r)) return DistributionTag::Inconclusive;
  }
  return DistributionTag::AeZero;
}

}  // namespace vgw
