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

#include "doctest.h"
#include "oracle.hpp"

#include "vgw/quantum.hpp"

#include <random>

using namespace vgw;

namespace {

TorusAction blowup2() { return TorusAction::make(2, {{1, 0}, {1, 0}, {1, 1}, {0, 1}}); }
TorusAction ones(int k) { return TorusAction::make(1, std::vector<IntVec>(static_cast<std::size_t>(k), IntVec{1})); }
TorusAction flop() { return TorusAction::make(1, {{1}, {1}, {-1}, {-1}}); }
RatVec rv(std::initializer_list<long> xs) {
  RatVec out;
  for (auto x : xs) out.emplace_back(x);
  return out;
}
Poly xpow(int e) { return Poly::var(xi_params(1)[0]).pow(e); }

}  // namespace

TEST_SUITE("quantum-engine") {
  TEST_CASE("index_weights and section_action") {
    auto iw = index_weights(ones(3), {1});
    CHECK(iw.mult == std::vector<std::int64_t>{2, 2, 2});
    CHECK(index_weights(blowup2(), {0, 0}).mult == std::vector<std::int64_t>{1, 1, 1, 1});
    CHECK(index_weights(flop(), {3}).mult == std::vector<std::int64_t>{4, 4, -2, -2});
    auto s = section_action(blowup2(), {1, 0});
    CHECK(s.size() == 7);
    CHECK(std::count(s.weights.begin(), s.weights.end(), IntVec{1, 0}) == 4);
    CHECK(std::count(s.weights.begin(), s.weights.end(), IntVec{1, 1}) == 2);
    CHECK(std::count(s.weights.begin(), s.weights.end(), IntVec{0, 1}) == 1);
    CHECK(section_action(blowup2(), {0, 0}).weights == blowup2().weights);
    CHECK(section_action(ones(2), {2}).size() == 6);
    CHECK_THROWS_AS(section_action(flop(), {2}), Error);
  }

  TEST_CASE("property: Riemann-Roch additivity") {
    std::mt19937 rng(1);
    std::uniform_int_distribution<int> v(-4, 4);
    auto a = blowup2();
    for (int trial = 0; trial < 50; ++trial) {
      IntVec d{v(rng), v(rng)}, e{v(rng), v(rng)};
      auto md = index_weights(a, d).mult, me = index_weights(a, e).mult;
      auto sum = index_weights(a, {d[0] + e[0], d[1] + e[1]}).mult;
      for (std::size_t i = 0; i < sum.size(); ++i) CHECK(sum[i] == md[i] + me[i] - 1);
    }
  }

  TEST_CASE("three-point invariants of projective space") {
    for (int k = 2; k <= 5; ++k) {
      auto w = enumerate_walls(ones(k), PolPath{rv({-1}), rv({1})});
      for (int a = 0; a < k; ++a)
        for (int b = 0; b < k; ++b)
          for (int c = 0; c < k; ++c) {
            int e = a + b + c;
            CHECK(quantum_wall_term(ones(k), w[0], {1}, xpow(e)) == (e == 2 * k - 1 ? 1 : 0));
          }
      auto rep = quantum_kalkman_verify(ones(k), PolPath{rv({-1}), rv({1})}, {1}, xpow(2 * k - 1));
      REQUIRE(rep.holds.has_value());
      CHECK(*rep.holds);
      CHECK(rep.pairing_plus == 1);
      CHECK(quantum_pairing(ones(k), rv({1}), {1}, xpow(2 * k - 1)) == 1);
    }
  }

  TEST_CASE("first Chern powers on the rank-2 blow-up") {
    auto a = blowup2();
    PolPath path{rv({-1, 2}), rv({2, -1})};
    Poly alpha = parse_insertion("c1^5", a);
    auto rep = quantum_kalkman_verify(a, path, {1, 0}, alpha);
    REQUIRE(rep.terms.size() == 3);
    CHECK(rep.terms[0] == 243);
    CHECK(rep.terms[1] == -11);
    CHECK(rep.terms[2] == -232);
    REQUIRE(rep.holds.has_value());
    CHECK(*rep.holds);
    CHECK(quantum_pairing(a, rv({1, 2}), {1, 0}, alpha) == 243);
    CHECK(quantum_pairing(a, rv({2, 1}), {1, 0}, alpha) == 232);
    // The middle term in the (5w+x)^5 / ((w+x)^4 (w-x)) parametrization on
    // the projective line: the w-coefficient is -(25 - 4 + 1)/x = -22/x.
    // That parametrization doubles the residual weight, so it carries a
    // factor 1/2 which the intrinsic lattice basis does not need.
    Param w = Param::omega("omega", 1), x = Param::xi("x");
    Poly num = (Poly::var(w) * Rat(5) + Poly::var(x)).pow(5);
    auto cls = CohClass::fraction(num, {{LinForm(w, Rat(1)) + LinForm(x, Rat(1)), 4},
                                        {LinForm(w, Rat(1)) + LinForm(x, Rat(-1)), 1}});
    auto top = top_coefficient(cls, NilpotentSpec{{w}, 1});
    CHECK(residue_at_zero(top, x) == CohClass(Rat(-22)));
    CHECK(residue_at_zero(top, x) * Rat(1, 2) == CohClass(rep.terms[1]));
  }

  TEST_CASE("property: descent section independence on the middle wall") {
    auto a = blowup2();
    auto walls = enumerate_walls(a, PolPath{rv({-1, 2}), rv({2, -1})});
    Poly alpha = parse_insertion("c1^5", a);
    for (const RatVec& s : {rv({1, 0}), rv({0, -1}), rv({3, 1}), RatVec{make_rat(2, 3), make_rat(-5, 7)}})
      CHECK(quantum_wall_term(a, walls[1], {1, 0}, alpha, s) == -11);
    for (const RatVec& s : {rv({1, 0}), rv({2, -1}), rv({5, 3})})
      CHECK(wall_term(a, walls[1], parse_insertion("c1^2", a), s) == -1);
  }

  TEST_CASE("property: degree zero is classical") {
    auto a = blowup2();
    auto walls = enumerate_walls(a, PolPath{rv({-1, 2}), rv({2, -1})});
    for (const char* text : {"c1^2", "xi1^2", "xi1*xi2 - 3xi2^2"}) {
      Poly alpha = parse_insertion(text, a);
      for (const auto& w : walls) CHECK(quantum_wall_term(a, w, {0, 0}, alpha) == wall_term(a, w, alpha));
      CHECK(quantum_pairing(a, rv({2, 1}), {0, 0}, alpha) == classical_pairing(a, rv({2, 1}), alpha));
    }
    for (int k = 1; k <= 4; ++k)
      CHECK(quantum_pairing(ones(k), rv({1}), {0}, xpow(k - 1)) == 1);
  }

  TEST_CASE("negative multiplicity on the fixed locus is unsupported") {
    // Rank-2 wall whose support weight has <mu,d> + 1 < 0.
    auto a = blowup2();
    auto walls = enumerate_walls(a, PolPath{rv({-1, 2}), rv({2, -1})});
    try {
      quantum_wall_term(a, walls[0], {0, -3}, parse_insertion("c1^2", a));
      CHECK(false);
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::Unsupported);
    }
  }

  TEST_CASE("flop") {
    auto f = flop();
    auto walls = enumerate_walls(f, PolPath{rv({-1}), rv({1})});
    REQUIRE(walls.size() == 1);
    CHECK(crepant_check(f, walls[0]));
    for (int d = -5; d <= 5; ++d) CHECK(quantum_wall_term(f, walls[0], {d}, xpow(3)) == 1);
    for (int r = -4; r <= 4; ++r) CHECK(picard_ratio(f, walls[0], {0}, r, xpow(3)) == 1);
    auto win = novikov_window(f, walls[0], {0}, 4, xpow(3));
    CHECK(win.tag == DistributionTag::AeZero);
    CHECK(win.values.size() == 9);
    // Degrees with a virtual side: one endpoint absent, the other implied.
    auto rep = quantum_kalkman_verify(f, PolPath{rv({-1}), rv({1})}, {3}, xpow(3));
    CHECK_FALSE(rep.holds.has_value());
    CHECK(rep.status_minus == EndpointStatus::Absent);
    CHECK(rep.status_plus == EndpointStatus::OneSided);
    CHECK(rep.pairing_plus == 1);
    // d = 0: both quotients are noncompact.
    auto zero = quantum_kalkman_verify(f, PolPath{rv({-1}), rv({1})}, {0}, xpow(3));
    CHECK(zero.status_minus == EndpointStatus::Unavailable);
    CHECK(zero.status_plus == EndpointStatus::Unavailable);
    CHECK_FALSE(zero.holds.has_value());
    CHECK(zero.wall_sum == 1);
  }

  TEST_CASE("crepant_check examples") {
    for (int k = 1; k <= 5; ++k) {
      std::vector<IntVec> w(static_cast<std::size_t>(k), IntVec{1});
      w.push_back({-k});
      auto a = TorusAction::make(1, w);
      auto walls = enumerate_walls(a, PolPath{rv({-1}), rv({1})});
      REQUIRE(walls.size() == 1);
      CHECK(crepant_check(a, walls[0]));
    }
    auto w3 = enumerate_walls(ones(3), PolPath{rv({-1}), rv({1})});
    CHECK_FALSE(crepant_check(ones(3), w3[0]));
    auto a = blowup2();
    auto walls = enumerate_walls(a, PolPath{rv({-1, 2}), rv({2, -1})});
    for (const auto& w : walls) CHECK_FALSE(crepant_check(a, w));
  }

  TEST_CASE("picard_ratio on projective space") {
    auto w = enumerate_walls(ones(2), PolPath{rv({-1}), rv({1})});
    CHECK(picard_ratio(ones(2), w[0], {1}, 0, xpow(3)) == quantum_wall_term(ones(2), w[0], {1}, xpow(3)));
    // Direct residue: xi^e / xi^(2(d+1)) is 1 iff e = 2d + 1.
    for (int e = 0; e <= 9; ++e) {
      int hits = 0;
      for (int r = -3; r <= 3; ++r) {
        Rat v = picard_ratio(ones(2), w[0], {0}, r, xpow(e));
        CHECK(v == (e == 2 * r + 1 ? 1 : 0));
        if (v != 0) ++hits;
      }
      CHECK(hits == (e % 2 == 1 && e <= 7 ? 1 : 0));
    }
    auto a = blowup2();
    auto walls = enumerate_walls(a, PolPath{rv({-1, 2}), rv({2, -1})});
    CHECK_THROWS_AS(picard_ratio(a, walls[0], {0, 0}, 1, parse_insertion("c1^2", a)), Error);
  }

  TEST_CASE("property: crepant isolated walls give polynomial ratios") {
    // Weights (1^k, -k): each ratio is polynomial in r of degree <= deg alpha.
    for (int k = 1; k <= 3; ++k) {
      std::vector<IntVec> w(static_cast<std::size_t>(k), IntVec{1});
      w.push_back({-k});
      auto a = TorusAction::make(1, w);
      auto walls = enumerate_walls(a, PolPath{rv({-1}), rv({1})});
      Poly alpha = xpow(k);
      std::vector<std::pair<Rat, Rat>> pts;
      for (int r = 0; r <= k; ++r) pts.emplace_back(Rat(r), picard_ratio(a, walls[0], {0}, r, alpha));
      for (int r = -3; r <= 6; ++r)
        CHECK(oracle::lagrange_eval(pts, Rat(r)) == picard_ratio(a, walls[0], {0}, r, alpha));
    }
  }

  TEST_CASE("classify_distribution") {
    NovikovWindow w;
    w.radius = 4;
    for (int r = -4; r <= 4; ++r) w.values[r] = 0;
    CHECK(classify_distribution(w) == DistributionTag::IdenticallyZero);
    for (int r = -4; r <= 4; ++r) w.values[r] = pow(Rat(2), r);
    CHECK(classify_distribution(w) == DistributionTag::Inconclusive);
    // Interpolating 2^r through r = -2..2 misses 2^3 (brute force).
    std::vector<std::pair<Rat, Rat>> pts;
    for (int r = -2; r <= 2; ++r) pts.emplace_back(Rat(r), pow(Rat(2), r));
    CHECK(oracle::lagrange_eval(pts, Rat(3)) != 8);
    for (int r = -4; r <= 4; ++r) w.values[r] = Rat(r * r - 3);
    CHECK(classify_distribution(w) == DistributionTag::AeZero);
    // Normalization by the Picard base.
    w.picard_base = Rat(1, 2);
    for (int r = -4; r <= 4; ++r) w.values[r] = pow(Rat(2), r);
    CHECK(classify_distribution(w) == DistributionTag::AeZero);
    w.radius = 2;
    CHECK_THROWS_AS(classify_distribution(w), Error);
  }

  TEST_CASE("window evaluation is schedule independent") {
    auto f = flop();
    auto walls = enumerate_walls(f, PolPath{rv({-1}), rv({1})});
    auto w1 = novikov_window(f, walls[0], {1}, 5, xpow(3), 1);
    auto w4 = novikov_window(f, walls[0], {1}, 5, xpow(3), 4);
    CHECK(w1.values == w4.values);
    CHECK(w1.tag == w4.tag);
  }
}
