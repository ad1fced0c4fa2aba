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

#include "vgw/classical.hpp"

#include <random>

using namespace vgw;

namespace {

TorusAction blowup2() { return TorusAction::make(2, {{1, 0}, {1, 0}, {1, 1}, {0, 1}}); }
TorusAction ones(int k) { return TorusAction::make(1, std::vector<IntVec>(static_cast<std::size_t>(k), IntVec{1})); }
RatVec rv(std::initializer_list<long> xs) {
  RatVec out;
  for (auto x : xs) out.emplace_back(x);
  return out;
}
const Param xi = Param::xi("xi");
LinForm L(long c) { return LinForm(xi, Rat(c)); }

}  // namespace

TEST_SUITE("classical-engine") {
  TEST_CASE("insertion parsing") {
    auto a = blowup2();
    auto xs = xi_params(2);
    Poly c1 = parse_insertion("c1", a);
    CHECK(c1 == Poly::var(xs[0]) * Rat(3) + Poly::var(xs[1]) * Rat(2));
    CHECK(parse_insertion("c1^2", a) == c1.pow(2));
    CHECK(parse_insertion("(3xi1 + 2*xi2)^2", a) == c1.pow(2));
    CHECK(parse_insertion("-xi1 + 1/2", a) == -Poly::var(xs[0]) + Poly(Rat(1, 2)));
    CHECK(parse_insertion("xi^3", ones(4)) == Poly::var(xs[0]).pow(3));
    CHECK(parse_insertion("chern(2)", ones(3)) == Poly::var(xs[0]).pow(2) * Rat(3));
    CHECK(parse_insertion("chern_total", ones(2)) == (Poly(1) + Poly::var(xs[0])).pow(2));
    CHECK(parse_insertion("theta*xi1", a).has_param("theta"));
    CHECK_THROWS_AS(parse_insertion("xi3", a), Error);
    CHECK_THROWS_AS(parse_insertion("xi1^", a), Error);
    CHECK_THROWS_AS(parse_insertion("(xi1", a), Error);
    CHECK_THROWS_AS(parse_insertion("foo", a), Error);
    CHECK_THROWS_AS(parse_insertion("1/0", a), Error);
  }

  TEST_CASE("projective space pairings") {
    for (int k = 1; k <= 6; ++k)
      for (int e = 0; e <= 7; ++e) {
        Poly alpha = Poly::var(xi_params(1)[0]).pow(e);
        CHECK(classical_pairing(ones(k), rv({1}), alpha) == (e == k - 1 ? 1 : 0));
      }
  }

  TEST_CASE("wall_term examples") {
    auto w = enumerate_walls(ones(4), PolPath{rv({-1}), rv({1})});
    CHECK(wall_term(ones(4), w[0], parse_insertion("xi^3", ones(4))) == 1);

    auto a = blowup2();
    auto walls = enumerate_walls(a, PolPath{rv({-1, 2}), rv({2, -1})});
    Poly alpha = parse_insertion("c1^2", a);
    CHECK(wall_term(a, walls[0], alpha) == 9);
    CHECK(wall_term(a, walls[1], alpha) == -1);
    CHECK(wall_term(a, walls[2], alpha) == -8);
  }

  TEST_CASE("rank-2 blow-up pairings") {
    auto a = blowup2();
    Poly alpha = parse_insertion("c1^2", a);
    CHECK(classical_pairing(a, rv({1, 2}), alpha) == 9);
    CHECK(classical_pairing(a, rv({2, 1}), alpha) == 8);
    CHECK(classical_pairing(a, rv({2, -1}), alpha) == 0);
    // Toric divisors at chi = (2,1): D1 = D2 = xi1 = H - E, D3 = H, D4 = xi2 = E.
    CHECK(classical_pairing(a, rv({2, 1}), parse_insertion("xi2^2", a)) == -1);
    CHECK(classical_pairing(a, rv({2, 1}), parse_insertion("xi1^2", a)) == 0);
    CHECK(classical_pairing(a, rv({2, 1}), parse_insertion("xi1*xi2", a)) == 1);
    // At chi = (1,2) the quotient is the plane: xi1 = H, xi2 = 0 after the
    // blow-down, so xi1^2 = 1.
    CHECK(classical_pairing(a, rv({1, 2}), parse_insertion("xi1^2", a)) == 1);
  }

  TEST_CASE("kalkman_verify examples") {
    auto a = blowup2();
    auto rep = kalkman_verify(a, PolPath{rv({-1, 2}), rv({2, -1})}, parse_insertion("c1^2", a));
    CHECK(rep.holds);
    CHECK(rep.pairing_minus == 0);
    CHECK(rep.pairing_plus == 0);
    REQUIRE(rep.terms.size() == 3);
    CHECK(rep.terms == std::vector<Rat>{Rat(9), Rat(-1), Rat(-8)});

    auto inside = kalkman_verify(a, PolPath{rv({1, 2}), rv({1, 3})}, parse_insertion("c1^2", a));
    CHECK(inside.holds);
    CHECK(inside.terms.empty());

    for (int k = 1; k <= 5; ++k) {
      auto r = kalkman_verify(ones(k), PolPath{rv({-1}), rv({1})},
                              Poly::var(xi_params(1)[0]).pow(k - 1));
      CHECK(r.holds);
      CHECK(r.pairing_plus == 1);
      CHECK(r.pairing_minus == 0);
    }
  }

  TEST_CASE("pairing needs an empty chamber") {
    auto flop = TorusAction::make(1, {{1}, {1}, {-1}, {-1}});
    try {
      classical_pairing(flop, rv({1}), parse_insertion("xi^3", flop));
      CHECK(false);
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::NoEmptyChamber);
    }
  }

  TEST_CASE("abstract_wall_term examples") {
    SUBCASE("nodal point") {
      FixedPointDatum d;
      d.num = {L(0)};
      d.den = {L(1), L(-1)};
      CHECK(abstract_wall_term({d}, xi) == 0);
      // Ledger: the smooth side contributes 1 on either side.
      CHECK(1 - 1 == abstract_wall_term({d}, xi));
    }
    SUBCASE("del Pezzo") {
      std::vector<FixedPointDatum> data;
      for (int i = 0; i < 8; ++i) {
        FixedPointDatum d;
        d.label = "orbit" + std::to_string(i);
        d.restriction = CohClass(Poly::var(xi).pow(2));
        d.den = {L(1), L(1), L(-1)};
        d.weyl = Rat(1, 2);
        data.push_back(d);
      }
      CHECK(abstract_wall_term(data, xi) == -4);
      CHECK(9 + abstract_wall_term(data, xi) == 5);
    }
    SUBCASE("crepant resolution") {
      for (int k = 2; k <= 5; ++k) {
        std::vector<IntVec> w(static_cast<std::size_t>(k), IntVec{1});
        w.push_back({-k});
        auto act = TorusAction::make(1, w);
        Poly ck = parse_insertion("chern(" + std::to_string(k) + ")", act);
        FixedPointDatum d;
        d.restriction = CohClass(substitute(ck, {{"xi1", Poly::var(xi)}}));
        for (int i = 0; i < k; ++i) d.den.push_back(L(1));
        d.den.push_back(L(-k));
        CHECK(abstract_wall_term({d}, xi) == Rat(k) - Rat(1, k));
      }
    }
    SUBCASE("blow-up through the product of lines") {
      FixedPointDatum d;
      d.restriction = CohClass(Poly::var(xi).pow(2));
      d.den = {L(-1), L(1), L(1)};
      CHECK(abstract_wall_term({d}, xi) == -1);
      // First wall (3xi)^2 / xi^3 = 9; ledger 8 - 9 = -1.
      FixedPointDatum first;
      first.restriction = CohClass(Poly::var(xi).pow(2) * Rat(9));
      first.den = {L(1), L(1), L(1)};
      CHECK(abstract_wall_term({first}, xi) == 9);
      CHECK(Rat(8) - abstract_wall_term({first}, xi) == abstract_wall_term({d}, xi));
    }
    SUBCASE("mismatched wall times") {
      FixedPointDatum a, b;
      a.t = Rat(0);
      b.moments = std::make_pair(Rat(-1), Rat(3));
      CHECK(b.time() == Rat(-1, 2));
      CHECK_THROWS_AS(abstract_wall_term({a, b}, xi), Error);
    }
    SUBCASE("zero denominator") {
      FixedPointDatum d;
      d.den = {L(0)};
      CHECK_THROWS_AS(abstract_wall_term({d}, xi), Error);
    }
  }

  TEST_CASE("abstract_localization examples") {
    Param w = Param::omega("omega", 1);
    Param th = Param::theta("theta");
    Poly W = Poly::var(w), T = Poly::var(th);
    NilpotentSpec p1{{w}, 1};
    FixedPointDatum plus;
    plus.base = p1;
    plus.restriction = CohClass((W + T).pow(3));
    plus.den = {LinForm(w, Rat(-1)) + LinForm(th, Rat(-2)), LinForm(w, Rat(-1)) + LinForm(th, Rat(-2))};
    CHECK(abstract_localization({plus}) == CohClass(Rat(1, 2)));
    FixedPointDatum minus = plus;
    minus.restriction = CohClass((-W + T).pow(3));
    minus.den = {LinForm(w, Rat(-1)) + LinForm(th, Rat(2)), LinForm(w, Rat(-1)) + LinForm(th, Rat(2))};
    CHECK(abstract_localization({minus}) == CohClass(Rat(-1, 2)));
    FixedPointDatum point;
    point.restriction = CohClass(Rat(7));
    CHECK(abstract_localization({point}) == CohClass(Rat(7)));
  }

  TEST_CASE("property: degree selection on projective space") {
    for (int k = 1; k <= 5; ++k) {
      auto w = enumerate_walls(ones(k), PolPath{rv({-1}), rv({1})});
      for (int e = 0; e <= 2 * k; ++e)
        CHECK(wall_term(ones(k), w[0], Poly::var(xi_params(1)[0]).pow(e)) == (e == k - 1 ? 1 : 0));
    }
  }

  TEST_CASE("property: path independence on random pointed rank-2 actions") {
    std::mt19937 rng(99);
    std::uniform_int_distribution<int> wx(0, 3), coef(-3, 3), sz(3, 5);
    int tested = 0;
    for (int trial = 0; trial < 400 && tested < 25; ++trial) {
      std::vector<IntVec> ws;
      int k = sz(rng);
      for (int i = 0; i < k; ++i) {
        IntVec v{wx(rng), wx(rng)};
        if (v[0] == 0 && v[1] == 0) v[0] = 1;
        ws.push_back(v);
      }
      auto a = TorusAction::make(2, ws);
      RatVec chi;
      for (const auto& v : ws) {
        if (chi.empty()) chi = RatVec{Rat(0), Rat(0)};
        chi[0] += v[0] * (1 + (trial + static_cast<int>(chi.size())) % 3);
        chi[1] += v[1];
      }
      chi[0] += make_rat(1, 7);
      // Random insertion of the quotient dimension k - 2.
      auto xs = xi_params(2);
      Poly alpha;
      for (int e = 0; e <= k - 2; ++e)
        alpha += Poly::var(xs[0]).pow(e) * Poly::var(xs[1]).pow(k - 2 - e) * Rat(coef(rng));
      std::vector<Rat> values;
      for (const RatVec& c0 : {RatVec{Rat(-1), Rat(-1)}, RatVec{Rat(-5), make_rat(1, 3)},
                               RatVec{make_rat(1, 4), Rat(-3)}, RatVec{Rat(-2), make_rat(-7, 5)}}) {
        if (quotient_nonempty(a, c0)) continue;
        PairingOptions o;
        o.reference = c0;
        try {
          values.push_back(classical_pairing(a, chi, alpha, o));
        } catch (const Error& e) {
          if (e.kind() != ErrorKind::Degenerate) throw;
        }
      }
      if (values.size() < 2) continue;
      for (const auto& v : values) CHECK(v == values.front());
      ++tested;
    }
    CHECK(tested >= 20);
  }

  TEST_CASE("property: closed loops through empty chambers sum to zero") {
    auto a = blowup2();
    Poly alpha = parse_insertion("xi1*xi2 + 2xi2^2", a);
    auto walls = enumerate_walls(a, PolPath{rv({-1, 2}), rv({2, -1})});
    Rat s = 0;
    for (const auto& w : walls) s += wall_term(a, w, alpha);
    CHECK(s == 0);
  }

  TEST_CASE("property: Kalkman identity on random rank-1 positive actions") {
    std::mt19937 rng(4242);
    std::uniform_int_distribution<int> w(1, 3), sz(1, 5), coef(-5, 5);
    for (int trial = 0; trial < 60; ++trial) {
      int k = sz(rng);
      std::vector<IntVec> ws;
      Rat prod = 1;
      for (int i = 0; i < k; ++i) {
        ws.push_back({w(rng)});
        prod *= ws.back()[0];
      }
      auto a = TorusAction::make(1, ws);
      Param x = xi_params(1)[0];
      Rat top(coef(rng));
      Poly alpha = Poly::var(x).pow(k - 1) * top;
      if (k >= 2) alpha += Poly::var(x).pow(k - 2) * Rat(coef(rng));
      alpha += Poly::var(x).pow(k) * Rat(coef(rng));
      auto rep = kalkman_verify(a, PolPath{rv({-1}), rv({2})}, alpha);
      CHECK(rep.holds);
      // Weighted projective space: the top class integrates to 1/prod(w).
      CHECK(rep.pairing_plus == top / prod);
    }
  }

  TEST_CASE("parallel evaluation is deterministic") {
    auto a = blowup2();
    Poly alpha = parse_insertion("c1^2", a);
    PairingOptions seq, par;
    par.jobs = 4;
    auto r1 = kalkman_verify(a, PolPath{rv({-1, 2}), rv({2, -1})}, alpha, seq);
    auto r2 = kalkman_verify(a, PolPath{rv({-1, 2}), rv({2, -1})}, alpha, par);
    CHECK(r1.terms == r2.terms);
    CHECK(classical_pairing(a, rv({2, 1}), alpha, par) == 8);
  }
}
