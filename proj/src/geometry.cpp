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
#include "vgw/geometry.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <numeric>
#include <set>
#include <sstream>

namespace vgw {

namespace {

std::string vec_str(const RatVec& v) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << to_string(v[i]);
  os << ")";
  return os.str();
}

std::string vec_str(const IntVec& v) { return vec_str(to_rat(v)); }

// ------------------------------------------------------------ Fourier-Motzkin

struct Row {
  RatVec a;  // a . y <= b
  Rat b;
  std::uint64_t history = 0;
};

void normalize(Row& r) {
  Rat scale = 0;
  for (const auto& x : r.a)
    if (x != 0) {
      scale = abs(x);
      break;
    }
  if (scale == 0) return;
  for (auto& x : r.a) x /= scale;
  r.b /= scale;
}

// Feasibility of {y : rows}. Chernikov's rule prunes combinations whose
// provenance exceeds (eliminated + 1) original rows.
bool fm_feasible(std::vector<Row> rows, std::size_t n) {
  bool track = rows.size() <= 64;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    rows[i].history = track ? (std::uint64_t{1} << i) : 0;
    normalize(rows[i]);
  }
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<Row> pos, neg, next;
    for (auto& r : rows) {
      int s = sgn(r.a[j]);
      if (s > 0)
        pos.push_back(std::move(r));
      else if (s < 0)
        neg.push_back(std::move(r));
      else
        next.push_back(std::move(r));
    }
    for (const auto& p : pos)
      for (const auto& q : neg) {
        Row c;
        c.history = p.history | q.history;
        if (track && std::popcount(c.history) > static_cast<int>(j) + 2) continue;
        Rat fp = 1 / p.a[j], fq = -1 / q.a[j];
        c.a.resize(n);
        for (std::size_t i = 0; i < n; ++i) c.a[i] = p.a[i] * fp + q.a[i] * fq;
        c.a[j] = 0;
        c.b = p.b * fp + q.b * fq;
        normalize(c);
        next.push_back(std::move(c));
      }
    // Drop trivially true rows, detect contradictions, dedupe.
    std::vector<Row> kept;
    std::set<std::pair<std::vector<std::string>, std::string>> seen;
    for (auto& r : next) {
      bool zero = std::all_of(r.a.begin(), r.a.end(), [](const Rat& x) { return x == 0; });
      if (zero) {
        if (r.b < 0) return false;
        continue;
      }
      std::vector<std::string> key;
      for (const auto& x : r.a) key.push_back(x.get_str());
      if (!seen.emplace(key, r.b.get_str()).second) continue;
      kept.push_back(std::move(r));
    }
    rows = std::move(kept);
  }
  for (const auto& r : rows)
    if (r.b < 0) return false;
  return true;
}

std::vector<IntVec> distinct(const std::vector<IntVec>& gens) {
  std::vector<IntVec> out(gens);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

// Cone(gens) misses conv(points) iff some y has <g,y> >= 0 for all g and
// <p,y> <= -1 for all p.
bool cone_meets_hull(const std::vector<IntVec>& gens, const std::vector<RatVec>& points) {
  if (points.empty()) return false;
  std::size_t n = points.front().size();
  if (n == 0) return true;
  std::vector<Row> rows;
  for (const auto& g : distinct(gens)) {
    Row r;
    for (auto x : g) r.a.push_back(Rat(-x));
    r.b = 0;
    rows.push_back(std::move(r));
  }
  for (const auto& p : points) rows.push_back({p, Rat(-1), 0});
  return !fm_feasible(std::move(rows), n);
}

// ------------------------------------------------------------ linear algebra

// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> rref(std::vector<RatVec>& m) {
  std::vector<std::size_t> pivots;
  if (m.empty()) return pivots;
  std::size_t cols = m.front().size(), row = 0;
  for (std::size_t c = 0; c < cols && row < m.size(); ++c) {
    std::size_t p = row;
    while (p < m.size() && m[p][c] == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[row]);
    Rat inv = 1 / m[row][c];
    for (auto& x : m[row]) x *= inv;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == row || m[i][c] == 0) continue;
      Rat f = m[i][c];
      for (std::size_t k = 0; k < cols; ++k) m[i][k] -= f * m[row][k];
    }
    pivots.push_back(c);
    ++row;
  }
  return pivots;
}

// Basis of {y : rows . y = 0}, scaled to primitive integer vectors.
std::vector<IntVec> kernel(std::vector<RatVec> rows, std::size_t n) {
  auto piv = rref(rows);
  std::vector<IntVec> out;
  std::vector<bool> is_pivot(n, false);
  for (auto c : piv) is_pivot[c] = true;
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    RatVec v(n, Rat(0));
    v[free] = 1;
    for (std::size_t i = 0; i < piv.size(); ++i) v[piv[i]] = -rows[i][free];
    mpz_class l = 1;
    for (const auto& x : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
    IntVec iv;
    for (const auto& x : v) iv.push_back(to_int64(x * l));
    out.push_back(primitive(iv));
  }
  return out;
}

std::vector<RatVec> invert(std::vector<RatVec> m) {
  std::size_t n = m.size();
  for (std::size_t i = 0; i < n; ++i) {
    m[i].resize(2 * n, Rat(0));
    m[i][n + i] = 1;
  }
  rref(m);
  std::vector<RatVec> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i].assign(m[i].begin() + static_cast<long>(n), m[i].end());
  return out;
}

// Unimodular U with U zeta = e_1, for primitive zeta.
std::vector<IntVec> unimodular_to_e1(const IntVec& zeta) {
  std::size_t r = zeta.size();
  std::vector<IntVec> u(r, IntVec(r, 0));
  for (std::size_t i = 0; i < r; ++i) u[i][i] = 1;
  IntVec v = zeta;
  auto row_op = [&](std::size_t dst, std::size_t src, std::int64_t q) {
    v[dst] -= q * v[src];
    for (std::size_t k = 0; k < r; ++k) u[dst][k] -= q * u[src][k];
  };
  for (;;) {
    std::size_t best = r;
    int nonzero = 0;
    for (std::size_t i = 0; i < r; ++i) {
      if (v[i] == 0) continue;
      ++nonzero;
      if (best == r || std::llabs(v[i]) < std::llabs(v[best])) best = i;
    }
    if (best == r) throw Error(ErrorKind::Argument, "zero one-parameter subgroup");
    if (nonzero == 1) {
      std::swap(v[0], v[best]);
      std::swap(u[0], u[best]);
      break;
    }
    for (std::size_t i = 0; i < r; ++i)
      if (i != best && v[i] != 0) row_op(i, best, v[i] / v[best]);
  }
  if (v[0] == -1) {
    v[0] = 1;
    for (auto& x : u[0]) x = -x;
  }
  if (v[0] != 1) throw Error(ErrorKind::Argument, "one-parameter subgroup " + vec_str(zeta) + " is not primitive");
  return u;
}

// Primitive normal of the hyperplane spanned by r-1 independent vectors.
IntVec normal_of(const std::vector<IntVec>& span, std::size_t r) {
  std::vector<RatVec> rows;
  for (const auto& s : span) rows.push_back(to_rat(s));
  auto k = kernel(rows, r);
  return k.front();
}

void subsets(std::size_t n, std::size_t m, std::size_t start, IndexSet& cur,
             const std::function<void(const IndexSet&)>& f) {
  if (cur.size() == m) {
    f(cur);
    return;
  }
  for (std::size_t i = start; i < n; ++i) {
    cur.push_back(i);
    subsets(n, m, i + 1, cur, f);
    cur.pop_back();
  }
}

struct Hyperplane {
  IntVec zeta;  // normalized: first nonzero entry positive
  IndexSet support;
};

IntVec canonical_sign(IntVec z) {
  for (auto x : z) {
    if (x == 0) continue;
    if (x < 0)
      for (auto& y : z) y = -y;
    break;
  }
  return z;
}

std::vector<Hyperplane> weight_hyperplanes(const TorusAction& action) {
  std::size_t r = static_cast<std::size_t>(action.rank);
  std::vector<Hyperplane> out;
  std::set<IntVec> seen;
  auto add = [&](const IntVec& zeta) {
    IntVec z = canonical_sign(zeta);
    if (!seen.insert(z).second) return;
    Hyperplane h{z, {}};
    for (std::size_t i = 0; i < action.size(); ++i)
      if (dot(action.weights[i], z) == 0) h.support.push_back(i);
    out.push_back(std::move(h));
  };
  if (r == 1) {
    add(IntVec{1});
    return out;
  }
  auto d = distinct(action.weights);
  d.erase(std::remove(d.begin(), d.end(), IntVec(r, 0)), d.end());
  IndexSet cur;
  subsets(d.size(), r - 1, 0, cur, [&](const IndexSet& s) {
    std::vector<RatVec> rows;
    std::vector<IntVec> span;
    for (auto i : s) {
      rows.push_back(to_rat(d[i]));
      span.push_back(d[i]);
    }
    if (rank_of(rows) != static_cast<int>(r) - 1) return;
    add(normal_of(span, r));
  });
  return out;
}

// Weight sets of subspaces of dimension <= r-2 spanned by weights; {0} first.
std::vector<std::vector<IntVec>> low_dimensional_cones(const TorusAction& action) {
  std::size_t r = static_cast<std::size_t>(action.rank);
  std::vector<std::vector<IntVec>> out;
  if (r < 2) return out;
  auto d = distinct(action.weights);
  d.erase(std::remove(d.begin(), d.end(), IntVec(r, 0)), d.end());
  out.push_back({});
  std::set<std::vector<IntVec>> seen;
  for (std::size_t dim = 1; dim + 2 <= r; ++dim) {
    IndexSet cur;
    subsets(d.size(), dim, 0, cur, [&](const IndexSet& s) {
      std::vector<RatVec> rows;
      for (auto i : s) rows.push_back(to_rat(d[i]));
      if (rank_of(rows) != static_cast<int>(dim)) return;
      std::vector<IntVec> members;
      for (const auto& w : d) {
        auto ext = rows;
        ext.push_back(to_rat(w));
        if (rank_of(ext) == static_cast<int>(dim)) members.push_back(w);
      }
      if (seen.insert(members).second) out.push_back(std::move(members));
    });
  }
  return out;
}

}  // namespace

// ------------------------------------------------------------ public helpers

IntVec primitive(const IntVec& v) {
  std::int64_t g = 0;
  for (auto x : v) g = std::gcd(g, x);
  if (g == 0) return v;
  IntVec out;
  for (auto x : v) out.push_back(x / g);
  return out;
}

int rank_of(const std::vector<RatVec>& rows) {
  auto m = rows;
  return static_cast<int>(rref(m).size());
}

TorusAction TorusAction::make(int rank, std::vector<IntVec> weights) {
  if (rank < 0) throw Error(ErrorKind::Argument, "negative torus rank");
  for (std::size_t i = 0; i < weights.size(); ++i)
    if (static_cast<int>(weights[i].size()) != rank)
      throw Error(ErrorKind::Argument, "weight " + std::to_string(i + 1) + " has " +
                                           std::to_string(weights[i].size()) + " entries, expected " +
                                           std::to_string(rank));
  return TorusAction{rank, std::move(weights)};
}

std::vector<IntVec> TorusAction::select(const IndexSet& s) const {
  std::vector<IntVec> out;
  for (auto i : s) out.push_back(weights.at(i));
  return out;
}

RatVec PolPath::at(const Rat& t) const {
  RatVec out(chi_minus.size());
  Rat a = (1 - t) / 2, b = (1 + t) / 2;
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = a * chi_minus[i] + b * chi_plus[i];
  return out;
}

RatVec PolPath::velocity() const {
  RatVec out(chi_minus.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = (chi_plus[i] - chi_minus[i]) / 2;
  return out;
}

bool cone_contains(const std::vector<IntVec>& gens, const RatVec& chi) { return cone_meets_hull(gens, {chi}); }

bool cone_meets_segment(const std::vector<IntVec>& gens, const RatVec& a, const RatVec& b) {
  return cone_meets_hull(gens, {a, b});
}

bool is_semistable_support(const TorusAction& action, const RatVec& chi, const IndexSet& s) {
  return cone_contains(action.select(s), chi);
}

bool quotient_nonempty(const TorusAction& action, const RatVec& chi) { return cone_contains(action.weights, chi); }

// ------------------------------------------------------------ walls

std::vector<Wall> enumerate_walls(const TorusAction& action, const PolPath& path) {
  std::size_t r = static_cast<std::size_t>(action.rank);
  if (r == 0) throw Error(ErrorKind::Argument, "wall enumeration needs rank >= 1");
  if (path.chi_minus.size() != r || path.chi_plus.size() != r)
    throw Error(ErrorKind::Argument, "path endpoints must have " + std::to_string(r) + " entries");
  if (path.chi_minus == path.chi_plus) throw Error(ErrorKind::Argument, "path endpoints coincide");

  RatVec mid = path.at(0), vel = path.velocity();
  std::vector<Wall> walls;
  for (const auto& h : weight_hyperplanes(action)) {
    auto gens = action.select(h.support);
    Rat a = dot(h.zeta, mid), b = dot(h.zeta, vel);
    if (b == 0) {
      if (a == 0 && cone_meets_segment(gens, path.chi_minus, path.chi_plus))
        throw Error(ErrorKind::Degenerate,
                    "path runs inside the wall hyperplane with normal " + vec_str(h.zeta));
      continue;
    }
    Rat t = -a / b;
    if (t < -1 || t > 1) continue;
    RatVec chi = path.at(t);
    if (!cone_contains(gens, chi)) continue;
    if (t == -1 || t == 1)
      throw Error(ErrorKind::Degenerate, "path endpoint " + vec_str(chi) + " lies on a wall");
    Wall w;
    w.t = t;
    w.zeta = h.zeta;
    if (b < 0)
      for (auto& x : w.zeta) x = -x;
    w.support = h.support;
    for (std::size_t i = 0; i < action.size(); ++i)
      if (!std::binary_search(h.support.begin(), h.support.end(), i)) w.moving.push_back(i);
    w.chi = std::move(chi);
    walls.push_back(std::move(w));
  }
  for (const auto& low : low_dimensional_cones(action))
    if (cone_meets_segment(low, path.chi_minus, path.chi_plus))
      throw Error(ErrorKind::Degenerate,
                  low.empty() ? std::string("path passes through the zero character")
                              : "path meets a cone of codimension >= 2 spanned by " + std::to_string(low.size()) +
                                    " weights");
  std::sort(walls.begin(), walls.end(), [](const Wall& x, const Wall& y) {
    if (x.t != y.t) return x.t < y.t;
    return x.zeta < y.zeta;
  });
  for (std::size_t i = 1; i < walls.size(); ++i)
    if (walls[i].t == walls[i - 1].t)
      throw Error(ErrorKind::Degenerate, "walls " + vec_str(walls[i - 1].zeta) + " and " + vec_str(walls[i].zeta) +
                                             " meet at t = " + to_string(walls[i].t));
  return walls;
}

// ------------------------------------------------------------ descent

Rat DescentData::wall_coefficient(const RatVec& lambda) const { return dot(zeta, lambda); }

RatVec DescentData::residual_coords(const RatVec& lambda) const {
  std::size_t r = zeta.size();
  Rat z = wall_coefficient(lambda);
  RatVec shifted(r);
  for (std::size_t i = 0; i < r; ++i) shifted[i] = lambda[i] - z * sigma[i];
  // coordinates c with c . [sigma0; basis] = shifted, i.e. c = shifted * inverse
  RatVec out(r - 1, Rat(0));
  for (std::size_t j = 1; j < r; ++j)
    for (std::size_t i = 0; i < r; ++i) out[j - 1] += shifted[i] * inverse[i][j];
  return out;
}

LinForm DescentData::image(const RatVec& lambda, const Param& u, const std::vector<Param>& ys) const {
  LinForm f(u, wall_coefficient(lambda));
  auto c = residual_coords(lambda);
  for (std::size_t j = 0; j < c.size(); ++j) f = f + LinForm(ys.at(j), c[j]);
  return f;
}

DescentData DescentData::with_sigma(const RatVec& s) const {
  if (s.size() != zeta.size())
    throw Error(ErrorKind::Argument, "sigma must have " + std::to_string(zeta.size()) + " entries");
  Rat p = dot(zeta, s);
  if (p == 0) throw Error(ErrorKind::Argument, "sigma " + vec_str(s) + " is orthogonal to zeta " + vec_str(zeta));
  DescentData d = *this;
  for (std::size_t i = 0; i < s.size(); ++i) d.sigma[i] = s[i] / p;
  return d;
}

Residual residual_action(const TorusAction& action, const Wall& wall, const std::optional<RatVec>& sigma) {
  std::size_t r = static_cast<std::size_t>(action.rank);
  // Rows of the dual basis: M zeta = e1 with M = U.
  auto u = unimodular_to_e1(wall.zeta);
  DescentData d;
  d.zeta = wall.zeta;
  d.sigma = to_rat(u[0]);
  d.basis.assign(u.begin() + 1, u.end());
  std::vector<RatVec> m;
  for (const auto& row : u) m.push_back(to_rat(row));
  d.inverse = invert(m);
  if (sigma) d = d.with_sigma(*sigma);

  Residual res;
  std::vector<IntVec> weights;
  for (auto i : wall.support) {
    auto c = d.residual_coords(to_rat(action.weights[i]));
    IntVec w;
    for (const auto& x : c) w.push_back(to_int64(x));
    weights.push_back(std::move(w));
  }
  res.action = TorusAction::make(static_cast<int>(r) - 1, std::move(weights));
  res.chi = d.residual_coords(wall.chi);
  res.descent = std::move(d);
  return res;
}

// ------------------------------------------------------------ reference chamber

RatVec reference_character(const TorusAction& action, const RatVec& chi) {
  std::size_t r = static_cast<std::size_t>(action.rank);
  IntVec v(r, 0);
  std::vector<RatVec> rows;
  for (const auto& w : action.weights) rows.push_back(to_rat(w));
  if (rank_of(rows) < static_cast<int>(r)) {
    v = kernel(rows, r).front();
  } else {
    bool any = false;
    for (const auto& h : weight_hyperplanes(action)) {
      int sign = 0;
      bool ok = true;
      for (const auto& w : action.weights) {
        int s = sgn(dot(w, h.zeta));
        if (s == 0) continue;
        if (sign == 0) sign = s;
        if (s != sign) ok = false;
      }
      if (!ok || sign == 0) continue;
      for (std::size_t i = 0; i < r; ++i) v[i] += sign * h.zeta[i];
      any = true;
    }
    if (!any)
      throw Error(ErrorKind::NoEmptyChamber,
                  "no empty chamber: the weights span a cone equal to the whole character space");
  }
  std::optional<Error> last;
  for (int j = -1; j < 24; ++j) {
    RatVec c0(r);
    for (std::size_t i = 0; i < r; ++i) {
      c0[i] = Rat(-v[i]);
      if (j >= 0) c0[i] += make_rat(static_cast<std::int64_t>((i + 1) * static_cast<std::size_t>(j + 2) % 11) - 5,
                                    97 + 13 * j);
    }
    if (c0 == chi || quotient_nonempty(action, c0)) continue;
    try {
      enumerate_walls(action, PolPath{c0, chi});
      return c0;
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::Degenerate) throw;
      last = e;
    }
  }
  if (last) throw *last;
  throw Error(ErrorKind::Degenerate, "no generic path from an empty chamber to " + vec_str(chi));
}

}  // namespace vgw
