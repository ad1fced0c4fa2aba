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
#include "vgw/cli.hpp"
#include "vgw/parallel.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <set>

namespace vgw {

const char* to_string(EndpointSource s) {
  switch (s) {
    case EndpointSource::Engine: return "engine";
    case EndpointSource::Abstract: return "abstract";
    case EndpointSource::Unavailable: return "unavailable";
  }
  return "?";
}

int Report::exit_code() const {
  if (error) return 1;
  for (const auto& i : identities)
    if (!i.holds) return 2;
  return 0;
}

const std::vector<std::string>& command_names() {
  static const std::vector<std::string> names = {"walls", "pair", "cross", "qcross", "crepant", "verify", "repro"};
  return names;
}

namespace {

// What a command (or a repro) asks to be computed.
struct Plan {
  bool walls = false;
  bool pairings = false;
  bool cross = false;
  bool endpoints = false;
  bool abstract = false;
  bool quantum = false;
  bool windows = false;
};

std::string vec_str(const IntVec& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + ")";
}

std::string vec_str(const RatVec& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + to_string(v[i]);
  return s + ")";
}

// Rethrows with a location prefix, keeping the kind.
[[noreturn]] void rethrow_at(const std::string& where, const Error& e) {
  throw Error(e.kind(), where + ": " + e.what());
}

std::string wall_name(std::size_t i, const Wall& w) {
  return "wall " + std::to_string(i + 1) + " (t = " + to_string(w.t) + ")";
}

class Runner {
 public:
  Runner(const ProblemDoc& doc, const RunOptions& opts) : doc_(doc), opts_(opts) {
    jobs_ = opts.jobs.value_or(doc.jobs.value_or(1));
    if (jobs_ < 1) throw Error(ErrorKind::Argument, "jobs must be positive");
    sigma_ = opts.sigma ? opts.sigma : doc.sigma;
    if (sigma_ && doc.rank && static_cast<int>(sigma_->size()) != *doc.rank)
      throw Error(ErrorKind::Argument, "sigma has " + std::to_string(sigma_->size()) + " entries; rank is " +
                                           std::to_string(*doc.rank));
    if (opts.degree && doc.rank && static_cast<int>(opts.degree->size()) != *doc.rank)
      throw Error(ErrorKind::Argument, "degree has " + std::to_string(opts.degree->size()) +
                                           " entries; rank is " + std::to_string(*doc.rank));
  }

  void run(const Plan& plan, Report& rep) {
    bool engine = doc_.has_action() && doc_.has_path();
    // Resolve lazily cached inputs before any fan-out.
    if (doc_.has_action()) {
      action();
      alpha();
    }
    if (plan.abstract && doc_.has_abstract()) abstract(rep);
    if ((plan.walls || plan.cross || plan.quantum || plan.windows) && engine) walls(rep);
    if (plan.pairings && doc_.has_action()) pairings(rep);
    if (plan.cross && engine) cross(rep, plan.endpoints);
    if (plan.quantum && engine) quantum(rep);
    if (plan.windows && engine && (opts_.window || doc_.window)) windows(rep);
  }

 private:
  const TorusAction& action() {
    if (!action_) action_ = doc_.action();
    return *action_;
  }
  const Poly& alpha() {
    if (!alpha_) alpha_ = doc_.alpha();
    return *alpha_;
  }
  const std::vector<Wall>& wall_list() {
    if (!walls_) walls_ = enumerate_walls(action(), doc_.path());
    return *walls_;
  }

  void walls(Report& rep) {
    if (rep.has_walls) return;
    rep.has_walls = true;
    const auto& ws = wall_list();
    for (std::size_t i = 0; i < ws.size(); ++i) {
      WallRow row;
      row.t = ws[i].t;
      row.zeta = ws[i].zeta;
      row.support = ws[i].support;
      row.moving_sum = 0;
      for (auto m : ws[i].moving) row.moving_sum += dot(action().weights[m], ws[i].zeta);
      row.crepant = crepant_check(action(), ws[i]);
      row.residue = "zeta_t" + std::to_string(i + 1);
      rep.walls.push_back(row);
    }
  }

  // Abstract value for an endpoint side, if the document supplies one.
  std::optional<Rat> abstract_side(const std::string& side, Report& rep) {
    if (!doc_.has_abstract()) return std::nullopt;
    if (!rep.abstract) abstract(rep);
    return side == "minus" ? rep.abstract->minus : rep.abstract->plus;
  }

  Endpoint endpoint(const std::string& side, const RatVec& chi, Report& rep) {
    Endpoint e;
    e.side = side;
    e.chi = chi;
    PairingOptions po;
    po.jobs = jobs_;
    try {
      e.value = classical_pairing(action(), chi, alpha(), po);
    } catch (const Error& err) {
      if (err.kind() != ErrorKind::NoEmptyChamber && err.kind() != ErrorKind::Unsupported)
        rethrow_at("pairing at " + vec_str(chi), err);
      e.note = err.what();
      e.source = EndpointSource::Unavailable;
      if (side != "probe") {
        if (auto v = abstract_side(side, rep)) {
          e.value = v;
          e.source = EndpointSource::Abstract;
        }
      }
    }
    return e;
  }

  void pairings(Report& rep) {
    if (doc_.chi_minus) rep.pairings.push_back(endpoint("minus", *doc_.chi_minus, rep));
    if (doc_.chi_plus) rep.pairings.push_back(endpoint("plus", *doc_.chi_plus, rep));
    for (const auto& p : doc_.probes) rep.pairings.push_back(endpoint("probe", p, rep));
    if (rep.pairings.empty()) throw Error(ErrorKind::Argument, "no characters to pair at (chi_minus, chi_plus, probe)");
  }

  void cross(Report& rep, bool endpoints) {
    const auto& ws = wall_list();
    CrossBlock b;
    b.terms.resize(ws.size());
    parallel_for(ws.size(), jobs_, [&](std::size_t i) {
      try {
        b.terms[i] = wall_term(action(), ws[i], alpha(), sigma_);
      } catch (const Error& e) {
        rethrow_at(wall_name(i, ws[i]), e);
      }
    });
    b.wall_sum = 0;
    for (const auto& t : b.terms) b.wall_sum += t;
    if (endpoints) {
      b.endpoints.push_back(endpoint("minus", doc_.chi_minus.value(), rep));
      b.endpoints.push_back(endpoint("plus", doc_.chi_plus.value(), rep));
      if (b.endpoints[0].value && b.endpoints[1].value) {
        Rat lhs = *b.endpoints[1].value - *b.endpoints[0].value;
        b.holds = lhs == b.wall_sum;
        rep.identities.push_back({"classical ledger: plus - minus = sum of wall terms", lhs, b.wall_sum, *b.holds});
      }
    }
    rep.cross = b;
  }

  void abstract(Report& rep) {
    if (rep.abstract) return;
    AbstractBlock b;
    auto data = doc_.datums();
    Param xi = Param::xi(doc_.residue);
    // Wall data grouped by wall time; untimed data form one group first.
    std::map<std::optional<Rat>, std::vector<std::size_t>> groups;
    std::vector<std::size_t> minus_side, plus_side;
    for (std::size_t i = 0; i < data.size(); ++i) {
      const auto& side = doc_.data[i].side;
      if (side == "minus") {
        minus_side.push_back(i);
      } else if (side == "plus") {
        plus_side.push_back(i);
      } else {
        std::optional<Rat> t;
        try {
          t = data[i].time();
        } catch (const Error& e) {
          rethrow_at("datum " + std::to_string(i + 1), e);
        }
        groups[t].push_back(i);
      }
    }
    auto label = [&](std::size_t i) {
      return data[i].label.empty() ? "datum " + std::to_string(i + 1) : data[i].label;
    };
    auto localize = [&](const std::vector<std::size_t>& idx, const std::string& side) -> std::optional<Rat> {
      if (idx.empty()) return std::nullopt;
      std::vector<FixedPointDatum> sel;
      for (auto i : idx) sel.push_back(data[i]);
      CohClass c;
      try {
        c = abstract_localization(sel);
      } catch (const Error& e) {
        rethrow_at(side + " side localization", e);
      }
      auto v = c.constant_value();
      if (!v) throw Error(ErrorKind::Domain, side + " side localization is not a number: " + c.str());
      return v;
    };
    auto endpoint_value = [&](const std::optional<Rat>& given, const std::vector<std::size_t>& idx,
                              const std::string& side, std::string& source) -> std::optional<Rat> {
      auto loc = localize(idx, side);
      if (given && loc) {
        rep.identities.push_back(
            {"abstract " + side + " side: given value = localization", *given, *loc, *given == *loc});
      }
      if (given) {
        source = "given";
        return given;
      }
      if (loc) source = "localization";
      return loc;
    };
    b.minus = endpoint_value(doc_.abstract_minus, minus_side, "minus", b.minus_source);
    b.plus = endpoint_value(doc_.abstract_plus, plus_side, "plus", b.plus_source);
    b.wall_sum = 0;
    for (const auto& [t, idx] : groups) {
      AbstractWall w;
      w.t = t;
      std::vector<FixedPointDatum> sel;
      for (auto i : idx) {
        sel.push_back(data[i]);
        w.labels.push_back(label(i));
      }
      try {
        w.term = abstract_wall_term(sel, xi);
      } catch (const Error& e) {
        rethrow_at("abstract wall" + (t ? " at t = " + to_string(*t) : std::string()), e);
      }
      b.wall_sum += w.term;
      w.chamber_after = b.minus.value_or(0) + b.wall_sum;
      b.walls.push_back(w);
    }
    if (b.minus && b.plus) {
      Rat lhs = *b.plus - *b.minus;
      b.holds = lhs == b.wall_sum;
      rep.identities.push_back({"abstract ledger: plus - minus = sum of wall terms", lhs, b.wall_sum, *b.holds});
    }
    rep.abstract = b;
  }

  std::vector<IntVec> degrees() {
    if (opts_.degree) return {*opts_.degree};
    return doc_.degrees;
  }

  void quantum(Report& rep) {
    auto ds = degrees();
    if (ds.empty()) throw Error(ErrorKind::Argument, "no degrees given ([quantum] degree or --degree)");
    const auto& ws = wall_list();
    std::vector<QuantumBlock> blocks(ds.size());
    PairingOptions po;
    po.sigma = sigma_;
    parallel_for(ds.size(), jobs_, [&](std::size_t n) {
      const auto& d = ds[n];
      std::string where = "degree " + vec_str(d);
      QuantumBlock& b = blocks[n];
      b.degree = d;
      try {
        b.multiplicities = index_weights(action(), d).mult;
        auto qr = quantum_kalkman_verify(action(), doc_.path(), d, alpha(), po);
        b.terms = qr.terms;
        b.wall_sum = qr.wall_sum;
        b.status_minus = qr.status_minus;
        b.status_plus = qr.status_plus;
        b.pairing_minus = qr.pairing_minus;
        b.pairing_plus = qr.pairing_plus;
        b.holds = qr.holds;
        for (const auto& p : doc_.probes) b.probes.emplace_back(p, quantum_pairing(action(), p, d, alpha()));
      } catch (const Error& e) {
        // Locate the failing wall for the message.
        for (std::size_t i = 0; i < ws.size(); ++i) {
          try {
            quantum_wall_term(action(), ws[i], d, alpha(), sigma_);
          } catch (const Error& inner) {
            rethrow_at(where + ", " + wall_name(i, ws[i]), inner);
          }
        }
        rethrow_at(where, e);
      }
    });
    for (auto& b : blocks) {
      if (b.holds)
        rep.identities.push_back({"quantum ledger in degree " + vec_str(b.degree) + ": plus - minus = sum of wall terms",
                                  b.pairing_plus - b.pairing_minus, b.wall_sum, *b.holds});
      rep.quantum.push_back(std::move(b));
    }
  }

  void windows(Report& rep) {
    const auto& ws = wall_list();
    int radius = opts_.window.value_or(doc_.window.value_or(0));
    IntVec base = doc_.window_base.value_or(IntVec(static_cast<std::size_t>(action().rank), 0));
    std::vector<std::size_t> chosen;
    if (doc_.window_wall) {
      auto w = static_cast<std::size_t>(*doc_.window_wall);
      if (w > ws.size())
        throw Error(ErrorKind::Argument, "window wall " + std::to_string(w) + " but the path crosses " +
                                             std::to_string(ws.size()) + " walls");
      chosen.push_back(w - 1);
    } else {
      for (std::size_t i = 0; i < ws.size(); ++i)
        if (ws[i].support.empty()) chosen.push_back(i);
    }
    for (auto i : chosen) {
      NovikovWindow nw;
      try {
        nw = novikov_window(action(), ws[i], base, radius, alpha(), jobs_);
      } catch (const Error& e) {
        rethrow_at(wall_name(i, ws[i]) + " window", e);
      }
      WindowBlock b;
      b.wall = i + 1;
      b.direction = nw.direction;
      b.base = nw.base;
      b.radius = nw.radius;
      b.picard_base = nw.picard_base;
      for (const auto& [r, v] : nw.values) {
        b.values.emplace_back(r, v);
        b.ratios.emplace_back(r, v * pow(nw.picard_base, r));
      }
      b.tag = nw.tag;
      rep.windows.push_back(std::move(b));
    }
  }

  const ProblemDoc& doc_;
  const RunOptions& opts_;
  int jobs_ = 1;
  std::optional<RatVec> sigma_;
  std::optional<TorusAction> action_;
  std::optional<Poly> alpha_;
  std::optional<std::vector<Wall>> walls_;
};

Plan plan_for(const std::string& command) {
  Plan p;
  if (command == "walls") {
    p.walls = true;
  } else if (command == "pair") {
    p.pairings = true;
  } else if (command == "cross") {
    p.walls = p.cross = true;
  } else if (command == "verify") {
    p.walls = p.cross = p.endpoints = p.abstract = true;
  } else if (command == "qcross") {
    p.walls = p.quantum = p.windows = true;
  } else if (command == "crepant") {
    p.walls = p.windows = true;
  } else {
    throw Error(ErrorKind::Argument, "unknown command '" + command + "'");
  }
  return p;
}

void check_inputs(const ProblemDoc& doc, const std::string& command) {
  bool engine = doc.has_action() && doc.has_path();
  auto need = [&](bool ok, const std::string& what) {
    if (!ok) throw Error(ErrorKind::Argument, "'" + command + "' needs " + what);
  };
  if (command == "walls" || command == "cross" || command == "qcross" || command == "crepant")
    need(engine, "an [action] and a [path] with chi_minus and chi_plus");
  if (command == "pair") need(doc.has_action(), "an [action] section");
  if (command == "verify") need(engine || doc.has_abstract(), "an action with a path, or abstract data");
}

template <class F>
Report timed(const std::string& echo, const RunOptions& opts, F&& body) {
  Report rep;
  rep.command = echo;
  auto start = std::chrono::steady_clock::now();
  try {
    body(rep);
  } catch (const Error& e) {
    rep.error = std::string(to_string(e.kind())) + ": " + e.what();
  } catch (const std::exception& e) {
    rep.error = std::string("internal: ") + e.what();
  }
  if (opts.timing)
    rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return rep;
}

}  // namespace

Report run_command(const ProblemDoc& doc, const std::string& command, const RunOptions& opts) {
  return timed(command, opts, [&](Report& rep) {
    if (command == "repro") throw Error(ErrorKind::Argument, "'repro' takes an example id, not a document");
    Plan plan = plan_for(command);
    check_inputs(doc, command);
    Runner(doc, opts).run(plan, rep);
  });
}

// -------------------------------------------------------------- repro ids

namespace {

struct ReproSpec {
  std::string title;
  std::string doc;
  Plan plan;
  // Extra values and identities, run after the plan.
  std::function<void(const ProblemDoc&, const RunOptions&, Report&)> extra;
};

std::string ones_weights(int k) {
  std::string s;
  for (int i = 0; i < k; ++i) s += "weight = 1\n";
  return s;
}

void expect(Report& rep, const std::string& name, const Rat& got, const Rat& want) {
  rep.identities.push_back({name, got, want, got == want});
}

const char* kBlowupAction =
    "[action]\nrank = 2\nweight = 1 0\nweight = 1 0\nweight = 1 1\nweight = 0 1\n"
    "\n[path]\nchi_minus = -1 2\nchi_plus = 2 -1\nprobe = 1 2\nprobe = 2 1\n";

std::pair<std::string, int> split_id(const std::string& id) {
  auto colon = id.find(':');
  if (colon == std::string::npos) return {id, -1};
  std::string k = id.substr(colon + 1);
  if (k.empty() || k.size() > 2 || k.find_first_not_of("0123456789") != std::string::npos)
    throw Error(ErrorKind::Argument, "bad parameter in repro id '" + id + "'");
  return {id.substr(0, colon), std::stoi(k)};
}

ReproSpec repro_spec(const std::string& id) {
  auto [name, k] = split_id(id);
  auto no_param = [&, k = k] {
    if (k >= 0) throw Error(ErrorKind::Argument, "repro id '" + name + "' takes no parameter");
  };
  ReproSpec s;
  if (name == "projspace") {
    no_param();
    s.title = "Projective space as the quotient of C^3 by scalars";
    s.doc = "[action]\nrank = 1\n" + ones_weights(3) + "\n[path]\nchi_minus = -1\nchi_plus = 1\n" +
            "\n[insertion]\nalpha = xi^2\n";
    s.plan.walls = s.plan.cross = s.plan.endpoints = true;
    s.extra = [](const ProblemDoc&, const RunOptions&, Report& rep) {
      for (int kk = 1; kk <= 6; ++kk) {
        auto act = TorusAction::make(1, std::vector<IntVec>(static_cast<std::size_t>(kk), IntVec{1}));
        int hits = 0;
        for (int a = 0; a <= 6; ++a) {
          Rat v = classical_pairing(act, {Rat(1)}, parse_insertion("xi^" + std::to_string(a), act));
          rep.values.push_back({"pairing of xi^a, k=" + std::to_string(kk) + " a=" + std::to_string(a), v});
          if (v == (a == kk - 1 ? 1 : 0)) ++hits;
        }
        expect(rep, "k=" + std::to_string(kk) + ": xi^a pairs to [a = k-1] for a = 0..6 (count)", hits, 7);
      }
    };
  } else if (name == "blowup-p1cubed") {
    no_param();
    s.title = "Blow-up of the plane from the product of three lines";
    // Walls at -a-b-c and a-b-c with (a,b,c) = (1,2,4); one fixed point each.
    s.doc =
        "[abstract]\nminus = 0\nplus = 8\n"
        "\n[datum]\nlabel = first-point\nt = -7\nden = xi, xi, xi\nrestriction = (xi + xi + xi)^2\n"
        "\n[datum]\nlabel = second-point\nt = -5\nden = -xi, xi, xi\nrestriction = (-xi + xi + xi)^2\n";
    s.plan.abstract = true;
    s.extra = [](const ProblemDoc&, const RunOptions&, Report& rep) {
      if (!rep.abstract || rep.abstract->walls.size() != 2) return;
      expect(rep, "first wall term", rep.abstract->walls[0].term, 9);
      expect(rep, "second wall term", rep.abstract->walls[1].term, -1);
      expect(rep, "8 - 9 = second wall term", Rat(8) - 9, rep.abstract->walls[1].term);
    };
  } else if (name == "blowup-c4") {
    no_param();
    s.title = "Blow-up of the plane as a quotient of C^4 by a two-torus";
    s.doc = std::string(kBlowupAction) + "\n[insertion]\nalpha = c1^2\n";
    s.plan.walls = s.plan.cross = s.plan.endpoints = s.plan.pairings = true;
    s.extra = [](const ProblemDoc&, const RunOptions&, Report& rep) {
      if (!rep.cross || rep.cross->terms.size() != 3) return;
      const Rat want[3] = {9, -1, -8};
      for (int i = 0; i < 3; ++i)
        expect(rep, "wall " + std::to_string(i + 1) + " term", rep.cross->terms[static_cast<std::size_t>(i)],
               want[i]);
      for (const auto& p : rep.pairings)
        if (p.side == "probe" && p.value)
          expect(rep, "pairing at " + vec_str(p.chi), *p.value, p.chi == RatVec{1, 2} ? 9 : 8);
      for (const auto& w : rep.walls) expect(rep, "wall not crepant (moving sum nonzero)", Rat(w.crepant), 0);
    };
  } else if (name == "crepant-res") {
    int kk = k < 0 ? 3 : k;
    if (kk < 2 || kk > 8) throw Error(ErrorKind::Argument, "crepant-res takes K in 2..8");
    std::string K = std::to_string(kk);
    s.title = "Crepant resolution of C^" + K + "/Z_" + K;
    std::string xis;
    for (int i = 0; i < kk; ++i) xis += (i ? ", " : "") + std::string("xi");
    s.doc = "[action]\nrank = 1\n" + ones_weights(kk) + "weight = -" + K + "\n" +
            "\n[path]\nchi_minus = -1\nchi_plus = 1\n"
            "\n[insertion]\nalpha = chern(" + K + ")\n"
            "\n[abstract]\nplus = " + K + "\n"
            "\n[datum]\nlabel = origin\nt = 0\nden = " + xis + ", -" + K + "xi\n" +
            "restriction = (1 + xi)^" + K + " (1 - " + K + "xi)\n" +
            "\n[datum]\nlabel = orbifold-point\nside = minus\nden = " + xis + "\nrestriction = xi^" + K +
            "\norbifold = " + K + "\n";
    s.plan.walls = s.plan.cross = s.plan.endpoints = s.plan.abstract = true;
    s.extra = [kk](const ProblemDoc&, const RunOptions&, Report& rep) {
      Rat want = Rat(kk) - make_rat(1, kk);
      if (rep.abstract && !rep.abstract->walls.empty())
        expect(rep, "abstract wall term = K - 1/K", rep.abstract->walls[0].term, want);
      if (rep.abstract && rep.abstract->minus) expect(rep, "orbifold side = 1/K", *rep.abstract->minus, make_rat(1, kk));
      if (rep.cross && !rep.cross->terms.empty()) expect(rep, "engine wall term = K - 1/K", rep.cross->terms[0], want);
      for (const auto& w : rep.walls) expect(rep, "wall is crepant", Rat(w.crepant), 1);
    };
  } else if (name == "delpezzo") {
    no_param();
    s.title = "Quartic del Pezzo surface from five lines modulo PGL(2)";
    s.doc = "[abstract]\nminus = 9\nplus = 5\n";
    // Four orbits of collinear configurations, each seen by two fixed points.
    for (int o = 1; o <= 4; ++o)
      for (const char* sign : {"+", "-"})
        s.doc += "\n[datum]\nlabel = orbit-" + std::to_string(o) + sign +
                 "\nt = 0\nden = xi, xi, -xi\nrestriction = xi^2\nweyl = 1/2\n";
    s.plan.abstract = true;
    s.extra = [](const ProblemDoc&, const RunOptions&, Report& rep) {
      if (!rep.abstract || rep.abstract->walls.empty()) return;
      expect(rep, "net wall term", rep.abstract->walls[0].term, -4);
      expect(rep, "9 + net wall term", 9 + rep.abstract->walls[0].term, 5);
    };
  } else if (name == "threepoint") {
    int kk = k < 0 ? 3 : k;
    if (kk < 2 || kk > 6) throw Error(ErrorKind::Argument, "threepoint takes K in 2..6");
    std::string K = std::to_string(kk);
    s.title = "Degree-one three-point invariants of P^" + std::to_string(kk - 1);
    s.doc = "[action]\nrank = 1\n" + ones_weights(kk) + "\n[path]\nchi_minus = -1\nchi_plus = 1\n" +
            "\n[insertion]\nalpha = xi^" + std::to_string(2 * kk - 1) + "\n\n[quantum]\ndegree = 1\n";
    s.plan.walls = s.plan.quantum = true;
    s.extra = [kk](const ProblemDoc& doc, const RunOptions&, Report& rep) {
      auto act = doc.action();
      auto ws = enumerate_walls(act, doc.path());
      Param x = xi_params(1)[0];
      int hits = 0, total = 0;
      for (int a = 0; a < kk; ++a)
        for (int b = 0; b < kk; ++b)
          for (int c = 0; c < kk; ++c) {
            Rat v = quantum_wall_term(act, ws.at(0), {1}, Poly::var(x).pow(a + b + c));
            rep.values.push_back(
                {"abc=" + std::to_string(a) + std::to_string(b) + std::to_string(c), v});
            ++total;
            if (v == (a + b + c == 2 * kk - 1 ? 1 : 0)) ++hits;
          }
      expect(rep, "term is [a+b+c = 2K-1] for all a,b,c < K (count)", hits, total);
    };
  } else if (name == "c1-blowup") {
    no_param();
    s.title = "Fifth quantum power of c1 on the blown-up plane";
    s.doc = std::string(kBlowupAction) + "\n[insertion]\nalpha = c1^5\n\n[quantum]\ndegree = 1 0\n";
    s.plan.walls = s.plan.quantum = true;
    s.extra = [](const ProblemDoc& doc, const RunOptions&, Report& rep) {
      if (rep.quantum.empty() || rep.quantum[0].terms.size() != 3) return;
      const Rat want[3] = {243, 11, 232};
      for (int i = 0; i < 3; ++i) {
        Rat t = rep.quantum[0].terms[static_cast<std::size_t>(i)];
        expect(rep, "|wall " + std::to_string(i + 1) + " term|", t < 0 ? Rat(-t) : t, want[i]);
      }
      for (const auto& [chi, v] : rep.quantum[0].probes)
        expect(rep, "quantum pairing at " + vec_str(chi), v, chi == RatVec{1, 2} ? 243 : 232);
      // Degree zero recovers the classical numbers.
      auto act = doc.action();
      auto ws = enumerate_walls(act, doc.path());
      Poly c1sq = parse_insertion("c1^2", act);
      for (std::size_t i = 0; i < ws.size(); ++i) {
        Rat q = quantum_wall_term(act, ws[i], {0, 0}, c1sq);
        rep.values.push_back({"degree (0,0), c1^2, wall " + std::to_string(i + 1), q});
        expect(rep, "degree (0,0) wall " + std::to_string(i + 1) + " = classical", q, wall_term(act, ws[i], c1sq));
      }
    };
  } else if (name == "flop") {
    no_param();
    s.title = "Simple three-fold flop";
    s.doc =
        "[action]\nrank = 1\nweight = 1\nweight = 1\nweight = -1\nweight = -1\n"
        "\n[path]\nchi_minus = -1\nchi_plus = 1\n"
        "\n[insertion]\nalpha = xi^3\n"
        "\n[quantum]\n";
    for (int d = -5; d <= 5; ++d) s.doc += "degree = " + std::to_string(d) + "\n";
    s.doc +=
        "window = 5\nbase = 0\n"
        "\n[datum]\nlabel = origin\nt = 0\nden = xi, xi, -xi, -xi\nrestriction = xi^3\n"
        "\n[datum]\nlabel = zero-section-plus\nside = plus\nbase = omega:1\n"
        "den = -omega - 2theta, -omega - 2theta\nrestriction = (omega + theta)^3\n"
        "\n[datum]\nlabel = zero-section-minus\nside = minus\nbase = omega:1\n"
        "den = -omega + 2theta, -omega + 2theta\nrestriction = (-omega + theta)^3\n";
    s.plan.walls = s.plan.cross = s.plan.endpoints = s.plan.abstract = s.plan.quantum = s.plan.windows = true;
    s.extra = [](const ProblemDoc& doc, const RunOptions&, Report& rep) {
      if (rep.abstract) {
        if (rep.abstract->plus) expect(rep, "I_plus", *rep.abstract->plus, make_rat(1, 2));
        if (rep.abstract->minus) expect(rep, "I_minus", *rep.abstract->minus, make_rat(-1, 2));
      }
      for (const auto& q : rep.quantum)
        if (!q.terms.empty()) expect(rep, "wall term in degree " + vec_str(q.degree), q.terms[0], 1);
      for (const auto& w : rep.windows) {
        expect(rep, "window tag is ae-zero", Rat(w.tag == DistributionTag::AeZero), 1);
        for (const auto& [r, v] : w.ratios) expect(rep, "picard ratio r=" + std::to_string(r), v, 1);
      }
      for (const auto& w : rep.walls) expect(rep, "wall is crepant", Rat(w.crepant), 1);
      (void)doc;
    };
  } else if (name == "nodal") {
    no_param();
    s.title = "Wall-crossing over a nodal fixed point";
    s.doc =
        "[abstract]\nminus = 1\nplus = 1\n"
        "\n[datum]\nlabel = node\nt = 0\nnum = 0\nden = xi, -xi\n";
    s.plan.abstract = true;
    s.extra = [](const ProblemDoc&, const RunOptions&, Report& rep) {
      if (rep.abstract && !rep.abstract->walls.empty())
        expect(rep, "nodal wall term", rep.abstract->walls[0].term, 0);
    };
  } else {
    throw Error(ErrorKind::Argument, "unknown repro id '" + id + "'");
  }
  return s;
}

}  // namespace

const std::vector<std::string>& repro_ids() {
  static const std::vector<std::string> ids = {"projspace", "blowup-p1cubed", "blowup-c4",  "crepant-res", "delpezzo",
                                               "threepoint", "c1-blowup",     "flop",       "nodal"};
  return ids;
}

ProblemDoc repro_problem(const std::string& id) {
  auto spec = repro_spec(id);
  auto parsed = parse_problem(spec.doc);
  if (!parsed.ok()) throw Error(ErrorKind::Parse, "built-in document for '" + id + "':\n" + parsed.message());
  return *parsed.doc;
}

Report run_repro(const std::string& id, const RunOptions& opts) {
  return timed("repro " + id, opts, [&](Report& rep) {
    auto spec = repro_spec(id);
    rep.title = spec.title;
    ProblemDoc doc = repro_problem(id);
    Runner(doc, opts).run(spec.plan, rep);
    if (spec.extra) spec.extra(doc, opts, rep);
  });
}

}  // namespace vgw
