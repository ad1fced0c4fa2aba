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

#include <json.hpp>

#include <cstdio>
#include <sstream>

namespace vgw {

namespace {

using Json = nlohmann::ordered_json;

bool ledger_closed(const Report& r) {
  for (const auto& i : r.identities)
    if (!i.holds) return false;
  return !r.error.has_value();
}

// ------------------------------------------------------------------ machine

Json q(const Rat& r) { return to_pq(r); }

Json q(const RatVec& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(to_pq(x));
  return a;
}

Json ints(const IntVec& v) {
  Json a = Json::array();
  for (auto x : v) a.push_back(x);
  return a;
}

Json one_based(const IndexSet& s) {
  Json a = Json::array();
  for (auto i : s) a.push_back(i + 1);
  return a;
}

Json endpoint_json(const Endpoint& e) {
  Json j;
  j["side"] = e.side;
  j["chi"] = q(e.chi);
  j["value"] = e.value ? q(*e.value) : Json();
  j["source"] = to_string(e.source);
  if (!e.note.empty()) j["note"] = e.note;
  return j;
}

std::string machine(const Report& r) {
  Json j;
  j["schema"] = "vgw-report/1";
  j["version"] = VGW_VERSION_STRING;
  j["command"] = r.command;
  if (!r.title.empty()) j["title"] = r.title;
  if (r.has_walls) {
    Json ws = Json::array();
    for (std::size_t i = 0; i < r.walls.size(); ++i) {
      const auto& w = r.walls[i];
      Json x;
      x["index"] = i + 1;
      x["t"] = q(w.t);
      x["zeta"] = ints(w.zeta);
      x["support"] = one_based(w.support);
      x["moving_sum"] = q(w.moving_sum);
      x["crepant"] = w.crepant;
      x["residue"] = w.residue;
      ws.push_back(x);
    }
    j["walls"] = ws;
  }
  if (!r.pairings.empty()) {
    Json ps = Json::array();
    for (const auto& p : r.pairings) ps.push_back(endpoint_json(p));
    j["pairings"] = ps;
  }
  if (r.cross) {
    Json c;
    c["terms"] = q(r.cross->terms);
    c["wall_sum"] = q(r.cross->wall_sum);
    if (!r.cross->endpoints.empty()) {
      Json es = Json::array();
      for (const auto& e : r.cross->endpoints) es.push_back(endpoint_json(e));
      c["endpoints"] = es;
    }
    c["ledger_closed"] = r.cross->holds ? Json(*r.cross->holds) : Json();
    j["cross"] = c;
  }
  if (!r.quantum.empty()) {
    Json qs = Json::array();
    for (const auto& b : r.quantum) {
      Json x;
      x["degree"] = ints(b.degree);
      x["multiplicities"] = ints(IntVec(b.multiplicities.begin(), b.multiplicities.end()));
      x["terms"] = q(b.terms);
      x["wall_sum"] = q(b.wall_sum);
      x["minus"] = {{"status", to_string(b.status_minus)}, {"value", q(b.pairing_minus)}};
      x["plus"] = {{"status", to_string(b.status_plus)}, {"value", q(b.pairing_plus)}};
      x["ledger_closed"] = b.holds ? Json(*b.holds) : Json();
      if (!b.probes.empty()) {
        Json ps = Json::array();
        for (const auto& [chi, v] : b.probes) ps.push_back({{"chi", q(chi)}, {"value", q(v)}});
        x["probes"] = ps;
      }
      qs.push_back(x);
    }
    j["quantum"] = qs;
  }
  if (!r.windows.empty()) {
    Json ws = Json::array();
    for (const auto& w : r.windows) {
      Json x;
      x["wall"] = w.wall;
      x["direction"] = ints(w.direction);
      x["base"] = ints(w.base);
      x["radius"] = w.radius;
      x["picard_base"] = q(w.picard_base);
      Json vs = Json::array();
      for (std::size_t i = 0; i < w.values.size(); ++i)
        vs.push_back({{"r", w.values[i].first}, {"term", q(w.values[i].second)}, {"normalized", q(w.ratios[i].second)}});
      x["values"] = vs;
      x["tag"] = to_string(w.tag);
      ws.push_back(x);
    }
    j["windows"] = ws;
  }
  if (r.abstract) {
    const auto& a = *r.abstract;
    Json x;
    Json ws = Json::array();
    for (const auto& w : a.walls) {
      Json y;
      y["t"] = w.t ? q(*w.t) : Json();
      y["data"] = w.labels;
      y["term"] = q(w.term);
      y["chamber_after"] = a.minus ? q(w.chamber_after) : Json();
      ws.push_back(y);
    }
    x["walls"] = ws;
    x["minus"] = a.minus ? Json{{"value", q(*a.minus)}, {"source", a.minus_source}} : Json();
    x["plus"] = a.plus ? Json{{"value", q(*a.plus)}, {"source", a.plus_source}} : Json();
    x["wall_sum"] = q(a.wall_sum);
    x["ledger_closed"] = a.holds ? Json(*a.holds) : Json();
    j["abstract"] = x;
  }
  if (!r.values.empty()) {
    Json vs = Json::array();
    for (const auto& v : r.values) vs.push_back({{"name", v.name}, {"value", q(v.value)}});
    j["values"] = vs;
  }
  Json is = Json::array();
  for (const auto& i : r.identities)
    is.push_back({{"name", i.name}, {"lhs", q(i.lhs)}, {"rhs", q(i.rhs)}, {"holds", i.holds}});
  j["identities"] = is;
  j["ledger_closed"] = ledger_closed(r);
  if (r.error) j["error"] = *r.error;
  j["exit_code"] = r.exit_code();
  if (r.seconds) j["seconds"] = *r.seconds;
  return j.dump(2) + "\n";
}

// --------------------------------------------------------------------- text

std::string vec(const IntVec& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + ")";
}

std::string vec(const RatVec& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + to_string(v[i]);
  return s + ")";
}

std::string set1(const IndexSet& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) out += (i ? "," : "") + std::to_string(s[i] + 1);
  return out + "}";
}

// Left-aligned table with two-space gutters.
std::string table(const std::vector<std::vector<std::string>>& rows, const std::string& indent = "  ") {
  std::vector<std::size_t> width;
  for (const auto& r : rows)
    for (std::size_t c = 0; c < r.size(); ++c) {
      if (width.size() <= c) width.push_back(0);
      width[c] = std::max(width[c], r[c].size());
    }
  std::string out;
  for (const auto& r : rows) {
    std::string line = indent;
    for (std::size_t c = 0; c < r.size(); ++c) {
      line += r[c];
      if (c + 1 < r.size()) line += std::string(width[c] - r[c].size() + 2, ' ');
    }
    while (!line.empty() && line.back() == ' ') line.pop_back();
    out += line + "\n";
  }
  return out;
}

std::vector<std::string> endpoint_row(const Endpoint& e) {
  std::string src = to_string(e.source);
  if (!e.note.empty()) src += " (" + e.note + ")";
  return {e.side, vec(e.chi), e.value ? to_string(*e.value) : "-", src};
}

std::string text(const Report& r) {
  std::ostringstream out;
  out << "vgw " << VGW_VERSION_STRING << " | " << r.command << "\n";
  if (!r.title.empty()) out << r.title << "\n";
  if (r.has_walls) {
    out << "\nwalls\n";
    std::vector<std::vector<std::string>> rows{{"#", "t", "zeta", "support", "moving-sum", "crepant", "residue"}};
    for (std::size_t i = 0; i < r.walls.size(); ++i) {
      const auto& w = r.walls[i];
      rows.push_back({std::to_string(i + 1), to_string(w.t), vec(w.zeta), set1(w.support), to_string(w.moving_sum),
                      w.crepant ? "yes" : "no", w.residue});
    }
    out << table(rows);
  }
  if (!r.pairings.empty()) {
    out << "\npairings\n";
    std::vector<std::vector<std::string>> rows;
    for (const auto& p : r.pairings) rows.push_back(endpoint_row(p));
    out << table(rows);
  }
  if (r.cross) {
    out << "\nclassical wall-crossing\n";
    std::vector<std::vector<std::string>> rows;
    for (std::size_t i = 0; i < r.cross->terms.size(); ++i)
      rows.push_back({"wall " + std::to_string(i + 1), to_string(r.cross->terms[i])});
    rows.push_back({"sum", to_string(r.cross->wall_sum)});
    out << table(rows);
    if (!r.cross->endpoints.empty()) {
      std::vector<std::vector<std::string>> es;
      for (const auto& e : r.cross->endpoints) es.push_back(endpoint_row(e));
      out << table(es);
    }
  }
  for (const auto& b : r.quantum) {
    out << "\nquantum wall-crossing in degree " << vec(b.degree) << "\n";
    std::string m;
    for (auto x : b.multiplicities) m += (m.empty() ? "" : " ") + std::to_string(x);
    out << "  multiplicities " << m << "\n";
    std::vector<std::vector<std::string>> rows;
    for (std::size_t i = 0; i < b.terms.size(); ++i)
      rows.push_back({"wall " + std::to_string(i + 1), to_string(b.terms[i])});
    rows.push_back({"sum", to_string(b.wall_sum)});
    rows.push_back({"minus", to_string(b.pairing_minus), to_string(b.status_minus)});
    rows.push_back({"plus", to_string(b.pairing_plus), to_string(b.status_plus)});
    for (const auto& [chi, v] : b.probes) rows.push_back({"probe " + vec(chi), to_string(v)});
    out << table(rows);
  }
  for (const auto& w : r.windows) {
    out << "\nwindow on wall " << w.wall << ": base " << vec(w.base) << ", direction " << vec(w.direction)
        << ", radius " << w.radius << ", picard base " << to_string(w.picard_base) << "\n";
    std::vector<std::vector<std::string>> rows{{"r", "term", "normalized"}};
    for (std::size_t i = 0; i < w.values.size(); ++i)
      rows.push_back({std::to_string(w.values[i].first), to_string(w.values[i].second), to_string(w.ratios[i].second)});
    out << table(rows);
    out << "  tag " << to_string(w.tag) << "\n";
  }
  if (r.abstract) {
    const auto& a = *r.abstract;
    out << "\nabstract wall-crossing\n";
    std::vector<std::vector<std::string>> rows;
    for (const auto& w : a.walls) {
      std::string labels;
      for (const auto& l : w.labels) labels += (labels.empty() ? "" : ",") + l;
      rows.push_back({"wall t = " + (w.t ? to_string(*w.t) : std::string("?")), to_string(w.term),
                      a.minus ? "chamber after " + to_string(w.chamber_after) : "", "[" + labels + "]"});
    }
    rows.push_back({"sum", to_string(a.wall_sum)});
    if (a.minus) rows.push_back({"minus", to_string(*a.minus), a.minus_source});
    if (a.plus) rows.push_back({"plus", to_string(*a.plus), a.plus_source});
    out << table(rows);
  }
  if (!r.values.empty()) {
    out << "\nvalues\n";
    std::vector<std::vector<std::string>> rows;
    for (const auto& v : r.values) rows.push_back({v.name, to_string(v.value)});
    out << table(rows);
  }
  if (!r.identities.empty()) {
    out << "\nidentities\n";
    for (const auto& i : r.identities)
      out << "  " << (i.holds ? "[ok]   " : "[FAIL] ") << i.name << ": " << to_string(i.lhs)
          << (i.holds ? " = " : " != ") << to_string(i.rhs) << "\n";
  }
  if (r.error) out << "\nerror: " << *r.error << "\n";
  out << "\nledger-closed = " << (ledger_closed(r) ? "true" : "false") << "\n";
  if (r.seconds) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3f", *r.seconds);
    out << "time " << buf << " s\n";
  }
  return out.str();
}

}  // namespace

std::string render_report(const Report& report, Format format) {
  return format == Format::Machine ? machine(report) : text(report);
}

}  // namespace vgw
