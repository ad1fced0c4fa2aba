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

#include <algorithm>
#include <cctype>
#include <tuple>
#include <map>
#include <regex>
#include <set>
#include <sstream>

namespace vgw {

std::string Diagnostic::str() const {
  std::string s;
  if (line > 0) {
    s = "line " + std::to_string(line);
    if (column > 0) s += ", column " + std::to_string(column);
    s += ": ";
  }
  return s + message;
}

std::string ParseResult::message() const {
  std::string s;
  for (const auto& d : diagnostics) s += d.str() + "\n";
  return s;
}

namespace {

struct Token {
  std::string text;
  int column;
};

bool is_space(char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; }

// Splits on whitespace and commas.
std::vector<Token> tokens(const std::string& s, int col0) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (is_space(s[i]) || s[i] == ',')) ++i;
    std::size_t start = i;
    while (i < s.size() && !is_space(s[i]) && s[i] != ',') ++i;
    if (i > start) out.push_back({s.substr(start, i - start), col0 + static_cast<int>(start)});
  }
  return out;
}

// Splits on commas only; items are trimmed and keep their columns.
std::vector<Token> comma_items(const std::string& s, int col0) {
  std::vector<Token> out;
  if (s.find_first_not_of(" \t") == std::string::npos) return out;
  std::size_t start = 0;
  for (;;) {
    auto end = s.find(',', start);
    std::string item = s.substr(start, end == std::string::npos ? std::string::npos : end - start);
    auto a = item.find_first_not_of(" \t");
    auto b = item.find_last_not_of(" \t");
    if (a == std::string::npos)
      out.push_back({"", col0 + static_cast<int>(start)});
    else
      out.push_back({item.substr(a, b - a + 1), col0 + static_cast<int>(start + a)});
    if (end == std::string::npos) break;
    start = end + 1;
  }
  return out;
}

std::string trim(const std::string& s) {
  auto a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return "";
  auto b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

std::string join(const std::vector<std::string>& v, const std::string& sep) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? sep : "") + v[i];
  return s;
}

template <class V>
std::string join_vec(const V& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += " ";
    if constexpr (std::is_same_v<typename V::value_type, Rat>)
      s += to_string(v[i]);
    else
      s += std::to_string(v[i]);
  }
  return s;
}

const std::map<std::string, std::set<std::string>>& schema() {
  static const std::map<std::string, std::set<std::string>> s = {
      {"action", {"rank", "weight"}},
      {"path", {"chi_minus", "chi_plus", "probe"}},
      {"insertion", {"alpha"}},
      {"quantum", {"degree", "window", "base", "wall"}},
      {"abstract", {"residue", "minus", "plus"}},
      {"datum",
       {"label", "side", "t", "moments", "num", "den", "restriction", "weyl", "orbifold", "base", "normalization"}},
      {"options", {"sigma", "jobs", "format"}},
  };
  return s;
}

const std::set<std::string> kRepeated = {"weight", "probe", "degree"};

class DocParser {
 public:
  explicit DocParser(std::string_view text) : text_(text) {}

  ParseResult run() {
    lines();
    semantics();
    std::stable_sort(diags_.begin(), diags_.end(), [](const Diagnostic& a, const Diagnostic& b) {
      return std::tie(a.line, a.column) < std::tie(b.line, b.column);
    });
    ParseResult r;
    r.diagnostics = diags_;
    if (diags_.empty()) r.doc = doc_;
    return r;
  }

 private:
  struct Where {
    int line, column;
  };

  void error(int line, int column, std::string msg) { diags_.push_back({line, column, std::move(msg)}); }

  void lines() {
    std::istringstream in{std::string(text_)};
    std::string raw;
    int lineno = 0;
    std::string section;
    bool skipping = false;
    while (std::getline(in, raw)) {
      ++lineno;
      if (!raw.empty() && raw.back() == '\r') raw.pop_back();
      std::string line = raw;
      if (auto h = line.find('#'); h != std::string::npos) line.resize(h);
      if (trim(line).empty()) continue;
      auto first = static_cast<int>(line.find_first_not_of(" \t")) + 1;
      std::string t = trim(line);
      if (t.front() == '[') {
        if (t.back() != ']') {
          error(lineno, first, "unterminated section header");
          skipping = true;
          continue;
        }
        section = trim(t.substr(1, t.size() - 2));
        skipping = !schema().count(section);
        if (skipping) {
          error(lineno, first + 1, "unknown section [" + section + "]");
          continue;
        }
        if (section == "datum") {
          doc_.data.emplace_back();
          seen_keys_["datum"].clear();
        }
        continue;
      }
      if (skipping) continue;
      auto eq = line.find('=');
      if (eq == std::string::npos) {
        error(lineno, first, "expected 'key = value'");
        continue;
      }
      if (section.empty()) {
        error(lineno, first, "key outside of any section");
        continue;
      }
      std::string key = trim(line.substr(0, eq));
      std::string rest = line.substr(eq + 1);
      auto vstart = rest.find_first_not_of(" \t");
      int vcol = static_cast<int>(eq) + 2 + (vstart == std::string::npos ? 0 : static_cast<int>(vstart));
      std::string value = trim(rest);
      if (!schema().at(section).count(key)) {
        error(lineno, first, "unknown key '" + key + "' in [" + section + "]");
        continue;
      }
      if (!kRepeated.count(key)) {
        auto& seen = seen_keys_[section];
        if (auto it = seen.find(key); it != seen.end()) {
          error(lineno, first, "duplicate key '" + key + "' (first on line " + std::to_string(it->second) + ")");
          continue;
        }
        seen[key] = lineno;
      }
      assign(section, key, value, lineno, vcol);
    }
  }

  std::optional<Rat> rat(const Token& tok, int line) {
    try {
      return parse_rat(tok.text);
    } catch (const Error&) {
      error(line, tok.column, "not a rational literal: '" + tok.text + "'");
      return std::nullopt;
    }
  }

  std::optional<std::int64_t> integer(const Token& tok, int line) {
    auto r = rat(tok, line);
    if (!r) return std::nullopt;
    if (!is_integer(*r)) {
      error(line, tok.column, "expected an integer, got '" + tok.text + "'");
      return std::nullopt;
    }
    try {
      return to_int64(*r);
    } catch (const Error&) {
      error(line, tok.column, "integer out of range: '" + tok.text + "'");
      return std::nullopt;
    }
  }

  std::optional<RatVec> rat_vec(const std::string& v, int line, int col) {
    RatVec out;
    bool ok = true;
    for (const auto& tok : tokens(v, col)) {
      if (auto r = rat(tok, line))
        out.push_back(*r);
      else
        ok = false;
    }
    if (ok && out.empty()) {
      error(line, col, "expected at least one rational");
      ok = false;
    }
    return ok ? std::optional<RatVec>(out) : std::nullopt;
  }

  std::optional<IntVec> int_vec(const std::string& v, int line, int col) {
    IntVec out;
    bool ok = true;
    for (const auto& tok : tokens(v, col)) {
      if (auto r = integer(tok, line))
        out.push_back(*r);
      else
        ok = false;
    }
    if (ok && out.empty()) {
      error(line, col, "expected at least one integer");
      ok = false;
    }
    return ok ? std::optional<IntVec>(out) : std::nullopt;
  }

  std::optional<Rat> single_rat(const std::string& v, int line, int col) {
    auto t = tokens(v, col);
    if (t.size() != 1) {
      error(line, col, "expected one rational");
      return std::nullopt;
    }
    return rat(t[0], line);
  }

  std::optional<std::int64_t> single_int(const std::string& v, int line, int col) {
    auto t = tokens(v, col);
    if (t.size() != 1) {
      error(line, col, "expected one integer");
      return std::nullopt;
    }
    return integer(t[0], line);
  }

  void assign(const std::string& sec, const std::string& key, const std::string& v, int line, int col) {
    if (sec == "action") {
      if (key == "rank") {
        if (auto r = single_int(v, line, col)) {
          if (*r < 1 || *r > 16)
            error(line, col, "rank must be between 1 and 16");
          else
            doc_.rank = static_cast<int>(*r);
          where_["rank"] = {line, col};
        }
      } else if (auto w = int_vec(v, line, col)) {
        doc_.weights.push_back(*w);
        weight_lines_.push_back({line, col});
      } else {
        bad_action_ = true;
      }
    } else if (sec == "path") {
      auto r = rat_vec(v, line, col);
      if (key != "probe") where_[key] = {line, col};
      if (!r) return;
      if (key == "chi_minus") {
        doc_.chi_minus = r;
        where_["chi_minus"] = {line, col};
      } else if (key == "chi_plus") {
        doc_.chi_plus = r;
        where_["chi_plus"] = {line, col};
      } else {
        doc_.probes.push_back(*r);
        probe_lines_.push_back({line, col});
      }
    } else if (sec == "insertion") {
      doc_.insertion = v;
      where_["alpha"] = {line, col};
    } else if (sec == "quantum") {
      if (key == "degree") {
        if (auto d = int_vec(v, line, col)) {
          doc_.degrees.push_back(*d);
          degree_lines_.push_back({line, col});
        }
      } else if (key == "window") {
        if (auto r = single_int(v, line, col)) {
          if (*r < 3 || *r > 64)
            error(line, col, "window radius must be between 3 and 64");
          else
            doc_.window = static_cast<int>(*r);
        }
      } else if (key == "base") {
        if ((doc_.window_base = int_vec(v, line, col))) where_["base"] = {line, col};
      } else if (auto r = single_int(v, line, col)) {
        if (*r < 1)
          error(line, col, "wall index is 1-based");
        else
          doc_.window_wall = static_cast<int>(*r);
      }
    } else if (sec == "abstract") {
      if (key == "residue") {
        static const std::regex id("[A-Za-z][A-Za-z0-9_]*");
        if (!std::regex_match(v, id))
          error(line, col, "residue parameter must be an identifier");
        else
          doc_.residue = v;
        where_["residue"] = {line, col};
      } else if (key == "minus") {
        doc_.abstract_minus = single_rat(v, line, col);
      } else {
        doc_.abstract_plus = single_rat(v, line, col);
      }
    } else if (sec == "datum") {
      datum(key, v, line, col);
    } else if (sec == "options") {
      if (key == "sigma") {
        if ((doc_.sigma = rat_vec(v, line, col))) where_["sigma"] = {line, col};
      } else if (key == "jobs") {
        if (auto r = single_int(v, line, col)) {
          if (*r < 1 || *r > 256)
            error(line, col, "jobs must be between 1 and 256");
          else
            doc_.jobs = static_cast<int>(*r);
        }
      } else if (v == "text") {
        doc_.format = Format::Text;
      } else if (v == "machine") {
        doc_.format = Format::Machine;
      } else {
        error(line, col, "format must be 'text' or 'machine'");
      }
    }
  }

  void datum(const std::string& key, const std::string& v, int line, int col) {
    auto& d = doc_.data.back();
    auto& at = datum_where_[doc_.data.size() - 1];
    at[key] = {line, col};
    if (key == "label") {
      d.label = v;
    } else if (key == "side") {
      if (v != "wall" && v != "minus" && v != "plus")
        error(line, col, "side must be 'wall', 'minus' or 'plus'");
      else
        d.side = v;
    } else if (key == "t") {
      d.t = single_rat(v, line, col);
    } else if (key == "moments") {
      auto r = rat_vec(v, line, col);
      if (r && r->size() != 2)
        error(line, col, "moments takes two rationals (minus, plus)");
      else if (r)
        d.moments = std::make_pair((*r)[0], (*r)[1]);
    } else if (key == "num" || key == "den") {
      auto& list = key == "num" ? d.num : d.den;
      auto& cols = key == "num" ? num_cols_[doc_.data.size() - 1] : den_cols_[doc_.data.size() - 1];
      for (const auto& item : comma_items(v, col)) {
        if (item.text.empty()) error(line, item.column, "empty linear form");
        list.push_back(item.text);
        cols.push_back({line, item.column});
      }
    } else if (key == "restriction") {
      d.restriction = v.empty() ? "1" : v;
    } else if (key == "weyl") {
      if (auto r = single_rat(v, line, col)) d.weyl = *r;
    } else if (key == "orbifold") {
      if (auto r = single_int(v, line, col)) {
        if (*r < 1)
          error(line, col, "orbifold order must be at least 1");
        else
          d.orbifold = *r;
      }
    } else if (key == "base") {
      static const std::regex gen(R"(([A-Za-z][A-Za-z0-9_]*)\s*:\s*([0-9]+))");
      for (const auto& item : comma_items(v, col)) {
        std::smatch m;
        if (!std::regex_match(item.text, m, gen)) {
          error(line, item.column, "expected 'name:order', got '" + item.text + "'");
          continue;
        }
        int order = std::stoi(m[2]);
        if (order < 1) {
          error(line, item.column, "nilpotent order must be positive");
          continue;
        }
        d.base.emplace_back(m[1], order);
      }
    } else if (key == "normalization") {
      if (auto r = single_rat(v, line, col)) d.normalization = *r;
    }
  }

  // Reports an expression error at its column inside the document.
  void expression_error(const Error& e, Where w) {
    static const std::regex col("^column ([0-9]+): (.*)$");
    std::smatch m;
    std::string what = e.what();
    if (std::regex_match(what, m, col))
      error(w.line, w.column + std::stoi(m[1]) - 1, m[2]);
    else
      error(w.line, w.column, what);
  }

  void check_length(std::size_t got, Where w, const std::string& what) {
    if (doc_.rank && got != static_cast<std::size_t>(*doc_.rank))
      error(w.line, w.column,
            what + " has " + std::to_string(got) + " entries; rank is " + std::to_string(*doc_.rank));
  }

  void semantics() {
    bool action = doc_.rank.has_value();
    if (!action && !doc_.weights.empty()) error(weight_lines_[0].line, 0, "[action] is missing 'rank'");
    for (std::size_t i = 0; i < doc_.weights.size(); ++i) {
      if (doc_.rank && doc_.weights[i].size() != static_cast<std::size_t>(*doc_.rank)) bad_action_ = true;
      check_length(doc_.weights[i].size(), weight_lines_[i], "weight row " + std::to_string(i + 1));
    }
    auto need_action = [&](const std::string& key, const std::string& what) {
      if (action) return;
      auto it = where_.find(key);
      error(it == where_.end() ? 0 : it->second.line, 0, what + " needs an [action] section");
    };
    if (doc_.chi_minus) {
      need_action("chi_minus", "chi_minus");
      check_length(doc_.chi_minus->size(), where_["chi_minus"], "chi_minus");
    }
    if (doc_.chi_plus) {
      need_action("chi_plus", "chi_plus");
      check_length(doc_.chi_plus->size(), where_["chi_plus"], "chi_plus");
    }
    if (where_.count("chi_minus") != where_.count("chi_plus")) {
      auto w = where_.count("chi_minus") ? where_["chi_minus"] : where_["chi_plus"];
      error(w.line, 0, "a path needs both chi_minus and chi_plus");
    }
    for (std::size_t i = 0; i < doc_.probes.size(); ++i)
      check_length(doc_.probes[i].size(), probe_lines_[i], "probe " + std::to_string(i + 1));
    for (std::size_t i = 0; i < doc_.degrees.size(); ++i)
      check_length(doc_.degrees[i].size(), degree_lines_[i], "degree " + std::to_string(i + 1));
    if (doc_.window_base) check_length(doc_.window_base->size(), where_["base"], "window base");
    if (doc_.sigma) check_length(doc_.sigma->size(), where_["sigma"], "sigma");
    if (doc_.insertion) {
      need_action("alpha", "the insertion");
      if (action && !bad_action_) {
        try {
          parse_insertion(*doc_.insertion, doc_.action());
        } catch (const Error& e) {
          expression_error(e, where_["alpha"]);
        }
      }
    }
    if (!doc_.degrees.empty() || doc_.window) {
      if (!action) error(0, 0, "[quantum] needs an [action] section");
    }

    for (std::size_t n = 0; n < doc_.data.size(); ++n) {
      const auto& d = doc_.data[n];
      auto& at = datum_where_[n];
      std::vector<Param> vars{Param::xi(doc_.residue)};
      for (const auto& [name, order] : d.base) {
        if (name == doc_.residue) error(at["base"].line, at["base"].column, "'" + name + "' is the residue parameter");
        vars.push_back(Param::omega(name, order));
      }
      if (d.t && d.moments) error(at["moments"].line, at["moments"].column, "give either t or moments, not both");
      if (d.moments && d.moments->first == d.moments->second)
        error(at["moments"].line, at["moments"].column, "equal moment values never cross zero");
      for (std::size_t i = 0; i < d.num.size(); ++i) form(d.num[i], vars, num_cols_[n][i]);
      for (std::size_t i = 0; i < d.den.size(); ++i) form(d.den[i], vars, den_cols_[n][i]);
      try {
        parse_polynomial(d.restriction, vars);
      } catch (const Error& e) {
        expression_error(e, at.count("restriction") ? at["restriction"] : Where{0, 0});
      }
    }
  }

  void form(const std::string& text, const std::vector<Param>& vars, Where w) {
    if (text.empty()) return;
    try {
      parse_linear_form(text, vars);
    } catch (const Error& e) {
      expression_error(e, w);
    }
  }

  std::string_view text_;
  ProblemDoc doc_;
  std::vector<Diagnostic> diags_;
  bool bad_action_ = false;
  std::map<std::string, std::map<std::string, int>> seen_keys_;
  std::map<std::string, Where> where_;
  std::vector<Where> weight_lines_, probe_lines_, degree_lines_;
  std::map<std::size_t, std::map<std::string, Where>> datum_where_;
  std::map<std::size_t, std::vector<Where>> num_cols_, den_cols_;
};

}  // namespace

ParseResult parse_problem(std::string_view text) { return DocParser(text).run(); }

std::string render_problem(const ProblemDoc& doc) {
  std::ostringstream out;
  if (doc.rank) {
    out << "[action]\nrank = " << *doc.rank << "\n";
    for (const auto& w : doc.weights) out << "weight = " << join_vec(w) << "\n";
  }
  if (doc.chi_minus || doc.chi_plus || !doc.probes.empty()) {
    out << "\n[path]\n";
    if (doc.chi_minus) out << "chi_minus = " << join_vec(*doc.chi_minus) << "\n";
    if (doc.chi_plus) out << "chi_plus = " << join_vec(*doc.chi_plus) << "\n";
    for (const auto& p : doc.probes) out << "probe = " << join_vec(p) << "\n";
  }
  if (doc.insertion) out << "\n[insertion]\nalpha = " << *doc.insertion << "\n";
  if (!doc.degrees.empty() || doc.window || doc.window_base || doc.window_wall) {
    out << "\n[quantum]\n";
    for (const auto& d : doc.degrees) out << "degree = " << join_vec(d) << "\n";
    if (doc.window) out << "window = " << *doc.window << "\n";
    if (doc.window_base) out << "base = " << join_vec(*doc.window_base) << "\n";
    if (doc.window_wall) out << "wall = " << *doc.window_wall << "\n";
  }
  if (doc.has_abstract() || doc.residue != "xi") {
    out << "\n[abstract]\n";
    if (doc.residue != "xi") out << "residue = " << doc.residue << "\n";
    if (doc.abstract_minus) out << "minus = " << to_string(*doc.abstract_minus) << "\n";
    if (doc.abstract_plus) out << "plus = " << to_string(*doc.abstract_plus) << "\n";
  }
  for (const auto& d : doc.data) {
    out << "\n[datum]\n";
    if (!d.label.empty()) out << "label = " << d.label << "\n";
    if (d.side != "wall") out << "side = " << d.side << "\n";
    if (d.t) out << "t = " << to_string(*d.t) << "\n";
    if (d.moments) out << "moments = " << to_string(d.moments->first) << " " << to_string(d.moments->second) << "\n";
    if (!d.num.empty()) out << "num = " << join(d.num, ", ") << "\n";
    if (!d.den.empty()) out << "den = " << join(d.den, ", ") << "\n";
    if (d.restriction != "1") out << "restriction = " << d.restriction << "\n";
    if (d.weyl != 1) out << "weyl = " << to_string(d.weyl) << "\n";
    if (d.orbifold != 1) out << "orbifold = " << d.orbifold << "\n";
    if (!d.base.empty()) {
      std::vector<std::string> gens;
      for (const auto& [n, o] : d.base) gens.push_back(n + ":" + std::to_string(o));
      out << "base = " << join(gens, ", ") << "\n";
    }
    if (d.normalization != 1) out << "normalization = " << to_string(d.normalization) << "\n";
  }
  if (doc.sigma || doc.jobs || doc.format) {
    out << "\n[options]\n";
    if (doc.sigma) out << "sigma = " << join_vec(*doc.sigma) << "\n";
    if (doc.jobs) out << "jobs = " << *doc.jobs << "\n";
    if (doc.format) out << "format = " << (*doc.format == Format::Text ? "text" : "machine") << "\n";
  }
  std::string s = out.str();
  if (!s.empty() && s.front() == '\n') s.erase(0, 1);
  return s;
}

TorusAction ProblemDoc::action() const {
  if (!rank) throw Error(ErrorKind::Argument, "the problem has no [action] section");
  return TorusAction::make(*rank, weights);
}

PolPath ProblemDoc::path() const {
  if (!has_path()) throw Error(ErrorKind::Argument, "the problem has no path (chi_minus, chi_plus)");
  return PolPath{*chi_minus, *chi_plus};
}

Poly ProblemDoc::alpha() const { return insertion ? parse_insertion(*insertion, action()) : Poly(1); }

std::vector<FixedPointDatum> ProblemDoc::datums() const {
  std::vector<FixedPointDatum> out;
  for (const auto& s : data) {
    FixedPointDatum d;
    d.label = s.label;
    d.t = s.t;
    d.moments = s.moments;
    std::vector<Param> vars{Param::xi(residue)};
    for (const auto& [name, order] : s.base) {
      vars.push_back(Param::omega(name, order));
      d.base.generators.push_back(vars.back());
    }
    d.base.normalization = s.normalization;
    for (const auto& f : s.num) d.num.push_back(parse_linear_form(f, vars));
    for (const auto& f : s.den) d.den.push_back(parse_linear_form(f, vars));
    d.restriction = CohClass(parse_polynomial(s.restriction, vars));
    d.weyl = s.weyl;
    d.orbifold = s.orbifold;
    out.push_back(std::move(d));
  }
  return out;
}

}  // namespace vgw
