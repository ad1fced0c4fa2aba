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
#include "vgw/classical.hpp"

#include <cctype>

namespace vgw {

std::vector<Param> xi_params(int rank) {
  std::vector<Param> out;
  for (int i = 1; i <= rank; ++i) out.push_back(Param::xi("xi" + std::to_string(i)));
  return out;
}

LinForm weight_form(const IntVec& mu, const std::vector<Param>& xs) { return weight_form(to_rat(mu), xs); }

LinForm weight_form(const RatVec& mu, const std::vector<Param>& xs) {
  LinForm f;
  for (std::size_t a = 0; a < mu.size(); ++a) f = f + LinForm(xs.at(a), mu[a]);
  return f;
}

namespace {

class InsertionParser {
 public:
  InsertionParser(std::string_view text, const TorusAction* action, std::vector<Param> vars)
      : s_(text), action_(action), xs_(std::move(vars)) {}

  Poly parse() {
    Poly p = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw Error(ErrorKind::Parse, "column " + std::to_string(pos_ + 1) + ": " + msg);
  }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool eat(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Poly expr() {
    Poly p = term();
    for (;;) {
      if (eat('+'))
        p += term();
      else if (eat('-'))
        p -= term();
      else
        return p;
    }
  }

  Poly term() {
    Poly p = power();
    for (;;) {
      skip();
      if (eat('*')) {
        p = p * power();
      } else if (pos_ < s_.size() && (std::isalpha(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '(')) {
        p = p * power();  // juxtaposition: "3xi1", "2(xi1+xi2)"
      } else {
        return p;
      }
    }
  }

  Poly power() {
    if (eat('-')) return -power();
    Poly base = primary();
    if (eat('^')) {
      skip();
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (start == pos_) fail("expected a nonnegative integer exponent");
      return base.pow(std::stoi(std::string(s_.substr(start, pos_ - start))));
    }
    return base;
  }

  std::int64_t integer_arg() {
    if (!eat('(')) fail("expected '('");
    skip();
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected an integer argument");
    auto v = std::stoll(std::string(s_.substr(start, pos_ - start)));
    if (!eat(')')) fail("expected ')'");
    return v;
  }

  std::vector<LinForm> weight_forms() const {
    std::vector<LinForm> out;
    for (const auto& w : action_->weights) out.push_back(weight_form(w, xs_));
    return out;
  }

  Poly primary() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end of expression");
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      Poly p = expr();
      if (!eat(')')) fail("expected ')'");
      return p;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (pos_ < s_.size() && s_[pos_] == '/') {
        ++pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      }
      std::string lit(s_.substr(start, pos_ - start));
      try {
        return Poly(parse_rat(lit));
      } catch (const Error&) {
        pos_ = start;
        fail("bad rational literal '" + lit + "'");
      }
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
      std::string id(s_.substr(start, pos_ - start));
      return identifier(id, start);
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  Poly identifier(const std::string& id, std::size_t start) {
    if (!action_) {
      for (const auto& p : xs_)
        if (p.name == id) return Poly::var(p);
      if (id.rfind("theta", 0) == 0) return Poly::var(Param::theta(id));
      pos_ = start;
      fail("unknown identifier '" + id + "'");
    }
    if (id == "c1") {
      Poly p;
      for (const auto& f : weight_forms()) p += Poly::from_form(f);
      return p;
    }
    if (id == "chern_total") {
      Poly p(1);
      for (const auto& f : weight_forms()) p = p * (Poly(1) + Poly::from_form(f));
      return p;
    }
    if (id == "chern") {
      auto j = integer_arg();
      // elementary symmetric polynomial e_j by the usual recurrence
      std::vector<Poly> e{Poly(1)};
      for (const auto& f : weight_forms()) {
        Poly x = Poly::from_form(f);
        e.push_back(Poly());
        for (std::size_t i = e.size() - 1; i > 0; --i) e[i] += e[i - 1] * x;
      }
      return j < static_cast<std::int64_t>(e.size()) ? e[static_cast<std::size_t>(j)] : Poly();
    }
    if (id == "xi" && action_->rank == 1) return Poly::var(xs_[0]);
    if (id.rfind("xi", 0) == 0 && id.size() > 2 &&
        id.find_first_not_of("0123456789", 2) == std::string::npos) {
      auto i = std::stoul(id.substr(2));
      if (i >= 1 && i <= xs_.size()) return Poly::var(xs_[i - 1]);
      pos_ = start;
      fail("'" + id + "' exceeds the torus rank " + std::to_string(action_->rank));
    }
    if (id.rfind("theta", 0) == 0) return Poly::var(Param::theta(id));
    pos_ = start;
    fail("unknown identifier '" + id + "'");
  }

  std::string_view s_;
  const TorusAction* action_;
  std::vector<Param> xs_;
  std::size_t pos_ = 0;
};

}  // namespace

Poly parse_insertion(std::string_view text, const TorusAction& action) {
  return InsertionParser(text, &action, xi_params(action.rank)).parse();
}

Poly parse_polynomial(std::string_view text, const std::vector<Param>& vars) {
  return InsertionParser(text, nullptr, vars).parse();
}

LinForm parse_linear_form(std::string_view text, const std::vector<Param>& vars) {
  Poly p = parse_polynomial(text, vars);
  LinForm f;
  for (const auto& [m, c] : p.terms()) {
    if (m.degree() != 1)
      throw Error(ErrorKind::Parse, "'" + std::string(text) + "' is not a homogeneous linear form");
    f = f + LinForm(m.factors().front().first, c);
  }
  return f;
}

}  // namespace vgw
