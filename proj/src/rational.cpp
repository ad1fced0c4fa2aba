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

#include "vgw/rational.hpp"

#include "vgw/error.hpp"

#include <cctype>

namespace vgw {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Context: return "context";
    case ErrorKind::Domain: return "domain";
    case ErrorKind::ZeroEuler: return "zero-euler";
    case ErrorKind::Degenerate: return "degenerate";
    case ErrorKind::Unsupported: return "unsupported";
    case ErrorKind::NoEmptyChamber: return "no-empty-chamber";
    case ErrorKind::Parse: return "parse";
    case ErrorKind::Argument: return "argument";
  }
  return "unknown";
}

Rat make_rat(std::int64_t num, std::int64_t den) {
  if (den == 0) throw Error(ErrorKind::Argument, "zero denominator");
  Rat r{mpz_class(std::to_string(num)), mpz_class(std::to_string(den))};
  r.canonicalize();
  return r;
}

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char ch : s)
    if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
  return true;
}

}  // namespace

Rat parse_rat(std::string_view text) {
  std::string_view s = text;
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  auto slash = s.find('/');
  std::string_view num = s.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1") : s.substr(slash + 1);
  if (!all_digits(num) || !all_digits(den))
    throw Error(ErrorKind::Parse, "not a rational literal: '" + std::string(text) + "'");
  mpz_class n{std::string(num)}, d{std::string(den)};
  if (d == 0) throw Error(ErrorKind::Parse, "zero denominator in '" + std::string(text) + "'");
  Rat r(n, d);
  r.canonicalize();
  return negative ? Rat(-r) : r;
}

std::string to_string(const Rat& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

std::string to_pq(const Rat& r) {
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

Rat pow(const Rat& base, long exponent) {
  if (exponent < 0) {
    if (base == 0) throw Error(ErrorKind::Domain, "0 raised to a negative power");
    return pow(Rat(1 / base), -exponent);
  }
  mpz_class n, d;
  mpz_pow_ui(n.get_mpz_t(), base.get_num_mpz_t(), static_cast<unsigned long>(exponent));
  mpz_pow_ui(d.get_mpz_t(), base.get_den_mpz_t(), static_cast<unsigned long>(exponent));
  Rat r(n, d);
  r.canonicalize();
  return r;
}

Rat binomial(long top, long n) {
  if (n < 0) return 0;
  Rat acc = 1;
  for (long i = 0; i < n; ++i) {
    acc *= Rat(top - i);
    acc /= Rat(i + 1);
  }
  return acc;
}

std::int64_t to_int64(const Rat& r) {
  if (r.get_den() != 1 || !r.get_num().fits_slong_p())
    throw Error(ErrorKind::Argument, "not a machine integer: " + to_string(r));
  return r.get_num().get_si();
}

bool is_integer(const Rat& r) { return r.get_den() == 1; }

Rat dot(const IntVec& a, const RatVec& b) {
  Rat s = 0;
  for (std::size_t i = 0; i < a.size() && i < b.size(); ++i) s += Rat(static_cast<long>(a[i])) * b[i];
  return s;
}

Rat dot(const IntVec& a, const IntVec& b) {
  Rat s = 0;
  for (std::size_t i = 0; i < a.size() && i < b.size(); ++i)
    s += Rat(static_cast<long>(a[i])) * Rat(static_cast<long>(b[i]));
  return s;
}

Rat dot(const RatVec& a, const RatVec& b) {
  Rat s = 0;
  for (std::size_t i = 0; i < a.size() && i < b.size(); ++i) s += a[i] * b[i];
  return s;
}

RatVec to_rat(const IntVec& v) {
  RatVec out;
  out.reserve(v.size());
  for (auto x : v) out.emplace_back(static_cast<long>(x));
  return out;
}

}  // namespace vgw
