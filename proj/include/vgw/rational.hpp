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

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace vgw {

/// Exact rational in lowest terms with positive denominator.
using Rat = mpq_class;

using IntVec = std::vector<std::int64_t>;
using RatVec = std::vector<Rat>;

Rat make_rat(std::int64_t num, std::int64_t den = 1);

// Parses "p", "-p", "p/q". Throws vgw::Error on malformed input or q == 0.
Rat parse_rat(std::string_view text);

// "p" when the denominator is 1, "p/q" otherwise.
std::string to_string(const Rat& r);
// Always "p/q" (machine output).
std::string to_pq(const Rat& r);

Rat pow(const Rat& base, long exponent);

// Generalized binomial coefficient binom(top, n) for integer top and n >= 0.
Rat binomial(long top, long n);

std::int64_t to_int64(const Rat& r);
bool is_integer(const Rat& r);

Rat dot(const IntVec& a, const RatVec& b);
Rat dot(const IntVec& a, const IntVec& b);
Rat dot(const RatVec& a, const RatVec& b);
RatVec to_rat(const IntVec& v);

}  // namespace vgw
