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

// Problem documents, commands and reports.
//
// A problem document is line oriented:
//
//   # comment
//   [action]
//   rank = 2
//   weight = 1 0
//   [path]
//   chi_minus = -1 2
//   chi_plus = 2 -1
//   probe = 1 2
//   [insertion]
//   alpha = c1^2
//   [quantum]
//   degree = 1 0
//   window = 4
//   [abstract]
//   minus = 9
//   [datum]
//   den = xi, xi, -xi
//   [options]
//   jobs = 4
//
// Every [datum] section opens a new fixed-point datum.

#include "vgw/classical.hpp"
#include "vgw/quantum.hpp"

#include <optional>
#include <string>
#include <vector>

namespace vgw {

struct Diagnostic {
  int line = 0;    // 1-based; 0 when the whole document is at fault
  int column = 0;  // 1-based; 0 when unknown
  std::string message;

  std::string str() const;
  bool operator==(const Diagnostic&) const = default;
};

struct DatumSpec {
  std::string label;
  std::string side = "wall";  // wall | minus | plus
  std::optional<Rat> t;
  std::optional<std::pair<Rat, Rat>> moments;
  std::vector<std::string> num;  // linear forms
  std::vector<std::string> den;
  std::string restriction = "1";
  Rat weyl = 1;
  std::int64_t orbifold = 1;
  std::vector<std::pair<std::string, int>> base;  // nilpotent generators
  Rat normalization = 1;

  bool operator==(const DatumSpec&) const = default;
};

enum class Format { Text, Machine };

struct ProblemDoc {
  // [action]
  std::optional<int> rank;
  std::vector<IntVec> weights;
  // [path]
  std::optional<RatVec> chi_minus;
  std::optional<RatVec> chi_plus;
  std::vector<RatVec> probes;
  // [insertion]
  std::optional<std::string> insertion;
  // [quantum]
  std::vector<IntVec> degrees;
  std::optional<int> window;
  std::optional<IntVec> window_base;
  std::optional<int> window_wall;  // 1-based wall index
  // [abstract] and [datum]
  std::string residue = "xi";
  std::optional<Rat> abstract_minus;
  std::optional<Rat> abstract_plus;
  std::vector<DatumSpec> data;
  // [options]
  std::optional<RatVec> sigma;
  std::optional<int> jobs;
  std::optional<Format> format;

  bool has_action() const { return rank.has_value(); }
  bool has_path() const { return chi_minus && chi_plus; }
  bool has_abstract() const { return abstract_minus || abstract_plus || !data.empty(); }

  TorusAction action() const;
  PolPath path() const;
  Poly alpha() const;  // insertion, default 1
  std::vector<FixedPointDatum> datums() const;

  bool operator==(const ProblemDoc&) const = default;
};

struct ParseResult {
  std::optional<ProblemDoc> doc;
  std::vector<Diagnostic> diagnostics;

  bool ok() const { return doc.has_value(); }
  std::string message() const;  // all diagnostics, one per line
};

ParseResult parse_problem(std::string_view text);
std::string render_problem(const ProblemDoc& doc);

// ------------------------------------------------------------------ reports

struct WallRow {
  Rat t;
  IntVec zeta;
  IndexSet support;  // 0-based
  Rat moving_sum;    // sum of <mu_i,zeta> over moving weights
  bool crepant = false;
  std::string residue;  // zeta_t<index>
};

enum class EndpointSource { Engine, Abstract, Unavailable };
const char* to_string(EndpointSource s);

struct Endpoint {
  std::string side;  // minus | plus | probe
  RatVec chi;
  std::optional<Rat> value;
  EndpointSource source = EndpointSource::Engine;
  std::string note;
};

struct CrossBlock {
  std::vector<Rat> terms;
  Rat wall_sum;
  std::vector<Endpoint> endpoints;  // minus, plus when requested
  std::optional<bool> holds;
};

struct AbstractWall {
  std::optional<Rat> t;
  std::vector<std::string> labels;
  Rat term;
  Rat chamber_after;  // minus + partial sum
};

struct AbstractBlock {
  std::vector<AbstractWall> walls;
  std::optional<Rat> minus, plus;
  std::string minus_source, plus_source;  // "given" | "localization"
  Rat wall_sum;
  std::optional<bool> holds;
};

struct QuantumBlock {
  IntVec degree;
  std::vector<std::int64_t> multiplicities;
  std::vector<Rat> terms;
  Rat wall_sum;
  EndpointStatus status_minus = EndpointStatus::Computed;
  EndpointStatus status_plus = EndpointStatus::Computed;
  Rat pairing_minus, pairing_plus;
  std::optional<bool> holds;
  std::vector<std::pair<RatVec, Rat>> probes;
};

struct WindowBlock {
  std::size_t wall = 0;  // 1-based
  IntVec direction, base;
  int radius = 0;
  Rat picard_base;
  std::vector<std::pair<std::int64_t, Rat>> values;
  std::vector<std::pair<std::int64_t, Rat>> ratios;  // normalized
  DistributionTag tag = DistributionTag::Inconclusive;
};

struct NamedValue {
  std::string name;
  Rat value;
};

struct Identity {
  std::string name;
  Rat lhs, rhs;
  bool holds = false;
};

struct Report {
  std::string command;  // echo
  std::string title;
  std::vector<WallRow> walls;
  bool has_walls = false;
  std::vector<Endpoint> pairings;
  std::optional<CrossBlock> cross;
  std::optional<AbstractBlock> abstract;
  std::vector<QuantumBlock> quantum;
  std::vector<WindowBlock> windows;
  std::vector<NamedValue> values;
  std::vector<Identity> identities;
  std::optional<std::string> error;
  std::optional<double> seconds;

  // 0 success, 1 error, 2 some identity failed.
  int exit_code() const;
};

struct RunOptions {
  std::optional<int> jobs;
  std::optional<int> window;
  std::optional<IntVec> degree;
  std::optional<RatVec> sigma;
  bool timing = false;
};

const std::vector<std::string>& command_names();

/// Errors are captured in the report, not thrown.
Report run_command(const ProblemDoc& doc, const std::string& command, const RunOptions& opts = {});

/// Built-in examples; ids take an optional ":K" parameter where noted.
const std::vector<std::string>& repro_ids();
ProblemDoc repro_problem(const std::string& id);
Report run_repro(const std::string& id, const RunOptions& opts = {});

std::string render_report(const Report& report, Format format);

}  // namespace vgw
