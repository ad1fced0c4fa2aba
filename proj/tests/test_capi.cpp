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

// Exercises the shared library through its C header only.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "vgw/vgw.h"

#include <fstream>
#include <iterator>
#include <string>

namespace {

std::string take(char* s) {
  std::string out = s ? s : "";
  vgw_string_free(s);
  return out;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE_MESSAGE(in.good(), "missing golden file " << path);
  return std::string(std::istreambuf_iterator<char>(in), {});
}

const char* kBlowup =
    "[action]\nrank = 2\nweight = 1 0\nweight = 1 0\nweight = 1 1\nweight = 0 1\n"
    "[path]\nchi_minus = -1 2\nchi_plus = 2 -1\nprobe = 1 2\nprobe = 2 1\n"
    "[insertion]\nalpha = c1^2\n";

}  // namespace

TEST_CASE("version and listings") {
  CHECK(std::string(vgw_version()) == "0.1.0");
  CHECK(vgw_repro_count() >= 9);
  CHECK(vgw_repro_id(vgw_repro_count()) == nullptr);
  CHECK(vgw_command_count() == 7);
  CHECK(std::string(vgw_command_name(0)) == "walls");
  CHECK(vgw_command_name(99) == nullptr);
  CHECK(std::string(vgw_status_name(VGW_E_IDENTITY)) == "identity");
}

TEST_CASE("parse, render and compare") {
  vgw_problem* p = nullptr;
  REQUIRE(vgw_problem_parse(kBlowup, &p) == VGW_OK);
  char* text = nullptr;
  REQUIRE(vgw_problem_render(p, &text) == VGW_OK);
  std::string rendered = take(text);
  vgw_problem* q = nullptr;
  REQUIRE(vgw_problem_parse(rendered.c_str(), &q) == VGW_OK);
  CHECK(vgw_problem_equal(p, q) == 1);
  CHECK(vgw_problem_format(p) == -1);
  vgw_problem_free(q);

  vgw_report* r = nullptr;
  REQUIRE(vgw_run(p, "verify", nullptr, nullptr, &r) == VGW_OK);
  CHECK(vgw_report_exit_code(r) == 0);
  char* out = nullptr;
  REQUIRE(vgw_report_render(r, VGW_FORMAT_TEXT, &out) == VGW_OK);
  std::string report = take(out);
  CHECK(report.find("ledger-closed = true") != std::string::npos);
  vgw_report_free(r);
  vgw_problem_free(p);
}

TEST_CASE("errors and null handling") {
  vgw_problem* p = nullptr;
  CHECK(vgw_problem_parse("[action]\nrank = 2\nweight = 1\n", &p) == VGW_E_PARSE);
  CHECK(p == nullptr);
  CHECK(std::string(vgw_last_error()).find("weight row 1") != std::string::npos);
  CHECK(vgw_problem_parse(nullptr, &p) == VGW_E_ARGUMENT);
  CHECK(vgw_problem_render(nullptr, nullptr) == VGW_E_ARGUMENT);
  CHECK(vgw_problem_repro("no-such-id", &p) != VGW_OK);
  CHECK(p == nullptr);
  CHECK(vgw_problem_equal(nullptr, nullptr) == 0);
  CHECK(vgw_report_exit_code(nullptr) == 1);
  vgw_problem_free(nullptr);
  vgw_report_free(nullptr);
  vgw_options_free(nullptr);
  vgw_string_free(nullptr);

  vgw_options* o = vgw_options_new();
  REQUIRE(o != nullptr);
  CHECK(vgw_options_set(o, "jobs", "4") == VGW_OK);
  CHECK(vgw_options_set(o, "jobs", "0") == VGW_E_ARGUMENT);
  CHECK(vgw_options_set(o, "jobs", "4x") == VGW_E_ARGUMENT);
  CHECK(vgw_options_set(o, "window", "2") == VGW_E_ARGUMENT);
  CHECK(vgw_options_set(o, "degree", "1,0") == VGW_OK);
  CHECK(vgw_options_set(o, "degree", "1/2") == VGW_E_ARGUMENT);
  CHECK(vgw_options_set(o, "degree", "1,,0") == VGW_E_ARGUMENT);
  CHECK(vgw_options_set(o, "sigma", "1/2, 0") == VGW_OK);
  CHECK(vgw_options_set(o, "colour", "red") == VGW_E_ARGUMENT);
  CHECK(std::string(vgw_last_error()).find("colour") != std::string::npos);

  vgw_report* r = nullptr;
  CHECK(vgw_run(nullptr, "walls", nullptr, o, &r) == VGW_E_ARGUMENT);
  CHECK(vgw_run(nullptr, "dance", nullptr, o, &r) == VGW_E_ARGUMENT);
  CHECK(vgw_run(nullptr, "repro", "", o, &r) == VGW_E_ARGUMENT);
  CHECK(r == nullptr);

  // a wall sits on chi_minus: the report exists and carries the error
  REQUIRE(vgw_problem_parse("[action]\nrank = 1\nweight = 1\n[path]\nchi_minus = 0\nchi_plus = 1\n", &p) == VGW_OK);
  CHECK(vgw_run(p, "walls", nullptr, nullptr, &r) == VGW_E_COMPUTE);
  REQUIRE(r != nullptr);
  CHECK(vgw_report_exit_code(r) == 1);
  CHECK(std::string(vgw_last_error()).find("degenerate") != std::string::npos);
  vgw_report_free(r);
  vgw_problem_free(p);

  // a wrong ledger value is reported, not thrown
  REQUIRE(vgw_problem_parse("[abstract]\nminus = 0\nplus = 2\n[datum]\nden = xi\n", &p) == VGW_OK);
  CHECK(vgw_run(p, "verify", nullptr, nullptr, &r) == VGW_E_IDENTITY);
  REQUIRE(r != nullptr);
  CHECK(vgw_report_exit_code(r) == 2);
  vgw_report_free(r);
  vgw_problem_free(p);
  vgw_options_free(o);
}

TEST_CASE("repro reports match the golden files at any job count") {
  for (std::size_t i = 0; i < vgw_repro_count(); ++i) {
    std::string id = vgw_repro_id(i);
    INFO(id);
    for (const char* jobs : {"1", "4"}) {
      vgw_options* o = vgw_options_new();
      REQUIRE(vgw_options_set(o, "jobs", jobs) == VGW_OK);
      vgw_report* r = nullptr;
      REQUIRE(vgw_run(nullptr, "repro", id.c_str(), o, &r) == VGW_OK);
      char* out = nullptr;
      REQUIRE(vgw_report_render(r, VGW_FORMAT_TEXT, &out) == VGW_OK);
      CHECK(take(out) == slurp(std::string(VGW_GOLDEN_DIR) + "/" + id + ".txt"));
      REQUIRE(vgw_report_render(r, VGW_FORMAT_MACHINE, &out) == VGW_OK);
      CHECK(take(out) == slurp(std::string(VGW_GOLDEN_DIR) + "/" + id + ".json"));
      vgw_report_free(r);
      vgw_options_free(o);
    }
  }
}
