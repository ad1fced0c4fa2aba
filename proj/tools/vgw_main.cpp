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

// vgw <command> [id] [--input FILE] [--format text|machine] [--window R]
//     [--degree d1,...] [--sigma s1,...] [--jobs N] [--timing]

#include <CLI11.hpp>

#include "vgw/vgw.h"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <memory>
#include <optional>
#include <sstream>
#include <string>

namespace {

struct ProblemDel {
  void operator()(vgw_problem* p) const { vgw_problem_free(p); }
};
struct OptionsDel {
  void operator()(vgw_options* o) const { vgw_options_free(o); }
};
struct ReportDel {
  void operator()(vgw_report* r) const { vgw_report_free(r); }
};

std::optional<std::string> slurp(const std::string& path) {
  if (path == "-") return std::string(std::istreambuf_iterator<char>(std::cin), {});
  std::ifstream in(path, std::ios::binary);
  if (!in) return std::nullopt;
  return std::string(std::istreambuf_iterator<char>(in), {});
}

int die(const std::string& msg) {
  std::cerr << "vgw: " << msg << "\n";
  return 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact wall-crossing for linear torus actions"};
  app.set_version_flag("--version", std::string("vgw ") + vgw_version());

  std::string command, id, input, format, degree, sigma;
  std::optional<int> window, jobs;
  bool timing = false, list = false;

  std::string names;
  for (std::size_t i = 0; i < vgw_command_count(); ++i) names += (i ? ", " : "") + std::string(vgw_command_name(i));
  app.add_option("command", command, "one of: " + names);
  app.add_option("id", id, "example id for 'repro' (see --list)");
  app.add_option("-i,--input", input, "problem document ('-' for stdin)");
  app.add_option("-f,--format", format, "text or machine")->check(CLI::IsMember({"text", "machine"}));
  app.add_option("--window", window, "Novikov window radius");
  app.add_option("--degree", degree, "degree d1,...,dr (overrides the document)");
  app.add_option("--sigma", sigma, "descent section s1,...,sr");
  app.add_option("-j,--jobs", jobs, "worker threads (default: $VGW_JOBS, else the document, else 1)");
  app.add_flag("--timing", timing, "append wall-clock time (makes output nondeterministic)");
  app.add_flag("--list", list, "list example ids for 'repro'");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 1;
  }

  if (list) {
    for (std::size_t i = 0; i < vgw_repro_count(); ++i) std::cout << vgw_repro_id(i) << "\n";
    return 0;
  }
  if (command.empty()) return die("a command is required (one of: " + names + ")");

  std::unique_ptr<vgw_options, OptionsDel> opts(vgw_options_new());
  if (!opts) return die("out of memory");
  auto set = [&](const char* key, const std::string& value) {
    if (vgw_options_set(opts.get(), key, value.c_str()) != VGW_OK) {
      std::cerr << "vgw: --" << key << ": " << vgw_last_error() << "\n";
      return false;
    }
    return true;
  };
  if (!jobs) {
    if (const char* env = std::getenv("VGW_JOBS"); env && *env) {
      if (!set("jobs", env)) return 1;
    }
  } else if (!set("jobs", std::to_string(*jobs))) {
    return 1;
  }
  if (window && !set("window", std::to_string(*window))) return 1;
  if (!degree.empty() && !set("degree", degree)) return 1;
  if (!sigma.empty() && !set("sigma", sigma)) return 1;
  if (timing && !set("timing", "1")) return 1;

  std::unique_ptr<vgw_problem, ProblemDel> problem;
  if (command == "repro") {
    if (id.empty()) return die("'repro' needs an example id (see --list)");
    if (!input.empty()) return die("'repro' does not read a document");
  } else {
    if (!id.empty()) return die("unexpected argument '" + id + "'");
    if (input.empty()) return die("'" + command + "' needs --input FILE");
    auto text = slurp(input);
    if (!text) return die("cannot read '" + input + "'");
    vgw_problem* p = nullptr;
    if (vgw_problem_parse(text->c_str(), &p) != VGW_OK) {
      std::cerr << input << ":\n" << vgw_last_error();
      return 1;
    }
    problem.reset(p);
  }

  vgw_format fmt = VGW_FORMAT_TEXT;
  if (!format.empty())
    fmt = format == "machine" ? VGW_FORMAT_MACHINE : VGW_FORMAT_TEXT;
  else if (problem && vgw_problem_format(problem.get()) == VGW_FORMAT_MACHINE)
    fmt = VGW_FORMAT_MACHINE;

  vgw_report* r = nullptr;
  vgw_status st = vgw_run(problem.get(), command.c_str(), id.c_str(), opts.get(), &r);
  std::unique_ptr<vgw_report, ReportDel> report(r);
  if (!report) return die(vgw_last_error());
  std::string err = st == VGW_E_COMPUTE ? vgw_last_error() : "";

  char* out = nullptr;
  if (vgw_report_render(report.get(), fmt, &out) != VGW_OK) return die(vgw_last_error());
  std::fputs(out, stdout);
  vgw_string_free(out);
  std::fflush(stdout);
  if (!err.empty()) std::cerr << "vgw: " << err << "\n";
  return vgw_report_exit_code(report.get());
}
