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
#include "vgw/vgw.h"

#include "vgw/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <cstring>
#include <new>
#include <sstream>

struct vgw_problem {
  vgw::ProblemDoc doc;
};

struct vgw_options {
  vgw::RunOptions opts;
};

struct vgw_report {
  vgw::Report report;
};

namespace {

thread_local std::string g_last_error;

vgw_status fail(vgw_status s, std::string msg) {
  g_last_error = std::move(msg);
  return s;
}

vgw_status from_kind(vgw::ErrorKind k) {
  switch (k) {
    case vgw::ErrorKind::Parse: return VGW_E_PARSE;
    case vgw::ErrorKind::Argument: return VGW_E_ARGUMENT;
    default: return VGW_E_COMPUTE;
  }
}

char* dup(const std::string& s) {
  char* p = static_cast<char*>(std::malloc(s.size() + 1));
  if (!p) throw std::bad_alloc();
  std::memcpy(p, s.c_str(), s.size() + 1);
  return p;
}

// Runs f, mapping exceptions to status codes.
template <class F>
vgw_status guard(F&& f) {
  try {
    g_last_error.clear();
    return f();
  } catch (const vgw::Error& e) {
    return fail(from_kind(e.kind()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(VGW_E_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(VGW_E_INTERNAL, e.what());
  }
}

std::vector<std::string> split_list(const std::string& v) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(v);
  while (std::getline(in, item, ',')) {
    auto a = item.find_first_not_of(" \t");
    auto b = item.find_last_not_of(" \t");
    if (a == std::string::npos) throw vgw::Error(vgw::ErrorKind::Argument, "empty entry in '" + v + "'");
    out.push_back(item.substr(a, b - a + 1));
  }
  if (out.empty()) throw vgw::Error(vgw::ErrorKind::Argument, "empty list");
  return out;
}

int parse_int(const std::string& key, const std::string& v, int lo, int hi) {
  std::size_t used = 0;
  int x = 0;
  try {
    x = std::stoi(v, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != v.size() || used == 0 || x < lo || x > hi)
    throw vgw::Error(vgw::ErrorKind::Argument,
                     key + " must be an integer in " + std::to_string(lo) + ".." + std::to_string(hi));
  return x;
}

}  // namespace

extern "C" {

const char* vgw_version(void) { return VGW_VERSION_STRING; }

const char* vgw_last_error(void) { return g_last_error.c_str(); }

const char* vgw_status_name(vgw_status s) {
  switch (s) {
    case VGW_OK: return "ok";
    case VGW_E_PARSE: return "parse";
    case VGW_E_ARGUMENT: return "argument";
    case VGW_E_COMPUTE: return "compute";
    case VGW_E_IDENTITY: return "identity";
    case VGW_E_INTERNAL: return "internal";
  }
  return "unknown";
}

void vgw_string_free(char* s) { std::free(s); }

vgw_status vgw_problem_parse(const char* text, vgw_problem** out) {
  return guard([&] {
    if (!text || !out) return fail(VGW_E_ARGUMENT, "null argument");
    *out = nullptr;
    auto r = vgw::parse_problem(text);
    if (!r.ok()) return fail(VGW_E_PARSE, r.message());
    *out = new vgw_problem{std::move(*r.doc)};
    return VGW_OK;
  });
}

vgw_status vgw_problem_render(const vgw_problem* p, char** out) {
  return guard([&] {
    if (!p || !out) return fail(VGW_E_ARGUMENT, "null argument");
    *out = dup(vgw::render_problem(p->doc));
    return VGW_OK;
  });
}

vgw_status vgw_problem_repro(const char* id, vgw_problem** out) {
  return guard([&] {
    if (!id || !out) return fail(VGW_E_ARGUMENT, "null argument");
    *out = nullptr;
    *out = new vgw_problem{vgw::repro_problem(id)};
    return VGW_OK;
  });
}

int vgw_problem_format(const vgw_problem* p) {
  if (!p || !p->doc.format) return -1;
  return *p->doc.format == vgw::Format::Machine ? VGW_FORMAT_MACHINE : VGW_FORMAT_TEXT;
}

int vgw_problem_equal(const vgw_problem* a, const vgw_problem* b) {
  if (!a || !b) return 0;
  return a->doc == b->doc ? 1 : 0;
}

void vgw_problem_free(vgw_problem* p) { delete p; }

vgw_options* vgw_options_new(void) { return new (std::nothrow) vgw_options{}; }

vgw_status vgw_options_set(vgw_options* o, const char* key, const char* value) {
  return guard([&] {
    if (!o || !key || !value) return fail(VGW_E_ARGUMENT, "null argument");
    std::string k = key, v = value;
    if (k == "jobs") {
      o->opts.jobs = parse_int(k, v, 1, 256);
    } else if (k == "window") {
      o->opts.window = parse_int(k, v, 3, 64);
    } else if (k == "degree") {
      vgw::IntVec d;
      for (const auto& s : split_list(v)) {
        vgw::Rat r = vgw::parse_rat(s);
        if (!vgw::is_integer(r)) return fail(VGW_E_ARGUMENT, "degree entries must be integers: '" + s + "'");
        d.push_back(vgw::to_int64(r));
      }
      o->opts.degree = d;
    } else if (k == "sigma") {
      vgw::RatVec s;
      for (const auto& x : split_list(v)) s.push_back(vgw::parse_rat(x));
      o->opts.sigma = s;
    } else if (k == "timing") {
      o->opts.timing = parse_int(k, v, 0, 1) == 1;
    } else {
      return fail(VGW_E_ARGUMENT, "unknown option '" + k + "'");
    }
    return VGW_OK;
  });
}

void vgw_options_free(vgw_options* o) { delete o; }

vgw_status vgw_run(const vgw_problem* p, const char* command, const char* arg, const vgw_options* o,
                   vgw_report** out) {
  return guard([&] {
    if (!command || !out) return fail(VGW_E_ARGUMENT, "null argument");
    *out = nullptr;
    vgw::RunOptions opts = o ? o->opts : vgw::RunOptions{};
    std::string cmd = command;
    const auto& names = vgw::command_names();
    if (std::find(names.begin(), names.end(), cmd) == names.end())
      return fail(VGW_E_ARGUMENT, "unknown command '" + cmd + "'");
    vgw::Report rep;
    if (cmd == "repro") {
      if (!arg || !*arg) return fail(VGW_E_ARGUMENT, "'repro' needs an example id");
      rep = vgw::run_repro(arg, opts);
    } else {
      if (!p) return fail(VGW_E_ARGUMENT, "'" + cmd + "' needs a problem document");
      rep = vgw::run_command(p->doc, cmd, opts);
    }
    *out = new vgw_report{std::move(rep)};
    const auto& r = (*out)->report;
    if (r.error) return fail(VGW_E_COMPUTE, *r.error);
    if (r.exit_code() == 2) return fail(VGW_E_IDENTITY, "a ledger identity failed");
    return VGW_OK;
  });
}

vgw_status vgw_report_render(const vgw_report* r, vgw_format f, char** out) {
  return guard([&] {
    if (!r || !out) return fail(VGW_E_ARGUMENT, "null argument");
    *out = dup(vgw::render_report(r->report, f == VGW_FORMAT_MACHINE ? vgw::Format::Machine : vgw::Format::Text));
    return VGW_OK;
  });
}

int vgw_report_exit_code(const vgw_report* r) { return r ? r->report.exit_code() : 1; }

void vgw_report_free(vgw_report* r) { delete r; }

size_t vgw_repro_count(void) { return vgw::repro_ids().size(); }

const char* vgw_repro_id(size_t i) { return i < vgw::repro_ids().size() ? vgw::repro_ids()[i].c_str() : nullptr; }

size_t vgw_command_count(void) { return vgw::command_names().size(); }

const char* vgw_command_name(size_t i) {
  return i < vgw::command_names().size() ? vgw::command_names()[i].c_str() : nullptr;
}

}  // extern "C"
