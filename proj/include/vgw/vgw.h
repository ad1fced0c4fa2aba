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
#ifndef VGW_VGW_H_
#define VGW_VGW_H_

/* C interface to the wall-crossing engine.
 *
 * Handles are opaque. Every call returning vgw_status leaves a message in
 * vgw_last_error() (thread-local) on failure. Strings returned through char**
 * are owned by the caller and released with vgw_string_free. */

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(_WIN32)
#define VGW_API __declspec(dllexport)
#else
#define VGW_API __attribute__((visibility("default")))
#endif

typedef enum {
  VGW_OK = 0,
  VGW_E_PARSE = 1,     /* malformed problem document */
  VGW_E_ARGUMENT = 2,  /* bad command, option or id */
  VGW_E_COMPUTE = 3,   /* the computation failed; the report carries the error */
  VGW_E_IDENTITY = 4,  /* a ledger identity failed; the report is complete */
  VGW_E_INTERNAL = 5
} vgw_status;

typedef enum { VGW_FORMAT_TEXT = 0, VGW_FORMAT_MACHINE = 1 } vgw_format;

typedef struct vgw_problem vgw_problem;
typedef struct vgw_options vgw_options;
typedef struct vgw_report vgw_report;

VGW_API const char* vgw_version(void);
VGW_API const char* vgw_last_error(void);
VGW_API const char* vgw_status_name(vgw_status s);
VGW_API void vgw_string_free(char* s);

/* Problems. On VGW_E_PARSE the last error lists every diagnostic. */
VGW_API vgw_status vgw_problem_parse(const char* text, vgw_problem** out);
VGW_API vgw_status vgw_problem_render(const vgw_problem* p, char** out);
VGW_API vgw_status vgw_problem_repro(const char* id, vgw_problem** out);
/* Format requested by the document's [options], or -1. */
VGW_API int vgw_problem_format(const vgw_problem* p);
VGW_API int vgw_problem_equal(const vgw_problem* a, const vgw_problem* b);
VGW_API void vgw_problem_free(vgw_problem* p);

/* Options. Keys: jobs, window, degree ("1,0"), sigma ("1/2,0"), timing ("0"/"1"). */
VGW_API vgw_options* vgw_options_new(void);
VGW_API vgw_status vgw_options_set(vgw_options* o, const char* key, const char* value);
VGW_API void vgw_options_free(vgw_options* o);

/* Runs a command on a problem; for "repro" pass p = NULL and the id in arg.
 * *out is set whenever a report exists, including VGW_E_COMPUTE and
 * VGW_E_IDENTITY. */
VGW_API vgw_status vgw_run(const vgw_problem* p, const char* command, const char* arg, const vgw_options* o,
                           vgw_report** out);
VGW_API vgw_status vgw_report_render(const vgw_report* r, vgw_format f, char** out);
/* 0 success, 1 error, 2 identity failure. */
VGW_API int vgw_report_exit_code(const vgw_report* r);
VGW_API void vgw_report_free(vgw_report* r);

VGW_API size_t vgw_repro_count(void);
VGW_API const char* vgw_repro_id(size_t i);
VGW_API size_t vgw_command_count(void);
VGW_API const char* vgw_command_name(size_t i);

#ifdef __cplusplus
}
#endif

#endif /* VGW_VGW_H_ */
