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

#include <stdexcept>
#include <string>

namespace vgw {

enum class ErrorKind {
  Context,        // mismatched parameter declarations
  Domain,         // operation precondition violated (residue branch, integration)
  ZeroEuler,      // zero or non-invertible Euler factor
  Degenerate,     // stable != semistable along a path
  Unsupported,    // input outside the modelled regime
  NoEmptyChamber, // pairing needs an empty reference chamber
  Parse,          // malformed input text
  Argument,       // bad argument value
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace vgw
