// Copyright 2026 The rectimesh Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <stdexcept>
#include <string>

namespace rectimesh {

enum class ErrorCode {
  invalid_argument = 1,
  parse_error,
  duplicate_id,
  unknown_kind,
  degenerate_shape,
  empty_scene,
  dc_excitation,
  out_of_range,
  length_mismatch,
  total_internal_reflection,
  truncated_lobe,
  io_error,
};

// All library failures are reported as Error; the C API maps code() onto
// its status enum one-to-one.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace rectimesh
