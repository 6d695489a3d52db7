// Copyright 2026 The neuralcode Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <stdexcept>
#include <string>

namespace ncode {

enum class ErrorKind {
  not_a_face,
  vertex_in_use,
  empty_input,
  void_complex,
  dimension_out_of_range,
  illegal_step,
  empty_region,
  too_large,
  invalid_argument,
  parse_error,
  mixed_notation,
  label_out_of_range,
  inconsistent,
};

inline const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::not_a_face: return "NotAFace";
    case ErrorKind::vertex_in_use: return "VertexInUse";
    case ErrorKind::empty_input: return "EmptyInput";
    case ErrorKind::void_complex: return "VoidComplex";
    case ErrorKind::dimension_out_of_range: return "DimensionOutOfRange";
    case ErrorKind::illegal_step: return "IllegalStep";
    case ErrorKind::empty_region: return "EmptyRegion";
    case ErrorKind::too_large: return "TooLarge";
    case ErrorKind::invalid_argument: return "InvalidArgument";
    case ErrorKind::parse_error: return "ParseError";
    case ErrorKind::mixed_notation: return "MixedNotation";
    case ErrorKind::label_out_of_range: return "LabelOutOfRange";
    case ErrorKind::inconsistent: return "Inconsistent";
  }
  return "Unknown";
}

/// Every failure raised by the library carries one of the kinds above.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace ncode
