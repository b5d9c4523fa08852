// Copyright 2026 The majsep Authors
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

#include "majsep/error.hpp"

namespace majsep {

const char* to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::BadParameter: return "BadParameter";
    case ErrorCode::NotHermitian: return "NotHermitian";
    case ErrorCode::NoConvergence: return "NoConvergence";
    case ErrorCode::InvalidState: return "InvalidState";
    case ErrorCode::BadPartition: return "BadPartition";
    case ErrorCode::SumMismatch: return "SumMismatch";
    case ErrorCode::NotMajorized: return "NotMajorized";
    case ErrorCode::DegenerateInput: return "DegenerateInput";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::Parse: return "Parse";
    case ErrorCode::Io: return "Io";
    case ErrorCode::SelfCheckFailed: return "SelfCheckFailed";
  }
  return "Unknown";
}

}  // namespace majsep
