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

#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "majsep/qstate.hpp"

namespace majsep {

/// Parses a matrix file: either the keyword text format
///
///     # comment
///     dims: 2 2
///     split: 1
///     re: <N*N reals, row-major>
///     im: <N*N reals, row-major>
///
/// or a JSON object with the same four keys. The parsed matrix must satisfy
/// the density-matrix invariants. Throws Parse or InvalidState.
DensityMatrix parse_matrix_file(std::string_view text);
DensityMatrix load_matrix_file(const std::filesystem::path& path);

/// Keyword text format with 17 significant digits, so parsing the output
/// reproduces the matrix bit for bit. `header` lines are emitted as comments.
std::string format_matrix_file(const DensityMatrix& rho,
                               const std::vector<std::string>& header = {});

struct SpectraFile {
  std::vector<double> r;
  std::vector<double> s;
};

/// Two keyword lines "r: ..." and "s: ..." (or JSON {"r": [...], "s": [...]}).
SpectraFile parse_spectra_file(std::string_view text);
SpectraFile load_spectra_file(const std::filesystem::path& path);

std::string read_text_file(const std::filesystem::path& path);

}  // namespace majsep
