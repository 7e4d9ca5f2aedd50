// Copyright 2026 The vesopt Authors. All Rights Reserved.
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
// =============================================================================

#ifndef VESOPT_CSV_HPP
#define VESOPT_CSV_HPP

#include <filesystem>
#include <string>

namespace vesopt {

// Round-trip decimal representation ("%.17g").
std::string format_double(double v);

// Writes contents to path via a sibling temporary file and rename.
// Throws std::filesystem::filesystem_error or Error on I/O failure.
void write_file_atomic(const std::filesystem::path& path, const std::string& contents);

}  // namespace vesopt

#endif  // VESOPT_CSV_HPP
