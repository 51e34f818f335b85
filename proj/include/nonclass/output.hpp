// Copyright 2026 The nonclass Authors
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

#include <filesystem>
#include <string>
#include <string_view>

#include "nonclass/quasiprob.hpp"

namespace nonclass {

// Shortest form that round-trips binary64: printf %.17g.
std::string format_real(double value);

// `x,y,value` rows, y outer and x inner, after a header line.
std::string grid_csv(const QGrid& grid);

// Writes through a sibling temporary file and renames it into place.
// Throws IoError on failure.
void write_file_atomic(const std::filesystem::path& path, std::string_view content);

}  // namespace nonclass
