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

#include "nonclass/output.hpp"

#include <cstdio>
#include <fstream>
#include <system_error>

#include <unistd.h>

#include "nonclass/errors.hpp"

namespace nonclass {

std::string format_real(double value) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", value);
  return buf;
}

std::string grid_csv(const QGrid& grid) {
  std::string out = "x,y,value\n";
  out.reserve(out.size() + static_cast<std::size_t>(grid.resolution) * grid.resolution * 64);
  for (int row = 0; row < grid.resolution; ++row) {
    const std::string y = format_real(grid.y_center(row));
    for (int col = 0; col < grid.resolution; ++col) {
      out += format_real(grid.x_center(col));
      out += ',';
      out += y;
      out += ',';
      out += format_real(grid.values(row, col));
      out += '\n';
    }
  }
  return out;
}

void write_file_atomic(const std::filesystem::path& path, std::string_view content) {
  std::filesystem::path tmp = path;
  tmp += ".tmp." + std::to_string(::getpid());
  {
    std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
    if (!f) throw IoError("cannot open " + tmp.string() + " for writing");
    f.write(content.data(), static_cast<std::streamsize>(content.size()));
    f.flush();
    if (!f) {
      std::error_code ignored;
      std::filesystem::remove(tmp, ignored);
      throw IoError("failed writing " + tmp.string());
    }
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::error_code ignored;
    std::filesystem::remove(tmp, ignored);
    throw IoError("cannot move output into " + path.string() + ": " + ec.message());
  }
}

}  // namespace nonclass
