// Copyright 2026 The nstaylor Authors.
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

#include <array>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "nstaylor/grid.hpp"

namespace nst {

/// Header of a field dump.
///
/// On disk the header is UTF-8 "key:value" lines in the fixed order
/// format, name, order, dims, box, domain[, origin], then one blank line,
/// followed by dims[0]*dims[1]*dims[2] little-endian IEEE-754 doubles, x fastest.
struct FieldHeader {
  std::string name;
  int order = -1;  ///< Taylor order, -1 for fields that are not coefficients.
  std::array<int, 3> dims{};
  std::array<double, 3> box{};
  std::string domain = "periodic";  ///< "periodic" or "free-space"
  std::optional<std::array<double, 3>> origin;

  friend bool operator==(const FieldHeader&, const FieldHeader&) = default;
};

struct FieldRecord {
  FieldHeader header;
  std::vector<double> values;
};

inline constexpr const char* kFieldFormatTag = "nstaylor-field-v1";

void write_field(std::ostream& out, const FieldHeader& header, std::span<const double> values);
/// Throws std::runtime_error on malformed input.
FieldRecord read_field(std::istream& in);

void save_field(const std::filesystem::path& path, const FieldHeader& header,
                std::span<const double> values);
FieldRecord load_field(const std::filesystem::path& path);

FieldHeader periodic_header(const GridSpec& spec, std::string name, int order);
/// Rebuilds a GridField from a periodic dump (dealias rule is not stored).
GridField to_grid_field(const FieldRecord& rec, Dealias dealias = Dealias::two_thirds);

}  // namespace nst
