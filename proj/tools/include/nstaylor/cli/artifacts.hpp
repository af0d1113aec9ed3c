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

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "json.hpp"
#include "nstaylor/recurrence.hpp"
#include "nstaylor/series.hpp"

namespace nst::cli {

/// Shortest round-trip decimal form, or "" for a missing value.
std::string format_number(std::optional<double> v);

struct DiagnosticsRow {
  int order = 0;
  double max_norm_u = 0.0;
  std::optional<double> max_norm_p;
  double max_divergence = 0.0;
  std::size_t term_count_or_grid = 0;
  std::optional<double> wall_time_ms;

  friend bool operator==(const DiagnosticsRow&, const DiagnosticsRow&) = default;
};

struct NormsRow {
  int order = 0;
  double max_norm_u = 0.0;
  std::optional<double> max_norm_p;
  double energy_u = 0.0;

  friend bool operator==(const NormsRow&, const NormsRow&) = default;
};

struct RadiusRow {
  int order = 0;
  double norm = 0.0;
  std::optional<double> ratio;
  std::optional<double> root;

  friend bool operator==(const RadiusRow&, const RadiusRow&) = default;
};

struct ResidualRow {
  int order = 0;
  double t = 0.0;
  double momentum = 0.0;
  double continuity = 0.0;

  friend bool operator==(const ResidualRow&, const ResidualRow&) = default;
};

inline constexpr const char* kDiagnosticsHeader =
    "order,max_norm_u,max_norm_p,max_divergence,term_count_or_grid,wall_time_ms";
inline constexpr const char* kNormsHeader = "order,max_norm_u,max_norm_p,energy_u";
inline constexpr const char* kRadiusHeader = "order,norm,ratio,root";
inline constexpr const char* kResidualHeader = "order,t,momentum,continuity";

std::vector<DiagnosticsRow> diagnostics_rows(std::span<const OrderDiagnostics> diags, bool timing);
std::vector<NormsRow> norms_rows(std::span<const OrderDiagnostics> diags);
std::vector<RadiusRow> radius_rows(const RadiusEstimate& r);

void write_csv(std::ostream& out, std::span<const DiagnosticsRow> rows);
void write_csv(std::ostream& out, std::span<const NormsRow> rows);
void write_csv(std::ostream& out, std::span<const RadiusRow> rows);
void write_csv(std::ostream& out, std::span<const ResidualRow> rows);

/// Readers check the header line and throw std::runtime_error on malformed rows.
std::vector<DiagnosticsRow> read_diagnostics_csv(std::istream& in);
std::vector<NormsRow> read_norms_csv(std::istream& in);
std::vector<RadiusRow> read_radius_csv(std::istream& in);
std::vector<ResidualRow> read_residual_csv(std::istream& in);

/// Summary object: method, norm, hint ("unbounded" or a number), flags, text.
nlohmann::json radius_json(const RadiusEstimate& r);

/// Writes text to path, creating parent directories.
void write_text(const std::filesystem::path& path, const std::string& text);
std::string read_text(const std::filesystem::path& path);

/// coefficients/{u,v,w}_NNN and p_NNN; ".tp" term dumps or ".fld" field dumps.
std::vector<std::filesystem::path> write_coefficients(const std::filesystem::path& dir,
                                                      const Solution<TrigPolyBackend>& sol);
std::vector<std::filesystem::path> write_coefficients(const std::filesystem::path& dir,
                                                      const Solution<GridBackend>& sol);

std::string coefficient_name(char field, int order, bool grid);

}  // namespace nst::cli
