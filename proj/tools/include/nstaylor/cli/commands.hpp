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
#include <string>
#include <vector>

#include "json.hpp"
#include "nstaylor/greensfn.hpp"
#include "nstaylor/grid.hpp"
#include "nstaylor/oracle.hpp"

namespace nst::cli {

enum ExitCode : int { kOk = 0, kValidationFailed = 1, kBadInput = 2, kEngineFailure = 3 };

/// Environment variable that replaces any configured output directory.
inline constexpr const char* kOutputDirEnv = "NSTAYLOR_OUTPUT_DIR";

std::filesystem::path resolve_output_dir(const std::filesystem::path& configured);

int cmd_run(const std::filesystem::path& config, std::ostream& out, std::ostream& err);

struct ValidateOptions {
  std::string preset;
  double nu = 0.0;
  int order = 10;
  std::string backend = "trigpoly";
  int grid_n = 32;
  Dealias dealias = Dealias::exact_padding;
  std::optional<std::filesystem::path> output;
  /// Perturbs u_n of this order after the run; exercises the failure path.
  std::optional<int> inject_fault;
};

struct OrderCheck {
  int order = 0;
  double velocity_error = 0.0;                ///< max norm of u_n - expected
  std::optional<double> velocity_rel_error;  ///< empty when the expected u_n is zero
  std::optional<double> pressure_error;
  std::optional<double> pressure_rel_error;
  double divergence = 0.0;
  double bracket_divergence = 0.0;
};

struct ResidualFit {
  int order = 0;
  std::optional<double> slope;  ///< empty when the residual is at rounding level
};

struct CriterionResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct ValidationReport {
  ExactFlow flow;
  int order = 0;
  std::string backend;
  std::vector<OrderCheck> orders;
  std::vector<ResidualFit> fits;
  std::vector<CriterionResult> criteria;

  bool pass() const;
  nlohmann::json to_json() const;
};

/// Runs the engine on a preset and checks it against the closed-form coefficients.
ValidationReport validate(const ValidateOptions& opts);

int cmd_validate(const ValidateOptions& opts, std::ostream& out, std::ostream& err);

/// Recomputes radius.json and radius CSVs from <dir>/norms.csv.
int cmd_radius(const std::filesystem::path& dir, std::ostream& out, std::ostream& err);

struct PoissonOracleOptions {
  double half_width = 8.0;
  int n = 64;
  bool refine = false;  ///< also solve at n/2 and 3n/4 and report observed orders
  QuadratureMethod method = QuadratureMethod::fft;
  std::optional<std::filesystem::path> output;
};

nlohmann::json poisson_oracle_report(const PoissonOracleOptions& opts);

int cmd_poisson_oracle(const PoissonOracleOptions& opts, std::ostream& out, std::ostream& err);

}  // namespace nst::cli
